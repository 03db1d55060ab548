#include "codenet/coded_network.hpp"

#include <algorithm>

#include "codenet/errors.hpp"

namespace codenet {

CodedNetwork::CodedNetwork(std::shared_ptr<const SocialNetwork> graph, std::shared_ptr<const LinearCode> code,
                           std::vector<Probability> edge_probabilities)
    : graph_(std::move(graph)), code_(std::move(code)), probabilities_(std::move(edge_probabilities)) {
  if (!graph_ || !code_) throw InputError("coded network needs a graph and a code");
  if (probabilities_.size() != graph_->edge_count())
    throw InputError("expected " + std::to_string(graph_->edge_count()) + " edge probabilities, got " +
                     std::to_string(probabilities_.size()));
  if (!probabilities_.empty() &&
      std::all_of(probabilities_.begin(), probabilities_.end(),
                  [&](const Probability& p) { return p == probabilities_.front(); }))
    constant_ = probabilities_.front();
}

CodedNetwork CodedNetwork::uniform(std::shared_ptr<const SocialNetwork> graph, std::shared_ptr<const LinearCode> code,
                                   const Probability& p) {
  const std::size_t m = graph ? graph->edge_count() : 0;
  return CodedNetwork(std::move(graph), std::move(code), std::vector<Probability>(m, p));
}

const Probability& CodedNetwork::edge_probability(VertexId a, VertexId b) const {
  const auto e = graph_->edge_id(a, b);
  if (!e) throw InputError("'" + graph_->name(a) + "' and '" + graph_->name(b) + "' are not adjacent");
  return probabilities_[*e];
}

std::vector<Probability> CodedNetwork::path_probabilities(const Path& path) const {
  std::vector<Probability> out;
  for (std::size_t i = 1; i < path.vertices.size(); ++i)
    out.push_back(edge_probability(path.vertices[i - 1], path.vertices[i]));
  return out;
}

CodedSubnetwork CodedNetwork::induced(std::span<const VertexId> vertices) const {
  auto sub = induced_subgraph(*graph_, vertices);
  std::vector<Probability> probs;
  probs.reserve(sub.graph.edge_count());
  for (const Edge& e : sub.graph.edges())
    probs.push_back(edge_probability(sub.to_parent[e.u], sub.to_parent[e.v]));
  auto graph = std::make_shared<const SocialNetwork>(std::move(sub.graph));
  return {CodedNetwork(std::move(graph), code_, std::move(probs)), std::move(sub.to_parent)};
}

CodedNetwork CodedNetwork::with_edges(const std::vector<Edge>& edges) const {
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  std::vector<Probability> probs;
  for (const Edge& e : edges) {
    indexed.emplace_back(e.u, e.v);
    probs.push_back(edge_probability(e.u, e.v));
  }
  // Names are already in natural order, so ids are preserved.
  auto graph = std::make_shared<const SocialNetwork>(graph_->names(), indexed);
  return CodedNetwork(std::move(graph), code_, std::move(probs));
}

std::optional<VertexId> CodedSubnetwork::from_parent(VertexId parent) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<VertexId>(it - to_parent.begin());
}

}  // namespace codenet
