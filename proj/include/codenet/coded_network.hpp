#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "codenet/graph.hpp"
#include "codenet/linear_code.hpp"
#include "codenet/probability.hpp"

namespace codenet {

struct CodedSubnetwork;

/// A social network whose edges carry symbol-error probabilities, paired with
/// the code used for every message.
class CodedNetwork {
 public:
  /// One probability per edge, indexed by EdgeId.
  CodedNetwork(std::shared_ptr<const SocialNetwork> graph, std::shared_ptr<const LinearCode> code,
               std::vector<Probability> edge_probabilities);

  static CodedNetwork uniform(std::shared_ptr<const SocialNetwork> graph, std::shared_ptr<const LinearCode> code,
                              const Probability& p);

  const SocialNetwork& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const SocialNetwork>& graph_ptr() const noexcept { return graph_; }
  const LinearCode& code() const noexcept { return *code_; }
  const std::shared_ptr<const LinearCode>& code_ptr() const noexcept { return code_; }

  const Probability& edge_probability(EdgeId e) const { return probabilities_.at(e); }
  /// Throws InputError if a and b are not adjacent.
  const Probability& edge_probability(VertexId a, VertexId b) const;
  const std::vector<Probability>& edge_probabilities() const noexcept { return probabilities_; }

  /// The shared probability when every edge has the same one (edgeless graphs
  /// report none).
  const std::optional<Probability>& constant_probability() const noexcept { return constant_; }

  /// Per-edge probabilities along a path, in traversal order.
  std::vector<Probability> path_probabilities(const Path& path) const;

  /// The sub-network induced by the given vertices, sharing this code and the
  /// restricted edge probabilities.
  CodedSubnetwork induced(std::span<const VertexId> vertices) const;

  /// The same network restricted to a spanning subset of edges (e.g. a tree).
  CodedNetwork with_edges(const std::vector<Edge>& edges) const;

 private:
  std::shared_ptr<const SocialNetwork> graph_;
  std::shared_ptr<const LinearCode> code_;
  std::vector<Probability> probabilities_;
  std::optional<Probability> constant_;
};

struct CodedSubnetwork {
  CodedNetwork network;
  std::vector<VertexId> to_parent;  // ascending

  std::optional<VertexId> from_parent(VertexId parent) const;
};

}  // namespace codenet
