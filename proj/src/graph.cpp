#include "codenet/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "codenet/errors.hpp"

namespace codenet {

namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  const bool na = is_decimal(a);
  const bool nb = is_decimal(b);
  if (na != nb) return na;
  if (na) {
    const auto sa = strip_zeros(a);
    const auto sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

SocialNetwork::SocialNetwork(std::vector<std::string> names,
                             const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return natural_less(names[a], names[b]); });
  std::vector<VertexId> remap(names.size());
  names_.reserve(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<VertexId>(i);
    names_.push_back(std::move(names[order[i]]));
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty vertex name");
    if (!index_.emplace(names_[i], static_cast<VertexId>(i)).second)
      throw InputError("duplicate vertex name '" + names_[i] + "'");
  }

  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= remap.size() || b >= remap.size()) throw InputError("edge endpoint out of range");
    VertexId u = remap[a];
    VertexId v = remap[b];
    if (u == v) throw InputError("self-loop at vertex '" + names_[u] + "'");
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
  }
  build_indices();
}

SocialNetwork SocialNetwork::from_named_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                              const std::vector<std::string>& isolated) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> seen;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = seen.emplace(s, names.size());
    if (inserted) names.push_back(s);
    return it->second;
  };
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = intern(a);
    const auto ib = intern(b);
    indexed.emplace_back(ia, ib);
  }
  for (const auto& s : isolated) intern(s);
  return SocialNetwork(std::move(names), indexed);
}

SocialNetwork SocialNetwork::numbered(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return SocialNetwork(std::move(names), edges);
}

void SocialNetwork::build_indices() {
  const std::size_t n = names_.size();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    adj[edges_[e].u].emplace_back(edges_[e].v, e);
    adj[edges_[e].v].emplace_back(edges_[e].u, e);
  }
  offsets_.assign(n + 1, 0);
  adjacency_.clear();
  adjacency_edges_.clear();
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 1; i < list.size(); ++i)
      if (list[i].first == list[i - 1].first)
        throw InputError("duplicate edge " + names_[v] + " - " + names_[list[i].first]);
    for (const auto& [w, e] : list) {
      adjacency_.push_back(w);
      adjacency_edges_.push_back(e);
    }
    offsets_[v + 1] = adjacency_.size();
  }

  components_ = 0;
  std::vector<bool> seen(n, false);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components_;
    std::deque<VertexId> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }

  distances_.clear();
  if (n <= kDistanceCacheLimit) {
    distances_.reserve(n * n);
    for (VertexId s = 0; s < n; ++s) {
      const auto row = bfs_distances(s);
      distances_.insert(distances_.end(), row.begin(), row.end());
    }
  }
}

std::optional<VertexId> SocialNetwork::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

VertexId SocialNetwork::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

std::span<const VertexId> SocialNetwork::neighbors(VertexId v) const {
  return {adjacency_.data() + offsets_.at(v), offsets_.at(v + 1) - offsets_.at(v)};
}

std::span<const EdgeId> SocialNetwork::incident_edges(VertexId v) const {
  return {adjacency_edges_.data() + offsets_.at(v), offsets_.at(v + 1) - offsets_.at(v)};
}

std::optional<EdgeId> SocialNetwork::edge_id(VertexId a, VertexId b) const {
  const auto nb = neighbors(a);
  const auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::vector<unsigned> SocialNetwork::bfs_distances(VertexId source) const {
  std::vector<unsigned> dist(names_.size(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : neighbors(v))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

unsigned SocialNetwork::distance(VertexId a, VertexId b) const {
  if (a >= names_.size() || b >= names_.size()) throw InputError("vertex id out of range");
  if (!distances_.empty()) return distances_[std::size_t{a} * names_.size() + b];
  return bfs_distances(a)[b];
}

std::optional<VertexId> Subgraph::from_parent(VertexId parent) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<VertexId>(it - to_parent.begin());
}

Subgraph induced_subgraph(const SocialNetwork& g, std::span<const VertexId> vertices) {
  Subgraph out;
  out.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());

  std::vector<std::string> names;
  names.reserve(out.to_parent.size());
  for (VertexId v : out.to_parent) names.push_back(g.name(v));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (VertexId w : g.neighbors(out.to_parent[i]))
      if (w > out.to_parent[i])
        if (auto j = out.from_parent(w)) edges.emplace_back(i, *j);
  out.graph = SocialNetwork(std::move(names), edges);
  return out;
}

void validate_path(const SocialNetwork& g, const Path& path) {
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const VertexId v = path.vertices[i];
    if (v >= g.vertex_count()) throw InputError("path vertex id out of range");
    if (seen[v]) throw InputError("path repeats vertex '" + g.name(v) + "'");
    seen[v] = true;
    if (i > 0 && !g.adjacent(path.vertices[i - 1], v))
      throw InputError("path step " + g.name(path.vertices[i - 1]) + " -> " + g.name(v) + " is not an edge");
  }
}

Path shortest_path(const SocialNetwork& g, VertexId a, VertexId b) {
  const auto to_target = g.bfs_distances(b);
  if (to_target.at(a) == kUnreachable)
    throw InputError("no path between '" + g.name(a) + "' and '" + g.name(b) + "'");
  Path path{{a}};
  VertexId cur = a;
  while (cur != b) {
    for (VertexId w : g.neighbors(cur))
      if (to_target[w] + 1 == to_target[cur]) {
        cur = w;
        break;
      }
    path.vertices.push_back(cur);
  }
  return path;
}

unsigned critical_value(const SocialNetwork& g) {
  if (!g.connected()) throw InputError("critical value requires a connected graph");
  unsigned best = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s)
    for (unsigned d : g.bfs_distances(s)) best = std::max(best, d);
  return best;
}

std::vector<VertexId> ball_vertices(const SocialNetwork& g, VertexId a, unsigned r) {
  const auto dist = g.bfs_distances(a);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (dist[v] <= r) out.push_back(v);
  return out;
}

Subgraph ball(const SocialNetwork& g, VertexId a, unsigned r) {
  const auto vs = ball_vertices(g, a, r);
  return induced_subgraph(g, vs);
}

std::string_view to_string(TopologyType t) noexcept {
  switch (t) {
    case TopologyType::TypeA: return "TypeA";
    case TopologyType::TypeB: return "TypeB";
    case TopologyType::TypeC: return "TypeC";
  }
  return "?";
}

bool is_tree(const SocialNetwork& g) noexcept {
  return g.vertex_count() > 0 && g.connected() && g.edge_count() + 1 == g.vertex_count();
}

bool is_complete(const SocialNetwork& g) noexcept {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

TopologyType topology_type(const SocialNetwork& g) {
  if (g.vertex_count() < 2) throw InputError("topology type needs at least two vertices");
  if (!g.connected()) throw InputError("topology type needs a connected graph");
  // K2 is both a tree and complete; trees take precedence.
  if (is_tree(g)) return TopologyType::TypeA;
  if (is_complete(g)) return TopologyType::TypeC;
  return TopologyType::TypeB;
}

}  // namespace codenet
