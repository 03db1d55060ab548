#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace codenet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Undirected edge with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Orders vertex names numerically when both are decimal integers, and
/// lexicographically otherwise (numbers first).
bool natural_less(std::string_view a, std::string_view b);

struct Path {
  std::vector<VertexId> vertices;

  /// Edge count; 0 for single-vertex and empty paths.
  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Simple undirected graph whose vertices carry opaque string names. Vertex ids
/// are dense and follow natural_less over the names, so "smallest id" and
/// "smallest name" agree. Immutable after construction.
class SocialNetwork {
 public:
  SocialNetwork() = default;

  /// Builds from names and index-based edges (indices refer to `names`).
  /// Throws InputError on self-loops, duplicate edges, or duplicate names.
  SocialNetwork(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  /// Builds from named edges; vertices are the union of endpoints plus `isolated`.
  static SocialNetwork from_named_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                                        const std::vector<std::string>& isolated = {});

  /// Vertices named "0", "1", ..., "n-1".
  static SocialNetwork numbered(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  VertexId id(std::string_view name) const;

  /// Edges in insertion order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }

  /// Neighbors in ascending id order, with the matching edge ids.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::span<const EdgeId> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  bool connected() const noexcept { return components_ <= 1; }
  std::size_t component_count() const noexcept { return components_; }

  /// BFS distance; kUnreachable when disconnected.
  unsigned distance(VertexId a, VertexId b) const;
  std::vector<unsigned> bfs_distances(VertexId source) const;

 private:
  void build_indices();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
  std::size_t components_ = 0;
  // All-pairs distances, cached at construction for graphs up to kDistanceCacheLimit vertices.
  std::vector<unsigned> distances_;
};

/// Graphs above this size compute distances on demand instead of caching all pairs.
inline constexpr std::size_t kDistanceCacheLimit = 4096;

/// An induced subgraph and the parent id of each of its vertices.
struct Subgraph {
  SocialNetwork graph;
  std::vector<VertexId> to_parent;  // ascending

  std::optional<VertexId> from_parent(VertexId parent) const;
};

/// Induced subgraph on the given vertex set (duplicates ignored).
Subgraph induced_subgraph(const SocialNetwork& g, std::span<const VertexId> vertices);

/// Throws InputError unless consecutive vertices are adjacent and no vertex repeats.
void validate_path(const SocialNetwork& g, const Path& path);

/// Minimum-edge path; among those, the lexicographically smallest id sequence.
/// Throws InputError when b is unreachable from a.
Path shortest_path(const SocialNetwork& g, VertexId a, VertexId b);

/// Maximum shortest-path length over all vertex pairs (the diameter).
/// Throws InputError for disconnected graphs.
unsigned critical_value(const SocialNetwork& g);

/// Vertices within distance r of a, ascending.
std::vector<VertexId> ball_vertices(const SocialNetwork& g, VertexId a, unsigned r);
Subgraph ball(const SocialNetwork& g, VertexId a, unsigned r);

enum class TopologyType { TypeA, TypeB, TypeC };
std::string_view to_string(TopologyType t) noexcept;

bool is_tree(const SocialNetwork& g) noexcept;
bool is_complete(const SocialNetwork& g) noexcept;

/// TypeA for trees, TypeC for complete graphs, TypeB otherwise. Requires a
/// connected graph with at least two vertices.
TopologyType topology_type(const SocialNetwork& g);

}  // namespace codenet
