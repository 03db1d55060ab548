#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "codenet/coded_network.hpp"
#include "codenet/efficiency.hpp"
#include "codenet/graph.hpp"

namespace codenet {

/// A rooted spanning tree over vertex ids 0..n-1. Child order is significant:
/// labels are handed out in that order.
class SpanningTree {
 public:
  SpanningTree() = default;

  /// Orients the edges away from `root`; each vertex's children keep the order
  /// in which their edges appear. Throws InputError unless the edges form a
  /// spanning tree on vertex_count vertices.
  static SpanningTree from_edges(std::size_t vertex_count, VertexId root,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges);

  /// From a parent array (root has none); children sorted ascending.
  static SpanningTree from_parents(VertexId root, const std::vector<std::optional<VertexId>>& parent);

  VertexId root() const noexcept { return root_; }
  std::size_t vertex_count() const noexcept { return parent_.size(); }
  std::optional<VertexId> parent(VertexId v) const { return parent_.at(v); }
  std::span<const VertexId> children(VertexId v) const { return children_.at(v); }
  unsigned depth(VertexId v) const { return depth_.at(v); }

  /// (parent, child) pairs in breadth-first order.
  std::vector<std::pair<VertexId, VertexId>> oriented_edges() const;
  std::vector<Edge> edges() const;

  /// Breadth-first order from the root, children in stored order.
  std::vector<VertexId> bfs_order() const;

  unsigned diameter() const;
  /// The unique tree path from a to b.
  Path path(VertexId a, VertexId b) const;

  /// Same edge set, re-rooted.
  SpanningTree rerooted(VertexId new_root) const;

  /// Throws InputError if some tree edge is missing from g.
  void validate_in(const SocialNetwork& g) const;

 private:
  void compute_depths();

  VertexId root_ = 0;
  std::vector<std::optional<VertexId>> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<unsigned> depth_;
};

/// Breadth-first tree grown from one or two seeds (the second seed hangs off
/// the first). Children are ascending.
SpanningTree bfs_tree(const SocialNetwork& g, VertexId seed, std::optional<VertexId> second_seed = std::nullopt);

/// Minimum-diameter spanning tree of a connected graph: the best BFS tree over
/// every vertex seed and every edge seed. Ties keep the first candidate
/// (vertex seeds in id order, then edges in insertion order).
SpanningTree min_diameter_spanning_tree(const SocialNetwork& g);

/// Efficiency class of the network restricted to the tree's edges.
Efficiency classify_tree(const CodedNetwork& net, const SpanningTree& tree);

struct SuperEfficiency {
  bool super_efficient = false;
  Efficiency network_class = Efficiency::Inefficient;
  std::optional<SpanningTree> tree;
  /// True when the verdict came from enumerating every spanning tree.
  bool exhaustive = false;
};

/// Exhaustive spanning-tree enumeration is used up to this many vertices.
inline constexpr std::size_t kExhaustiveTreeLimit = 8;

/// Tests whether an efficient network has an efficient spanning tree and
/// returns a witness. With a constant probability the minimum-diameter tree is
/// decisive; otherwise BFS trees are tried, then all spanning trees for small
/// graphs.
SuperEfficiency is_super_efficient(const CodedNetwork& net);

/// Calls visit(tree_edges) for each spanning tree; stops early when visit returns true.
/// Returns true if stopped early.
template <class Visitor>
bool for_each_spanning_tree(const SocialNetwork& g, Visitor&& visit);

enum class RouteMove { Ascend, Descend };

struct RouteStep {
  VertexId from = 0;
  VertexId to = 0;
  RouteMove move = RouteMove::Ascend;
};

/// Injective vertex -> F_q^N labeling of a spanning tree. The root is the zero
/// word, and zeroing the last nonzero symbol of any other label gives its
/// parent's label.
class Labeling {
 public:
  const SpanningTree& tree() const noexcept { return tree_; }
  unsigned field_order() const noexcept { return q_; }
  std::size_t label_length() const noexcept { return length_; }

  /// Label padded to label_length().
  Word label(VertexId v) const;
  /// Label without trailing zeros.
  const Word& trimmed_label(VertexId v) const { return labels_.at(v); }

  /// Trailing zeros are ignored.
  std::optional<VertexId> vertex_with_label(std::span<const Symbol> label) const;

  /// Vertex whose label is v's with the last nonzero symbol zeroed.
  /// Throws InputError for the root.
  VertexId label_parent(VertexId v) const;

  /// True when a's label is reachable from b's by repeatedly zeroing the last
  /// nonzero symbol (a is b or one of its ancestors).
  bool is_label_ancestor(VertexId a, VertexId b) const;

  /// Next vertex on the tree path toward target. Throws InputError when
  /// current == target or either vertex is unknown.
  VertexId next_hop(VertexId current, VertexId target) const;

  RouteStep next_step(VertexId current, VertexId target) const;
  Path route(VertexId from, VertexId to) const;
  std::vector<RouteStep> route_steps(VertexId from, VertexId to) const;

 private:
  friend Labeling assign_labels(const SpanningTree& tree, unsigned q);

  void check_vertex(VertexId v) const;

  SpanningTree tree_;
  unsigned q_ = 2;
  std::size_t length_ = 0;
  std::vector<Word> labels_;  // trimmed
  std::map<Word, VertexId> by_label_;
};

/// Breadth-first label assignment. A child of a vertex whose label has its last
/// nonzero symbol at position k gets the smallest unused nonzero value at
/// position k+1; once those are exhausted it gets a 1 at the first free
/// position further right.
Labeling assign_labels(const SpanningTree& tree, unsigned q);

/// Labels for complete graphs drawn from a binary simplex code: all labels are
/// pairwise equidistant, which identifies the graph as complete.
struct SimplexLabeling {
  unsigned order = 2;  // simplex parameter m
  std::vector<Word> labels;

  bool equidistant() const;
  /// Direct edge route (complete graph).
  Path route(VertexId from, VertexId to) const;
};

/// Throws InputError unless g is complete.
SimplexLabeling assign_simplex_labels(const SocialNetwork& g);

// ---- template definitions ----

template <class Visitor>
bool for_each_spanning_tree(const SocialNetwork& g, Visitor&& visit) {
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();
  if (n == 0) return false;
  std::vector<std::size_t> chosen;
  std::vector<Edge> tree;
  // Union-find with rollback-free recomputation per complete selection.
  auto acyclic = [&](const std::vector<std::size_t>& sel) {
    std::vector<VertexId> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<VertexId>(i);
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e : sel) {
      const auto a = find(edges[e].u);
      const auto b = find(edges[e].v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() + 1 == n) {
      if (!acyclic(chosen)) return false;
      tree.clear();
      for (std::size_t e : chosen) tree.push_back(edges[e]);
      return visit(tree);
    }
    for (std::size_t e = start; e + (n - 1 - chosen.size()) <= edges.size(); ++e) {
      chosen.push_back(e);
      const bool partial_ok = acyclic(chosen);
      if (partial_ok && self(self, e + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return recurse(recurse, 0);
}

}  // namespace codenet
