#include "codenet/labeling.hpp"

#include <algorithm>
#include <deque>

#include "codenet/errors.hpp"
#include "codenet/linear_code.hpp"

namespace codenet {

// ---------------------------------------------------------------- SpanningTree

SpanningTree SpanningTree::from_edges(std::size_t vertex_count, VertexId root,
                                      const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (vertex_count == 0) throw InputError("spanning tree over an empty vertex set");
  if (root >= vertex_count) throw InputError("tree root out of range");
  if (edges.size() + 1 != vertex_count)
    throw InputError("a spanning tree on " + std::to_string(vertex_count) + " vertices needs " +
                     std::to_string(vertex_count - 1) + " edges, got " + std::to_string(edges.size()));
  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count || a == b) throw InputError("invalid tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  SpanningTree t;
  t.root_ = root;
  t.parent_.assign(vertex_count, std::nullopt);
  t.children_.assign(vertex_count, {});
  std::vector<bool> seen(vertex_count, false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  if (reached != vertex_count) throw InputError("tree edges do not connect every vertex");
  t.compute_depths();
  return t;
}

SpanningTree SpanningTree::from_parents(VertexId root, const std::vector<std::optional<VertexId>>& parent) {
  const std::size_t n = parent.size();
  if (root >= n || parent[root]) throw InputError("root must be in range and have no parent");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (!parent[v]) throw InputError("non-root vertex without a parent");
    edges.emplace_back(*parent[v], v);
  }
  // Ascending child order regardless of how the parent array was produced.
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  auto t = from_edges(n, root, edges);
  for (VertexId v = 0; v < n; ++v)
    if (t.parent_[v] != parent[v]) throw InputError("parent array is not a tree");
  return t;
}

void SpanningTree::compute_depths() {
  depth_.assign(parent_.size(), 0);
  for (VertexId v : bfs_order())
    if (parent_[v]) depth_[v] = depth_[*parent_[v]] + 1;
}

std::vector<VertexId> SpanningTree::bfs_order() const {
  std::vector<VertexId> order{root_};
  order.reserve(parent_.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId c : children_[order[i]]) order.push_back(c);
  return order;
}

std::vector<std::pair<VertexId, VertexId>> SpanningTree::oriented_edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v : bfs_order())
    for (VertexId c : children_[v]) out.emplace_back(v, c);
  return out;
}

std::vector<Edge> SpanningTree::edges() const {
  std::vector<Edge> out;
  for (const auto& [p, c] : oriented_edges()) out.push_back({std::min(p, c), std::max(p, c)});
  return out;
}

unsigned SpanningTree::diameter() const {
  const std::size_t n = parent_.size();
  if (n <= 1) return 0;
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& [p, c] : oriented_edges()) {
    adj[p].push_back(c);
    adj[c].push_back(p);
  }
  auto farthest = [&](VertexId s) {
    std::vector<unsigned> dist(n, kUnreachable);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    VertexId last = s;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      last = dist[v] > dist[last] ? v : last;
      for (VertexId w : adj[v])
        if (dist[w] == kUnreachable) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    return std::pair{last, dist[last]};
  };
  return farthest(farthest(root_).first).second;
}

Path SpanningTree::path(VertexId a, VertexId b) const {
  std::vector<VertexId> up{a}, down{b};
  while (a != b) {
    if (depth_.at(a) >= depth_.at(b)) {
      a = *parent_[a];
      up.push_back(a);
    } else {
      b = *parent_[b];
      down.push_back(b);
    }
  }
  // up ends at the common ancestor, which down also ends at.
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return Path{std::move(up)};
}

SpanningTree SpanningTree::rerooted(VertexId new_root) const {
  return from_edges(parent_.size(), new_root, oriented_edges());
}

void SpanningTree::validate_in(const SocialNetwork& g) const {
  if (g.vertex_count() != parent_.size()) throw InputError("tree and graph vertex counts differ");
  for (const auto& [p, c] : oriented_edges())
    if (!g.adjacent(p, c)) throw InputError("tree edge " + g.name(p) + " - " + g.name(c) + " is not in the graph");
}

// ------------------------------------------------------------ tree search

SpanningTree bfs_tree(const SocialNetwork& g, VertexId seed, std::optional<VertexId> second_seed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<VertexId>> parent(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{seed};
  seen.at(seed) = true;
  if (second_seed) {
    if (!g.adjacent(seed, *second_seed)) throw InputError("edge seeds must be adjacent");
    seen[*second_seed] = true;
    parent[*second_seed] = seed;
    queue.push_back(*second_seed);
  }
  std::size_t reached = queue.size();
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
        ++reached;
      }
  }
  if (reached != n) throw InputError("spanning tree requires a connected graph");
  return SpanningTree::from_parents(seed, parent);
}

SpanningTree min_diameter_spanning_tree(const SocialNetwork& g) {
  if (g.vertex_count() == 0) throw InputError("spanning tree of an empty graph");
  if (!g.connected()) throw InputError("spanning tree requires a connected graph");
  std::optional<SpanningTree> best;
  unsigned best_diameter = kUnreachable;
  auto consider = [&](SpanningTree t) {
    const unsigned d = t.diameter();
    if (d < best_diameter) {
      best_diameter = d;
      best = std::move(t);
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) consider(bfs_tree(g, v));
  for (const Edge& e : g.edges()) consider(bfs_tree(g, e.u, e.v));
  return std::move(*best);
}

Efficiency classify_tree(const CodedNetwork& net, const SpanningTree& tree) {
  tree.validate_in(net.graph());
  if (tree.vertex_count() == 1) return Efficiency::Efficient;
  if (const auto& p = net.constant_probability()) {
    Efficiency worst = Efficiency::Efficient;
    for (const auto& row : classify_lengths(net.code().length(), net.code().min_distance(),
                                            net.code().field().order(), *p, tree.diameter()))
      worst = std::max(worst, row.classification);
    return worst;
  }
  return classify_network(net.with_edges(tree.edges())).classification;
}

SuperEfficiency is_super_efficient(const CodedNetwork& net) {
  const auto& g = net.graph();
  if (!g.connected()) throw InputError("super-efficiency requires a connected graph");
  SuperEfficiency out;
  out.network_class = classify_network(net).classification;
  if (out.network_class != Efficiency::Efficient) return out;

  if (net.constant_probability() || g.edge_count() == 0) {
    auto tree = min_diameter_spanning_tree(g);
    if (classify_tree(net, tree) == Efficiency::Efficient) {
      out.super_efficient = true;
      out.tree = std::move(tree);
    }
    return out;
  }

  std::vector<SpanningTree> candidates;
  for (VertexId v = 0; v < g.vertex_count(); ++v) candidates.push_back(bfs_tree(g, v));
  for (const Edge& e : g.edges()) candidates.push_back(bfs_tree(g, e.u, e.v));
  for (auto& t : candidates)
    if (classify_tree(net, t) == Efficiency::Efficient) {
      out.super_efficient = true;
      out.tree = std::move(t);
      return out;
    }

  if (g.vertex_count() <= kExhaustiveTreeLimit) {
    out.exhaustive = true;
    for_each_spanning_tree(g, [&](const std::vector<Edge>& edges) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
      std::sort(pairs.begin(), pairs.end());
      auto t = SpanningTree::from_edges(g.vertex_count(), 0, pairs);
      if (classify_tree(net, t) != Efficiency::Efficient) return false;
      out.super_efficient = true;
      out.tree = std::move(t);
      return true;
    });
  }
  return out;
}

// ---------------------------------------------------------------- Labeling

namespace {

void trim(Word& w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
}

}  // namespace

Labeling assign_labels(const SpanningTree& tree, unsigned q) {
  if (!is_prime(q)) throw InputError("field order " + std::to_string(q) + " is not prime");
  Labeling out;
  out.tree_ = tree;
  out.q_ = q;
  const std::size_t n = tree.vertex_count();
  out.labels_.assign(n, Word{});

  // Candidates of the form parent-label + (0,...,0,v) have the parent as their
  // label parent, so only siblings can collide with them; a per-parent cursor
  // therefore tracks exactly the used values and positions.
  struct Cursor {
    Symbol next_value = 1;
    std::size_t next_fallback = 0;  // offset past the primary position
  };
  std::vector<Cursor> cursor(n);

  for (VertexId v : tree.bfs_order()) {
    const Word& base = out.labels_[v];
    for (VertexId child : tree.children(v)) {
      Word label = base;
      auto& c = cursor[v];
      if (c.next_value < q) {
        label.push_back(c.next_value++);
      } else {
        label.resize(base.size() + 1 + ++c.next_fallback, 0);
        label.back() = 1;
      }
      out.length_ = std::max(out.length_, label.size());
      out.labels_[child] = std::move(label);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!out.by_label_.emplace(out.labels_[v], v).second)
      throw std::logic_error("label assignment produced a duplicate label");
  }
  return out;
}

void Labeling::check_vertex(VertexId v) const {
  if (v >= labels_.size()) throw InputError("vertex " + std::to_string(v) + " is not labeled");
}

Word Labeling::label(VertexId v) const {
  check_vertex(v);
  Word w = labels_[v];
  w.resize(length_, 0);
  return w;
}

std::optional<VertexId> Labeling::vertex_with_label(std::span<const Symbol> label) const {
  Word w(label.begin(), label.end());
  trim(w);
  if (auto it = by_label_.find(w); it != by_label_.end()) return it->second;
  return std::nullopt;
}

VertexId Labeling::label_parent(VertexId v) const {
  check_vertex(v);
  if (labels_[v].empty()) throw InputError("the root has no parent");
  Word w = labels_[v];
  w.back() = 0;
  trim(w);
  return by_label_.at(w);
}

bool Labeling::is_label_ancestor(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  const Word& la = labels_[a];
  const Word& lb = labels_[b];
  return la.size() <= lb.size() && std::equal(la.begin(), la.end(), lb.begin());
}

RouteStep Labeling::next_step(VertexId current, VertexId target) const {
  check_vertex(current);
  check_vertex(target);
  if (current == target) throw InputError("next hop requested at the target itself");
  if (!is_label_ancestor(current, target)) return {current, label_parent(current), RouteMove::Ascend};
  // Restore the target's next nonzero symbol past the current label.
  const Word& lt = labels_[target];
  std::size_t j = labels_[current].size();
  while (lt[j] == 0) ++j;
  const Word child(lt.begin(), lt.begin() + static_cast<std::ptrdiff_t>(j + 1));
  return {current, by_label_.at(child), RouteMove::Descend};
}

VertexId Labeling::next_hop(VertexId current, VertexId target) const { return next_step(current, target).to; }

std::vector<RouteStep> Labeling::route_steps(VertexId from, VertexId to) const {
  check_vertex(from);
  check_vertex(to);
  std::vector<RouteStep> steps;
  for (VertexId cur = from; cur != to;) {
    steps.push_back(next_step(cur, to));
    cur = steps.back().to;
  }
  return steps;
}

Path Labeling::route(VertexId from, VertexId to) const {
  Path p{{from}};
  for (const auto& s : route_steps(from, to)) p.vertices.push_back(s.to);
  return p;
}

// -------------------------------------------------------- simplex labels

bool SimplexLabeling::equidistant() const {
  if (labels.size() < 2) return true;
  const std::size_t d = hamming_distance(labels[0], labels[1]);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (hamming_distance(labels[i], labels[j]) != d) return false;
  return true;
}

Path SimplexLabeling::route(VertexId from, VertexId to) const {
  if (from >= labels.size() || to >= labels.size()) throw InputError("vertex is not labeled");
  if (from == to) return Path{{from}};
  return Path{{from, to}};
}

SimplexLabeling assign_simplex_labels(const SocialNetwork& g) {
  if (!is_complete(g)) throw InputError("simplex labels apply to complete graphs only");
  const std::size_t n = g.vertex_count();
  unsigned m = 2;
  while ((std::size_t{1} << m) < n) ++m;
  const auto code = simplex_code(m);
  SimplexLabeling out;
  out.order = m;
  for (std::size_t v = 0; v < n; ++v) {
    Word message(m);
    for (unsigned b = 0; b < m; ++b) message[b] = static_cast<Symbol>((v >> (m - 1 - b)) & 1U);
    out.labels.push_back(code.encode(message));
  }
  return out;
}

}  // namespace codenet
