#include "codenet/covering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>

#include "codenet/efficiency.hpp"
#include "codenet/errors.hpp"

namespace codenet {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool intersects(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

std::optional<VertexId> smallest_common(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  std::vector<VertexId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.front();
}

/// Every path length up to max_length is efficient under the constant probability.
/// Largest l <= cap with every length 1..l efficient; 0 without a constant probability.
unsigned efficient_prefix(const CodedNetwork& net, unsigned cap) {
  const auto& p = net.constant_probability();
  if (!p || cap == 0) return 0;
  unsigned l = 0;
  for (const auto& row : classify_lengths(net.code().length(), net.code().min_distance(),
                                          net.code().field().order(), *p, cap)) {
    if (row.classification != Efficiency::Efficient) break;
    l = row.length;
  }
  return l;
}

std::optional<SpanningTree> member_witness(const CodedNetwork& net, const std::vector<VertexId>& member) {
  auto sub = net.induced(member);
  if (!sub.network.graph().connected())
    throw InputError("covering member containing " + net.graph().name(member.front()) +
                     " induces a disconnected subgraph");
  if (member.size() == 1) return SpanningTree::from_edges(1, 0, {});
  auto se = is_super_efficient(sub.network);
  if (!se.super_efficient) return std::nullopt;
  return std::move(se.tree);
}

Covering assemble(const CodedNetwork& net, std::vector<std::vector<VertexId>> members,
                  std::vector<std::optional<SpanningTree>> trees) {
  Covering c;
  c.members = std::move(members);
  c.member_trees = std::move(trees);
  std::vector<bool> seen(net.graph().vertex_count(), false);
  std::size_t covered = 0;
  for (const auto& m : c.members)
    for (VertexId v : m)
      if (!seen[v]) {
        seen[v] = true;
        ++covered;
      }
  c.is_covering = covered == net.graph().vertex_count();
  c.is_reachable = intersection_graph_connected(c.members);
  const bool all_super =
      std::all_of(c.member_trees.begin(), c.member_trees.end(), [](const auto& t) { return t.has_value(); });
  c.is_efficient = c.is_covering && c.is_reachable && all_super;
  bool pairwise = true;
  for (std::size_t i = 0; i < c.members.size() && pairwise; ++i)
    for (std::size_t j = i + 1; j < c.members.size() && pairwise; ++j) pairwise = intersects(c.members[i], c.members[j]);
  c.is_perfect = c.is_efficient && pairwise;
  return c;
}

struct Ball {
  std::vector<VertexId> vertices;
  std::optional<SpanningTree> tree;  // set when eligible
};

std::vector<Ball> radius_balls(const CodedNetwork& net, unsigned r) {
  const auto& g = net.graph();
  // A center tree has diameter at most 2r; with a constant probability it is
  // a witness as soon as its own diameter is within the efficient lengths.
  const unsigned efficient_up_to = efficient_prefix(net, 2 * r);
  std::vector<Ball> balls(g.vertex_count());
  for (VertexId c = 0; c < g.vertex_count(); ++c) {
    Ball& b = balls[c];
    b.vertices = ball_vertices(g, c, r);
    if (efficient_up_to > 0) {
      auto sub = induced_subgraph(g, b.vertices);
      auto tree = bfs_tree(sub.graph, *sub.from_parent(c));
      if (tree.diameter() <= efficient_up_to) {
        b.tree = std::move(tree);
        continue;
      }
    }
    b.tree = member_witness(net, b.vertices);
  }
  return balls;
}

/// Smallest number of eligible balls forming a covering with a connected
/// intersection graph, searching sizes below `upper`; none if no smaller family exists.
std::optional<std::size_t> exact_minimum(const std::vector<Ball>& balls, std::size_t vertex_count,
                                         std::size_t upper) {
  std::vector<std::uint64_t> masks;
  for (const auto& b : balls) {
    if (!b.tree) continue;
    std::uint64_t m = 0;
    for (VertexId v : b.vertices) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  const std::uint64_t full = vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
  std::vector<std::size_t> pick;
  auto reachable = [&]() {
    std::uint64_t joined = masks[pick[0]];
    std::vector<bool> in(pick.size(), false);
    in[0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 1; i < pick.size(); ++i)
        if (!in[i] && (masks[pick[i]] & joined)) {
          in[i] = true;
          joined |= masks[pick[i]];
          grew = true;
        }
    }
    return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
  };
  auto search = [&](auto&& self, std::size_t start, std::size_t size, std::uint64_t acc) -> bool {
    if (pick.size() == size) return acc == full && reachable();
    for (std::size_t i = start; i + (size - pick.size()) <= masks.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1, size, acc | masks[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size < upper; ++size) {
    pick.clear();
    if (search(search, 0, size, 0)) return size;
  }
  return std::nullopt;
}

void fill_dimension(CoveringSet& cs, const std::vector<Ball>& balls, std::size_t vertex_count,
                    std::size_t exact_limit) {
  cs.dimension = cs.centers.size();
  cs.dimension_exact = false;
  if (vertex_count <= std::min<std::size_t>(exact_limit, 64)) {
    if (auto smaller = exact_minimum(balls, vertex_count, cs.centers.size())) cs.dimension = *smaller;
    cs.dimension_exact = true;
  }
}

}  // namespace

std::vector<std::size_t> Covering::members_containing(VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (std::binary_search(members[i].begin(), members[i].end(), v)) out.push_back(i);
  return out;
}

bool intersection_graph_connected(std::span<const std::vector<VertexId>> members) {
  if (members.empty()) return false;
  UnionFind uf(members.size());
  std::size_t components = members.size();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (intersects(members[i], members[j]) && uf.unite(i, j)) --components;
  return components == 1;
}

Covering validate_covering(const CodedNetwork& net, std::vector<std::vector<VertexId>> members) {
  const std::size_t n = net.graph().vertex_count();
  if (members.empty()) throw InputError("covering has no members");
  std::vector<std::optional<SpanningTree>> trees;
  for (auto& m : members) {
    if (m.empty()) throw InputError("covering member is empty");
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    if (m.back() >= n) throw InputError("covering member names an unknown vertex");
    trees.push_back(member_witness(net, m));
  }
  return assemble(net, std::move(members), std::move(trees));
}

std::optional<CoveringSet> covering_set(const CodedNetwork& net, unsigned r, const CoverOptions& options) {
  if (r == 0) throw InputError("covering radius must be positive");
  const auto& g = net.graph();
  if (!g.connected()) throw InputError("covering sets require a connected graph");
  const std::size_t n = g.vertex_count();
  const auto balls = radius_balls(net, r);

  std::vector<bool> covered(n, false);
  std::size_t uncovered = n;
  std::vector<bool> chosen(n, false);
  std::vector<VertexId> centers;
  while (uncovered > 0) {
    std::size_t best_gain = 0;
    VertexId best = 0;
    for (VertexId c = 0; c < n; ++c) {
      if (chosen[c] || !balls[c].tree) continue;
      std::size_t gain = 0;
      for (VertexId v : balls[c].vertices) gain += covered[v] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) return std::nullopt;
    chosen[best] = true;
    centers.push_back(best);
    for (VertexId v : balls[best].vertices)
      if (!covered[v]) {
        covered[v] = true;
        --uncovered;
      }
  }

  // Join intersection components; every vertex is covered, so the component
  // of a vertex is well defined (balls sharing it intersect).
  while (true) {
    std::vector<std::vector<VertexId>> family;
    for (VertexId c : centers) family.push_back(balls[c].vertices);
    UnionFind uf(centers.size());
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        if (intersects(family[i], family[j])) uf.unite(i, j);
    std::vector<std::size_t> component(n);
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < family.size(); ++i) {
      roots.push_back(uf.find(i));
      for (VertexId v : family[i]) component[v] = roots.back();
    }
    std::sort(roots.begin(), roots.end());
    if (std::unique(roots.begin(), roots.end()) - roots.begin() == 1) break;

    std::size_t best_merge = 0;
    VertexId best = 0;
    for (VertexId c = 0; c < n; ++c) {
      if (chosen[c] || !balls[c].tree) continue;
      std::vector<std::size_t> touched;
      for (VertexId v : balls[c].vertices) touched.push_back(component[v]);
      std::sort(touched.begin(), touched.end());
      const auto distinct = static_cast<std::size_t>(std::unique(touched.begin(), touched.end()) - touched.begin());
      if (distinct - 1 > best_merge) {
        best_merge = distinct - 1;
        best = c;
      }
    }
    if (best_merge == 0) return std::nullopt;
    chosen[best] = true;
    centers.push_back(best);
  }

  std::sort(centers.begin(), centers.end());
  CoveringSet cs;
  cs.centers = centers;
  cs.radius = r;
  std::vector<std::vector<VertexId>> members;
  std::vector<std::optional<SpanningTree>> trees;
  for (VertexId c : centers) {
    members.push_back(balls[c].vertices);
    trees.push_back(balls[c].tree);
    cs.density = std::max(cs.density, balls[c].vertices.size());
  }
  cs.covering = assemble(net, std::move(members), std::move(trees));
  fill_dimension(cs, balls, n, options.exact_vertex_limit);
  return cs;
}

unsigned radius(const CodedNetwork& net, const CoverOptions& options) {
  const unsigned top = critical_value(net.graph());
  for (unsigned r = top; r >= 1; --r)
    if (covering_set(net, r, options)) return r;
  return 0;
}

std::vector<TransmissionLeg> TransmissionPlan::legs() const {
  std::vector<TransmissionLeg> out;
  VertexId from = source;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VertexId to = i < handoffs.size() ? handoffs[i] : target;
    out.push_back({members[i], from, to});
    from = to;
  }
  return out;
}

TransmissionPlan plan_transmission(const Covering& covering, VertexId source, VertexId target) {
  const auto from_members = covering.members_containing(source);
  const auto to_members = covering.members_containing(target);
  if (from_members.empty()) throw InputError("source vertex is not covered");
  if (to_members.empty()) throw InputError("target vertex is not covered");
  if (!covering.is_reachable || !covering.is_efficient)
    throw InfeasibleError("transmission planning needs a reachable, efficient covering");

  TransmissionPlan plan;
  plan.source = source;
  plan.target = target;
  for (std::size_t m : from_members)
    if (std::binary_search(to_members.begin(), to_members.end(), m)) {
      plan.members = {m};
      plan.correction_points = {target};
      return plan;
    }

  const std::size_t count = covering.members.size();
  std::vector<std::optional<std::size_t>> prev(count);
  std::vector<bool> seen(count, false);
  std::deque<std::size_t> queue;
  for (std::size_t m : from_members) {
    seen[m] = true;
    queue.push_back(m);
  }
  std::optional<std::size_t> reached;
  std::vector<bool> is_target(count, false);
  for (std::size_t m : to_members) is_target[m] = true;
  while (!queue.empty() && !reached) {
    const std::size_t m = queue.front();
    queue.pop_front();
    for (std::size_t next = 0; next < count; ++next) {
      if (seen[next] || !intersects(covering.members[m], covering.members[next])) continue;
      seen[next] = true;
      prev[next] = m;
      if (is_target[next]) {
        reached = next;
        break;
      }
      queue.push_back(next);
    }
  }
  if (!reached) throw InfeasibleError("no member sequence connects source and target");
  for (std::size_t m = *reached;; m = *prev[m]) {
    plan.members.push_back(m);
    if (!prev[m]) break;
  }
  std::reverse(plan.members.begin(), plan.members.end());
  for (std::size_t i = 0; i + 1 < plan.members.size(); ++i)
    plan.handoffs.push_back(*smallest_common(covering.members[plan.members[i]], covering.members[plan.members[i + 1]]));
  plan.correction_points = plan.handoffs;
  plan.correction_points.push_back(target);
  return plan;
}

MemberRouter::MemberRouter(std::vector<VertexId> to_parent, Labeling labeling)
    : to_parent_(std::move(to_parent)), labeling_(std::move(labeling)) {
  if (to_parent_.size() != labeling_.tree().vertex_count())
    throw InputError("member size and labeling size differ");
}

bool MemberRouter::contains(VertexId v) const { return std::binary_search(to_parent_.begin(), to_parent_.end(), v); }

VertexId MemberRouter::local(VertexId v) const {
  auto it = std::lower_bound(to_parent_.begin(), to_parent_.end(), v);
  if (it == to_parent_.end() || *it != v) throw InputError("vertex is not in this member");
  return static_cast<VertexId>(it - to_parent_.begin());
}

Path MemberRouter::route(VertexId from, VertexId to) const {
  Path p = labeling_.route(local(from), local(to));
  for (auto& v : p.vertices) v = to_parent_[v];
  return p;
}

std::vector<MemberRouter> build_member_routers(const Covering& covering, unsigned q) {
  std::vector<MemberRouter> out;
  for (std::size_t i = 0; i < covering.members.size(); ++i) {
    if (!covering.member_trees[i]) throw InfeasibleError("covering member " + std::to_string(i) + " is not super-efficient");
    out.emplace_back(covering.members[i], assign_labels(*covering.member_trees[i], q));
  }
  return out;
}

PerfectConstruction construct_perfect(unsigned m, unsigned k, const PeripherySpec& periphery,
                                      std::shared_ptr<const LinearCode> code, const Probability& p) {
  if (m < 2) throw InputError("construct-perfect needs at least two hubs");
  if (k == 0) throw InputError("construct-perfect needs k >= 1");
  if (!code) throw InputError("construct-perfect needs a code");
  for (const auto& row : classify_lengths(code->length(), code->min_distance(), code->field().order(), p, 2 * k))
    if (row.classification != Efficiency::Efficient)
      throw InfeasibleError("paths of length " + std::to_string(row.length) + " are not efficient; need every length up to " +
                            std::to_string(2 * k));

  std::vector<std::pair<std::string, std::string>> edges;
  unsigned next = m + 1;
  for (unsigned i = 1; i <= m; ++i)
    for (unsigned j = i + 1; j <= m; ++j) {
      std::string prev = std::to_string(i);
      for (unsigned s = 0; s + 1 < 2 * k; ++s) {
        std::string v = std::to_string(next++);
        edges.emplace_back(prev, v);
        prev = v;
      }
      edges.emplace_back(prev, std::to_string(j));
    }
  edges.insert(edges.end(), periphery.begin(), periphery.end());
  auto graph = std::make_shared<const SocialNetwork>(SocialNetwork::from_named_edges(edges));

  std::vector<VertexId> hubs;
  for (unsigned i = 1; i <= m; ++i) hubs.push_back(graph->id(std::to_string(i)));
  std::vector<unsigned> nearest(graph->vertex_count(), kUnreachable);
  for (VertexId h : hubs) {
    const auto dist = graph->bfs_distances(h);
    for (std::size_t v = 0; v < dist.size(); ++v) nearest[v] = std::min(nearest[v], dist[v]);
  }
  for (VertexId v = 0; v < graph->vertex_count(); ++v)
    if (nearest[v] > k) throw InputError("periphery vertex " + graph->name(v) + " lies farther than k from every hub");

  PerfectConstruction out{CodedNetwork::uniform(graph, std::move(code), p), hubs, {}};
  const auto balls = radius_balls(out.network, k);
  CoveringSet& cs = out.covering_set;
  cs.centers = hubs;
  cs.radius = k;
  std::vector<std::vector<VertexId>> members;
  std::vector<std::optional<SpanningTree>> trees;
  for (VertexId h : hubs) {
    members.push_back(balls[h].vertices);
    trees.push_back(balls[h].tree);
    cs.density = std::max(cs.density, balls[h].vertices.size());
  }
  cs.covering = assemble(out.network, std::move(members), std::move(trees));
  if (!cs.covering.is_perfect) throw InfeasibleError("the periphery breaks the perfect covering");
  fill_dimension(cs, balls, graph->vertex_count(), CoverOptions{}.exact_vertex_limit);
  return out;
}

std::pair<long long, long long> size_bounds(long long n, long long r, long long e) {
  if (n < 1 || r < 1 || e < r + 1) throw InputError("size bounds need n >= 1, r >= 1 and e >= r + 1");
  const long long pairs = n * (n - 1) / 2;
  return {r * n + pairs, n * e - pairs};
}

Influence influence(const CodedNetwork& net, const Covering& covering, VertexId alpha, unsigned m) {
  const auto holders = covering.members_containing(alpha);
  if (holders.empty()) throw InputError("vertex " + net.graph().name(alpha) + " is not covered");
  Influence out;
  std::vector<VertexId> reached;
  for (std::size_t i : holders) {
    const auto& member = covering.members[i];
    out.bound += member.size();
    const auto local_alpha =
        static_cast<VertexId>(std::lower_bound(member.begin(), member.end(), alpha) - member.begin());
    std::vector<unsigned> dist;
    if (const auto& tree = covering.member_trees[i]) {
      dist.resize(member.size());
      for (VertexId v = 0; v < member.size(); ++v) dist[v] = static_cast<unsigned>(tree->path(local_alpha, v).length());
    } else {
      dist = induced_subgraph(net.graph(), member).graph.bfs_distances(local_alpha);
    }
    for (VertexId v = 0; v < member.size(); ++v)
      if (dist[v] <= m) reached.push_back(member[v]);
  }
  std::sort(reached.begin(), reached.end());
  reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
  out.vertices = std::move(reached);
  out.count = out.vertices.size();
  out.bound_ok = out.count <= out.bound;
  return out;
}

}  // namespace codenet
