#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "codenet/errors.hpp"
#include "codenet/labeling.hpp"
#include "test_support.hpp"

using namespace codenet;

namespace {

std::string word_str(const Word& w) {
  std::string s;
  for (auto x : w) s += std::to_string(x);
  return s;
}

SpanningTree figure1_tree(const SocialNetwork& g) {
  const auto t = testing::load_graph("figure1_tree.edges");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : t->edges()) edges.emplace_back(g.id(t->name(e.u)), g.id(t->name(e.v)));
  return SpanningTree::from_edges(g.vertex_count(), g.id("6"), edges);
}

std::vector<std::string> names_of(const SocialNetwork& g, const Path& p) {
  std::vector<std::string> out;
  for (auto v : p.vertices) out.push_back(g.name(v));
  return out;
}

std::set<std::pair<VertexId, VertexId>> edge_set(const std::vector<Edge>& edges) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (const auto& e : edges) s.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  return s;
}

/// Spanning tree count from the Laplacian minor determinant.
long long matrix_tree_count(const SocialNetwork& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  std::vector<std::vector<double>> m(n - 1, std::vector<double>(n - 1, 0.0));
  for (const auto& e : g.edges()) {
    if (e.u > 0) m[e.u - 1][e.u - 1] += 1;
    if (e.v > 0) m[e.v - 1][e.v - 1] += 1;
    if (e.u > 0 && e.v > 0) {
      m[e.u - 1][e.v - 1] -= 1;
      m[e.v - 1][e.u - 1] -= 1;
    }
  }
  double det = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c; r + 1 < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) < 1e-12) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r + 1 < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k + 1 < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return std::llround(det);
}

/// True when the edge subset (bitmask over g's edges) is a spanning tree.
bool is_spanning_tree(const SocialNetwork& g, std::uint32_t mask) {
  const std::size_t n = g.vertex_count();
  if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 != n) return false;
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!(mask >> e & 1U)) continue;
    const auto a = find(g.edges()[e].u);
    const auto b = find(g.edges()[e].v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

/// Worst per-pair expected Hamming over the network restricted to the masked edges,
/// binary channel, n symbols; paths by BFS in the restricted graph.
double worst_expectation(const SocialNetwork& g, const std::vector<double>& ps, std::uint32_t mask, std::size_t n) {
  const std::size_t v = g.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<double> eps;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (mask >> e & 1U) {
      edges.emplace_back(g.edges()[e].u, g.edges()[e].v);
      eps.push_back(ps[e]);
    }
  const auto sub = SocialNetwork::numbered(v, edges);
  double worst = 0;
  for (VertexId a = 0; a < v; ++a)
    for (VertexId b = a + 1; b < v; ++b) {
      const auto p = shortest_path(sub, a, b);
      double differs = 0;
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const double pe = eps[*sub.edge_id(p.vertices[i], p.vertices[i + 1])];
        differs = differs * (1 - pe) + (1 - differs) * pe;
      }
      worst = std::max(worst, n * differs);
    }
  return worst;
}

SocialNetwork tree_graph(const SpanningTree& t) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : t.edges()) edges.emplace_back(e.u, e.v);
  return SocialNetwork::numbered(t.vertex_count(), edges);
}

}  // namespace

TEST_CASE("figure 1 labels and routes") {
  const auto g = testing::load_graph("figure1.edges");
  const auto tree = figure1_tree(*g);
  tree.validate_in(*g);
  const auto labeling = assign_labels(tree, 2);
  CHECK(labeling.label_length() == 5);
  CHECK(word_str(labeling.label(g->id("6"))) == "00000");
  CHECK(word_str(labeling.label(g->id("4"))) == "10000");
  CHECK(word_str(labeling.label(g->id("3"))) == "11000");
  CHECK(word_str(labeling.label(g->id("5"))) == "10100");
  CHECK(word_str(labeling.label(g->id("2"))) == "10110");
  CHECK(word_str(labeling.label(g->id("1"))) == "10101");

  CHECK(labeling.next_hop(g->id("6"), g->id("1")) == g->id("4"));
  CHECK(labeling.next_hop(g->id("3"), g->id("2")) == g->id("4"));
  CHECK(labeling.next_hop(g->id("5"), g->id("2")) == g->id("2"));
  CHECK(names_of(*g, labeling.route(g->id("6"), g->id("1"))) == std::vector<std::string>{"6", "4", "5", "1"});
  CHECK(names_of(*g, labeling.route(g->id("3"), g->id("2"))) == std::vector<std::string>{"3", "4", "5", "2"});
  CHECK(labeling.route(g->id("3"), g->id("3")).vertices == std::vector<VertexId>{g->id("3")});
  CHECK_THROWS_AS(labeling.next_hop(g->id("3"), g->id("3")), InputError);

  const auto steps = labeling.route_steps(g->id("3"), g->id("2"));
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].move == RouteMove::Ascend);
  CHECK(steps[1].move == RouteMove::Descend);
  CHECK(steps[2].move == RouteMove::Descend);
  CHECK(labeling.label_parent(g->id("1")) == g->id("5"));
  CHECK_THROWS_AS(labeling.label_parent(g->id("6")), InputError);
  CHECK(labeling.is_label_ancestor(g->id("4"), g->id("2")));
  CHECK_FALSE(labeling.is_label_ancestor(g->id("3"), g->id("2")));
  CHECK(labeling.vertex_with_label(Word{1, 0, 1}) == g->id("5"));
  CHECK_FALSE(labeling.vertex_with_label(Word{0, 1}).has_value());
}

TEST_CASE("degenerate and small trees") {
  const auto single = SpanningTree::from_edges(1, 0, {});
  const auto one = assign_labels(single, 2);
  CHECK(one.label_length() == 0);
  CHECK(one.label(0).empty());

  const auto star = SpanningTree::from_parents(0, {std::nullopt, 0U, 0U});
  const auto labels = assign_labels(star, 2);
  CHECK(labels.label(1) == Word{1, 0});
  CHECK(labels.label(2) == Word{0, 1});

  const auto ternary = assign_labels(star, 3);
  CHECK(ternary.label(1) == Word{1});
  CHECK(ternary.label(2) == Word{2});

  CHECK_THROWS_AS(SpanningTree::from_edges(3, 0, {{0, 1}}), InputError);
  CHECK_THROWS_AS(SpanningTree::from_edges(3, 0, {{0, 1}, {1, 2}, {0, 2}}), InputError);
}

TEST_CASE("random trees: injective labels, parent recovery and tree routes") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const auto edges = testing::random_tree_edges(n, rng);
    std::vector<std::pair<VertexId, VertexId>> tree_edges;
    for (auto [a, b] : edges) tree_edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    const auto root = static_cast<VertexId>(rng() % n);
    const auto tree = SpanningTree::from_edges(n, root, tree_edges);
    const unsigned q = trial % 2 ? 2 : 3;
    const auto labeling = assign_labels(tree, q);
    const auto tg = tree_graph(tree);

    std::set<Word> seen;
    for (VertexId v = 0; v < n; ++v) {
      CHECK(seen.insert(labeling.label(v)).second);
      if (v == root) {
        const auto zero = labeling.label(v);
        CHECK(std::all_of(zero.begin(), zero.end(), [](Symbol s) { return s == 0; }));
        continue;
      }
      Word w = labeling.label(v);
      auto last = std::find_if(w.rbegin(), w.rend(), [](Symbol s) { return s != 0; });
      REQUIRE(last != w.rend());
      *last = 0;
      CHECK(labeling.vertex_with_label(w) == tree.parent(v));
    }

    const std::size_t pairs = std::min<std::size_t>(n, 60);
    for (VertexId a = 0; a < pairs; ++a)
      for (VertexId b = 0; b < pairs; ++b) {
        const auto r = labeling.route(a, b);
        CHECK(r == shortest_path(tg, a, b));
        CHECK(r == tree.path(a, b));
        auto back = labeling.route(b, a).vertices;
        std::reverse(back.begin(), back.end());
        CHECK(back == r.vertices);
      }
  }
}

TEST_CASE("labels stay injective on large trees") {
  std::mt19937_64 rng(11);
  for (unsigned q : {2U, 3U, 5U}) {
    const std::size_t n = 10000;
    const auto edges = testing::random_tree_edges(n, rng);
    std::vector<std::optional<VertexId>> parent(n);
    for (auto [a, b] : edges) parent[b] = static_cast<VertexId>(a);
    const auto tree = SpanningTree::from_parents(0, parent);
    const auto labeling = assign_labels(tree, q);
    std::set<Word> seen;
    bool injective = true;
    for (VertexId v = 0; v < n; ++v) injective = seen.insert(labeling.trimmed_label(v)).second && injective;
    CHECK(injective);
    bool parents = true;
    for (VertexId v = 1; v < n; ++v) parents = parents && labeling.label_parent(v) == *parent[v];
    CHECK(parents);
  }
}

TEST_CASE("tree routes are shortest paths in TypeA networks") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto g = SocialNetwork::numbered(n, testing::random_tree_edges(n, rng));
    REQUIRE(topology_type(g) == TopologyType::TypeA);
    const auto tree = bfs_tree(g, static_cast<VertexId>(rng() % n));
    const auto labeling = assign_labels(tree, 2);
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b) CHECK(labeling.route(a, b) == shortest_path(g, a, b));
  }
}

TEST_CASE("spanning tree enumeration matches the matrix-tree theorem") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = testing::random_connected_graph(n, rng() % 8, rng);
    long long count = 0;
    unsigned min_diameter = ~0U;
    for_each_spanning_tree(g, [&](const std::vector<Edge>& edges) {
      ++count;
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
      min_diameter = std::min(min_diameter, SpanningTree::from_edges(n, 0, pairs).diameter());
      return false;
    });
    CHECK(count == matrix_tree_count(g));
    const auto best = min_diameter_spanning_tree(g);
    CHECK(best.diameter() == min_diameter);
    CHECK_NOTHROW(best.validate_in(g));
  }
  const auto k4 = SocialNetwork::numbered(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  long long k4_count = 0;
  for_each_spanning_tree(k4, [&](const std::vector<Edge>&) { return ++k4_count, false; });
  CHECK(k4_count == 16);
}

TEST_CASE("figure 1 is super-efficient with the printed tree") {
  const auto g = testing::load_graph("figure1.edges");
  const auto code = testing::load_code("binary_10_6_3.code");
  const auto net = CodedNetwork::uniform(g, code, Probability::parse("0.01"));
  const auto result = is_super_efficient(net);
  CHECK(result.super_efficient);
  CHECK(result.network_class == Efficiency::Efficient);
  REQUIRE(result.tree);
  CHECK(edge_set(result.tree->edges()) == edge_set(figure1_tree(*g).edges()));
  CHECK(classify_tree(net, figure1_tree(*g)) == Efficiency::Efficient);

  const auto noisy = CodedNetwork::uniform(g, code, Probability::parse("3/4"));
  const auto bad = is_super_efficient(noisy);
  CHECK_FALSE(bad.super_efficient);
  CHECK(bad.network_class == Efficiency::Inefficient);
  CHECK_FALSE(bad.tree);
}

TEST_CASE("efficient trees are super-efficient with themselves") {
  const auto code = testing::load_code("binary_10_6_3.code");
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const auto g = std::make_shared<const SocialNetwork>(SocialNetwork::numbered(n, testing::random_tree_edges(n, rng)));
    const auto net = CodedNetwork::uniform(g, code, Probability(0.005));
    if (classify_network(net).classification != Efficiency::Efficient) continue;
    const auto result = is_super_efficient(net);
    CHECK(result.super_efficient);
    REQUIRE(result.tree);
    CHECK(edge_set(result.tree->edges()) == edge_set(g->edges()));
  }
}

TEST_CASE("super-efficiency verdicts against brute force on small graphs") {
  const auto code = testing::load_code("binary_10_6_3.code");
  std::mt19937_64 rng(23);
  int agreed = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto g = std::make_shared<const SocialNetwork>(testing::random_connected_graph(n, rng() % 6, rng));
    std::vector<double> ps;
    std::vector<Probability> probs;
    for (std::size_t e = 0; e < g->edge_count(); ++e) {
      ps.push_back(std::uniform_real_distribution<double>(0.0, 0.06)(rng));
      probs.emplace_back(ps.back());
    }
    const CodedNetwork net(g, code, probs);
    const std::uint32_t all = (1U << g->edge_count()) - 1;
    const bool efficient = worst_expectation(*g, ps, all, 10) <= 1 + 1e-12;
    bool oracle = false;
    if (efficient)
      for (std::uint32_t mask = 0; mask <= all && !oracle; ++mask)
        oracle = is_spanning_tree(*g, mask) && worst_expectation(*g, ps, mask, 10) <= 1 + 1e-12;
    const auto result = is_super_efficient(net);
    CHECK(result.super_efficient == oracle);
    if (result.super_efficient) {
      REQUIRE(result.tree);
      CHECK(classify_tree(net, *result.tree) == Efficiency::Efficient);
      const auto labeling = assign_labels(*result.tree, 2);
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
          CHECK(classify_path(net, labeling.route(a, b)).classification == Efficiency::Efficient);
    }
    agreed += result.super_efficient == oracle;
  }
  CHECK(agreed == 120);
}

TEST_CASE("simplex labels on complete graphs") {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) edges.emplace_back(a, b);
  const auto k5 = SocialNetwork::numbered(5, edges);
  const auto labels = assign_simplex_labels(k5);
  CHECK(labels.order == 3);
  REQUIRE(labels.labels.size() == 5);
  CHECK(labels.labels[0].size() == 7);
  CHECK(labels.equidistant());
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) CHECK(hamming_distance(labels.labels[a], labels.labels[b]) == 4);
  CHECK(labels.route(1, 3).vertices == std::vector<VertexId>{1, 3});
  CHECK_THROWS_AS(assign_simplex_labels(*testing::load_graph("figure1.edges")), InputError);
}
