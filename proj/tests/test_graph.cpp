#include <functional>
#include <random>

#include "doctest.h"

#include "codenet/errors.hpp"
#include "codenet/graph.hpp"
#include "test_support.hpp"

using namespace codenet;

namespace {

std::vector<std::string> names_of(const SocialNetwork& g, const Path& p) {
  std::vector<std::string> out;
  for (auto v : p.vertices) out.push_back(g.name(v));
  return out;
}

/// Independent cycle detection by DFS with parent tracking.
bool has_cycle(const SocialNetwork& g) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::function<bool(VertexId, std::optional<VertexId>)> dfs = [&](VertexId v, std::optional<VertexId> parent) {
    seen[v] = 1;
    for (VertexId w : g.neighbors(v)) {
      if (parent && w == *parent) continue;
      if (seen[w] || dfs(w, v)) return true;
    }
    return false;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!seen[v] && dfs(v, std::nullopt)) return true;
  return false;
}

}  // namespace

TEST_CASE("natural name order") {
  CHECK(natural_less("2", "10"));
  CHECK_FALSE(natural_less("10", "2"));
  CHECK(natural_less("9", "Alice"));
  CHECK(natural_less("Alice", "Bob"));
  const auto g = SocialNetwork::from_named_edges({{"10", "2"}, {"2", "b"}, {"b", "a"}});
  CHECK(g.names() == std::vector<std::string>{"2", "10", "a", "b"});
}

TEST_CASE("construction rejects self-loops and duplicate edges") {
  CHECK_THROWS_AS(SocialNetwork::from_named_edges({{"a", "a"}}), InputError);
  CHECK_THROWS_AS(SocialNetwork::from_named_edges({{"a", "b"}, {"b", "a"}}), InputError);
}

TEST_CASE("figure 1 network") {
  const auto g = testing::load_graph("figure1.edges");
  CHECK(g->vertex_count() == 6);
  CHECK(g->edge_count() == 7);
  CHECK(names_of(*g, shortest_path(*g, g->id("6"), g->id("1"))) == std::vector<std::string>{"6", "4", "5", "1"});
  CHECK(shortest_path(*g, g->id("3"), g->id("3")).length() == 0);
  CHECK(critical_value(*g) == 3);
  CHECK(topology_type(*g) == TopologyType::TypeB);
}

TEST_CASE("sample chain") {
  const auto g = testing::load_graph("ccp2012_sample.edges");
  CHECK(g->vertex_count() == 5);
  CHECK(g->edge_count() == 4);
  CHECK(names_of(*g, shortest_path(*g, g->id("LiuYuan"), g->id("HuChunhua"))) ==
        std::vector<std::string>{"LiuYuan", "XiJinping", "LiZhanshu", "HuJintao", "HuChunhua"});
}

TEST_CASE("critical value of small graphs") {
  CHECK(critical_value(SocialNetwork::numbered(2, {{0, 1}})) == 1);
  CHECK(critical_value(SocialNetwork::numbered(3, {{0, 1}, {1, 2}})) == 2);
  CHECK_THROWS_AS(critical_value(SocialNetwork::numbered(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("balls") {
  const auto g = testing::load_graph("figure3.edges");
  const auto four = g->id("4");
  CHECK(ball_vertices(*g, four, 0) == std::vector<VertexId>{four});
  CHECK(ball(*g, four, 0).graph.edge_count() == 0);
  auto b1 = ball(*g, four, 1);
  std::vector<std::string> names;
  for (auto v : b1.to_parent) names.push_back(g->name(v));
  CHECK(names == std::vector<std::string>{"4", "7", "8"});
  CHECK(ball_vertices(*g, g->id("1"), 2).size() == 16);
  CHECK(ball_vertices(*g, g->id("2"), 2).size() == 17);
  CHECK(ball_vertices(*g, g->id("3"), 2).size() == 10);
  CHECK(ball(*g, four, critical_value(*g)).graph.vertex_count() == g->vertex_count());
}

TEST_CASE("topology types") {
  // Star with an extra pendant layer, and K4.
  CHECK(topology_type(SocialNetwork::numbered(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}})) == TopologyType::TypeA);
  CHECK(topology_type(SocialNetwork::numbered(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == TopologyType::TypeC);
  CHECK(topology_type(SocialNetwork::numbered(2, {{0, 1}})) == TopologyType::TypeA);
  CHECK_THROWS_AS(topology_type(SocialNetwork::numbered(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("path validation") {
  const auto g = testing::load_graph("figure1.edges");
  CHECK_NOTHROW(validate_path(*g, Path{{g->id("6"), g->id("4"), g->id("5")}}));
  CHECK_THROWS_AS(validate_path(*g, Path{{g->id("6"), g->id("5")}}), InputError);
  CHECK_THROWS_AS(validate_path(*g, Path{{g->id("4"), g->id("5"), g->id("4")}}), InputError);
}

TEST_CASE("random graphs agree with Floyd-Warshall, symmetric paths and nested balls") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    const auto g = testing::random_connected_graph(n, rng() % (2 * n), rng);
    const auto fw = testing::floyd_warshall(g);
    unsigned diameter = 0;
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = 0; b < n; ++b) {
        CHECK(g.distance(a, b) == fw[a][b]);
        diameter = std::max(diameter, fw[a][b]);
        const auto p = shortest_path(g, a, b);
        CHECK(p.length() == fw[a][b]);
        CHECK(shortest_path(g, b, a).length() == p.length());
        CHECK_NOTHROW(validate_path(g, p));
      }
    CHECK(critical_value(g) == diameter);
    const VertexId c = static_cast<VertexId>(rng() % n);
    for (unsigned r = 0; r < 4; ++r) {
      const auto small = ball_vertices(g, c, r);
      const auto large = ball_vertices(g, c, r + 1);
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
    CHECK((topology_type(g) == TopologyType::TypeA) == !has_cycle(g));
  }
}

TEST_CASE("shortest paths break ties lexicographically") {
  // Square 0-1-3, 0-2-3: both length 2; the smaller sequence goes through 1.
  const auto g = SocialNetwork::numbered(4, {{0, 2}, {2, 3}, {0, 1}, {1, 3}});
  CHECK(shortest_path(g, 0, 3).vertices == std::vector<VertexId>{0, 1, 3});
  CHECK(shortest_path(g, 3, 0).vertices == std::vector<VertexId>{3, 1, 0});
}
