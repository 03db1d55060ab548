#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "codenet/covering.hpp"
#include "codenet/errors.hpp"
#include "test_support.hpp"

using namespace codenet;

namespace {

/// Every nonempty proper subset A of members: union(A) meets union(rest).
bool reachable_by_subsets(const std::vector<std::vector<VertexId>>& members) {
  const std::size_t m = members.size();
  for (std::uint32_t a = 1; a + 1 < (1U << m); ++a) {
    std::set<VertexId> inside;
    for (std::size_t i = 0; i < m; ++i)
      if (a >> i & 1U) inside.insert(members[i].begin(), members[i].end());
    bool meets = false;
    for (std::size_t i = 0; i < m && !meets; ++i)
      if (!(a >> i & 1U))
        for (VertexId v : members[i]) meets = meets || inside.count(v);
    if (!meets) return false;
  }
  return true;
}

std::vector<VertexId> ids(const SocialNetwork& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (auto n : names) out.push_back(g.id(n));
  return out;
}

std::vector<std::string> names(const SocialNetwork& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

CodedNetwork figure3_net(const char* p = "0.001") { return testing::load_net("figure3.edges", "binary_10_6_3.code", p); }

std::vector<std::vector<VertexId>> figure3_balls(const SocialNetwork& g) {
  return {ball_vertices(g, g.id("1"), 2), ball_vertices(g, g.id("2"), 2), ball_vertices(g, g.id("3"), 2)};
}

std::shared_ptr<const SocialNetwork> path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return std::make_shared<const SocialNetwork>(SocialNetwork::numbered(n, edges));
}

/// Smallest set of radius-r ball centers on a path graph whose balls cover it and
/// form a reachable family; a ball is usable when its own length is efficient.
std::optional<std::size_t> path_cover_oracle(std::size_t n, unsigned r, unsigned max_efficient_length) {
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::vector<VertexId>> balls;
    std::set<VertexId> covered;
    bool usable = true;
    for (std::size_t c = 0; c < n && usable; ++c) {
      if (!(mask >> c & 1U)) continue;
      const std::size_t lo = c >= r ? c - r : 0;
      const std::size_t hi = std::min(n - 1, c + r);
      usable = hi - lo <= max_efficient_length;
      std::vector<VertexId> b;
      for (std::size_t v = lo; v <= hi; ++v) b.push_back(static_cast<VertexId>(v));
      covered.insert(b.begin(), b.end());
      balls.push_back(b);
    }
    if (!usable || covered.size() != n || !reachable_by_subsets(balls)) continue;
    const std::size_t size = balls.size();
    if (!best || size < *best) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("reachability by intersection graph matches the subset definition") {
  std::mt19937_64 rng(29);
  int reachable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 12;
    const std::size_t universe = 10 + rng() % 30;
    std::vector<std::vector<VertexId>> members(m);
    for (auto& member : members) {
      const std::size_t size = 1 + rng() % 4;
      std::set<VertexId> s;
      while (s.size() < size) s.insert(static_cast<VertexId>(rng() % universe));
      member.assign(s.begin(), s.end());
    }
    const bool fast = intersection_graph_connected(members);
    CHECK(fast == reachable_by_subsets(members));
    reachable += fast;
  }
  CHECK(reachable > 0);
  CHECK(reachable < 200);
}

TEST_CASE("figure 3 balls form a perfect covering") {
  const auto net = figure3_net();
  const auto& g = net.graph();
  CHECK(g.vertex_count() == 40);
  const auto covering = validate_covering(net, figure3_balls(g));
  CHECK(covering.is_covering);
  CHECK(covering.is_reachable);
  CHECK(covering.is_efficient);
  CHECK(covering.is_perfect);
  CHECK(covering.members_containing(g.id("4")) == std::vector<std::size_t>{0, 1});

  const auto plan = plan_transmission(covering, g.id("1"), g.id("17"));
  CHECK(names(g, plan.handoffs) == std::vector<std::string>{"4"});
  CHECK(names(g, plan.correction_points) == std::vector<std::string>{"4", "17"});
  CHECK(plan.members == std::vector<std::size_t>{0, 1});

  const auto local = plan_transmission(covering, g.id("1"), g.id("8"));
  CHECK(local.handoffs.empty());
  CHECK(names(g, local.correction_points) == std::vector<std::string>{"8"});

  for (VertexId a = 0; a < g.vertex_count(); ++a)
    for (VertexId b = 0; b < g.vertex_count(); ++b) {
      const auto p = plan_transmission(covering, a, b);
      CHECK(p.correction_points.size() <= 2);
      CHECK(p.correction_points.back() == b);
      for (std::size_t i = 0; i < p.handoffs.size(); ++i) {
        const auto& left = covering.members[p.members[i]];
        const auto& right = covering.members[p.members[i + 1]];
        CHECK(std::binary_search(left.begin(), left.end(), p.handoffs[i]));
        CHECK(std::binary_search(right.begin(), right.end(), p.handoffs[i]));
      }
    }

  const auto routers = build_member_routers(covering, 2);
  REQUIRE(routers.size() == 3);
  const auto leg = routers[0].route(g.id("1"), g.id("4"));
  CHECK(leg.vertices.front() == g.id("1"));
  CHECK(leg.vertices.back() == g.id("4"));
  CHECK_NOTHROW(validate_path(g, leg));
  CHECK(classify_path(net, leg).classification == Efficiency::Efficient);
}

TEST_CASE("validate_covering edge cases") {
  const auto net = testing::load_net("figure1.edges", "binary_10_6_3.code", "0.01");
  const auto& g = net.graph();
  std::vector<VertexId> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  const auto whole = validate_covering(net, {all});
  CHECK(whole.is_covering);
  CHECK(whole.is_reachable);
  CHECK(whole.is_efficient);
  CHECK(whole.is_perfect);

  const auto split = validate_covering(net, {ids(g, {"1", "2", "3"}), ids(g, {"4", "5", "6"})});
  CHECK(split.is_covering);
  CHECK_FALSE(split.is_reachable);
  CHECK_FALSE(split.is_efficient);
  CHECK_FALSE(split.is_perfect);
  CHECK_THROWS_AS(plan_transmission(split, g.id("1"), g.id("6")), InfeasibleError);

  const auto partial = validate_covering(net, {ids(g, {"1", "2"})});
  CHECK_FALSE(partial.is_covering);
  CHECK_THROWS_AS(plan_transmission(whole, g.id("1"), 99), InputError);

  CHECK_THROWS_AS(validate_covering(net, {{}}), InputError);
  CHECK_THROWS_AS(validate_covering(net, {ids(g, {"1", "4"})}), InputError);
  CHECK_THROWS_AS(validate_covering(net, {}), InputError);
}

TEST_CASE("covering sets") {
  const auto net = figure3_net();
  const auto& g = net.graph();
  const auto cs = covering_set(net, 2);
  REQUIRE(cs);
  CHECK(names(g, cs->centers) == std::vector<std::string>{"1", "2", "3"});
  CHECK(cs->density == 17);
  CHECK(cs->radius == 2);
  CHECK(cs->covering.is_perfect);
  CHECK_THROWS_AS(covering_set(net, 0), InputError);

  std::vector<std::pair<std::size_t, std::size_t>> k5;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
  const auto complete = CodedNetwork::uniform(std::make_shared<const SocialNetwork>(SocialNetwork::numbered(5, k5)),
                                              testing::load_code("binary_10_6_3.code"), Probability::parse("0.01"));
  const auto one = covering_set(complete, 1);
  REQUIRE(one);
  CHECK(one->centers.size() == 1);
  CHECK(one->dimension == 1);
}

TEST_CASE("path graphs against exhaustive center search") {
  const auto code = testing::load_code("binary_10_6_3.code");
  const auto path = path_graph(11);
  // p = 0.06: only length 1 is efficient.  p = 0.04: lengths 1 and 2.
  const auto short_only = CodedNetwork::uniform(path, code, Probability::parse("0.06"));
  REQUIRE(classify_lengths(10, 3, 2, Probability::parse("0.06"), 2)[1].classification != Efficiency::Efficient);
  CHECK_FALSE(covering_set(short_only, 1).has_value());
  CHECK_FALSE(path_cover_oracle(11, 1, 1).has_value());

  const auto two = CodedNetwork::uniform(path, code, Probability::parse("0.04"));
  REQUIRE(classify_lengths(10, 3, 2, Probability::parse("0.04"), 3)[2].classification != Efficiency::Efficient);
  const auto cs = covering_set(two, 1);
  const auto oracle = path_cover_oracle(11, 1, 2);
  REQUIRE(cs);
  REQUIRE(oracle);
  CHECK(cs->dimension_exact);
  CHECK(cs->dimension == *oracle);
  CHECK(*oracle == 5);
  CHECK(cs->centers.size() >= *oracle);
  CHECK(validate_covering(two, cs->covering.members).is_efficient);

  for (std::size_t n = 2; n <= 9; ++n) {
    const auto g = path_graph(n);
    const auto net = CodedNetwork::uniform(g, code, Probability::parse("0.04"));
    for (unsigned r = 1; r <= 2; ++r) {
      const auto found = covering_set(net, r);
      const auto best = path_cover_oracle(n, r, 2);
      CHECK(found.has_value() == best.has_value());
      if (found && best) CHECK(found->dimension == *best);
    }
  }
}

TEST_CASE("covering sets of random networks validate as efficient") {
  const auto code = testing::load_code("binary_10_6_3.code");
  std::mt19937_64 rng(31);
  int found = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 14;
    const auto g = std::make_shared<const SocialNetwork>(testing::random_connected_graph(n, rng() % n, rng));
    const auto net = CodedNetwork::uniform(g, code, Probability(trial % 2 ? 0.04 : 0.02));
    for (unsigned r = 1; r <= 2; ++r) {
      const auto cs = covering_set(net, r);
      if (!cs) continue;
      ++found;
      const auto check = validate_covering(net, cs->covering.members);
      CHECK(check.is_efficient);
      CHECK(cs->dimension <= cs->centers.size());
      std::size_t largest = 0;
      for (const auto& m : check.members) largest = std::max(largest, m.size());
      CHECK(cs->density == largest);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("radius") {
  const auto net = figure3_net();
  const auto r = radius(net);
  CHECK(r >= 2);
  CHECK(is_super_efficient(net).super_efficient);
  CHECK(r == critical_value(net.graph()));
  CHECK(radius(figure3_net("3/4")) == 0);
  CHECK(radius(testing::load_net("ccp2012_sample.edges", "binary_10_6_3.code", "3/4")) == 0);
}

TEST_CASE("perfect construction") {
  const auto code = testing::load_code("binary_10_6_3.code");
  const auto p = Probability::parse("0.001");
  const auto built = construct_perfect(3, 2, {}, code, p);
  const auto& g = built.network.graph();
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 12);
  CHECK(built.covering_set.covering.is_perfect);
  CHECK(built.covering_set.dimension == 3);
  CHECK(built.covering_set.dimension_exact);
  CHECK(names(g, built.hubs) == std::vector<std::string>{"1", "2", "3"});
  const auto& members = built.covering_set.covering.members;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      std::vector<VertexId> common;
      std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(),
                            std::back_inserter(common));
      REQUIRE(common.size() == 1);
      CHECK(g.distance(common[0], built.hubs[a]) == 2);
      CHECK(g.distance(common[0], built.hubs[b]) == 2);
    }

  const auto tiny = construct_perfect(2, 1, {}, code, p);
  CHECK(tiny.network.graph().vertex_count() == 3);
  CHECK(topology_type(tiny.network.graph()) == TopologyType::TypeA);
  CHECK(critical_value(tiny.network.graph()) == 2);

  CHECK_THROWS_AS(construct_perfect(3, 2, {}, code, Probability::parse("0.05")), InfeasibleError);
  CHECK_THROWS_AS(construct_perfect(3, 2, {{"1", "90"}, {"90", "91"}, {"91", "92"}}, code, p), InputError);
}

TEST_CASE("construction with the figure 3 periphery reproduces figure 3") {
  const auto code = testing::load_code("binary_10_6_3.code");
  const auto file = read_edge_list_file(testing::data_path("figure3.periphery"));
  PeripherySpec periphery;
  for (const auto& e : file.graph->edges()) periphery.emplace_back(file.graph->name(e.u), file.graph->name(e.v));
  const auto built = construct_perfect(3, 2, periphery, code, Probability::parse("0.001"));
  const auto& mine = built.network.graph();
  CHECK(mine.vertex_count() == 40);
  CHECK(built.covering_set.covering.is_perfect);

  const std::map<std::string, std::string> to_figure{{"4", "8"},  {"5", "4"}, {"6", "7"},  {"7", "11"}, {"8", "6"},
                                                     {"9", "12"}, {"10", "9"}, {"11", "5"}, {"12", "10"}};
  auto rename = [&](const std::string& v) { return to_figure.count(v) ? to_figure.at(v) : v; };
  const auto figure = testing::load_graph("figure3.edges");
  std::set<std::pair<std::string, std::string>> expected, got;
  for (const auto& e : figure->edges()) expected.insert(std::minmax(figure->name(e.u), figure->name(e.v)));
  for (const auto& e : mine.edges()) got.insert(std::minmax(rename(mine.name(e.u)), rename(mine.name(e.v))));
  CHECK(got == expected);
}

TEST_CASE("generated perfect coverings") {
  const auto code = testing::load_code("binary_10_6_3.code");
  for (unsigned m = 2; m <= 4; ++m)
    for (unsigned k = 1; k <= 3; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const auto built = construct_perfect(m, k, {}, code, Probability::parse("0.001"));
      const auto& g = built.network.graph();
      CHECK(g.vertex_count() == m + m * (m - 1) / 2 * (2 * k - 1));
      const auto check = validate_covering(built.network, built.covering_set.covering.members);
      CHECK(check.is_perfect);
      for (VertexId a = 0; a < g.vertex_count(); ++a)
        for (VertexId b = 0; b < g.vertex_count(); ++b)
          CHECK(plan_transmission(check, a, b).correction_points.size() <= 2);
      const auto [lower, upper] = size_bounds(m, k, static_cast<long long>(built.covering_set.density));
      CHECK(lower <= static_cast<long long>(g.vertex_count()));
      CHECK(static_cast<long long>(g.vertex_count()) <= upper);
    }
}

TEST_CASE("size bounds") {
  CHECK(size_bounds(3, 2, 10) == std::pair<long long, long long>{9, 27});
  CHECK(size_bounds(1, 2, 5) == std::pair<long long, long long>{2, 5});
  CHECK(size_bounds(1, 4, 9) == std::pair<long long, long long>{4, 9});
  CHECK_THROWS_AS(size_bounds(0, 2, 5), InputError);
  CHECK_THROWS_AS(size_bounds(3, 0, 5), InputError);
  CHECK_THROWS_AS(size_bounds(3, 2, 2), InputError);

  const auto g = testing::load_graph("figure3.edges");
  std::size_t e = 0;
  for (const auto& b : figure3_balls(*g)) e = std::max(e, b.size());
  CHECK(e == 17);
  const auto [lower, upper] = size_bounds(3, 2, static_cast<long long>(e));
  CHECK(lower == 9);
  CHECK(upper == 48);
  CHECK(lower <= 40);
  CHECK(40 <= upper);
}

TEST_CASE("influence") {
  const auto net = figure3_net();
  const auto& g = net.graph();
  const auto covering = validate_covering(net, figure3_balls(g));

  const auto zero = influence(net, covering, g.id("4"), 0);
  CHECK(zero.vertices == std::vector<VertexId>{g.id("4")});
  CHECK(zero.count == 1);

  const auto lone = influence(net, covering, g.id("1"), 40);
  CHECK(lone.count == covering.members[0].size());
  CHECK(lone.bound == covering.members[0].size());
  CHECK(lone.bound_ok);

  const auto shared = influence(net, covering, g.id("4"), 40);
  CHECK(shared.bound == covering.members[0].size() + covering.members[1].size());
  CHECK(shared.count <= shared.bound);
  CHECK(shared.bound_ok);
  std::set<VertexId> both(covering.members[0].begin(), covering.members[0].end());
  both.insert(covering.members[1].begin(), covering.members[1].end());
  CHECK(shared.count == both.size());

  const auto partial = validate_covering(net, {figure3_balls(g)[0]});
  CHECK_THROWS_AS(influence(net, partial, g.id("17"), 1), InputError);
}
