#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codenet/coded_network.hpp"
#include "codenet/graph.hpp"
#include "codenet/labeling.hpp"

namespace codenet {

/// A family of vertex subsets, each inducing a sub-network, with its validity flags.
struct Covering {
  std::vector<std::vector<VertexId>> members;  // each ascending
  bool is_covering = false;
  bool is_reachable = false;
  bool is_efficient = false;
  bool is_perfect = false;
  /// Witness spanning tree per member in member-local ids (ascending order of
  /// the member's vertices); empty when the member is not super-efficient.
  std::vector<std::optional<SpanningTree>> member_trees;

  /// Indices of the members containing v, ascending.
  std::vector<std::size_t> members_containing(VertexId v) const;
};

/// Whether the graph on members with an edge for each intersecting pair is connected.
bool intersection_graph_connected(std::span<const std::vector<VertexId>> members);

/// Computes all flags. Throws InputError for an empty member, an unknown
/// vertex, or a member whose induced subgraph is disconnected.
Covering validate_covering(const CodedNetwork& net, std::vector<std::vector<VertexId>> members);

struct CoveringSet {
  std::vector<VertexId> centers;  // ascending
  unsigned radius = 0;
  /// Largest ball size.
  std::size_t density = 0;
  /// Smallest covering-set size found for this radius.
  std::size_t dimension = 0;
  bool dimension_exact = false;
  Covering covering;
};

struct CoverOptions {
  /// Run the exact minimum search when the graph has at most this many vertices.
  std::size_t exact_vertex_limit = 24;
};

/// Greedy covering set of radius-r balls: repeatedly takes the eligible ball
/// covering the most uncovered vertices (smallest center on ties), then adds
/// balls joining the most intersection components until the family is
/// reachable. A ball is eligible when its induced sub-network is
/// super-efficient. Returns none when no such family exists. Throws InputError
/// for r == 0 or a disconnected graph.
std::optional<CoveringSet> covering_set(const CodedNetwork& net, unsigned r, const CoverOptions& options = {});

/// Largest r <= the critical value for which covering_set succeeds; 0 if none.
unsigned radius(const CodedNetwork& net, const CoverOptions& options = {.exact_vertex_limit = 0});

struct TransmissionLeg {
  std::size_t member = 0;
  VertexId from = 0;
  VertexId to = 0;
};

struct TransmissionPlan {
  VertexId source = 0;
  VertexId target = 0;
  /// Member indices visited, consecutive ones intersecting.
  std::vector<std::size_t> members;
  /// handoffs[i] lies in members[i] and members[i + 1].
  std::vector<VertexId> handoffs;
  /// Where decoding runs: every handoff, then the target.
  std::vector<VertexId> correction_points;

  std::vector<TransmissionLeg> legs() const;
};

/// Fewest-member route through the intersection graph from a member holding
/// source to one holding target; handoffs are the smallest vertex of each
/// consecutive intersection. Throws InputError for uncovered endpoints and
/// InfeasibleError when the covering is not reachable and efficient.
TransmissionPlan plan_transmission(const Covering& covering, VertexId source, VertexId target);

/// Label routing inside one member, expressed in parent vertex ids.
class MemberRouter {
 public:
  MemberRouter(std::vector<VertexId> to_parent, Labeling labeling);

  const Labeling& labeling() const noexcept { return labeling_; }
  const std::vector<VertexId>& vertices() const noexcept { return to_parent_; }
  bool contains(VertexId v) const;
  Path route(VertexId from, VertexId to) const;

 private:
  VertexId local(VertexId v) const;

  std::vector<VertexId> to_parent_;
  Labeling labeling_;
};

/// One router per member from its witness tree. Throws InfeasibleError when a
/// member has no witness.
std::vector<MemberRouter> build_member_routers(const Covering& covering, unsigned q);

/// Periphery vertex spec for construct_perfect: extra edges by name. Core
/// vertices are named "1".."m" (hubs) followed by the chain vertices.
using PeripherySpec = std::vector<std::pair<std::string, std::string>>;

struct PerfectConstruction {
  CodedNetwork network;
  std::vector<VertexId> hubs;
  CoveringSet covering_set;
};

/// Hubs 1..m joined pairwise by chains of 2k-1 new vertices (pairs in
/// lexicographic order, chain vertices numbered from m+1 and listed from the
/// lower hub), plus the periphery edges. Every vertex must lie within k of a
/// hub. Throws InfeasibleError unless every path of length <= 2k is efficient
/// under (code, p), or if the periphery breaks perfection.
PerfectConstruction construct_perfect(unsigned m, unsigned k, const PeripherySpec& periphery,
                                      std::shared_ptr<const LinearCode> code, const Probability& p);

/// (r n + C(n,2), n e - C(n,2)). Throws InputError unless n >= 1, r >= 1, e >= r + 1.
std::pair<long long, long long> size_bounds(long long n, long long r, long long e);

struct Influence {
  std::vector<VertexId> vertices;  // ascending
  std::size_t count = 0;
  std::size_t bound = 0;
  bool bound_ok = false;
};

/// Vertices of the members holding alpha within distance m of it, measured in
/// each member's witness tree (or the member's induced graph if it has none).
Influence influence(const CodedNetwork& net, const Covering& covering, VertexId alpha, unsigned m);

}  // namespace codenet
