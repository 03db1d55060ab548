#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "codenet/coded_network.hpp"
#include "codenet/covering.hpp"
#include "codenet/graph.hpp"
#include "codenet/linear_code.hpp"
#include "codenet/probability.hpp"

namespace codenet {

/// Parsed edge list: the graph plus the optional per-edge probability column,
/// indexed by EdgeId (file order).
struct NetworkFile {
  std::shared_ptr<const SocialNetwork> graph;
  std::vector<std::optional<Probability>> edge_probabilities;
};

/// One edge per line, `a<TAB>b[<TAB>p]`; `#` starts a comment line. Lines
/// without a tab are split on whitespace. Throws ParseError with the line
/// number on malformed lines, self-loops and duplicate edges.
NetworkFile read_edge_list(std::istream& in);
NetworkFile read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const SocialNetwork& g,
                     const std::vector<std::optional<Probability>>& probabilities = {});

/// Per-edge probabilities from the file win over the global one. Throws
/// InputError when an edge has neither.
CodedNetwork make_coded_network(const NetworkFile& file, std::shared_ptr<const LinearCode> code,
                                const std::optional<Probability>& global_p);

/// Key/value code file:
///   q = 2
///   n = 7
///   k = 4
///   generator:      (n rows of k symbols)
///   parity:         (optional, n-k rows of n symbols)
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::filesystem::path& path);
void write_code(std::ostream& out, const LinearCode& code);

/// Covering JSON: member vertex names plus flags and, for covering sets, centers,
/// radius, density and dimension.
nlohmann::json covering_to_json(const SocialNetwork& g, const Covering& covering);
nlohmann::json covering_set_to_json(const SocialNetwork& g, const CoveringSet& cs);
/// Member vertex sets from covering JSON. Throws InputError on unknown names.
std::vector<std::vector<VertexId>> members_from_json(const SocialNetwork& g, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace codenet
