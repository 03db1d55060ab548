#include "codenet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "codenet/errors.hpp"

namespace codenet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      out.emplace_back(trim(line.substr(start, tab == std::string_view::npos ? tab : tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
  } else {
    std::istringstream ss{std::string(line)};
    for (std::string f; ss >> f;) out.push_back(f);
  }
  return out;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

unsigned parse_unsigned(std::string_view text, std::size_t line, const char* what) {
  unsigned v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + std::string(text) + "'",
                     line);
  return v;
}

}  // namespace

NetworkFile read_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::optional<Probability>> probabilities;
  std::set<std::pair<std::string, std::string>> seen;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    auto fields = split_fields(text);
    if (fields.size() < 2 || fields.size() > 3)
      throw ParseError("expected 'a<TAB>b' or 'a<TAB>b<TAB>p', got " + std::to_string(fields.size()) + " fields", line);
    if (fields[0].empty() || fields[1].empty()) throw ParseError("empty vertex name", line);
    if (fields[0] == fields[1]) throw ParseError("self-loop at vertex '" + fields[0] + "'", line);
    auto key = std::minmax(fields[0], fields[1]);
    if (!seen.emplace(key.first, key.second).second)
      throw ParseError("duplicate edge " + fields[0] + " - " + fields[1], line);
    std::optional<Probability> p;
    if (fields.size() == 3) {
      try {
        p = Probability::parse(fields[2]);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line);
      }
    }
    edges.emplace_back(std::move(fields[0]), std::move(fields[1]));
    probabilities.push_back(std::move(p));
  }
  if (edges.empty()) throw InputError("no edges");
  NetworkFile file;
  file.graph = std::make_shared<const SocialNetwork>(SocialNetwork::from_named_edges(edges));
  file.edge_probabilities = std::move(probabilities);
  return file;
}

NetworkFile read_edge_list_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const SocialNetwork& g,
                     const std::vector<std::optional<Probability>>& probabilities) {
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << g.name(edges[e].u) << '\t' << g.name(edges[e].v);
    if (e < probabilities.size() && probabilities[e]) out << '\t' << probabilities[e]->str();
    out << '\n';
  }
}

CodedNetwork make_coded_network(const NetworkFile& file, std::shared_ptr<const LinearCode> code,
                                const std::optional<Probability>& global_p) {
  const auto& g = *file.graph;
  std::vector<Probability> probabilities;
  probabilities.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& own = e < file.edge_probabilities.size() ? file.edge_probabilities[e] : std::nullopt;
    if (own)
      probabilities.push_back(*own);
    else if (global_p)
      probabilities.push_back(*global_p);
    else
      throw InputError("edge " + g.name(g.edges()[e].u) + " - " + g.name(g.edges()[e].v) +
                       " has no error probability; pass --p or add a third column");
  }
  return CodedNetwork(file.graph, std::move(code), std::move(probabilities));
}

LinearCode read_code(std::istream& in) {
  std::optional<unsigned> q, n, k;
  std::vector<std::vector<Symbol>> generator, parity;
  std::vector<std::vector<Symbol>>* block = nullptr;
  std::size_t block_cols = 0;
  std::size_t block_rows = 0;
  std::string raw;
  std::size_t line = 0;

  auto require_header = [&](const char* name) {
    if (!q || !n || !k) throw ParseError(std::string("'") + name + ":' must follow q, n and k", line);
    if (*k == 0 || *k > *n) throw ParseError("code dimensions need 1 <= k <= n", line);
  };

  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    if (text == "generator:" || text == "parity:") {
      require_header(text == "generator:" ? "generator" : "parity");
      if (block && block->size() != block_rows) throw ParseError("previous matrix block is incomplete", line);
      const bool gen = text == "generator:";
      block = gen ? &generator : &parity;
      if (!block->empty()) throw ParseError("matrix block given twice", line);
      block_cols = gen ? *k : *n;
      block_rows = gen ? *n : *n - *k;
      continue;
    }
    if (const auto eq = text.find('='); eq != std::string_view::npos) {
      const auto key = trim(text.substr(0, eq));
      const auto value = trim(text.substr(eq + 1));
      if (block) throw ParseError("key '" + std::string(key) + "' after a matrix block", line);
      std::optional<unsigned>* slot = key == "q" ? &q : key == "n" ? &n : key == "k" ? &k : nullptr;
      if (!slot) throw ParseError("unknown key '" + std::string(key) + "'", line);
      if (slot->has_value()) throw ParseError("key '" + std::string(key) + "' given twice", line);
      *slot = parse_unsigned(value, line, "key");
      continue;
    }
    if (!block) throw ParseError("unexpected line '" + std::string(text) + "'", line);
    if (block->size() == block_rows) throw ParseError("too many matrix rows", line);
    std::vector<Symbol> row;
    std::istringstream ss{std::string(text)};
    for (std::string tok; ss >> tok;) {
      const unsigned v = parse_unsigned(tok, line, "matrix entry");
      if (v >= *q) throw ParseError("entry " + tok + " is outside F_" + std::to_string(*q), line);
      row.push_back(v);
    }
    if (row.size() != block_cols)
      throw ParseError("expected " + std::to_string(block_cols) + " entries, got " + std::to_string(row.size()), line);
    block->push_back(std::move(row));
  }
  if (!q || !n || !k) throw InputError("code file must define q, n and k");
  if (*k == 0 || *k > *n) throw InputError("code dimensions need 1 <= k <= n");
  if (generator.size() != *n)
    throw InputError("generator needs " + std::to_string(*n) + " rows, got " + std::to_string(generator.size()));
  if (!parity.empty() && parity.size() != *n - *k)
    throw InputError("parity needs " + std::to_string(*n - *k) + " rows, got " + std::to_string(parity.size()));
  PrimeField field(*q);
  std::optional<Matrix> parity_matrix;
  if (!parity.empty()) parity_matrix = Matrix::from_rows(parity);
  return LinearCode(field, Matrix::from_rows(generator), std::move(parity_matrix));
}

LinearCode read_code_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return read_code(in);
  } catch (const ParseError& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

void write_code(std::ostream& out, const LinearCode& code) {
  out << "q = " << code.field().order() << "\nn = " << code.length() << "\nk = " << code.dimension() << "\n";
  auto block = [&](const char* name, const Matrix& m) {
    out << name << ":\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
      out << '\n';
    }
  };
  block("generator", code.generator());
  if (code.length() > code.dimension() && code.has_parity()) block("parity", code.parity());
}

nlohmann::json covering_to_json(const SocialNetwork& g, const Covering& covering) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : covering.members) {
    nlohmann::json names = nlohmann::json::array();
    for (VertexId v : m) names.push_back(g.name(v));
    members.push_back(std::move(names));
  }
  return {{"members", std::move(members)},
          {"flags",
           {{"covering", covering.is_covering},
            {"reachable", covering.is_reachable},
            {"efficient", covering.is_efficient},
            {"perfect", covering.is_perfect}}}};
}

nlohmann::json covering_set_to_json(const SocialNetwork& g, const CoveringSet& cs) {
  auto j = covering_to_json(g, cs.covering);
  nlohmann::json centers = nlohmann::json::array();
  for (VertexId c : cs.centers) centers.push_back(g.name(c));
  j["centers"] = std::move(centers);
  j["radius"] = cs.radius;
  j["density"] = cs.density;
  j["dimension"] = cs.dimension;
  j["dimension_exact"] = cs.dimension_exact;
  return j;
}

std::vector<std::vector<VertexId>> members_from_json(const SocialNetwork& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("members") || !j["members"].is_array())
    throw InputError("covering JSON needs a 'members' array");
  std::vector<std::vector<VertexId>> out;
  for (const auto& m : j["members"]) {
    if (!m.is_array()) throw InputError("each covering member must be an array of vertex names");
    std::vector<VertexId> ids;
    for (const auto& name : m) {
      if (!name.is_string()) throw InputError("vertex names in covering JSON must be strings");
      ids.push_back(g.id(name.get<std::string>()));
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  auto in = open(path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.filename().string() + ": " + e.what());
  }
}

}  // namespace codenet
