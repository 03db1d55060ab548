#include "codenet/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "codenet/covering.hpp"
#include "codenet/efficiency.hpp"
#include "codenet/errors.hpp"
#include "codenet/io.hpp"
#include "codenet/labeling.hpp"
#include "codenet/simulate.hpp"

#ifndef CODENET_VERSION
#define CODENET_VERSION "dev"
#endif

namespace codenet {

namespace {

using json = nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string network;
  std::string code;
  std::string p;
  std::string tree;
  std::string root;
  std::string covering;
  std::string periphery;
  std::string path;
  std::string from;
  std::string to;
  std::string out_edges;
  std::string out_covering;
  bool json = false;
  bool csv = false;
  bool timestamp = false;
  bool plan = false;
  bool simplex = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = kDefaultTrials;
  unsigned threads = 0;
  unsigned trace = 0;
  unsigned r = 0;
  unsigned hubs = 0;
  unsigned k = 0;
  unsigned q = 2;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

  Format format() const {
    if (opt_.json && opt_.csv) throw InputError("--json and --csv are mutually exclusive");
    return opt_.json ? Format::Json : opt_.csv ? Format::Csv : Format::Text;
  }

  void no_csv(const char* command) const {
    if (format() == Format::Csv) throw InputError(std::string("--csv is not supported by ") + command);
  }

  const NetworkFile& network() {
    if (!network_) {
      if (opt_.network.empty()) throw InputError("--network is required");
      network_ = read_edge_list_file(opt_.network);
    }
    return *network_;
  }

  const SocialNetwork& graph() { return *network().graph; }

  std::shared_ptr<const LinearCode> code() {
    if (!code_) {
      if (opt_.code.empty()) throw InputError("--code is required");
      code_ = std::make_shared<const LinearCode>(read_code_file(opt_.code));
      if (code_->min_distance() == 1) err_ << "warning: code has minimum distance 1 and cannot correct errors\n";
    }
    return code_;
  }

  std::optional<Probability> global_p() const {
    if (opt_.p.empty()) return std::nullopt;
    return Probability::parse(opt_.p);
  }

  const CodedNetwork& net() {
    if (!net_) net_ = make_coded_network(network(), code(), global_p());
    return *net_;
  }

  VertexId vertex(const std::string& name, const char* flag) {
    if (name.empty()) throw InputError(std::string(flag) + " is required");
    return graph().id(name);
  }

  unsigned field_order() { return opt_.code.empty() ? opt_.q : code()->field().order(); }

  SpanningTree tree() {
    const auto& g = graph();
    if (!opt_.tree.empty()) {
      const auto file = read_edge_list_file(opt_.tree);
      const auto& t = *file.graph;
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (const auto& e : t.edges()) edges.emplace_back(g.id(t.name(e.u)), g.id(t.name(e.v)));
      // The first listed endpoint of the first edge is the default root.
      std::string first;
      {
        std::ifstream in(opt_.tree);
        for (std::string line; std::getline(in, line);) {
          std::istringstream ss(line);
          if (ss >> first && first[0] != '#') break;
          first.clear();
        }
      }
      const VertexId root = g.id(opt_.root.empty() ? first : opt_.root);
      auto tree = SpanningTree::from_edges(g.vertex_count(), root, edges);
      tree.validate_in(g);
      return tree;
    }
    auto se = is_super_efficient(net());
    if (!se.super_efficient)
      throw InfeasibleError(std::string("network is not super-efficient (network class ") +
                            std::string(to_string(se.network_class)) + "); pass --tree to label a given tree");
    if (!opt_.root.empty()) return se.tree->rerooted(g.id(opt_.root));
    return std::move(*se.tree);
  }

  std::string label_string(std::span<const Symbol> label, unsigned q) const {
    std::string s;
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (q > 10 && i) s += ',';
      s += std::to_string(label[i]);
    }
    return s;
  }

  json names(std::span<const VertexId> ids) {
    json a = json::array();
    for (VertexId v : ids) a.push_back(graph().name(v));
    return a;
  }

  std::string joined(std::span<const VertexId> ids, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? sep : "") + graph().name(ids[i]);
    return s;
  }

  void emit(const std::string& command, json result) {
    json input = json::object();
    if (!opt_.network.empty()) input["network"] = opt_.network;
    if (!opt_.code.empty()) input["code"] = opt_.code;
    if (!opt_.p.empty()) input["p"] = opt_.p;
    if (!opt_.tree.empty()) input["tree"] = opt_.tree;
    json report = {{"tool", "codenet"},
                   {"version", CODENET_VERSION},
                   {"timestamp", opt_.timestamp ? json(now_iso8601()) : json(nullptr)},
                   {"command", command},
                   {"input", std::move(input)},
                   {"result", std::move(result)}};
    out_ << report.dump(2) << '\n';
  }

  std::optional<Covering> covering_for_plan() {
    const auto& n = net();
    if (!opt_.covering.empty()) {
      auto c = validate_covering(n, members_from_json(graph(), read_json_file(opt_.covering)));
      return c;
    }
    const unsigned r = opt_.r ? opt_.r : radius(n);
    if (r == 0) throw InfeasibleError("no efficient covering exists: even single edges are not efficient");
    auto cs = covering_set(n, r, {.exact_vertex_limit = 0});
    if (!cs) throw InfeasibleError("no covering set of radius " + std::to_string(r) + " exists");
    return std::move(cs->covering);
  }

  static std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;

 private:
  std::optional<NetworkFile> network_;
  std::shared_ptr<const LinearCode> code_;
  std::optional<CodedNetwork> net_;
};

json expectation_json(const Expectation& e) { return {{"text", e.str()}, {"value", e.value}}; }

json code_json(const LinearCode& c) {
  const auto cap = c.capacities();
  return {{"q", c.field().order()}, {"n", c.length()},        {"k", c.dimension()},
          {"d", c.min_distance()},  {"detect", cap.detect}, {"correct", cap.correct}};
}

void cmd_classify(Session& s) {
  const auto& net = s.net();
  const auto& g = net.graph();
  const auto report = classify_network(net);
  const auto topology = topology_type(g);
  const auto& code = net.code();

  switch (s.format()) {
    case Format::Json: {
      json rows = json::array();
      for (const auto& row : report.per_length)
        rows.push_back({{"length", row.length},
                        {"flip_probability", expectation_json(row.flip_probability)},
                        {"expected_hamming", expectation_json(row.expected_hamming)},
                        {"class", to_string(row.classification)}});
      json worst = nullptr;
      if (report.worst_path)
        worst = {{"path", s.names(report.worst_path->path.vertices)},
                 {"expected_hamming", expectation_json(report.worst_path->expected_hamming)},
                 {"class", to_string(report.worst_path->classification)}};
      const auto& cp = net.constant_probability();
      s.emit("classify", {{"vertices", g.vertex_count()},
                          {"edges", g.edge_count()},
                          {"critical_value", report.critical_value},
                          {"topology", to_string(topology)},
                          {"code", code_json(code)},
                          {"constant_probability", cp ? json(cp->str()) : json(nullptr)},
                          {"per_length", std::move(rows)},
                          {"worst_path", std::move(worst)},
                          {"class", to_string(report.classification)}});
      return;
    }
    case Format::Csv:
      s.out_ << "length,flip_probability,expected_hamming,class\n";
      for (const auto& row : report.per_length)
        s.out_ << row.length << ',' << row.flip_probability.str() << ',' << row.expected_hamming.str() << ','
               << to_string(row.classification) << '\n';
      return;
    case Format::Text:
      break;
  }
  auto& out = s.out_;
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", critical value "
      << report.critical_value << ", topology " << to_string(topology) << '\n';
  out << "code [" << code.length() << ',' << code.dimension() << ',' << code.min_distance() << "]_"
      << code.field().order() << ": detects " << code.capacities().detect << ", corrects "
      << code.capacities().correct << '\n';
  if (report.constant_shortcut) {
    out << "p " << net.constant_probability()->str() << '\n';
    out << "length\tflip_probability\texpected_hamming\tclass\n";
    for (const auto& row : report.per_length)
      out << row.length << '\t' << row.flip_probability.str() << '\t' << row.expected_hamming.str() << '\t'
          << to_string(row.classification) << '\n';
  } else if (report.worst_path) {
    out << "worst shortest path " << s.joined(report.worst_path->path.vertices, " -> ") << ": expected "
        << report.worst_path->expected_hamming.str() << " (" << to_string(report.worst_path->classification) << ")\n";
  }
  out << "class " << to_string(report.classification) << '\n';
}

void cmd_label(Session& s) {
  const auto& g = s.graph();
  if (s.opt_.simplex) {
    const auto labels = assign_simplex_labels(g);
    switch (s.format()) {
      case Format::Json: {
        json rows = json::array();
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          rows.push_back({{"vertex", g.name(v)}, {"label", s.label_string(labels.labels[v], 2)}});
        s.emit("label", {{"scheme", "simplex"},
                         {"order", labels.order},
                         {"equidistant", labels.equidistant()},
                         {"labels", std::move(rows)}});
        return;
      }
      case Format::Csv:
        s.out_ << "vertex,label\n";
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          s.out_ << g.name(v) << ',' << s.label_string(labels.labels[v], 2) << '\n';
        return;
      case Format::Text:
        s.out_ << "simplex labels, m = " << labels.order << ", equidistant " << (labels.equidistant() ? "yes" : "no")
               << '\n';
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          s.out_ << g.name(v) << '\t' << s.label_string(labels.labels[v], 2) << '\n';
        return;
    }
  }
  const unsigned q = s.field_order();
  const auto labeling = assign_labels(s.tree(), q);
  const VertexId root = labeling.tree().root();
  switch (s.format()) {
    case Format::Json: {
      json rows = json::array();
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto label = labeling.label(v);
        rows.push_back({{"vertex", g.name(v)},
                        {"label", s.label_string(label, q)},
                        {"symbols", label},
                        {"parent", labeling.tree().parent(v) ? json(g.name(*labeling.tree().parent(v))) : json(nullptr)}});
      }
      s.emit("label", {{"scheme", "tree"},
                       {"q", q},
                       {"root", g.name(root)},
                       {"label_length", labeling.label_length()},
                       {"labels", std::move(rows)}});
      return;
    }
    case Format::Csv:
      s.out_ << "vertex,label\n";
      for (VertexId v = 0; v < g.vertex_count(); ++v) s.out_ << g.name(v) << ',' << s.label_string(labeling.label(v), q) << '\n';
      return;
    case Format::Text:
      s.out_ << "root " << g.name(root) << ", label length " << labeling.label_length() << ", q " << q << '\n';
      for (VertexId v = 0; v < g.vertex_count(); ++v) s.out_ << g.name(v) << '\t' << s.label_string(labeling.label(v), q) << '\n';
      return;
  }
}

void cmd_route(Session& s) {
  const auto& g = s.graph();
  const VertexId from = s.vertex(s.opt_.from, "--from");
  const VertexId to = s.vertex(s.opt_.to, "--to");
  if (s.opt_.simplex) {
    const auto labels = assign_simplex_labels(g);
    const auto path = labels.route(from, to);
    s.no_csv("route --simplex");
    if (s.format() == Format::Json)
      s.emit("route", {{"from", g.name(from)}, {"to", g.name(to)}, {"hops", s.names(path.vertices)}, {"steps", json::array()}});
    else
      s.out_ << "route " << s.joined(path.vertices, " -> ") << " (length " << path.length() << ")\n";
    return;
  }
  const unsigned q = s.field_order();
  const auto labeling = assign_labels(s.tree(), q);
  const auto steps = labeling.route_steps(from, to);
  const auto path = labeling.route(from, to);
  auto move_name = [](RouteMove m) { return m == RouteMove::Ascend ? "ascend" : "descend"; };
  switch (s.format()) {
    case Format::Json: {
      json rows = json::array();
      for (const auto& st : steps)
        rows.push_back({{"from", g.name(st.from)},
                        {"to", g.name(st.to)},
                        {"from_label", s.label_string(labeling.label(st.from), q)},
                        {"to_label", s.label_string(labeling.label(st.to), q)},
                        {"move", move_name(st.move)}});
      s.emit("route", {{"from", g.name(from)},
                       {"to", g.name(to)},
                       {"target_label", s.label_string(labeling.label(to), q)},
                       {"hops", s.names(path.vertices)},
                       {"steps", std::move(rows)}});
      return;
    }
    case Format::Csv:
      s.out_ << "step,from,to,from_label,to_label,move\n";
      for (std::size_t i = 0; i < steps.size(); ++i)
        s.out_ << i + 1 << ',' << g.name(steps[i].from) << ',' << g.name(steps[i].to) << ','
               << s.label_string(labeling.label(steps[i].from), q) << ',' << s.label_string(labeling.label(steps[i].to), q)
               << ',' << move_name(steps[i].move) << '\n';
      return;
    case Format::Text:
      s.out_ << "route " << s.joined(path.vertices, " -> ") << " (length " << path.length() << ")\n";
      s.out_ << "target " << g.name(to) << " label " << s.label_string(labeling.label(to), q) << '\n';
      for (std::size_t i = 0; i < steps.size(); ++i)
        s.out_ << i + 1 << ". " << g.name(steps[i].from) << " (" << s.label_string(labeling.label(steps[i].from), q)
               << ") -> " << g.name(steps[i].to) << " (" << s.label_string(labeling.label(steps[i].to), q) << ") "
               << move_name(steps[i].move) << '\n';
      return;
  }
}

void print_flags(std::ostream& out, const Covering& c) {
  out << "covering " << (c.is_covering ? "yes" : "no") << ", reachable " << (c.is_reachable ? "yes" : "no")
      << ", efficient " << (c.is_efficient ? "yes" : "no") << ", perfect " << (c.is_perfect ? "yes" : "no") << '\n';
}

void cmd_cover(Session& s) {
  if (s.opt_.r == 0) throw InputError("--r must be a positive integer");
  const auto& g = s.graph();
  const auto cs = covering_set(s.net(), s.opt_.r);
  if (!cs) throw InfeasibleError("no covering set of radius " + std::to_string(s.opt_.r) + " exists");
  switch (s.format()) {
    case Format::Json:
      s.emit("cover", covering_set_to_json(g, *cs));
      return;
    case Format::Csv:
      s.out_ << "center,ball_size\n";
      for (std::size_t i = 0; i < cs->centers.size(); ++i)
        s.out_ << g.name(cs->centers[i]) << ',' << cs->covering.members[i].size() << '\n';
      return;
    case Format::Text:
      s.out_ << "centers " << s.joined(cs->centers, " ") << '\n';
      s.out_ << "radius " << cs->radius << ", density " << cs->density << ", dimension " << cs->dimension
             << (cs->dimension_exact ? " (exact)" : " (heuristic)") << '\n';
      print_flags(s.out_, cs->covering);
      return;
  }
}

void cmd_radius(Session& s) {
  s.no_csv("radius");
  const unsigned r = radius(s.net());
  if (r == 0) s.err_ << "no radius r >= 1 admits an efficient covering set\n";
  if (s.format() == Format::Json)
    s.emit("radius", {{"radius", r}, {"critical_value", critical_value(s.graph())}});
  else
    s.out_ << "radius " << r << '\n';
}

void cmd_plan(Session& s) {
  s.no_csv("plan");
  const auto& g = s.graph();
  const VertexId from = s.vertex(s.opt_.from, "--from");
  const VertexId to = s.vertex(s.opt_.to, "--to");
  const auto covering = s.covering_for_plan();
  const auto plan = plan_transmission(*covering, from, to);
  const auto routers = build_member_routers(*covering, s.net().code().field().order());
  json legs = json::array();
  std::vector<Path> routes;
  for (const auto& leg : plan.legs()) {
    routes.push_back(routers[leg.member].route(leg.from, leg.to));
    legs.push_back({{"member", leg.member}, {"route", s.names(routes.back().vertices)}});
  }
  if (s.format() == Format::Json) {
    json members = json::array();
    for (std::size_t m : plan.members) members.push_back(m);
    s.emit("plan", {{"from", g.name(from)},
                    {"to", g.name(to)},
                    {"members", std::move(members)},
                    {"handoffs", s.names(plan.handoffs)},
                    {"correction_points", s.names(plan.correction_points)},
                    {"legs", std::move(legs)}});
    return;
  }
  s.out_ << "plan " << g.name(from) << " -> " << g.name(to) << " through " << plan.members.size() << " member(s)\n";
  for (std::size_t i = 0; i < routes.size(); ++i)
    s.out_ << "leg " << i + 1 << " (member " << plan.members[i] << "): " << s.joined(routes[i].vertices, " -> ") << '\n';
  s.out_ << "handoffs " << (plan.handoffs.empty() ? "none" : s.joined(plan.handoffs, " ")) << '\n';
  s.out_ << "corrections " << s.joined(plan.correction_points, " ") << '\n';
}

void cmd_construct_perfect(Session& s) {
  s.no_csv("construct-perfect");
  const auto& opt = s.opt_;
  PeripherySpec periphery;
  if (!opt.periphery.empty()) {
    const auto file = read_edge_list_file(opt.periphery);
    for (const auto& e : file.graph->edges()) periphery.emplace_back(file.graph->name(e.u), file.graph->name(e.v));
  }
  const auto p = s.global_p();
  if (!p) throw InputError("--p is required");
  const auto built = construct_perfect(opt.hubs, opt.k, periphery, s.code(), *p);
  const auto& g = built.network.graph();
  const auto covering = covering_set_to_json(g, built.covering_set);
  if (!opt.out_edges.empty()) {
    std::ofstream f(opt.out_edges);
    if (!f) throw InputError("cannot write " + opt.out_edges);
    write_edge_list(f, g);
  }
  if (!opt.out_covering.empty()) {
    std::ofstream f(opt.out_covering);
    if (!f) throw InputError("cannot write " + opt.out_covering);
    f << covering.dump(2) << '\n';
  }
  if (s.format() == Format::Json) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
    s.emit("construct-perfect", {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"covering", covering}});
    return;
  }
  write_edge_list(s.out_, g);
  s.out_ << "# covering\n" << covering.dump(2) << '\n';
}

json trace_json(Session& s, const TransmissionTrace& t, std::uint64_t trial, unsigned q) {
  const auto& g = s.graph();
  json hops = json::array();
  for (const auto& h : t.hops)
    hops.push_back({{"from", g.name(h.from)}, {"to", g.name(h.to)}, {"received", s.label_string(h.received, q)}});
  json corrections = json::array();
  for (const auto& c : t.corrections)
    corrections.push_back(
        {{"vertex", g.name(c.vertex)}, {"corrected_symbols", c.corrected_symbols}, {"ambiguous", c.ambiguous}});
  return {{"trial", trial},
          {"message", s.label_string(t.message, q)},
          {"sent", s.label_string(t.sent, q)},
          {"hops", std::move(hops)},
          {"corrections", std::move(corrections)},
          {"arrived", s.label_string(t.arrived, q)},
          {"final_hamming", t.final_hamming},
          {"decoded_message", s.label_string(t.decoded_message, q)},
          {"success", t.success()},
          {"error_events", t.error_events}};
}

Path parse_path(Session& s, const std::string& spec) {
  Path p;
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    p.vertices.push_back(s.graph().id(spec.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

void cmd_simulate(Session& s) {
  const auto& opt = s.opt_;
  const auto& net = s.net();
  const unsigned q = net.code().field().order();
  std::uint64_t seed = 1;
  if (opt.seed) {
    seed = *opt.seed;
  } else if (const char* env = std::getenv("CODENET_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("CODENET_SEED is not an unsigned integer: ") + env);
    }
  }
  if (opt.trials == 0) throw InputError("--trials must be at least 1");

  json result = {{"seed", seed}, {"trials", opt.trials}};
  SimStats stats;
  std::vector<TransmissionTrace> traces;
  if (opt.plan) {
    if (!opt.path.empty()) throw InputError("--path and --plan are mutually exclusive");
    const VertexId from = s.vertex(opt.from, "--from");
    const VertexId to = s.vertex(opt.to, "--to");
    const auto covering = s.covering_for_plan();
    const auto plan = plan_transmission(*covering, from, to);
    const auto routers = build_member_routers(*covering, q);
    stats = estimate_protocol(net, plan, routers, opt.trials, seed, opt.threads);
    for (unsigned i = 0; i < std::min<std::uint64_t>(opt.trace, opt.trials); ++i)
      traces.push_back(protocol_trial(net, plan, routers, seed, i));
    result["mode"] = "plan";
    result["correction_points"] = s.names(plan.correction_points);
  } else {
    Path path;
    if (!opt.path.empty())
      path = parse_path(s, opt.path);
    else
      path = shortest_path(s.graph(), s.vertex(opt.from, "--from (or --path)"), s.vertex(opt.to, "--to"));
    stats = estimate_expected_hamming(net, path, opt.trials, seed, opt.threads);
    for (unsigned i = 0; i < std::min<std::uint64_t>(opt.trace, opt.trials); ++i)
      traces.push_back(path_trial(net, path, seed, i));
    result["mode"] = "path";
    result["path"] = s.names(path.vertices);
    result["analytic_expected_hamming"] = expectation_json(expected_hamming(net, path));
  }
  result["mean_hamming"] = stats.mean_hamming;
  result["std_error"] = stats.std_error;
  result["decode_success_rate"] = stats.decode_success_rate;

  switch (s.format()) {
    case Format::Json: {
      if (!traces.empty()) {
        json arr = json::array();
        for (std::size_t i = 0; i < traces.size(); ++i) arr.push_back(trace_json(s, traces[i], i, q));
        result["traces"] = std::move(arr);
      }
      s.emit("simulate", std::move(result));
      return;
    }
    case Format::Csv:
      s.out_ << "seed,trials,mean_hamming,std_error,decode_success_rate\n"
             << seed << ',' << opt.trials << ',' << format_double(stats.mean_hamming) << ','
             << format_double(stats.std_error) << ',' << format_double(stats.decode_success_rate) << '\n';
      return;
    case Format::Text:
      s.out_ << "seed " << seed << ", trials " << opt.trials << '\n';
      if (result.contains("analytic_expected_hamming"))
        s.out_ << "analytic expected Hamming distance " << result["analytic_expected_hamming"]["text"].get<std::string>()
               << '\n';
      s.out_ << "mean Hamming distance " << format_double(stats.mean_hamming) << " +/- "
             << format_double(stats.std_error) << '\n';
      s.out_ << "decode success rate " << format_double(stats.decode_success_rate) << '\n';
      for (std::size_t i = 0; i < traces.size(); ++i) s.out_ << trace_json(s, traces[i], i, q).dump() << '\n';
      return;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Coded social network toolkit: efficiency classification, label routing, coverings and simulation",
               "codenet"};
  app.set_version_flag("--version", CODENET_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--network,-n", opt.network, "Edge-list file (a<TAB>b[<TAB>p])");
  app.add_option("--code,-c", opt.code, "Code specification file");
  app.add_option("--p", opt.p, "Edge error probability, decimal or ratio such as 3/4");
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--csv", opt.csv, "CSV output");
  app.add_flag("--timestamp", opt.timestamp, "Record the wall-clock time in JSON reports");

  auto* classify = app.add_subcommand("classify", "Expected Hamming distances and the network's efficiency class");
  auto* label = app.add_subcommand("label", "Label table of a spanning tree");
  auto* route = app.add_subcommand("route", "Label route between two vertices");
  for (auto* sub : {label, route}) {
    sub->add_option("--tree", opt.tree, "Spanning-tree edge list; default: a witness tree of super-efficiency");
    sub->add_option("--root", opt.root, "Tree root; default: first vertex of the tree file");
    sub->add_option("--q", opt.q, "Field order when no code is given")->check(CLI::PositiveNumber);
    sub->add_flag("--simplex", opt.simplex, "Simplex-code labels for complete graphs");
  }
  route->add_option("--from", opt.from)->required();
  route->add_option("--to", opt.to)->required();

  auto* cover = app.add_subcommand("cover", "Greedy covering set of radius-r balls");
  cover->add_option("--r", opt.r, "Ball radius")->required();
  auto* radius_cmd = app.add_subcommand("radius", "Largest r admitting a covering set");

  auto* plan = app.add_subcommand("plan", "Hand-off and correction schedule across a covering");
  plan->add_option("--from", opt.from)->required();
  plan->add_option("--to", opt.to)->required();

  auto* perfect = app.add_subcommand("construct-perfect", "Build a perfect covering network around m hubs");
  perfect->add_option("--hubs", opt.hubs, "Hub count m >= 2")->required();
  perfect->add_option("--k", opt.k, "Half chain length k >= 1")->required();
  perfect->add_option("--periphery", opt.periphery, "Extra edges (edge-list file) within k of a hub");
  perfect->add_option("--out-edges", opt.out_edges, "Also write the edge list here");
  perfect->add_option("--out-covering", opt.out_covering, "Also write the covering JSON here");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo transmission along a path or a covering plan");
  simulate->add_option("--path", opt.path, "Comma-separated vertex names");
  simulate->add_flag("--plan", opt.plan, "Simulate the covering protocol between --from and --to");
  simulate->add_option("--from", opt.from);
  simulate->add_option("--to", opt.to);
  simulate->add_option("--trials", opt.trials, "Trial count");
  simulate->add_option("--seed", opt.seed, "Seed (default: $CODENET_SEED or 1)");
  simulate->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  simulate->add_option("--trace", opt.trace, "Include the first k full traces");

  for (auto* sub : {plan, simulate}) {
    sub->add_option("--r", opt.r, "Covering radius (default: the network's radius)");
    sub->add_option("--covering", opt.covering, "Covering JSON file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  Session session(opt, out, err);
  try {
    if (*classify) cmd_classify(session);
    else if (*label) cmd_label(session);
    else if (*route) cmd_route(session);
    else if (*cover) cmd_cover(session);
    else if (*radius_cmd) cmd_radius(session);
    else if (*plan) cmd_plan(session);
    else if (*perfect) cmd_construct_perfect(session);
    else if (*simulate) cmd_simulate(session);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace codenet
