// Copyright 2026 The qt2ec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QT2EC_CLI_HPP_
#define QT2EC_CLI_HPP_

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qt2ec/colouring.hpp"
#include "qt2ec/dot.hpp"
#include "qt2ec/edge_classes.hpp"
#include "qt2ec/errors.hpp"
#include "qt2ec/families.hpp"
#include "qt2ec/graph.hpp"
#include "qt2ec/graph_io.hpp"
#include "qt2ec/oracle.hpp"
#include "qt2ec/orientation.hpp"

namespace qt2ec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

struct RunResult {
  int code = kExitOk;
  std::string out;
  std::string err;
};

namespace detail {

struct InputOptions {
  std::string path;  // empty or "-" reads stdin
  std::string family;
  std::string in_format = "auto";
  std::string out_format = "text";
};

inline Graph load_graph(const InputOptions& opt, std::istream& in) {
  if (!opt.family.empty()) {
    if (!opt.path.empty()) {
      throw FormatError("give either an input file or --family, not both");
    }
    return families::make_family(opt.family);
  }
  std::string text;
  if (opt.path.empty() || opt.path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opt.path);
    if (!file) throw FormatError("cannot open '" + opt.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  if (opt.in_format == "graph6") return parse_graph6(text);
  if (opt.in_format == "edgelist") return parse_edge_list(text);
  return looks_like_graph6(text) ? parse_graph6(text) : parse_edge_list(text);
}

// Resolves a vertex token against labels first, then dense ids.
inline Vertex resolve_vertex(const Graph& g, const std::string& token) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.label(v) == token) return v;
  }
  throw FormatError("unknown vertex '" + token + "'");
}

inline Arc parse_arc(const Graph& g, const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw FormatError("--seed-arc expects u,v; got '" + spec + "'");
  }
  return {resolve_vertex(g, spec.substr(0, comma)),
          resolve_vertex(g, spec.substr(comma + 1))};
}

inline std::string edge_text(const Graph& g, const Edge& e) {
  return g.label(e.u) + "-" + g.label(e.v);
}

inline nlohmann::json edge_json(const Graph& g, const Edge& e) {
  return nlohmann::json::array({g.label(e.u), g.label(e.v)});
}

inline void require_text_or_json(const InputOptions& opt, const char* cmd) {
  if (opt.out_format == "dot") {
    throw FormatError(std::string(cmd) + ": dot output is not available");
  }
}

inline std::string classes_cmd(const Graph& g, const InputOptions& opt) {
  const EdgeClassPartition p = compute_classes(g);
  if (opt.out_format == "dot") return to_dot(g, p);
  if (opt.out_format == "json") {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : p.classes) {
      nlohmann::json edges = nlohmann::json::array();
      for (EdgeIndex e : cls) edges.push_back(edge_json(g, g.edge(e)));
      classes.push_back(edges);
    }
    return nlohmann::json{{"graph6", encode_graph6(g)},
                          {"k", p.size()},
                          {"classes", classes}}
               .dump() +
           "\n";
  }
  std::string out;
  for (ClassId c = 0; c < p.size(); ++c) {
    out += "class " + std::to_string(c) + ":";
    for (EdgeIndex e : p.classes[c]) out += " " + edge_text(g, g.edge(e));
    out += "\n";
  }
  out += "k=" + std::to_string(p.size()) + "\n";
  return out;
}

inline std::string colour_cmd(const Graph& g, const InputOptions& opt,
                              bool enumerate, std::size_t cap) {
  require_text_or_json(opt, "colour");
  const EdgeClassPartition p = compute_classes(g);
  const BigInt count = pow2(p.size());
  std::vector<std::string> rows;
  if (enumerate) {
    for (const EdgeColouring& c : enumerate_colourings(g, cap)) {
      std::string row;
      for (Colour x : c.colour) row += colour_char(x);
      rows.push_back(std::move(row));
    }
  }
  if (opt.out_format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_json(g, e));
    nlohmann::json j{{"graph6", encode_graph6(g)},
                     {"k", p.size()},
                     {"count", count.str()},
                     {"edges", edges}};
    if (enumerate) j["colourings"] = rows;
    return j.dump() + "\n";
  }
  std::string out = "k=" + std::to_string(p.size()) + "\n";
  out += "count=" + count.str() + "\n";
  if (enumerate) {
    out += "edges:";
    for (const Edge& e : g.edges()) out += " " + edge_text(g, e);
    out += "\n";
    for (const auto& row : rows) out += row + "\n";
  }
  return out;
}

inline std::string orient_cmd(const Graph& g, const InputOptions& opt,
                              const std::string& seed_arc, bool enumerate,
                              std::size_t cap) {
  const OrientationFeasibility feas = orientability(g);
  std::optional<Orientation> gamma;
  if (!seed_arc.empty()) gamma = partial_orientation(g, parse_arc(g, seed_arc));
  if (opt.out_format == "dot") {
    if (!gamma) throw FormatError("orient: dot output needs --seed-arc");
    return to_dot(g, *gamma);
  }
  std::vector<std::string> listed;
  if (enumerate) {
    for (const Orientation& o : enumerate_orientations(g, cap)) {
      listed.push_back(write_arcs(g, o));
    }
  }
  if (opt.out_format == "json") {
    nlohmann::json j{{"graph6", encode_graph6(g)},
                     {"orientable", feas.orientable},
                     {"count", feas.count.str()},
                     {"k", feas.k()}};
    if (gamma) {
      nlohmann::json a = nlohmann::json::array();
      for (const Arc& arc : arcs(g, *gamma)) {
        a.push_back({g.label(arc.tail), g.label(arc.head)});
      }
      j["arcs"] = a;
    }
    if (enumerate) j["orientations"] = listed;
    return j.dump() + "\n";
  }
  std::string out = std::string(feas.orientable ? "orientable" : "not orientable") +
                    ", count=" + feas.count.str() + "\n";
  if (gamma) out += write_arcs(g, *gamma);
  for (std::size_t i = 0; i < listed.size(); ++i) {
    out += "orientation " + std::to_string(i) + ":\n" + listed[i];
  }
  return out;
}

inline std::string classify_cmd(const Graph& g, const InputOptions& opt) {
  require_text_or_json(opt, "classify");
  const ColourabilityClass cls = classify_colourability(g);
  if (opt.out_format == "json") {
    return nlohmann::json{{"graph6", encode_graph6(g)},
                          {"class", cls.to_string()},
                          {"k", cls.k},
                          {"count", cls.count.str()}}
               .dump() +
           "\n";
  }
  return cls.to_string() + "\n";
}

inline std::string witness_cmd(const Graph& g, const InputOptions& opt) {
  require_text_or_json(opt, "witness");
  const auto h = find_homogeneous_witness(g);
  if (opt.out_format == "json") {
    nlohmann::json j{{"graph6", encode_graph6(g)}, {"witness", nullptr}};
    if (h) {
      std::vector<std::string> names;
      for (Vertex v : *h) names.push_back(g.label(v));
      j["witness"] = names;
    }
    return j.dump() + "\n";
  }
  if (!h) return "none\n";
  std::string out;
  for (Vertex v : *h) out += (out.empty() ? "" : " ") + g.label(v);
  return out + "\n";
}

inline std::string family_cmd(const std::string& spec, const std::string& as,
                              const InputOptions& opt) {
  const Graph g = families::make_family(spec);
  if (opt.out_format == "dot") return to_dot(g);
  if (opt.out_format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_json(g, e));
    return nlohmann::json{{"graph6", encode_graph6(g)},
                          {"n", g.num_vertices()},
                          {"edges", edges}}
               .dump() +
           "\n";
  }
  if (as == "graph6") return encode_graph6(g) + "\n";
  return write_edge_list(g);
}

inline std::string oracle_cmd(const Graph& g, const InputOptions& opt) {
  require_text_or_json(opt, "oracle");
  const auto colourings = oracle::brute_force_colouring_count(g);
  const auto orientations = oracle::brute_force_orientation_count(g);
  if (opt.out_format == "json") {
    return nlohmann::json{{"graph6", encode_graph6(g)},
                          {"colourings", colourings},
                          {"orientations", orientations}}
               .dump() +
           "\n";
  }
  return "colourings=" + std::to_string(colourings) +
         "\norientations=" + std::to_string(orientations) + "\n";
}

inline std::set<std::string> split_checks(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

inline RunResult verify_cmd(oracle::SweepConfig cfg, const std::string& checks,
                            const InputOptions& opt) {
  require_text_or_json(opt, "verify");
  cfg.checks = split_checks(checks);
  const oracle::SweepResult result = oracle::theorem_sweep(cfg);
  RunResult r;
  r.code = result.report.all_passed() ? kExitOk : kExitCheckFailed;
  if (opt.out_format == "json") {
    r.out = result.report.to_jsonl();
  } else {
    r.out = "seed=" + std::to_string(result.seed) +
            " graphs=" + std::to_string(result.graphs()) + "\n";
    for (const auto& [name, t] : result.report.tally()) {
      r.out += name + " pass=" + std::to_string(t.passed) +
               " fail=" + std::to_string(t.failed) + "\n";
    }
    for (const CheckRecord& rec : result.report.records()) {
      if (!rec.passed) r.out += "FAIL " + rec.to_json(false).dump() + "\n";
    }
  }
  if (r.code != kExitOk) {
    r.err = std::to_string(result.report.failures()) + " check(s) failed\n";
  }
  return r;
}

}  // namespace detail

// Runs one command line (without the program name). Output is returned
// rather than printed so callers and tests can inspect it.
inline RunResult run(const std::vector<std::string>& args,
                     std::istream& in = std::cin) {
  CLI::App app{"Edge classes, quasi-transitive colourings and orientations",
               "qt2ec"};
  app.require_subcommand(1);

  detail::InputOptions opt;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("input", opt.path, "edge list or graph6 file, '-' for stdin");
    sub->add_option("--family", opt.family, "generator spec, e.g. cycle,5");
    sub->add_option("--in", opt.in_format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  auto* classes = app.add_subcommand("classes", "list the edge classes");
  add_io(classes);
  add_out(classes);

  bool enumerate = false;
  std::size_t cap = kDefaultEnumerationCap;
  auto* colour = app.add_subcommand("colour", "count or list colourings");
  add_io(colour);
  add_out(colour);
  colour->add_flag("--enumerate", enumerate, "list every valid colouring");
  colour->add_option("--cap", cap, "refuse enumeration above this many classes");

  std::string seed_arc;
  auto* orient = app.add_subcommand("orient", "orientability and orientations");
  add_io(orient);
  add_out(orient);
  orient->add_option("--seed-arc", seed_arc, "print the orientation forced by u,v");
  orient->add_flag("--enumerate", enumerate, "list every valid orientation");
  orient->add_option("--cap", cap, "refuse enumeration above this many classes");

  auto* classify = app.add_subcommand("classify", "trivial, unique or proper");
  add_io(classify);
  add_out(classify);

  auto* witness = app.add_subcommand("witness", "homogeneous witness set");
  add_io(witness);
  add_out(witness);

  std::string family_spec;
  std::string family_as = "edgelist";
  auto* family = app.add_subcommand("family", "emit a generated graph");
  family->add_option("spec", family_spec, "generator spec")->required();
  family->add_option("--as", family_as, "text encoding")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  add_out(family);

  oracle::SweepConfig cfg;
  std::string checks;
  auto* verify = app.add_subcommand("verify", "run the theorem sweep");
  verify->add_option("--max-n", cfg.max_n, "largest exhaustive order")
      ->check(CLI::Range(1, 7));
  verify->add_option("--min-n", cfg.min_n, "smallest exhaustive order")
      ->check(CLI::Range(1, 7));
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_option("--checks", checks, "comma-separated check names");
  verify->add_option("--sample-n6", cfg.sample_n6, "random connected graphs at n=6");
  verify->add_option("--sample-n7", cfg.sample_n7, "random connected graphs at n=7");
  verify->add_option("--threads", cfg.threads, "worker threads");
  verify->add_flag("--all-graphs", [&](std::int64_t) { cfg.connected_only = false; },
                   "include disconnected graphs");
  add_out(verify);

  auto* brute = app.add_subcommand("oracle", "brute-force counts");
  add_io(brute);
  add_out(brute);

  RunResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = kExitUsage;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    if (verify->parsed()) return detail::verify_cmd(cfg, checks, opt);
    if (family->parsed()) {
      result.out = detail::family_cmd(family_spec, family_as, opt);
      return result;
    }
    const Graph g = detail::load_graph(opt, in);
    if (classes->parsed()) result.out = detail::classes_cmd(g, opt);
    if (colour->parsed()) result.out = detail::colour_cmd(g, opt, enumerate, cap);
    if (orient->parsed()) {
      result.out = detail::orient_cmd(g, opt, seed_arc, enumerate, cap);
    }
    if (classify->parsed()) result.out = detail::classify_cmd(g, opt);
    if (witness->parsed()) result.out = detail::witness_cmd(g, opt);
    if (brute->parsed()) result.out = detail::oracle_cmd(g, opt);
  } catch (const FormatError& e) {
    result = {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const ContractError& e) {
    result = {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const RefusalError& e) {
    result = {kExitRefused, {}, std::string("refused: ") + e.what() + "\n"};
  } catch (const InfeasibleError& e) {
    result = {kExitRefused, {}, std::string("infeasible: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace qt2ec::cli

#endif  // QT2EC_CLI_HPP_
