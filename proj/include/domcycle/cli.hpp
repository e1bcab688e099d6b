#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcycle/cycles.hpp"
#include "domcycle/enumerate.hpp"
#include "domcycle/families.hpp"
#include "domcycle/graph6.hpp"
#include "domcycle/invariants.hpp"
#include "domcycle/segments.hpp"
#include "domcycle/theorems.hpp"

namespace domcycle::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kViolations = 1, kInputError = 2 };

namespace detail {

/// Graphs named on the command line: a graph6 string, or "-" for graph6 lines on stdin.
inline std::vector<Graph6Record> graphs_from_arg(const std::string& arg, std::istream& in) {
  if (arg == "-") return read_graph6_stream(in);
  return {Graph6Record{1, arg, parse_graph6(arg)}};
}

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw PreconditionError("bad vertex list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

inline json cycle_json(const Graph& g, const Cycle& c, bool with_domination) {
  json j{{"length", c.length()}, {"vertices", c.vertices()}};
  if (with_domination) j["dominating"] = is_dominating(g, c);
  return j;
}

inline json invariants_json(const Graph& g) {
  auto circ = circumference(g);
  json j{{"graph6", to_graph6(g)},
         {"n", g.order()},
         {"m", g.edge_count()},
         {"delta", min_degree(g)},
         {"kappa", vertex_connectivity(g)},
         {"tau", toughness(g).value.to_string()}};
  j["circumference"] = circ ? json(circ->length) : json(nullptr);
  j["hamiltonian"] = circ && circ->length == g.order();
  return j;
}

inline json verdict_json(const LemmaVerdict& v) {
  json j{{"lemma", v.lemma}, {"applicable", v.applicable}};
  if (v.applicable) {
    j["holds"] = v.holds;
    j["bounds"] = {{"required", v.bound_required}, {"observed", v.bound_observed}};
  }
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

inline json decomposition_json(const Graph& g, const SegmentDecomposition& d) {
  json segs = json::array();
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& s = d.segments[i];
    segs.push_back({{"index", i}, {"start", s.start}, {"end", s.end}, {"length", s.length}, {"vertices", s.vertices}});
  }
  json ups = json::array();
  const int count = static_cast<int>(d.segments.size());
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      for (const auto& l : intermediate_paths(g, d, a, b))
        ups.push_back({{"segments", {a, b}}, {"vertices", l.vertices}, {"length", l.length()}});
  return json{{"cycle", d.cycle.vertices()},
              {"path", d.path.vertices()},
              {"p_bar", d.p_bar},
              {"x", d.x()},
              {"y", d.y()},
              {"xi", d.xi},
              {"A1", d.a1.to_vector()},
              {"A2", d.a2.to_vector()},
              {"M", d.m.to_vector()},
              {"sigma1", d.sigma1},
              {"sigma2", d.sigma2},
              {"segments", std::move(segs)},
              {"intermediate_paths", std::move(ups)}};
}

inline FamilySpec minimal_spec(FamilyClass cls, int d) {
  auto k = [](int order) { return Branch{named::complete(order), 0, 1, std::nullopt}; };
  switch (cls) {
    case FamilyClass::R1: return {cls, {k(d + 1), k(d + 1), k(d + 1)}, d, {}};
    case FamilyClass::R2: return {cls, {k(4), k(4), k(4)}, 3, {}};
    case FamilyClass::R3: return {cls, {k(5), k(5), k(5)}, 4, {}};
    case FamilyClass::R4: {
      Branch b{named::complete(5), 0, 1, 2};
      return {cls, {b, b, b, b}, 4, {}};
    }
  }
  return {};
}

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n' << std::flush; }

}  // namespace detail

/// Runs one command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominating-cycle verification toolkit for small graphs", "domcycle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string g6;

  auto* inv = app.add_subcommand("invariants", "n, delta, kappa, tau, circumference, hamiltonicity as JSON");
  inv->add_option("graph6", g6, "graph6 string, or - for graph6 lines on stdin")->required();

  bool all_longest = false, check_dominating = false;
  auto* cyc = app.add_subcommand("cycles", "A longest cycle (or all of them) with domination flags");
  cyc->add_option("graph6", g6, "graph6 string, or -")->required();
  cyc->add_flag("--all-longest", all_longest, "List every longest cycle");
  cyc->add_flag("--check-dominating", check_dominating, "Mark each cycle as dominating or not");

  std::string cycle_text, path_text;
  auto* seg = app.add_subcommand("segments", "Elementary segments and lemma verdicts for a longest cycle and path");
  seg->add_option("graph6", g6, "graph6 string, or -")->required();
  seg->add_option("--cycle", cycle_text, "Comma-separated longest cycle (default: the first one found)");
  seg->add_option("--path", path_text, "Comma-separated longest path of G - C (default: the first one found)");

  std::string cls_text;
  int d = 3, n_max = 14;
  bool enumerate = false, as_json = false;
  auto* gen = app.add_subcommand("family-gen", "Emit family members as graph6 lines");
  gen->add_option("--class", cls_text, "r1, r2, r3 or r4")->required();
  auto* d_opt = gen->add_option("--d", d, "Minimum degree for r1")->check(CLI::Range(3, 20));
  gen->add_option("--n-max", n_max, "Largest order to emit")->check(CLI::Range(1, 20));
  gen->add_flag("--enumerate", enumerate, "Every member up to --n-max instead of the complete-branch one");
  gen->add_flag("--json", as_json, "Emit {graph6, class, spec} objects instead of bare graph6");

  bool certify = false;
  auto* chk = app.add_subcommand("family-check", "Membership in R1..R4 with rebuild witnesses");
  chk->add_option("graph6", g6, "graph6 string, or -")->required();
  chk->add_flag("--certify", certify, "Also report connectivity, toughness and longest-cycle domination");

  std::vector<std::string> theorem_texts;
  std::string input, report_path;
  int jobs = 0;
  auto* ver = app.add_subcommand("verify", "Check theorems over a graph6 corpus");
  ver->add_option("--theorem", theorem_texts, "t1, t2, a, b, c, d (repeatable or comma-separated)")
      ->required()
      ->delimiter(',');
  ver->add_option("--input", input, "graph6 file, or - for stdin")->required();
  ver->add_option("--jobs", jobs, "Worker threads (default: DOMCYCLE_JOBS or all cores)")->check(CLI::Range(1, 256));
  ver->add_option("--report", report_path, "Write one JSON verdict per graph and theorem to this file");

  int gen_n = 0, gen_min_degree = 0;
  bool gen_all = false;
  auto* cor = app.add_subcommand("generate", "Connected graphs on n vertices, one per isomorphism class");
  cor->add_option("--n", gen_n, "Order, 1..9")->required()->check(CLI::Range(1, 9));
  cor->add_option("--min-degree", gen_min_degree, "Skip graphs with smaller minimum degree");
  cor->add_flag("--all", gen_all, "Include disconnected graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "domcycle: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*inv) {
      for (const auto& rec : detail::graphs_from_arg(g6, in)) detail::emit(out, detail::invariants_json(rec.graph));
      return kOk;
    }

    if (*cyc) {
      for (const auto& rec : detail::graphs_from_arg(g6, in)) {
        const Graph& g = rec.graph;
        json j{{"graph6", to_graph6(g)}};
        auto circ = circumference(g);
        j["circumference"] = circ ? json(circ->length) : json(nullptr);
        if (circ) {
          if (all_longest) {
            json list = json::array();
            for (const Cycle& c : all_longest_cycles(g)) list.push_back(detail::cycle_json(g, c, check_dominating));
            j["longest_cycles"] = std::move(list);
          } else {
            j["longest_cycle"] = detail::cycle_json(g, circ->witness, check_dominating);
          }
          if (check_dominating) j["all_longest_dominating"] = !nondominating_cycle_of_length(g, circ->length);
        }
        detail::emit(out, j);
      }
      return kOk;
    }

    if (*seg) {
      for (const auto& rec : detail::graphs_from_arg(g6, in)) {
        const Graph& g = rec.graph;
        auto circ = circumference(g);
        if (!circ) throw PreconditionError("graph has no cycle");
        const Cycle c = cycle_text.empty() ? circ->witness : Cycle::of(g, detail::parse_vertex_list(cycle_text));
        std::optional<Path> p;
        if (!path_text.empty()) p = Path::of(g, detail::parse_vertex_list(path_text));
        else p = longest_path_in(g, g.vertices() - c.vertex_set());
        if (!p) throw PreconditionError("the cycle is hamiltonian; G - C is empty");
        json j{{"graph6", to_graph6(g)}, {"decomposition", detail::decomposition_json(g, decompose(g, c, *p))}};
        json verdicts = json::array();
        if (p->length() >= 1) {
          verdicts.push_back(detail::verdict_json(check_lemma1(g, c, *p, circ->length)));
        } else {
          verdicts.push_back(json{{"lemma", "lemma1"}, {"applicable", false}, {"reason", "p_bar = 0"}});
        }
        auto v2 = check_lemma2(g, c, *p, circ->length);
        for (const LemmaVerdict* part : {&v2.a1, &v2.a2, &v2.a3}) {
          json pj = detail::verdict_json(*part);
          if (!v2.applicable) pj["applicable"] = false;
          verdicts.push_back(std::move(pj));
        }
        verdicts.push_back(detail::verdict_json(check_segment_lengths(decompose(g, c, *p))));
        j["verdicts"] = std::move(verdicts);
        detail::emit(out, j);
      }
      return kOk;
    }

    if (*gen) {
      const FamilyClass cls = parse_family_class(cls_text);
      if (d_opt->count() && cls != FamilyClass::R1) throw PreconditionError("--d applies to r1 only");
      std::vector<FamilyInstance> members;
      if (enumerate) {
        members = enumerate_family(cls, n_max, d_opt->count() ? std::optional<int>(d) : std::nullopt);
      } else {
        FamilyInstance inst = build_family(detail::minimal_spec(cls, d));
        if (inst.graph.order() <= n_max) members.push_back(std::move(inst));
      }
      for (const auto& m : members) {
        if (as_json) {
          detail::emit(out, json{{"graph6", to_graph6(m.graph)}, {"class", to_string(m.cls)}, {"spec", m.spec}});
        } else {
          out << to_graph6(m.graph) << '\n';
        }
      }
      out << std::flush;
      return kOk;
    }

    if (*chk) {
      for (const auto& rec : detail::graphs_from_arg(g6, in)) {
        const Graph& g = rec.graph;
        auto v = is_member(g);
        json classes = json::array();
        for (FamilyClass c : v.classes) classes.push_back(to_string(c));
        json j{{"graph6", to_graph6(g)}, {"member", v.member}, {"classes", std::move(classes)}, {"witnesses", v.witnesses}};
        if (certify && v.member) {
          auto cert = certify_member(build_family(v.witnesses.front()));
          j["certificate"] = {{"certified", cert.certified},
                              {"kappa", cert.connectivity},
                              {"tau", cert.toughness.to_string()},
                              {"circumference", cert.circumference},
                              {"all_longest_nondominating", cert.all_longest_nondominating}};
          if (!cert.diagnosis.empty()) j["certificate"]["diagnosis"] = cert.diagnosis;
        }
        detail::emit(out, j);
      }
      return kOk;
    }

    if (*ver) {
      ScanOptions opts;
      for (const auto& t : theorem_texts) opts.theorems.push_back(parse_theorem(t));
      opts.jobs = jobs > 0 ? jobs : default_jobs();
      opts.corpus = input;
      std::unique_ptr<std::ofstream> report;
      if (!report_path.empty()) {
        report = std::make_unique<std::ofstream>(report_path);
        if (!*report) throw PreconditionError("cannot write " + report_path);
        opts.on_graph = [&](const GraphResult& r) {
          const std::string code = to_graph6(*r.graph);
          for (const Verdict& v : r.verdicts) {
            json j = v;
            j["graph6"] = code;
            j["line"] = r.line;
            *report << j.dump() << '\n';
          }
        };
      }
      ScanReport result;
      if (input == "-") {
        result = scan(in, opts);
      } else {
        std::ifstream file(input);
        if (!file) throw PreconditionError("cannot read " + input);
        result = scan(file, opts);
      }
      detail::emit(out, summary_json(result));
      return result.violations.empty() ? kOk : kViolations;
    }

    if (*cor) {
      const auto graphs = gen_all ? all_graphs(gen_n) : connected_graphs(gen_n);
      for (const Graph& g : graphs)
        if (min_degree(g) >= gen_min_degree) out << to_graph6(g) << '\n';
      out << std::flush;
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "domcycle: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace domcycle::cli
