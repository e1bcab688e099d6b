#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "domcycle/cycles.hpp"
#include "domcycle/families.hpp"
#include "domcycle/graph.hpp"
#include "domcycle/graph6.hpp"
#include "domcycle/invariants.hpp"

namespace domcycle {

enum class TheoremId { T1, T2, A, B, C, D };

inline constexpr std::array<TheoremId, 6> kAllTheorems{TheoremId::T1, TheoremId::T2, TheoremId::A,
                                                       TheoremId::B,  TheoremId::C,  TheoremId::D};

inline std::string to_string(TheoremId t) {
  switch (t) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::C: return "C";
    case TheoremId::D: return "D";
  }
  return "?";
}

inline TheoremId parse_theorem(std::string_view s) {
  std::string up(s);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (TheoremId t : kAllTheorems)
    if (to_string(t) == up) return t;
  throw PreconditionError("unknown theorem '" + std::string(s) + "'");
}

struct Verdict {
  TheoremId theorem = TheoremId::T1;
  bool applicable = false;
  /// Meaningful only when applicable.
  bool holds = true;
  /// First failed hypothesis when inapplicable, otherwise a short account of the conclusion.
  std::string reason;
  int order = 0;
  int min_degree = 0;
  std::optional<int> connectivity;
  std::optional<Rational> toughness;
  std::optional<int> circumference;
  /// A longest cycle leaving an edge uncovered.
  std::optional<Cycle> nondominating;
  std::optional<Cycle> hamilton_cycle;
  std::vector<FamilyClass> member_classes;
};

/// Invariants of one graph, each computed on first use.
class GraphProfile {
 public:
  explicit GraphProfile(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  int delta() const { return min_degree(g_); }

  int kappa() {
    if (!kappa_) kappa_ = vertex_connectivity(g_);
    return *kappa_;
  }
  const Rational& tau() {
    if (!tau_) tau_ = toughness(g_).value;
    return *tau_;
  }
  std::optional<int> circ() {
    if (!circ_) {
      auto r = circumference(g_);
      circ_ = r ? std::optional<int>(r->length) : std::optional<int>();
    }
    return *circ_;
  }
  const std::optional<Cycle>& nondominating() {
    if (!nondom_) nondom_ = circ() ? nondominating_cycle_of_length(g_, *circ()) : std::optional<Cycle>();
    return *nondom_;
  }
  const std::optional<Cycle>& hamilton() {
    if (!ham_) ham_ = circ() == g_.order() ? hamilton_cycle(g_) : std::optional<Cycle>();
    return *ham_;
  }
  const MembershipVerdict& membership() {
    if (!member_) member_ = is_member(g_);
    return *member_;
  }

 private:
  const Graph& g_;
  std::optional<int> kappa_;
  std::optional<Rational> tau_;
  std::optional<std::optional<int>> circ_;
  std::optional<std::optional<Cycle>> nondom_;
  std::optional<std::optional<Cycle>> ham_;
  std::optional<MembershipVerdict> member_;
};

namespace detail {

// κ < 2 rules out τ >= 1 for a non-complete graph, and κ is cheaper than τ.
inline bool tough_at_least_one(GraphProfile& p, Verdict& v) {
  if (!p.graph().is_complete()) {
    v.connectivity = p.kappa();
    if (*v.connectivity < 2) {
      v.reason = "kappa < 2, so tau < 1";
      return false;
    }
  }
  v.toughness = p.tau();
  if (*v.toughness < Rational(1)) {
    v.reason = "tau = " + v.toughness->to_string() + " < 1";
    return false;
  }
  return true;
}

inline bool degree_hypothesis(GraphProfile& p, Verdict& v, DegreeThreshold which, std::string_view text) {
  if (degree_threshold(p.graph(), which)) return true;
  v.reason = "3*delta = " + std::to_string(3 * v.min_degree) + " fails " + std::string(text);
  return false;
}

inline void conclude_all_dominating(GraphProfile& p, Verdict& v) {
  v.circumference = p.circ();
  v.nondominating = p.nondominating();
  v.holds = !v.nondominating;
  v.reason = v.holds ? "every longest cycle is dominating" : "a longest cycle is not dominating";
}

}  // namespace detail

/// Evaluates the theorem's hypotheses exactly and, when they hold, its conclusion.
inline Verdict check(GraphProfile& p, TheoremId t) {
  const Graph& g = p.graph();
  if (g.order() < 3) throw PreconditionError("theorem checks need n >= 3");
  Verdict v;
  v.theorem = t;
  v.order = g.order();
  v.min_degree = p.delta();

  switch (t) {
    case TheoremId::T1:
      if (g.order() > 20) throw PreconditionError("T1 needs exact membership, limited to n <= 20");
      if (!detail::degree_hypothesis(p, v, DegreeThreshold::COrMain, ">= n - 2")) return v;
      if (!detail::tough_at_least_one(p, v)) return v;
      v.applicable = true;
      detail::conclude_all_dominating(p, v);
      v.member_classes = p.membership().classes;
      // All longest cycles dominating iff not a member.
      v.holds = !v.nondominating == v.member_classes.empty();
      v.reason = std::string(v.nondominating ? "some longest cycle is not dominating" : "every longest cycle is dominating") +
                 (v.member_classes.empty() ? "; not in R" : "; member of R");
      return v;
    case TheoremId::T2:
      if (!detail::degree_hypothesis(p, v, DegreeThreshold::COrMain, ">= n - 2")) return v;
      v.connectivity = p.kappa();
      if (*v.connectivity < 3) {
        v.reason = "kappa < 3";
        return v;
      }
      if (!detail::tough_at_least_one(p, v)) return v;
      v.applicable = true;
      detail::conclude_all_dominating(p, v);
      return v;
    case TheoremId::A:
      if (!detail::degree_hypothesis(p, v, DegreeThreshold::A, ">= n + 2")) return v;
      v.connectivity = p.kappa();
      if (*v.connectivity < 2) {
        v.reason = "not 2-connected";
        return v;
      }
      v.applicable = true;
      detail::conclude_all_dominating(p, v);
      return v;
    case TheoremId::B:
      if (!detail::degree_hypothesis(p, v, DegreeThreshold::B, ">= n")) return v;
      if (!detail::tough_at_least_one(p, v)) return v;
      v.applicable = true;
      detail::conclude_all_dominating(p, v);
      return v;
    case TheoremId::C:
      if (!detail::degree_hypothesis(p, v, DegreeThreshold::COrMain, ">= n - 2")) return v;
      if (!detail::tough_at_least_one(p, v)) return v;
      if (*v.toughness == Rational(1)) {
        v.reason = "tau = 1, not > 1";
        return v;
      }
      v.applicable = true;
      detail::conclude_all_dominating(p, v);
      return v;
    case TheoremId::D: {
      if (!detail::tough_at_least_one(p, v)) return v;
      v.applicable = true;
      v.circumference = p.circ();
      v.hamilton_cycle = p.hamilton();
      const int need = 2 * v.min_degree + 2;
      v.holds = v.hamilton_cycle || (v.circumference && *v.circumference >= need);
      v.reason = v.hamilton_cycle ? "hamiltonian"
                                  : "circumference " + std::to_string(v.circumference.value_or(0)) +
                                        (v.holds ? " >= " : " < ") + std::to_string(need);
      return v;
    }
  }
  return v;
}

inline Verdict check(const Graph& g, TheoremId t) {
  GraphProfile p(g);
  return check(p, t);
}

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"theorem", to_string(v.theorem)}, {"applicable", v.applicable}};
  if (v.applicable) j["holds"] = v.holds;
  j["reason"] = v.reason;
  nlohmann::json w{{"n", v.order}, {"delta", v.min_degree}};
  if (v.connectivity) w["kappa"] = *v.connectivity;
  if (v.toughness) w["tau"] = v.toughness->to_string();
  if (v.circumference) w["circumference"] = *v.circumference;
  if (v.nondominating) w["nondominating_cycle"] = v.nondominating->vertices();
  if (v.hamilton_cycle) w["hamilton_cycle"] = v.hamilton_cycle->vertices();
  if (v.theorem == TheoremId::T1 && v.applicable) {
    auto classes = nlohmann::json::array();
    for (FamilyClass c : v.member_classes) classes.push_back(to_string(c));
    w["member_of"] = std::move(classes);
  }
  j["witness"] = std::move(w);
}

struct TheoremTally {
  long scanned = 0;
  long applicable = 0;
  long holds = 0;
  long violations = 0;
};

struct ScanViolation {
  std::size_t line = 0;
  std::string graph6;
  Verdict verdict;
};

struct ScanReport {
  std::string corpus;
  std::vector<TheoremId> theorems;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<ScanViolation> violations;
  double seconds = 0;

  long scanned() const { return tallies.empty() ? 0 : tallies.begin()->second.scanned; }
  long violation_count() const { return static_cast<long>(violations.size()); }
};

/// Everything computed for one input graph, in theorem order.
struct GraphResult {
  std::size_t line = 0;
  const Graph* graph = nullptr;
  std::vector<Verdict> verdicts;
};

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Worker count: DOMCYCLE_JOBS if set to a positive integer, else the hardware concurrency.
inline int default_jobs() {
  if (const char* env = std::getenv("DOMCYCLE_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct ScanOptions {
  std::vector<TheoremId> theorems;
  int jobs = 1;
  std::string corpus;
  /// Called once per graph in input order.
  std::function<void(const GraphResult&)> on_graph;
};

namespace detail {

inline std::vector<Verdict> verdicts_for(const Graph& g, std::span<const TheoremId> theorems) {
  GraphProfile p(g);
  std::vector<Verdict> out;
  out.reserve(theorems.size());
  for (TheoremId t : theorems) out.push_back(check(p, t));
  return out;
}

}  // namespace detail

/// Checks every graph against every theorem. `lines` gives the source line of
/// each graph for diagnostics (defaults to 1-based position).
inline ScanReport scan(std::span<const Graph> graphs, const ScanOptions& opts, std::span<const std::size_t> lines = {}) {
  if (opts.theorems.empty()) throw PreconditionError("scan needs at least one theorem");
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.corpus = opts.corpus;
  report.theorems = opts.theorems;
  for (TheoremId t : opts.theorems) report.tallies[t];
  auto line_of = [&](std::size_t i) { return lines.empty() ? i + 1 : lines[i]; };

  constexpr std::size_t kBatch = 2048;
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<Verdict>> results;
  for (std::size_t base = 0; base < graphs.size(); base += kBatch) {
    const std::size_t count = std::min(kBatch, graphs.size() - base);
    results.assign(count, {});
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          results[i] = detail::verdicts_for(graphs[base + i], opts.theorems);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    if (jobs == 1 || count == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < std::min<int>(jobs, static_cast<int>(count)); ++w) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < count; ++i) {
      const Graph& g = graphs[base + i];
      if (errors[i]) {
        try {
          std::rethrow_exception(errors[i]);
        } catch (const std::exception& e) {
          throw ScanError("line " + std::to_string(line_of(base + i)) + " (" + to_graph6(g) + "): " + e.what());
        }
      }
      for (const Verdict& v : results[i]) {
        TheoremTally& tally = report.tallies[v.theorem];
        ++tally.scanned;
        if (!v.applicable) continue;
        ++tally.applicable;
        if (v.holds) {
          ++tally.holds;
          continue;
        }
        // Confirm on a fresh single-threaded evaluation before reporting.
        const Verdict again = check(g, v.theorem);
        if (!again.applicable || again.holds)
          throw ScanError("line " + std::to_string(line_of(base + i)) + ": violation did not re-verify");
        ++tally.violations;
        report.violations.push_back({line_of(base + i), to_graph6(g), again});
      }
      if (opts.on_graph) opts.on_graph(GraphResult{line_of(base + i), &g, results[i]});
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Scans a graph6 stream; parse errors surface as Graph6Error with the line number.
inline ScanReport scan(std::istream& in, const ScanOptions& opts) {
  auto records = read_graph6_stream(in);
  std::vector<Graph> graphs;
  std::vector<std::size_t> lines;
  graphs.reserve(records.size());
  for (auto& r : records) {
    graphs.push_back(std::move(r.graph));
    lines.push_back(r.line);
  }
  return scan(graphs, opts, lines);
}

/// The summary object; "seconds" is the only field that varies between runs.
inline nlohmann::json summary_json(const ScanReport& r) {
  nlohmann::json j{{"corpus", r.corpus}, {"scanned", r.scanned()}};
  nlohmann::json per = nlohmann::json::object();
  for (TheoremId t : r.theorems) {
    const TheoremTally& tl = r.tallies.at(t);
    per[to_string(t)] = {{"scanned", tl.scanned},
                         {"applicable", tl.applicable},
                         {"inapplicable", tl.scanned - tl.applicable},
                         {"holds", tl.holds},
                         {"violations", tl.violations}};
  }
  j["theorems"] = std::move(per);
  auto vs = nlohmann::json::array();
  for (const auto& v : r.violations) vs.push_back({{"line", v.line}, {"graph6", v.graph6}, {"verdict", v.verdict}});
  j["violations"] = std::move(vs);
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace domcycle
