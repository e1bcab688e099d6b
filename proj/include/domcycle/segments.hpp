#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "domcycle/cycles.hpp"
#include "domcycle/graph.hpp"

namespace domcycle {

/// Arc of the cycle between consecutive attachment vertices, both ends included.
struct Segment {
  Vertex start = 0;
  Vertex end = 0;
  int length = 0;
  std::vector<Vertex> vertices;
  /// The arc without its two ends.
  VertexSet interior;
};

/// Elementary segments of a cycle C created by the neighbors on C of the
/// ends x, y of a path P lying outside C.
struct SegmentDecomposition {
  Cycle cycle;
  Path path;
  int p_bar = 0;
  /// N_C(x) ∪ N_C(y) in the cycle's canonical orientation.
  std::vector<Vertex> xi;
  std::vector<Segment> segments;
  VertexSet a1;  ///< N_C(x) \ N_C(y)
  VertexSet a2;  ///< N_C(y) \ N_C(x)
  VertexSet m;   ///< N_C(x) ∩ N_C(y)
  int sigma1 = 0;
  int sigma2 = 0;

  Vertex x() const { return path.front(); }
  Vertex y() const { return path.back(); }
};

/// A path z..w with z, w interior to two distinct segments and every other
/// vertex outside C ∪ P.
struct IntermediatePath {
  int from_segment = 0;
  int to_segment = 0;
  std::vector<Vertex> vertices;

  Vertex z() const { return vertices.front(); }
  Vertex w() const { return vertices.back(); }
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct LemmaVerdict {
  std::string lemma;
  bool applicable = false;
  /// Meaningful only when applicable.
  bool holds = true;
  int bound_required = 0;
  int bound_observed = 0;
  std::string witness;
};

/// (a1), (a2), (a3) are judged separately; a part with no triggering segment
/// pair is inapplicable and vacuously holds.
struct Lemma2Verdict {
  bool applicable = false;
  LemmaVerdict a1;
  LemmaVerdict a2;
  LemmaVerdict a3;

  bool holds() const { return !applicable || (a1.holds && a2.holds && a3.holds); }
};

inline SegmentDecomposition decompose(const Graph& g, const Cycle& c, const Path& p) {
  const Cycle cyc = Cycle::of(g, c.vertices());
  const Path path = Path::of(g, p.vertices());
  const VertexSet on_cycle = cyc.vertex_set();
  if (path.vertex_set().intersects(on_cycle)) throw PreconditionError("path touches cycle");

  const Vertex x = path.front();
  const Vertex y = path.back();
  const VertexSet nx = g.neighbors(x) & on_cycle;
  const VertexSet ny = g.neighbors(y) & on_cycle;
  const VertexSet attach = nx | ny;
  if (attach.empty()) throw PreconditionError("path ends have no neighbor on the cycle");

  SegmentDecomposition d{cyc, path, 0, {}, {}, {}, {}, {}, 0, 0};
  d.p_bar = path.length();
  d.a1 = nx - ny;
  d.a2 = ny - nx;
  d.m = nx & ny;
  d.sigma1 = d.a1.size();
  d.sigma2 = d.a2.size();

  const auto& cv = cyc.vertices();
  const int len = cyc.length();
  std::vector<int> pos;
  for (int i = 0; i < len; ++i) {
    if (attach.contains(cv[static_cast<std::size_t>(i)])) {
      pos.push_back(i);
      d.xi.push_back(cv[static_cast<std::size_t>(i)]);
    }
  }
  const int s = static_cast<int>(pos.size());
  for (int k = 0; k < s; ++k) {
    Segment seg;
    const int from = pos[static_cast<std::size_t>(k)];
    const int to = pos[static_cast<std::size_t>((k + 1) % s)];
    seg.length = s == 1 ? len : (to - from + len) % len;
    for (int step = 0; step <= seg.length; ++step) {
      const Vertex v = cv[static_cast<std::size_t>((from + step) % len)];
      seg.vertices.push_back(v);
      if (step > 0 && step < seg.length) seg.interior = seg.interior.with(v);
    }
    seg.start = seg.vertices.front();
    seg.end = seg.vertices.back();
    d.segments.push_back(std::move(seg));
  }
  return d;
}

/// Υ(I_a, I_b): every intermediate path from the interior of segment a to the
/// interior of segment b, one per (z, w, interior vertex set).
inline std::vector<IntermediatePath> intermediate_paths(const Graph& g, const SegmentDecomposition& d, int a,
                                                        int b) {
  const int s = static_cast<int>(d.segments.size());
  if (a == b || a < 0 || b < 0 || a >= s || b >= s) throw PreconditionError("invalid segment pair");
  const VertexSet outside = g.vertices() - d.cycle.vertex_set() - d.path.vertex_set();
  const VertexSet from = d.segments[static_cast<std::size_t>(a)].interior;
  const VertexSet to = d.segments[static_cast<std::size_t>(b)].interior;

  std::map<std::tuple<Vertex, Vertex, std::uint64_t>, std::vector<Vertex>> found;
  std::vector<Vertex> seq;
  auto dfs = [&](auto&& self, VertexSet used) -> void {
    const Vertex end = seq.back();
    for (Vertex w : g.neighbors(end) & to) {
      std::uint64_t inner = (used - VertexSet::single(seq.front())).bits();
      auto key = std::make_tuple(seq.front(), w, inner);
      if (!found.count(key)) {
        std::vector<Vertex> full = seq;
        full.push_back(w);
        found.emplace(key, std::move(full));
      }
    }
    for (Vertex r : g.neighbors(end) & (outside - used)) {
      seq.push_back(r);
      self(self, used.with(r));
      seq.pop_back();
    }
  };
  for (Vertex z : from) {
    seq.assign(1, z);
    dfs(dfs, VertexSet::single(z));
  }

  std::vector<IntermediatePath> out;
  for (auto& [key, vs] : found) out.push_back({a, b, std::move(vs)});
  std::sort(out.begin(), out.end(), [](const IntermediatePath& l, const IntermediatePath& r) {
    return std::make_pair(l.length(), l.vertices) < std::make_pair(r.length(), r.vertices);
  });
  return out;
}

/// Union of Υ over every pair drawn from `segment_ids`.
inline std::vector<IntermediatePath> intermediate_paths_among(const Graph& g, const SegmentDecomposition& d,
                                                              std::span<const int> segment_ids) {
  std::vector<IntermediatePath> out;
  for (std::size_t i = 0; i < segment_ids.size(); ++i)
    for (std::size_t j = i + 1; j < segment_ids.size(); ++j) {
      auto part = intermediate_paths(g, d, segment_ids[i], segment_ids[j]);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

/// Length facts every decomposition of a longest cycle satisfies: each segment
/// has length >= 2, and >= p_bar + 2 when an end is in M or the ends lie in
/// different A-sets.
inline LemmaVerdict check_segment_lengths(const SegmentDecomposition& d) {
  LemmaVerdict v{"segments", true, true, 0, 0, {}};
  int worst_slack = 1 << 30;
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    const Segment& seg = d.segments[i];
    const bool long_needed = d.m.contains(seg.start) || d.m.contains(seg.end) ||
                             (d.a1.contains(seg.start) && d.a2.contains(seg.end)) ||
                             (d.a2.contains(seg.start) && d.a1.contains(seg.end));
    const int need = long_needed ? d.p_bar + 2 : 2;
    if (seg.length - need < worst_slack) {
      worst_slack = seg.length - need;
      v.bound_required = need;
      v.bound_observed = seg.length;
    }
    if (seg.length < need && v.holds) {
      v.holds = false;
      v.witness = "segment " + std::to_string(i) + " (" + std::to_string(seg.start) + "->" +
                  std::to_string(seg.end) + ") has length " + std::to_string(seg.length) + " < " +
                  std::to_string(need);
    }
  }
  return v;
}

namespace detail {

inline void require_extremal(const Graph& g, const Cycle& c, const Path& p, std::optional<int> circumference_hint) {
  const Cycle cyc = Cycle::of(g, c.vertices());
  (void)Path::of(g, p.vertices());
  int circ = 0;
  if (circumference_hint) {
    circ = *circumference_hint;
  } else {
    auto r = circumference(g);
    circ = r ? r->length : 0;
  }
  if (cyc.length() != circ) throw PreconditionError("cycle is not a longest cycle");
  const VertexSet rest = g.vertices() - cyc.vertex_set();
  if (p.vertex_set().intersects(cyc.vertex_set())) throw PreconditionError("path touches cycle");
  auto longest = longest_path_in(g, rest);
  if (!longest || longest->length() != p.length()) throw PreconditionError("path is not a longest path in G \\ C");
}

inline std::string describe(const Cycle& c, const Path& p) {
  return "C=" + c.to_string() + " P=" + p.to_string();
}

}  // namespace detail

/// Lower bound on |C| for a longest cycle C and a longest path P (p_bar >= 1)
/// of G \ C whose ends see at least two cycle vertices each, with different
/// neighborhoods. `circumference_hint` skips recomputing the circumference.
inline LemmaVerdict check_lemma1(const Graph& g, const Cycle& c, const Path& p,
                                 std::optional<int> circumference_hint = std::nullopt) {
  detail::require_extremal(g, c, p, circumference_hint);
  if (p.length() < 1) throw PreconditionError("lemma 1 needs a path of length >= 1");

  LemmaVerdict v;
  v.lemma = "lemma1";
  const VertexSet on_cycle = c.vertex_set();
  const VertexSet nx = g.neighbors(p.front()) & on_cycle;
  const VertexSet ny = g.neighbors(p.back()) & on_cycle;
  v.applicable = nx.size() >= 2 && ny.size() >= 2 && nx != ny;
  if (!v.applicable) return v;

  const int delta = min_degree(g);
  const int p_bar = p.length();
  const int sigma = std::max((nx - ny).size(), (ny - nx).size());
  v.bound_required = p_bar == 1 ? 3 * delta + sigma - 1 : std::max(2 * p_bar + 8, 4 * delta - 2 * p_bar);
  v.bound_observed = c.length();
  v.holds = v.bound_observed >= v.bound_required;
  if (!v.holds) v.witness = detail::describe(c, p);
  return v;
}

inline Lemma2Verdict check_lemma2(const Graph& g, const Cycle& c, const Path& p,
                                  std::optional<int> circumference_hint = std::nullopt) {
  detail::require_extremal(g, c, p, circumference_hint);

  Lemma2Verdict out;
  out.a1.lemma = "lemma2.a1";
  out.a2.lemma = "lemma2.a2";
  out.a3.lemma = "lemma2.a3";
  const VertexSet on_cycle = c.vertex_set();
  const VertexSet nx = g.neighbors(p.front()) & on_cycle;
  const VertexSet ny = g.neighbors(p.back()) & on_cycle;
  out.applicable = nx == ny && nx.size() >= 2;
  if (!out.applicable) return out;

  const SegmentDecomposition d = decompose(g, c, p);
  const int p_bar = d.p_bar;
  const int s = static_cast<int>(d.segments.size());
  int slack1 = 1 << 30, slack2 = 1 << 30, slack3 = 1 << 30;

  auto note = [&](LemmaVerdict& v, int& slack, int required, int observed, const std::string& where) {
    v.applicable = true;
    if (observed - required < slack) {
      slack = observed - required;
      v.bound_required = required;
      v.bound_observed = observed;
    }
    if (observed < required && v.holds) {
      v.holds = false;
      v.witness = detail::describe(d.cycle, d.path) + " " + where;
    }
  };

  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      const auto ups = intermediate_paths(g, d, a, b);
      if (ups.empty()) continue;
      const int sum = d.segments[static_cast<std::size_t>(a)].length + d.segments[static_cast<std::size_t>(b)].length;
      const std::string where = "segments " + std::to_string(a) + "," + std::to_string(b);

      for (const auto& l : ups)
        note(out.a1, slack1, 2 * p_bar + 2 * l.length() + 4, sum, where + " L=" + detail::join_vertices(l.vertices));

      const bool all_edges = std::all_of(ups.begin(), ups.end(), [](const IntermediatePath& l) { return l.length() == 1; });
      if (!all_edges) continue;
      const int count = static_cast<int>(ups.size());
      if (count <= 3) note(out.a2, slack2, 2 * p_bar + count + 5, sum, where + " |Y|=" + std::to_string(count));

      bool independent_pair = false;
      for (std::size_t i = 0; i < ups.size() && !independent_pair; ++i)
        for (std::size_t j = i + 1; j < ups.size() && !independent_pair; ++j)
          independent_pair = ups[i].z() != ups[j].z() && ups[i].w() != ups[j].w();
      if (independent_pair) note(out.a3, slack3, 2 * p_bar + 8, sum, where + " independent edges");
    }
  }
  return out;
}

}  // namespace domcycle

namespace domcycle {

struct LemmaSweepStats {
  long configurations = 0;
  long lemma1_applicable = 0;
  long lemma2_applicable = 0;
  long violations = 0;
  std::vector<std::string> witnesses;

  LemmaSweepStats& operator+=(const LemmaSweepStats& o) {
    configurations += o.configurations;
    lemma1_applicable += o.lemma1_applicable;
    lemma2_applicable += o.lemma2_applicable;
    violations += o.violations;
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    return *this;
  }
};

/// Every (longest cycle, longest path of G \ C) pair of g, checked against
/// both lemmas and the segment length facts.
inline LemmaSweepStats sweep_lemmas(const Graph& g) {
  LemmaSweepStats st;
  auto circ = circumference(g);
  if (!circ) return st;
  for (const Cycle& c : all_longest_cycles(g)) {
    const VertexSet rest = g.vertices() - c.vertex_set();
    for (const Path& p : all_longest_paths_in(g, rest)) {
      ++st.configurations;
      const VertexSet on_cycle = c.vertex_set();
      if (!(g.neighbors(p.front()) | g.neighbors(p.back())).intersects(on_cycle)) continue;
      auto fail = [&](const std::string& what) {
        ++st.violations;
        st.witnesses.push_back(what);
      };
      auto seg = check_segment_lengths(decompose(g, c, p));
      if (!seg.holds) fail(seg.witness);
      if (p.length() >= 1) {
        auto v1 = check_lemma1(g, c, p, circ->length);
        if (v1.applicable) ++st.lemma1_applicable;
        if (v1.applicable && !v1.holds) fail("lemma1 " + v1.witness);
      }
      auto v2 = check_lemma2(g, c, p, circ->length);
      if (v2.applicable) ++st.lemma2_applicable;
      for (const LemmaVerdict* part : {&v2.a1, &v2.a2, &v2.a3})
        if (!part->holds) fail(part->lemma + " " + part->witness);
    }
  }
  return st;
}

}  // namespace domcycle
