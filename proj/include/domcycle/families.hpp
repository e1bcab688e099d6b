#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "domcycle/canonical.hpp"
#include "domcycle/cycles.hpp"
#include "domcycle/graph.hpp"
#include "domcycle/graph6.hpp"
#include "domcycle/invariants.hpp"

namespace domcycle {

enum class FamilyClass { R1, R2, R3, R4 };

inline constexpr std::array<FamilyClass, 4> kAllFamilies{FamilyClass::R1, FamilyClass::R2, FamilyClass::R3,
                                                         FamilyClass::R4};

inline std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::R1: return "R1";
    case FamilyClass::R2: return "R2";
    case FamilyClass::R3: return "R3";
    case FamilyClass::R4: return "R4";
  }
  return "?";
}

inline FamilyClass parse_family_class(std::string_view s) {
  if (s == "R1" || s == "r1") return FamilyClass::R1;
  if (s == "R2" || s == "r2") return FamilyClass::R2;
  if (s == "R3" || s == "r3") return FamilyClass::R3;
  if (s == "R4" || s == "r4") return FamilyClass::R4;
  throw PreconditionError("unknown family class '" + std::string(s) + "'");
}

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One of the graphs H_i glued together, with its marked vertices.
struct Branch {
  Graph graph;
  Vertex x = 0;
  Vertex y = 1;
  std::optional<Vertex> z;

  bool operator==(const Branch&) const = default;
};

/// Extension edges; y1y3 and y2y3 apply to R2 and R3, zx1 to R2 only
/// (R3 always has it).
struct OptionalEdges {
  bool y1y3 = false;
  bool y2y3 = false;
  bool zx1 = false;

  bool operator==(const OptionalEdges&) const = default;
};

struct FamilySpec {
  FamilyClass cls = FamilyClass::R1;
  std::vector<Branch> branches;
  /// Minimum degree for R1; ignored by the other classes.
  int d = 3;
  OptionalEdges optional;

  bool operator==(const FamilySpec&) const = default;
};

struct FamilyInstance {
  Graph graph;
  FamilyClass cls = FamilyClass::R1;
  FamilySpec spec;
  /// vertex_map[i][v] is the vertex of `graph` that vertex v of branch i became.
  std::vector<std::vector<Vertex>> vertex_map;
  /// z for R2 and R3.
  std::optional<Vertex> z;
};

inline int required_min_degree(const FamilySpec& s) {
  switch (s.cls) {
    case FamilyClass::R1: return s.d;
    case FamilyClass::R2: return 3;
    case FamilyClass::R3:
    case FamilyClass::R4: return 4;
  }
  return 0;
}

/// Glues the branches and checks every class constraint on the result.
inline FamilyInstance build_family(const FamilySpec& spec) {
  const std::size_t want_branches = spec.cls == FamilyClass::R4 ? 4 : 3;
  if (spec.branches.size() != want_branches) throw FamilyError(to_string(spec.cls) + " needs " +
                                                               std::to_string(want_branches) + " branches");
  const bool r4 = spec.cls == FamilyClass::R4;
  const bool has_z = spec.cls == FamilyClass::R2 || spec.cls == FamilyClass::R3;

  for (std::size_t i = 0; i < spec.branches.size(); ++i) {
    const Branch& b = spec.branches[i];
    const int k = b.graph.order();
    const std::string name = "branch " + std::to_string(i + 1);
    auto in_range = [&](Vertex v) { return v >= 0 && v < k; };
    if (!in_range(b.x) || !in_range(b.y)) throw FamilyError(name + ": marked vertex out of range");
    if (b.x == b.y) throw FamilyError(name + ": marked vertices coincide");
    if (r4) {
      if (!b.z || !in_range(*b.z)) throw FamilyError(name + ": missing z mark");
      if (*b.z == b.x || *b.z == b.y) throw FamilyError(name + ": marked vertices coincide");
    } else if (b.z) {
      throw FamilyError(name + ": z mark only exists in R4");
    }

    switch (spec.cls) {
      case FamilyClass::R1: {
        if (spec.d < 3) throw FamilyError("R1 needs d >= 3");
        const bool ok = i < 2 ? k == spec.d + 1 : (k == spec.d + 1 || k == spec.d + 2);
        if (!ok) throw FamilyError(name + ": size " + std::to_string(k) + " violates the R1 size constraint");
        if (!is_connected(b.graph)) throw FamilyError(name + ": R1 branches must be connected");
        break;
      }
      case FamilyClass::R2:
        if (k != 4) throw FamilyError(name + ": R2 branches have 4 vertices");
        break;
      case FamilyClass::R3:
      case FamilyClass::R4:
        if (k != 5) throw FamilyError(name + ": " + to_string(spec.cls) + " branches have 5 vertices");
        break;
    }
  }
  if (spec.cls == FamilyClass::R1 || r4) {
    if (spec.optional != OptionalEdges{}) throw FamilyError(to_string(spec.cls) + " has no optional edges");
  }
  if (spec.cls == FamilyClass::R3 && spec.optional.zx1)
    throw FamilyError("zx1 is part of the R3 base graph, not an option");

  // Hub x is vertex 0 (and y is vertex 1 in R4); the rest follow branch by branch.
  FamilyInstance inst;
  inst.cls = spec.cls;
  inst.spec = spec;
  int next = r4 ? 2 : 1;
  for (const Branch& b : spec.branches) {
    std::vector<Vertex> map(static_cast<std::size_t>(b.graph.order()), -1);
    map[static_cast<std::size_t>(b.x)] = 0;
    if (r4) map[static_cast<std::size_t>(b.y)] = 1;
    for (Vertex v = 0; v < b.graph.order(); ++v)
      if (map[static_cast<std::size_t>(v)] < 0) map[static_cast<std::size_t>(v)] = next++;
    inst.vertex_map.push_back(std::move(map));
  }
  if (has_z) inst.z = next++;
  if (next > kMaxOrder) throw FamilyError("family instance too large");

  GraphBuilder gb(next);
  for (std::size_t i = 0; i < spec.branches.size(); ++i)
    for (const auto& [u, v] : spec.branches[i].graph.edges())
      gb.add_edge(inst.vertex_map[i][static_cast<std::size_t>(u)], inst.vertex_map[i][static_cast<std::size_t>(v)]);
  auto y = [&](std::size_t i) { return inst.vertex_map[i][static_cast<std::size_t>(spec.branches[i].y)]; };
  switch (spec.cls) {
    case FamilyClass::R1:
      gb.add_edge(y(0), y(1)).add_edge(y(1), y(2)).add_edge(y(0), y(2));
      break;
    case FamilyClass::R2:
    case FamilyClass::R3:
      for (std::size_t i = 0; i < 3; ++i) gb.add_edge(*inst.z, y(i));
      gb.add_edge(y(0), y(1));
      if (spec.optional.y1y3) gb.add_edge(y(0), y(2));
      if (spec.optional.y2y3) gb.add_edge(y(1), y(2));
      if (spec.cls == FamilyClass::R3 || spec.optional.zx1) gb.add_edge(*inst.z, 0);
      break;
    case FamilyClass::R4: {
      auto z = [&](std::size_t i) { return inst.vertex_map[i][static_cast<std::size_t>(*spec.branches[i].z)]; };
      gb.add_edge(z(0), z(1)).add_edge(z(1), z(2)).add_edge(z(0), z(2));
      break;
    }
  }
  inst.graph = gb.build();

  const int delta = min_degree(inst.graph);
  if (delta != required_min_degree(spec))
    throw FamilyError("minimum degree " + std::to_string(delta) + " but " + to_string(spec.cls) + " requires " +
                      std::to_string(required_min_degree(spec)));
  return inst;
}

namespace detail {

/// Shape of a branch: order, per-vertex lower bounds on the degree inside the
/// branch, and mark colors (0 for unmarked vertices).
struct BranchShape {
  int order = 0;
  std::vector<int> lower;
  std::vector<int> colors;
  bool connected = false;
};

/// All branch graphs of the shape, one per mark-preserving isomorphism class.
inline std::vector<Graph> enumerate_branches(const BranchShape& s) {
  const int k = s.order;
  std::vector<Edge> pairs;
  for (Vertex v = 1; v < k; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::vector<int> deg(static_cast<std::size_t>(k), 0);
  std::vector<int> open(static_cast<std::size_t>(k), k - 1);
  std::vector<Edge> chosen;
  std::map<CanonicalForm, Graph> found;

  auto dfs = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      Graph g = from_edge_list(k, chosen);
      if (s.connected && !is_connected(g)) return;
      auto form = canonical_form(g, s.colors);
      found.try_emplace(std::move(form), std::move(g));
      return;
    }
    const auto [u, v] = pairs[idx];
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
    --open[su];
    --open[sv];
    if (deg[su] + open[su] >= s.lower[su] && deg[sv] + open[sv] >= s.lower[sv]) self(self, idx + 1);
    ++deg[su];
    ++deg[sv];
    chosen.push_back(pairs[idx]);
    self(self, idx + 1);
    chosen.pop_back();
    --deg[su];
    --deg[sv];
    ++open[su];
    ++open[sv];
  };
  dfs(dfs, 0);

  std::vector<Graph> out;
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

/// Branch graphs with x = 0, y = 1 (and z = 2 when `with_z`).
inline std::vector<Graph> branch_catalog(int order, int lower_x, int lower_y, int lower_z, int lower_rest,
                                         bool with_z, bool connected) {
  static std::mutex mu;
  static std::map<std::vector<int>, std::vector<Graph>> cache;
  std::vector<int> key{order, lower_x, lower_y, lower_z, lower_rest, with_z, connected};
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  BranchShape s;
  s.order = order;
  s.connected = connected;
  for (Vertex v = 0; v < order; ++v) {
    const bool is_z = with_z && v == 2;
    s.lower.push_back(v == 0 ? lower_x : v == 1 ? lower_y : is_z ? lower_z : lower_rest);
    s.colors.push_back(v == 0 ? 1 : v == 1 ? 2 : is_z ? 3 : 0);
  }
  return cache[key] = enumerate_branches(s);
}

inline Branch marked(const Graph& g, bool with_z) {
  Branch b{g, 0, 1, std::nullopt};
  if (with_z) b.z = 2;
  return b;
}

}  // namespace detail

/// Every member of the class with at most n_max vertices, one per isomorphism
/// class, ordered by order and then canonical form. `d` restricts R1.
inline std::vector<FamilyInstance> enumerate_family(FamilyClass cls, int n_max, std::optional<int> d = std::nullopt) {
  if (n_max < 1 || n_max > 20) throw PreconditionError("enumerate_family supports 1 <= n_max <= 20");
  std::map<std::pair<int, CanonicalForm>, FamilyInstance> found;
  auto offer = [&](const FamilySpec& spec) {
    FamilyInstance inst;
    try {
      inst = build_family(spec);
    } catch (const FamilyError&) {
      return;
    }
    if (inst.graph.order() > n_max) return;
    auto key = std::make_pair(inst.graph.order(), canonical_form(inst.graph));
    found.try_emplace(std::move(key), std::move(inst));
  };

  switch (cls) {
    case FamilyClass::R1: {
      for (int dd = 3; 3 * dd + 1 <= n_max; ++dd) {
        if (d && *d != dd) continue;
        // Unmarked vertices see only their branch; y gets two triangle edges.
        const auto small = detail::branch_catalog(dd + 1, 0, dd - 2, 0, dd, false, true);
        for (int size3 : {dd + 1, dd + 2}) {
          if (2 * dd + size3 > n_max) continue;
          const auto third = size3 == dd + 1 ? small : detail::branch_catalog(size3, 0, dd - 2, 0, dd, false, true);
          for (std::size_t i = 0; i < small.size(); ++i)
            for (std::size_t j = i; j < small.size(); ++j)
              for (std::size_t k = size3 == dd + 1 ? j : 0; k < third.size(); ++k)
                offer({cls,
                       {detail::marked(small[i], false), detail::marked(small[j], false),
                        detail::marked(third[k], false)},
                       dd,
                       {}});
        }
      }
      break;
    }
    case FamilyClass::R2:
    case FamilyClass::R3: {
      const bool r2 = cls == FamilyClass::R2;
      const int size = r2 ? 4 : 5;
      const int delta = r2 ? 3 : 4;
      if (3 * size - 1 > n_max) break;
      // y may get z and two y-edges from outside.
      const auto cat = detail::branch_catalog(size, 0, std::max(0, delta - 3), 0, delta, false, false);
      for (const Graph& a : cat)
        for (const Graph& b : cat)
          for (const Graph& c : cat)
            for (int mask = 0; mask < (r2 ? 8 : 4); ++mask)
              offer({cls,
                     {detail::marked(a, false), detail::marked(b, false), detail::marked(c, false)},
                     delta,
                     {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}});
      break;
    }
    case FamilyClass::R4: {
      if (14 > n_max) break;
      const auto tri = detail::branch_catalog(5, 0, 0, 2, 4, true, false);
      const auto last = detail::branch_catalog(5, 0, 0, 4, 4, true, false);
      for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i; j < tri.size(); ++j)
          for (std::size_t k = j; k < tri.size(); ++k)
            for (const Graph& h4 : last)
              offer({cls,
                     {detail::marked(tri[i], true), detail::marked(tri[j], true), detail::marked(tri[k], true),
                      detail::marked(h4, true)},
                     4,
                     {}});
      break;
    }
  }

  std::vector<FamilyInstance> out;
  for (auto& [key, inst] : found) out.push_back(std::move(inst));
  return out;
}

struct MembershipVerdict {
  bool member = false;
  /// Every class the graph belongs to; more than one means the classes overlap here.
  std::vector<FamilyClass> classes;
  /// Rebuilds a graph isomorphic to the input; one per entry of `classes`.
  std::vector<FamilySpec> witnesses;
};

namespace detail {

/// Branch graph on `hubs` ∪ `part`, taking every edge of g inside that set
/// except the excluded ones. Local labels: hubs first, then `part` ascending.
inline Branch extract_branch(const Graph& g, std::span<const Vertex> hubs, VertexSet part,
                             std::span<const Edge> excluded, Vertex y, std::optional<Vertex> z) {
  std::vector<Vertex> order(hubs.begin(), hubs.end());
  std::vector<Vertex> rest;
  for (Vertex v : part)
    if (v != y && (!z || v != *z)) rest.push_back(v);
  // Marks first so the branch uses the catalog's x = 0, y = 1, z = 2 layout.
  if (hubs.size() == 1) order.push_back(y);
  if (z) order.push_back(*z);
  order.insert(order.end(), rest.begin(), rest.end());
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);

  GraphBuilder b(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Vertex u = order[i], v = order[j];
      if (!g.adjacent(u, v)) continue;
      const bool skip = std::any_of(excluded.begin(), excluded.end(), [&](const Edge& e) {
        return (e.first == u && e.second == v) || (e.first == v && e.second == u);
      });
      if (!skip) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  Branch out{b.build(), 0, 1, std::nullopt};
  if (z) out.z = 2;
  return out;
}

/// Components of g - removed with the given edges deleted.
inline std::vector<VertexSet> split(const Graph& g, VertexSet removed, std::span<const Edge> cut_edges) {
  GraphBuilder b(g.order());
  for (const auto& [u, v] : g.edges()) {
    if (removed.contains(u) || removed.contains(v)) continue;
    const bool skip = std::any_of(cut_edges.begin(), cut_edges.end(), [&](const Edge& e) {
      return (e.first == u && e.second == v) || (e.first == v && e.second == u);
    });
    if (!skip) b.add_edge(u, v);
  }
  return components_within(b.build(), g.vertices() - removed);
}

inline bool rebuilds(const FamilySpec& spec, const CanonicalForm& target) {
  try {
    return canonical_form(build_family(spec).graph) == target;
  } catch (const FamilyError&) {
    return false;
  }
}

inline std::optional<FamilySpec> recognize_r1(const Graph& g, const CanonicalForm& form) {
  const int n = g.order();
  const int d = min_degree(g);
  if (d < 3 || (n != 3 * d + 1 && n != 3 * d + 2)) return std::nullopt;
  for (Vertex x = 0; x < n; ++x) {
    const VertexSet others = g.vertices().without(x);
    for (Vertex a : others)
      for (Vertex b : g.neighbors(a) & others)
        for (Vertex c : g.neighbors(a) & g.neighbors(b) & others) {
          if (!(a < b && b < c)) continue;
          const std::array<Edge, 3> tri{Edge{a, b}, Edge{b, c}, Edge{a, c}};
          auto parts = split(g, VertexSet::single(x), tri);
          if (parts.size() < 3) continue;
          // Parts holding a triangle vertex anchor the branches; a part with
          // none hangs off x and can belong to any branch.
          std::array<Vertex, 3> ys{a, b, c};
          std::array<VertexSet, 3> anchored;
          std::vector<VertexSet> loose;
          bool ok = true;
          for (const VertexSet& p : parts) {
            int hits = 0;
            for (std::size_t i = 0; i < 3; ++i)
              if (p.contains(ys[i])) {
                anchored[i] = p;
                ++hits;
              }
            if (hits > 1) ok = false;
            if (hits == 0) loose.push_back(p);
          }
          if (!ok || loose.size() > 6) continue;
          std::size_t assignments = 1;
          for (std::size_t i = 0; i < loose.size(); ++i) assignments *= 3;
          for (std::size_t code = 0; code < assignments; ++code) {
            std::array<VertexSet, 3> branch = anchored;
            for (std::size_t i = 0, rest = code; i < loose.size(); ++i, rest /= 3)
              branch[rest % 3] = branch[rest % 3] | loose[i];
            std::array<std::size_t, 3> order{0, 1, 2};
            // The largest part plays H3.
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t l, std::size_t r) { return branch[l].size() < branch[r].size(); });
            FamilySpec spec{FamilyClass::R1, {}, d, {}};
            const std::array<Vertex, 1> hub{x};
            for (std::size_t i : order) spec.branches.push_back(extract_branch(g, hub, branch[i], tri, ys[i], std::nullopt));
            if (rebuilds(spec, form)) return spec;
          }
        }
  }
  return std::nullopt;
}

inline std::optional<FamilySpec> recognize_r2_r3(const Graph& g, const CanonicalForm& form, FamilyClass cls) {
  const bool r2 = cls == FamilyClass::R2;
  const int n = g.order();
  if (n != (r2 ? 11 : 14) || min_degree(g) != (r2 ? 3 : 4)) return std::nullopt;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex z = 0; z < n; ++z) {
      if (z == x) continue;
      if (!r2 && !g.adjacent(z, x)) continue;
      const VertexSet ys = g.neighbors(z).without(x);
      if (ys.size() != 3) continue;
      const auto yv = ys.to_vector();
      std::vector<Edge> y_edges;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          if (g.adjacent(yv[i], yv[j])) y_edges.emplace_back(yv[i], yv[j]);
      if (y_edges.empty()) continue;
      auto parts = split(g, VertexSet{x, z}, y_edges);
      if (parts.size() != 3) continue;
      // y1 y2 is the first y-edge; y3 is the remaining one.
      const Vertex y1 = y_edges[0].first, y2 = y_edges[0].second;
      const Vertex y3 = (ys - VertexSet{y1, y2}).first();
      FamilySpec spec{cls, {}, r2 ? 3 : 4, {g.adjacent(y1, y3), g.adjacent(y2, y3), r2 && g.adjacent(z, x)}};
      const std::array<Vertex, 1> hub{x};
      bool ok = true;
      for (Vertex y : {y1, y2, y3}) {
        auto it = std::find_if(parts.begin(), parts.end(), [&](const VertexSet& p) { return p.contains(y); });
        if (it == parts.end() || (*it & ys).size() != 1) {
          ok = false;
          break;
        }
        spec.branches.push_back(extract_branch(g, hub, *it, y_edges, y, std::nullopt));
      }
      if (ok && rebuilds(spec, form)) return spec;
    }
  return std::nullopt;
}

inline std::optional<FamilySpec> recognize_r4(const Graph& g, const CanonicalForm& form) {
  const int n = g.order();
  if (n != 14 || min_degree(g) != 4) return std::nullopt;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const VertexSet others = g.vertices() - VertexSet{x, y};
      for (Vertex a : others)
        for (Vertex b : g.neighbors(a) & others)
          for (Vertex c : g.neighbors(a) & g.neighbors(b) & others) {
            if (!(a < b && b < c)) continue;
            const std::array<Edge, 3> tri{Edge{a, b}, Edge{b, c}, Edge{a, c}};
            auto parts = split(g, VertexSet{x, y}, tri);
            if (parts.size() != 4) continue;
            FamilySpec spec{FamilyClass::R4, {}, 4, {}};
            const std::array<Vertex, 2> hubs{x, y};
            VertexSet used;
            bool ok = true;
            for (Vertex zi : {a, b, c}) {
              auto it = std::find_if(parts.begin(), parts.end(), [&](const VertexSet& p) { return p.contains(zi); });
              if (it->intersects(used)) {
                ok = false;
                break;
              }
              used = used | *it;
              spec.branches.push_back(extract_branch(g, hubs, *it, tri, -1, zi));
            }
            if (!ok) continue;
            auto last = std::find_if(parts.begin(), parts.end(), [&](const VertexSet& p) { return !p.intersects(used); });
            spec.branches.push_back(extract_branch(g, hubs, *last, tri, -1, last->first()));
            if (rebuilds(spec, form)) return spec;
          }
    }
  return std::nullopt;
}

}  // namespace detail

/// Decides membership in R1 ∪ R2 ∪ R3 ∪ R4 by locating the hub(s) and the
/// glue (triangle or z), splitting off the branches, and checking that the
/// recovered spec rebuilds an isomorphic graph.
inline MembershipVerdict is_member(const Graph& g) {
  if (g.order() > 20) throw PreconditionError("exact membership is limited to n <= 20");
  MembershipVerdict v;
  // Members have a 2-cut; literal R1 also admits a hub that is a cut vertex.
  if (g.order() < 10) return v;
  const int kappa = vertex_connectivity(g);
  if (kappa < 1 || kappa > 2) return v;
  const CanonicalForm form = canonical_form(g);
  auto take = [&](FamilyClass cls, std::optional<FamilySpec> spec) {
    if (!spec) return;
    v.member = true;
    v.classes.push_back(cls);
    v.witnesses.push_back(std::move(*spec));
  };
  take(FamilyClass::R1, detail::recognize_r1(g, form));
  take(FamilyClass::R2, detail::recognize_r2_r3(g, form, FamilyClass::R2));
  take(FamilyClass::R3, detail::recognize_r2_r3(g, form, FamilyClass::R3));
  take(FamilyClass::R4, detail::recognize_r4(g, form));
  return v;
}

struct MemberCertificate {
  bool certified = false;
  int order = 0;
  int connectivity = 0;
  Rational toughness;
  int circumference = 0;
  /// True iff no longest cycle is dominating.
  bool all_longest_nondominating = false;
  std::optional<Cycle> longest_cycle;
  std::string diagnosis;
};

/// κ = 2, τ = 1 and no dominating longest cycle.
inline MemberCertificate certify_member(const FamilyInstance& inst) {
  const Graph& g = inst.graph;
  MemberCertificate c;
  c.order = g.order();
  c.connectivity = vertex_connectivity(g);
  c.toughness = toughness(g).value;
  auto circ = circumference(g);
  if (circ) {
    c.circumference = circ->length;
    c.longest_cycle = circ->witness;
    bool dominating_found = false;
    for_each_cycle_of_length(g, circ->length, [&](std::span<const Vertex> seq) {
      VertexSet rest = g.vertices();
      for (Vertex v : seq) rest = rest.without(v);
      dominating_found = is_independent(g, rest);
      return !dominating_found;
    });
    c.all_longest_nondominating = !dominating_found;
  }
  std::vector<std::string> problems;
  if (c.connectivity != 2) problems.push_back("connectivity " + std::to_string(c.connectivity) + " != 2");
  if (c.toughness != Rational(1)) problems.push_back("toughness " + c.toughness.to_string() + " != 1");
  if (!c.all_longest_nondominating) problems.push_back("some longest cycle is dominating");
  c.certified = problems.empty();
  for (const auto& p : problems) c.diagnosis += (c.diagnosis.empty() ? "" : "; ") + p;
  return c;
}

inline void to_json(nlohmann::json& j, const FamilySpec& s) {
  j = nlohmann::json{{"class", to_string(s.cls)}, {"d", s.d}};
  auto branches = nlohmann::json::array();
  for (const Branch& b : s.branches) {
    nlohmann::json jb{{"graph6", to_graph6(b.graph)}, {"x", b.x}, {"y", b.y}};
    if (b.z) jb["z"] = *b.z;
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  j["optional_edges"] = {{"y1y3", s.optional.y1y3}, {"y2y3", s.optional.y2y3}, {"zx1", s.optional.zx1}};
}

inline void from_json(const nlohmann::json& j, FamilySpec& s) {
  s.cls = parse_family_class(j.at("class").get<std::string>());
  s.d = j.value("d", 3);
  s.branches.clear();
  for (const auto& jb : j.at("branches")) {
    Branch b{parse_graph6(jb.at("graph6").get<std::string>()), jb.at("x").get<int>(), jb.at("y").get<int>(),
             std::nullopt};
    if (jb.contains("z") && !jb["z"].is_null()) b.z = jb["z"].get<int>();
    s.branches.push_back(std::move(b));
  }
  s.optional = {};
  if (j.contains("optional_edges")) {
    const auto& o = j["optional_edges"];
    s.optional.y1y3 = o.value("y1y3", false);
    s.optional.y2y3 = o.value("y2y3", false);
    s.optional.zx1 = o.value("zx1", false);
  }
}

}  // namespace domcycle
