#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "domcycle/canonical.hpp"
#include "domcycle/graph.hpp"
#include "domcycle/invariants.hpp"

namespace domcycle {

namespace detail {

inline Graph graph_from_key(std::uint64_t key) {
  const int n = static_cast<int>(key >> 56);
  GraphBuilder b(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((key >> bit) & 1) b.add_edge(i, j);
  return b.build();
}

/// One more vertex, attached to every neighbor set the mask filter accepts.
template <typename Accept>
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& parents, bool need_neighbor, Accept&& accept) {
  std::unordered_set<std::uint64_t> seen;
  for (const Graph& p : parents) {
    const int n = p.order();
    for (std::uint64_t mask = need_neighbor ? 1 : 0; mask < (std::uint64_t{1} << n); ++mask) {
      GraphBuilder b(n + 1);
      for (const auto& [u, v] : p.edges()) b.add_edge(u, v);
      for (Vertex v : VertexSet(mask)) b.add_edge(v, n);
      Graph child = b.build();
      if (!accept(child)) continue;
      seen.insert(canonical_key(child));
    }
  }
  std::vector<std::uint64_t> keys(seen.begin(), seen.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(graph_from_key(k));
  return out;
}

}  // namespace detail

/// Every graph on n vertices up to isomorphism (n <= 9), in canonical labeling.
inline std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > 9) throw PreconditionError("all_graphs supports 1 <= n <= 9");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k)
    level = detail::extend_by_vertex(level, false, [](const Graph&) { return true; });
  return level;
}

/// Every connected graph on n vertices up to isomorphism (n <= 9). Each arises
/// from a connected graph on n-1 vertices by adding a vertex with at least one
/// neighbor, since every connected graph has a non-cut vertex.
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 9) throw PreconditionError("connected_graphs supports 1 <= n <= 9");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k)
    level = detail::extend_by_vertex(level, true, [](const Graph&) { return true; });
  return level;
}

/// Every graph on n vertices (4 <= n <= 12) with minimum degree >= min_deg and
/// a 2-cut {a, b} leaving exactly two components, each adjacent to both a and
/// b. That covers every 1-tough graph of connectivity 2. Graphs may arrive more
/// than once and in any labeling; `visit` returns false to stop.
template <typename Visit>
void for_each_two_piece_gluing(int n, int min_deg, Visit&& visit) {
  if (n < 4 || n > 12) throw PreconditionError("gluing supports 4 <= n <= 12");
  const int rest = n - 2;
  // A vertex on a side of size k has degree at most k + 1.
  for (int k = std::max(1, min_deg - 1); 2 * k <= rest; ++k) {
    const int m = rest - k;
    if (m > 9) continue;
    const auto left = connected_graphs(k);
    const auto right = connected_graphs(m);
    const std::uint64_t lfull = (std::uint64_t{1} << k) - 1, rfull = (std::uint64_t{1} << m) - 1;
    auto side_ok = [&](const Graph& h, std::uint64_t na, std::uint64_t nb) {
      for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) + static_cast<int>((na >> v) & 1) + static_cast<int>((nb >> v) & 1) < min_deg) return false;
      return true;
    };
    for (const Graph& l : left)
      for (const Graph& r : right)
        for (std::uint64_t la = 1; la <= lfull; ++la)
          for (std::uint64_t lb = 1; lb <= lfull; ++lb) {
            if (!side_ok(l, la, lb)) continue;
            for (std::uint64_t ra = 1; ra <= rfull; ++ra)
              for (std::uint64_t rb = 1; rb <= rfull; ++rb) {
                if (!side_ok(r, ra, rb)) continue;
                for (int ab = 0; ab < 2; ++ab) {
                  const int da = std::popcount(la) + std::popcount(ra) + ab;
                  const int db = std::popcount(lb) + std::popcount(rb) + ab;
                  if (da < min_deg || db < min_deg) continue;
                  // a = 0, b = 1, left side 2..k+1, right side after it.
                  GraphBuilder gb(n);
                  if (ab) gb.add_edge(0, 1);
                  for (const auto& [u, v] : l.edges()) gb.add_edge(2 + u, 2 + v);
                  for (const auto& [u, v] : r.edges()) gb.add_edge(2 + k + u, 2 + k + v);
                  for (Vertex v : VertexSet(la)) gb.add_edge(0, 2 + v);
                  for (Vertex v : VertexSet(lb)) gb.add_edge(1, 2 + v);
                  for (Vertex v : VertexSet(ra)) gb.add_edge(0, 2 + k + v);
                  for (Vertex v : VertexSet(rb)) gb.add_edge(1, 2 + k + v);
                  if (!visit(gb.build())) return;
                }
              }
          }
  }
}

/// Every 3-connected graph on n vertices (4 <= n <= 10) with minimum degree
/// >= min_deg, exactly once per isomorphism class and in canonical labeling.
/// Deleting any vertex leaves a 2-connected parent, so each class is grown from
/// the parent obtained by deleting one canonically chosen vertex orbit: the
/// vertex maximizing (degree, neighbor degree sum), ties broken by canonical
/// label. `visit` returns false to stop.
template <typename Visit>
void for_each_three_connected(int n, int min_deg, Visit&& visit) {
  if (n < 4 || n > 10) throw PreconditionError("for_each_three_connected supports 4 <= n <= 10");
  min_deg = std::max(min_deg, 3);
  if (min_deg >= n) return;
  const int k = n - 1;
  auto score = [](const Graph& g, Vertex v) {
    int s = 0;
    for (Vertex u : g.neighbors(v)) s += g.degree(u);
    return g.degree(v) * 1024 + s;
  };
  for (const Graph& p : connected_graphs(k)) {
    if (min_degree(p) < min_deg - 1 || vertex_connectivity(p) < 2) continue;
    std::uint64_t need = 0;
    for (Vertex v = 0; v < k; ++v)
      if (p.degree(v) < min_deg) need |= std::uint64_t{1} << v;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if ((mask & need) != need || std::popcount(mask) < min_deg) continue;
      GraphBuilder b(n);
      for (const auto& [u, v] : p.edges()) b.add_edge(u, v);
      for (Vertex v : VertexSet(mask)) b.add_edge(v, k);
      const Graph g = b.build();
      int best = 0;
      for (Vertex v = 0; v < n; ++v) best = std::max(best, score(g, v));
      if (score(g, k) != best) continue;
      CanonicalLabeling lab = canonical_labeling(g);
      Vertex chosen = k;
      for (Vertex v = 0; v < n; ++v)
        if (score(g, v) == best && lab.position[v] > lab.position[chosen]) chosen = v;
      if (chosen != k) {
        std::vector<Vertex> root(n);
        std::iota(root.begin(), root.end(), 0);
        auto find = [&](Vertex x) {
          while (root[x] != x) x = root[x] = root[root[x]];
          return x;
        };
        for (const auto& a : lab.automorphisms)
          for (Vertex v = 0; v < n; ++v) root[find(v)] = find(a[v]);
        if (find(k) != find(chosen)) {
          std::vector<int> mine(n, 0), theirs(n, 0);
          mine[k] = theirs[chosen] = 1;
          if (canonical_form(g, mine) != canonical_form(g, theirs)) continue;
        }
      }
      // Parent automorphisms can still repeat a class; they all share this parent.
      std::uint64_t key = 0;
      int bit = 0;
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
          if (lab.graph.adjacent(i, j)) key |= std::uint64_t{1} << bit;
      if (!seen.insert(key).second) continue;
      if (vertex_connectivity(lab.graph) < 3) continue;
      if (!visit(lab.graph)) return;
    }
  }
}

}  // namespace domcycle
