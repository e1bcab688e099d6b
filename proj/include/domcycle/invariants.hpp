#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string_view>
#include <vector>

#include "domcycle/graph.hpp"
#include "domcycle/rational.hpp"

namespace domcycle {

struct ToughnessCertificate {
  Rational value;
  /// Witnessing cutset; empty when the value is infinite or the graph is disconnected.
  VertexSet cut;
  int component_count = 0;
};

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// by unit augmenting paths on the vertex-split network. Stops at `limit`.
inline int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  // Node v_in = 2v, v_out = 2v + 1. Arc capacities live in a dense matrix.
  const int m = 2 * n;
  std::vector<int> cap(static_cast<std::size_t>(m * m), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * m + b)]; };
  for (Vertex v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? n : 1;
    for (Vertex w : g.neighbors(v)) at(2 * v + 1, 2 * w) = n;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(m));
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[static_cast<std::size_t>(source)] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev[static_cast<std::size_t>(sink)] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < m; ++b) {
        if (prev[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          prev[static_cast<std::size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (prev[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = prev[static_cast<std::size_t>(b)]) {
      const int a = prev[static_cast<std::size_t>(b)];
      --at(a, b);
      ++at(b, a);
    }
    ++flow;
  }
  return flow;
}

/// Calls visit(subset) for every k-subset of `universe`, in colex order of bit patterns.
template <typename Visit>
bool for_each_subset_of_size(VertexSet universe, int k, Visit&& visit) {
  const std::vector<Vertex> items = universe.to_vector();
  const int m = static_cast<int>(items.size());
  if (k > m) return true;
  if (k == 0) return visit(VertexSet{});
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s = s.with(items[static_cast<std::size_t>(i)]);
    if (!visit(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// kappa(g): n-1 for complete graphs, 0 when disconnected, otherwise the least
/// number of vertices whose removal disconnects g.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return n - 1;
  if (!is_connected(g)) return 0;
  int best = min_degree(g);
  // Some vertex among the first best+1 survives a minimum cut, so pairs
  // anchored there suffice.
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, detail::local_connectivity(g, i, j, best));
    }
  }
  return best;
}

/// Exact toughness: the least |S| / s(G \ S) over cutsets leaving at least two
/// components, with a witness. Infinite for complete graphs; 0 (empty cut) for
/// disconnected graphs.
inline ToughnessCertificate toughness(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return {Rational::infinity(), {}, 0};
  const int parts = count_components_within(g, g.vertices());
  if (parts > 1) return {Rational(0), {}, parts};

  ToughnessCertificate best{Rational::infinity(), {}, 0};
  const VertexSet all = g.vertices();
  // A k-cut leaves at most n-k components, so its ratio is at least k/(n-k),
  // which grows with k: stop once that floor cannot beat the incumbent.
  for (int k = 1; k <= n - 2; ++k) {
    if (!best.value.is_infinite() && Rational(k, n - k) >= best.value) break;
    detail::for_each_subset_of_size(all, k, [&](VertexSet cut) {
      const int c = count_components_within(g, all - cut);
      if (c >= 2) {
        Rational r(k, c);
        if (r < best.value) best = {r, cut, c};
      }
      return true;
    });
  }
  return best;
}

/// tau(g) >= t, decided exactly.
inline bool is_t_tough(const Graph& g, const Rational& t) { return toughness(g).value >= t; }

enum class DegreeThreshold {
  A,        ///< 3*delta >= n + 2
  B,        ///< 3*delta >= n
  COrMain,  ///< 3*delta >= n - 2
};

inline bool degree_threshold(const Graph& g, DegreeThreshold which) {
  const int lhs = 3 * min_degree(g);
  const int n = g.order();
  switch (which) {
    case DegreeThreshold::A: return lhs >= n + 2;
    case DegreeThreshold::B: return lhs >= n;
    case DegreeThreshold::COrMain: return lhs >= n - 2;
  }
  return false;
}

}  // namespace domcycle
