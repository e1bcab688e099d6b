#pragma once

// Definition-level reference implementations. They deliberately avoid the
// library's search code: plain loops over subsets and unpruned DFS.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "domcycle/graph.hpp"

namespace oracle {

using domcycle::Graph;
using domcycle::GraphBuilder;
using domcycle::Vertex;

inline bool adj(const Graph& g, int u, int v) { return g.adjacent(u, v); }

/// Components of G minus the vertices flagged in `removed`, by union-find.
inline int components(const Graph& g, std::uint64_t removed) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!((removed >> u) & 1) && !((removed >> v) & 1) && adj(g, u, v))
        parent[static_cast<std::size_t>(find(u))] = find(v);
  int count = 0;
  for (int v = 0; v < n; ++v)
    if (!((removed >> v) & 1) && find(v) == v) ++count;
  return count;
}

/// Smallest |S| with G - S disconnected or trivial.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int k = __builtin_popcountll(s);
    if (k >= best) continue;
    if (n - k >= 2 && components(g, s) >= 2) best = k;
  }
  return best;
}

/// min |S| / s(G-S) over S with s(G-S) >= 2, as (num, den) unreduced; {-1,-1} when none exists.
inline std::pair<int, int> toughness(const Graph& g) {
  const int n = g.order();
  std::pair<int, int> best{-1, -1};
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int c = components(g, s);
    if (c < 2) continue;
    int k = __builtin_popcountll(s);
    if (best.first < 0 || k * best.second < best.first * c) best = {k, c};
  }
  return best;
}

/// Every cycle as a canonical sequence (least vertex first, smaller neighbor second).
inline std::set<std::vector<int>> all_cycles(const Graph& g) {
  const int n = g.order();
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto canon = [](std::vector<int> c) {
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    return c;
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (seq.size() >= 3 && adj(g, v, seq.front())) out.insert(canon(seq));
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || !adj(g, v, w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      seq.push_back(w);
      self(self, w);
      seq.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[static_cast<std::size_t>(s)] = true;
    seq = {s};
    dfs(dfs, s);
    used[static_cast<std::size_t>(s)] = false;
  }
  return out;
}

inline int circumference(const Graph& g) {
  int best = 0;
  for (const auto& c : all_cycles(g)) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

inline std::vector<std::vector<int>> longest_cycles(const Graph& g) {
  auto all = all_cycles(g);
  const int c = oracle::circumference(g);
  std::vector<std::vector<int>> out;
  for (const auto& cyc : all)
    if (static_cast<int>(cyc.size()) == c) out.push_back(cyc);
  return out;
}

/// Longest path length (edges) inside `allowed`; -1 when allowed is empty.
inline int longest_path(const Graph& g, std::uint64_t allowed) {
  const int n = g.order();
  int best = -1;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto dfs = [&](auto&& self, int v, int len) -> void {
    best = std::max(best, len);
    for (int w = 0; w < n; ++w) {
      if (!((allowed >> w) & 1) || used[static_cast<std::size_t>(w)] || !adj(g, v, w)) continue;
      used[static_cast<std::size_t>(w)] = true;
      self(self, w, len + 1);
      used[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    if (!((allowed >> s) & 1)) continue;
    used[static_cast<std::size_t>(s)] = true;
    dfs(dfs, s, 0);
    used[static_cast<std::size_t>(s)] = false;
  }
  return best;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (components(g, 0) == 1) return g;
  }
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// A long cycle 0..len-1 (len 9..12), an outside path on the remaining 2 or 3
/// vertices, two random cycle neighbors per path vertex and up to 3 chords.
/// Exhaustive small orders never satisfy Lemma 1's degree hypotheses; these do.
inline Graph cycle_plus_path_graph(std::mt19937_64& rng) {
  const int len = 9 + static_cast<int>(rng() % 4);
  const int n = len + 2 + static_cast<int>(rng() % 2);
  GraphBuilder b(n);
  for (int i = 0; i < len; ++i) b.add_edge(i, (i + 1) % len);
  for (int j = len; j + 1 < n; ++j) b.add_edge(j, j + 1);
  for (int j = len; j < n; ++j)
    for (int k = 0; k < 2; ++k) b.add_edge(j, static_cast<Vertex>(rng() % len));
  for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
    const auto u = static_cast<Vertex>(rng() % len), v = static_cast<Vertex>(rng() % len);
    if (u != v) b.add_edge(u, v);
  }
  return b.build();
}

/// Every labeled graph on n vertices (n <= 6), as edge bitmasks over pairs.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) b.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(b.build());
  }
  return out;
}

/// Reference graph6 encoder written directly from the format description.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(adj(g, i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) v = 2 * v + bits[k + b];
    out += static_cast<char>(63 + v);
  }
  return out;
}

}  // namespace oracle
