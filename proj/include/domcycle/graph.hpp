#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domcycle {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;

/// Thrown when a graph cannot be constructed or decoded.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an algorithm is handed input outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of 0..63 held in one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }
  template <std::input_iterator It>
  constexpr VertexSet(It first, It last) {
    for (; first != last; ++first) bits_ |= bit(*first);
  }

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Least member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  Graph() : Graph(1) {}

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : rows_(checked_order(n)) {}

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (VertexSet r : rows_) twice += static_cast<std::size_t>(r.size());
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : rows_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Union of neighborhoods of `s`, excluding `s` itself.
  VertexSet neighbors(VertexSet s) const {
    VertexSet out;
    for (Vertex v : s) out |= rows_[v];
    return out - s;
  }

  bool is_complete() const {
    for (Vertex v = 0; v < order(); ++v)
      if (degree(v) != order() - 1) return false;
    return true;
  }

  /// Graph in which vertex v carries label perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  std::span<const VertexSet> rows() const { return rows_; }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  static std::size_t checked_order(int n) {
    if (n < 1 || n > kMaxOrder)
      throw GraphError("graph order " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxOrder));
    return static_cast<std::size_t>(n);
  }

  std::vector<VertexSet> rows_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  int order() const { return g_.order(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.rows_[u] = g_.rows_[u].with(v);
    g_.rows_[v] = g_.rows_[v].with(u);
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.rows_[u] = g_.rows_[u].without(v);
    g_.rows_[v] = g_.rows_[v].without(u);
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  int degree(Vertex v) const { return g_.degree(v); }

  Graph build() const { return g_; }

 private:
  void check(Vertex u, Vertex v) const {
    const int n = g_.order();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for order " + std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  }

  Graph g_;
};

inline Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != rows_.size()) throw PreconditionError("permutation size mismatch");
  GraphBuilder b(order());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u])
      if (u < v) b.add_edge(perm[u], perm[v]);
  return b.build();
}

/// Graph on n vertices with exactly the listed edges; duplicates collapse.
inline Graph from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline int min_degree(const Graph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Vertices reachable from `start` inside `allowed` (start included).
inline VertexSet reach_within(const Graph& g, Vertex start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Vertex sets of the components of the subgraph induced on `allowed`.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet allowed) {
  std::vector<VertexSet> out;
  while (!allowed.empty()) {
    VertexSet comp = reach_within(g, allowed.first(), allowed);
    out.push_back(comp);
    allowed -= comp;
  }
  return out;
}

inline int count_components_within(const Graph& g, VertexSet allowed) {
  int count = 0;
  while (!allowed.empty()) {
    allowed -= reach_within(g, allowed.first(), allowed);
    ++count;
  }
  return count;
}

/// s(G \ S); zero when S covers every vertex.
inline int components_after_removal(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.vertices()))
    throw PreconditionError("removed set exceeds vertex range");
  return count_components_within(g, g.vertices() - removed);
}

inline bool is_connected(const Graph& g) {
  return reach_within(g, 0, g.vertices()) == g.vertices();
}

/// True when the subgraph induced on `s` has no edges.
inline bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

// Named small graphs used across tests, tools and examples.
namespace named {

inline Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph cycle(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph complete_bipartite(int a, int b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
  return gb.build();
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
inline Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return b.build();
}

}  // namespace named

}  // namespace domcycle
