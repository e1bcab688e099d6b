#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domcycle/graph.hpp"

namespace domcycle {

namespace detail {

inline std::string join_vertices(std::span<const Vertex> vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace detail

/// A simple cycle of length >= 3, held in canonical form: it starts at its
/// least vertex and runs toward the smaller of that vertex's two cycle neighbors.
class Cycle {
 public:
  /// Validates `seq` as a cycle of g and canonicalizes it.
  static Cycle of(const Graph& g, std::vector<Vertex> seq) {
    if (seq.size() < 3) throw PreconditionError("cycle needs at least 3 vertices");
    VertexSet seen;
    for (Vertex v : seq) {
      if (v < 0 || v >= g.order()) throw PreconditionError("cycle vertex out of range");
      if (seen.contains(v)) throw PreconditionError("cycle repeats vertex " + std::to_string(v));
      seen = seen.with(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()]))
        throw PreconditionError("cycle uses non-edge " + std::to_string(seq[i]) + "-" +
                                std::to_string(seq[(i + 1) % seq.size()]));
    return Cycle(canonicalize(std::move(seq)));
  }

  int length() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexSet vertex_set() const {
    VertexSet s;
    for (Vertex v : vertices_) s = s.with(v);
    return s;
  }
  std::string to_string() const { return detail::join_vertices(vertices_); }

  auto operator<=>(const Cycle&) const = default;

 private:
  explicit Cycle(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}

  static std::vector<Vertex> canonicalize(std::vector<Vertex> seq) {
    auto lo = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), lo, seq.end());
    if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
    return seq;
  }

  std::vector<Vertex> vertices_;
};

/// A simple path; a single vertex is a path of length 0.
class Path {
 public:
  static Path of(const Graph& g, std::vector<Vertex> seq) {
    if (seq.empty()) throw PreconditionError("path needs at least one vertex");
    VertexSet seen;
    for (Vertex v : seq) {
      if (v < 0 || v >= g.order()) throw PreconditionError("path vertex out of range");
      if (seen.contains(v)) throw PreconditionError("path repeats vertex " + std::to_string(v));
      seen = seen.with(v);
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      if (!g.adjacent(seq[i], seq[i + 1]))
        throw PreconditionError("path uses non-edge " + std::to_string(seq[i]) + "-" +
                                std::to_string(seq[i + 1]));
    return Path(std::move(seq));
  }

  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  VertexSet vertex_set() const {
    VertexSet s;
    for (Vertex v : vertices_) s = s.with(v);
    return s;
  }
  Path reversed() const { return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }
  std::string to_string() const { return detail::join_vertices(vertices_); }

  auto operator<=>(const Path&) const = default;

 private:
  explicit Path(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}
  std::vector<Vertex> vertices_;
};

namespace detail {

/// DFS over cycles whose least vertex is `start`. The visitor sees the vertex
/// sequence of every closed cycle meeting the length floor and returns false to stop.
class CycleDfs {
 public:
  CycleDfs(const Graph& g, Vertex start) : g_(g), start_(start) {
    allowed_ = g.vertices() - VertexSet::range(start);
    seq_.reserve(static_cast<std::size_t>(g.order()));
  }

  /// Enumerate cycles of exactly `len` vertices, each once (second < last).
  template <typename Visit>
  bool exact(int len, Visit& visit) {
    target_ = len;
    seq_.assign(1, start_);
    return exact_step(VertexSet::single(start_), visit);
  }

  /// Longest cycle through `start` strictly longer than `floor`; returns its length or floor.
  int longest(int floor, std::vector<Vertex>& witness) {
    best_ = floor;
    witness_ = &witness;
    seq_.assign(1, start_);
    longest_step(VertexSet::single(start_));
    return best_;
  }

 private:
  /// Vertices still usable after the current end, including the way back to start.
  int extension_bound(Vertex end, VertexSet used) const {
    VertexSet free = allowed_ - used;
    VertexSet r = reach_within(g_, end, free.with(end)).without(end);
    if (r.empty()) return g_.adjacent(end, start_) ? 0 : -1;
    if (!g_.adjacent(end, start_) && !g_.neighbors(start_).intersects(r)) return -1;
    return r.size();
  }

  template <typename Visit>
  bool exact_step(VertexSet used, Visit& visit) {
    const Vertex end = seq_.back();
    const int len = static_cast<int>(seq_.size());
    if (len == target_) {
      if (g_.adjacent(end, start_) && seq_[1] < seq_.back()) return visit(std::span<const Vertex>(seq_));
      return true;
    }
    const int ext = extension_bound(end, used);
    if (ext < 0 || len + ext < target_) return true;
    for (Vertex w : g_.neighbors(end) & (allowed_ - used)) {
      seq_.push_back(w);
      bool go = exact_step(used.with(w), visit);
      seq_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  void longest_step(VertexSet used) {
    const Vertex end = seq_.back();
    const int len = static_cast<int>(seq_.size());
    if (len >= 3 && len > best_ && g_.adjacent(end, start_)) {
      best_ = len;
      *witness_ = seq_;
    }
    if (best_ == g_.order() - start_) return;
    const int ext = extension_bound(end, used);
    if (ext <= 0 || len + ext <= best_) return;
    for (Vertex w : g_.neighbors(end) & (allowed_ - used)) {
      seq_.push_back(w);
      longest_step(used.with(w));
      seq_.pop_back();
    }
  }

  const Graph& g_;
  Vertex start_;
  VertexSet allowed_;
  std::vector<Vertex> seq_;
  int target_ = 0;
  int best_ = 0;
  std::vector<Vertex>* witness_ = nullptr;
};

/// DFS over simple paths inside `allowed`.
class PathDfs {
 public:
  PathDfs(const Graph& g, VertexSet allowed) : g_(g), allowed_(allowed) {}

  int longest(std::vector<Vertex>& witness) {
    best_ = -1;
    witness_ = &witness;
    for (Vertex s : allowed_) {
      seq_.assign(1, s);
      longest_step(VertexSet::single(s));
      if (best_ == allowed_.size() - 1) break;
    }
    return best_;
  }

  /// Every path with `len` edges, each undirected path once (front < back).
  template <typename Visit>
  bool exact(int len, Visit& visit) {
    target_ = len;
    for (Vertex s : allowed_) {
      seq_.assign(1, s);
      if (!exact_step(VertexSet::single(s), visit)) return false;
    }
    return true;
  }

 private:
  int extension_bound(Vertex end, VertexSet used) const {
    return reach_within(g_, end, (allowed_ - used).with(end)).size() - 1;
  }

  void longest_step(VertexSet used) {
    const int len = static_cast<int>(seq_.size()) - 1;
    if (len > best_) {
      best_ = len;
      *witness_ = seq_;
    }
    const Vertex end = seq_.back();
    if (len + extension_bound(end, used) <= best_) return;
    for (Vertex w : g_.neighbors(end) & (allowed_ - used)) {
      seq_.push_back(w);
      longest_step(used.with(w));
      seq_.pop_back();
    }
  }

  template <typename Visit>
  bool exact_step(VertexSet used, Visit& visit) {
    const int len = static_cast<int>(seq_.size()) - 1;
    const Vertex end = seq_.back();
    if (len == target_) {
      if (len == 0 || seq_.front() < end) return visit(std::span<const Vertex>(seq_));
      return true;
    }
    if (len + extension_bound(end, used) < target_) return true;
    for (Vertex w : g_.neighbors(end) & (allowed_ - used)) {
      seq_.push_back(w);
      bool go = exact_step(used.with(w), visit);
      seq_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  const Graph& g_;
  VertexSet allowed_;
  std::vector<Vertex> seq_;
  int best_ = -1;
  int target_ = 0;
  std::vector<Vertex>* witness_ = nullptr;
};

}  // namespace detail

struct CircumferenceResult {
  int length;
  Cycle witness;
};

/// Length of a longest cycle with a witness; nullopt for forests.
inline std::optional<CircumferenceResult> circumference(const Graph& g) {
  const int n = g.order();
  int best = 2;
  std::vector<Vertex> witness;
  for (Vertex s = 0; s < n && n - s > best; ++s) {
    detail::CycleDfs dfs(g, s);
    best = dfs.longest(best, witness);
  }
  if (witness.empty()) return std::nullopt;
  return CircumferenceResult{best, Cycle::of(g, witness)};
}

/// Visits every cycle with exactly `len` vertices once, as a raw vertex
/// sequence starting at its least vertex. Return false from `visit` to stop.
/// Returns false iff stopped early.
template <typename Visit>
bool for_each_cycle_of_length(const Graph& g, int len, Visit&& visit) {
  if (len < 3) return true;
  for (Vertex s = 0; s + len <= g.order(); ++s) {
    detail::CycleDfs dfs(g, s);
    if (!dfs.exact(len, visit)) return false;
  }
  return true;
}

/// Every longest cycle, canonical and sorted.
inline std::vector<Cycle> all_longest_cycles(const Graph& g) {
  auto circ = circumference(g);
  if (!circ) throw PreconditionError("graph is acyclic");
  std::vector<Cycle> out;
  for_each_cycle_of_length(g, circ->length, [&](std::span<const Vertex> seq) {
    out.push_back(Cycle::of(g, {seq.begin(), seq.end()}));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<Cycle> hamilton_cycle(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  std::optional<Cycle> found;
  for_each_cycle_of_length(g, g.order(), [&](std::span<const Vertex> seq) {
    found = Cycle::of(g, {seq.begin(), seq.end()});
    return false;
  });
  return found;
}

inline bool is_hamiltonian(const Graph& g) { return hamilton_cycle(g).has_value(); }

/// G \ C is edgeless.
inline bool is_dominating(const Graph& g, const Cycle& c) {
  (void)Cycle::of(g, c.vertices());
  return is_independent(g, g.vertices() - c.vertex_set());
}

/// A cycle of the given length that leaves an edge outside it, if any exists.
inline std::optional<Cycle> nondominating_cycle_of_length(const Graph& g, int length) {
  std::optional<Cycle> found;
  for_each_cycle_of_length(g, length, [&](std::span<const Vertex> seq) {
    VertexSet on;
    for (Vertex v : seq) on = on.with(v);
    if (!is_independent(g, g.vertices() - on)) {
      found = Cycle::of(g, {seq.begin(), seq.end()});
      return false;
    }
    return true;
  });
  return found;
}

inline std::optional<Cycle> nondominating_longest_cycle(const Graph& g) {
  auto circ = circumference(g);
  if (!circ) return std::nullopt;
  return nondominating_cycle_of_length(g, circ->length);
}

/// A longest path of the subgraph induced on `s`; nullopt iff `s` is empty.
/// Among longest paths the lexicographically least vertex sequence is returned.
inline std::optional<Path> longest_path_in(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw PreconditionError("vertex set exceeds graph");
  if (s.empty()) return std::nullopt;
  std::vector<Vertex> witness;
  detail::PathDfs dfs(g, s);
  dfs.longest(witness);
  return Path::of(g, witness);
}

/// Every longest path of G[s], each undirected path once (oriented front < back).
inline std::vector<Path> all_longest_paths_in(const Graph& g, VertexSet s) {
  auto best = longest_path_in(g, s);
  if (!best) return {};
  std::vector<Path> out;
  detail::PathDfs dfs(g, s);
  auto visit = [&](std::span<const Vertex> seq) {
    out.push_back(Path::of(g, {seq.begin(), seq.end()}));
    return true;
  };
  dfs.exact(best->length(), visit);
  return out;
}

}  // namespace domcycle
