#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "domcycle/graph.hpp"
#include "domcycle/graph6.hpp"

namespace domcycle {

/// Certificate of an isomorphism class: equal iff the (colored) graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
  Graph graph;
  /// Generators of (a subgroup of) the color-preserving automorphism group.
  std::vector<std::vector<Vertex>> automorphisms;
};

namespace detail {

using Cells = std::vector<VertexSet>;

/// Refines `cells` to an equitable partition. The result depends only on the
/// cell structure, never on vertex names, so it commutes with relabeling.
inline void refine(const Graph& g, Cells& cells, std::deque<VertexSet> splitters) {
  const int n = g.order();
  while (!splitters.empty() && static_cast<int>(cells.size()) < n) {
    const VertexSet w = splitters.front();
    splitters.pop_front();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const VertexSet x = cells[ci];
      if (x.size() == 1) continue;
      std::array<VertexSet, kMaxOrder + 1> by_count{};
      int lo = kMaxOrder + 1;
      int hi = -1;
      for (Vertex v : x) {
        const int c = (g.neighbors(v) & w).size();
        by_count[c] = by_count[c].with(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) continue;
      Cells pieces;
      for (int c = lo; c <= hi; ++c)
        if (!by_count[c].empty()) pieces.push_back(by_count[c]);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(), pieces.end());
      for (VertexSet p : pieces) splitters.push_back(p);
      ci += pieces.size() - 1;
    }
  }
}

class CanonSearch {
 public:
  CanonSearch(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order()) {
    std::vector<int> keys(colors.begin(), colors.end());
    if (keys.empty()) keys.assign(static_cast<std::size_t>(n_), 0);
    if (static_cast<int>(keys.size()) != n_) throw PreconditionError("color vector size mismatch");
    std::vector<int> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int key : distinct) {
      VertexSet cell;
      for (Vertex v = 0; v < n_; ++v)
        if (keys[static_cast<std::size_t>(v)] == key) cell = cell.with(v);
      root_.push_back(cell);
    }
    colors_ = std::move(keys);
    seed_twins();
  }

  void run() {
    Cells cells = root_;
    std::deque<VertexSet> splitters(cells.begin(), cells.end());
    refine(g_, cells, std::move(splitters));
    std::vector<Vertex> path;
    search(cells, path);
  }

  CanonicalLabeling result() const {
    CanonicalLabeling out;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[static_cast<std::size_t>(best_.lab[static_cast<std::size_t>(i)])] = i;
    out.graph = g_.relabeled(out.position);
    out.automorphisms = gens_;
    return out;
  }

  std::string color_signature() const {
    std::string sig;
    for (Vertex v : best_.lab) sig += std::to_string(colors_[static_cast<std::size_t>(v)]) + ',';
    return sig;
  }

 private:
  struct Leaf {
    std::vector<Vertex> lab;
    std::vector<std::uint64_t> cert;
    std::vector<Vertex> path;
  };

  static constexpr int kNoJump = 1 << 30;

  void seed_twins() {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (colors_[static_cast<std::size_t>(u)] != colors_[static_cast<std::size_t>(v)]) continue;
        if (g_.neighbors(u).without(v) != g_.neighbors(v).without(u)) continue;
        std::vector<Vertex> perm(static_cast<std::size_t>(n_));
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        gens_.push_back(std::move(perm));
        break;
      }
    }
  }

  Leaf make_leaf(const Cells& cells, const std::vector<Vertex>& path) const {
    Leaf leaf;
    leaf.lab.reserve(static_cast<std::size_t>(n_));
    std::array<int, kMaxOrder> pos{};
    for (VertexSet c : cells) {
      pos[static_cast<std::size_t>(c.first())] = static_cast<int>(leaf.lab.size());
      leaf.lab.push_back(c.first());
    }
    leaf.cert.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t row = 0;
      for (Vertex w : g_.neighbors(leaf.lab[static_cast<std::size_t>(i)]))
        row |= std::uint64_t{1} << pos[static_cast<std::size_t>(w)];
      leaf.cert[static_cast<std::size_t>(i)] = row;
    }
    leaf.path = path;
    return leaf;
  }

  void record_automorphism(const Leaf& from, const Leaf& to) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < perm.size(); ++i) perm[static_cast<std::size_t>(from.lab[i])] = to.lab[i];
    gens_.push_back(std::move(perm));
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  /// Orbit representative of every vertex under the generators that fix `fixed` pointwise.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& fixed) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](Vertex v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
      return v;
    };
    for (const auto& gen : gens_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(),
                               [&](Vertex f) { return gen[static_cast<std::size_t>(f)] == f; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v);
        Vertex b = find(gen[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  int on_leaf(const Cells& cells, const std::vector<Vertex>& path) {
    Leaf leaf = make_leaf(cells, path);
    if (!have_first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      have_first_ = true;
      return kNoJump;
    }
    if (leaf.cert == first_.cert) {
      record_automorphism(first_, leaf);
      return common_prefix(path, first_.path);
    }
    if (leaf.cert < best_.cert) {
      best_ = std::move(leaf);
      return kNoJump;
    }
    if (leaf.cert == best_.cert) {
      record_automorphism(best_, leaf);
      return common_prefix(path, best_.path);
    }
    return kNoJump;
  }

  int search(const Cells& cells, std::vector<Vertex>& path) {
    if (static_cast<int>(cells.size()) == n_) return on_leaf(cells, path);

    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() < 2) continue;
      if (target == cells.size() || cells[i].size() < cells[target].size()) target = i;
    }

    const int depth = static_cast<int>(path.size());
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (!tried.empty()) {
        std::vector<Vertex> orbit = orbits_fixing(path);
        bool seen = std::any_of(tried.begin(), tried.end(), [&](Vertex t) {
          return orbit[static_cast<std::size_t>(t)] == orbit[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(VertexSet::single(v));
      child.push_back(cells[target].without(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(g_, child, std::deque<VertexSet>{VertexSet::single(v)});

      path.push_back(v);
      int jump = search(child, path);
      path.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::vector<int> colors_;
  Cells root_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<Vertex>> gens_;
};

}  // namespace detail

/// Canonical relabeling. `colors`, when given, assigns a class to each vertex;
/// only color-preserving isomorphisms are then considered.
inline CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {}) {
  detail::CanonSearch search(g, colors);
  search.run();
  return search.result();
}

inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {}) {
  detail::CanonSearch search(g, colors);
  search.run();
  CanonicalLabeling lab = search.result();
  if (colors.empty()) return {to_graph6(lab.graph)};
  return {search.color_signature() + '|' + to_graph6(lab.graph)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// Canonical upper-triangle bits packed in one word; valid for n <= 11.
inline std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > 11) throw PreconditionError("canonical_key supports n <= 11");
  const Graph c = canonical_labeling(g).graph;
  std::uint64_t key = 0;
  int bit = 0;
  for (Vertex j = 1; j < c.order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (c.adjacent(i, j)) key |= std::uint64_t{1} << bit;
  return key | (static_cast<std::uint64_t>(c.order()) << 56);
}

}  // namespace domcycle

template <>
struct std::hash<domcycle::CanonicalForm> {
  std::size_t operator()(const domcycle::CanonicalForm& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
