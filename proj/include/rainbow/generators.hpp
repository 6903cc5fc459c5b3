#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

/// d-dimensional hypercube on 2^d vertices, each edge colored by the
/// coordinate in which its endpoints differ.
inline ColoredGraph gen_hypercube(std::size_t d) {
  if (d < 1 || d > 20) throw DimensionTooLarge("hypercube dimension must be in [1,20]");
  const std::size_t n = std::size_t{1} << d;
  std::vector<ColoredEdge> edges;
  edges.reserve(d * (n >> 1));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t y = x ^ (std::size_t{1} << i);
      if (x < y)
        edges.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y),
                         static_cast<ColorId>(i)});
    }
  return ColoredGraph(n, std::move(edges));
}

/// Bipartite Cayley graph over Z_modulus: parts X (ids 0..m-1) and
/// Y (ids m..2m-1), edge x-y iff x - y mod m lies in A, colored by x - y.
inline ColoredGraph gen_cayley_bk(std::size_t modulus, std::vector<std::uint32_t> a) {
  if (modulus == 0) throw Error("modulus must be positive");
  if (a.empty()) throw Error("A must be nonempty");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (auto e : a)
    if (e >= modulus)
      throw ElementOutOfRange("element " + std::to_string(e) +
                              " not in Z_" + std::to_string(modulus));
  std::vector<ColoredEdge> edges;
  edges.reserve(modulus * a.size());
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    const std::uint32_t diff = a[idx];
    for (std::size_t x = 0; x < modulus; ++x) {
      const std::size_t y = (x + modulus - diff) % modulus;  // x - y = diff
      edges.push_back({static_cast<VertexId>(x),
                       static_cast<VertexId>(modulus + y),
                       static_cast<ColorId>(idx)});
    }
  }
  return ColoredGraph(2 * modulus, std::move(edges));
}

/// Disjoint k-sets with equal sums, disproving the B_k* property of A.
struct BkWitness {
  std::vector<std::uint32_t> b;
  std::vector<std::uint32_t> c;
};

namespace detail {

inline std::uint32_t subset_sum_mod(const std::vector<std::uint32_t>& a,
                                    const std::vector<std::size_t>& idx,
                                    std::uint32_t modulus) {
  std::uint64_t s = 0;
  for (std::size_t i : idx) s += a[i];
  return static_cast<std::uint32_t>(s % modulus);
}

inline void k_subsets(std::size_t n, std::size_t k,
                      std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  // standard lexicographic k-combinations of {0..n-1}
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      cur[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  if (k <= n) rec(rec, 0, 0);
}

}  // namespace detail

/// Exhaustive B_k* check: returns the lexicographically first witness pair
/// of disjoint k-subsets of A with equal sum mod `modulus`, or nullopt when
/// A is a B_k*-set. Sets are of distinct elements, per the definition.
inline std::optional<BkWitness> is_bk_star(std::uint32_t modulus,
                                           std::vector<std::uint32_t> a,
                                           std::size_t k) {
  if (modulus == 0) throw Error("modulus must be positive");
  if (k == 0) throw Error("k must be positive");
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  for (auto e : a)
    if (e >= modulus)
      throw ElementOutOfRange("element " + std::to_string(e) +
                              " not in Z_" + std::to_string(modulus));
  std::vector<std::vector<std::size_t>> subsets;
  detail::k_subsets(a.size(), k, subsets);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto sum_i = detail::subset_sum_mod(a, subsets[i], modulus);
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto& b = subsets[i];
      const auto& c = subsets[j];
      bool disjoint = true;
      for (std::size_t x : b)
        if (std::find(c.begin(), c.end(), x) != c.end()) { disjoint = false; break; }
      if (!disjoint) continue;
      if (sum_i != detail::subset_sum_mod(a, c, modulus)) continue;
      BkWitness w;
      for (std::size_t x : b) w.b.push_back(a[x]);
      for (std::size_t x : c) w.c.push_back(a[x]);
      return w;
    }
  }
  return std::nullopt;
}

/// Largest B_k* subset of Z_modulus of size <= size_cap, by branch and
/// bound over elements in ascending order. Deterministic.
inline std::vector<std::uint32_t> max_bk_star_exhaustive(std::uint32_t modulus,
                                                         std::size_t k,
                                                         std::size_t size_cap) {
  if (modulus > 40) throw SearchSpaceTooLarge("modulus must be <= 40");
  if (k == 0) throw Error("k must be positive");
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cur;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() >= size_cap) return;
    for (std::uint32_t e = next; e < modulus; ++e) {
      // prune: even taking every remaining element cannot beat best
      if (cur.size() + (modulus - e) <= best.size()) break;
      cur.push_back(e);
      if (!is_bk_star(modulus, cur, k).has_value())
        self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

/// Random simple graph with m edges, properly colored greedily: each edge
/// takes the smallest color absent at both endpoints (uses <= 2*maxdeg - 1
/// colors). Deterministic per seed.
inline ColoredGraph gen_random_proper(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t max_m = n * (n - 1) / 2;
  if (m > max_m)
    throw TooManyEdges("m=" + std::to_string(m) + " exceeds n(n-1)/2=" +
                       std::to_string(max_m));
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(max_m);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(m);

  std::vector<ColorSet> at(n, ColorSet(2 * n));
  std::vector<ColoredEdge> edges;
  edges.reserve(m);
  for (auto [u, v] : pairs) {
    ColorId c = 0;
    while (at[u].contains(c) || at[v].contains(c)) ++c;
    at[u].insert(c);
    at[v].insert(c);
    edges.push_back({u, v, c});
  }
  return ColoredGraph(n, std::move(edges));
}

}  // namespace rainbow
