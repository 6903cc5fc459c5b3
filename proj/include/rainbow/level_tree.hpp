#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Closed-form helpers

/// k = ceil((ln 4 - ln eps) / ln(1 + eps)), with a tolerance so that exact
/// integer ratios (eps = 1 gives exactly 2) do not round up spuriously.
inline std::size_t theorem_k(double epsilon) {
  if (!(epsilon > 0)) throw NonPositiveEpsilon("epsilon must be positive");
  const double ratio = (std::log(4.0) - std::log(epsilon)) / std::log1p(epsilon);
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) < 1e-9)
    return static_cast<std::size_t>(rounded);
  return static_cast<std::size_t>(std::ceil(ratio));
}

struct HoeffdingBounds {
  std::optional<double> lower_tail;  // P(S <= s) <= exp(-s/4)
  std::optional<double> upper_tail;  // P(S >= t) <= exp(-3t/16)
};

inline HoeffdingBounds hoeffding_bounds(double mu,
                                        std::optional<double> s = std::nullopt,
                                        std::optional<double> t = std::nullopt) {
  HoeffdingBounds out;
  if (s) {
    if (*s > mu / 2)
      throw PreconditionViolated("lower-tail bound needs s <= mu/2");
    out.lower_tail = std::exp(-*s / 4.0);
  }
  if (t) {
    if (*t < 2 * mu)
      throw PreconditionViolated("upper-tail bound needs t >= 2*mu");
    out.upper_tail = std::exp(-3.0 * *t / 16.0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parameters

struct ExpansionParams {
  double epsilon = 0.5;
  std::size_t k = 2;               // number of color classes / tree depth
  std::size_t edge_budget = 4;     // edges used per vertex per expansion
  std::size_t max_retries = 100;   // Las Vegas retry cap
  std::uint64_t seed = 0;
  bool randomized_selection = false;  // step (a) edge choice; default lowest-color-first
};

/// The paper-sized defaults: edge budget C/(2k) * n^eps for a given C.
inline std::size_t default_edge_budget(double c, std::size_t k, std::size_t n,
                                       double epsilon) {
  const double b = c / (2.0 * double(k)) * std::pow(double(n), epsilon);
  return std::max<std::size_t>(1, static_cast<std::size_t>(b));
}

// ---------------------------------------------------------------------------
// Color partition (Lemma 2.2 style)

struct ColorPartition {
  std::size_t k = 0;
  std::vector<std::size_t> class_of;  // ColorId -> class index in 0..k-1
};

struct PartitionViolation {
  VertexId vertex;
  std::size_t class_index;
  std::size_t have;
  std::size_t need;
};

inline std::vector<PartitionViolation> check_partition(const ColoredGraph& g,
                                                       const ColorPartition& p,
                                                       std::size_t need_per_class) {
  std::vector<PartitionViolation> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::size_t> per_class(p.k, 0);
    for (const auto& nb : g.neighbors(v)) ++per_class[p.class_of[nb.color]];
    for (std::size_t i = 0; i < p.k; ++i)
      if (per_class[i] < need_per_class)
        out.push_back({v, i, per_class[i], need_per_class});
  }
  return out;
}

/// Las Vegas color splitting: assign each color uniformly at random to one
/// of k classes, then verify that every vertex keeps at least
/// ceil(delta/2k) edges in every class; retry with fresh randomness.
inline ColorPartition split_colors(const ColoredGraph& g, std::size_t k,
                                   const ExpansionParams& params,
                                   std::size_t* retries_used = nullptr) {
  if (k == 0) throw Error("k must be positive");
  const std::size_t delta = g.min_degree();
  const std::size_t need = (delta + 2 * k - 1) / (2 * k);  // ceil(delta / 2k)
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  ColorPartition best;
  std::size_t best_violations = SIZE_MAX;
  for (std::size_t attempt = 0; attempt < params.max_retries; ++attempt) {
    ColorPartition p;
    p.k = k;
    p.class_of.resize(g.color_count());
    for (auto& c : p.class_of) c = pick(rng);
    auto violations = check_partition(g, p, need);
    if (violations.empty()) {
      if (retries_used) *retries_used = attempt;
      return p;
    }
    if (violations.size() < best_violations) {
      best_violations = violations.size();
      best = std::move(p);
    }
  }
  throw RetriesExhausted("split_colors: no valid partition in " +
                         std::to_string(params.max_retries) + " attempts (best had " +
                         std::to_string(best_violations) + " vertex/class deficits)");
}

// ---------------------------------------------------------------------------
// Subset shrinking (Lemma 2.3 style)

/// Las Vegas shrinking: include each element of X with probability gamma,
/// verify (1/2) gamma |X| <= |Y| <= 2 gamma |X| and |X_j ∩ Y| <= 4 beta |Y|
/// for every subset, retrying up to max_retries.
inline std::vector<VertexId> shrink_subset(const std::vector<VertexId>& x,
                                           const std::vector<std::vector<VertexId>>& subsets,
                                           double beta, double gamma,
                                           const ExpansionParams& params,
                                           std::size_t* retries_used = nullptr) {
  if (!(beta > 0 && beta < 1 && gamma > 0 && gamma < 1))
    throw Error("shrink_subset: beta and gamma must lie in (0,1)");
  for (std::size_t j = 0; j < subsets.size(); ++j)
    if (double(subsets[j].size()) > beta * double(x.size()))
      throw SubsetTooLarge("subset " + std::to_string(j) + " has size " +
                           std::to_string(subsets[j].size()) + " > beta*|X| = " +
                           std::to_string(beta * double(x.size())));
  std::mt19937_64 rng(params.seed);
  std::bernoulli_distribution keep(gamma);
  for (std::size_t attempt = 0; attempt < params.max_retries; ++attempt) {
    std::vector<VertexId> y;
    for (VertexId e : x)
      if (keep(rng)) y.push_back(e);
    const double lo = 0.5 * gamma * double(x.size());
    const double hi = 2.0 * gamma * double(x.size());
    if (double(y.size()) < lo || double(y.size()) > hi) continue;
    std::vector<bool> in_y;
    {
      VertexId max_id = 0;
      for (VertexId e : x) max_id = std::max(max_id, e);
      in_y.assign(std::size_t(max_id) + 1, false);
      for (VertexId e : y) in_y[e] = true;
    }
    bool ok = true;
    for (const auto& sub : subsets) {
      std::size_t inter = 0;
      for (VertexId e : sub)
        if (e < in_y.size() && in_y[e]) ++inter;
      if (double(inter) > 4.0 * beta * double(y.size())) { ok = false; break; }
    }
    if (ok) {
      if (retries_used) *retries_used = attempt;
      return y;
    }
  }
  throw RetriesExhausted("shrink_subset: no valid sample in " +
                         std::to_string(params.max_retries) + " attempts");
}

// ---------------------------------------------------------------------------
// Level-tree state

/// Rooted tree grown level by level: every root path is rainbow, level-i
/// edges use the reserved color class, and X_{i,c} tracks which level-i
/// vertices carry color c on their root path (an i-fold cover of L_i).
struct LevelState {
  std::vector<std::vector<VertexId>> levels;
  std::unordered_map<VertexId, std::pair<VertexId, ColorId>> parent;
  std::vector<double> alphas;  // |L_i| = n^alpha_i
  std::vector<std::map<ColorId, std::vector<VertexId>>> usage;  // per level: c -> X_{i,c}
  std::size_t dyadic_d = 1;    // degree scale 2^{j*} of the latest expansion

  static LevelState root(VertexId v0) {
    LevelState s;
    s.levels.push_back({v0});
    s.alphas.push_back(0.0);
    s.usage.emplace_back();
    return s;
  }

  std::size_t depth() const { return levels.size() - 1; }

  double delta(std::size_t i) const { return alphas.at(i + 1) - alphas.at(i); }

  /// Root-path edges of v, from v upward. Length equals v's level.
  std::vector<std::pair<VertexId, ColorId>> root_path(VertexId v) const {
    std::vector<std::pair<VertexId, ColorId>> out;
    VertexId cur = v;
    auto it = parent.find(cur);
    while (it != parent.end()) {
      out.push_back(it->second);
      cur = it->second.first;
      it = parent.find(cur);
    }
    return out;
  }

  ColorSet root_colors(VertexId v, std::size_t color_capacity) const {
    ColorSet s(color_capacity);
    for (const auto& [_, c] : root_path(v)) s.insert(c);
    return s;
  }
};

inline double level_alpha(std::size_t level_size, std::size_t n) {
  if (n <= 1 || level_size == 0) return 0.0;
  return std::log(double(level_size)) / std::log(double(n));
}

/// Re-derives every structural invariant from the parent pointers alone.
/// Returns human-readable violation descriptions (empty = all hold).
inline std::vector<std::string> verify_level_state(const ColoredGraph& g,
                                                   const ColorPartition& partition,
                                                   const LevelState& state) {
  std::vector<std::string> out;
  // level disjointness
  std::unordered_map<VertexId, std::size_t> level_of;
  for (std::size_t i = 0; i < state.levels.size(); ++i)
    for (VertexId v : state.levels[i]) {
      auto [it, inserted] = level_of.emplace(v, i);
      if (!inserted)
        out.push_back("vertex " + std::to_string(v) + " appears in levels " +
                      std::to_string(it->second) + " and " + std::to_string(i));
    }
  for (std::size_t i = 0; i < state.levels.size(); ++i) {
    for (VertexId v : state.levels[i]) {
      auto path = state.root_path(v);
      if (path.size() != i) {
        out.push_back("vertex " + std::to_string(v) + " in level " +
                      std::to_string(i) + " has root path of length " +
                      std::to_string(path.size()));
        continue;
      }
      // rainbow root path, with depth-j edge in class j-1
      ColorSet seen(g.color_count());
      std::size_t depth = i;
      VertexId cur = v;
      for (const auto& [p, c] : path) {
        if (seen.contains(c))
          out.push_back("root path of " + std::to_string(v) + " repeats color " +
                        std::to_string(c));
        seen.insert(c);
        if (partition.class_of.size() > c && partition.class_of[c] != depth - 1)
          out.push_back("edge at depth " + std::to_string(depth) + " on root path of " +
                        std::to_string(v) + " has color " + std::to_string(c) +
                        " of class " + std::to_string(partition.class_of[c]));
        if (!g.edge_color(cur, p) || *g.edge_color(cur, p) != c)
          out.push_back("root path of " + std::to_string(v) +
                        " uses a non-edge or wrong color at depth " + std::to_string(depth));
        cur = p;
        --depth;
      }
    }
    // i-fold cover: sum_c |X_{i,c}| == i * |L_i|, and X_{i,c} subset of L_i
    if (i < state.usage.size()) {
      std::size_t total = 0;
      for (const auto& [c, xs] : state.usage[i]) {
        total += xs.size();
        for (VertexId v : xs) {
          auto it = level_of.find(v);
          if (it == level_of.end() || it->second != i)
            out.push_back("X_{" + std::to_string(i) + "," + std::to_string(c) +
                          "} contains vertex " + std::to_string(v) + " outside L_i");
        }
      }
      if (total != i * state.levels[i].size())
        out.push_back("level " + std::to_string(i) + ": sum_c |X_{i,c}| = " +
                      std::to_string(total) + " != i*|L_i| = " +
                      std::to_string(i * state.levels[i].size()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Level expansion (Proposition 3.1 mechanics)

struct ExpandStats {
  std::size_t selected_edges = 0;
  std::size_t discarded_edges = 0;
  double discard_fraction = 0.0;
  std::size_t retries = 0;
  bool x_bound_ok = true;
};

struct ExpandOutcome {
  enum class Kind { next_level, cycle, stalled };
  Kind kind = Kind::stalled;
  LevelState state;  // updated on next_level; best attempt on stalled
  std::optional<RainbowCycleCertificate> certificate;
  std::string stall_reason;
  ExpandStats stats;
};

/// One expansion step L_i -> L_{i+1} using colors of class `class_index`
/// (0-based; grow_tree passes i so the paper's class C_{i+1} is used):
///   (a) select up to edge_budget class edges per L_i vertex, lowest color
///       first (or a seeded random sample when randomized_selection is set)
///   (b) discard edges landing in existing levels, reporting the fraction
///   (c) early exit: two parents with disjoint root-path color sets meeting
///       at a common candidate close a rainbow cycle of length 2(i+1)
///   (d) dyadic bucketing 2^j <= d(y, L_i) < 2^{j+1}; the bucket receiving
///       the most selected edges (ties to smaller j) becomes L_{i+1}
///   (e) one parent edge per new vertex, chosen uniformly at random and
///       re-drawn until the X_{i+1,c} bound holds or retries run out
inline ExpandOutcome expand_level(const ColoredGraph& g, const ColorPartition& partition,
                                  const LevelState& state, std::size_t class_index,
                                  const ExpansionParams& params, std::mt19937_64& rng) {
  if (class_index >= partition.k)
    throw ClassOutOfRange("class index " + std::to_string(class_index) +
                          " >= k = " + std::to_string(partition.k));
  const std::size_t i = state.depth();
  const std::size_t n = g.vertex_count();
  const auto& level = state.levels[i];

  std::vector<bool> in_tree(n, false);
  for (const auto& lvl : state.levels)
    for (VertexId v : lvl) in_tree[v] = true;

  ExpandOutcome out;
  out.state = state;

  // (a) + (b): per-vertex edge selection, then discard edges into the tree.
  // Candidates outside L_0..L_i keep (parent, color) pairs.
  std::map<VertexId, std::vector<std::pair<VertexId, ColorId>>> candidates;
  for (VertexId u : level) {
    std::vector<ColoredGraph::Neighbor> class_edges;
    for (const auto& nb : g.neighbors(u))
      if (partition.class_of[nb.color] == class_index) class_edges.push_back(nb);
    if (params.randomized_selection)
      std::shuffle(class_edges.begin(), class_edges.end(), rng);
    else
      std::sort(class_edges.begin(), class_edges.end(),
                [](const auto& a, const auto& b) { return a.color < b.color; });
    const std::size_t take = std::min(params.edge_budget, class_edges.size());
    for (std::size_t t = 0; t < take; ++t) {
      ++out.stats.selected_edges;
      const auto& nb = class_edges[t];
      if (in_tree[nb.to]) {
        ++out.stats.discarded_edges;
        continue;
      }
      candidates[nb.to].push_back({u, nb.color});
    }
  }
  out.stats.discard_fraction =
      out.stats.selected_edges == 0
          ? 0.0
          : double(out.stats.discarded_edges) / double(out.stats.selected_edges);
  if (candidates.empty()) {
    out.kind = ExpandOutcome::Kind::stalled;
    out.stall_reason = "no-candidates";
    return out;
  }

  // (c) cycle check: disjoint root-path color sets meeting at a candidate
  {
    std::unordered_map<VertexId, ColorSet> root_cols;
    for (VertexId u : level)
      root_cols.emplace(u, state.root_colors(u, g.color_count()));
    for (const auto& [w, parents] : candidates) {
      for (std::size_t a = 0; a < parents.size(); ++a)
        for (std::size_t b = a + 1; b < parents.size(); ++b) {
          const auto& [u1, c1] = parents[a];
          const auto& [u2, c2] = parents[b];
          if (u1 == u2 || c1 == c2) continue;
          if (!root_cols.at(u1).disjoint_with(root_cols.at(u2))) continue;
          // assemble u1 -> root -> u2 -> w -> u1
          std::vector<VertexId> cyc;
          cyc.push_back(u1);
          for (const auto& [p, _] : state.root_path(u1)) cyc.push_back(p);
          {
            // u2's path upward, reversed into the root-downward order;
            // the root itself is already the last vertex of cyc
            std::vector<VertexId> up{u2};
            for (const auto& [p, _] : state.root_path(u2)) up.push_back(p);
            for (std::size_t t = up.size() - 1; t-- > 0;) cyc.push_back(up[t]);
          }
          cyc.push_back(w);
          RainbowCycleCertificate cert;
          cert.vertices = cyc;
          bool edges_ok = true;
          for (std::size_t t = 0; t < cyc.size(); ++t) {
            auto col = g.edge_color(cyc[t], cyc[(t + 1) % cyc.size()]);
            if (!col) { edges_ok = false; break; }
            cert.colors.push_back(*col);
          }
          if (!edges_ok || !verify_certificate(g, cert)) continue;
          out.kind = ExpandOutcome::Kind::cycle;
          out.certificate = std::move(cert);
          return out;
        }
    }
  }

  // (d) dyadic bucketing by surviving selected degree
  std::map<std::size_t, std::size_t> bucket_edges;  // j -> edges received
  for (const auto& [w, parents] : candidates) {
    std::size_t j = 0;
    while ((std::size_t{2} << j) <= parents.size()) ++j;  // 2^j <= d < 2^{j+1}
    bucket_edges[j] += parents.size();
  }
  std::size_t best_j = bucket_edges.begin()->first;
  std::size_t best_score = bucket_edges.begin()->second;
  for (const auto& [j, score] : bucket_edges)
    if (score > best_score) { best_j = j; best_score = score; }  // ties to smaller j

  std::vector<VertexId> next_level;
  for (const auto& [w, parents] : candidates) {
    std::size_t j = 0;
    while ((std::size_t{2} << j) <= parents.size()) ++j;
    if (j == best_j) next_level.push_back(w);
  }
  std::sort(next_level.begin(), next_level.end());

  // (e) uniform random parent choice, verified against the X-bound
  const double alpha_next = level_alpha(next_level.size(), n);
  const double x_bound = std::pow(8.0 * std::log2(std::max<double>(2.0, double(n))),
                                  double(i + 1)) *
                         std::pow(double(n), alpha_next - params.epsilon);
  std::map<ColorId, std::vector<VertexId>> best_usage;
  std::vector<std::pair<VertexId, std::pair<VertexId, ColorId>>> best_parents;
  std::size_t best_violations = SIZE_MAX;
  for (std::size_t attempt = 0; attempt < params.max_retries; ++attempt) {
    std::map<ColorId, std::vector<VertexId>> usage;
    std::vector<std::pair<VertexId, std::pair<VertexId, ColorId>>> chosen;
    for (VertexId w : next_level) {
      const auto& parents = candidates.at(w);
      std::uniform_int_distribution<std::size_t> pick(0, parents.size() - 1);
      const auto& [u, c] = parents[pick(rng)];
      chosen.push_back({w, {u, c}});
      usage[c].push_back(w);
      for (const auto& [_, pc] : state.root_path(u)) usage[pc].push_back(w);
    }
    std::size_t violations = 0;
    for (const auto& [c, xs] : usage)
      if (double(xs.size()) > x_bound) ++violations;
    if (violations < best_violations) {
      best_violations = violations;
      best_usage = usage;
      best_parents = chosen;
    }
    out.stats.retries = attempt;
    if (violations == 0) break;
  }
  out.stats.x_bound_ok = best_violations == 0;

  out.state.levels.push_back(next_level);
  out.state.alphas.push_back(alpha_next);
  out.state.usage.push_back(best_usage);
  out.state.dyadic_d = std::size_t{1} << best_j;
  for (const auto& [w, pe] : best_parents) out.state.parent[w] = pe;

  if (!out.stats.x_bound_ok) {
    out.kind = ExpandOutcome::Kind::stalled;
    out.stall_reason = "x-bound-violated";
    return out;
  }
  out.kind = ExpandOutcome::Kind::next_level;
  return out;
}

// ---------------------------------------------------------------------------
// Driver

struct LevelTraceEntry {
  std::size_t size = 0;
  double alpha = 0.0;
  std::size_t dyadic_d = 0;
  double discard_fraction = 0.0;
  std::size_t retries = 0;
};

struct GrowthTrace {
  std::vector<LevelTraceEntry> levels;
  std::string outcome;  // cycle | exhausted | stalled:<reason> | split-failed
  std::vector<std::string> notes;
  std::vector<std::string> invariant_violations;
};

struct GrowResult {
  std::optional<RainbowCycleCertificate> certificate;
  GrowthTrace trace;
};

/// Full pipeline: bipartite reduction, min-degree peeling at 2k, color
/// splitting, then up to k level expansions. Sound but incomplete: a
/// certificate always verifies against the input graph, while "none"
/// carries no structural conclusion.
inline GrowResult grow_tree(const ColoredGraph& g, const ExpansionParams& params) {
  GrowResult res;
  auto bip = bipartite_half(g, params.seed);
  auto peel = peel_min_degree(bip.subgraph, 2 * params.k);
  if (peel.graph.vertex_count() == 0)
    throw EmptyAfterPeeling("graph is empty after peeling at threshold " +
                            std::to_string(2 * params.k));
  const ColoredGraph& h = peel.graph;
  const std::size_t n = h.vertex_count();

  ColorPartition partition;
  try {
    partition = split_colors(h, params.k, params);
  } catch (const RetriesExhausted& e) {
    res.trace.outcome = "split-failed";
    res.trace.notes.push_back(e.what());
    return res;
  }

  // root: highest degree, ties to the smallest index
  VertexId root = 0;
  for (VertexId v = 1; v < n; ++v)
    if (h.degree(v) > h.degree(root)) root = v;

  std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ULL);
  LevelState state = LevelState::root(root);
  res.trace.levels.push_back({1, 0.0, 0, 0.0, 0});

  for (std::size_t i = 0; i < params.k; ++i) {
    // Lemma 2.3 branch: shrink oversized levels before expanding
    const double shrink_threshold = 1.0 - params.epsilon * params.epsilon / 4.0;
    if (state.alphas[i] > shrink_threshold && state.levels[i].size() > 4) {
      double beta = std::pow(8.0 * std::log2(double(n)), double(i)) *
                    std::pow(double(n), -params.epsilon);
      const double gamma = 0.5 * std::pow(double(n), shrink_threshold - state.alphas[i]);
      if (beta > 0 && beta < 1 && gamma > 0 && gamma < 1) {
        std::vector<std::vector<VertexId>> subsets;
        for (const auto& [c, xs] : state.usage[i]) subsets.push_back(xs);
        try {
          auto y = shrink_subset(state.levels[i], subsets, beta, gamma, params);
          std::vector<bool> in_y(n, false);
          for (VertexId v : y) in_y[v] = true;
          state.levels[i] = y;
          state.alphas[i] = level_alpha(y.size(), n);
          for (auto& [c, xs] : state.usage[i]) {
            std::vector<VertexId> kept;
            for (VertexId v : xs)
              if (in_y[v]) kept.push_back(v);
            xs = std::move(kept);
          }
          res.trace.notes.push_back("level " + std::to_string(i) + " shrunk to " +
                                    std::to_string(y.size()) + " vertices");
        } catch (const Error& e) {
          res.trace.notes.push_back(std::string("shrink skipped: ") + e.what());
        }
      } else {
        res.trace.notes.push_back("shrink skipped: beta/gamma out of (0,1) at this scale");
      }
    }

    auto outcome = expand_level(h, partition, state, i, params, rng);
    if (outcome.kind == ExpandOutcome::Kind::cycle) {
      // translate to the input graph's vertex ids and colors
      RainbowCycleCertificate cert;
      for (VertexId v : outcome.certificate->vertices)
        cert.vertices.push_back(peel.kept[v]);
      for (std::size_t t = 0; t < cert.vertices.size(); ++t) {
        auto col = g.edge_color(cert.vertices[t],
                                cert.vertices[(t + 1) % cert.vertices.size()]);
        cert.colors.push_back(col.value());
      }
      res.certificate = std::move(cert);
      res.trace.outcome = "cycle";
      return res;
    }
    if (outcome.kind == ExpandOutcome::Kind::stalled) {
      res.trace.outcome = "stalled:" + outcome.stall_reason;
      auto viols = verify_level_state(h, partition, outcome.state);
      res.trace.invariant_violations.insert(res.trace.invariant_violations.end(),
                                            viols.begin(), viols.end());
      return res;
    }
    state = std::move(outcome.state);
    res.trace.levels.push_back({state.levels.back().size(), state.alphas.back(),
                                state.dyadic_d, outcome.stats.discard_fraction,
                                outcome.stats.retries});
    auto viols = verify_level_state(h, partition, state);
    res.trace.invariant_violations.insert(res.trace.invariant_violations.end(),
                                          viols.begin(), viols.end());
  }
  res.trace.outcome = "exhausted";
  return res;
}

/// Per-level diagnostic for the growth recurrence
/// (1 + eps/2) - a_{i+1} <= (1+eps)^{-1} [(1 + eps/2) - a_i].
inline std::vector<bool> growth_recurrence_check(const GrowthTrace& trace,
                                                 double epsilon) {
  std::vector<bool> out;
  for (std::size_t i = 0; i + 1 < trace.levels.size(); ++i) {
    const double lhs = (1.0 + epsilon / 2.0) - trace.levels[i + 1].alpha;
    const double rhs =
        ((1.0 + epsilon / 2.0) - trace.levels[i].alpha) / (1.0 + epsilon);
    out.push_back(lhs <= rhs + 1e-12);
  }
  return out;
}

}  // namespace rainbow
