#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

struct SearchBudget {
  std::size_t max_length = 12;
  std::optional<std::size_t> node_limit;  // backtracking nodes across the whole call
};

enum class DetectStatus {
  found,
  none,     // exhaustive: no such cycle exists
  unknown,  // node limit hit before exhausting a length class
};

struct DetectResult {
  DetectStatus status = DetectStatus::none;
  std::optional<RainbowCycleCertificate> certificate;
};

inline const char* to_string(DetectStatus s) {
  switch (s) {
    case DetectStatus::found: return "found";
    case DetectStatus::none: return "none";
    case DetectStatus::unknown: return "unknown";
  }
  return "?";
}

namespace detail {

/// Depth-bounded backtracking for a rainbow cycle of exactly `target`
/// edges. Canonical form: the anchor is the smallest vertex of the cycle
/// and the second vertex is smaller than the last, so each cycle is
/// explored once. `nodes` counts backtracking steps against the limit.
class RainbowCycleSearch {
 public:
  RainbowCycleSearch(const ColoredGraph& g, std::optional<std::size_t> node_limit)
      : g_(g), node_limit_(node_limit) {}

  // nullopt certificate + truncated() means the length class was not exhausted
  std::optional<RainbowCycleCertificate> find_exact(std::size_t target) {
    target_ = target;
    path_.clear();
    path_colors_ = ColorSet(g_.color_count());
    on_path_.assign(g_.vertex_count(), false);
    for (VertexId a = 0; a < g_.vertex_count(); ++a) {
      anchor_ = a;
      path_.push_back(a);
      on_path_[a] = true;
      auto found = extend();
      on_path_[a] = false;
      path_.pop_back();
      if (found) return found;
      if (truncated_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool truncated() const { return truncated_; }

 private:
  std::optional<RainbowCycleCertificate> extend() {
    if (node_limit_ && ++nodes_ > *node_limit_) {
      truncated_ = true;
      return std::nullopt;
    }
    const VertexId v = path_.back();
    if (path_.size() == target_) {
      // close back to the anchor
      if (path_[1] >= v) return std::nullopt;  // reflection killed
      auto col = g_.edge_color(v, anchor_);
      if (!col || path_colors_.contains(*col)) return std::nullopt;
      RainbowCycleCertificate cert;
      cert.vertices = path_;
      for (std::size_t i = 0; i + 1 < path_.size(); ++i)
        cert.colors.push_back(*g_.edge_color(path_[i], path_[i + 1]));
      cert.colors.push_back(*col);
      return cert;
    }
    for (const auto& nb : g_.neighbors(v)) {
      if (nb.to <= anchor_ || on_path_[nb.to]) continue;
      if (path_colors_.contains(nb.color)) continue;
      path_.push_back(nb.to);
      on_path_[nb.to] = true;
      path_colors_.insert(nb.color);
      auto found = extend();
      path_colors_.erase(nb.color);
      on_path_[nb.to] = false;
      path_.pop_back();
      if (found) return found;
      if (truncated_) return std::nullopt;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  std::optional<std::size_t> node_limit_;
  std::size_t nodes_ = 0;
  bool truncated_ = false;
  std::size_t target_ = 0;
  VertexId anchor_ = 0;
  std::vector<VertexId> path_;
  std::vector<bool> on_path_;
  ColorSet path_colors_;
};

}  // namespace detail

/// No rainbow cycle can be longer than the number of colors, or than n.
inline std::size_t rainbow_length_cap(const ColoredGraph& g, std::size_t max_length) {
  return std::min({max_length, g.vertex_count(), g.color_count()});
}

/// Minimum-length rainbow cycle of length <= budget.max_length, if any.
/// Length classes are searched in increasing order, so the first hit is
/// minimal; within a class the canonical search order makes ties
/// deterministic (lexicographically smallest canonical vertex sequence).
inline DetectResult shortest_rainbow_cycle(const ColoredGraph& g,
                                           const SearchBudget& budget) {
  const std::size_t cap = rainbow_length_cap(g, budget.max_length);
  detail::RainbowCycleSearch search(g, budget.node_limit);
  for (std::size_t len = 3; len <= cap; ++len) {
    auto cert = search.find_exact(len);
    if (cert) return {DetectStatus::found, std::move(cert)};
    if (search.truncated()) return {DetectStatus::unknown, std::nullopt};
  }
  return {DetectStatus::none, std::nullopt};
}

/// Rainbow cycle of length exactly 2k, if any.
inline DetectResult has_rainbow_c2k(const ColoredGraph& g, std::size_t k,
                                    SearchBudget budget = {}) {
  if (k < 2) throw Error("has_rainbow_c2k requires k >= 2");
  const std::size_t len = 2 * k;
  if (len > rainbow_length_cap(g, len)) return {DetectStatus::none, std::nullopt};
  detail::RainbowCycleSearch search(g, budget.node_limit);
  auto cert = search.find_exact(len);
  if (cert) return {DetectStatus::found, std::move(cert)};
  if (search.truncated()) return {DetectStatus::unknown, std::nullopt};
  return {DetectStatus::none, std::nullopt};
}

/// Exhaustive rainbow acyclicity. Exponential in the worst case, but the
/// search depth is capped by the color count.
inline bool is_rainbow_acyclic(const ColoredGraph& g) {
  SearchBudget b;
  b.max_length = g.vertex_count();
  return shortest_rainbow_cycle(g, b).status == DetectStatus::none;
}

/// Independent oracle: enumerates ALL simple cycles up to rotation and
/// reflection (smallest vertex first, smaller neighbor second) and keeps
/// the rainbow ones. No color-based pruning during the walk, so the
/// search path is disjoint from shortest_rainbow_cycle's.
inline std::vector<RainbowCycleCertificate> brute_force_enumerate(
    const ColoredGraph& g, std::size_t max_length) {
  if (g.vertex_count() > 12 || max_length > 12)
    throw InstanceTooLarge("brute_force_enumerate: n <= 12 and max_length <= 12");
  std::vector<RainbowCycleCertificate> out;
  std::vector<VertexId> path;
  std::vector<bool> on_path(g.vertex_count(), false);

  auto rainbow = [&](const std::vector<VertexId>& cyc) -> std::optional<RainbowCycleCertificate> {
    std::vector<ColorId> colors;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      colors.push_back(*g.edge_color(cyc[i], cyc[(i + 1) % cyc.size()]));
    auto sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return std::nullopt;
    return RainbowCycleCertificate{cyc, std::move(colors)};
  };

  auto rec = [&](auto&& self, VertexId anchor) -> void {
    const VertexId v = path.back();
    if (path.size() >= 3 && path[1] < v) {
      if (g.edge_color(v, anchor))
        if (auto cert = rainbow(path)) out.push_back(std::move(*cert));
    }
    if (path.size() == max_length) return;
    for (const auto& nb : g.neighbors(v)) {
      if (nb.to <= anchor || on_path[nb.to]) continue;
      path.push_back(nb.to);
      on_path[nb.to] = true;
      self(self, anchor);
      on_path[nb.to] = false;
      path.pop_back();
    }
  };

  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    path.assign(1, a);
    on_path[a] = true;
    rec(rec, a);
    on_path[a] = false;
  }
  return out;
}

}  // namespace rainbow
