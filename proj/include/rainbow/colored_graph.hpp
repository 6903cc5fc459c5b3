#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rainbow/color_set.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

using VertexId = std::uint32_t;

struct ColoredEdge {
  VertexId u;
  VertexId v;
  ColorId color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple undirected graph with one color per edge and a properness
/// guarantee: no two edges sharing a vertex have the same color.
/// Immutable after construction; safe to read from many threads.
class ColoredGraph {
 public:
  struct Neighbor {
    VertexId to;
    ColorId color;
  };

  ColoredGraph() = default;

  /// `edges` must already carry dense color ids. Use build_graph to
  /// normalize arbitrary color labels first.
  ColoredGraph(std::size_t n, std::vector<ColoredEdge> edges)
      : n_(n), edges_(std::move(edges)) {
    adj_.resize(n_);
    std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      if (e.u >= n_ || e.v >= n_)
        throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") has an endpoint >= n=" + std::to_string(n_));
      if (e.u == e.v)
        throw LoopEdge("loop edge at vertex " + std::to_string(e.u));
      auto key = std::minmax(e.u, e.v);
      if (!seen.emplace(std::pair{key.first, key.second}, i).second)
        throw DuplicateEdge("duplicate edge (" + std::to_string(key.first) +
                            "," + std::to_string(key.second) + ")");
      color_count_ = std::max<std::size_t>(color_count_, e.color + 1);
      adj_[e.u].push_back({e.v, e.color});
      adj_[e.v].push_back({e.u, e.color});
    }
    for (auto& nbrs : adj_)
      std::sort(nbrs.begin(), nbrs.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    // properness check: incident colors pairwise distinct at every vertex
    for (VertexId v = 0; v < n_; ++v) {
      ColorSet seen_colors(color_count_);
      for (const auto& nb : adj_[v]) {
        if (seen_colors.contains(nb.color))
          throw ImproperColoring("vertex " + std::to_string(v) +
                                 " has two incident edges of color " +
                                 std::to_string(nb.color) +
                                 " (one towards vertex " + std::to_string(nb.to) + ")");
        seen_colors.insert(nb.color);
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t color_count() const { return color_count_; }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adj_[v].data(), adj_[v].size()};
  }

  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  std::size_t min_degree() const {
    std::size_t d = n_ == 0 ? 0 : adj_[0].size();
    for (VertexId v = 1; v < n_; ++v) d = std::min(d, adj_[v].size());
    return d;
  }

  std::optional<ColorId> edge_color(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    const auto& nbrs = adj_[u];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& a, VertexId b) { return a.to < b; });
    if (it != nbrs.end() && it->to == v) return it->color;
    return std::nullopt;
  }

 private:
  std::size_t n_ = 0;
  std::size_t color_count_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

/// Edge with an arbitrary unsigned color label, as found in input files.
struct RawEdge {
  VertexId u;
  VertexId v;
  std::uint64_t color_label;
};

/// Normalizes color labels to dense ids in first-appearance order and
/// constructs the graph (which validates simplicity and properness).
inline ColoredGraph build_graph(std::size_t n, const std::vector<RawEdge>& raw) {
  std::map<std::uint64_t, ColorId> label_to_id;
  std::vector<ColoredEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    auto [it, _] = label_to_id.try_emplace(e.color_label,
                                           static_cast<ColorId>(label_to_id.size()));
    edges.push_back({e.u, e.v, it->second});
  }
  return ColoredGraph(n, std::move(edges));
}

struct ProperViolation {
  VertexId vertex;
  ColorId color;
  ColoredEdge edge1;
  ColoredEdge edge2;
};

/// Lists all properness violations of an edge list against vertex count n,
/// without constructing a ColoredGraph (which would reject them).
inline std::vector<ProperViolation> check_proper(std::size_t n,
                                                 const std::vector<ColoredEdge>& edges) {
  std::vector<std::vector<ColoredEdge>> incident(n);
  for (const auto& e : edges) {
    incident[e.u].push_back(e);
    incident[e.v].push_back(e);
  }
  std::vector<ProperViolation> out;
  for (VertexId v = 0; v < n; ++v) {
    auto& inc = incident[v];
    std::sort(inc.begin(), inc.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
      return std::tie(a.color, a.u, a.v) < std::tie(b.color, b.u, b.v);
    });
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size() && inc[j].color == inc[i].color; ++j)
        out.push_back({v, inc[i].color, inc[i], inc[j]});
  }
  return out;
}

inline std::vector<ProperViolation> check_proper(const ColoredGraph& g) {
  return check_proper(g.vertex_count(), g.edges());
}

/// d(v, X) restricted to an optional set of allowed colors.
inline std::size_t degree_to_set(const ColoredGraph& g, VertexId v,
                                 const std::vector<bool>& in_x,
                                 const ColorSet* allowed = nullptr) {
  std::size_t count = 0;
  for (const auto& nb : g.neighbors(v)) {
    if (nb.to < in_x.size() && in_x[nb.to] &&
        (allowed == nullptr || allowed->contains(nb.color)))
      ++count;
  }
  return count;
}

inline std::size_t degree_to_set(const ColoredGraph& g, VertexId v,
                                 const std::vector<VertexId>& x,
                                 const ColorSet* allowed = nullptr) {
  std::vector<bool> in_x(g.vertex_count(), false);
  for (VertexId w : x) in_x[w] = true;
  return degree_to_set(g, v, in_x, allowed);
}

// ---------------------------------------------------------------------------
// Rainbow cycle certificates

struct RainbowCycleCertificate {
  std::vector<VertexId> vertices;  // cyclic order
  std::vector<ColorId> colors;     // colors[i] colors edge vertices[i]-vertices[i+1 mod L]

  std::size_t length() const { return vertices.size(); }
};

enum class CertFailure {
  ok,
  too_short,
  length_mismatch,
  vertex_out_of_range,
  repeated_vertex,
  missing_edge,
  wrong_color,
  repeated_color,
};

struct CertCheck {
  CertFailure reason = CertFailure::ok;
  explicit operator bool() const { return reason == CertFailure::ok; }
};

inline const char* to_string(CertFailure f) {
  switch (f) {
    case CertFailure::ok: return "ok";
    case CertFailure::too_short: return "too_short";
    case CertFailure::length_mismatch: return "length_mismatch";
    case CertFailure::vertex_out_of_range: return "vertex_out_of_range";
    case CertFailure::repeated_vertex: return "repeated_vertex";
    case CertFailure::missing_edge: return "missing_edge";
    case CertFailure::wrong_color: return "wrong_color";
    case CertFailure::repeated_color: return "repeated_color";
  }
  return "?";
}

inline CertCheck verify_certificate(const ColoredGraph& g,
                                    const RainbowCycleCertificate& c) {
  const std::size_t len = c.vertices.size();
  if (len < 3) return {CertFailure::too_short};
  if (c.colors.size() != len) return {CertFailure::length_mismatch};
  std::vector<bool> seen_v(g.vertex_count(), false);
  for (VertexId v : c.vertices) {
    if (v >= g.vertex_count()) return {CertFailure::vertex_out_of_range};
    if (seen_v[v]) return {CertFailure::repeated_vertex};
    seen_v[v] = true;
  }
  ColorSet seen_c(g.color_count());
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId a = c.vertices[i];
    const VertexId b = c.vertices[(i + 1) % len];
    auto col = g.edge_color(a, b);
    if (!col) return {CertFailure::missing_edge};
    if (*col != c.colors[i]) return {CertFailure::wrong_color};
    if (seen_c.contains(c.colors[i])) return {CertFailure::repeated_color};
    seen_c.insert(c.colors[i]);
  }
  return {CertFailure::ok};
}

// ---------------------------------------------------------------------------
// Structural preprocessing

struct BipartiteHalf {
  ColoredGraph subgraph;        // edges crossing the bipartition, same vertex ids
  std::vector<std::uint8_t> side;  // 0 or 1 per vertex
};

/// Bipartite subgraph with at least ceil(m/2) edges. Bipartite inputs keep
/// all their edges (exact 2-coloring found by BFS); otherwise randomized
/// greedy placement followed by single-vertex moves until no move gains.
inline BipartiteHalf bipartite_half(const ColoredGraph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> side(n, 0);

  // exact 2-coloring attempt
  {
    std::vector<int> color(n, -1);
    bool bipartite = true;
    for (VertexId s = 0; s < n && bipartite; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::queue<VertexId> q;
      q.push(s);
      while (!q.empty() && bipartite) {
        VertexId v = q.front();
        q.pop();
        for (const auto& nb : g.neighbors(v)) {
          if (color[nb.to] == -1) {
            color[nb.to] = 1 - color[v];
            q.push(nb.to);
          } else if (color[nb.to] == color[v]) {
            bipartite = false;
            break;
          }
        }
      }
    }
    if (bipartite) {
      for (VertexId v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(color[v]);
      std::vector<ColoredEdge> kept = g.edges();
      return {ColoredGraph(n, std::move(kept)), std::move(side)};
    }
  }

  // randomized greedy placement
  std::mt19937_64 rng(seed);
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> placed(n, false);
  for (VertexId v : order) {
    long gain0 = 0;  // cut edges if v goes to side 0
    long gain1 = 0;
    for (const auto& nb : g.neighbors(v)) {
      if (!placed[nb.to]) continue;
      if (side[nb.to] == 1) ++gain0; else ++gain1;
    }
    if (gain0 == gain1)
      side[v] = static_cast<std::uint8_t>(rng() & 1);
    else
      side[v] = gain0 > gain1 ? 0 : 1;
    placed[v] = true;
  }

  // local moves: flip any vertex with more same-side than cross-side neighbors
  bool improved = true;
  while (improved) {
    improved = false;
    for (VertexId v = 0; v < n; ++v) {
      long cut = 0, uncut = 0;
      for (const auto& nb : g.neighbors(v))
        (side[nb.to] != side[v] ? cut : uncut)++;
      if (uncut > cut) {
        side[v] ^= 1;
        improved = true;
      }
    }
  }

  std::vector<ColoredEdge> kept;
  for (const auto& e : g.edges())
    if (side[e.u] != side[e.v]) kept.push_back(e);
  return {ColoredGraph(n, std::move(kept)), std::move(side)};
}

struct PeelResult {
  ColoredGraph graph;              // surviving vertices, compact ids
  std::vector<VertexId> kept;      // kept[new id] = old id
};

/// Repeatedly deletes vertices of degree <= threshold; the surviving core
/// does not depend on deletion order.
inline PeelResult peel_min_degree(const ColoredGraph& g, std::size_t threshold) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= threshold) {
      q.push(v);
      removed[v] = true;
    }
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (const auto& nb : g.neighbors(v)) {
      if (removed[nb.to]) continue;
      if (--deg[nb.to] <= threshold) {
        removed[nb.to] = true;
        q.push(nb.to);
      }
    }
  }
  std::vector<VertexId> kept;
  std::vector<VertexId> new_id(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) {
      new_id[v] = static_cast<VertexId>(kept.size());
      kept.push_back(v);
    }
  }
  std::vector<ColoredEdge> edges;
  for (const auto& e : g.edges())
    if (!removed[e.u] && !removed[e.v])
      edges.push_back({new_id[e.u], new_id[e.v], e.color});
  return {ColoredGraph(kept.size(), std::move(edges)), std::move(kept)};
}

// ---------------------------------------------------------------------------
// Shared edge-list format: "n m" then m lines "u v c".

inline ColoredGraph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw Error("edge list: cannot read header 'n m'");
  std::vector<RawEdge> raw;
  raw.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    RawEdge e{};
    if (!(in >> e.u >> e.v >> e.color_label))
      throw Error("edge list: cannot read edge " + std::to_string(i + 1) +
                  " of " + std::to_string(m));
    raw.push_back(e);
  }
  return build_graph(n, raw);
}

inline void write_edge_list(std::ostream& out, const ColoredGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges())
    out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

}  // namespace rainbow
