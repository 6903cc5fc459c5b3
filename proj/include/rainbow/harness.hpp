#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/colored_graph.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/level_tree.hpp"

namespace rainbow {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON views

inline json to_json(const RainbowCycleCertificate& c) {
  return json{{"length", c.vertices.size()},
              {"vertices", c.vertices},
              {"colors", c.colors}};
}

inline json to_json(const DetectResult& r) {
  json j{{"status", to_string(r.status)}};
  if (r.certificate) {
    j["length"] = r.certificate->vertices.size();
    j["vertices"] = r.certificate->vertices;
    j["colors"] = r.certificate->colors;
  }
  return j;
}

inline json to_json(const GrowthTrace& t) {
  json levels = json::array();
  for (const auto& l : t.levels)
    levels.push_back(json{{"size", l.size},
                          {"alpha", l.alpha},
                          {"d", l.dyadic_d},
                          {"discard_fraction", l.discard_fraction},
                          {"retries", l.retries}});
  return json{{"levels", levels},
              {"outcome", t.outcome},
              {"notes", t.notes},
              {"invariant_violations", t.invariant_violations}};
}

// ---------------------------------------------------------------------------
// Exhaustive extremal oracle for f(n)

struct ExtremalResult {
  std::size_t n = 0;
  std::size_t f_value = 0;
  ColoredGraph witness;
};

namespace detail {

/// Enumerates proper colorings of the edge list up to color renaming
/// (first-fit partitions into matchings) and reports whether any of them
/// is rainbow-acyclic, returning a witness coloring when one exists.
inline bool find_acyclic_coloring(std::size_t n,
                                  const std::vector<std::pair<VertexId, VertexId>>& edge_list,
                                  std::vector<ColoredEdge>& witness) {
  const std::size_t m = edge_list.size();
  std::vector<ColorId> color(m, 0);
  std::vector<std::uint32_t> class_verts;  // endpoint bitmask per class

  auto rec = [&](auto&& self, std::size_t t) -> bool {
    if (t == m) {
      std::vector<ColoredEdge> edges;
      for (std::size_t e = 0; e < m; ++e)
        edges.push_back({edge_list[e].first, edge_list[e].second, color[e]});
      ColoredGraph g(n, edges);
      if (is_rainbow_acyclic(g)) {
        witness = std::move(edges);
        return true;
      }
      return false;
    }
    const std::uint32_t ebits =
        (1u << edge_list[t].first) | (1u << edge_list[t].second);
    for (std::size_t j = 0; j <= class_verts.size(); ++j) {
      if (j < class_verts.size() && (class_verts[j] & ebits)) continue;
      color[t] = static_cast<ColorId>(j);
      if (j == class_verts.size()) {
        class_verts.push_back(ebits);
        if (self(self, t + 1)) return true;
        class_verts.pop_back();
        break;  // later classes are symmetric to this fresh one
      }
      class_verts[j] |= ebits;
      if (self(self, t + 1)) return true;
      class_verts[j] &= ~ebits;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool mask_has_triangle(std::uint32_t mask, std::size_t n,
                              const std::vector<std::vector<int>>& pair_index) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!(mask >> pair_index[a][b] & 1)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if ((mask >> pair_index[a][c] & 1) && (mask >> pair_index[b][c] & 1))
          return true;
    }
  return false;
}

}  // namespace detail

/// Exhaustive f(n): maximum edges of a properly edge-colored rainbow-acyclic
/// graph on n labeled vertices. Any graph containing a triangle is skipped
/// outright (a proper coloring makes every triangle rainbow); remaining
/// graphs are scanned in edge-count-descending order with colorings
/// enumerated as matching-partitions of the edge set.
inline ExtremalResult exact_f(std::size_t n) {
  if (n > 6) throw InstanceTooLarge("exact_f: n <= 6");
  if (n == 0) return {0, 0, ColoredGraph(0, {})};

  std::vector<std::pair<VertexId, VertexId>> all_pairs;
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      pair_index[a][b] = static_cast<int>(all_pairs.size());
      all_pairs.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    }
  const std::size_t max_m = all_pairs.size();

  std::vector<std::vector<std::uint32_t>> by_count(max_m + 1);
  for (std::uint32_t mask = 0; mask < (1u << max_m); ++mask)
    by_count[std::popcount(mask)].push_back(mask);

  for (std::size_t m = max_m; m + 1 > 0; --m) {
    for (std::uint32_t mask : by_count[m]) {
      if (detail::mask_has_triangle(mask, n, pair_index)) continue;
      std::vector<std::pair<VertexId, VertexId>> edge_list;
      for (std::size_t e = 0; e < max_m; ++e)
        if (mask >> e & 1) edge_list.push_back(all_pairs[e]);
      std::vector<ColoredEdge> witness;
      if (detail::find_acyclic_coloring(n, edge_list, witness))
        return {n, m, ColoredGraph(n, std::move(witness))};
    }
    if (m == 0) break;
  }
  return {n, 0, ColoredGraph(n, {})};
}

// ---------------------------------------------------------------------------
// Construction cross-checks

struct HypercubeRow {
  std::size_t d = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  double bound = 0.0;  // (n/2) * log2 n
  bool rainbow_acyclic = false;
};

/// For d = 1..d_max: verifies the direction-colored hypercube is
/// rainbow-acyclic and tabulates its edge count against (n/2) log2 n.
inline std::vector<HypercubeRow> hypercube_f_lower_bound_check(std::size_t d_max) {
  if (d_max > 7) throw InstanceTooLarge("hypercube check: d_max <= 7");
  std::vector<HypercubeRow> rows;
  for (std::size_t d = 1; d <= d_max; ++d) {
    auto g = gen_hypercube(d);
    HypercubeRow row;
    row.d = d;
    row.n = g.vertex_count();
    row.edges = g.edge_count();
    row.bound = double(row.n) / 2.0 * double(d);  // log2(2^d) = d
    row.rainbow_acyclic = is_rainbow_acyclic(g);
    rows.push_back(row);
  }
  return rows;
}

struct SweepReport {
  std::size_t checked = 0;
  std::vector<std::string> discrepancies;
};

/// Checks "A is B_k* iff the Cayley graph has no rainbow C_2k" over all
/// moduli <= mod_max, all nonempty A with |A| <= set_size_max, and every k
/// in ks. Expected: zero discrepancies.
inline SweepReport cayley_equivalence_sweep(std::size_t mod_max,
                                            std::size_t set_size_max,
                                            const std::vector<std::size_t>& ks) {
  if (mod_max > 12 || set_size_max > 4)
    throw InstanceTooLarge("sweep: mod_max <= 12 and set_size_max <= 4");
  SweepReport report;
  for (std::uint32_t modulus = 1; modulus <= mod_max; ++modulus) {
    std::vector<std::uint32_t> a;
    auto rec = [&](auto&& self, std::uint32_t next) -> void {
      if (!a.empty()) {
        auto g = gen_cayley_bk(modulus, a);
        for (std::size_t k : ks) {
          const bool bk = !is_bk_star(modulus, a, k).has_value();
          const bool no_cycle = has_rainbow_c2k(g, k).status == DetectStatus::none;
          ++report.checked;
          if (bk != no_cycle) {
            std::ostringstream os;
            os << "modulus=" << modulus << " A={";
            for (std::size_t i = 0; i < a.size(); ++i)
              os << (i ? "," : "") << a[i];
            os << "} k=" << k << ": is_bk_star=" << bk
               << " but no_rainbow_c2k=" << no_cycle;
            report.discrepancies.push_back(os.str());
          }
        }
      }
      if (a.size() == set_size_max) return;
      for (std::uint32_t e = next; e < modulus; ++e) {
        a.push_back(e);
        self(self, e + 1);
        a.pop_back();
      }
    };
    rec(rec, 0);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Experiment runner: line-oriented "key = value" stanzas separated by blank
// lines, each starting with "task = <name>".

namespace detail {

struct Stanza {
  std::size_t first_line = 0;
  std::map<std::string, std::pair<std::string, std::size_t>> kv;  // key -> (value, line)

  std::string require(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw SpecParseError(first_line, "missing required key '" + key + "'");
    return it->second.first;
  }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second.first;
  }

  std::uint64_t number(const std::string& key, std::uint64_t fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      return std::stoull(it->second.first);
    } catch (...) {
      throw SpecParseError(it->second.second, "key '" + key + "' is not a number");
    }
  }

  std::uint64_t number_required(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end())
      throw SpecParseError(first_line, "missing required key '" + key + "'");
    try {
      return std::stoull(it->second.first);
    } catch (...) {
      throw SpecParseError(it->second.second, "key '" + key + "' is not a number");
    }
  }

  double real(const std::string& key, double fallback) const {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
      return std::stod(it->second.first);
    } catch (...) {
      throw SpecParseError(it->second.second, "key '" + key + "' is not a number");
    }
  }
};

inline std::vector<Stanza> parse_stanzas(std::istream& in) {
  std::vector<Stanza> out;
  Stanza cur;
  std::string line;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (!cur.kv.empty()) out.push_back(cur);
    cur = Stanza{};
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) {
      flush();
      continue;
    }
    if (line[start] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SpecParseError(lineno, "expected 'key = value'");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw SpecParseError(lineno, "empty key");
    if (cur.kv.empty()) cur.first_line = lineno;
    cur.kv[key] = {value, lineno};
  }
  flush();
  return out;
}

inline std::vector<std::uint32_t> parse_int_list(const std::string& s,
                                                 std::size_t line) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (...) {
      throw SpecParseError(line, "bad integer list element '" + item + "'");
    }
  }
  return out;
}

inline ColoredGraph make_generator(const Stanza& st, std::uint64_t seed_offset) {
  const std::string gen = st.require("generator");
  if (gen == "hypercube") return gen_hypercube(st.number_required("d"));
  if (gen == "cayley") {
    auto it = st.kv.find("set");
    if (it == st.kv.end())
      throw SpecParseError(st.first_line, "cayley generator needs 'set'");
    return gen_cayley_bk(static_cast<std::uint32_t>(st.number_required("mod")),
                         parse_int_list(it->second.first, it->second.second));
  }
  if (gen == "random")
    return gen_random_proper(st.number_required("n"), st.number_required("m"),
                             st.number("seed", 0) + seed_offset);
  throw SpecParseError(st.kv.at("generator").second, "unknown generator '" + gen + "'");
}

}  // namespace detail

/// Executes a declared batch of tasks. Deterministic given the seeds in the
/// spec. Returns a JSON report with one record per task.
inline json run_experiment(std::istream& in) {
  auto stanzas = detail::parse_stanzas(in);
  json tasks = json::array();
  bool all_ok = true;
  for (const auto& st : stanzas) {
    const std::string task = st.require("task");
    json rec{{"task", task}};
    if (task == "grow") {
      ExpansionParams params;
      params.k = st.number("k", 2);
      params.epsilon = st.real("epsilon", 0.5);
      params.edge_budget = st.number("budget", 4);
      params.max_retries = st.number("retries", 100);
      params.seed = st.number("seed", 0);
      const std::size_t runs = st.number("runs", 1);
      json records = json::array();
      std::size_t found = 0;
      for (std::size_t r = 0; r < runs; ++r) {
        auto g = detail::make_generator(st, r);
        ExpansionParams p = params;
        p.seed = params.seed + r;
        json one{{"run", r}, {"seed", p.seed}};
        try {
          auto res = grow_tree(g, p);
          one["trace"] = to_json(res.trace);
          if (res.certificate) {
            ++found;
            one["certificate"] = to_json(*res.certificate);
            one["verified"] = bool(verify_certificate(g, *res.certificate));
            if (!verify_certificate(g, *res.certificate)) all_ok = false;
          }
        } catch (const EmptyAfterPeeling& e) {
          one["error"] = e.what();
        }
        records.push_back(std::move(one));
      }
      rec["runs"] = runs;
      rec["cycles_found"] = found;
      rec["records"] = std::move(records);
    } else if (task == "oracle_equivalence") {
      const std::size_t count = st.number("count", 100);
      const std::size_t n = st.number("n", 10);
      const std::size_t m = st.number("m", 20);
      const std::uint64_t seed = st.number("seed", 0);
      const std::size_t max_len = st.number("max_len", 12);
      std::size_t mismatches = 0;
      for (std::size_t r = 0; r < count; ++r) {
        auto g = gen_random_proper(n, std::min(m, n * (n - 1) / 2), seed + r);
        auto fast = shortest_rainbow_cycle(g, {max_len, std::nullopt});
        auto all = brute_force_enumerate(g, max_len);
        std::optional<std::size_t> oracle_min;
        for (const auto& c : all)
          if (!oracle_min || c.vertices.size() < *oracle_min)
            oracle_min = c.vertices.size();
        const bool fast_found = fast.status == DetectStatus::found;
        if (fast_found != oracle_min.has_value() ||
            (fast_found && fast.certificate->vertices.size() != *oracle_min))
          ++mismatches;
      }
      rec["count"] = count;
      rec["mismatches"] = mismatches;
      if (mismatches > 0) all_ok = false;
    } else if (task == "sweep") {
      auto ks_raw = detail::parse_int_list(st.get("k", "2,3"), st.first_line);
      std::vector<std::size_t> ks(ks_raw.begin(), ks_raw.end());
      auto report = cayley_equivalence_sweep(st.number("mod_max", 12),
                                             st.number("set_size_max", 4), ks);
      rec["checked"] = report.checked;
      rec["discrepancies"] = report.discrepancies;
      if (!report.discrepancies.empty()) all_ok = false;
    } else if (task == "hypercube_check") {
      auto rows = hypercube_f_lower_bound_check(st.number("d_max", 7));
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back(json{{"d", r.d},
                             {"n", r.n},
                             {"edges", r.edges},
                             {"bound", r.bound},
                             {"rainbow_acyclic", r.rainbow_acyclic}});
        if (!r.rainbow_acyclic || double(r.edges) != r.bound) all_ok = false;
      }
      rec["table"] = std::move(table);
    } else if (task == "extremal") {
      auto res = exact_f(st.number_required("n"));
      std::ostringstream os;
      write_edge_list(os, res.witness);
      rec["n"] = res.n;
      rec["f"] = res.f_value;
      rec["witness"] = os.str();
    } else {
      throw SpecParseError(st.kv.at("task").second, "unknown task '" + task + "'");
    }
    tasks.push_back(std::move(rec));
  }
  return json{{"tasks", tasks}, {"ok", all_ok}};
}

}  // namespace rainbow
