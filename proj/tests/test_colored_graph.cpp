#include <doctest.h>

#include <random>
#include <sstream>

#include "rainbow/colored_graph.hpp"
#include "rainbow/generators.hpp"

using namespace rainbow;

namespace {

ColoredGraph make(std::size_t n, std::vector<ColoredEdge> edges) {
  return ColoredGraph(n, std::move(edges));
}

ColoredGraph c4_alternating() {
  return make(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 0, 1}});
}

// K_{2,3} with parts {0,1} and {2,3,4} and a proper 3-coloring
ColoredGraph k23() {
  return make(5, {{0, 2, 0}, {0, 3, 1}, {0, 4, 2}, {1, 2, 1}, {1, 3, 2}, {1, 4, 0}});
}

}  // namespace

TEST_CASE("build_graph accepts valid inputs") {
  auto g = build_graph(2, {{0, 1, 0}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);

  auto c4 = c4_alternating();
  CHECK(c4.edge_count() == 4);
  CHECK(c4.color_count() == 2);
}

TEST_CASE("build_graph rejects improper input, naming the offense") {
  CHECK_THROWS_AS(make(3, {{0, 1, 0}, {1, 2, 0}}), ImproperColoring);
  CHECK_THROWS_AS(make(2, {{0, 0, 0}}), LoopEdge);
  CHECK_THROWS_AS(make(3, {{0, 1, 0}, {1, 0, 1}}), DuplicateEdge);
  CHECK_THROWS_AS(make(2, {{0, 5, 0}}), Error);
}

TEST_CASE("build_graph normalizes arbitrary color labels in first-appearance order") {
  auto g = build_graph(4, {{0, 1, 700}, {1, 2, 42}, {2, 3, 700}});
  CHECK(g.color_count() == 2);
  CHECK(*g.edge_color(0, 1) == 0);
  CHECK(*g.edge_color(1, 2) == 1);
  CHECK(*g.edge_color(2, 3) == 0);
}

TEST_CASE("check_proper") {
  CHECK(check_proper(c4_alternating()).empty());

  // star with all edges the same color: 3 violations at the center
  std::vector<ColoredEdge> star = {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}};
  auto violations = check_proper(4, star);
  CHECK(violations.size() == 3);
  for (const auto& v : violations) CHECK(v.vertex == 0);

  CHECK(check_proper(gen_hypercube(3)).empty());
}

TEST_CASE("degree_to_set") {
  auto c4 = c4_alternating();
  CHECK(degree_to_set(c4, 0, std::vector<VertexId>{1, 3}) == 2);
  CHECK(degree_to_set(c4, 0, std::vector<VertexId>{2}) == 0);

  auto g = k23();
  ColorSet only0(g.color_count());
  only0.insert(0);
  CHECK(degree_to_set(g, 0, std::vector<VertexId>{2, 3, 4}, &only0) == 1);
}

TEST_CASE("bipartite_half keeps all edges of a bipartite input") {
  auto g = k23();
  auto half = bipartite_half(g, 7);
  CHECK(half.subgraph.edge_count() == g.edge_count());
  for (const auto& e : half.subgraph.edges())
    CHECK(half.side[e.u] != half.side[e.v]);
}

TEST_CASE("bipartite_half on odd structures") {
  auto triangle = make(3, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  CHECK(bipartite_half(triangle, 1).subgraph.edge_count() == 2);

  auto k4 = make(4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {1, 2, 2}});
  CHECK(bipartite_half(k4, 3).subgraph.edge_count() >= 3);
}

TEST_CASE("bipartite_half keeps at least half the edges, 100 seeds") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gen_random_proper(8 + seed % 5, 10 + seed % 15, seed);
    auto half = bipartite_half(g, seed);
    CHECK(half.subgraph.edge_count() >= (g.edge_count() + 1) / 2);
    for (const auto& e : half.subgraph.edges())
      CHECK(half.side[e.u] != half.side[e.v]);
  }
}

TEST_CASE("peel_min_degree") {
  auto p3 = make(3, {{0, 1, 0}, {1, 2, 1}});
  CHECK(peel_min_degree(p3, 1).graph.vertex_count() == 0);

  auto c6 = make(6, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 1}, {4, 5, 0}, {5, 0, 1}});
  CHECK(peel_min_degree(c6, 1).graph.edge_count() == 6);

  auto k44 = gen_cayley_bk(4, {0, 1, 2, 3});
  CHECK(peel_min_degree(k44, 3).graph.edge_count() == 16);
}

TEST_CASE("peel_min_degree is idempotent with min degree above threshold") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = gen_random_proper(12, 20, seed);
    auto once = peel_min_degree(g, 2);
    if (once.graph.vertex_count() > 0) CHECK(once.graph.min_degree() > 2);
    auto twice = peel_min_degree(once.graph, 2);
    CHECK(twice.graph.vertex_count() == once.graph.vertex_count());
    CHECK(twice.graph.edge_count() == once.graph.edge_count());
  }
}

TEST_CASE("verify_certificate") {
  auto tri = make(3, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  RainbowCycleCertificate good{{0, 1, 2}, {0, 1, 2}};
  CHECK(bool(verify_certificate(tri, good)));

  auto c4 = c4_alternating();
  RainbowCycleCertificate repeated{{0, 1, 2, 3}, {0, 1, 0, 1}};
  auto r = verify_certificate(c4, repeated);
  CHECK(!r);
  CHECK(r.reason == CertFailure::repeated_color);

  RainbowCycleCertificate nonedge{{0, 2, 1}, {0, 1, 2}};
  CHECK(verify_certificate(c4, nonedge).reason == CertFailure::missing_edge);

  RainbowCycleCertificate short_cyc{{0, 1}, {0, 0}};
  CHECK(verify_certificate(tri, short_cyc).reason == CertFailure::too_short);
}

TEST_CASE("verified certificates have distinct vertices and colors (naive recount)") {
  auto tri = make(3, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  RainbowCycleCertificate c{{0, 1, 2}, {0, 1, 2}};
  REQUIRE(bool(verify_certificate(tri, c)));
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
      CHECK(c.vertices[i] != c.vertices[j]);
      CHECK(c.colors[i] != c.colors[j]);
    }
}

TEST_CASE("edge list round trip") {
  auto g = gen_cayley_bk(5, {0, 1, 2});
  std::stringstream ss;
  write_edge_list(ss, g);
  auto back = read_edge_list(ss);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge list rejects malformed input") {
  std::stringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), Error);
  std::stringstream truncated("3 2\n0 1 0\n");
  CHECK_THROWS_AS(read_edge_list(truncated), Error);
}

TEST_CASE("ColorSet narrow and wide representations agree") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    ColorSet narrow(60), wide(200);
    for (int op = 0; op < 100; ++op) {
      ColorId c = static_cast<ColorId>(rng() % 60);
      if (rng() & 1) {
        narrow.insert(c);
        wide.insert(c);
      } else {
        narrow.erase(c);
        wide.erase(c);
      }
      CHECK(narrow.size() == wide.size());
    }
    for (ColorId c = 0; c < 60; ++c) CHECK(narrow.contains(c) == wide.contains(c));
    CHECK(narrow.to_vector() == wide.to_vector());
  }
}

TEST_CASE("ColorSet disjointness across representations") {
  ColorSet a(50), b(300);
  a.insert(3);
  b.insert(70);
  CHECK(a.disjoint_with(b));
  b.insert(3);
  CHECK(!a.disjoint_with(b));
}
