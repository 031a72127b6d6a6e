#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "maglab/generators.hpp"

using namespace maglab;

namespace {

bool connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbours(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(gen::complete_graph(2).edge_count() == 1);
  CHECK(gen::complete_graph(6).edge_count() == 15);
  const auto k10 = gen::complete_graph(10);
  CHECK(k10.edge_count() == 45);
  for (VertexId v = 0; v < 10; ++v) CHECK(k10.degree(v) == 9);
  CHECK_THROWS_AS(gen::complete_graph(0), std::invalid_argument);
}

TEST_CASE("paths and cycles") {
  CHECK(gen::path(3).edge_count() == 2);
  CHECK(gen::path(2) == gen::complete_graph(2));
  const auto c5 = gen::cycle(5, true);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.face_count() == 1);
  CHECK(c5.face_edges(0).size() == 5);
  CHECK(gen::cycle(5, false).face_count() == 0);
  CHECK_THROWS_AS(gen::cycle(2, false), std::invalid_argument);
}

TEST_CASE("wheels") {
  const auto w3 = gen::wheel(3, false);
  CHECK(w3.vertex_count() == 4);
  CHECK(w3.edge_count() == 6);
  CHECK(degree_sequence(w3) == degree_sequence(gen::complete_graph(4)));
  const auto w5 = gen::wheel(5, false);
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.edge_count() == 10);
  const auto w4 = gen::wheel(4, true);
  CHECK(w4.face_count() == 4);
  for (FaceId f = 0; f < 4; ++f) CHECK(w4.face_vertices(f).size() == 3);
}

TEST_CASE("generalized Petersen graphs") {
  const auto p = gen::generalized_petersen(5, 2);
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (VertexId v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  const auto prism = gen::generalized_petersen(3, 1);
  CHECK(prism.vertex_count() == 6);
  CHECK(prism.edge_count() == 9);
  CHECK_THROWS_AS(gen::generalized_petersen(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen::generalized_petersen(5, 0), std::invalid_argument);
}

TEST_CASE("Petersen graph has girth 5") {
  const auto p = gen::generalized_petersen(5, 2);
  // No triangles and no 4-cycles: any two vertices share at most one neighbour,
  // and adjacent vertices share none.
  for (VertexId a = 0; a < 10; ++a)
    for (VertexId b = a + 1; b < 10; ++b) {
      std::set<VertexId> na(p.neighbours(a).begin(), p.neighbours(a).end());
      std::size_t common = 0;
      for (auto w : p.neighbours(b)) common += na.count(w);
      CHECK(common <= (p.find_edge(a, b) >= 0 ? 0u : 1u));
    }
}

TEST_CASE("cartesian products and powers") {
  const auto g = gen::p2_p3_product(1, 1);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 7);
  const auto flagship = gen::p2_p3_product(3, 1);
  CHECK(flagship.vertex_count() == 24);
  CHECK(flagship.edge_count() == 52);

  const auto c4 = gen::cartesian_product(gen::complete_graph(2), gen::complete_graph(2));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(degree_sequence(c4) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(connected(c4));

  CHECK(gen::power(gen::path(3), 1) == gen::path(3));
  const auto q3 = gen::power(gen::path(2), 3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  const auto p3sq = gen::power(gen::path(3), 2);
  CHECK(p3sq.vertex_count() == 9);
  CHECK(p3sq.edge_count() == 12);
  CHECK_THROWS_AS(gen::power(gen::path(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(gen::cartesian_product(gen::cycle(3, true), gen::path(2)),
                  std::invalid_argument);
}

TEST_CASE("random labelled trees") {
  CHECK(gen::random_labelled_tree(2, 7) == gen::complete_graph(2));
  const auto t3 = gen::random_labelled_tree(3, 11);
  CHECK(degree_sequence(t3) == std::vector<std::size_t>{1, 1, 2});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = gen::random_labelled_tree(9, seed);
    CHECK(t.edge_count() == 8);
    CHECK(connected(t));
  }
  CHECK(gen::random_labelled_tree(8, 5) == gen::random_labelled_tree(8, 5));
  CHECK_THROWS_AS(gen::random_labelled_tree(1, 0), std::invalid_argument);
}

TEST_CASE("labelled trees on 4 vertices are uniform over the 16 Cayley trees") {
  std::map<std::vector<std::pair<VertexId, VertexId>>, int> seen;
  const int samples = 16000;
  for (int s = 0; s < samples; ++s) {
    auto e = gen::random_labelled_tree(4, static_cast<std::uint64_t>(s)).edges();
    std::sort(e.begin(), e.end());
    ++seen[e];
  }
  CHECK(seen.size() == 16);
  double chi = 0;
  for (const auto& [k, c] : seen) chi += (c - 1000.0) * (c - 1000.0) / 1000.0;
  // 15 degrees of freedom; 37.7 is the 0.999 quantile.
  CHECK(chi < 37.7);
}
