#include "maglab/generators.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include "maglab/rng.hpp"

namespace maglab::gen {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

VertexId vid(std::size_t i) { return static_cast<VertexId>(i); }

}  // namespace

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete_graph needs n >= 1");
  EdgeList edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(vid(i), vid(j));
  return Graph::build(n, std::move(edges));
}

Graph path(std::size_t n) {
  require(n >= 2, "path needs n >= 2");
  EdgeList edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(vid(i), vid(i + 1));
  return Graph::build(n, std::move(edges));
}

Graph cycle(std::size_t n, bool with_face) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(i), vid((i + 1) % n));
  std::vector<std::vector<VertexId>> faces;
  if (with_face) {
    std::vector<VertexId> walk;
    for (std::size_t i = 0; i <= n; ++i) walk.push_back(vid(i % n));
    faces.push_back(std::move(walk));
  }
  return Graph::build(n, std::move(edges), std::move(faces));
}

Graph wheel(std::size_t n, bool with_faces) {
  require(n >= 3, "wheel needs a rim of at least 3 vertices");
  const auto hub = vid(n);
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(i), vid((i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(i), hub);
  std::vector<std::vector<VertexId>> faces;
  if (with_faces)
    for (std::size_t i = 0; i < n; ++i) faces.push_back({hub, vid(i), vid((i + 1) % n), hub});
  return Graph::build(n + 1, std::move(edges), std::move(faces));
}

Graph generalized_petersen(std::size_t n, std::size_t k) {
  require(n >= 3, "generalized_petersen needs n >= 3");
  require(k >= 1 && 2 * k < n, "generalized_petersen needs 1 <= k < n/2");
  EdgeList edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(i), vid((i + 1) % n));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(n + i), vid(n + (i + k) % n));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(vid(i), vid(n + i));
  return Graph::build(2 * n, std::move(edges));
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  require(g1.face_count() == 0 && g2.face_count() == 0,
          "cartesian_product is only defined for face-free graphs");
  const std::size_t n2 = g2.vertex_count();
  auto id = [n2](std::size_t a, std::size_t b) { return vid(a * n2 + b); };
  EdgeList edges;
  edges.reserve(g1.vertex_count() * g2.edge_count() + n2 * g1.edge_count());
  for (std::size_t a = 0; a < g1.vertex_count(); ++a)
    for (auto [b, c] : g2.edges()) edges.emplace_back(id(a, b), id(a, c));
  for (auto [a, c] : g1.edges())
    for (std::size_t b = 0; b < n2; ++b) edges.emplace_back(id(a, b), id(c, b));
  return Graph::build(g1.vertex_count() * n2, std::move(edges));
}

Graph power(const Graph& g, std::size_t r) {
  require(r >= 1, "power needs r >= 1");
  Graph out = g;
  for (std::size_t i = 1; i < r; ++i) out = cartesian_product(out, g);
  return out;
}

Graph p2_p3_product(std::size_t r, std::size_t s) {
  require(r + s >= 1, "p2_p3_product needs r + s >= 1");
  if (s == 0) return power(path(2), r);
  if (r == 0) return power(path(3), s);
  return cartesian_product(power(path(2), r), power(path(3), s));
}

Graph random_labelled_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 2, "random_labelled_tree needs n >= 2");
  if (n == 2) return Graph::build(2, {{0, 1}});

  Rng rng(seed);
  std::vector<VertexId> code(n - 2);
  for (auto& c : code) c = vid(rng.below(n));

  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(vid(v));

  EdgeList edges;
  for (auto c : code) {
    const auto leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const auto u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph::build(n, std::move(edges));
}

}  // namespace maglab::gen
