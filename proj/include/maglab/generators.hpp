#pragma once

#include <cstdint>

#include "maglab/graph.hpp"

// Graph families used by the experiments. All generators throw
// std::invalid_argument on parameters outside their documented range.
namespace maglab::gen {

Graph complete_graph(std::size_t n);

Graph path(std::size_t n);

/// Cycle 0-1-...-(n-1)-0. With `with_face` the bounded face is attached as
/// the walk 0,1,...,n-1,0.
Graph cycle(std::size_t n, bool with_face = false);

/// Rim vertices 0..n-1, hub n. Rim edges come first, then spokes. With
/// `with_faces` the n triangles hub, i, i+1 are attached.
Graph wheel(std::size_t n, bool with_faces = false);

/// Generalized Petersen graph P(n, k): outer cycle 0..n-1, inner vertices
/// n..2n-1 joined to n + (i + k) mod n, spokes i -- n+i.
Graph generalized_petersen(std::size_t n, std::size_t k);

/// Vertex (a, b) gets id a * |V2| + b. Inputs must be face-free.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// r-fold Cartesian power, left-associated: ((g x g) x g) ...
Graph power(const Graph& g, std::size_t r);

/// P2^r x P3^s as power(P2, r) x power(P3, s). r or s may be zero but not
/// both.
Graph p2_p3_product(std::size_t r, std::size_t s);

/// Uniform random labelled tree on n vertices, decoded from a random Pruefer
/// sequence.
Graph random_labelled_tree(std::size_t n, std::uint64_t seed);

}  // namespace maglab::gen
