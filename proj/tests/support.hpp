#pragma once

// Reference computations written directly from the definitions, without the
// library's WeightStructure or objective code, for cross-checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"

namespace ref {

using maglab::ElementClass;
using maglab::Graph;
using maglab::Weight;

struct Instance {
  const Graph* g;
  maglab::DomainSelector sel;
};

// Label lookup by (class, id) from a global-order vector.
inline Weight lab(const Graph& g, const std::vector<std::uint32_t>& labels, ElementClass c,
                  std::size_t id) {
  std::size_t base = 0;
  if (c != ElementClass::vertex) base += g.vertex_count();
  if (c == ElementClass::face) base += g.edge_count();
  return labels[base + id];
}

inline std::vector<Weight> weights(const Graph& g, const std::vector<std::uint32_t>& labels,
                                   ElementClass target) {
  std::vector<Weight> w;
  auto V = ElementClass::vertex, E = ElementClass::edge, F = ElementClass::face;
  if (target == V) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Weight s = lab(g, labels, V, v);
      // incident edges: scan the edge list
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges()[e];
        if (a == v || b == v) s += lab(g, labels, E, e);
      }
      for (std::size_t f = 0; f < g.face_count(); ++f) {
        const auto& walk = g.faces()[f];
        if (std::find(walk.begin(), walk.end(), v) != walk.end()) s += lab(g, labels, F, f);
      }
      w.push_back(s);
    }
  } else if (target == E) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edges()[e];
      Weight s = lab(g, labels, E, e) + lab(g, labels, V, a) + lab(g, labels, V, b);
      for (std::size_t f = 0; f < g.face_count(); ++f) {
        const auto& walk = g.faces()[f];
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
          auto x = std::min(walk[i], walk[i + 1]), y = std::max(walk[i], walk[i + 1]);
          if (x == a && y == b) {
            s += lab(g, labels, F, f);
            break;
          }
        }
      }
      w.push_back(s);
    }
  } else {
    for (std::size_t f = 0; f < g.face_count(); ++f) {
      const auto& walk = g.faces()[f];
      Weight s = lab(g, labels, F, f);
      std::set<std::uint32_t> vs(walk.begin(), walk.end());
      for (auto v : vs) s += lab(g, labels, V, v);
      std::set<std::pair<std::uint32_t, std::uint32_t>> es;
      for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        es.insert({std::min(walk[i], walk[i + 1]), std::max(walk[i], walk[i + 1])});
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (es.count(g.edges()[e])) s += lab(g, labels, E, e);
      w.push_back(s);
    }
  }
  return w;
}

inline std::vector<std::size_t> universe(const Graph& g, maglab::DomainSelector sel) {
  std::vector<std::size_t> u;
  std::size_t base = 0;
  for (auto c : {ElementClass::vertex, ElementClass::edge, ElementClass::face}) {
    const auto cnt = g.count(c);
    if (sel.includes(c))
      for (std::size_t i = 0; i < cnt; ++i) u.push_back(base + i);
    base += cnt;
  }
  return u;
}

inline bool all_equal(const std::vector<Weight>& w) {
  return std::all_of(w.begin(), w.end(), [&](Weight x) { return x == w.front(); });
}

inline bool all_distinct(std::vector<Weight> w) {
  std::sort(w.begin(), w.end());
  return std::adjacent_find(w.begin(), w.end()) == w.end();
}

inline bool is_progression(std::vector<Weight> w, Weight a, Weight d) {
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != a + static_cast<Weight>(i) * d) return false;
  return true;
}

// Magic census over every bijection, walked with std::next_permutation.
// Keys are magic constants. With `super`, vertex labels must be 1..|V|.
inline std::map<Weight, std::uint64_t> magic_census(const Graph& g, maglab::DomainSelector sel,
                                                    ElementClass target, bool super = false) {
  const auto u = universe(g, sel);
  std::vector<std::uint32_t> perm(u.size());
  std::iota(perm.begin(), perm.end(), 1u);
  std::map<Weight, std::uint64_t> census;
  do {
    std::vector<std::uint32_t> labels(g.element_count(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) labels[u[i]] = perm[i];
    if (super) {
      bool ok = true;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) ok = ok && labels[v] <= g.vertex_count();
      if (!ok) continue;
    }
    const auto w = weights(g, labels, target);
    if (all_equal(w)) ++census[w.front()];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

inline std::uint64_t antimagic_count(const Graph& g, maglab::DomainSelector sel,
                                     ElementClass target) {
  const auto u = universe(g, sel);
  std::vector<std::uint32_t> perm(u.size());
  std::iota(perm.begin(), perm.end(), 1u);
  std::uint64_t count = 0;
  do {
    std::vector<std::uint32_t> labels(g.element_count(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) labels[u[i]] = perm[i];
    if (all_distinct(weights(g, labels, target))) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline std::uint64_t ad_count(const Graph& g, maglab::DomainSelector sel, ElementClass target,
                              Weight a, Weight d) {
  const auto u = universe(g, sel);
  std::vector<std::uint32_t> perm(u.size());
  std::iota(perm.begin(), perm.end(), 1u);
  std::uint64_t count = 0;
  do {
    std::vector<std::uint32_t> labels(g.element_count(), 0);
    for (std::size_t i = 0; i < u.size(); ++i) labels[u[i]] = perm[i];
    if (is_progression(weights(g, labels, target), a, d)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Objectives straight from their formulas.
inline std::uint64_t f(const std::vector<Weight>& w) {
  Weight s = 0;
  for (auto x : w) s += x;
  const auto m = static_cast<Weight>(w.size());
  const Weight c = s >= 0 ? (s + m - 1) / m : -((-s) / m);
  std::uint64_t out = 0;
  for (auto x : w) out += static_cast<std::uint64_t>((x - c) * (x - c));
  return out;
}

inline std::uint64_t g(std::vector<Weight> w) {
  std::sort(w.begin(), w.end());
  std::uint64_t out = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) out += w[i] == w[i + 1];
  return out;
}

inline std::uint64_t h(std::vector<Weight> w, Weight a, Weight d) {
  std::sort(w.begin(), w.end());
  std::uint64_t out = static_cast<std::uint64_t>((w[0] - a) * (w[0] - a));
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Weight t = w[i + 1] - w[i] - d;
    out += static_cast<std::uint64_t>(t * t);
  }
  return out;
}

}  // namespace ref
