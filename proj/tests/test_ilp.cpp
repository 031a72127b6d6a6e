#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "maglab/generators.hpp"
#include "maglab/ilp.hpp"
#include "support.hpp"

using namespace maglab;

namespace {

const DomainSelector kTotal{true, true, false};
const TargetKind kEdgeMagic{ElementClass::edge, LabellingKind::magic};

// Smallest objective over every 0/1 point that encodes a bijection, by brute force.
std::int64_t best_over_bijections(const Graph& g, DomainSelector sel, const ilp::IlpModel& m) {
  std::vector<Label> perm(m.n);
  std::iota(perm.begin(), perm.end(), 1u);
  std::int64_t best = -1;
  const Labelling shape(g, sel);
  do {
    std::vector<Label> labels(g.element_count(), 0);
    for (std::size_t i = 0; i < m.n; ++i) labels[shape.universe()[i]] = perm[i];
    const auto l = Labelling::from_labels(g, sel, labels);
    const auto v = ilp::min_objective_at(m, ilp::encode(m, l));
    if (best < 0 || v < best) best = v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("K3 total model has the expected shape") {
  const auto k3 = gen::complete_graph(3);
  const auto m = ilp::build_ilp(k3, kTotal, kEdgeMagic, 12);
  CHECK(m.n == 6);
  CHECK(m.binary_count() == 36);
  CHECK(m.continuous_count() == 3);
  CHECK(m.variables.size() == 39);
  CHECK(m.constraints.size() == 18);
  std::size_t rows = 0, cols = 0, abs = 0;
  for (const auto& c : m.constraints) {
    if (c.name.rfind("row_", 0) == 0) ++rows;
    if (c.name.rfind("col_", 0) == 0) ++cols;
    if (c.name.rfind("abs", 0) == 0) ++abs;
  }
  CHECK(rows == 6);
  CHECK(cols == 6);
  CHECK(abs == 6);
  CHECK(m.variables[m.x_var(0, 0)].name == "x_1_1");
  CHECK(m.variables[m.y_vars[2]].name == "y_3");
}

TEST_CASE("K2 optimum at K = 6 and K = 7") {
  const auto k2 = gen::complete_graph(2);
  const auto m6 = ilp::build_ilp(k2, kTotal, kEdgeMagic, 6);
  CHECK(m6.binary_count() == 9);
  CHECK(m6.continuous_count() == 1);
  CHECK(best_over_bijections(k2, kTotal, m6) == 0);
  const auto m7 = ilp::build_ilp(k2, kTotal, kEdgeMagic, 7);
  CHECK(best_over_bijections(k2, kTotal, m7) == 1);
}

TEST_CASE("model objective at a labelling equals its total deviation from K") {
  Rng rng(31);
  const std::vector<std::pair<Graph, DomainSelector>> instances{
      {gen::complete_graph(3), kTotal},
      {gen::path(4), kTotal},
      {gen::cycle(4, false), kTotal},
      {gen::cycle(3, true), {false, true, true}},
      {gen::complete_graph(4), {false, true, false}}};
  for (const auto& [g, sel] : instances) {
    for (auto target : {ElementClass::vertex, ElementClass::edge, ElementClass::face}) {
      if (g.count(target) == 0) continue;
      const TargetKind tk{target, LabellingKind::magic};
      const auto [lo, hi] = std::pair<Weight, Weight>{1, 30};
      for (int t = 0; t < 40; ++t) {
        const Weight K = lo + static_cast<Weight>(rng.below(static_cast<std::uint64_t>(hi - lo)));
        const auto m = ilp::build_ilp(g, sel, tk, K);
        CHECK(m.variables.size() == m.n * m.n + g.count(target));
        CHECK(m.constraints.size() == 2 * m.n + 2 * g.count(target));
        const auto l = random_labelling(g, sel, false, rng);
        std::int64_t expect = 0;
        for (auto w : ref::weights(g, {l.labels().begin(), l.labels().end()}, target))
          expect += std::llabs(w - K);
        CHECK(ilp::min_objective_at(m, ilp::encode(m, l)) == expect);
      }
    }
  }
}

TEST_CASE("non-assignment points are rejected") {
  const auto k2 = gen::complete_graph(2);
  const auto m = ilp::build_ilp(k2, kTotal, kEdgeMagic, 6);
  std::vector<std::uint8_t> x(9, 0);
  CHECK_THROWS_AS(ilp::min_objective_at(m, x), ilp::IlpError);
  x[m.x_var(0, 0)] = x[m.x_var(1, 0)] = x[m.x_var(2, 2)] = 1;  // label 1 twice
  CHECK_THROWS_AS(ilp::min_objective_at(m, x), ilp::IlpError);
}

TEST_CASE("LP text") {
  const auto k2 = gen::complete_graph(2);
  const auto m = ilp::build_ilp(k2, kTotal, kEdgeMagic, 6);
  const auto text = ilp::to_lp(m);
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("Binaries") != std::string::npos);
  CHECK(text.find("y_1 >= 0") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j)
      CHECK(text.find("x_" + std::to_string(i) + "_" + std::to_string(j)) != std::string::npos);
  CHECK(text == ilp::to_lp(ilp::build_ilp(k2, kTotal, kEdgeMagic, 6)));
  CHECK(text != ilp::to_lp(ilp::build_ilp(k2, kTotal, kEdgeMagic, 7)));

  ilp::IlpModel empty;
  std::ostringstream os;
  CHECK_THROWS_AS(ilp::write_lp(empty, os), ilp::IlpError);
}

TEST_CASE("only magic models are built") {
  const auto k3 = gen::complete_graph(3);
  CHECK_THROWS_AS(
      ilp::build_ilp(k3, kTotal, {ElementClass::edge, LabellingKind::antimagic}, 10),
      ilp::IlpError);
}
