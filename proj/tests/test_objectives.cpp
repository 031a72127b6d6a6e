#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "maglab/generators.hpp"
#include "maglab/objectives.hpp"
#include "support.hpp"

using namespace maglab;

namespace {

const DomainSelector kTotal{true, true, false};
const DomainSelector kEdges{false, true, false};

std::vector<Label> labels_of(const Labelling& l) { return {l.labels().begin(), l.labels().end()}; }

}  // namespace

TEST_CASE("f on hand-computed weight vectors") {
  CHECK(eval_f(std::vector<Weight>{5, 5, 5}) == 0);
  CHECK(eval_f(std::vector<Weight>{4, 5, 6}) == 2);
  CHECK(eval_f(std::vector<Weight>{4, 5}) == 1);
  CHECK_THROWS_AS(eval_f(std::vector<Weight>{}), ObjectiveError);
}

TEST_CASE("g on hand-computed weight vectors") {
  CHECK(eval_g(std::vector<Weight>{3, 7, 7, 9}) == 1);
  CHECK(eval_g(std::vector<Weight>{4, 4, 4}) == 2);
  CHECK(eval_g(std::vector<Weight>{1, 2, 3, 4}) == 0);
  CHECK(eval_g(std::vector<Weight>{9, 1, 9, 1}) == 2);
}

TEST_CASE("h on hand-computed weight vectors") {
  CHECK(eval_h(std::vector<Weight>{4, 6, 8}, 4, 2) == 0);
  CHECK(eval_h(std::vector<Weight>{4, 7, 8}, 4, 2) == 2);
  CHECK(eval_h(std::vector<Weight>{5, 7, 9}, 4, 2) == 1);
  CHECK(eval_h(std::vector<Weight>{8, 4, 6}, 4, 2) == 0);
}

TEST_CASE("objectives on labelled graphs") {
  const auto k2 = gen::complete_graph(2);
  std::vector<Label> perm{1, 2, 3};
  do {
    const auto l = Labelling::from_labels(k2, kTotal, perm);
    CHECK(eval(k2, l, {ObjectiveFamily::magic_f, ElementClass::edge}) == 0);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto c3 = gen::cycle(3, false);
  const auto l = Labelling::from_labels(c3, kEdges, {0, 0, 0, 1, 2, 3});
  CHECK(eval(c3, l, {ObjectiveFamily::antimagic_g, ElementClass::vertex}) == 0);
  CHECK(eval(c3, l, {ObjectiveFamily::ad_h, ElementClass::vertex, 3, 1}) == 0);
  CHECK(eval(c3, l, {ObjectiveFamily::magic_f, ElementClass::vertex}) == 2);
}

TEST_CASE("objective_for and consistency") {
  CHECK(objective_for({ElementClass::edge, LabellingKind::magic}).family ==
        ObjectiveFamily::magic_f);
  const auto h = objective_for({ElementClass::vertex, LabellingKind::ad_antimagic, 3, 2});
  CHECK(h.family == ObjectiveFamily::ad_h);
  CHECK(h.a == 3);
  CHECK(h.d == 2);
  CHECK(consistent(h, {ElementClass::vertex, LabellingKind::ad_antimagic, 3, 2}));
  CHECK_FALSE(consistent(h, {ElementClass::vertex, LabellingKind::ad_antimagic, 3, 1}));
  CHECK_FALSE(consistent(h, {ElementClass::edge, LabellingKind::ad_antimagic, 3, 2}));
}

TEST_CASE("library objectives match the formulas on random weight vectors") {
  Rng rng(8);
  for (int t = 0; t < 3000; ++t) {
    std::vector<Weight> w(1 + rng.below(40));
    for (auto& x : w) x = static_cast<Weight>(rng.below(60)) + 1;
    const Weight a = static_cast<Weight>(rng.below(10));
    const Weight d = static_cast<Weight>(rng.below(4));
    CHECK(eval_f(w) == ref::f(w));
    CHECK(eval_g(w) == ref::g(w));
    CHECK(eval_h(w, a, d) == ref::h(w, a, d));
  }
}

TEST_CASE("zero objective exactly when the verifier accepts") {
  // Exhaustive over every bijection of a few tiny instances.
  struct Case {
    Graph g;
    DomainSelector sel;
    ElementClass target;
  };
  std::vector<Case> cases{{gen::cycle(3, false), kTotal, ElementClass::edge},
                          {gen::cycle(3, false), kTotal, ElementClass::vertex},
                          {gen::path(4), kEdges, ElementClass::vertex},
                          {gen::complete_graph(4), kEdges, ElementClass::vertex},
                          {gen::cycle(3, true), {false, true, true}, ElementClass::vertex}};
  for (const auto& c : cases) {
    Labelling shape(c.g, c.sel);
    const auto u = shape.universe();
    std::vector<Label> perm(u.size());
    std::iota(perm.begin(), perm.end(), 1u);
    do {
      std::vector<Label> labels(c.g.element_count(), 0);
      for (std::size_t i = 0; i < u.size(); ++i) labels[u[i]] = perm[i];
      const auto l = Labelling::from_labels(c.g, c.sel, labels);
      const auto w = ref::weights(c.g, labels, c.target);
      CHECK((eval(c.g, l, {ObjectiveFamily::magic_f, c.target}) == 0) == ref::all_equal(w));
      CHECK((eval(c.g, l, {ObjectiveFamily::antimagic_g, c.target}) == 0) ==
            ref::all_distinct(w));
      for (Weight a = 1; a < 12; ++a)
        for (Weight d = 0; d < 3; ++d)
          CHECK((eval(c.g, l, {ObjectiveFamily::ad_h, c.target, a, d}) == 0) ==
                ref::is_progression(w, a, d));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("incremental evaluation equals full evaluation after every swap") {
  Rng rng(21);
  const std::vector<std::pair<Graph, DomainSelector>> instances{
      {gen::generalized_petersen(5, 2), kTotal},
      {gen::wheel(7, true), {true, true, true}},
      {gen::p2_p3_product(2, 1), kEdges},
      {gen::complete_graph(7), kEdges}};
  for (const auto& [g, sel] : instances) {
    for (auto target : {ElementClass::vertex, ElementClass::edge, ElementClass::face}) {
      if (g.count(target) == 0) continue;
      for (auto fam : {ObjectiveFamily::magic_f, ObjectiveFamily::antimagic_g,
                       ObjectiveFamily::ad_h}) {
        const Objective obj{fam, target, 5, 2};
        auto l = random_labelling(g, sel, false, rng);
        IncrementalEvaluator inc(g, l, obj);
        CHECK(inc.value() == eval(g, l, obj));
        const auto u = l.universe();
        for (int i = 0; i < 800; ++i) {
          const auto r = u[rng.below(u.size())];
          auto s = u[rng.below(u.size())];
          const auto value = eval_after_swap(l, r, s, inc);
          REQUIRE(value == eval(g, l, obj));
          const auto w = ref::weights(g, labels_of(l), target);
          REQUIRE(std::vector<Weight>(inc.weights().begin(), inc.weights().end()) == w);
        }
      }
    }
  }
}

TEST_CASE("swapping back restores the previous value") {
  const auto g = gen::wheel(5, true);
  const DomainSelector sel{true, true, true};
  auto l = random_labelling(g, sel, false, 3);
  IncrementalEvaluator inc(g, l, {ObjectiveFamily::ad_h, ElementClass::face, 20, 3});
  const auto before = inc.value();
  const auto u = l.universe();
  inc.swap(l, u[0], u[5]);
  CHECK(inc.swap(l, u[0], u[5]) == before);
}

TEST_CASE("edits behind the evaluator's back are detected") {
  const auto g = gen::cycle(5, false);
  auto l = random_labelling(g, kEdges, false, 1);
  IncrementalEvaluator inc(g, l, {ObjectiveFamily::magic_f, ElementClass::vertex});
  const auto u = l.universe();
  l.swap_labels(u[0], u[1]);
  CHECK_THROWS_AS(inc.swap(l, u[2], u[3]), StaleCacheError);
  inc.rebuild(l);
  CHECK_NOTHROW(inc.swap(l, u[2], u[3]));
  CHECK(inc.value() == eval(g, l, inc.objective()));
}
