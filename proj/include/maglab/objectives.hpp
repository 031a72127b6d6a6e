#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"

namespace maglab {

/// Objective values are exact nonnegative integers.
using Score = std::uint64_t;

enum class ObjectiveFamily { magic_f, antimagic_g, ad_h };

/// One of f_S, g_S, h_S for a target class S.
struct Objective {
  ObjectiveFamily family = ObjectiveFamily::magic_f;
  ElementClass target = ElementClass::vertex;
  Weight a = 0;
  Weight d = 0;
};

class ObjectiveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a labelling was modified behind an IncrementalEvaluator.
class StaleCacheError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The objective whose zero set is exactly the labellings accepted for tk.
Objective objective_for(const TargetKind& tk);
bool consistent(const Objective& obj, const TargetKind& tk);

// Evaluators over a weight vector. All throw ObjectiveError on empty input.

/// Sum of squared deviations from the ceiling of the mean weight.
Score eval_f(std::span<const Weight> weights);
/// Number of sort-adjacent equal weights.
Score eval_g(std::span<const Weight> weights);
/// (w1 - a)^2 + sum over i = 1..|S|-1 of (w(i+1) - w(i) - d)^2 on sorted weights.
Score eval_h(std::span<const Weight> weights, Weight a, Weight d);

Score eval(std::span<const Weight> weights, const Objective& obj);
Score eval(const Graph& g, const Labelling& l, const Objective& obj);

/// Cached objective state for one (graph, labelling, objective) triple.
///
/// swap() exchanges two labels in the labelling and updates only the weights
/// of target elements incident to either of them. The cache follows the
/// labelling's generation counter; any edit made elsewhere makes the next
/// swap() throw StaleCacheError until rebuild() is called.
class IncrementalEvaluator {
 public:
  IncrementalEvaluator(const Graph& g, const Labelling& l, const Objective& obj);

  Score value() const;
  /// Exchanges the labels of global elements r and s in `l` and returns the
  /// objective of the result. Swapping back restores the previous value.
  Score swap(Labelling& l, std::size_t r, std::size_t s);
  /// Resynchronises with `l` from scratch.
  void rebuild(const Labelling& l);

  std::span<const Weight> weights() const { return weights_; }
  const Objective& objective() const { return obj_; }

 private:
  void change_weight(std::uint32_t t, Weight delta);
  void count_add(Weight w);
  void count_remove(Weight w);

  Objective obj_;
  WeightStructure structure_;
  std::uint64_t generation_ = 0;
  std::vector<Weight> weights_;

  // magic_f
  std::int64_t sum_ = 0;
  __int128 sum_sq_ = 0;
  // antimagic_g
  std::vector<std::uint32_t> flat_counts_;
  std::unordered_map<Weight, std::uint32_t> map_counts_;
  bool use_flat_ = false;
  Score duplicates_ = 0;
  // ad_h
  std::vector<Weight> sorted_;

  std::vector<Weight> pending_;
  std::vector<std::uint32_t> touched_;
};

/// One-shot form of IncrementalEvaluator::swap.
Score eval_after_swap(Labelling& l, std::size_t r, std::size_t s, IncrementalEvaluator& state);

}  // namespace maglab
