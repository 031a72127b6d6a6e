#include "maglab/objectives.hpp"

#include <algorithm>

#include "maglab/kernels.hpp"

namespace maglab {

namespace {

void require_nonempty(std::span<const Weight> w) {
  if (w.empty()) throw ObjectiveError("objective over an empty target set");
}

Weight ceil_div(Weight num, Weight den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

Score square(Weight x) {
  const auto u = static_cast<std::uint64_t>(x);
  return u * u;
}

constexpr Weight kFlatCountLimit = Weight{1} << 22;

}  // namespace

Objective objective_for(const TargetKind& tk) {
  switch (tk.kind) {
    case LabellingKind::magic: return {ObjectiveFamily::magic_f, tk.target};
    case LabellingKind::antimagic: return {ObjectiveFamily::antimagic_g, tk.target};
    case LabellingKind::ad_antimagic: return {ObjectiveFamily::ad_h, tk.target, tk.a, tk.d};
  }
  return {};
}

bool consistent(const Objective& obj, const TargetKind& tk) {
  const auto expected = objective_for(tk);
  if (obj.family != expected.family || obj.target != expected.target) return false;
  return obj.family != ObjectiveFamily::ad_h || (obj.a == tk.a && obj.d == tk.d);
}

Score eval_f(std::span<const Weight> weights) {
  require_nonempty(weights);
  const auto m = static_cast<Weight>(weights.size());
  const Weight mean = ceil_div(kernels::sum(weights), m);
  return kernels::sum_sq_dev(weights, mean);
}

Score eval_g(std::span<const Weight> weights) {
  require_nonempty(weights);
  std::vector<Weight> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  return kernels::count_adjacent_equal(sorted);
}

Score eval_h(std::span<const Weight> weights, Weight a, Weight d) {
  require_nonempty(weights);
  std::vector<Weight> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  return square(sorted.front() - a) + kernels::sum_sq_gap_dev(sorted, d);
}

Score eval(std::span<const Weight> weights, const Objective& obj) {
  switch (obj.family) {
    case ObjectiveFamily::magic_f: return eval_f(weights);
    case ObjectiveFamily::antimagic_g: return eval_g(weights);
    case ObjectiveFamily::ad_h: return eval_h(weights, obj.a, obj.d);
  }
  return 0;
}

Score eval(const Graph& g, const Labelling& l, const Objective& obj) {
  return eval(weights_of(g, l, obj.target), obj);
}

IncrementalEvaluator::IncrementalEvaluator(const Graph& g, const Labelling& l,
                                           const Objective& obj)
    : obj_(obj), structure_(WeightStructure::build(g, l.selector(), obj.target)) {
  if (!l.fits(g)) throw LabellingError("labelling does not match graph shape");
  if (structure_.target_count() == 0) throw ObjectiveError("objective over an empty target set");
  if (obj_.family == ObjectiveFamily::antimagic_g) {
    std::size_t widest = 0;
    for (std::size_t t = 0; t < structure_.target_count(); ++t)
      widest = std::max(widest, structure_.contributors[t].size());
    const Weight bound = static_cast<Weight>(widest) * static_cast<Weight>(l.n());
    use_flat_ = bound < kFlatCountLimit;
    if (use_flat_) flat_counts_.assign(static_cast<std::size_t>(bound) + 1, 0);
  }
  pending_.assign(structure_.target_count(), 0);
  rebuild(l);
}

void IncrementalEvaluator::rebuild(const Labelling& l) {
  const auto m = structure_.target_count();
  weights_.assign(m, 0);
  for (std::uint32_t t = 0; t < m; ++t)
    for (auto u : structure_.contributors[t]) weights_[t] += static_cast<Weight>(l.at(u));
  generation_ = l.generation();

  switch (obj_.family) {
    case ObjectiveFamily::magic_f:
      sum_ = 0;
      sum_sq_ = 0;
      for (auto w : weights_) {
        sum_ += w;
        sum_sq_ += static_cast<__int128>(w) * w;
      }
      break;
    case ObjectiveFamily::antimagic_g:
      std::fill(flat_counts_.begin(), flat_counts_.end(), 0);
      map_counts_.clear();
      duplicates_ = 0;
      for (auto w : weights_) count_add(w);
      break;
    case ObjectiveFamily::ad_h:
      sorted_ = weights_;
      std::sort(sorted_.begin(), sorted_.end());
      break;
  }
}

Score IncrementalEvaluator::value() const {
  switch (obj_.family) {
    case ObjectiveFamily::magic_f: {
      const auto m = static_cast<__int128>(weights_.size());
      const __int128 c = ceil_div(sum_, static_cast<Weight>(weights_.size()));
      const __int128 f = sum_sq_ - 2 * c * sum_ + m * c * c;
      return static_cast<Score>(f);
    }
    case ObjectiveFamily::antimagic_g: return duplicates_;
    case ObjectiveFamily::ad_h:
      return square(sorted_.front() - obj_.a) + kernels::sum_sq_gap_dev(sorted_, obj_.d);
  }
  return 0;
}

void IncrementalEvaluator::count_add(Weight w) {
  std::uint32_t* c;
  if (use_flat_) {
    c = &flat_counts_[static_cast<std::size_t>(w)];
  } else {
    c = &map_counts_[w];
  }
  if (*c > 0) ++duplicates_;
  ++*c;
}

void IncrementalEvaluator::count_remove(Weight w) {
  if (use_flat_) {
    auto& c = flat_counts_[static_cast<std::size_t>(w)];
    if (--c > 0) --duplicates_;
    return;
  }
  auto it = map_counts_.find(w);
  if (--it->second > 0) {
    --duplicates_;
  } else {
    map_counts_.erase(it);
  }
}

void IncrementalEvaluator::change_weight(std::uint32_t t, Weight delta) {
  const Weight old_w = weights_[t];
  const Weight new_w = old_w + delta;
  weights_[t] = new_w;
  switch (obj_.family) {
    case ObjectiveFamily::magic_f:
      sum_ += delta;
      sum_sq_ += static_cast<__int128>(new_w) * new_w - static_cast<__int128>(old_w) * old_w;
      break;
    case ObjectiveFamily::antimagic_g:
      count_remove(old_w);
      count_add(new_w);
      break;
    case ObjectiveFamily::ad_h: {
      // Move the one occurrence of old_w to new_w's slot, shifting the span between.
      auto first = sorted_.begin();
      auto from = std::lower_bound(first, sorted_.end(), old_w);
      if (new_w > old_w) {
        auto to = std::upper_bound(from, sorted_.end(), new_w);
        std::rotate(from, from + 1, to);
        *(to - 1) = new_w;
      } else {
        auto to = std::upper_bound(first, from, new_w);
        std::rotate(to, from, from + 1);
        *to = new_w;
      }
      break;
    }
  }
}

Score IncrementalEvaluator::swap(Labelling& l, std::size_t r, std::size_t s) {
  if (l.generation() != generation_)
    throw StaleCacheError("labelling changed outside the incremental evaluator");
  if (r == s) return value();
  const Weight delta = static_cast<Weight>(l.at(s)) - static_cast<Weight>(l.at(r));
  l.swap_labels(r, s);
  generation_ = l.generation();
  if (delta == 0) return value();

  touched_.clear();
  for (auto t : structure_.affects[r]) {
    if (pending_[t] == 0) touched_.push_back(t);
    pending_[t] += delta;
  }
  for (auto t : structure_.affects[s]) {
    if (pending_[t] == 0) touched_.push_back(t);
    pending_[t] -= delta;
  }
  for (auto t : touched_) {
    if (pending_[t] != 0) change_weight(t, pending_[t]);
    pending_[t] = 0;
  }
  return value();
}

Score eval_after_swap(Labelling& l, std::size_t r, std::size_t s, IncrementalEvaluator& state) {
  return state.swap(l, r, s);
}

}  // namespace maglab
