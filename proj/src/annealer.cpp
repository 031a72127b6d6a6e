#include "maglab/annealer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace maglab {

std::pair<std::uint64_t, double> resolve_pq(const AnnealParams& params, std::size_t n) {
  std::uint64_t p = params.p.value_or(static_cast<std::uint64_t>(n) * (n - (n > 0)) / 2);
  if (!params.p && p == 0) p = 1;
  if (p < 1) throw AnnealError("p must be at least 1");
  double q = params.q.value_or(2.0 / static_cast<double>(p));
  // 2/p reaches 1 for p <= 2; halve it to stay inside (0, 1).
  if (!params.q && q >= 1.0) q = 0.5;
  if (!(q > 0.0 && q < 1.0)) throw AnnealError("q must lie strictly between 0 and 1");
  return {p, q};
}

namespace {

std::uint64_t pairs(std::uint64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

bool has_legal_swap(const Labelling& l, bool super) {
  if (!super) return l.n() >= 2;
  return pairs(l.vertex_members()) + pairs(l.n() - l.vertex_members()) > 0;
}

std::pair<std::size_t, std::size_t> propose_swap(const Labelling& l, bool super, Rng& rng) {
  const auto u = l.universe();
  if (u.size() < 2) throw AnnealError("fewer than two labelled elements: no swap exists");
  std::size_t base = 0;
  std::uint64_t m = u.size();
  if (super) {
    const std::uint64_t nv = l.vertex_members();
    const std::uint64_t vertex_pairs = pairs(nv);
    const std::uint64_t other_pairs = pairs(m - nv);
    if (vertex_pairs + other_pairs == 0)
      throw AnnealError("super labelling admits no class-preserving swap");
    if (rng.below(vertex_pairs + other_pairs) < vertex_pairs) {
      m = nv;
    } else {
      base = nv;
      m -= nv;
    }
  }
  const auto r = rng.below(m);
  auto s = rng.below(m - 1);
  if (s >= r) ++s;
  return {u[base + r], u[base + s]};
}

AnnealOutcome anneal(const Graph& g, DomainSelector sel, const TargetKind& tk,
                     const Objective& obj, const AnnealParams& params) {
  validate_target(g, sel, tk);
  if (!consistent(obj, tk)) throw AnnealError("objective does not match the target kind");

  Rng rng(params.seed);
  const bool super = tk.super_labelling;
  Labelling l = random_labelling(g, sel, super, rng);
  const auto [p, q] = resolve_pq(params, l.n());
  IncrementalEvaluator ev(g, l, obj);

  AnnealOutcome out;
  out.seed = params.seed;
  out.no_legal_swap = !has_legal_swap(l, super);

  Score val = ev.value();
  Score best_val = val;
  bool current_is_best = true;
  Labelling snapshot;
  std::uint64_t nb_miss = 0;
  std::uint64_t iter = 0;

  while (val != 0 && !out.no_legal_swap) {
    if (params.max_iters != 0 && iter >= params.max_iters) break;
    ++iter;
    const auto [r, s] = propose_swap(l, super, rng);
    const Score new_val = ev.swap(l, r, s);
    if (new_val < val) {
      nb_miss = 0;
      val = new_val;
      ++out.accepted;
      if (val < best_val) {
        best_val = val;
        current_is_best = true;
      }
    } else if (nb_miss > p && rng.uniform01() <= q) {
      if (current_is_best) {
        snapshot = l;
        snapshot.swap_labels(r, s);
        current_is_best = false;
      }
      nb_miss = 0;
      val = new_val;
      ++out.accepted;
      ++out.worse_accepted;
    } else {
      ++nb_miss;
      ev.swap(l, r, s);
    }

    if (params.shadow_check) {
      if (ev.value() != val || eval(g, l, obj) != val)
        throw std::logic_error("incremental objective diverged from full evaluation at iteration " +
                               std::to_string(iter));
    }
    if (params.report_every != 0 && params.progress && iter % params.report_every == 0)
      params.progress({params.seed, iter, val, std::min(val, best_val)});
  }

  out.iterations = iter;
  if (current_is_best) {
    out.labelling = std::move(l);
    out.value = val;
  } else {
    out.labelling = std::move(snapshot);
    out.value = best_val;
  }
  out.solved = out.value == 0;
  return out;
}

double MultiStartResult::mean_iterations() const {
  if (runs.empty()) return 0;
  double total = 0;
  for (const auto& r : runs) total += static_cast<double>(r.iterations);
  return total / static_cast<double>(runs.size());
}

std::size_t MultiStartResult::solved_count() const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [](const RunStats& r) { return r.solved; }));
}

MultiStartResult multi_start(const Graph& g, DomainSelector sel, const TargetKind& tk,
                             const Objective& obj, const AnnealParams& params, std::size_t runs,
                             std::size_t threads) {
  if (runs < 1) throw AnnealError("multi_start needs at least one run");
  std::vector<AnnealOutcome> outcomes(runs);
  std::vector<RunStats> stats(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < runs; i = next++) try {
      AnnealParams run_params = params;
      run_params.seed = params.seed + i;
      const auto start = std::chrono::steady_clock::now();
      outcomes[i] = anneal(g, sel, tk, obj, run_params);
      const auto stop = std::chrono::steady_clock::now();
      const auto& o = outcomes[i];
      stats[i] = {o.seed,  o.iterations, o.accepted, o.worse_accepted,
                  o.value, o.solved,
                  std::chrono::duration<double, std::milli>(stop - start).count()};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, runs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t pick = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    if (outcomes[i].solved) {
      pick = i;
      break;
    }
    if (outcomes[i].value < outcomes[pick].value) pick = i;
  }
  MultiStartResult result;
  result.best = std::move(outcomes[pick]);
  result.runs = std::move(stats);
  return result;
}

}  // namespace maglab
