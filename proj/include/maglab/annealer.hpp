#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"
#include "maglab/objectives.hpp"
#include "maglab/rng.hpp"

namespace maglab {

struct AnnealProgress {
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
  Score value = 0;
  Score best = 0;
};

struct AnnealParams {
  /// Misses tolerated before a worse proposal may be accepted. Default
  /// n(n-1)/2 with n = |U|.
  std::optional<std::uint64_t> p;
  /// Probability of accepting a worse proposal once the miss counter exceeds
  /// p. Default 2/p.
  std::optional<double> q;
  /// Iteration cap; 0 runs until solved, which may never happen.
  std::uint64_t max_iters = 0;
  std::uint64_t seed = 0;
  /// Invoke `progress` every this many iterations (0 disables).
  std::uint64_t report_every = 0;
  std::function<void(const AnnealProgress&)> progress;
  /// Recompute the objective from scratch after every step and throw
  /// std::logic_error on disagreement with the incremental value.
  bool shadow_check = false;
};

/// (p, q) after applying the defaults for a universe of size n.
std::pair<std::uint64_t, double> resolve_pq(const AnnealParams& params, std::size_t n);

struct AnnealOutcome {
  Labelling labelling;  ///< best labelling seen
  Score value = 0;      ///< objective of `labelling`
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;        ///< all accepted swaps
  std::uint64_t worse_accepted = 0;  ///< accepted through the (p, q) rule
  bool solved = false;
  bool no_legal_swap = false;  ///< |U| admits no swap, so the search cannot move
  std::uint64_t seed = 0;
  std::string_view rng = Rng::kRngId;
};

class AnnealError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Draws two distinct members of U (global indices), uniformly over the
/// unordered pairs that are legal moves. In super mode both come from the
/// vertex block or both from the non-vertex block.
std::pair<std::size_t, std::size_t> propose_swap(const Labelling& l, bool super, Rng& rng);

/// Whether propose_swap has at least one legal pair.
bool has_legal_swap(const Labelling& l, bool super);

AnnealOutcome anneal(const Graph& g, DomainSelector sel, const TargetKind& tk,
                     const Objective& obj, const AnnealParams& params);

struct RunStats {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  std::uint64_t worse_accepted = 0;
  Score value = 0;
  bool solved = false;
  double wall_ms = 0;
};

struct MultiStartResult {
  AnnealOutcome best;  ///< first solved run in seed order, else lowest value
  std::vector<RunStats> runs;
  double mean_iterations() const;
  std::size_t solved_count() const;
};

/// `runs` independent anneals with seeds params.seed + 0 .. runs-1, executed
/// on up to `threads` threads. The result does not depend on `threads`.
MultiStartResult multi_start(const Graph& g, DomainSelector sel, const TargetKind& tk,
                             const Objective& obj, const AnnealParams& params, std::size_t runs,
                             std::size_t threads = 1);

}  // namespace maglab
