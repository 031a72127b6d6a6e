#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"

namespace maglab {

enum class OracleMode { first, count, enumerate };

/// Exhaustive search request. Meant for small universes (n <= 12).
struct OracleQuery {
  DomainSelector selector;
  TargetKind target;
  OracleMode mode = OracleMode::count;
  std::size_t limit = 0;  ///< labellings kept in enumerate mode
  std::uint64_t budget = 500'000'000;  ///< cap on label assignments tried
  /// Disables weight-based pruning; the search then walks every
  /// (partition-respecting) bijection and classifies complete labellings.
  bool prune = true;
};

enum class OracleStatus { found, exhausted_none, budget_exceeded };

/// Census key: magic constant k as (k, 0); (a, d) for (a,d)-antimagic;
/// for plain antimagic the detected progression, or (0, -1) when the
/// weights are not a progression.
struct CensusKey {
  Weight a = 0;
  Weight d = 0;
  auto operator<=>(const CensusKey&) const = default;
};

struct OracleResult {
  OracleStatus status = OracleStatus::exhausted_none;
  std::uint64_t count = 0;
  std::vector<Labelling> labellings;
  std::map<CensusKey, std::uint64_t> census;
  std::uint64_t nodes = 0;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval of magic constants not excluded by the crude bound: a target
/// with c labelled contributors weighs between 1+..+c and n+..+(n-c+1).
std::pair<Weight, Weight> feasible_magic_interval(const Graph& g, DomainSelector sel,
                                                  ElementClass target);

/// Candidate (a, d) pairs for an (a,d)-antimagic labelling of the target
/// class, d ascending then a ascending. A pair survives when its progression
/// fits the crude per-element weight bounds and its total a|S| + d|S|(|S|-1)/2
/// lies between the smallest and largest possible sum of all target weights
/// (labels paired against entry multiplicities).
std::vector<std::pair<Weight, Weight>> progression_candidates(const Graph& g, DomainSelector sel,
                                                              ElementClass target);

OracleResult oracle_search(const Graph& g, const OracleQuery& q);

/// Full census of the query (mode is ignored). Throws OracleBudgetExceeded.
std::map<CensusKey, std::uint64_t> achievable_values(const Graph& g, const OracleQuery& q);

}  // namespace maglab
