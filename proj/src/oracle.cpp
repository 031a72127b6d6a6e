#include "maglab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maglab {

namespace {

Weight min_sum(Weight c) { return c * (c + 1) / 2; }
Weight max_sum(Weight c, Weight n) { return c * n - c * (c - 1) / 2; }

struct BudgetHit {};
struct StopSearch {};

class Search {
 public:
  Search(const Graph& g, const OracleQuery& q, OracleResult& out)
      : g_(g),
        q_(q),
        out_(out),
        ws_(WeightStructure::build(g, q.selector, q.target.target)),
        base_(g, q.selector) {
    n_ = static_cast<Weight>(base_.n());
    const auto u = base_.universe();
    order_.assign(u.begin(), u.end());
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) {
      return ws_.affects[x].size() > ws_.affects[y].size();
    });
    const auto m = ws_.target_count();
    partial_.assign(m, 0);
    remaining_.resize(m);
    for (std::size_t t = 0; t < m; ++t)
      remaining_[t] = static_cast<Weight>(ws_.contributors[t].size());
    used_.assign(base_.n() + 1, false);
    labels_.assign(g.element_count(), 0);
    vertex_limit_ = q.target.super_labelling ? static_cast<Label>(g.vertex_count()) : 0;
    // Completed weights never exceed n * (largest contributor count).
    Weight widest = 0;
    for (auto r : remaining_) widest = std::max(widest, r);
    seen_.assign(static_cast<std::size_t>(widest * n_ + 1), 0);
  }

  void run_magic(Weight k) {
    k_ = k;
    // Targets without labelled contributors weigh 0 from the start.
    for (std::size_t t = 0; t < remaining_.size(); ++t)
      if (remaining_[t] == 0 && k != 0) return;
    dfs(0);
  }

  void run() {
    if (q_.prune) {
      for (std::size_t t = 0; t < remaining_.size(); ++t)
        if (remaining_[t] == 0 && !complete_ok(0, /*commit=*/true)) return;
    }
    dfs(0);
  }

 private:
  bool magic() const { return q_.target.kind == LabellingKind::magic; }

  bool complete_ok(Weight w, bool commit) {
    switch (q_.target.kind) {
      case LabellingKind::magic: return w == k_;
      case LabellingKind::antimagic:
        if (seen_[static_cast<std::size_t>(w)] > 0) return false;
        if (commit) ++seen_[static_cast<std::size_t>(w)];
        return true;
      case LabellingKind::ad_antimagic: {
        const Weight off = w - q_.target.a;
        const Weight d = q_.target.d;
        const auto m = static_cast<Weight>(ws_.target_count());
        if (d == 0) return off == 0;
        if (off < 0 || off % d != 0 || off / d >= m) return false;
        if (seen_[static_cast<std::size_t>(w)] > 0) return false;
        if (commit) ++seen_[static_cast<std::size_t>(w)];
        return true;
      }
    }
    return false;
  }

  void uncommit(Weight w) {
    if (q_.target.kind == LabellingKind::magic) return;
    if (q_.target.kind == LabellingKind::ad_antimagic && q_.target.d == 0) return;
    --seen_[static_cast<std::size_t>(w)];
  }

  // Applies label to element u; returns how many affected targets were
  // updated before a violation (all of them on success).
  std::size_t place(std::uint32_t u, Label lab, bool& ok) {
    const auto targets = ws_.affects[u];
    ok = true;
    std::size_t i = 0;
    for (; i < targets.size(); ++i) {
      const auto t = targets[i];
      partial_[t] += lab;
      --remaining_[t];
      if (!q_.prune) continue;
      if (remaining_[t] == 0) {
        if (!complete_ok(partial_[t], true)) {
          ok = false;
          return i + 1;
        }
      } else if (magic()) {
        if (partial_[t] + min_sum(remaining_[t]) > k_ ||
            partial_[t] + max_sum(remaining_[t], n_) < k_) {
          ok = false;
          return i + 1;
        }
      }
    }
    return i;
  }

  void unplace(std::uint32_t u, Label lab, std::size_t applied, bool ok) {
    const auto targets = ws_.affects[u];
    for (std::size_t i = applied; i-- > 0;) {
      const auto t = targets[i];
      // The failing target (last applied, ok == false) never committed.
      const bool committed = q_.prune && remaining_[t] == 0 && (ok || i + 1 != applied);
      if (committed) uncommit(partial_[t]);
      partial_[t] -= lab;
      ++remaining_[t];
    }
  }

  void dfs(std::size_t depth) {
    if (depth == order_.size()) {
      leaf();
      return;
    }
    const auto u = order_[depth];
    Label lo = 1, hi = static_cast<Label>(n_);
    if (vertex_limit_ > 0) {
      if (u < g_.vertex_count()) {
        hi = vertex_limit_;
      } else {
        lo = vertex_limit_ + 1;
      }
    }
    for (Label lab = lo; lab <= hi; ++lab) {
      if (used_[lab]) continue;
      if (++out_.nodes > q_.budget) throw BudgetHit{};
      used_[lab] = true;
      labels_[u] = lab;
      bool ok = true;
      const auto applied = place(u, lab, ok);
      if (ok) dfs(depth + 1);
      unplace(u, lab, applied, ok);
      labels_[u] = 0;
      used_[lab] = false;
    }
  }

  void leaf() {
    const Labelling l = Labelling::from_labels(g_, q_.selector, labels_);
    CensusKey key;
    if (q_.prune) {
      if (magic()) {
        key = {k_, 0};
      } else if (q_.target.kind == LabellingKind::ad_antimagic) {
        key = {q_.target.a, q_.target.d};
      } else {
        const auto ad = detect_progression(partial_);
        key = ad ? CensusKey{ad->first, ad->second} : CensusKey{0, -1};
      }
    } else {
      const auto report = verify(g_, l, q_.selector, q_.target);
      if (!report.accepted()) return;
      if (magic()) {
        key = {*report.magic_constant, 0};
      } else if (q_.target.kind == LabellingKind::ad_antimagic) {
        key = {q_.target.a, q_.target.d};
      } else {
        key = report.detected_ad ? CensusKey{report.detected_ad->first, report.detected_ad->second}
                                 : CensusKey{0, -1};
      }
    }
    ++out_.count;
    ++out_.census[key];
    if (q_.mode == OracleMode::first || q_.mode == OracleMode::enumerate) {
      if (q_.mode == OracleMode::first || out_.labellings.size() < q_.limit)
        out_.labellings.push_back(l);
      if (q_.mode == OracleMode::first || out_.labellings.size() >= q_.limit) throw StopSearch{};
    }
  }

  const Graph& g_;
  const OracleQuery& q_;
  OracleResult& out_;
  WeightStructure ws_;
  Labelling base_;
  Weight n_ = 0;
  Weight k_ = 0;
  Label vertex_limit_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<Weight> partial_;
  std::vector<Weight> remaining_;
  std::vector<bool> used_;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> seen_;
};

}  // namespace

std::pair<Weight, Weight> feasible_magic_interval(const Graph& g, DomainSelector sel,
                                                  ElementClass target) {
  const auto ws = WeightStructure::build(g, sel, target);
  const Labelling shape(g, sel);
  const auto n = static_cast<Weight>(shape.n());
  Weight lo = 0, hi = std::numeric_limits<Weight>::max();
  for (std::size_t t = 0; t < ws.target_count(); ++t) {
    const auto c = static_cast<Weight>(ws.contributors[t].size());
    lo = std::max(lo, min_sum(c));
    hi = std::min(hi, max_sum(c, n));
  }
  return {lo, hi};
}

std::vector<std::pair<Weight, Weight>> progression_candidates(const Graph& g, DomainSelector sel,
                                                              ElementClass target) {
  const auto ws = WeightStructure::build(g, sel, target);
  const Labelling shape(g, sel);
  const auto n = static_cast<Weight>(shape.n());
  const auto m = static_cast<Weight>(ws.target_count());
  if (m == 0) return {};

  Weight w_lo = std::numeric_limits<Weight>::max(), w_hi = 0;
  for (std::size_t t = 0; t < ws.target_count(); ++t) {
    const auto c = static_cast<Weight>(ws.contributors[t].size());
    w_lo = std::min(w_lo, min_sum(c));
    w_hi = std::max(w_hi, max_sum(c, n));
  }

  std::vector<Weight> mult;
  for (auto u : shape.universe()) mult.push_back(static_cast<Weight>(ws.affects[u].size()));
  std::sort(mult.begin(), mult.end());
  Weight sum_lo = 0, sum_hi = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    const auto label = static_cast<Weight>(i + 1);
    sum_hi += mult[i] * label;
    sum_lo += mult[mult.size() - 1 - i] * label;
  }

  auto floor_div = [](Weight x, Weight y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
  auto ceil_div = [&](Weight x, Weight y) { return -floor_div(-x, y); };

  std::vector<std::pair<Weight, Weight>> out;
  const Weight tri = m * (m - 1) / 2;
  const Weight d_max = m > 1 ? (w_hi - w_lo) / (m - 1) : 0;
  for (Weight d = 0; d <= d_max; ++d) {
    const Weight a_lo = std::max({Weight{1}, w_lo, ceil_div(sum_lo - d * tri, m)});
    const Weight a_hi = std::min(w_hi - (m - 1) * d, floor_div(sum_hi - d * tri, m));
    for (Weight a = a_lo; a <= a_hi; ++a) out.emplace_back(a, d);
  }
  return out;
}

OracleResult oracle_search(const Graph& g, const OracleQuery& q) {
  validate_target(g, q.selector, q.target);
  if (q.mode == OracleMode::enumerate && q.limit == 0)
    throw std::invalid_argument("enumerate mode needs a positive limit");
  OracleResult out;
  try {
    if (q.prune && q.target.kind == LabellingKind::magic) {
      const auto [lo, hi] = feasible_magic_interval(g, q.selector, q.target.target);
      for (Weight k = lo; k <= hi; ++k) {
        Search s(g, q, out);
        s.run_magic(k);
      }
    } else {
      Search s(g, q, out);
      s.run();
    }
  } catch (const BudgetHit&) {
    out.status = OracleStatus::budget_exceeded;
    return out;
  } catch (const StopSearch&) {
  }
  out.status = out.count > 0 ? OracleStatus::found : OracleStatus::exhausted_none;
  return out;
}

std::map<CensusKey, std::uint64_t> achievable_values(const Graph& g, const OracleQuery& q) {
  OracleQuery full = q;
  full.mode = OracleMode::count;
  auto result = oracle_search(g, full);
  if (result.status == OracleStatus::budget_exceeded)
    throw OracleBudgetExceeded("census exceeded the node budget of " + std::to_string(q.budget));
  return std::move(result.census);
}

}  // namespace maglab
