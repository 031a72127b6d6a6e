#include "maglab/bench.hpp"

#include <cmath>

#include "maglab/generators.hpp"
#include "maglab/objectives.hpp"

namespace maglab::bench {

std::optional<Family> parse_family(const std::string& name) {
  if (name == "kn-super-vmt") return Family::kn_super_vmt;
  if (name == "p3power-antimagic") return Family::p3power_antimagic;
  if (name == "p2p3-antimagic") return Family::p2p3_antimagic;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kn_super_vmt: return "kn-super-vmt";
    case Family::p3power_antimagic: return "p3power-antimagic";
    case Family::p2p3_antimagic: return "p2p3-antimagic";
  }
  return "?";
}

std::vector<Instance> instances(const Options& opt) {
  std::vector<Instance> out;
  const DomainSelector edges_only{false, true, false};
  const TargetKind antimagic_v{ElementClass::vertex, LabellingKind::antimagic};
  switch (opt.family) {
    case Family::kn_super_vmt:
      for (auto n : opt.points) {
        if (n < 2) throw GuardrailError("kn-super-vmt needs n >= 2");
        if (!opt.force && (n < 6 || n > 12))
          throw GuardrailError("kn-super-vmt points outside 6..12 need --force");
        // Edges carry the consecutive labels 1..|E| and every vertex sum is equal.
        out.push_back({std::to_string(n), static_cast<double>(n), gen::complete_graph(n),
                       edges_only, {ElementClass::vertex, LabellingKind::magic}});
      }
      break;
    case Family::p3power_antimagic:
      for (auto k : opt.points) {
        if (k < 1) throw GuardrailError("p3power-antimagic needs k >= 1");
        if (!opt.force && k > 4) throw GuardrailError("p3power-antimagic points above 4 need --force");
        auto g = gen::power(gen::path(3), k);
        const auto x = static_cast<double>(g.edge_count());
        out.push_back({std::to_string(k), x, std::move(g), edges_only, antimagic_v});
      }
      break;
    case Family::p2p3_antimagic:
      for (std::size_t s = 1, p3 = 3; 2 * p3 < opt.max_vertices; ++s, p3 *= 3) {
        for (std::size_t r = 1, p2 = 2; p2 * p3 < opt.max_vertices; ++r, p2 *= 2) {
          auto g = gen::p2_p3_product(r, s);
          const auto x = static_cast<double>(g.edge_count());
          out.push_back({std::to_string(r) + ":" + std::to_string(s), x, std::move(g), edges_only,
                         antimagic_v});
        }
      }
      break;
  }
  return out;
}

std::vector<PointSummary> run(const Options& opt,
                              const std::function<void(const io::BenchRecord&)>& sink) {
  if (opt.runs < 1) throw GuardrailError("runs per point must be at least 1");
  std::vector<PointSummary> summary;
  const auto name = family_name(opt.family);
  for (const auto& inst : instances(opt)) {
    AnnealParams params;
    params.seed = opt.seed;
    params.max_iters = opt.max_iters;
    const auto result = multi_start(inst.graph, inst.selector, inst.target,
                                    objective_for(inst.target), params, opt.runs, opt.threads);
    for (const auto& r : result.runs)
      if (sink)
        sink({name, inst.param, r.seed, r.iterations, r.accepted, r.worse_accepted, r.wall_ms,
              r.solved});
    summary.push_back({inst.param, inst.x, inst.graph.vertex_count(), inst.graph.edge_count(),
                       result.mean_iterations(), result.solved_count(), result.runs.size()});
  }
  return summary;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("a fit needs at least two (x, y) pairs");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("fit abscissae are all equal");
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

LinearFit exponential_fit(std::span<const double> x, std::span<const double> y) {
  std::vector<double> logy(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0)) throw std::invalid_argument("exponential fit needs positive y");
    logy[i] = std::log(y[i]);
  }
  const auto f = linear_fit(x, logy);
  return {f.slope, std::exp(f.intercept)};
}

}  // namespace maglab::bench
