#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maglab/annealer.hpp"
#include "maglab/graph.hpp"
#include "maglab/io.hpp"
#include "maglab/labelling.hpp"

// Iteration-count benchmark over graph families: independent seeded runs per
// instance, mean iterations per point and least-squares trend fits.
namespace maglab::bench {

enum class Family {
  kn_super_vmt,       ///< K_n, vertex-magic edge labelling with labels 1..|E|
  p3power_antimagic,  ///< P3^k, vertex-antimagic edge labelling
  p2p3_antimagic,     ///< P2^r x P3^s, vertex-antimagic edge labelling
};

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

struct Instance {
  std::string param;  ///< "n", "k" or "r:s"
  double x = 0;       ///< abscissa for the fits
  Graph graph;
  DomainSelector selector;
  TargetKind target;
};

class GuardrailError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  Family family = Family::kn_super_vmt;
  /// n for kn-super-vmt, k for p3power-antimagic; ignored by p2p3-antimagic.
  std::vector<std::size_t> points;
  /// p2p3-antimagic enumerates r, s >= 1 with 2^r 3^s below this.
  std::size_t max_vertices = 50;
  std::size_t runs = 8;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 0;
  std::size_t threads = 1;
  /// Lift the desk-scale range limits (kn: 6..12, p3power: k <= 4).
  bool force = false;
};

/// Instances for the options, in output order. Throws GuardrailError when a
/// point is outside the default range and force is not set.
std::vector<Instance> instances(const Options& opt);

struct PointSummary {
  std::string param;
  double x = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double mean_iterations = 0;
  std::size_t solved = 0;
  std::size_t runs = 0;
};

/// Runs every point; each run is handed to `sink` in (point, seed) order.
std::vector<PointSummary> run(const Options& opt,
                              const std::function<void(const io::BenchRecord&)>& sink);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};
/// Least squares y = slope * x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);
/// y = A e^{B x} from a linear fit of ln y; returns {B, A}. y must be positive.
LinearFit exponential_fit(std::span<const double> x, std::span<const double> y);

}  // namespace maglab::bench
