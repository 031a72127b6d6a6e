#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"

namespace maglab::ilp {

enum class VarType { binary, continuous };
enum class Sense { eq, ge, le };

struct Variable {
  std::string name;
  VarType type = VarType::binary;
  double lower = 0;  ///< continuous variables only
};

struct Term {
  std::size_t var = 0;
  std::int64_t coef = 0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::eq;
  std::int64_t rhs = 0;
};

class IlpError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Solver-agnostic integer program: minimise the objective subject to the
/// constraints.
///
/// For a magic-labelling instance: x_i_j = 1 iff the element with index i
/// (1-based position in U) receives label j; one continuous y per target
/// element bounds |weight - K| from above.
struct IlpModel {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Term> objective;

  std::size_t n = 0;                  ///< |U|
  std::vector<std::uint32_t> beta;    ///< index i (0-based) -> global element
  std::vector<std::size_t> y_vars;    ///< per target element
  std::int64_t K = 0;

  std::size_t x_var(std::size_t i, std::size_t j) const { return i * n + j; }
  std::size_t binary_count() const;
  std::size_t continuous_count() const;
};

/// Builds the model of a magic labelling with constant K. Throws IlpError for
/// non-magic kinds or an empty target class.
IlpModel build_ilp(const Graph& g, DomainSelector sel, const TargetKind& tk, std::int64_t K);

/// Minimal objective at a 0/1 point for the binaries, taking each continuous
/// variable at the smallest value its constraints allow. Throws IlpError
/// when the point violates a constraint that involves binaries only.
std::int64_t min_objective_at(const IlpModel& m, std::span<const std::uint8_t> binaries);

/// 0/1 encoding of a labelling: x_i_j = 1 iff label(beta(i)) == j.
std::vector<std::uint8_t> encode(const IlpModel& m, const Labelling& l);

/// Writes CPLEX LP text. Output depends only on the model. Throws IlpError on
/// a model without constraints and std::runtime_error on stream failure.
void write_lp(const IlpModel& m, std::ostream& os);
std::string to_lp(const IlpModel& m);

}  // namespace maglab::ilp
