#include "maglab/ilp.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace maglab::ilp {

std::size_t IlpModel::binary_count() const {
  return static_cast<std::size_t>(std::count_if(variables.begin(), variables.end(), [](auto& v) {
    return v.type == VarType::binary;
  }));
}

std::size_t IlpModel::continuous_count() const { return variables.size() - binary_count(); }

IlpModel build_ilp(const Graph& g, DomainSelector sel, const TargetKind& tk, std::int64_t K) {
  if (tk.kind != LabellingKind::magic)
    throw IlpError("the integer program is only formulated for magic labellings");
  validate_target(g, sel, tk);

  IlpModel m;
  const Labelling shape(g, sel);
  const auto u = shape.universe();
  m.n = u.size();
  m.K = K;
  m.beta.assign(u.begin(), u.end());
  std::vector<std::size_t> index_of(g.element_count(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) index_of[u[i]] = i;

  const std::size_t n = m.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.variables.push_back({"x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});

  const auto ws = WeightStructure::build(g, sel, tk.target);
  for (std::size_t s = 0; s < ws.target_count(); ++s) {
    m.y_vars.push_back(m.variables.size());
    m.variables.push_back({"y_" + std::to_string(s + 1), VarType::continuous, 0.0});
  }

  for (std::size_t i = 0; i < n; ++i) {
    Constraint c{"row_" + std::to_string(i + 1), {}, Sense::eq, 1};
    for (std::size_t j = 0; j < n; ++j) c.terms.push_back({m.x_var(i, j), 1});
    m.constraints.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Constraint c{"col_" + std::to_string(j + 1), {}, Sense::eq, 1};
    for (std::size_t i = 0; i < n; ++i) c.terms.push_back({m.x_var(i, j), 1});
    m.constraints.push_back(std::move(c));
  }

  // weight(s) = sum over contributors u of sum_j j * x_{beta(u), j}
  //   y_s + weight(s) >= K   and   y_s - weight(s) >= -K
  for (std::size_t s = 0; s < ws.target_count(); ++s) {
    std::vector<Term> weight_terms;
    for (auto g_idx : ws.contributors[s]) {
      const auto i = index_of[g_idx];
      for (std::size_t j = 0; j < n; ++j)
        weight_terms.push_back({m.x_var(i, j), static_cast<std::int64_t>(j + 1)});
    }
    Constraint lower{"absp_" + std::to_string(s + 1), {{m.y_vars[s], 1}}, Sense::ge, K};
    Constraint upper{"absn_" + std::to_string(s + 1), {{m.y_vars[s], 1}}, Sense::ge, -K};
    for (const auto& t : weight_terms) {
      lower.terms.push_back(t);
      upper.terms.push_back({t.var, -t.coef});
    }
    m.constraints.push_back(std::move(lower));
    m.constraints.push_back(std::move(upper));
  }

  for (auto y : m.y_vars) m.objective.push_back({y, 1});
  return m;
}

std::vector<std::uint8_t> encode(const IlpModel& m, const Labelling& l) {
  std::vector<std::uint8_t> x(m.n * m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    const auto lab = l.at(m.beta[i]);
    if (lab < 1 || lab > m.n) throw IlpError("labelling is not a bijection onto [1,n]");
    x[m.x_var(i, lab - 1)] = 1;
  }
  return x;
}

std::int64_t min_objective_at(const IlpModel& m, std::span<const std::uint8_t> binaries) {
  std::vector<std::int64_t> lower(m.variables.size(), 0);
  std::vector<bool> is_binary(m.variables.size());
  std::size_t b = 0;
  std::vector<std::int64_t> value(m.variables.size(), 0);
  for (std::size_t v = 0; v < m.variables.size(); ++v) {
    is_binary[v] = m.variables[v].type == VarType::binary;
    if (is_binary[v]) {
      if (b >= binaries.size()) throw IlpError("too few binary values");
      value[v] = binaries[b++];
    } else {
      lower[v] = static_cast<std::int64_t>(m.variables[v].lower);
    }
  }

  for (const auto& c : m.constraints) {
    std::int64_t fixed = 0;
    std::int64_t cont_coef = 0;
    std::size_t cont_var = 0;
    std::size_t cont_terms = 0;
    for (const auto& t : c.terms) {
      if (is_binary[t.var]) {
        fixed += t.coef * value[t.var];
      } else {
        cont_coef = t.coef;
        cont_var = t.var;
        ++cont_terms;
      }
    }
    if (cont_terms == 0) {
      const bool ok = c.sense == Sense::eq   ? fixed == c.rhs
                      : c.sense == Sense::ge ? fixed >= c.rhs
                                             : fixed <= c.rhs;
      if (!ok) throw IlpError("point violates constraint " + c.name);
      continue;
    }
    if (cont_terms != 1 || cont_coef != 1 || c.sense != Sense::ge)
      throw IlpError("constraint " + c.name + " is not a lower bound on one continuous variable");
    lower[cont_var] = std::max(lower[cont_var], c.rhs - fixed);
  }

  std::int64_t total = 0;
  for (const auto& t : m.objective)
    total += t.coef * (is_binary[t.var] ? value[t.var] : lower[t.var]);
  return total;
}

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_expr(std::ostream& os, const IlpModel& m, const std::vector<Term>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % kTermsPerLine == 0) os << "\n   ";
    const auto& t = terms[k];
    const bool neg = t.coef < 0;
    const auto mag = neg ? -t.coef : t.coef;
    if (k == 0) {
      os << (neg ? " -" : " ");
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1) os << mag << ' ';
    os << m.variables[t.var].name;
  }
}

}  // namespace

void write_lp(const IlpModel& m, std::ostream& os) {
  if (m.constraints.empty()) throw IlpError("model has no constraints");
  os << "\\ magic labelling model: n = " << m.n << ", K = " << m.K << "\n";
  os << "Minimize\n obj:";
  write_expr(os, m, m.objective);
  os << "\nSubject To\n";
  for (const auto& c : m.constraints) {
    os << ' ' << c.name << ':';
    write_expr(os, m, c.terms);
    os << (c.sense == Sense::eq ? " = " : c.sense == Sense::ge ? " >= " : " <= ") << c.rhs << '\n';
  }
  os << "Bounds\n";
  for (const auto& v : m.variables)
    if (v.type == VarType::continuous) os << ' ' << v.name << " >= " << v.lower << '\n';
  os << "Binaries\n";
  std::size_t on_line = 0;
  for (const auto& v : m.variables) {
    if (v.type != VarType::binary) continue;
    os << ' ' << v.name;
    if (++on_line % kTermsPerLine == 0) os << '\n';
  }
  if (on_line % kTermsPerLine != 0) os << '\n';
  os << "End\n";
  if (!os) throw std::runtime_error("failed to write LP model");
}

std::string to_lp(const IlpModel& m) {
  std::ostringstream os;
  write_lp(m, os);
  return os.str();
}

}  // namespace maglab::ilp
