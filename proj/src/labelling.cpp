#include "maglab/labelling.hpp"

#include <algorithm>
#include <numeric>

namespace maglab {

std::string_view to_string(LabellingKind k) {
  switch (k) {
    case LabellingKind::magic: return "magic";
    case LabellingKind::antimagic: return "antimagic";
    case LabellingKind::ad_antimagic: return "ad-antimagic";
  }
  return "?";
}

Labelling::Labelling(const Graph& g, DomainSelector sel)
    : selector_(sel),
      counts_{g.vertex_count(), g.edge_count(), g.face_count()},
      labels_(g.element_count(), 0) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (sel.includes(g.element_at(i).cls)) universe_.push_back(static_cast<std::uint32_t>(i));
}

Labelling Labelling::from_labels(const Graph& g, DomainSelector sel, std::vector<Label> labels) {
  if (labels.size() != g.element_count())
    throw LabellingError("labelling has " + std::to_string(labels.size()) +
                         " entries, graph has " + std::to_string(g.element_count()) +
                         " elements");
  Labelling l(g, sel);
  l.labels_ = std::move(labels);
  return l;
}

bool Labelling::fits(const Graph& g) const {
  return counts_[0] == g.vertex_count() && counts_[1] == g.edge_count() &&
         counts_[2] == g.face_count();
}

Label Labelling::operator[](ElementRef e) const {
  std::size_t base = 0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(e.cls); ++c) base += counts_[c];
  return labels_.at(base + e.id);
}

void validate_target(const Graph& g, DomainSelector sel, const TargetKind& tk) {
  if (!sel.any()) throw LabellingError("selector labels no element class");
  if (tk.super_labelling && !sel.v)
    throw LabellingError("a super labelling requires vertex labels");
  if (g.count(tk.target) == 0)
    throw LabellingError("target class '" + std::string(to_string(tk.target)) +
                         "' is empty in this graph");
  if (tk.kind == LabellingKind::ad_antimagic && (tk.a < 1 || tk.d < 0))
    throw LabellingError("(a,d)-antimagic needs a >= 1 and d >= 0");
}

WeightStructure WeightStructure::build(const Graph& g, DomainSelector sel, ElementClass target) {
  WeightStructure ws;
  ws.target = target;
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  auto gv = [](std::uint32_t v) { return v; };
  auto ge = [nv](std::uint32_t e) { return static_cast<std::uint32_t>(nv + e); };
  auto gf = [nv, ne](std::uint32_t f) { return static_cast<std::uint32_t>(nv + ne + f); };

  std::vector<std::vector<std::uint32_t>> rows(g.count(target));
  for (std::uint32_t t = 0; t < rows.size(); ++t) {
    auto& row = rows[t];
    switch (target) {
      case ElementClass::vertex:
        if (sel.v) row.push_back(gv(t));
        if (sel.e)
          for (auto e : g.vertex_edges(t)) row.push_back(ge(e));
        if (sel.f)
          for (auto f : g.vertex_faces(t)) row.push_back(gf(f));
        break;
      case ElementClass::edge: {
        auto [u, v] = g.endpoints(t);
        if (sel.v) {
          row.push_back(gv(u));
          row.push_back(gv(v));
        }
        if (sel.e) row.push_back(ge(t));
        if (sel.f)
          for (auto f : g.edge_faces(t)) row.push_back(gf(f));
        break;
      }
      case ElementClass::face:
        if (sel.v)
          for (auto v : g.face_vertices(t)) row.push_back(gv(v));
        if (sel.e)
          for (auto e : g.face_edges(t)) row.push_back(ge(e));
        if (sel.f) row.push_back(gf(t));
        break;
    }
    std::sort(row.begin(), row.end());
  }

  std::vector<std::vector<std::uint32_t>> reverse(g.element_count());
  for (std::uint32_t t = 0; t < rows.size(); ++t)
    for (auto u : rows[t]) reverse[u].push_back(t);

  ws.contributors = Incidence(rows);
  ws.affects = Incidence(reverse);
  return ws;
}

Weight weight(const Graph& g, const Labelling& l, ElementRef element) {
  if (!l.fits(g)) throw LabellingError("labelling does not match graph shape");
  const auto id = element.id;
  auto lv = [&](VertexId v) { return static_cast<Weight>(l[{ElementClass::vertex, v}]); };
  auto le = [&](EdgeId e) { return static_cast<Weight>(l[{ElementClass::edge, e}]); };
  auto lf = [&](FaceId f) { return static_cast<Weight>(l[{ElementClass::face, f}]); };
  Weight w = static_cast<Weight>(l.at(g.global_index(element)));
  switch (element.cls) {
    case ElementClass::vertex:
      for (auto e : g.vertex_edges(id)) w += le(e);
      for (auto f : g.vertex_faces(id)) w += lf(f);
      break;
    case ElementClass::edge: {
      auto [u, v] = g.endpoints(id);
      w += lv(u) + lv(v);
      for (auto f : g.edge_faces(id)) w += lf(f);
      break;
    }
    case ElementClass::face:
      for (auto v : g.face_vertices(id)) w += lv(v);
      for (auto e : g.face_edges(id)) w += le(e);
      break;
  }
  return w;
}

std::vector<Weight> weights_of(const Graph& g, const Labelling& l, ElementClass target) {
  std::vector<Weight> out(g.count(target));
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = weight(g, l, {target, i});
  return out;
}

Labelling random_labelling(const Graph& g, DomainSelector sel, bool super, Rng& rng) {
  if (!sel.any()) throw LabellingError("selector labels no element class");
  if (super && !sel.v) throw LabellingError("a super labelling requires vertex labels");
  Labelling l(g, sel);
  const auto u = l.universe();
  std::vector<Label> values(u.size());
  std::iota(values.begin(), values.end(), Label{1});
  if (super) {
    const auto split = static_cast<std::ptrdiff_t>(l.vertex_members());
    rng.shuffle(values.begin(), values.begin() + split);
    rng.shuffle(values.begin() + split, values.end());
  } else {
    rng.shuffle(values.begin(), values.end());
  }
  for (std::size_t i = 0; i < u.size(); ++i) l.set(u[i], values[i]);
  return l;
}

Labelling random_labelling(const Graph& g, DomainSelector sel, bool super, std::uint64_t seed) {
  Rng rng(seed);
  return random_labelling(g, sel, super, rng);
}

std::optional<std::pair<Weight, Weight>> detect_progression(std::vector<Weight> weights) {
  if (weights.empty()) return std::nullopt;
  std::sort(weights.begin(), weights.end());
  const Weight a = weights.front();
  const Weight d = weights.size() > 1 ? weights[1] - weights[0] : 0;
  for (std::size_t i = 1; i < weights.size(); ++i)
    if (weights[i] - weights[i - 1] != d) return std::nullopt;
  return std::pair{a, d};
}

namespace {

std::string name(ElementRef e) {
  return std::string(to_string(e.cls)) + " " + std::to_string(e.id + 1);
}

}  // namespace

VerifyReport verify(const Graph& g, const Labelling& l, DomainSelector sel, const TargetKind& tk) {
  validate_target(g, sel, tk);
  VerifyReport r;
  if (!l.fits(g)) {
    r.structure_ok = false;
    r.message = "labelling was built for a graph of different shape";
    return r;
  }
  if (!(l.selector() == sel)) {
    r.structure_ok = false;
    r.message = "labelling was built for a different (v,e,f) selector";
    return r;
  }

  // Bijection U -> [1, n], zero elsewhere.
  const std::size_t n = l.n();
  std::vector<std::int64_t> owner(n + 1, -1);
  r.bijection_ok = true;
  for (std::size_t i = 0; i < g.element_count() && r.bijection_ok; ++i) {
    const auto e = g.element_at(i);
    const Label lab = l.at(i);
    if (!sel.includes(e.cls)) {
      if (lab != 0) {
        r.bijection_ok = false;
        r.message = name(e) + " is not labelled but carries label " + std::to_string(lab);
      }
      continue;
    }
    if (lab < 1 || lab > n) {
      r.bijection_ok = false;
      r.message = name(e) + " has label " + std::to_string(lab) + " outside [1," +
                  std::to_string(n) + "]";
    } else if (owner[lab] >= 0) {
      r.bijection_ok = false;
      r.message = "label " + std::to_string(lab) + " is repeated on " +
                  name(g.element_at(static_cast<std::size_t>(owner[lab]))) + " and " + name(e);
    } else {
      owner[lab] = static_cast<std::int64_t>(i);
    }
  }
  if (!r.bijection_ok) return r;

  if (tk.super_labelling) {
    r.super_ok = true;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if (l.at(v) > g.vertex_count()) {
        r.super_ok = false;
        r.message = "vertex " + std::to_string(v + 1) + " has label " + std::to_string(l.at(v)) +
                    " outside [1," + std::to_string(g.vertex_count()) + "]";
        return r;
      }
    }
  }

  r.weights = weights_of(g, l, tk.target);
  r.detected_ad = detect_progression(r.weights);
  const auto& w = r.weights;
  auto ref = [&](std::size_t i) { return ElementRef{tk.target, static_cast<std::uint32_t>(i)}; };
  auto violate = [&](std::size_t i, std::size_t j, const std::string& why) {
    r.violation = WeightViolation{ref(i), ref(j), w[i], w[j]};
    r.message = why + ": wt(" + name(ref(i)) + ")=" + std::to_string(w[i]) + ", wt(" +
                name(ref(j)) + ")=" + std::to_string(w[j]);
  };

  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return w[x] < w[y]; });

  switch (tk.kind) {
    case LabellingKind::magic: {
      r.kind_ok = true;
      for (std::size_t i = 1; i < w.size() && r.kind_ok; ++i)
        if (w[i] != w[0]) {
          r.kind_ok = false;
          violate(0, i, "weights differ");
        }
      if (r.kind_ok) r.magic_constant = w[0];
      const auto ws = WeightStructure::build(g, sel, tk.target);
      Weight total = 0;
      for (auto u : l.universe())
        total += static_cast<Weight>(l.at(u)) * static_cast<Weight>(ws.affects[u].size());
      const auto s = static_cast<Weight>(w.size());
      if (total % s == 0) r.magic_constant_by_count = total / s;
      break;
    }
    case LabellingKind::antimagic:
      r.kind_ok = true;
      for (std::size_t i = 0; i + 1 < order.size() && r.kind_ok; ++i)
        if (w[order[i]] == w[order[i + 1]]) {
          r.kind_ok = false;
          violate(order[i], order[i + 1], "weights coincide");
        }
      break;
    case LabellingKind::ad_antimagic:
      r.kind_ok = true;
      for (std::size_t i = 0; i < order.size() && r.kind_ok; ++i) {
        const Weight expected = tk.a + static_cast<Weight>(i) * tk.d;
        if (w[order[i]] != expected) {
          r.kind_ok = false;
          if (i == 0) {
            r.violation = WeightViolation{ref(order[0]), ref(order[0]), w[order[0]], w[order[0]]};
            r.message = "smallest weight wt(" + name(ref(order[0])) + ")=" +
                        std::to_string(w[order[0]]) + " differs from a=" + std::to_string(tk.a);
          } else {
            violate(order[i - 1], order[i],
                    "progression step is not d=" + std::to_string(tk.d));
          }
        }
      }
      break;
  }
  return r;
}

}  // namespace maglab
