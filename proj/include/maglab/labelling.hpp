#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maglab/graph.hpp"
#include "maglab/rng.hpp"

namespace maglab {

using Label = std::uint32_t;
/// Weights are sums of up to n labels from [1, n]; 64 bits covers n = 10^6.
using Weight = std::int64_t;

class LabellingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which element classes carry labels: the (v, e, f) flags.
struct DomainSelector {
  bool v = false;
  bool e = false;
  bool f = false;

  bool includes(ElementClass c) const {
    return c == ElementClass::vertex ? v : c == ElementClass::edge ? e : f;
  }
  bool any() const { return v || e || f; }

  friend bool operator==(const DomainSelector&, const DomainSelector&) = default;
};

/// Labels for every vertex, edge and face of one graph, stored in global
/// element order (vertices, edges, faces). Elements outside the labelled
/// universe U carry label 0.
class Labelling {
 public:
  Labelling() = default;
  /// All-zero labelling with the universe of `sel` on `g`.
  Labelling(const Graph& g, DomainSelector sel);

  /// Takes labels in global order. Only the shape is checked here; use
  /// verify() for the bijection property.
  static Labelling from_labels(const Graph& g, DomainSelector sel, std::vector<Label> labels);

  DomainSelector selector() const { return selector_; }
  /// n = |U|.
  std::size_t n() const { return universe_.size(); }
  /// Global indices of U, ascending; vertex members form a prefix.
  std::span<const std::uint32_t> universe() const { return universe_; }
  std::size_t vertex_members() const { return selector_.v ? counts_[0] : 0; }
  const std::array<std::size_t, 3>& class_counts() const { return counts_; }
  bool fits(const Graph& g) const;

  Label at(std::size_t global) const { return labels_[global]; }
  Label operator[](ElementRef e) const;
  std::span<const Label> labels() const { return labels_; }

  void set(std::size_t global, Label value) {
    labels_[global] = value;
    ++generation_;
  }
  void swap_labels(std::size_t a, std::size_t b) {
    std::swap(labels_[a], labels_[b]);
    ++generation_;
  }
  /// Bumped by every mutation; incremental evaluators use it to detect
  /// edits they did not make.
  std::uint64_t generation() const { return generation_; }

  friend bool operator==(const Labelling& a, const Labelling& b) {
    return a.selector_ == b.selector_ && a.counts_ == b.counts_ && a.labels_ == b.labels_;
  }

 private:
  DomainSelector selector_;
  std::array<std::size_t, 3> counts_{};
  std::vector<Label> labels_;
  std::vector<std::uint32_t> universe_;
  std::uint64_t generation_ = 0;
};

enum class LabellingKind { magic, antimagic, ad_antimagic };

std::string_view to_string(LabellingKind k);

/// What a labelling is asked to be: the weights of every element of class
/// `target` are equal (magic), pairwise distinct (antimagic) or exactly
/// a, a+d, ..., a+(|S|-1)d (ad_antimagic).
struct TargetKind {
  ElementClass target = ElementClass::vertex;
  LabellingKind kind = LabellingKind::magic;
  Weight a = 0;
  Weight d = 0;
  bool super_labelling = false;
};

/// Throws LabellingError when `tk` cannot apply to (g, sel).
void validate_target(const Graph& g, DomainSelector sel, const TargetKind& tk);

/// For every element t of the target class, the global indices of the
/// labelled elements whose labels sum into wt(t), and the reverse map.
struct WeightStructure {
  static WeightStructure build(const Graph& g, DomainSelector sel, ElementClass target);

  ElementClass target = ElementClass::vertex;
  Incidence contributors;  ///< target id -> global indices in U
  Incidence affects;       ///< global index -> target ids
  std::size_t target_count() const { return contributors.rows(); }
};

Weight weight(const Graph& g, const Labelling& l, ElementRef element);
std::vector<Weight> weights_of(const Graph& g, const Labelling& l, ElementClass target);

/// Uniform random bijection U -> [1, n]. With `super`, vertices receive a
/// uniform permutation of [1, |V|] and the remaining members a uniform
/// permutation of [|V|+1, n].
Labelling random_labelling(const Graph& g, DomainSelector sel, bool super, Rng& rng);
Labelling random_labelling(const Graph& g, DomainSelector sel, bool super, std::uint64_t seed);

struct WeightViolation {
  ElementRef first;
  ElementRef second;
  Weight first_weight = 0;
  Weight second_weight = 0;
};

struct VerifyReport {
  bool structure_ok = true;
  bool bijection_ok = false;
  std::optional<bool> super_ok;  ///< set only when a super labelling was requested
  bool kind_ok = false;
  std::string message;  ///< first failure, empty when accepted

  std::vector<Weight> weights;
  std::optional<Weight> magic_constant;
  /// Magic constant recomputed as (sum over U of label x number of target
  /// weights it enters) / |S|. Equal to magic_constant for every magic labelling.
  std::optional<Weight> magic_constant_by_count;
  /// (a, d) whenever the sorted target weights form an arithmetic progression.
  std::optional<std::pair<Weight, Weight>> detected_ad;
  std::optional<WeightViolation> violation;

  bool accepted() const {
    return structure_ok && bijection_ok && super_ok.value_or(true) && kind_ok;
  }
};

VerifyReport verify(const Graph& g, const Labelling& l, DomainSelector sel, const TargetKind& tk);

/// Detected (a, d) for a weight multiset, if it is an arithmetic progression.
std::optional<std::pair<Weight, Weight>> detect_progression(std::vector<Weight> weights);

}  // namespace maglab
