#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maglab/annealer.hpp"
#include "maglab/graph.hpp"
#include "maglab/labelling.hpp"

// Text formats. All ids in files are 1-based.
namespace maglab::io {

/// Malformed or inconsistent input; carries the 1-based line number when known.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Graph file:
//   graph <|V|> <|E|> <|F|>
//   e <u> <v>                 one per edge, in edge-id order
//   f <v1> ... <vk> [<v1>]    one per face; the closing vertex is optional
// Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& is);
void write_graph(const Graph& g, std::ostream& os);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// What the producer of a labelling file claims about it.
struct Attestation {
  enum class Kind { magic, antimagic, ad, unsolved } kind = Kind::unsolved;
  Weight magic_constant = 0;
  Weight a = 0;
  Weight d = 0;
  std::uint64_t value = 0;  ///< objective value for unsolved records

  friend bool operator==(const Attestation&, const Attestation&) = default;
};

/// Contents of a labelling file, independent of any graph.
struct LabellingRecord {
  DomainSelector selector;
  TargetKind target;
  std::array<std::size_t, 3> counts{};
  std::size_t n = 0;
  /// (class, 0-based id, label) for every labelled element.
  std::vector<std::tuple<ElementClass, std::uint32_t, Label>> entries;
  Attestation attestation;
  std::map<std::string, std::string> meta;

  /// Rebuilds the labelling on g. Throws FormatError when shapes disagree.
  Labelling to_labelling(const Graph& g) const;
};

LabellingRecord make_record(const Labelling& l, DomainSelector sel, const TargetKind& tk,
                            const VerifyReport& report, std::uint64_t unsolved_value = 0);
/// Attestation implied by a verification report.
Attestation attest(const TargetKind& tk, const VerifyReport& report, std::uint64_t value = 0);

LabellingRecord read_labelling(std::istream& is);
void write_labelling(const LabellingRecord& r, std::ostream& os);

std::string element_class_word(ElementClass c);  ///< "vertices", "edges", "faces"
std::optional<ElementClass> parse_element_class(const std::string& word);

struct BenchRecord {
  std::string family;
  std::string param;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::uint64_t accepted = 0;
  std::uint64_t worse_accepted = 0;
  double wall_ms = 0;
  bool solved = false;
};

constexpr const char* kBenchHeader =
    "family,param,seed,iterations,accepted,worse_accepted,wall_ms,solved";
void write_bench_row(const BenchRecord& r, std::ostream& os, bool with_wall_time = true);
std::vector<BenchRecord> read_bench_csv(std::istream& is);

}  // namespace maglab::io
