#include "maglab/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace maglab::io {

namespace {

struct LineReader {
  std::istream& is;
  std::size_t number = 0;

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }
};

std::uint64_t to_u64(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  try {
    if (!s.empty() && s[0] != '-') {
      const auto v = std::stoull(s, &pos);
      if (pos == s.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw FormatError("expected a nonnegative integer, got '" + s + "'", line);
}

std::int64_t to_i64(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  try {
    const auto v = std::stoll(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw FormatError("expected an integer, got '" + s + "'", line);
}

// 1-based id in the file -> 0-based id.
std::uint32_t to_id(const std::string& s, std::size_t line) {
  const auto v = to_u64(s, line);
  if (v == 0 || v > 0xffffffffULL) throw FormatError("ids are 1-based, got '" + s + "'", line);
  return static_cast<std::uint32_t>(v - 1);
}

void expect_arity(const std::vector<std::string>& t, std::size_t n, std::size_t line) {
  if (t.size() != n)
    throw FormatError("'" + t[0] + "' takes " + std::to_string(n - 1) + " fields", line);
}

char class_letter(ElementClass c) { return "vef"[static_cast<int>(c)]; }

std::optional<ElementClass> class_from_letter(const std::string& s) {
  if (s == "v") return ElementClass::vertex;
  if (s == "e") return ElementClass::edge;
  if (s == "f") return ElementClass::face;
  return std::nullopt;
}

}  // namespace

std::string element_class_word(ElementClass c) {
  switch (c) {
    case ElementClass::vertex: return "vertices";
    case ElementClass::edge: return "edges";
    case ElementClass::face: return "faces";
  }
  return "?";
}

std::optional<ElementClass> parse_element_class(const std::string& word) {
  if (word == "vertices" || word == "vertex" || word == "V") return ElementClass::vertex;
  if (word == "edges" || word == "edge" || word == "E") return ElementClass::edge;
  if (word == "faces" || word == "face" || word == "F") return ElementClass::face;
  return std::nullopt;
}

Graph read_graph(std::istream& is) {
  LineReader in{is};
  std::vector<std::string> t;
  if (!in.next(t) || t[0] != "graph") throw FormatError("missing 'graph' header", in.number);
  expect_arity(t, 4, in.number);
  const auto nv = to_u64(t[1], in.number);
  const auto ne = to_u64(t[2], in.number);
  const auto nf = to_u64(t[3], in.number);

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::vector<VertexId>> faces;
  while (in.next(t)) {
    if (t[0] == "e") {
      expect_arity(t, 3, in.number);
      edges.emplace_back(to_id(t[1], in.number), to_id(t[2], in.number));
    } else if (t[0] == "f") {
      if (t.size() < 3) throw FormatError("a face needs at least two vertices", in.number);
      std::vector<VertexId> walk;
      for (std::size_t i = 1; i < t.size(); ++i) walk.push_back(to_id(t[i], in.number));
      if (walk.front() != walk.back() || walk.size() == 2) walk.push_back(walk.front());
      faces.push_back(std::move(walk));
    } else {
      throw FormatError("unknown record '" + t[0] + "'", in.number);
    }
  }
  if (edges.size() != ne || faces.size() != nf)
    throw FormatError("header announces " + std::to_string(ne) + " edges and " +
                      std::to_string(nf) + " faces, file has " + std::to_string(edges.size()) +
                      " and " + std::to_string(faces.size()));
  try {
    return Graph::build(nv, std::move(edges), std::move(faces));
  } catch (const GraphError& e) {
    throw FormatError(std::string("invalid graph: ") + e.what());
  }
}

void write_graph(const Graph& g, std::ostream& os) {
  os << "graph " << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.face_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  for (const auto& walk : g.faces()) {
    os << 'f';
    for (auto v : walk) os << ' ' << v + 1;
    os << '\n';
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open graph file '" + path + "'");
  try {
    return read_graph(is);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream os(path);
  write_graph(g, os);
  if (!os) throw std::runtime_error("cannot write graph file '" + path + "'");
}

Attestation attest(const TargetKind& tk, const VerifyReport& report, std::uint64_t value) {
  Attestation a;
  if (!report.accepted()) {
    a.kind = Attestation::Kind::unsolved;
    a.value = value;
    return a;
  }
  switch (tk.kind) {
    case LabellingKind::magic:
      a.kind = Attestation::Kind::magic;
      a.magic_constant = *report.magic_constant;
      break;
    case LabellingKind::antimagic: a.kind = Attestation::Kind::antimagic; break;
    case LabellingKind::ad_antimagic:
      a.kind = Attestation::Kind::ad;
      a.a = tk.a;
      a.d = tk.d;
      break;
  }
  return a;
}

LabellingRecord make_record(const Labelling& l, DomainSelector sel, const TargetKind& tk,
                            const VerifyReport& report, std::uint64_t unsolved_value) {
  LabellingRecord r;
  r.selector = sel;
  r.target = tk;
  r.counts = l.class_counts();
  r.n = l.n();
  std::size_t global = 0;
  for (int c = 0; c < 3; ++c) {
    for (std::size_t id = 0; id < r.counts[c]; ++id, ++global) {
      const auto cls = static_cast<ElementClass>(c);
      if (sel.includes(cls) || l.at(global) != 0)
        r.entries.emplace_back(cls, static_cast<std::uint32_t>(id), l.at(global));
    }
  }
  r.attestation = attest(tk, report, unsolved_value);
  return r;
}

Labelling LabellingRecord::to_labelling(const Graph& g) const {
  const std::array<std::size_t, 3> shape{g.vertex_count(), g.edge_count(), g.face_count()};
  if (counts != shape)
    throw FormatError("labelling is for a graph with " + std::to_string(counts[0]) + "/" +
                      std::to_string(counts[1]) + "/" + std::to_string(counts[2]) +
                      " vertices/edges/faces, graph has " + std::to_string(shape[0]) + "/" +
                      std::to_string(shape[1]) + "/" + std::to_string(shape[2]));
  Labelling l(g, selector);
  if (l.n() != n)
    throw FormatError("labelling declares n = " + std::to_string(n) + " but its selector gives " +
                      std::to_string(l.n()));
  std::vector<bool> seen(g.element_count(), false);
  for (const auto& [cls, id, lab] : entries) {
    if (id >= g.count(cls))
      throw FormatError(std::string(to_string(cls)) + " " + std::to_string(id + 1) +
                        " does not exist in the graph");
    const auto idx = g.global_index({cls, id});
    if (seen[idx])
      throw FormatError(std::string(to_string(cls)) + " " + std::to_string(id + 1) +
                        " is labelled twice");
    seen[idx] = true;
    l.set(idx, lab);
  }
  for (auto u : l.universe())
    if (!seen[u])
      throw FormatError(std::string(to_string(g.element_at(u).cls)) + " " +
                        std::to_string(g.element_at(u).id + 1) + " has no label");
  return l;
}

void write_labelling(const LabellingRecord& r, std::ostream& os) {
  os << "labelling v1\n";
  os << "selector " << r.selector.v << ' ' << r.selector.e << ' ' << r.selector.f << '\n';
  os << "super " << r.target.super_labelling << '\n';
  os << "target " << element_class_word(r.target.target) << '\n';
  os << "kind " << to_string(r.target.kind);
  if (r.target.kind == LabellingKind::ad_antimagic) os << ' ' << r.target.a << ' ' << r.target.d;
  os << '\n';
  os << "counts " << r.counts[0] << ' ' << r.counts[1] << ' ' << r.counts[2] << '\n';
  os << "n " << r.n << '\n';
  for (const auto& [k, v] : r.meta) os << "meta " << k << ' ' << v << '\n';
  for (const auto& [cls, id, lab] : r.entries)
    os << class_letter(cls) << ' ' << id + 1 << ' ' << lab << '\n';
  const auto& a = r.attestation;
  switch (a.kind) {
    case Attestation::Kind::magic: os << "attest magic " << a.magic_constant << '\n'; break;
    case Attestation::Kind::antimagic: os << "attest antimagic\n"; break;
    case Attestation::Kind::ad: os << "attest ad " << a.a << ' ' << a.d << '\n'; break;
    case Attestation::Kind::unsolved: os << "attest unsolved " << a.value << '\n'; break;
  }
  os << "end\n";
}

LabellingRecord read_labelling(std::istream& is) {
  LineReader in{is};
  std::vector<std::string> t;
  if (!in.next(t) || t.size() != 2 || t[0] != "labelling" || t[1] != "v1")
    throw FormatError("missing 'labelling v1' header", in.number);
  LabellingRecord r;
  bool have_attest = false, have_end = false, have_counts = false, have_n = false;
  bool have_selector = false;
  while (!have_end && in.next(t)) {
    const auto& key = t[0];
    const auto line = in.number;
    if (key == "selector") {
      expect_arity(t, 4, line);
      r.selector = {to_u64(t[1], line) != 0, to_u64(t[2], line) != 0, to_u64(t[3], line) != 0};
      have_selector = true;
    } else if (key == "super") {
      expect_arity(t, 2, line);
      r.target.super_labelling = to_u64(t[1], line) != 0;
    } else if (key == "target") {
      expect_arity(t, 2, line);
      const auto c = parse_element_class(t[1]);
      if (!c) throw FormatError("unknown target '" + t[1] + "'", line);
      r.target.target = *c;
    } else if (key == "kind") {
      if (t.size() == 2 && t[1] == "magic") {
        r.target.kind = LabellingKind::magic;
      } else if (t.size() == 2 && t[1] == "antimagic") {
        r.target.kind = LabellingKind::antimagic;
      } else if (t.size() == 4 && t[1] == "ad-antimagic") {
        r.target.kind = LabellingKind::ad_antimagic;
        r.target.a = to_i64(t[2], line);
        r.target.d = to_i64(t[3], line);
      } else {
        throw FormatError("bad kind record", line);
      }
    } else if (key == "counts") {
      expect_arity(t, 4, line);
      for (int c = 0; c < 3; ++c) r.counts[c] = to_u64(t[c + 1], line);
      have_counts = true;
    } else if (key == "n") {
      expect_arity(t, 2, line);
      r.n = to_u64(t[1], line);
      have_n = true;
    } else if (key == "meta") {
      if (t.size() < 3) throw FormatError("meta needs a key and a value", line);
      std::string value = t[2];
      for (std::size_t i = 3; i < t.size(); ++i) value += " " + t[i];
      r.meta[t[1]] = value;
    } else if (auto cls = class_from_letter(key)) {
      expect_arity(t, 3, line);
      const auto lab = to_u64(t[2], line);
      if (lab > 0xffffffffULL) throw FormatError("label out of range", line);
      r.entries.emplace_back(*cls, to_id(t[1], line), static_cast<Label>(lab));
    } else if (key == "attest") {
      auto& a = r.attestation;
      if (t.size() == 3 && t[1] == "magic") {
        a.kind = Attestation::Kind::magic;
        a.magic_constant = to_i64(t[2], line);
      } else if (t.size() == 2 && t[1] == "antimagic") {
        a.kind = Attestation::Kind::antimagic;
      } else if (t.size() == 4 && t[1] == "ad") {
        a.kind = Attestation::Kind::ad;
        a.a = to_i64(t[2], line);
        a.d = to_i64(t[3], line);
      } else if (t.size() == 3 && t[1] == "unsolved") {
        a.kind = Attestation::Kind::unsolved;
        a.value = to_u64(t[2], line);
      } else {
        throw FormatError("bad attest record", line);
      }
      have_attest = true;
    } else if (key == "end") {
      have_end = true;
    } else {
      throw FormatError("unknown record '" + key + "'", line);
    }
  }
  if (!have_selector || !have_counts || !have_n || !have_attest || !have_end)
    throw FormatError("labelling file is incomplete (selector, counts, n, attest and end are required)");
  return r;
}

void write_bench_row(const BenchRecord& r, std::ostream& os, bool with_wall_time) {
  os << r.family << ',' << r.param << ',' << r.seed << ',' << r.iterations << ',' << r.accepted
     << ',' << r.worse_accepted << ',';
  if (with_wall_time) {
    os << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
  } else {
    os << "NA";
  }
  os << ',' << (r.solved ? 1 : 0) << '\n';
}

std::vector<BenchRecord> read_bench_csv(std::istream& is) {
  std::string line;
  std::size_t number = 1;
  if (!std::getline(is, line) || line != kBenchHeader) throw FormatError("bad CSV header", 1);
  std::vector<BenchRecord> rows;
  while (std::getline(is, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 8) throw FormatError("expected 8 fields", number);
    BenchRecord r;
    r.family = f[0];
    r.param = f[1];
    r.seed = to_u64(f[2], number);
    r.iterations = to_u64(f[3], number);
    r.accepted = to_u64(f[4], number);
    r.worse_accepted = to_u64(f[5], number);
    r.wall_ms = f[6] == "NA" ? 0.0 : std::stod(f[6]);
    r.solved = f[7] == "1";
    rows.push_back(r);
  }
  return rows;
}

}  // namespace maglab::io
