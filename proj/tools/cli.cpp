#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

#include "maglab/annealer.hpp"
#include "maglab/bench.hpp"
#include "maglab/generators.hpp"
#include "maglab/ilp.hpp"
#include "maglab/io.hpp"
#include "maglab/kernels.hpp"
#include "maglab/labelling.hpp"
#include "maglab/objectives.hpp"
#include "maglab/oracle.hpp"

namespace maglab::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t to_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-')
    throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

// Options shared by every subcommand that works on one labelling instance.
struct InstanceOptions {
  std::string graph_path;
  std::vector<std::string> gen;
  bool faces = false;
  bool v = false, e = false, f = false;
  bool super = false;
  std::string target = "vertices";
  std::string kind = "magic";
  std::int64_t a = 0, d = 0;
  CLI::Option* a_opt = nullptr;
  CLI::Option* d_opt = nullptr;

  void add_graph(CLI::App* app) {
    auto* g = app->add_option("--graph", graph_path, "Graph file");
    auto* s = app->add_option("--gen", gen, "Generator spec, e.g. 'petersen 5 2'")->expected(1, 3);
    g->excludes(s);
    app->add_flag("--faces", faces, "Attach faces (cycle and wheel generators)");
  }

  void add_labelling(CLI::App* app, bool with_kind) {
    app->add_flag("--v", v, "Label vertices");
    app->add_flag("--e", e, "Label edges");
    app->add_flag("--f", f, "Label faces");
    app->add_flag("--super", super, "Vertex labels must be 1..|V|");
    app->add_option("--target", target, "Weighted class: vertices, edges or faces")
        ->capture_default_str();
    if (with_kind) {
      app->add_option("--kind", kind, "magic, antimagic or ad")->capture_default_str();
      a_opt = app->add_option("--a", a, "Smallest weight of an (a,d)-antimagic labelling");
      d_opt = app->add_option("--d", d, "Common difference of an (a,d)-antimagic labelling");
    }
  }

  std::string source() const {
    if (!graph_path.empty()) return graph_path;
    std::string s = "gen";
    for (const auto& t : gen) s += ":" + t;
    if (faces) s += ":faces";
    return s;
  }

  Graph graph() const {
    if (!graph_path.empty()) return io::load_graph(graph_path);
    if (gen.empty()) throw UsageError("one of --graph or --gen is required");
    try {
      return graph_from_spec(gen, faces);
    } catch (const GraphError&) {
      throw;
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }

  DomainSelector selector() const {
    DomainSelector sel{v, e, f};
    if (!sel.any()) throw UsageError("select at least one of --v, --e, --f");
    if (super && !v) throw UsageError("--super requires --v");
    return sel;
  }

  TargetKind target_kind(bool allow_missing_ad = false) const {
    TargetKind tk;
    const auto cls = io::parse_element_class(target);
    if (!cls) throw UsageError("--target must be vertices, edges or faces");
    tk.target = *cls;
    tk.super_labelling = super;
    if (kind == "magic") {
      tk.kind = LabellingKind::magic;
    } else if (kind == "antimagic") {
      tk.kind = LabellingKind::antimagic;
    } else if (kind == "ad" || kind == "ad-antimagic") {
      tk.kind = LabellingKind::ad_antimagic;
      const bool have = a_opt && d_opt && a_opt->count() > 0 && d_opt->count() > 0;
      if (!have && !allow_missing_ad) throw UsageError("--kind ad needs --a and --d");
      tk.a = a;
      tk.d = d;
      if (have && (a < 1 || d < 0)) throw UsageError("--a must be >= 1 and --d >= 0");
    } else {
      throw UsageError("--kind must be magic, antimagic or ad");
    }
    return tk;
  }
};

std::string family_of(const Objective& obj) {
  switch (obj.family) {
    case ObjectiveFamily::magic_f: return "f";
    case ObjectiveFamily::antimagic_g: return "g";
    case ObjectiveFamily::ad_h: return "h";
  }
  return "?";
}

void print_report(const VerifyReport& r, const TargetKind& tk, std::ostream& out) {
  out << "structure: " << (r.structure_ok ? "ok" : "mismatch") << '\n';
  if (!r.structure_ok) return;
  out << "bijection: " << (r.bijection_ok ? "ok" : "violated") << '\n';
  if (!r.bijection_ok) return;
  if (r.super_ok) out << "super: " << (*r.super_ok ? "ok" : "violated") << '\n';
  if (!r.super_ok.value_or(true)) return;
  out << "kind: " << to_string(tk.kind) << " on " << io::element_class_word(tk.target) << ": "
      << (r.kind_ok ? "accepted" : "rejected") << '\n';
  if (r.magic_constant) out << "magic constant " << *r.magic_constant << '\n';
  if (r.magic_constant && r.magic_constant_by_count)
    out << "magic constant by label count " << *r.magic_constant_by_count << '\n';
  if (r.detected_ad && tk.kind != LabellingKind::magic)
    out << "weights form progression a=" << r.detected_ad->first << " d=" << r.detected_ad->second
        << '\n';
}

void write_record_to(const io::LabellingRecord& rec, const std::string& path, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    io::write_labelling(rec, out);
    return;
  }
  std::ofstream os(path);
  io::write_labelling(rec, os);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
}

std::string format_q(double q) {
  std::ostringstream os;
  os << std::setprecision(17) << q;
  return os.str();
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  InstanceOptions inst;
  std::optional<std::uint64_t> p;
  std::optional<double> q;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 0;
  std::size_t runs = 1;
  std::size_t threads = 1;
  std::uint64_t report_every = 0;
  bool detect_ad = false;
  bool shadow = false;
  std::string output;
};

int do_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  const Graph g = o.inst.graph();
  const auto sel = o.inst.selector();
  TargetKind tk = o.inst.target_kind(o.detect_ad);
  const bool sweep = tk.kind == LabellingKind::ad_antimagic && o.detect_ad &&
                     !(o.inst.a_opt->count() > 0 && o.inst.d_opt->count() > 0);
  if (sweep && o.max_iters == 0) throw UsageError("--detect-ad needs a finite --max-iters");
  if (sweep) {
    tk.a = 1;
    tk.d = 0;
  }
  validate_target(g, sel, tk);
  if (o.max_iters == 0)
    err << "warning: --max-iters 0 searches until a labelling is found and never stops if none "
           "exists\n";

  AnnealParams params;
  params.p = o.p;
  params.q = o.q;
  params.seed = o.seed;
  params.max_iters = o.max_iters;
  params.shadow_check = o.shadow;
  params.report_every = o.report_every;
  std::mutex progress_mutex;
  if (o.report_every > 0)
    params.progress = [&](const AnnealProgress& pr) {
      std::lock_guard lock(progress_mutex);
      err << "seed " << pr.seed << " iteration " << pr.iteration << " value " << pr.value
          << " best " << pr.best << '\n';
    };

  std::vector<TargetKind> attempts;
  if (sweep) {
    for (auto [a, d] : progression_candidates(g, sel, tk.target)) {
      if (d == 0) continue;  // constant weights are the magic case
      TargetKind t = tk;
      t.a = a;
      t.d = d;
      attempts.push_back(t);
    }
    err << "sweeping " << attempts.size() << " (a,d) candidates\n";
  } else {
    attempts.push_back(tk);
  }

  std::optional<MultiStartResult> result;
  for (const auto& t : attempts) {
    auto r = multi_start(g, sel, t, objective_for(t), params, o.runs, o.threads);
    const bool better = !result || r.best.value < result->best.value;
    if (better) {
      result = std::move(r);
      tk = t;
    }
    if (result->best.solved) break;
  }
  if (!result) throw UsageError("no (a,d) candidate survives the weight bounds");

  const auto& best = result->best;
  const auto obj = objective_for(tk);
  const auto [p, q] = resolve_pq(params, best.labelling.n());
  const auto report = verify(g, best.labelling, sel, tk);

  out << "instance: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
      << g.face_count() << " faces; n = " << best.labelling.n() << '\n';
  out << "objective: " << family_of(obj) << " on " << io::element_class_word(tk.target);
  if (tk.kind == LabellingKind::ad_antimagic) out << " (a=" << tk.a << ", d=" << tk.d << ")";
  out << '\n';
  out << "rng: " << best.rng << " seed " << best.seed << '\n';
  out << "iterations: " << best.iterations << " accepted: " << best.accepted
      << " worse-accepted: " << best.worse_accepted << '\n';
  if (o.runs > 1)
    out << "runs: " << o.runs << " solved: " << result->solved_count()
        << " mean iterations: " << result->mean_iterations() << '\n';
  if (best.no_legal_swap) out << "note: no label swap is possible for this instance\n";
  out << "result: " << (best.solved ? "solved" : "unsolved");
  if (!best.solved) out << " (objective value " << best.value << ")";
  out << '\n';
  if (report.magic_constant) out << "magic constant " << *report.magic_constant << '\n';
  if (best.solved && report.detected_ad && tk.kind != LabellingKind::magic)
    out << "weights form progression a=" << report.detected_ad->first
        << " d=" << report.detected_ad->second << '\n';

  auto rec = io::make_record(best.labelling, sel, tk, report, best.value);
  rec.meta["source"] = o.inst.source();
  rec.meta["rng"] = std::string(best.rng);
  rec.meta["seed"] = std::to_string(best.seed);
  rec.meta["iterations"] = std::to_string(best.iterations);
  rec.meta["accepted"] = std::to_string(best.accepted);
  rec.meta["worse_accepted"] = std::to_string(best.worse_accepted);
  rec.meta["p"] = std::to_string(p);
  rec.meta["q"] = format_q(q);
  write_record_to(rec, o.output, out);
  return best.solved ? kOk : kUnsolved;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  InstanceOptions inst;
  std::string labelling_path;
};

int do_verify(const VerifyOptions& o, std::ostream& out) {
  const Graph g = o.inst.graph();
  std::ifstream is(o.labelling_path);
  if (!is) throw io::FormatError("cannot open labelling file '" + o.labelling_path + "'");
  const auto rec = io::read_labelling(is);
  const auto l = rec.to_labelling(g);
  VerifyReport report;
  try {
    report = verify(g, l, rec.selector, rec.target);
  } catch (const LabellingError& e) {
    throw io::FormatError(std::string("labelling record is inconsistent: ") + e.what());
  }
  print_report(report, rec.target, out);

  bool attestation_ok = true;
  if (rec.attestation.kind != io::Attestation::Kind::unsolved) {
    const auto recomputed = io::attest(rec.target, report);
    attestation_ok = recomputed == rec.attestation;
    out << "attestation: " << (attestation_ok ? "reproduced" : "NOT reproduced") << '\n';
  } else {
    out << "attestation: producer reported unsolved\n";
  }
  const bool accepted = report.accepted() && attestation_ok;
  out << "result: " << (accepted ? "accepted" : "rejected");
  if (!report.message.empty()) out << ": " << report.message;
  out << '\n';
  return accepted ? kOk : kUnsolved;
}

// ---------------------------------------------------------------- oracle

struct OracleOptions {
  InstanceOptions inst;
  std::string mode = "count";
  std::size_t limit = 10;
  std::uint64_t budget = 500'000'000;
  bool no_prune = false;
  std::string output;
};

int do_oracle(const OracleOptions& o, std::ostream& out) {
  const Graph g = o.inst.graph();
  OracleQuery q;
  q.selector = o.inst.selector();
  q.target = o.inst.target_kind();
  validate_target(g, q.selector, q.target);
  if (o.mode == "first") {
    q.mode = OracleMode::first;
  } else if (o.mode == "count") {
    q.mode = OracleMode::count;
  } else if (o.mode == "enumerate") {
    q.mode = OracleMode::enumerate;
    if (o.limit == 0) throw UsageError("--limit must be positive");
  } else {
    throw UsageError("--mode must be first, count or enumerate");
  }
  q.limit = o.limit;
  q.budget = o.budget;
  q.prune = !o.no_prune;
  const auto r = oracle_search(g, q);

  const char* status = r.status == OracleStatus::found            ? "found"
                       : r.status == OracleStatus::exhausted_none ? "exhausted-with-none"
                                                                  : "budget-exceeded";
  out << "status: " << status << '\n';
  out << "nodes: " << r.nodes << '\n';
  if (r.status == OracleStatus::budget_exceeded) return kBudget;
  out << "count: " << r.count << (q.mode == OracleMode::count ? "" : " (search stopped early)")
      << '\n';
  if (!r.census.empty()) {
    out << "census:\n";
    if (q.target.kind == LabellingKind::magic) {
      out << "  k count\n";
      for (const auto& [key, c] : r.census) out << "  " << key.a << ' ' << c << '\n';
    } else {
      out << "  a d count\n";
      for (const auto& [key, c] : r.census) {
        if (key.d < 0) {
          out << "  - - " << c << '\n';
        } else {
          out << "  " << key.a << ' ' << key.d << ' ' << c << '\n';
        }
      }
    }
  }
  for (std::size_t i = 0; i < r.labellings.size(); ++i) {
    const auto report = verify(g, r.labellings[i], q.selector, q.target);
    auto rec = io::make_record(r.labellings[i], q.selector, q.target, report);
    rec.meta["source"] = o.inst.source();
    if (!o.output.empty()) {
      const std::string path =
          r.labellings.size() == 1 ? o.output : o.output + "." + std::to_string(i + 1);
      write_record_to(rec, path, out);
    }
  }
  return r.status == OracleStatus::found ? kOk : kUnsolved;
}

// ---------------------------------------------------------------- export-ilp

struct ExportOptions {
  InstanceOptions inst;
  std::int64_t K = 0;
  CLI::Option* k_opt = nullptr;
  bool sweep = false;
  std::string output;
};

int do_export(const ExportOptions& o, std::ostream& out) {
  const Graph g = o.inst.graph();
  const auto sel = o.inst.selector();
  const auto tk = o.inst.target_kind();
  if (tk.kind != LabellingKind::magic)
    throw UsageError("export-ilp only models magic labellings");
  validate_target(g, sel, tk);
  const bool fixed = o.k_opt->count() > 0;
  if (fixed == o.sweep) throw UsageError("give exactly one of --K or --sweep");

  auto emit = [&](std::int64_t K, const std::string& path) {
    const auto m = ilp::build_ilp(g, sel, tk, K);
    if (path.empty() || path == "-") {
      ilp::write_lp(m, out);
      return;
    }
    std::ofstream os(path);
    ilp::write_lp(m, os);
    if (!os) throw std::runtime_error("cannot write '" + path + "'");
    out << path << ": " << m.binary_count() << " binaries, " << m.continuous_count()
        << " continuous, " << m.constraints.size() << " constraints\n";
  };

  if (fixed) {
    emit(o.K, o.output);
    return kOk;
  }
  if (o.output.empty() || o.output == "-") throw UsageError("--sweep needs -o <prefix>");
  const auto [lo, hi] = feasible_magic_interval(g, sel, tk.target);
  for (auto K = lo; K <= hi; ++K) emit(K, o.output + ".K" + std::to_string(K) + ".lp");
  return kOk;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
  std::vector<std::string> spec;
  bool faces = false;
  std::string output;
};

int do_gen(const GenOptions& o, std::ostream& out) {
  Graph g;
  try {
    g = graph_from_spec(o.spec, o.faces);
  } catch (const GraphError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.output.empty() || o.output == "-") {
    io::write_graph(g, out);
  } else {
    io::save_graph(g, o.output);
  }
  return kOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string family;
  std::vector<std::size_t> points;
  std::size_t max_vertices = 50;
  std::size_t runs = 8;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 0;
  std::size_t threads = 1;
  bool force = false;
  bool no_wall_time = false;
  std::string csv;
};

int do_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  bench::Options opt;
  const auto fam = bench::parse_family(o.family);
  if (!fam) throw UsageError("unknown bench family '" + o.family + "'");
  opt.family = *fam;
  opt.points = o.points;
  if (opt.points.empty()) {
    if (*fam == bench::Family::kn_super_vmt) opt.points = {6, 7, 9, 10};
    if (*fam == bench::Family::p3power_antimagic) opt.points = {1, 2, 3};
  }
  opt.max_vertices = o.max_vertices;
  opt.runs = o.runs;
  opt.seed = o.seed;
  opt.max_iters = o.max_iters;
  opt.threads = o.threads;
  opt.force = o.force;

  std::ofstream file;
  std::ostream* csv = &out;
  if (!o.csv.empty() && o.csv != "-") {
    file.open(o.csv);
    if (!file) throw std::runtime_error("cannot write '" + o.csv + "'");
    csv = &file;
  }
  std::ostream& summary = csv == &out ? err : out;

  std::vector<bench::PointSummary> points;
  try {
    bench::instances(opt);
  } catch (const bench::GuardrailError& e) {
    throw UsageError(e.what());
  }
  if (o.max_iters == 0)
    err << "warning: --max-iters 0 lets unsolvable points run forever\n";
  *csv << io::kBenchHeader << '\n';
  points = bench::run(opt, [&](const io::BenchRecord& r) {
    io::write_bench_row(r, *csv, !o.no_wall_time);
  });
  csv->flush();

  summary << "param vertices edges runs solved mean_iterations\n";
  bool all_solved = true;
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    summary << p.param << ' ' << p.vertices << ' ' << p.edges << ' ' << p.runs << ' ' << p.solved
            << ' ' << p.mean_iterations << '\n';
    all_solved = all_solved && p.solved == p.runs;
    xs.push_back(p.x);
    ys.push_back(p.mean_iterations);
  }
  if (points.size() >= 2) {
    const auto lin = bench::linear_fit(xs, ys);
    summary << "linear fit: y = " << lin.slope << " x " << (lin.intercept < 0 ? "- " : "+ ")
            << std::abs(lin.intercept) << '\n';
    bool positive = true;
    for (auto y : ys) positive = positive && y > 0;
    if (positive) {
      const auto ex = bench::exponential_fit(xs, ys);
      summary << "exponential fit: y = " << ex.intercept << " e^(" << ex.slope << " x)\n";
    }
    summary << "x = " << (*fam == bench::Family::kn_super_vmt ? "n" : "edge count") << '\n';
  }
  return all_solved ? kOk : kUnsolved;
}

}  // namespace

Graph graph_from_spec(const std::vector<std::string>& spec, bool faces) {
  if (spec.empty()) throw std::invalid_argument("empty generator spec");
  const auto& family = spec[0];
  auto arg = [&](std::size_t i) {
    if (i >= spec.size())
      throw std::invalid_argument("generator '" + family + "' needs " + std::to_string(i) +
                                  " parameter(s)");
    return to_count(spec[i]);
  };
  auto arity = [&](std::size_t n) {
    if (spec.size() != n + 1)
      throw std::invalid_argument("generator '" + family + "' takes " + std::to_string(n) +
                                  " parameter(s)");
  };
  if (family == "complete") return arity(1), gen::complete_graph(arg(1));
  if (family == "path") return arity(1), gen::path(arg(1));
  if (family == "cycle") return arity(1), gen::cycle(arg(1), faces);
  if (family == "wheel") return arity(1), gen::wheel(arg(1), faces);
  if (family == "petersen") return arity(2), gen::generalized_petersen(arg(1), arg(2));
  if (family == "grid-p2p3") return arity(2), gen::p2_p3_product(arg(1), arg(2));
  if (family == "p3power") return arity(1), gen::power(gen::path(3), arg(1));
  if (family == "cube") return arity(1), gen::power(gen::path(2), arg(1));
  if (family == "tree") return arity(2), gen::random_labelled_tree(arg(1), arg(2));
  throw std::invalid_argument("unknown generator '" + family +
                              "' (complete, path, cycle, wheel, petersen, grid-p2p3, p3power, "
                              "cube, tree)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search, verify and model magic and antimagic graph labellings"};
  app.name(args.empty() ? "maglab" : args[0]);
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("maglab 1.0 (kernels: ") +
                                        std::string(kernels::active().isa) + ")");

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Search for a labelling by simulated annealing");
  solve.inst.add_graph(s);
  solve.inst.add_labelling(s, true);
  s->add_option("--p", solve.p, "Misses before a worse swap may be accepted");
  s->add_option("--q", solve.q, "Probability of accepting a worse swap");
  s->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  s->add_option("--max-iters", solve.max_iters, "Iteration cap, 0 = unbounded")
      ->capture_default_str();
  s->add_option("--runs", solve.runs, "Independent runs with seeds seed..seed+runs-1")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--threads", solve.threads, "Worker threads for --runs")->capture_default_str();
  s->add_option("--report-every", solve.report_every, "Progress line stride on stderr");
  s->add_flag("--detect-ad", solve.detect_ad, "With --kind ad: sweep candidate (a,d) pairs");
  s->add_flag("--shadow-check", solve.shadow, "Cross-check every step by full recomputation");
  s->add_option("-o,--output", solve.output, "Labelling file to write ('-' for stdout)");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Check a labelling file against a graph");
  ver.inst.add_graph(v);
  v->add_option("--labelling,-l", ver.labelling_path, "Labelling file")->required();

  OracleOptions ora;
  auto* o = app.add_subcommand("oracle", "Exhaustive search on a small instance");
  ora.inst.add_graph(o);
  ora.inst.add_labelling(o, true);
  o->add_option("--mode", ora.mode, "first, count or enumerate")->capture_default_str();
  o->add_option("--limit", ora.limit, "Labellings kept in enumerate mode")->capture_default_str();
  o->add_option("--budget", ora.budget, "Cap on label assignments")->capture_default_str();
  o->add_flag("--no-prune", ora.no_prune, "Walk every bijection without pruning");
  o->add_option("-o,--output", ora.output, "Write found labelling(s) here");

  ExportOptions exp;
  auto* x = app.add_subcommand("export-ilp", "Write the integer program of a magic labelling");
  exp.inst.add_graph(x);
  exp.inst.add_labelling(x, true);
  exp.k_opt = x->add_option("--K", exp.K, "Magic constant");
  x->add_flag("--sweep", exp.sweep, "One model per K in the feasible interval");
  x->add_option("-o,--output", exp.output, "Output file (prefix with --sweep)");

  GenOptions gen_opts;
  auto* gcmd = app.add_subcommand("gen", "Write a generated graph");
  gcmd->add_option("spec", gen_opts.spec, "Family and parameters")->required()->expected(1, 3);
  gcmd->add_flag("--faces", gen_opts.faces, "Attach faces (cycle and wheel)");
  gcmd->add_option("-o,--output", gen_opts.output, "Graph file to write");

  BenchOptions bo;
  auto* b = app.add_subcommand("bench", "Iteration-count benchmark over a graph family");
  b->add_option("--family", bo.family, "kn-super-vmt, p3power-antimagic or p2p3-antimagic")
      ->required();
  b->add_option("--points", bo.points, "Comma-separated n or k values")->delimiter(',');
  b->add_option("--max-vertices", bo.max_vertices, "p2p3-antimagic: 2^r 3^s below this")
      ->capture_default_str();
  b->add_option("--runs", bo.runs, "Runs per point")->capture_default_str()->check(
      CLI::PositiveNumber);
  b->add_option("--seed", bo.seed, "First seed")->capture_default_str();
  b->add_option("--max-iters", bo.max_iters, "Iteration cap per run")->capture_default_str();
  b->add_option("--threads", bo.threads, "Worker threads per point")->capture_default_str();
  b->add_flag("--force", bo.force, "Allow points outside the default range");
  b->add_flag("--no-wall-time", bo.no_wall_time, "Write NA for wall time (reproducible CSV)");
  b->add_option("--csv", bo.csv, "CSV output file (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("maglab");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (s->parsed()) return do_solve(solve, out, err);
    if (v->parsed()) return do_verify(ver, out);
    if (o->parsed()) return do_oracle(ora, out);
    if (x->parsed()) return do_export(exp, out);
    if (gcmd->parsed()) return do_gen(gen_opts, out);
    if (b->parsed()) return do_bench(bo, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LabellingError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AnnealError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace maglab::cli
