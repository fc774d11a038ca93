// berge-lab: generation, audits, solvers, certificate checks and batch experiments.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "berge/audit.hpp"
#include "berge/experiment.hpp"
#include "berge/generate.hpp"
#include "berge/hamilton.hpp"
#include "berge/io.hpp"

using namespace berge;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string commented(const std::string& header, const std::string& body) {
  return header + body + (body.empty() || body.back() == '\n' ? "" : "\n");
}

struct GenArgs {
  std::size_t n = 0;
  unsigned r = 3;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool complete = false;
  std::string adversary = "none";
  double rho = 0.0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  if (a.r < 2 || a.n < a.r) throw ParameterError("need r >= 2 and n >= r");
  if (!(a.p >= 0.0 && a.p <= 1.0)) throw ParameterError("p must lie in [0, 1]");
  Hypergraph h = a.complete ? complete_hypergraph(a.n, a.r) : gen_random_hypergraph(a.n, a.r, a.p, a.seed);
  json extra;
  if (a.adversary == "bipartition") {
    BipartitionResult b = adversary_bipartition(h, a.seed ^ 0xb1);
    extra = {{"part1", b.part1}, {"part2", b.part2}};
    h = std::move(b.graph);
  } else if (a.adversary == "trim") {
    h = adversary_degree_trim(h, a.rho, a.seed ^ 0x7e).graph;
  }
  const json cfg{{"n", a.n}, {"r", a.r}, {"p", a.complete ? 1.0 : a.p}, {"seed", a.seed},
                 {"complete", a.complete}, {"adversary", a.adversary}, {"rho", a.rho},
                 {"partition", extra}};
  emit(a.out, commented(provenance_header("gen", cfg), format_hypergraph(h)));
  return 0;
}

struct AuditArgs {
  std::string in;
  double eps = 0.5;
  double p = -1.0;
  std::uint64_t budget = 20000;
  std::uint64_t seed = 1;
  std::string mode = "auto";
  std::size_t max_set = 5;
  double codegree_bound = -1.0;
  std::string out;
};

int run_audit(const AuditArgs& a) {
  const Hypergraph h = read_hypergraph_file(a.in);
  const double slots = binom(static_cast<double>(h.n()), h.r());
  const double p = a.p >= 0.0 ? a.p : (slots > 0.0 ? static_cast<double>(h.num_edges()) / slots : 0.0);
  AuditOptions opts;
  opts.max_set_size = a.max_set;
  if (a.mode == "exhaustive") opts.mode = AuditMode::exhaustive;
  else if (a.mode == "sampled") opts.mode = AuditMode::sampled;
  PseudorandomReport rep = audit_pseudorandom(h, a.eps, p, a.budget, a.seed, opts);
  if (a.codegree_bound >= 0.0) rep.codegree = check_codegree(h, a.codegree_bound);
  const json cfg{{"input", a.in}, {"eps", a.eps}, {"p", p}, {"budget", a.budget},
                 {"seed", a.seed}, {"mode", a.mode}, {"max_set", a.max_set}};
  emit(a.out, commented(provenance_header("audit", cfg), to_json_value(rep).dump(2)));
  return rep.pass() ? 0 : 1;
}

struct SolveArgs {
  std::string in;
  std::string mode = "berge-dense";
  std::uint64_t seed = 1;
  double gamma = 0.1;
  std::string config;
  std::string cert;
  std::string out;
  bool override_cap = false;
};

int run_solve(const SolveArgs& a) {
  const Hypergraph h = read_hypergraph_file(a.in);
  json cfg{{"input", a.in}, {"mode", a.mode}, {"seed", a.seed}, {"gamma", a.gamma}};
  SolveResult res;
  if (a.mode == "weak-dense") {
    res = weak_hamilton_dense(h);
  } else if (a.mode == "berge-dense") {
    res = berge_hamilton_dense(h);
  } else if (a.mode == "weak-search") {
    SearchOptions so;
    so.seed = a.seed;
    res = weak_hamilton_search(h, so);
  } else if (a.mode == "brute-weak" || a.mode == "brute-berge") {
    BruteForceOptions bo;
    bo.override_cap = a.override_cap;
    res = brute_force(h, a.mode == "brute-weak" ? WalkMode::weak : WalkMode::berge, bo);
  } else {
    PipelineConfig pc = PipelineConfig::desk();
    if (!a.config.empty()) pc = pipeline_from_json(json::parse(read_all(a.config)), pc);
    pc.seed = a.seed;
    pc.gamma = a.gamma;
    cfg["pipeline"] = to_json_value(pc);
    res = berge_hamilton_resilient(h, pc);
  }
  const std::string header = provenance_header("solve", cfg);
  if (res.certificate && !a.cert.empty()) {
    write_text_file(a.cert, header + format_certificate(*res.certificate, res.mode));
  }
  emit(a.out, commented(header, to_json_value(res).dump(2)));
  return exit_code(res.status);
}

int run_check(const std::string& cert, const std::string& graph) {
  std::string cert_text, graph_text;
  try {
    cert_text = read_all(cert);
    graph_text = read_all(graph);
  } catch (const ParseError& err) {
    std::cout << err.what() << "\n";
    return 2;
  }
  return check_certificate(cert_text, graph_text, std::cout);
}

ExperimentManifest manifest_for(const std::string& path, const std::string& command,
                                const std::string& out, const std::string& cert_dir) {
  ExperimentManifest m = load_manifest(path);
  if (!m.command.empty() && m.command != command) {
    throw ParameterError("manifest is for '" + m.command + "', not '" + command + "'");
  }
  m.command = command;
  if (!out.empty()) m.output = out;
  if (!cert_dir.empty()) m.cert_dir = cert_dir;
  if (m.grid.n.empty()) throw ParameterError("manifest grid needs at least one n");
  if (m.trials == 0) throw ParameterError("trials must be positive");
  return m;
}

int run_sweep(const std::string& path, const std::string& out, const std::string& cert_dir) {
  const ExperimentManifest m = manifest_for(path, "threshold-sweep", out, cert_dir);
  const auto rows = threshold_sweep(m);
  for (const SweepRow& row : rows) {
    if (!row.warning.empty()) std::cerr << "warning: skipped cell n=" << row.n << ": " << row.warning << "\n";
  }
  emit(m.output, format_sweep_csv(rows, provenance_header("threshold-sweep", json(m))));
  return 0;
}

int run_attack(const std::string& path, const std::string& out, const std::string& cert_dir) {
  const ExperimentManifest m = manifest_for(path, "resilience-attack", out, cert_dir);
  AttackOptions opts;
  json cfg = json(m);
  cfg["pipeline"] = to_json_value(opts.pipeline);
  emit(m.output, format_attack_csv(resilience_attack(m, opts),
                                   provenance_header("resilience-attack", cfg)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge Hamiltonicity laboratory for r-uniform hypergraphs"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate H^(r)(n, p), optionally attacked");
  g->add_option("--n", gen.n, "vertices")->required()->check(CLI::PositiveNumber);
  g->add_option("--r", gen.r, "uniformity")->check(CLI::Range(2u, 16u));
  g->add_option("--p", gen.p, "edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "seed");
  g->add_flag("--complete", gen.complete, "complete hypergraph");
  g->add_option("--adversary", gen.adversary, "none | bipartition | trim")
      ->check(CLI::IsMember({"none", "bipartition", "trim"}));
  g->add_option("--rho", gen.rho, "trim fraction")->check(CLI::Range(0.0, 1.0));
  g->add_option("-o,--out", gen.out, "output file (default stdout)");

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Pseudorandomness and codegree audit");
  au->add_option("--in", audit.in, "hypergraph file")->required();
  au->add_option("--eps,--gamma", audit.eps, "epsilon")->check(CLI::Range(0.0, 1.0));
  au->add_option("--p", audit.p, "p (default: edge density)");
  au->add_option("--budget", audit.budget, "sampled pair budget");
  au->add_option("--seed", audit.seed, "seed");
  au->add_option("--mode", audit.mode, "auto | exhaustive | sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  au->add_option("--max-set", audit.max_set, "exhaustive set-size cap");
  au->add_option("--codegree-bound", audit.codegree_bound, "codegree bound (default 2 ln n)");
  au->add_option("-o,--out", audit.out, "output file (default stdout)");

  SolveArgs solve;
  auto* so = app.add_subcommand("solve", "Search for a Hamilton cycle");
  so->add_option("--in", solve.in, "hypergraph file")->required();
  so->add_option("--mode", solve.mode,
                 "weak-dense | berge-dense | weak-search | resilient | brute-weak | brute-berge")
      ->check(CLI::IsMember(
          {"weak-dense", "berge-dense", "weak-search", "resilient", "brute-weak", "brute-berge"}));
  so->add_option("--seed", solve.seed, "seed");
  so->add_option("--gamma", solve.gamma, "gamma")->check(CLI::Range(0.0, 1.0));
  so->add_option("--config", solve.config, "pipeline config JSON")->check(CLI::ExistingFile);
  so->add_option("--cert", solve.cert, "certificate output file");
  so->add_flag("--override-cap", solve.override_cap, "allow brute force beyond n = 10");
  so->add_option("-o,--out", solve.out, "result JSON (default stdout)");

  std::string cert_file, graph_file;
  auto* ch = app.add_subcommand("check", "Re-validate a certificate");
  ch->add_option("certificate", cert_file)->required();
  ch->add_option("hypergraph", graph_file)->required();

  std::string manifest, out, cert_dir;
  auto* sw = app.add_subcommand("threshold-sweep", "Weak Hamiltonicity threshold sweep");
  auto* ra = app.add_subcommand("resilience-attack", "Adversarial deletion experiments");
  for (auto* sub : {sw, ra}) {
    sub->add_option("--manifest", manifest, "manifest JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--out", out, "output CSV (overrides manifest)");
    sub->add_option("--cert-dir", cert_dir, "certificate directory (overrides manifest)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*au) return run_audit(audit);
    if (*so) return run_solve(solve);
    if (*ch) return run_check(cert_file, graph_file);
    if (*sw) return run_sweep(manifest, out, cert_dir);
    if (*ra) return run_attack(manifest, out, cert_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
