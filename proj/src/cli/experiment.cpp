#include "berge/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "berge/generate.hpp"
#include "berge/io.hpp"
#include "berge/rng.hpp"

namespace berge {

using nlohmann::json;

void to_json(json& j, const ExperimentManifest& m) {
  j = json{{"command", m.command},
           {"grid",
            {{"n", m.grid.n},
             {"r", m.grid.r},
             {"c", m.grid.c},
             {"p", m.grid.p},
             {"gamma", m.grid.gamma},
             {"rho", m.grid.rho}}},
           {"trials", m.trials},
           {"master_seed", m.master_seed},
           {"output", m.output},
           {"cert_dir", m.cert_dir}};
}

void from_json(const json& j, ExperimentManifest& m) {
  m = ExperimentManifest{};
  m.command = j.value("command", std::string{});
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    m.grid.n = g.value("n", std::vector<std::size_t>{});
    m.grid.r = g.value("r", std::vector<unsigned>{3});
    m.grid.c = g.value("c", std::vector<double>{});
    m.grid.p = g.value("p", std::vector<double>{});
    m.grid.gamma = g.value("gamma", std::vector<double>{});
    m.grid.rho = g.value("rho", std::vector<double>{});
  }
  m.trials = j.value("trials", std::size_t{1});
  m.master_seed = j.value("master_seed", std::uint64_t{1});
  m.output = j.value("output", std::string{});
  m.cert_dir = j.value("cert_dir", std::string{});
}

ExperimentManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest " + path);
  try {
    return json::parse(in).get<ExperimentManifest>();
  } catch (const json::exception& err) {
    throw ParseError("bad manifest " + path + ": " + err.what());
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial) {
  return Rng::derive(master, cell, trial);
}

unsigned worker_count() {
  if (const char* env = std::getenv("BERGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double poole_p(std::size_t n, unsigned r, double c) {
  const double nn = static_cast<double>(n);
  const double p = factorial(r - 1) * (std::log(nn) + c) / std::pow(nn, r - 1.0);
  return std::clamp(p, 0.0, 1.0);
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

void write_pair(const std::string& dir, const std::string& stem, const Hypergraph& h,
                const BergePath& w, WalkMode mode) {
  std::filesystem::create_directories(dir);
  write_text_file(dir + "/" + stem + ".hg", format_hypergraph(h));
  write_text_file(dir + "/" + stem + ".cert", format_certificate(w, mode));
}

std::size_t min_degree(const Hypergraph& h) {
  std::size_t best = h.n() ? h.degree(0) : 0;
  for (Vertex v = 1; v < h.n(); ++v) best = std::min(best, h.degree(v));
  return best;
}

}  // namespace

std::vector<SweepRow> threshold_sweep(const ExperimentManifest& m, const SweepOptions& opts) {
  std::vector<SweepRow> cells;
  for (std::size_t n : m.grid.n) {
    for (unsigned r : m.grid.r) {
      for (double c : m.grid.c) {
        SweepRow row;
        row.n = n;
        row.r = r;
        row.c = c;
        row.p = poole_p(n, r, c);
        cells.push_back(row);
      }
      for (double p : m.grid.p) {
        SweepRow row;
        row.n = n;
        row.r = r;
        row.p = p;
        cells.push_back(row);
      }
    }
  }
  for (SweepRow& cell : cells) {
    if (cell.r < 2 || cell.n < cell.r + 1) {
      cell.warning = "n must exceed r";
    } else if (cell.n > opts.max_n) {
      cell.warning = "n above the feasibility cap";
    } else if (!(cell.p >= 0.0 && cell.p <= 1.0)) {
      cell.warning = "p outside [0, 1]";
    }
  }

  // 0 = not Hamiltonian, 1 = Hamiltonian, 2 = undecided.
  std::vector<char> outcome(cells.size() * m.trials, 0);
  parallel_for(outcome.size(), [&](std::size_t job) {
    const std::size_t ci = job / m.trials;
    const std::size_t trial = job % m.trials;
    const SweepRow& cell = cells[ci];
    if (!cell.warning.empty()) return;
    const std::uint64_t seed = trial_seed(m.master_seed, ci, trial);
    const Hypergraph h = gen_random_hypergraph(cell.n, cell.r, cell.p, seed);
    SolveResult res;
    if (cell.n <= opts.oracle_max_n) {
      res = brute_force(h, WalkMode::weak);
    } else {
      res = weak_hamilton_dense(h);
      if (res.status != SolveStatus::found && res.status != SolveStatus::not_found) {
        SearchOptions so = opts.search;
        so.seed = Rng::derive(seed, 0x5e);
        res = weak_hamilton_search(h, so);
      }
    }
    if (res.status == SolveStatus::found) {
      outcome[job] = 1;
      if (!m.cert_dir.empty()) {
        write_pair(m.cert_dir, "sweep_c" + std::to_string(ci) + "_t" + std::to_string(trial), h,
                   *res.certificate, WalkMode::weak);
      }
    } else if (res.status != SolveStatus::not_found) {
      outcome[job] = 2;
    }
  });

  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    if (!cells[ci].warning.empty()) continue;
    cells[ci].trials = m.trials;
    for (std::size_t t = 0; t < m.trials; ++t) {
      const char o = outcome[ci * m.trials + t];
      if (o == 1) ++cells[ci].successes;
      if (o == 2) ++cells[ci].undecided;
    }
  }
  return cells;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows, const std::string& header) {
  std::ostringstream os;
  os << header;
  os << "n,r,c,p,trials,successes\n";
  std::ostringstream notes;
  for (const SweepRow& row : rows) {
    const std::string c = row.c ? fmt(*row.c) : "";
    if (!row.warning.empty()) {
      notes << "# warning: skipped n=" << row.n << " r=" << row.r << " c=" << c
            << " p=" << fmt(row.p) << ": " << row.warning << "\n";
      continue;
    }
    os << row.n << ',' << row.r << ',' << c << ',' << fmt(row.p) << ',' << row.trials << ','
       << row.successes << '\n';
    if (row.undecided) {
      notes << "# undecided n=" << row.n << " r=" << row.r << " c=" << c << ": "
            << row.undecided << " of " << row.trials << "\n";
    }
  }
  return os.str() + notes.str();
}

std::vector<AttackRow> resilience_attack(const ExperimentManifest& m, const AttackOptions& opts) {
  struct Cell {
    std::size_t n;
    unsigned r;
    double p;
  };
  std::vector<Cell> cells;
  for (std::size_t n : m.grid.n) {
    for (unsigned r : m.grid.r) {
      for (double p : m.grid.p.empty() ? std::vector<double>{1.0} : m.grid.p) {
        if (n < 2 * r || !(p > 0.0 && p <= 1.0)) {
          throw ParameterError("attack cell n=" + std::to_string(n) + " p=" + fmt(p) +
                               " is infeasible (need n >= 2r and 0 < p <= 1)");
        }
        cells.push_back({n, r, p});
      }
    }
  }
  const std::size_t per_trial = 1 + m.grid.rho.size();
  std::vector<AttackRow> rows(cells.size() * m.trials * per_trial);
  parallel_for(cells.size() * m.trials, [&](std::size_t job) {
    const std::size_t ci = job / m.trials;
    const std::size_t trial = job % m.trials;
    const Cell& cell = cells[ci];
    const std::uint64_t seed = trial_seed(m.master_seed, ci, trial);
    const Hypergraph base = cell.p >= 1.0 ? complete_hypergraph(cell.n, cell.r)
                                          : gen_random_hypergraph(cell.n, cell.r, cell.p, seed);
    const double norm = cell.p * binom(static_cast<double>(cell.n - 1), cell.r - 1);
    for (std::size_t k = 0; k < per_trial; ++k) {
      AttackRow& row = rows[job * per_trial + k];
      row.n = cell.n;
      row.r = cell.r;
      row.p = cell.p;
      row.trial = trial;
      row.seed = seed;
      const std::uint64_t attack_seed = Rng::derive(seed, 0xa7, k);
      Hypergraph h = [&] {
        if (k == 0) {
          row.attack = "bipartition";
          return adversary_bipartition(base, attack_seed).graph;
        }
        row.attack = "trim";
        row.rho = m.grid.rho[k - 1];
        return adversary_degree_trim(base, row.rho, attack_seed).graph;
      }();
      row.min_degree = min_degree(h);
      row.degree_ratio = norm > 0.0 ? static_cast<double>(row.min_degree) / norm : 0.0;
      SolveResult res;
      if (h.n() <= opts.oracle_max_n) {
        row.solver = "brute-berge";
        res = brute_force(h, WalkMode::berge);
      } else {
        row.solver = "berge-dense";
        res = berge_hamilton_dense(h);
        if ((res.status == SolveStatus::precondition_failed ||
             res.status == SolveStatus::search_exhausted) &&
            h.n() >= opts.pipeline_min_n) {
          PipelineConfig cfg = opts.pipeline;
          cfg.seed = Rng::derive(attack_seed, 0x91);
          SolveResult piped = berge_hamilton_resilient(h, cfg);
          if (piped.status == SolveStatus::found) {
            row.solver = "resilient";
            res = std::move(piped);
          }
        }
      }
      row.status = res.status;
      if (res.status == SolveStatus::found && !m.cert_dir.empty()) {
        row.certificate = "attack_c" + std::to_string(ci) + "_t" + std::to_string(trial) + "_" +
                          std::to_string(k);
        write_pair(m.cert_dir, row.certificate, h, *res.certificate, WalkMode::berge);
      }
    }
  });
  return rows;
}

std::string format_attack_csv(const std::vector<AttackRow>& rows, const std::string& header) {
  std::ostringstream os;
  os << header;
  os << "n,r,p,attack,rho,trial,seed,min_degree,degree_ratio,hamiltonian,status,solver,"
        "certificate\n";
  for (const AttackRow& row : rows) {
    os << row.n << ',' << row.r << ',' << fmt(row.p) << ',' << row.attack << ','
       << fmt(row.rho) << ',' << row.trial << ',' << row.seed << ',' << row.min_degree << ','
       << fmt(row.degree_ratio) << ',' << (row.status == SolveStatus::found ? 1 : 0) << ','
       << to_string(row.status) << ',' << row.solver << ',' << row.certificate << '\n';
  }
  return os.str();
}

int check_certificate(const std::string& certificate_text, const std::string& hypergraph_text,
                      std::ostream& out) {
  Certificate cert;
  Hypergraph h;
  try {
    cert = parse_certificate(certificate_text);
    h = parse_hypergraph(hypergraph_text);
  } catch (const ParseError& err) {
    out << "parse error: " << err.what() << "\n";
    return 2;
  }
  if (cert.walk.vertices.size() != h.n()) {
    out << "size mismatch: certificate has k=" << cert.walk.vertices.size()
        << ", hypergraph has n=" << h.n() << "\n";
    return 2;
  }
  const WalkReport rep = validate_walk(h, cert.walk, cert.mode);
  if (!rep.valid) {
    out << "invalid: " << rep.first_violation << "\n";
    return 1;
  }
  out << "valid " << (cert.mode == WalkMode::berge ? "berge" : "weak") << ' '
      << (cert.walk.closed ? "cycle" : "path") << " on " << h.n() << " vertices\n";
  return 0;
}

json to_json_value(const BergePath& w, WalkMode mode) {
  return json{{"mode", mode == WalkMode::berge ? "berge" : "weak"},
              {"closed", w.closed},
              {"vertices", w.vertices},
              {"edges", w.edges},
              {"text", format_certificate(w, mode)}};
}

json to_json_value(const SolveResult& r) {
  json stages = json::array();
  for (const StageOutcome& s : r.stats.stages) {
    stages.push_back(
        {{"stage", s.stage}, {"ok", s.ok}, {"detail", s.detail}, {"elapsed_ms", s.elapsed_ms}});
  }
  json j{{"status", to_string(r.status)},
         {"exit_code", exit_code(r.status)},
         {"certificate", r.certificate ? to_json_value(*r.certificate, r.mode) : json(nullptr)},
         {"stats",
          {{"nodes", r.stats.nodes},
           {"elapsed_ms", r.stats.elapsed_ms},
           {"precondition_met", r.stats.precondition_met},
           {"precondition", r.stats.precondition},
           {"incidentally_berge", r.stats.incidentally_berge},
           {"stages", stages}}}};
  if (r.stats.failure) {
    j["stats"]["failure"] = {{"stage", r.stats.failure->stage}, {"cause", r.stats.failure->cause}};
  }
  return j;
}

json to_json_value(const CodegreeCheck& c) {
  return json{{"pass", c.pass},
              {"max_codegree", c.max_codegree},
              {"bound", c.bound},
              {"witness", c.witness}};
}

json to_json_value(const PropertyCheck& c) {
  json j{{"pass", c.pass},
         {"mode", c.mode == AuditMode::sampled ? "sampled" : "exhaustive"},
         {"pairs_checked", c.pairs_checked},
         {"m", c.m},
         {"u_min", c.u_min},
         {"u_max", c.u_max},
         {"vacuous", c.vacuous}};
  if (c.witness) {
    j["witness"] = {{"T", c.witness->t},
                    {"U", c.witness->u},
                    {"observed", c.witness->observed},
                    {"bound", c.witness->bound}};
  }
  return j;
}

json to_json_value(const PseudorandomReport& r) {
  return json{{"pass", r.pass()},
              {"epsilon", r.epsilon},
              {"p", r.p},
              {"pairs_checked", r.pairs_checked},
              {"property_i", to_json_value(r.property_i)},
              {"property_ii", to_json_value(r.property_ii)},
              {"codegree", to_json_value(r.codegree)}};
}

json to_json_value(const PairMatching& m) {
  json a = json::array();
  for (const auto& e : m.pairs) {
    a.push_back({{"a", e.a},
                 {"b", e.b},
                 {"edge", e.edge},
                 {"pattern", e.pattern == EdgePattern::one_rest ? "1,r-1" : "r-1,1"}});
  }
  return a;
}

json to_json_value(const TwoMatching& m) {
  json a = json::array();
  for (const auto& e : m.entries) {
    a.push_back({{"a", e.a}, {"e", e.e}, {"f", e.f}, {"tau_e", e.tau_e}, {"tau_f", e.tau_f}});
  }
  return a;
}

namespace {

json connect_json(const ConnectConfig& c) {
  return json{{"gamma", c.gamma},
              {"min_block_size", c.min_block_size},
              {"parity", c.parity == Parity::odd ? "odd" : "even"},
              {"max_sample_attempts", c.max_sample_attempts},
              {"inheritance_slack", c.inheritance_slack},
              {"density_factor", c.density_factor},
              {"fixed_log", c.fixed_log},
              {"min_log", c.min_log},
              {"block_scale", c.block_scale},
              {"min_block_edges", c.min_block_edges},
              {"max_rounds", c.max_rounds},
              {"pool_factor", c.pool_factor},
              {"budget_scale", c.budget_scale}};
}

}  // namespace

json to_json_value(const PipelineConfig& cfg) {
  return json{{"gamma", cfg.gamma},
              {"seed", cfg.seed},
              {"z_size", cfg.z_size},
              {"c1", cfg.c1},
              {"z_min_edges", cfg.z_min_edges},
              {"y_size", cfg.y_size},
              {"y_coef", cfg.y_coef},
              {"y_exp", cfg.y_exp},
              {"w_min_share", cfg.w_min_share},
              {"attempts", cfg.attempts},
              {"relax", cfg.relax},
              {"c2", cfg.c2},
              {"w_min_block", cfg.w_min_block},
              {"cover_attempts", cfg.cover_attempts},
              {"sample_attempts", cfg.sample_attempts},
              {"sample_slack", cfg.sample_slack},
              {"density_factor", cfg.density_factor},
              {"absorber",
               {{"cycle_share", cfg.absorber.cycle_share},
                {"chord_share", cfg.absorber.chord_share},
                {"sample_attempts", cfg.absorber.sample_attempts},
                {"sample_slack", cfg.absorber.sample_slack},
                {"density_factor", cfg.absorber.density_factor},
                {"cycles", connect_json(cfg.absorber.cycles)},
                {"chords", connect_json(cfg.absorber.chords)}}},
              {"connector", connect_json(cfg.connector)},
              {"closing", connect_json(cfg.closing)}};
}

namespace {

template <class T>
void take(const json& j, const char* key, T& field) {
  if (j.contains(key)) field = j.at(key).get<T>();
}

void connect_from(const json& j, ConnectConfig& c) {
  take(j, "gamma", c.gamma);
  take(j, "min_block_size", c.min_block_size);
  if (j.contains("parity")) {
    const std::string p = j.at("parity").get<std::string>();
    if (p != "odd" && p != "even") throw ParameterError("parity must be odd or even");
    c.parity = p == "odd" ? Parity::odd : Parity::even;
  }
  take(j, "max_sample_attempts", c.max_sample_attempts);
  take(j, "inheritance_slack", c.inheritance_slack);
  take(j, "density_factor", c.density_factor);
  take(j, "fixed_log", c.fixed_log);
  take(j, "min_log", c.min_log);
  take(j, "block_scale", c.block_scale);
  take(j, "min_block_edges", c.min_block_edges);
  take(j, "max_rounds", c.max_rounds);
  take(j, "pool_factor", c.pool_factor);
  take(j, "budget_scale", c.budget_scale);
}

}  // namespace

PipelineConfig pipeline_from_json(const json& j, PipelineConfig cfg) {
  try {
    take(j, "gamma", cfg.gamma);
    take(j, "seed", cfg.seed);
    take(j, "z_size", cfg.z_size);
    take(j, "c1", cfg.c1);
    take(j, "z_min_edges", cfg.z_min_edges);
    take(j, "y_size", cfg.y_size);
    take(j, "y_coef", cfg.y_coef);
    take(j, "y_exp", cfg.y_exp);
    take(j, "w_min_share", cfg.w_min_share);
    take(j, "attempts", cfg.attempts);
    take(j, "relax", cfg.relax);
    take(j, "c2", cfg.c2);
    take(j, "w_min_block", cfg.w_min_block);
    take(j, "cover_attempts", cfg.cover_attempts);
    take(j, "sample_attempts", cfg.sample_attempts);
    take(j, "sample_slack", cfg.sample_slack);
    take(j, "density_factor", cfg.density_factor);
    if (j.contains("absorber")) {
      const json& a = j.at("absorber");
      take(a, "cycle_share", cfg.absorber.cycle_share);
      take(a, "chord_share", cfg.absorber.chord_share);
      take(a, "sample_attempts", cfg.absorber.sample_attempts);
      take(a, "sample_slack", cfg.absorber.sample_slack);
      take(a, "density_factor", cfg.absorber.density_factor);
      if (a.contains("cycles")) connect_from(a.at("cycles"), cfg.absorber.cycles);
      if (a.contains("chords")) connect_from(a.at("chords"), cfg.absorber.chords);
    }
    if (j.contains("connector")) connect_from(j.at("connector"), cfg.connector);
    if (j.contains("closing")) connect_from(j.at("closing"), cfg.closing);
  } catch (const json::exception& err) {
    throw ParameterError(std::string("bad pipeline config: ") + err.what());
  }
  return cfg;
}

std::string version_string() {
#ifdef BERGE_VERSION
  return BERGE_VERSION;
#else
  return "unknown";
#endif
}

std::string provenance_header(const std::string& command, const json& config) {
  std::ostringstream os;
  os << "# berge-lab " << version_string() << "\n";
  os << "# command: " << command << "\n";
  os << "# config: " << config.dump() << "\n";
  return os.str();
}

}  // namespace berge
