#ifndef BERGE_EXPERIMENT_HPP
#define BERGE_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "berge/audit.hpp"
#include "berge/hamilton.hpp"
#include "berge/matching.hpp"

namespace berge {

struct Grid {
  std::vector<std::size_t> n;
  std::vector<unsigned> r{3};
  std::vector<double> c;
  std::vector<double> p;
  std::vector<double> gamma;
  std::vector<double> rho;
};

struct ExperimentManifest {
  std::string command;
  Grid grid;
  std::size_t trials = 1;
  std::uint64_t master_seed = 1;
  std::string output;
  std::string cert_dir;  // empty: no certificate files
};

void to_json(nlohmann::json& j, const ExperimentManifest& m);
void from_json(const nlohmann::json& j, ExperimentManifest& m);
ExperimentManifest load_manifest(const std::string& path);

/// Per-trial seed; pure in its arguments.
std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial);

/// BERGE_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(0..count-1) on worker_count() threads. Each index runs exactly once.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// (r-1)! (ln n + c) / n^(r-1), clamped to [0, 1].
double poole_p(std::size_t n, unsigned r, double c);

struct SweepRow {
  std::size_t n = 0;
  unsigned r = 3;
  std::optional<double> c;
  double p = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t undecided = 0;
  std::string warning;  // non-empty: the cell was skipped
};

struct SweepOptions {
  std::size_t oracle_max_n = 10;
  std::size_t max_n = 2000;
  SearchOptions search;
};

/// Weak Hamiltonicity of H^(r)(n, p) per grid cell. Cells come from n x r x c,
/// then n x r x p for explicit probabilities.
std::vector<SweepRow> threshold_sweep(const ExperimentManifest& m, const SweepOptions& opts = {});
std::string format_sweep_csv(const std::vector<SweepRow>& rows, const std::string& header);

struct AttackRow {
  std::size_t n = 0;
  unsigned r = 3;
  double p = 0.0;
  std::string attack;  // "bipartition" or "trim"
  double rho = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t min_degree = 0;
  double degree_ratio = 0.0;  // min degree / (p C(n-1, r-1))
  SolveStatus status = SolveStatus::search_exhausted;
  std::string solver;
  std::string certificate;  // file name, when written
};

struct AttackOptions {
  std::size_t oracle_max_n = 10;
  std::size_t pipeline_min_n = 100;
  PipelineConfig pipeline = PipelineConfig::desk();
};

/// For every (n, r, p) cell and trial: one bipartition row, then one trim row per rho.
std::vector<AttackRow> resilience_attack(const ExperimentManifest& m,
                                         const AttackOptions& opts = {});
std::string format_attack_csv(const std::vector<AttackRow>& rows, const std::string& header);

/// 0 valid, 1 invalid (first violation written to `out`), 2 parse error or k != n.
int check_certificate(const std::string& certificate_text, const std::string& hypergraph_text,
                      std::ostream& out);

nlohmann::json to_json_value(const BergePath& w, WalkMode mode);
nlohmann::json to_json_value(const SolveResult& r);
nlohmann::json to_json_value(const PseudorandomReport& r);
nlohmann::json to_json_value(const CodegreeCheck& c);
nlohmann::json to_json_value(const PropertyCheck& c);
nlohmann::json to_json_value(const PairMatching& m);
nlohmann::json to_json_value(const TwoMatching& m);
nlohmann::json to_json_value(const PipelineConfig& cfg);
/// Overrides fields of `base` present in `j` (same keys as to_json_value).
PipelineConfig pipeline_from_json(const nlohmann::json& j, PipelineConfig base = PipelineConfig::desk());

/// "# " prefixed provenance lines: tool version, command, resolved configuration.
std::string provenance_header(const std::string& command, const nlohmann::json& config);

std::string version_string();

}  // namespace berge

#endif
