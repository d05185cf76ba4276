#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permlab/sampler.hpp"
#include "permlab/weights.hpp"

// Seeded, configuration-driven experiment runner behind the permlab CLI.
// Every run produces a table with a fixed per-kind column schema; records
// carry a provenance tag in {exact, dp, asymptotic, monte-carlo}. Re-running
// a config with the same seed is byte-identical under deterministic mode,
// independent of the worker count.

namespace permlab {

enum class ExperimentKind {
  kHnCheck,
  kTvTable,
  kSample,
  kCltOrder,
  kCloseness,
  kFclt,
  kOracleDump,
};

const char* kind_name(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);

enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kHnCheck;
  double gamma = 1.0;
  std::vector<std::int64_t> n_grid;
  std::optional<std::int64_t> b;
  std::string b_rule;          // expression in n, e.g. "n^0.25"
  std::vector<double> x_grid;  // fclt cutoff multipliers
  std::int64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  std::string out_path;  // empty or "-" means stdout
  OutputFormat format = OutputFormat::kCsv;
  bool deterministic = false;
  int workers = 0;  // 0 = hardware concurrency
  SampleMethod method = SampleMethod::kRecursive;  // sample kind only
  std::int64_t exact_upto = 0;                     // hn-check only
  // test hook: replace the power-law weights (not reachable from the CLI)
  std::optional<WeightSequence> weights_override;
};

// n-grid syntax: "200" | "200,400,800" | "200:3200:2" (geometric, inclusive)
std::vector<std::int64_t> parse_n_grid(const std::string& text);
// b-rule syntax: "7" | "n^0.25" | "floor(n^0.25)" | "0.5*n^0.5"
std::int64_t apply_b_rule(const std::string& rule, std::int64_t n);
std::vector<double> parse_x_grid(const std::string& text);

using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double,
                          std::string>;

struct ResultTable {
  ExperimentKind kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// throws config_error on invalid configs, numeric_error on diagnostics
ResultTable run_experiment(const ExperimentConfig& cfg);

// header comment line (with schema version, and a timestamp unless
// deterministic) followed by CSV rows, or a JSON document
void write_output(const ExperimentConfig& cfg, const ResultTable& table,
                  std::ostream& os);

// run + write to cfg.out_path (stdout when empty or "-")
void run_and_write(const ExperimentConfig& cfg);

// JSON config file mirroring ExperimentConfig; missing keys keep defaults
ExperimentConfig load_config_file(const std::string& path);

}  // namespace permlab
