#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permlab/errors.hpp"
#include "permlab/experiments.hpp"

namespace {

struct CliOptions {
  std::string config;
  double gamma = 0.0;
  std::string n;
  std::int64_t b = 0;
  std::string b_rule;
  std::string x_grid;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  bool deterministic = false;
  int workers = -1;
  std::string method;
  std::int64_t exact_upto = -1;
};

void add_common_options(CLI::App* sub, CliOptions* opts) {
  sub->add_option("--config", opts->config,
                  "JSON config file; explicit flags override its values");
  sub->add_option("--gamma", opts->gamma, "weight exponent, theta_m = m^gamma");
  sub->add_option("--n", opts->n,
                  "permutation size: int, comma list, or grid a:b:mult");
  sub->add_option("--b", opts->b, "number of leading cycle counts");
  sub->add_option("--b-rule", opts->b_rule,
                  "b as an expression in n, e.g. n^0.25 or 0.5*n^0.5");
  sub->add_option("--x-grid", opts->x_grid,
                  "comma list of cutoff multipliers for fclt");
  sub->add_option("--samples", opts->samples, "Monte Carlo sample count");
  sub->add_option("--seed", opts->seed, "64-bit seed (required for sampling)");
  sub->add_option("--out", opts->out, "output path; - for stdout");
  sub->add_option("--format", opts->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--deterministic", opts->deterministic,
                "suppress the timestamp header field");
  sub->add_option("--workers", opts->workers,
                  "worker threads (0 = hardware concurrency)");
  sub->add_option("--method", opts->method, "sampler: recursive or rejection")
      ->check(CLI::IsMember({"recursive", "rejection"}));
  sub->add_option("--exact-upto", opts->exact_upto,
                  "hn-check: emit exact rationals for n up to this bound");
}

permlab::ExperimentConfig build_config(const CLI::App& sub,
                                       const CliOptions& opts,
                                       permlab::ExperimentKind kind) {
  permlab::ExperimentConfig cfg;
  if (sub.count("--config") > 0)
    cfg = permlab::load_config_file(opts.config);
  cfg.kind = kind;
  if (sub.count("--gamma") > 0) cfg.gamma = opts.gamma;
  if (sub.count("--n") > 0) cfg.n_grid = permlab::parse_n_grid(opts.n);
  if (sub.count("--b") > 0) cfg.b = opts.b;
  if (sub.count("--b-rule") > 0) cfg.b_rule = opts.b_rule;
  if (sub.count("--x-grid") > 0)
    cfg.x_grid = permlab::parse_x_grid(opts.x_grid);
  if (sub.count("--samples") > 0) cfg.samples = opts.samples;
  if (sub.count("--seed") > 0) cfg.seed = opts.seed;
  if (sub.count("--out") > 0) cfg.out_path = opts.out;
  if (sub.count("--format") > 0)
    cfg.format = opts.format == "json" ? permlab::OutputFormat::kJson
                                       : permlab::OutputFormat::kCsv;
  if (opts.deterministic) cfg.deterministic = true;
  if (sub.count("--workers") > 0) cfg.workers = opts.workers;
  if (sub.count("--method") > 0)
    cfg.method = opts.method == "rejection"
                     ? permlab::SampleMethod::kRejection
                     : permlab::SampleMethod::kRecursive;
  if (sub.count("--exact-upto") > 0) cfg.exact_upto = opts.exact_upto;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permlab: exact and asymptotic statistics of random permutations with "
      "cycle weights theta_m = m^gamma"};
  app.require_subcommand(1);

  struct SubEntry {
    CLI::App* sub;
    permlab::ExperimentKind kind;
    CliOptions opts;
  };
  std::vector<SubEntry> subs;
  const std::pair<const char*, const char*> kinds[] = {
      {"hn-check", "normalization constants: recurrence vs asymptotics"},
      {"tv-table", "total variation distance d_b(n) by exact lattice DP"},
      {"sample", "dump sampled cycle types with order statistics"},
      {"clt-order", "central limit behavior of log O_n"},
      {"closeness", "tail probability of Delta_n = log Y_n - log O_n"},
      {"fclt", "functional CLT for the partial order process"},
      {"oracle-dump", "exact enumeration law for small n"},
  };
  subs.reserve(std::size(kinds));
  for (const auto& [name, desc] : kinds) {
    SubEntry entry{app.add_subcommand(name, desc),
                   permlab::kind_from_name(name), {}};
    subs.push_back(entry);
  }
  for (auto& entry : subs) add_common_options(entry.sub, &entry.opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& entry : subs) {
      if (entry.sub->parsed()) {
        const permlab::ExperimentConfig cfg =
            build_config(*entry.sub, entry.opts, entry.kind);
        permlab::run_and_write(cfg);
        return 0;
      }
    }
    std::cerr << "permlab: no subcommand given\n";
    return 2;
  } catch (const permlab::config_error& e) {
    std::cerr << "permlab: config error: " << e.what() << '\n';
    return 2;
  } catch (const permlab::numeric_error& e) {
    std::cerr << "permlab: numeric diagnostic: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "permlab: error: " << e.what() << '\n';
    return 2;
  }
}
