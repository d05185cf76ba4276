#include "permlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "permlab/asymptotics.hpp"
#include "permlab/errors.hpp"
#include "permlab/format_util.hpp"
#include "permlab/order_stats.hpp"
#include "permlab/partition.hpp"
#include "permlab/poisson_lattice.hpp"
#include "permlab/special.hpp"
#include "permlab/stats.hpp"

namespace permlab {

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::int64_t kChunkSize = 512;
// recursive sampling needs the O(N^2) table; above this size fall back to the
// table-free rejection sampler
constexpr std::int64_t kMaxTableN = 262144;

struct KindInfo {
  ExperimentKind kind;
  const char* name;
};

constexpr KindInfo kKinds[] = {
    {ExperimentKind::kHnCheck, "hn-check"},
    {ExperimentKind::kTvTable, "tv-table"},
    {ExperimentKind::kSample, "sample"},
    {ExperimentKind::kCltOrder, "clt-order"},
    {ExperimentKind::kCloseness, "closeness"},
    {ExperimentKind::kFclt, "fclt"},
    {ExperimentKind::kOracleDump, "oracle-dump"},
};

bool is_stochastic(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kSample:
    case ExperimentKind::kCltOrder:
    case ExperimentKind::kCloseness:
    case ExperimentKind::kFclt:
      return true;
    default:
      return false;
  }
}

WeightSequence config_weights(const ExperimentConfig& cfg) {
  if (cfg.weights_override) return *cfg.weights_override;
  return WeightSequence::power_law(cfg.gamma);
}

int effective_workers(const ExperimentConfig& cfg) {
  if (cfg.workers > 0) return cfg.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// ---------------------------------------------------------------------------
// Monte Carlo harness: samples are split into fixed chunks; chunk c is drawn
// from Philox stream c regardless of which worker runs it, and results land
// in slot order, so output does not depend on the worker count.
// ---------------------------------------------------------------------------

using PerSampleFn =
    std::function<void(std::int64_t idx, const CycleType& ct,
                       OrderStatsAccumulator& acc)>;

void run_monte_carlo(const WeightSequence& w, double gamma, std::int64_t n,
                     std::int64_t samples, std::uint64_t seed, int workers,
                     SampleMethod method, const NormalizationTable* tab,
                     const MangoldtSieve& sieve, const PerSampleFn& fn) {
  const std::int64_t num_chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::optional<PoissonSpec> spec;
  if (method == SampleMethod::kRejection)
    spec = PoissonSpec::with_t(w, n, saddle_parameter(gamma > 0 ? gamma : 1.0, n));

  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  const int nw = std::max(1, workers);
  auto worker = [&]() {
    OrderStatsAccumulator acc(sieve);
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= num_chunks) return;
      CycleTypeSampler sampler =
          (method == SampleMethod::kRecursive)
              ? CycleTypeSampler::recursive(*tab, n, seed,
                                            static_cast<std::uint64_t>(c))
              : CycleTypeSampler::rejection(*spec, seed,
                                            static_cast<std::uint64_t>(c));
      const std::int64_t lo = c * kChunkSize;
      const std::int64_t hi = std::min(samples, lo + kChunkSize);
      for (std::int64_t idx = lo; idx < hi; ++idx) {
        const CycleType ct = sampler.sample();
        fn(idx, ct, acc);
      }
    }
  };
  if (nw == 1) {
    worker();
  } else {
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
}

// sup-distance plus the standard error of the ECDF at the maximizing point
struct KsWithSe {
  double d = 0.0;
  double se = 0.0;
};

KsWithSe ks_with_se(std::vector<double> sample, double mean, double sd) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  KsWithSe out;
  double q_at_max = 0.5;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = normal_cdf((sample[i] - mean) / sd);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n - f;
    if (lo > out.d) {
      out.d = lo;
      q_at_max = static_cast<double>(i) / n;
    }
    if (hi > out.d) {
      out.d = hi;
      q_at_max = static_cast<double>(i + 1) / n;
    }
  }
  // the ECDF value is a mean of indicators; sd(indicator)/sqrt(n)
  const double nn = sample.size();
  const double var_ind =
      q_at_max * (1.0 - q_at_max) * nn / std::max(1.0, nn - 1.0);
  out.se = std::sqrt(var_ind / nn);
  return out;
}

// standard error of a sample mean of v (sample-stddev / sqrt(n))
double se_of_mean(const std::vector<double>& v) {
  return mean_var(v).se_mean;
}

Cell none() { return std::monostate{}; }

// ---------------------------------------------------------------------------
// runners
// ---------------------------------------------------------------------------

ResultTable run_hn_check(const ExperimentConfig& cfg) {
  const WeightSequence w = config_weights(cfg);
  const std::int64_t max_n =
      *std::max_element(cfg.n_grid.begin(), cfg.n_grid.end());
  const std::int64_t exact_upto =
      std::min<std::int64_t>(cfg.exact_upto, max_n);
  const NormalizationTable tab = build_normalization_table(w, max_n, exact_upto);

  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"schema_version", "kind",
               "gamma",          "n",
               "log_h_n",        "h_n_exact",
               "log_h_n_asymptotic", "log_diff",
               "scaled_log_diff", "provenance"};
  for (std::int64_t n : cfg.n_grid) {
    const double log_h = tab.log_h(n);
    Cell exact = none();
    if (n <= tab.exact_upto()) exact = tab.exact_h(n).get_str();
    Cell asym = none(), diff = none(), scaled = none();
    if (!cfg.weights_override) {
      const HnAsymptotic a = hn_asymptotic(cfg.gamma, n);
      asym = a.log_value;
      diff = log_h - a.log_value;
      scaled = (log_h - a.log_value) / a.error_scale;
    } else if (cfg.weights_override->kind() == WeightSequence::Kind::Uniform) {
      // h_n = 1 identically for the uniform hook
      asym = 0.0;
      diff = log_h;
      scaled = log_h;
    }
    t.rows.push_back({static_cast<std::int64_t>(kSchemaVersion),
                      std::string(kind_name(cfg.kind)), cfg.gamma, n, log_h,
                      exact, asym, diff, scaled, std::string("exact")});
  }
  return t;
}

ResultTable run_tv_table(const ExperimentConfig& cfg) {
  const WeightSequence w = config_weights(cfg);
  const std::int64_t max_n =
      *std::max_element(cfg.n_grid.begin(), cfg.n_grid.end());
  if (max_n > 5000)
    throw config_error("tv-table: n above the 5000 budget for the exact DP");
  const NormalizationTable tab = build_normalization_table(w, max_n);

  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"schema_version", "kind", "gamma",       "n",
               "b",              "d_b_n", "bound_thm11", "p_T0n_eq_n",
               "provenance"};
  for (std::int64_t n : cfg.n_grid) {
    std::int64_t b;
    if (cfg.b) {
      b = *cfg.b;
    } else if (!cfg.b_rule.empty()) {
      b = apply_b_rule(cfg.b_rule, n);
    } else {
      throw config_error("tv-table: need --b or --b-rule");
    }
    if (b < 1 || b > n) throw config_error("tv-table: b out of range");
    const PoissonSpec spec =
        cfg.weights_override
            ? PoissonSpec::with_t(w, n, saddle_parameter(1.0, n))
            : PoissonSpec::at_saddle(cfg.gamma, n);
    const double d = dp_tv_distance(spec, tab, b);
    const double bound = tv_rate_bound(cfg.gamma, n, b);
    const double p = std::exp(log_prob_t0n_equals_n(spec, tab));
    t.rows.push_back({static_cast<std::int64_t>(kSchemaVersion),
                      std::string(kind_name(cfg.kind)), cfg.gamma, n, b, d,
                      bound, p, std::string("dp")});
  }
  return t;
}

ResultTable run_sample(const ExperimentConfig& cfg) {
  if (cfg.n_grid.size() != 1)
    throw config_error("sample: exactly one n required");
  const std::int64_t n = cfg.n_grid[0];
  const WeightSequence w = config_weights(cfg);
  const MangoldtSieve sieve(n);

  std::optional<NormalizationTable> tab;
  if (cfg.method == SampleMethod::kRecursive) {
    if (n > kMaxTableN)
      throw config_error("sample: n too large for the recursive table, "
                         "use --method rejection");
    tab = build_normalization_table(w, n);
  }

  const std::int64_t samples = cfg.samples;
  std::vector<std::string> types(samples);
  std::vector<double> log_o(samples), log_y(samples);
  std::vector<std::uint64_t> streams(samples);
  run_monte_carlo(w, cfg.gamma, n, samples, *cfg.seed, effective_workers(cfg),
                  cfg.method, tab ? &*tab : nullptr, sieve,
                  [&](std::int64_t idx, const CycleType& ct,
                      OrderStatsAccumulator& acc) {
                    const OrderStats os = acc.compute(ct);
                    types[idx] = ct.to_string();
                    log_o[idx] = os.log_o;
                    log_y[idx] = os.log_y;
                    streams[idx] =
                        static_cast<std::uint64_t>(idx / kChunkSize);
                  });

  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"seed", "stream", "index", "cycle_type", "log_order", "log_y"};
  for (std::int64_t i = 0; i < samples; ++i)
    t.rows.push_back({*cfg.seed, streams[i], i, types[i], log_o[i], log_y[i]});
  return t;
}

// shared by clt-order and closeness
struct CltCells {
  std::vector<double> standardized;
  std::vector<double> delta_indicator;
  double threshold = 0.0;
  ErdosTuranConstants constants;
};

CltCells run_clt_cells(const ExperimentConfig& cfg, std::int64_t n,
                       const NormalizationTable* tab,
                       const MangoldtSieve& sieve) {
  if (n < 3)
    throw config_error("clt-order: grid must start at n >= 3 (loglog n > 0)");
  CltCells cells;
  cells.constants = erdos_turan_constants(cfg.gamma, n);
  cells.threshold = std::log(static_cast<double>(n)) *
                    std::log(std::log(static_cast<double>(n)));
  const double center = cells.constants.G;
  const double scale = std::sqrt(cells.constants.F);
  cells.standardized.assign(cfg.samples, 0.0);
  cells.delta_indicator.assign(cfg.samples, 0.0);
  const WeightSequence w = config_weights(cfg);
  const SampleMethod method =
      (n <= kMaxTableN) ? SampleMethod::kRecursive : SampleMethod::kRejection;
  run_monte_carlo(w, cfg.gamma, n, cfg.samples, *cfg.seed,
                  effective_workers(cfg), method, tab, sieve,
                  [&](std::int64_t idx, const CycleType& ct,
                      OrderStatsAccumulator& acc) {
                    const OrderStats os = acc.compute(ct);
                    cells.standardized[idx] = (os.log_o - center) / scale;
                    cells.delta_indicator[idx] =
                        os.delta >= cells.threshold ? 1.0 : 0.0;
                  });
  return cells;
}

ResultTable run_clt_order(const ExperimentConfig& cfg, bool closeness_only) {
  const std::int64_t max_n =
      *std::max_element(cfg.n_grid.begin(), cfg.n_grid.end());
  const WeightSequence w = config_weights(cfg);
  std::optional<NormalizationTable> tab;
  if (max_n <= kMaxTableN) tab = build_normalization_table(w, max_n);
  const MangoldtSieve sieve(max_n);

  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"schema_version", "kind",      "gamma",     "n",
               "samples",        "seed",      "statistic", "value",
               "std_error",      "provenance"};
  const auto row = [&](std::int64_t n, const char* stat, Cell value, Cell se,
                       const char* prov) {
    t.rows.push_back({static_cast<std::int64_t>(kSchemaVersion),
                      std::string(kind_name(cfg.kind)), cfg.gamma, n,
                      cfg.samples, *cfg.seed, std::string(stat),
                      std::move(value), std::move(se), std::string(prov)});
  };

  for (std::int64_t n : cfg.n_grid) {
    const CltCells cells = run_clt_cells(cfg, n, tab ? &*tab : nullptr, sieve);
    row(n, "delta_threshold", cells.threshold, none(), "exact");
    const MeanVar ind = mean_var(cells.delta_indicator);
    row(n, "p_delta_exceeds", ind.mean, ind.se_mean, "monte-carlo");
    if (closeness_only) continue;

    row(n, "center_G", cells.constants.G, none(), "asymptotic");
    row(n, "scale_F", cells.constants.F, none(), "asymptotic");
    const KsWithSe ks = ks_with_se(cells.standardized, 0.0, 1.0);
    row(n, "ks_normal", ks.d, ks.se, "monte-carlo");
    const MeanVar mv = mean_var(cells.standardized);
    row(n, "mean_standardized", mv.mean, mv.se_mean, "monte-carlo");
    // the variance is the mean of squared deviations; its standard error is
    // the sample-stddev of those squared deviations over sqrt(samples)
    std::vector<double> sq(cells.standardized.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
      const double d = cells.standardized[i] - mv.mean;
      sq[i] = d * d;
    }
    row(n, "var_standardized", mv.var, se_of_mean(sq), "monte-carlo");
  }
  return t;
}

ResultTable run_fclt(const ExperimentConfig& cfg) {
  if (cfg.x_grid.empty()) throw config_error("fclt: x-grid required");
  std::vector<double> xs = cfg.x_grid;
  std::sort(xs.begin(), xs.end());
  if (xs.front() <= 0.0) throw config_error("fclt: x values must be positive");

  const std::int64_t max_n =
      *std::max_element(cfg.n_grid.begin(), cfg.n_grid.end());
  const WeightSequence w = config_weights(cfg);
  std::optional<NormalizationTable> tab;
  if (max_n <= kMaxTableN) tab = build_normalization_table(w, max_n);
  const MangoldtSieve sieve(max_n);
  const double gamma = cfg.gamma;
  if (!(gamma > 0.0 && gamma < 1.0))
    throw config_error("fclt: requires 0 < gamma < 1");

  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"schema_version", "kind", "gamma",     "n",     "samples",
               "seed",           "x",    "x2",        "x_star", "statistic",
               "value",          "std_error", "provenance"};
  const auto row = [&](std::int64_t n, Cell x, Cell x2, Cell x_star,
                       const char* stat, Cell value, Cell se,
                       const char* prov) {
    t.rows.push_back({static_cast<std::int64_t>(kSchemaVersion),
                      std::string(kind_name(cfg.kind)), gamma, n, cfg.samples,
                      *cfg.seed, std::move(x), std::move(x2), std::move(x_star),
                      std::string(stat), std::move(value), std::move(se),
                      std::string(prov)});
  };

  for (std::int64_t n : cfg.n_grid) {
    const double npow = std::pow(static_cast<double>(n), gamma / (1.0 + gamma));
    const double logn = std::log(static_cast<double>(n));
    const double npow2 =
        std::pow(static_cast<double>(n), gamma * gamma / (1.0 + gamma));
    const double denom =
        std::sqrt(gamma / ((1.0 + gamma) * (1.0 + gamma)) * logn * logn * npow2);

    std::vector<std::int64_t> cutoffs(xs.size());
    std::vector<double> centers(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
      cutoffs[j] = static_cast<std::int64_t>(std::floor(xs[j] * npow));
      if (cutoffs[j] < 1)
        throw config_error("fclt: cutoff x* is 0; increase x or n");
      centers[j] =
          std::pow(xs[j], gamma) * logn * npow2 / (1.0 + gamma);
    }

    std::vector<std::vector<double>> b_vals(
        xs.size(), std::vector<double>(cfg.samples, 0.0));
    const SampleMethod method =
        (n <= kMaxTableN) ? SampleMethod::kRecursive : SampleMethod::kRejection;
    run_monte_carlo(w, gamma, n, cfg.samples, *cfg.seed,
                    effective_workers(cfg), method, tab ? &*tab : nullptr,
                    sieve,
                    [&](std::int64_t idx, const CycleType& ct,
                        OrderStatsAccumulator& acc) {
                      const std::vector<double> prof =
                          acc.partial_profile(ct, cutoffs);
                      for (std::size_t j = 0; j < prof.size(); ++j)
                        b_vals[j][idx] = (prof[j] - centers[j]) / denom;
                    });

    for (std::size_t j = 0; j < xs.size(); ++j) {
      const MeanVar mv = mean_var(b_vals[j]);
      row(n, xs[j], none(), cutoffs[j], "mean_B", mv.mean, mv.se_mean,
          "monte-carlo");
      std::vector<double> sq(b_vals[j].size());
      for (std::size_t i = 0; i < sq.size(); ++i) {
        const double d = b_vals[j][i] - mv.mean;
        sq[i] = d * d;
      }
      row(n, xs[j], none(), cutoffs[j], "var_B", mv.var, se_of_mean(sq),
          "monte-carlo");
      const KsWithSe ks =
          ks_with_se(b_vals[j], 0.0, std::sqrt(std::pow(xs[j], gamma)));
      row(n, xs[j], none(), cutoffs[j], "ks_normal_xgamma", ks.d, ks.se,
          "monte-carlo");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        const CovEstimate cov = covariance(b_vals[i], b_vals[j]);
        row(n, xs[i], xs[j], none(), "cov_B", cov.cov, cov.se, "monte-carlo");
      }
    }
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
      std::vector<double> incr(b_vals[j].size());
      for (std::size_t i = 0; i < incr.size(); ++i)
        incr[i] = b_vals[j + 1][i] - b_vals[j][i];
      const CovEstimate cov = covariance(b_vals[j], incr);
      row(n, xs[j], xs[j + 1], none(), "cov_increment", cov.cov, cov.se,
          "monte-carlo");
    }
  }
  return t;
}

ResultTable run_oracle_dump(const ExperimentConfig& cfg) {
  if (cfg.n_grid.size() != 1)
    throw config_error("oracle-dump: exactly one n required");
  const WeightSequence w = config_weights(cfg);
  const ExactOrderLaw law = exact_order_law(w, cfg.n_grid[0]);
  ResultTable t;
  t.kind = cfg.kind;
  t.columns = {"cycle_type", "probability", "log_order", "log_y"};
  for (const auto& e : law.entries)
    t.rows.push_back({e.type.to_string(), e.prob, e.log_order, e.log_y});
  return t;
}

}  // namespace

const char* kind_name(ExperimentKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k.name;
  return "unknown";
}

ExperimentKind kind_from_name(const std::string& name) {
  for (const auto& k : kKinds)
    if (name == k.name) return k.kind;
  throw config_error("unknown experiment kind: " + name);
}

std::vector<std::int64_t> parse_n_grid(const std::string& text) {
  if (text.empty()) throw config_error("empty n grid");
  std::vector<std::int64_t> grid;
  if (text.find(':') != std::string::npos) {
    // geometric grid a:b:mult
    std::int64_t a = 0, b = 0;
    double mult = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> a >> c1 >> b >> c2 >> mult) || c1 != ':' || c2 != ':')
      throw config_error("bad n grid: " + text);
    if (a < 1 || b < a || mult <= 1.0)
      throw config_error("bad n grid bounds: " + text);
    double v = static_cast<double>(a);
    while (true) {
      const std::int64_t vi = static_cast<std::int64_t>(std::llround(v));
      if (vi > b) break;
      grid.push_back(vi);
      v *= mult;
    }
  } else {
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      grid.push_back(std::stoll(tok));
    }
  }
  if (grid.empty()) throw config_error("empty n grid: " + text);
  for (std::int64_t n : grid)
    if (n < 1) throw config_error("n grid values must be >= 1");
  return grid;
}

std::int64_t apply_b_rule(const std::string& rule, std::int64_t n) {
  if (rule.empty()) throw config_error("empty b rule");
  std::string body = rule;
  if (body.starts_with("floor(") && body.ends_with(")"))
    body = body.substr(6, body.size() - 7);
  const std::size_t npos_ = body.find('n');
  if (npos_ == std::string::npos) {
    const std::int64_t b = std::stoll(body);
    if (b < 1) throw config_error("b rule must give b >= 1");
    return b;
  }
  double coeff = 1.0;
  if (npos_ > 0) {
    if (body[npos_ - 1] != '*')
      throw config_error("bad b rule (expected c*n^p): " + rule);
    coeff = std::stod(body.substr(0, npos_ - 1));
  }
  double power = 1.0;
  if (npos_ + 1 < body.size()) {
    if (body[npos_ + 1] != '^')
      throw config_error("bad b rule (expected n^p): " + rule);
    power = std::stod(body.substr(npos_ + 2));
  }
  const std::int64_t b = static_cast<std::int64_t>(
      std::floor(coeff * std::pow(static_cast<double>(n), power)));
  if (b < 1)
    throw config_error("b rule gives b < 1 at n = " + std::to_string(n));
  return b;
}

std::vector<double> parse_x_grid(const std::string& text) {
  std::vector<double> xs;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    xs.push_back(std::stod(tok));
  }
  if (xs.empty()) throw config_error("empty x grid: " + text);
  return xs;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_grid.empty()) throw config_error("n grid required");
  if (cfg.samples < 1) throw config_error("samples must be >= 1");
  if (is_stochastic(cfg.kind) && !cfg.seed)
    throw config_error("seed required for stochastic experiment kinds");
  if (!cfg.weights_override && !(cfg.gamma > 0.0))
    throw config_error("gamma must be positive");

  switch (cfg.kind) {
    case ExperimentKind::kHnCheck:
      return run_hn_check(cfg);
    case ExperimentKind::kTvTable:
      return run_tv_table(cfg);
    case ExperimentKind::kSample:
      return run_sample(cfg);
    case ExperimentKind::kCltOrder:
      return run_clt_order(cfg, /*closeness_only=*/false);
    case ExperimentKind::kCloseness:
      return run_clt_order(cfg, /*closeness_only=*/true);
    case ExperimentKind::kFclt:
      return run_fclt(cfg);
    case ExperimentKind::kOracleDump:
      return run_oracle_dump(cfg);
  }
  throw config_error("unhandled experiment kind");
}

namespace {

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::string cell_to_csv(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return fmt_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_to_json(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

void write_output(const ExperimentConfig& cfg, const ResultTable& table,
                  std::ostream& os) {
  if (cfg.format == OutputFormat::kCsv) {
    os << "# permlab schema_version=" << kSchemaVersion
       << " kind=" << kind_name(table.kind);
    if (!cfg.deterministic) os << " generated=" << timestamp_utc();
    os << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) os << ',';
      os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << cell_to_csv(row[i]);
      }
      os << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind_name(table.kind);
    if (!cfg.deterministic) doc["generated"] = timestamp_utc();
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json rec;
      for (std::size_t i = 0; i < row.size(); ++i)
        rec[table.columns[i]] = cell_to_json(row[i]);
      records.push_back(std::move(rec));
    }
    doc["records"] = std::move(records);
    os << doc.dump(2) << '\n';
  }
}

void run_and_write(const ExperimentConfig& cfg) {
  const ResultTable table = run_experiment(cfg);
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    write_output(cfg, table, std::cout);
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw config_error("cannot open output file: " + cfg.out_path);
  write_output(cfg, table, out);
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("bad config file: ") + e.what());
  }
  ExperimentConfig cfg;
  if (j.contains("kind")) cfg.kind = kind_from_name(j["kind"]);
  if (j.contains("gamma")) cfg.gamma = j["gamma"].get<double>();
  if (j.contains("n")) {
    if (j["n"].is_string())
      cfg.n_grid = parse_n_grid(j["n"].get<std::string>());
    else
      cfg.n_grid = {j["n"].get<std::int64_t>()};
  }
  if (j.contains("b")) cfg.b = j["b"].get<std::int64_t>();
  if (j.contains("b_rule")) cfg.b_rule = j["b_rule"].get<std::string>();
  if (j.contains("x_grid")) {
    if (j["x_grid"].is_string())
      cfg.x_grid = parse_x_grid(j["x_grid"].get<std::string>());
    else
      cfg.x_grid = j["x_grid"].get<std::vector<double>>();
  }
  if (j.contains("samples")) cfg.samples = j["samples"].get<std::int64_t>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
  if (j.contains("format")) {
    const std::string f = j["format"].get<std::string>();
    if (f == "csv")
      cfg.format = OutputFormat::kCsv;
    else if (f == "json")
      cfg.format = OutputFormat::kJson;
    else
      throw config_error("bad format in config: " + f);
  }
  if (j.contains("deterministic"))
    cfg.deterministic = j["deterministic"].get<bool>();
  if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
  if (j.contains("method")) {
    const std::string m = j["method"].get<std::string>();
    if (m == "recursive")
      cfg.method = SampleMethod::kRecursive;
    else if (m == "rejection")
      cfg.method = SampleMethod::kRejection;
    else
      throw config_error("bad method in config: " + m);
  }
  if (j.contains("exact_upto"))
    cfg.exact_upto = j["exact_upto"].get<std::int64_t>();
  return cfg;
}

}  // namespace permlab
