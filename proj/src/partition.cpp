#include "permlab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "permlab/errors.hpp"
#include "permlab/format_util.hpp"

namespace permlab {

namespace {

constexpr std::int64_t kMaxEnumerationN = 45;
constexpr std::size_t kJointLawCap = 10'000'000;

CycleType counts_from_parts(const std::vector<std::int64_t>& parts) {
  CycleType ct;
  ct.n = 0;
  // parts are descending; walk runs of equal values
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    ct.counts.emplace_back(parts[i], static_cast<std::int64_t>(j - i));
    ct.n += parts[i] * static_cast<std::int64_t>(j - i);
    i = j;
  }
  std::reverse(ct.counts.begin(), ct.counts.end());  // ascending m
  return ct;
}

mpq_class mpq_pow(const mpq_class& base, std::int64_t e) {
  mpq_class acc(1);
  for (std::int64_t i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::vector<std::int64_t> primes_upto(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p <= n; ++p) {
    bool is_prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        is_prime = false;
        break;
      }
    if (is_prime) primes.push_back(p);
  }
  return primes;
}

}  // namespace

void for_each_partition(
    std::int64_t n,
    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  if (n < 1) throw config_error("for_each_partition: n must be >= 1");
  // ZS1: iterative generation in reverse-lexicographic order
  std::vector<std::int64_t> x(static_cast<std::size_t>(n) + 1, 1);
  x[1] = n;
  std::int64_t m = 1;
  std::int64_t h = 1;
  std::vector<std::int64_t> parts;
  parts.assign(x.begin() + 1, x.begin() + 1 + m);
  fn(parts);
  while (x[1] != 1) {
    if (x[h] == 2) {
      ++m;
      x[h] = 1;
      --h;
    } else {
      const std::int64_t r = x[h] - 1;
      std::int64_t t = m - h + 1;
      x[h] = r;
      while (t >= r) {
        ++h;
        x[h] = r;
        t -= r;
      }
      if (t == 0) {
        m = h;
      } else {
        m = h + 1;
        if (t > 1) {
          ++h;
          x[h] = t;
        }
      }
    }
    parts.assign(x.begin() + 1, x.begin() + 1 + m);
    fn(parts);
  }
}

WeightedPartitionLaw enumerate_law(const WeightSequence& w, std::int64_t n) {
  if (n < 1 || n > kMaxEnumerationN)
    throw config_error("enumerate_law: n out of range (1..45)");
  WeightedPartitionLaw law;
  law.n = n;
  law.exact = w.has_exact();

  if (law.exact) {
    mpq_class h(0);
    for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
      CycleType ct = counts_from_parts(parts);
      // weight = prod theta_m^{C_m} / z_lambda, z_lambda = prod m^{C_m} C_m!
      mpq_class wq(1);
      for (const auto& [m, c] : ct.counts) {
        wq *= mpq_pow(w.exact_theta(m), c);
        mpz_class mc, fac;
        mpz_ui_pow_ui(mc.get_mpz_t(), static_cast<unsigned long>(m),
                      static_cast<unsigned long>(c));
        mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(c));
        wq /= mpq_class(mc * fac);
      }
      wq.canonicalize();
      h += wq;
      law.entries.push_back({std::move(ct), 0.0, wq});
    });
    law.h_exact = h;
    law.log_h = log_mpq(h);
    for (auto& e : law.entries) {
      e.prob_exact /= h;
      e.prob_exact.canonicalize();
      e.prob = e.prob_exact.get_d();
    }
  } else {
    std::vector<long double> logw;
    for_each_partition(n, [&](const std::vector<std::int64_t>& parts) {
      CycleType ct = counts_from_parts(parts);
      long double lw = 0.0L;
      for (const auto& [m, c] : ct.counts) {
        lw += c * static_cast<long double>(w.log_theta(m) -
                                           std::log(static_cast<double>(m)));
        lw -= lgammal(static_cast<long double>(c + 1));
      }
      logw.push_back(lw);
      law.entries.push_back({std::move(ct), 0.0, mpq_class(0)});
    });
    long double mx = logw[0];
    for (long double v : logw)
      if (v > mx) mx = v;
    long double s = 0.0L;
    for (long double v : logw) s += expl(v - mx);
    const long double log_h = mx + logl(s);
    law.log_h = static_cast<double>(log_h);
    for (std::size_t i = 0; i < logw.size(); ++i)
      law.entries[i].prob = static_cast<double>(expl(logw[i] - log_h));
  }
  return law;
}

double exact_tv_distance(const WeightSequence& w, std::int64_t n,
                         std::int64_t b, double t) {
  if (n < 1 || n > 25)
    throw config_error("exact_tv_distance: n out of range (1..25)");
  if (b < 0 || b > n) throw config_error("exact_tv_distance: b out of range");
  if (!(t > 0.0 && t < 1.0))
    throw config_error("exact_tv_distance: t must be in (0,1)");
  if (b == 0) return 0.0;

  const WeightedPartitionLaw law = enumerate_law(w, n);

  // P: exact marginal law of (C_1..C_b)
  std::map<std::vector<std::int32_t>, long double> marginal;
  std::vector<std::int32_t> key(static_cast<std::size_t>(b));
  for (const auto& e : law.entries) {
    std::fill(key.begin(), key.end(), 0);
    for (const auto& [m, c] : e.type.counts)
      if (m <= b) key[m - 1] = static_cast<std::int32_t>(c);
    marginal[key] += static_cast<long double>(e.prob);
    if (marginal.size() > kJointLawCap)
      throw numeric_error("exact_tv_distance: joint law exceeds entry cap");
  }

  // Q: product of Poisson(theta_m/m t^m) masses
  std::vector<long double> lambda(b + 1, 0.0L), log_lambda(b + 1, 0.0L);
  for (std::int64_t m = 1; m <= b; ++m) {
    lambda[m] = static_cast<long double>(w.theta(m)) / m *
                powl(static_cast<long double>(t), static_cast<long double>(m));
    log_lambda[m] = logl(lambda[m]);
  }
  long double d = 0.0L;
  for (const auto& [counts, p] : marginal) {
    long double logq = 0.0L;
    for (std::int64_t m = 1; m <= b; ++m) {
      const std::int32_t c = counts[m - 1];
      logq += -lambda[m] + c * log_lambda[m] -
              lgammal(static_cast<long double>(c + 1));
    }
    const long double diff = p - expl(logq);
    if (diff > 0.0L) d += diff;
  }
  return static_cast<double>(d);
}

ExactOrderLaw exact_order_law(const WeightSequence& w, std::int64_t n) {
  const WeightedPartitionLaw law = enumerate_law(w, n);
  const std::vector<std::int64_t> primes = primes_upto(n);

  ExactOrderLaw out;
  out.n = n;
  out.entries.reserve(law.entries.size());
  double mean_o = 0.0, mean_y = 0.0;
  for (const auto& e : law.entries) {
    double log_y = 0.0;
    for (const auto& [m, c] : e.type.counts)
      log_y += c * std::log(static_cast<double>(m));

    // route 1: max prime-power exponent over the present lengths
    std::vector<int> max_exp(primes.size(), 0);
    for (const auto& [m, c] : e.type.counts) {
      std::int64_t rest = m;
      for (std::size_t i = 0; i < primes.size() && rest > 1; ++i) {
        int v = 0;
        while (rest % primes[i] == 0) {
          rest /= primes[i];
          ++v;
        }
        if (v > max_exp[i]) max_exp[i] = v;
      }
    }
    // route 2: big-integer lcm, factored back into exponents
    mpz_class big_lcm(1);
    for (const auto& [m, c] : e.type.counts)
      mpz_lcm_ui(big_lcm.get_mpz_t(), big_lcm.get_mpz_t(),
                 static_cast<unsigned long>(m));
    mpz_class rest = big_lcm;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      int v = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(),
                                static_cast<unsigned long>(primes[i]))) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(),
                        static_cast<unsigned long>(primes[i]));
        ++v;
      }
      if (v != max_exp[i])
        throw numeric_error(
            "exact_order_law: prime-power route disagrees with lcm at type " +
            e.type.to_string());
    }
    if (rest != 1)
      throw numeric_error("exact_order_law: lcm has an unexpected factor");

    double log_o = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (max_exp[i] > 0)
        log_o += max_exp[i] * std::log(static_cast<double>(primes[i]));

    mean_o += e.prob * log_o;
    mean_y += e.prob * log_y;
    out.entries.push_back({e.type, e.prob, log_o, log_y});
  }
  out.mean_log_order = mean_o;
  out.mean_log_y = mean_y;
  return out;
}

void dump_order_law_csv(const ExactOrderLaw& law, std::ostream& os) {
  os << "cycle_type,probability,log_order,log_y\n";
  for (const auto& e : law.entries)
    os << e.type.to_string() << ',' << fmt_double(e.prob) << ','
       << fmt_double(e.log_order) << ',' << fmt_double(e.log_y) << '\n';
}

}  // namespace permlab
