#ifndef WRONSK_VERIFY_HPP
#define WRONSK_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronsk/bundle.hpp"
#include "wronsk/divisor.hpp"
#include "wronsk/ode.hpp"
#include "wronsk/parse.hpp"
#include "wronsk/random.hpp"
#include "wronsk/squarefree.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

struct SuiteConfig {
  std::string suite = "all";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_degree = 3;
  std::size_t max_rank = 4;
  long bound = 5;
};

struct CheckFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ratfunc", "wronskian-identities", "quotient", "rank", "abel",
                                              "liouville", "divisor", "bundle-degree", "chern", "coboundary"};
  return names;
}

/// 1! 2! ... (n-1)!
inline Rat superfactorial(std::size_t n) {
  Rat out(1), fact(1);
  for (std::size_t k = 1; k < n; ++k) {
    fact *= static_cast<long>(k);
    out *= fact;
  }
  return out;
}

namespace detail {

class Checker {
 public:
  Checker(SuiteResult& r, std::size_t trial, std::uint64_t seed) : r_(r), trial_(trial), seed_(seed) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    ++r_.checks;
    if (ok) {
      ++r_.passed;
    } else {
      r_.failures.push_back({trial_, seed_, name, detail});
    }
  }
  void fail(const std::string& name, const std::string& detail) { check(name, false, detail); }

 private:
  SuiteResult& r_;
  std::size_t trial_;
  std::uint64_t seed_;
};

using TrialFn = std::function<void(Rng&, Checker&, const SuiteConfig&)>;

inline std::size_t pick_rank(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(std::max(lo, hi))));
}

inline void ratfunc_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const RatFunc f = random_ratfunc(rng, cfg.max_degree, cfg.bound, 40);
  const RatFunc g = random_ratfunc(rng, cfg.max_degree, cfg.bound, 40);
  const RatFunc h = random_ratfunc(rng, cfg.max_degree, cfg.bound, 40);
  c.check("distributive", (f + g) * h == f * h + g * h);
  c.check("associative", (f * g) * h == f * (g * h));
  c.check("inverse", f / g * g == f && f * f.inverse() == RatFunc(1L));
  c.check("leibniz", (f * g).derivative() == f.derivative() * g + f * g.derivative());
  c.check("quotient-rule", (f / g).derivative() == (f.derivative() * g - f * g.derivative()) / (g * g));
  const Mobius m = random_mobius(rng, cfg.bound);
  c.check("mobius-round-trip", compose(compose(f, m), m.inverse()) == f);
  c.check("compose-chain-rule", compose(f, m).derivative() == compose(f.derivative(), m) * m.as_ratfunc().derivative());
  c.check("print-parse", parse_ratfunc(f.to_string()) == f, f.to_string());
  const auto sf = squarefree_factor(f.num() * f.den());
  c.check("squarefree-expand", sf.expand() == f.num() * f.den());
}

inline void identities_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const std::size_t n = pick_rank(rng, 1, cfg.max_rank);
  const VecSection a = random_section(rng, n, cfg.max_degree, cfg.bound);
  const RatMatrix wa = wronskian_matrix(a);

  const RatMatrix t = random_invertible_constant(rng, n, cfg.bound);
  c.check("basis-change", wronskian_matrix(a.times(t)) == wa * t);

  const RatFunc lam = random_mobius(rng, cfg.bound).as_ratfunc();
  c.check("lambda-identity", wronskian_matrix(a.compose(lam)) == lambda_matrix(lam, n) * wa.compose(lam));
  c.check("lambda-methods-agree",
          lambda_matrix(lam, n + 1, LambdaMethod::recursive) == lambda_matrix(lam, n + 1, LambdaMethod::faa_di_bruno));

  const RatFunc f = random_ratfunc(rng, cfg.max_degree, cfg.bound, 40);
  c.check("phi-identity", wronskian_matrix(a.scaled(f)) == phi_matrix(f, n) * wa);

  const RatFunc p(random_poly_of_degree(rng, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(cfg.max_degree))), cfg.bound));
  std::vector<RatFunc> powers;
  for (std::size_t i = 0; i < n; ++i) powers.push_back(p.pow(static_cast<long>(i)));
  c.check("monomial-wronskian",
          wronskian_det(VecSection(powers)) ==
              RatFunc(superfactorial(n)) * p.derivative().pow(static_cast<long>(n * (n - 1) / 2)));
}

inline void quotient_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const std::size_t n = pick_rank(rng, 2, cfg.max_rank);
  const VecSection a = random_generic_section(rng, n, cfg.max_degree, cfg.bound);
  const VecSection b = random_generic_section(rng, n, cfg.max_degree, cfg.bound);
  const VecSection d = random_generic_section(rng, n, cfg.max_degree, cfg.bound);
  const RatMatrix q = quotient(a, b);
  c.check("triple-cocycle", q * quotient(d, a) * quotient(b, d) == RatMatrix::identity(n));
  c.check("self-quotient", quotient(a, a) == RatMatrix::identity(n));
  const RatFunc f = random_ratfunc(rng, cfg.max_degree, cfg.bound, 40);
  c.check("scaling-invariance", quotient(a.scaled(f), b.scaled(f)) == q);
  const RatMatrix t = random_invertible_constant(rng, n, cfg.bound);
  c.check("basis-conjugation", quotient(a.times(t), b.times(t)) == inverse(t) * q * t);
  c.check("det-link", det(q) == wronskian_det(a) / wronskian_det(b));
}

inline void rank_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const std::size_t n = pick_rank(rng, 1, cfg.max_rank);
  const VecSection a = random_section(rng, n, cfg.max_degree, cfg.bound);
  const VecSection b = random_generic_section(rng, n, cfg.max_degree, cfg.bound);
  const std::size_t r = rank(quotient(a, b).derivative());
  c.check("derivative-rank", r <= 1, "rank " + std::to_string(r));
}

inline void abel_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const std::size_t n = pick_rank(rng, 1, cfg.max_rank);
  const VecSection a = random_generic_section(rng, n, cfg.max_degree, cfg.bound);
  const AbelCertificate cert = abel_check(a);
  c.check("abel-residual", cert.passed(), cert.residual.to_string());
  const OdeCoeffs ode = ode_coefficients(a);
  bool annihilated = true;
  for (std::size_t j = 0; j < n; ++j) {
    RatFunc rhs;
    for (std::size_t k = 0; k < n; ++k) rhs += ode.p[k] * a[j].nth_derivative(n - 1 - k);
    annihilated = annihilated && rhs == a[j].nth_derivative(n);
  }
  c.check("ode-annihilates", annihilated);
}

inline void liouville_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const std::size_t n = pick_rank(rng, 1, cfg.max_rank);
  const RatMatrix phi = random_invertible_matrix(rng, n, cfg.max_degree, cfg.bound);
  const LiouvilleCertificate cert = liouville_check(phi);
  c.check("liouville-residual", cert.passed(), cert.residual.to_string());
}

inline void divisor_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const RatFunc f = random_ratfunc(rng, cfg.max_degree, cfg.bound, 50);
  const RatFunc g = random_ratfunc(rng, cfg.max_degree, cfg.bound, 50);
  const Divisor df = divisor_of(f);
  c.check("principal-degree-zero", df.degree() == 0, df.to_string());
  c.check("homomorphism", divisor_of(f * g) == df + divisor_of(g));
  c.check("inverse", divisor_of(f.inverse()) == Divisor() - df);
  const long n = rng.uniform(1, 4);
  Divisor multiple;
  for (long i = 0; i < n; ++i) multiple = multiple + df;
  c.check("nth-power-of-multiple", divisor_of(f.pow(n)) == multiple);
  const auto root = is_nth_power(multiple, n);
  c.check("nth-root-witness", root.has_value() && divisor_of(*root) == df);
}

inline void bundle_degree_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const PFBundle v = random_bundle(rng, 2, cfg.max_rank, -3, 3, cfg.bound);
  const std::vector<Section> probes{random_generic_probe(rng, v, cfg.max_degree, cfg.bound),
                                    random_generic_probe(rng, v, cfg.max_degree, cfg.bound)};
  const QuestionReport r = open_question_report(v, probes);
  const long n = static_cast<long>(v.rank());
  c.check("probes-agree", r.probes_used == probes.size());
  c.check("degree-law", r.deg_w == n * v.k() - n * (n - 1), std::to_string(r.deg_w));
  c.check("question-verdict", r.verdict);
  const TwistCertificate tc = tensor_twist_degree_check(v, rng.uniform(-3, 3), probes);
  c.check("twist-law", tc.passed());
}

inline void chern_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const PFBundle v = random_bundle(rng, 2, cfg.max_rank, -3, 3, cfg.bound);
  const Section s(v, random_generic_section(rng, v.rank(), cfg.max_degree, cfg.bound));
  const ChernCertificate cert = chern_cocycle_check(s);
  c.check("chern-residual", cert.passed(), cert.residual.coeff.to_string());
}

inline void coboundary_trial(Rng& rng, Checker& c, const SuiteConfig& cfg) {
  const PFBundle v = random_bundle(rng, 2, std::min<std::size_t>(cfg.max_rank, 3), -3, 3, cfg.bound);
  const Section b = random_generic_probe(rng, v, std::min<std::size_t>(cfg.max_degree, 2), cfg.bound);
  const RatFunc g = random_ratfunc(rng, std::min<std::size_t>(cfg.max_degree, 2), cfg.bound, 40);
  const Section a(v, b.a0.scaled(g));
  const CoboundaryCertificate supplied = coboundary_check(a, b, g);
  c.check("coboundary-supplied-f", supplied.residual_zero());
  c.check("det-match", supplied.det_match_a && supplied.det_match_b);
  c.check("coboundary-searched-f", coboundary_check(a, b).passed());
}

inline TrialFn suite_trial(const std::string& name) {
  if (name == "ratfunc") return ratfunc_trial;
  if (name == "wronskian-identities") return identities_trial;
  if (name == "quotient") return quotient_trial;
  if (name == "rank") return rank_trial;
  if (name == "abel") return abel_trial;
  if (name == "liouville") return liouville_trial;
  if (name == "divisor") return divisor_trial;
  if (name == "bundle-degree") return bundle_degree_trial;
  if (name == "chern") return chern_trial;
  if (name == "coboundary") return coboundary_trial;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

inline bool needs_rank_two(const std::string& name) {
  return name == "quotient" || name == "bundle-degree" || name == "chern" || name == "coboundary";
}

}  // namespace detail

/// Throws std::invalid_argument on an unknown suite or an unusable config.
inline void validate(const SuiteConfig& cfg) {
  if (cfg.suite != "all") (void)detail::suite_trial(cfg.suite);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.max_degree < 1) throw std::invalid_argument("max-degree must be at least 1");
  if (cfg.max_rank < 1) throw std::invalid_argument("max-rank must be at least 1");
  if (cfg.bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (cfg.max_rank < 2 && (cfg.suite == "all" || detail::needs_rank_two(cfg.suite)))
    throw std::invalid_argument("suite '" + cfg.suite + "' needs max-rank >= 2");
}

inline SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  const detail::TrialFn trial = detail::suite_trial(name);
  SuiteResult r;
  r.name = name;
  r.trials = cfg.trials;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = trial_seed(cfg.seed, name, t);
    Rng rng(seed);
    detail::Checker c(r, t, seed);
    try {
      trial(rng, c, cfg);
    } catch (const std::exception& e) {
      c.fail("exception", e.what());
    }
  }
  return r;
}

inline std::vector<SuiteResult> run_verify(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<SuiteResult> out;
  if (cfg.suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg));
  } else {
    out.push_back(run_suite(cfg.suite, cfg));
  }
  return out;
}

}  // namespace wronsk

#endif  // WRONSK_VERIFY_HPP
