#pragma once

// Property and oracle checks, grouped into suites. Each check returns a
// CheckResult; tolerances are fixed here, the TruncationPolicy only controls
// how hard the series work.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "prabhakar/laplace.hpp"
#include "prabhakar/maxwell.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/operators.hpp"
#include "prabhakar/response.hpp"

namespace prabhakar::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Suite = std::vector<CheckResult>;

namespace detail {

inline double rel_err(double value, double reference) {
  const double scale = std::fabs(reference);
  return scale > 0.0 ? std::fabs(value - reference) / scale : std::fabs(value);
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return t;
}

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

/// Runs body; any exception is a failed check.
inline CheckResult guarded(std::string name, const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = std::move(name);
    return r;
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

inline CheckResult bound(double worst, double tol, std::string what = "max rel err") {
  return {"", worst < tol, what + " " + sci(worst) + " (tol " + sci(tol) + ")"};
}

}  // namespace detail

/// The 27 (alpha, beta, gamma) triplets with omega = -1.
inline std::vector<PrabhakarTriplet> duality_grid() {
  std::vector<PrabhakarTriplet> grid;
  for (double a : {0.4, 0.7, 0.9})
    for (double b : {0.5, 1.0, 1.5})
      for (double g : {0.5, 1.0, 2.0}) grid.push_back({a, b, g, -1.0});
  return grid;
}

/// Material triplets: one of each alpha, beta and gamma value from the grid.
inline std::vector<PrabhakarTriplet> material_triplets() {
  return {{0.4, 0.5, 2.0, -1.0}, {0.7, 1.0, 0.5, -1.0}, {0.9, 1.5, 1.0, -1.0}};
}

// ---------------------------------------------------------------------------
// mlf

inline CheckResult check_mlf_laplace_duality(const TruncationPolicy& policy = {}) {
  return detail::guarded("mlf/laplace-duality (27 triplets x 20 t, talbot, rel 1e-6)", [&] {
    double worst = 0.0;
    for (const auto& p : duality_grid()) {
      const LaplaceImage image = prabhakar_kernel_image(p);
      for (double t : detail::log_grid(0.1, 10.0, 20))
        worst = std::max(worst, detail::rel_err(prabhakar_kernel(p, t, policy), invert(image, t)));
    }
    return detail::bound(worst, 1e-6);
  });
}

inline CheckResult check_mlf_reduction_chain(const TruncationPolicy& policy = {}) {
  return detail::guarded("mlf/reduction-chain (1000 draws, mlf1 == mlf3 exactly)", [&] {
    std::mt19937_64 rng(20171);
    std::uniform_real_distribution<double> alpha(0.0, 2.0), z(-5.0, 5.0);
    std::size_t mismatches = 0, evaluated = 0, refused = 0;
    for (int i = 0; i < 1000; ++i) {
      const double a = std::max(alpha(rng), 1e-3), x = z(rng);
      double v1 = 0.0, v3 = 0.0;
      bool t1 = false, t3 = false;
      try { v1 = mlf1(a, x, policy); } catch (const TruncationError&) { t1 = true; }
      try { v3 = mlf3(a, 1.0, 1.0, x, policy); } catch (const TruncationError&) { t3 = true; }
      if (t1 != t3 || (!t1 && v1 != v3)) ++mismatches;
      t1 ? ++refused : ++evaluated;
    }
    return CheckResult{"", mismatches == 0,
                       std::to_string(mismatches) + " mismatches, " + std::to_string(evaluated) +
                           " evaluated, " + std::to_string(refused) + " refused identically"};
  });
}

inline CheckResult check_mlf_exponential(const TruncationPolicy& policy = {}) {
  return detail::guarded("mlf/exponential-identity (x in [-10,10], rel 1e-12)", [&] {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = -10.0 + 20.0 * i / 99.0;
      worst = std::max(worst, detail::rel_err(mlf3(1.0, 1.0, 1.0, x, policy), std::exp(x)));
    }
    return detail::bound(worst, 1e-12);
  });
}

inline CheckResult check_mlf_gamma_zero(const TruncationPolicy& policy = {}) {
  return detail::guarded("mlf/gamma-zero-degeneracy (one term, 1/Gamma(beta))", [&] {
    bool ok = true;
    double worst = 0.0;
    for (double b : {0.3, 1.0, 2.5, 7.0})
      for (double z : {-1e6, -3.0, 0.0, 42.0, 1e12}) {
        const SeriesResult r = mlf3_detailed(0.7, b, 0.0, z, policy);
        ok = ok && r.terms == 1 && r.value == mlf3_detailed(0.7, b, 0.0, 0.0, policy).value;
        worst = std::max(worst, detail::rel_err(static_cast<double>(r.value), 1.0 / std::tgamma(b)));
      }
    return CheckResult{"", ok && worst < 1e-15,
                       std::string(ok ? "single term, z-independent" : "z-dependent or >1 term") +
                           "; rel err vs 1/tgamma " + detail::sci(worst)};
  });
}

inline CheckResult check_mlf_term_count(const TruncationPolicy& policy = {}) {
  return detail::guarded("mlf/term-count-monotone (rtol /10 never fewer terms)", [&] {
    std::size_t violations = 0;
    for (double z : {-4.0, -0.5, 0.3, 3.0})
      for (double a : {0.5, 1.0, 1.7}) {
        std::size_t prev = 0;
        for (double rtol = 1e-4; rtol >= 1e-16; rtol /= 10.0) {
          TruncationPolicy p = policy;
          p.rtol = rtol;
          const std::size_t n = mlf3_detailed(a, 1.2, 0.9, z, p).terms;
          if (n < prev) ++violations;
          prev = n;
        }
      }
    return CheckResult{"", violations == 0, std::to_string(violations) + " violations"};
  });
}

inline Suite mlf_suite(const TruncationPolicy& policy = {}) {
  return {check_mlf_reduction_chain(policy), check_mlf_exponential(policy),
          check_mlf_gamma_zero(policy), check_mlf_term_count(policy),
          check_mlf_laplace_duality(policy)};
}

// ---------------------------------------------------------------------------
// laplace

inline CheckResult check_laplace_closed_forms() {
  return detail::guarded("laplace/closed-forms (both methods, t in [0.01,100], rel 1e-8)", [&] {
    struct Pair {
      const char* name;
      LaplaceImage image;
      std::function<double(double)> f;
    };
    const std::vector<Pair> pairs = {
        {"1", {[](complex s) { return 1.0 / s; }, 0.0}, [](double) { return 1.0; }},
        {"t", {[](complex s) { return 1.0 / (s * s); }, 0.0}, [](double t) { return t; }},
        {"exp(-t)", {[](complex s) { return 1.0 / (s + 1.0); }, 0.0}, [](double t) { return std::exp(-t); }},
        {"1/sqrt(pi t)", {[](complex s) { return std::pow(s, -0.5); }, 0.0},
         [](double t) { return 1.0 / std::sqrt(std::numbers::pi * t); }},
        {"exp(t/2)", {[](complex s) { return 1.0 / (s - 0.5); }, 0.5}, [](double t) { return std::exp(0.5 * t); }},
    };
    double worst = 0.0;
    std::ostringstream os;
    for (const auto& pr : pairs) {
      double wt = 0.0, we = 0.0, onset = 0.0;
      for (double t : detail::log_grid(0.01, 100.0, 25)) {
        const double et = detail::rel_err(invert(pr.image, t), pr.f(t));
        const double ee = detail::rel_err(invert(pr.image, t, InversionConfig::euler()), pr.f(t));
        if (std::max(et, ee) >= 1e-8 && onset == 0.0) onset = t;
        wt = std::max(wt, et);
        we = std::max(we, ee);
      }
      worst = std::max({worst, wt, we});
      os << pr.name << ": talbot " << detail::sci(wt) << ", euler " << detail::sci(we);
      if (onset > 0.0) os << " (fails from t = " << onset << ")";
      os << "; ";
    }
    os << "tol 1.000e-08";
    return CheckResult{"", worst < 1e-8, os.str()};
  });
}

inline CheckResult check_laplace_method_agreement() {
  return detail::guarded("laplace/method-agreement (talbot vs euler, 27x20 images, rel 1e-6)", [&] {
    double worst = 0.0;
    for (const auto& p : duality_grid()) {
      const LaplaceImage image = prabhakar_kernel_image(p);
      for (double t : detail::log_grid(0.1, 10.0, 20))
        worst = std::max(worst, detail::rel_err(invert(image, t, InversionConfig::euler()),
                                                invert(image, t)));
    }
    return detail::bound(worst, 1e-6);
  });
}

inline CheckResult check_laplace_linearity() {
  return detail::guarded("laplace/linearity (invert(cF+G) = c invert F + invert G, 1e-10)", [&] {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> c(-3.0, 3.0), t(0.1, 10.0);
    const auto pool = duality_grid();
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto f = prabhakar_kernel_image(pool[pick(rng)]);
      const auto g = prabhakar_kernel_image(pool[pick(rng)]);
      const double cc = c(rng), tt = t(rng);
      const LaplaceImage sum{[&](complex s) { return cc * f.eval(s) + g.eval(s); }, 0.0};
      const double lhs = invert(sum, tt);
      const double rhs = cc * invert(f, tt) + invert(g, tt);
      worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
    }
    return detail::bound(worst, 1e-10, "max err");
  });
}

inline Suite laplace_suite() {
  return {check_laplace_closed_forms(), check_laplace_method_agreement(), check_laplace_linearity()};
}

// ---------------------------------------------------------------------------
// operators

/// Max-norm error of the gamma = 0 Prabhakar integral of `f` against `exact`
/// on [0, 2] for each step.
inline std::vector<double> riemann_liouville_errors(const std::function<double(double)>& f,
                                                    const std::function<double(double)>& exact,
                                                    double beta, const std::vector<double>& steps,
                                                    const TruncationPolicy& policy) {
  std::vector<double> errs;
  for (double h : steps) {
    const std::size_t n = static_cast<std::size_t>(std::llround(2.0 / h)) + 1;
    const SampledSignal g =
        prabhakar_integral(SampledSignal::sample(f, 0.0, h, n), {0.7, beta, 0.0, -1.0}, policy);
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::fabs(g.values[i] - exact(g.time(i))));
    errs.push_back(e);
  }
  return errs;
}

inline CheckResult check_operator_rl_order(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/gamma0-riemann-liouville (order >= 2, h = 1e-2, 5e-3, 2.5e-3)", [&] {
    const std::vector<double> steps{1e-2, 5e-3, 2.5e-3};
    // Below this the rule is exact and the error is pure roundoff.
    constexpr double kRoundoff = 1e-13;
    bool ok = true;
    std::ostringstream os;
    for (double beta : {0.3, 0.5, 0.8, 1.0, 1.5}) {
      const auto one = riemann_liouville_errors(
          [](double) { return 1.0; },
          [beta](double t) { return std::pow(t, beta) / std::tgamma(beta + 1.0); }, beta, steps, policy);
      const auto sq = riemann_liouville_errors(
          [](double t) { return t * t; },
          [beta](double t) { return 2.0 * std::pow(t, beta + 2.0) / std::tgamma(beta + 3.0); }, beta,
          steps, policy);
      const bool one_exact = *std::max_element(one.begin(), one.end()) < kRoundoff;
      double one_order = 0.0;
      if (!one_exact) {
        one_order = std::min(std::log2(one[0] / one[1]), std::log2(one[1] / one[2]));
        ok = ok && one_order >= 2.0 - 0.05;
      }
      const double sq_order = std::min(std::log2(sq[0] / sq[1]), std::log2(sq[1] / sq[2]));
      ok = ok && sq_order >= 2.0 - 0.05;
      os << "beta=" << beta << ": f=1 "
         << (one_exact ? "exact (err " + detail::sci(one[2]) + ")"
                       : "order " + std::to_string(one_order))
         << ", f=t^2 order " << sq_order << "; ";
    }
    return CheckResult{"", ok, os.str()};
  });
}

inline CheckResult check_operator_annihilation(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/derivative-annihilates-constants (1e-12)", [&] {
    double worst = 0.0;
    for (const auto& p : duality_grid()) {
      if (!(p.beta < 1.0)) continue;
      for (double c : {-2.5, 1.0, 7.0}) {
        const auto d = prabhakar_derivative(
            SampledSignal::sample([c](double) { return c; }, 0.0, 1e-2, 201), p, policy);
        for (double v : d.values) worst = std::max(worst, std::fabs(v));
      }
    }
    for (double al : {0.3, 0.5, 0.7}) {
      const auto f = SampledSignal::sample([](double) { return 3.0; }, 0.0, 1e-2, 201);
      for (double v : caputo_fabrizio(f, {al}).values) worst = std::max(worst, std::fabs(v));
      for (double v : cf_via_prabhakar(f, {al}, policy).values) worst = std::max(worst, std::fabs(v));
    }
    return detail::bound(worst, 1e-12, "max |D const|");
  });
}

inline CheckResult check_operator_caputo_linear(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/caputo-of-t (gamma=0, beta=0.5, within 5 h^2 rel)", [&] {
    const double h = 1e-3;
    const auto f = SampledSignal::sample([](double t) { return t; }, 0.0, h, 2001);
    const auto d = prabhakar_derivative(f, {0.7, 0.5, 0.0, -1.0}, policy);
    double worst = 0.0;
    for (std::size_t i = 1; i < d.size(); ++i)
      worst = std::max(worst, detail::rel_err(d.values[i], std::sqrt(d.time(i)) / std::tgamma(1.5)));
    return detail::bound(worst, 5.0 * h * h);
  });
}

inline CheckResult check_operator_laplace_consistency(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/derivative-vs-oracle (t^2, t = 1,2,3, within 5 h^2 rel)", [&] {
    const double h = 1e-3;
    const PrabhakarTriplet p{0.7, 0.4, 0.8, -1.0};
    const auto f = SampledSignal::sample([](double t) { return t * t; }, 0.0, h, 4001);
    const auto d = prabhakar_derivative(f, p, policy);
    // L{D f} = s^beta (1 - omega s^-alpha)^gamma F(s), F = 2/s^3, f(0+) = 0
    const LaplaceImage image{[p](complex s) {
                               return prabhakar_image({p.alpha, -p.beta, p.gamma, p.omega},
                                                      GammaSign::minus_gamma, s) *
                                      (2.0 / (s * s * s));
                             },
                             0.0};
    double worst = 0.0;
    for (std::size_t i : {1000u, 2000u, 3000u})
      worst = std::max(worst, detail::rel_err(d.values[i], invert(image, d.time(i))));
    return detail::bound(worst, 5.0 * h * h);
  });
}

inline CheckResult check_operator_linearity(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/linearity (1e-12)", [&] {
    const double h = 1e-2;
    const auto f = SampledSignal::sample([](double t) { return std::sin(t); }, 0.0, h, 301);
    const auto g = SampledSignal::sample([](double t) { return t * t - t; }, 0.0, h, 301);
    SampledSignal mix = f;
    for (std::size_t i = 0; i < mix.size(); ++i) mix.values[i] = 2.0 * f.values[i] - 0.5 * g.values[i];
    double worst = 0.0;
    const PrabhakarTriplet p{0.7, 0.6, 0.8, -1.0};
    auto compare = [&](const SampledSignal& a, const SampledSignal& b, const SampledSignal& ab) {
      for (std::size_t i = 0; i < ab.size(); ++i)
        worst = std::max(worst, std::fabs(ab.values[i] - (2.0 * a.values[i] - 0.5 * b.values[i])));
    };
    compare(prabhakar_integral(f, p, policy), prabhakar_integral(g, p, policy),
            prabhakar_integral(mix, p, policy));
    compare(prabhakar_derivative(f, p, policy), prabhakar_derivative(g, p, policy),
            prabhakar_derivative(mix, p, policy));
    return detail::bound(worst, 1e-12, "max err");
  });
}

inline CheckResult check_cf_equivalence(const TruncationPolicy& policy = {}) {
  return detail::guarded("operators/caputo-fabrizio-equivalence (t, t^2, sin t; 3 alphas; 1e-8)", [&] {
    const double h = 1e-3;
    const std::size_t n = 5001;
    const std::vector<std::function<double(double)>> fs = {
        [](double t) { return t; }, [](double t) { return t * t; }, [](double t) { return std::sin(t); }};
    double worst = 0.0;
    for (const auto& fn : fs)
      for (double al : {0.3, 0.5, 0.7}) {
        const auto f = SampledSignal::sample(fn, 0.0, h, n);
        const auto a = caputo_fabrizio(f, {al});
        const auto b = cf_via_prabhakar(f, {al}, policy);
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::fabs(a.values[i] - b.values[i]));
      }
    const auto lin = SampledSignal::sample([](double t) { return t; }, 0.0, h, n);
    const double closed = 2.0 * (1.0 - std::exp(-1.0));
    const double at1 = caputo_fabrizio(lin, {0.5}).values[1000];
    const double at1p = cf_via_prabhakar(lin, {0.5}, policy).values[1000];
    const double cf_err = std::max(std::fabs(at1 - closed), std::fabs(at1p - closed));
    return CheckResult{"", worst < 1e-8 && cf_err < 1e-6,
                       "max-norm gap " + detail::sci(worst) + " (tol 1e-8); f=t closed form err " +
                           detail::sci(cf_err) + " (tol 1e-6)"};
  });
}

inline Suite operators_suite(const TruncationPolicy& policy = {}) {
  return {check_operator_rl_order(policy),       check_operator_annihilation(policy),
          check_operator_caputo_linear(policy),  check_operator_laplace_consistency(policy),
          check_operator_linearity(policy),      check_cf_equivalence(policy)};
}

// ---------------------------------------------------------------------------
// material

inline CheckResult check_creep_formula(const TruncationPolicy& policy = {}) {
  return detail::guarded("material/creep-vs-oracle ((a,b) x 3 triplets x 20 t, rel 1e-6)", [&] {
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}, std::pair{-1.0, 2.0}})
      for (const auto& p : material_triplets()) {
        const MaterialParams mp{a, b, p};
        for (double t : detail::log_grid(0.1, 10.0, 20))
          worst = std::max(worst, detail::rel_err(creep_compliance(mp, t, policy),
                                                  invert(creep_image(mp), t)));
      }
    return detail::bound(worst, 1e-6);
  });
}

inline CheckResult check_relaxation_series(const TruncationPolicy& policy = kRelaxationPolicy) {
  return detail::guarded("material/relaxation-vs-oracle (a=b=1, 3 triplets x 20 t, rel 1e-5)", [&] {
    double worst = 0.0;
    for (const auto& p : material_triplets()) {
      RelaxationSeries g({1.0, 1.0, p}, policy);
      const LaplaceImage image = relaxation_image({1.0, 1.0, p});
      for (double t : detail::log_grid(0.1, 5.0, 20))
        worst = std::max(worst, detail::rel_err(g.evaluate(t).value, invert(image, t)));
    }
    return detail::bound(worst, 1e-5);
  });
}

/// Least-squares slope of log y against log n.
inline double loglog_slope(const std::vector<double>& n, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double x = std::log(n[i]), v = std::log(y[i]);
    sx += x; sy += v; sxx += x * x; sxy += x * v;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

/// Outer ratio |a_{n+1}(0; t)/a_n(0; t)| of the relaxation double series:
/// must tend to zero, and n times it must stay bounded for n >= 10. The
/// latter is checked as "log-log slope of n * ratio over n in [100, 1000]
/// is <= 0.05"; a positive power-law slope means unbounded growth.
inline CheckResult check_relaxation_ratio(const std::vector<PrabhakarTriplet>& triplets) {
  return detail::guarded("material/outer-ratio-test (ratio -> 0 and n*ratio bounded for n >= 10)", [&] {
    bool to_zero = true, bounded = true;
    std::ostringstream os;
    for (const auto& p : triplets) {
      const MaterialParams mp{1.0, 1.0, p};
      for (double t : {1.0, 5.0}) {
        const auto r = outer_ratio_profile(mp, t, 0, 10, 1000);
        std::vector<double> ns, scaled, raw;
        for (std::size_t i = 90; i < r.size(); ++i) {
          ns.push_back(10.0 + i);
          scaled.push_back(r[i] * (10.0 + i));
          raw.push_back(r[i]);
        }
        const double slope = loglog_slope(ns, scaled);
        const double decay = loglog_slope(ns, raw);
        to_zero = to_zero && decay < 0.0 && r.back() < r.front();
        bounded = bounded && slope <= 0.05;
        if (t == 1.0)
          os << "beta=" << p.beta << ": n*ratio " << detail::sci(r.front() * 10) << " (n=10) -> "
             << detail::sci(r.back() * 1000) << " (n=1000), ratio ~ n^" << decay << "; ";
      }
    }
    os << (to_zero ? "ratio -> 0" : "ratio does NOT tend to 0") << ", "
       << (bounded ? "n*ratio bounded" : "n*ratio grows (decay slower than 1/n)");
    return CheckResult{"", to_zero && bounded, os.str()};
  });
}

inline CheckResult check_reciprocity() {
  return detail::guarded("material/image-reciprocity (s^2 J~ G~ = 1, 500 draws, 1e-13)", [&] {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> ab(-3.0, 3.0), al(0.3, 1.5), be(0.05, 0.95), ga(-2.0, 2.0),
        om(-3.0, 0.0), re(0.05, 5.0), im(-5.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
      double a = ab(rng), b = ab(rng);
      if (std::fabs(a) < 0.1) a = 0.5;
      if (std::fabs(b) < 0.1) b = -0.5;
      const MaterialParams mp{a, b, {al(rng), be(rng), ga(rng), om(rng)}};
      const complex s(re(rng), im(rng));
      const complex prod = s * s * creep_compliance_image(mp, s) * relaxation_modulus_image(mp, s);
      worst = std::max(worst, std::abs(prod - 1.0));
    }
    return detail::bound(worst, 1e-13, "max |s^2 J~ G~ - 1|");
  });
}

inline CheckResult check_constitutive_closure(const TruncationPolicy& policy = {}) {
  return detail::guarded("material/fractional-maxwell-closure (gamma=0, 1e-12)", [&] {
    const MaterialParams mp{1.0, 1.0, {0.7, 0.5, 0.0, -1.0}};
    double worst = 0.0;
    for (double t : detail::log_grid(1e-3, 10.0, 30)) {
      const double classical = 1.0 + std::pow(t, 0.5) / std::tgamma(1.5);
      worst = std::max(worst, detail::rel_err(creep_compliance(mp, t, policy), classical));
    }
    return detail::bound(worst, 1e-12);
  });
}

/// Step strain reproduces G exactly; ramp strain survives stress -> strain.
inline CheckResult check_end_to_end(const TruncationPolicy& policy = kRelaxationPolicy) {
  return detail::guarded("material/end-to-end-superposition (step exact 1e-12, round trip 2%)", [&] {
    double step_worst = 0.0;
    for (const auto& p : material_triplets()) {
      const MaterialParams mp{1.0, 1.0, p};
      const ExperimentSpec spec{ExperimentMode::relaxation, 1.0, 5.0, 1e-2};
      const auto r = run_step_experiment(spec, mp, policy);
      for (std::size_t i = 1; i < r.response.size(); ++i)
        step_worst = std::max(step_worst, detail::rel_err(r.response.values[i],
                                                          relaxation_modulus(mp, r.response.time(i), policy)));
    }
    double trip_worst = 0.0;
    std::vector<PrabhakarTriplet> trip = material_triplets();
    trip.push_back({0.7, 0.7, 0.8, -1.0});
    for (const auto& p : trip) {
      const MaterialParams mp{1.0, 1.0, p};
      const auto ramp = SampledSignal::sample([](double t) { return t; }, 0.0, 1e-3, 2001);
      const auto stress = simulate_stress(ramp, mp, policy);
      const auto back = simulate_strain(stress, mp);
      double err = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < ramp.size(); ++i) {
        err = std::max(err, std::fabs(back.values[i] - ramp.values[i]));
        scale = std::max(scale, std::fabs(ramp.values[i]));
      }
      trip_worst = std::max(trip_worst, err / scale);
    }
    return CheckResult{"", step_worst < 1e-12 && trip_worst < 0.02,
                       "step vs G rel " + detail::sci(step_worst) + " (tol 1e-12); round trip " +
                           detail::sci(trip_worst) + " (tol 2e-2)"};
  });
}

inline Suite material_suite(const TruncationPolicy& policy = {}) {
  TruncationPolicy relax = policy;
  relax.rtol = std::max(relax.rtol, kRelaxationPolicy.rtol);
  return {check_creep_formula(policy),
          check_relaxation_series(relax),
          check_relaxation_ratio(material_triplets()),
          check_reciprocity(),
          check_constitutive_closure(policy),
          check_end_to_end(relax)};
}

// ---------------------------------------------------------------------------
// reductions

inline CheckResult check_reductions() {
  return detail::guarded("reductions/classical-maps (3 draws each, residual 1e-12)", [&] {
    std::mt19937_64 rng(1971);
    std::uniform_real_distribution<double> pos(0.2, 5.0), nu(0.1, 0.9);
    double worst = 0.0, voigt_abs = 0.0;
    bool voigt_flag = true;
    for (int draw = 0; draw < 3; ++draw) {
      const double A = pos(rng), B = pos(rng), M = pos(rng), v = nu(rng);
      for (const char* variant : {"i", "ii"}) {
        worst = std::max(worst, reduce_to_classical({ClassicalModel::fractional_maxwell, A, B, M, v}, variant).max_residual);
        worst = std::max(worst, reduce_to_classical({ClassicalModel::fractional_zener, A, B, M, v}, variant).max_residual);
      }
      const ClassicalModelSpec voigt{ClassicalModel::fractional_voigt, 0.0, B, M, v};
      const ReductionReport rep = reduce_to_classical(voigt, "i");
      voigt_flag = voigt_flag && rep.sign_mismatch;
      for (const complex& s : reduction_probes())
        voigt_abs = std::max(voigt_abs, std::fabs(std::abs(s * creep_compliance_image(rep.mapped, s)) -
                                                  std::abs(voigt.s_creep(s))));
    }
    return CheckResult{"", worst < 1e-12 && voigt_abs < 1e-12 && voigt_flag,
                       "maxwell/zener max residual " + detail::sci(worst) + "; voigt | |sJ| gap " +
                           detail::sci(voigt_abs) + ", sign_mismatch " + (voigt_flag ? "true" : "false")};
  });
}

inline Suite reductions_suite() { return {check_reductions()}; }

inline bool all_passed(const Suite& s) {
  return std::all_of(s.begin(), s.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace prabhakar::verify
