#pragma once

// Maxwell-Prabhakar viscoelastic model
//
//   sigma + a D sigma = b D eps,   D = regularized Prabhakar derivative,
//
// its material functions (creep compliance J, relaxation modulus G), their
// Laplace images, and the parameter maps onto the classical fractional
// Maxwell, Voigt and Zener models.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "prabhakar/laplace.hpp"
#include "prabhakar/mlf.hpp"
#include "prabhakar/types.hpp"

namespace prabhakar {

struct MaterialParams {
  double a = 1.0;
  double b = 1.0;
  PrabhakarTriplet p;

  void validate() const {
    p.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("MaterialParams: a, b must be finite");
    if (b == 0.0) throw DomainError("MaterialParams: b must be nonzero");
  }
  void validate_for_relaxation() const {
    validate();
    if (a == 0.0) throw DomainError("relaxation modulus needs a != 0");
  }
};

/// J(t) = a/b + (t^beta / b) E^gamma_{alpha,beta+1}(omega t^alpha), t > 0.
inline double creep_compliance(const MaterialParams& mp, double t,
                               const TruncationPolicy& policy = {}) {
  mp.validate();
  if (!(t > 0.0)) throw DomainError("creep_compliance: t must be positive");
  const auto& p = mp.p;
  const double e = mlf3(p.alpha, p.beta + 1.0, p.gamma, p.omega * std::pow(t, p.alpha), policy);
  return mp.a / mp.b + std::pow(t, p.beta) / mp.b * e;
}

/// Default policy for G(t). The double series cancels heavily at large t
/// (inner sums of size ~1e9 collapsing to ~1e-17), so 1e-12 is the tightest
/// relative tolerance that stays attainable across the validity envelope.
inline constexpr TruncationPolicy kRelaxationPolicy{1e-12, 0.0, 5000};

/// Summation record of the relaxation series.
struct RelaxationResult {
  double value = 0.0;
  std::size_t outer_terms = 0;
  double largest_term = 0.0;
  double last_term = 0.0;
  std::vector<double> terms;  ///< outer terms b/a (-a)^-n t^(beta n) E^{gamma n}_{alpha, beta n + 1}
};

/// G(t) = (b/a) sum_n (-a)^-n t^(beta n) E^{gamma n}_{alpha, beta n + 1}(omega t^alpha).
///
/// Keeps one cached inner series per outer index, so evaluating many t for a
/// fixed material is cheap. Not thread-safe.
class RelaxationSeries {
 public:
  explicit RelaxationSeries(const MaterialParams& mp,
                            const TruncationPolicy& policy = kRelaxationPolicy)
      : mp_(mp), policy_(policy) {
    mp_.validate_for_relaxation();
    policy_.validate();
  }

  const MaterialParams& params() const { return mp_; }

  RelaxationResult evaluate(double t) {
    if (!(t > 0.0)) throw DomainError("relaxation_modulus: t must be positive");
    const auto& p = mp_.p;
    const double z = p.omega * std::pow(t, p.alpha);
    const long double log_tb = p.beta * std::log(static_cast<long double>(t));
    const long double log_a = std::log(std::fabs(static_cast<long double>(mp_.a)));
    const long double prefactor = static_cast<long double>(mp_.b) / mp_.a;

    RelaxationResult r;
    detail::CompensatedSum<long double> acc;
    int quiet = 0;
    std::size_t n = 0;
    for (;; ++n) {
      if (n >= policy_.max_terms) {
        std::ostringstream os;
        os << "relaxation_modulus: truncation budget exhausted at n = " << n << " (t = " << t
           << ", largest term " << r.largest_term << ", last term " << r.last_term << ")";
        throw TruncationError(os.str(), static_cast<double>(acc.value()), r.last_term, n);
      }
      // (-a)^-n t^(beta n), in logs to survive large n
      const long double sign = (mp_.a > 0.0 && n % 2 == 1) ? -1.0L : 1.0L;
      const long double scale = sign * std::exp(static_cast<long double>(n) * (log_tb - log_a));
      // The inner value only needs absolute accuracy relative to the outer
      // partial sum; late inner series are tiny and heavily cancelling.
      TruncationPolicy inner_policy = policy_;
      const long double weight = std::fabs(prefactor * scale);
      if (n > 0 && weight > 0)
        inner_policy.atol = static_cast<double>(
            (policy_.atol + policy_.rtol * std::fabs(acc.value())) / weight);
      const long double inner = inner_series(n).evaluate(z, inner_policy).value;
      const long double term = prefactor * scale * inner;
      acc.add(term);
      r.terms.push_back(static_cast<double>(term));
      r.largest_term = std::max(r.largest_term, std::fabs(static_cast<double>(term)));
      r.last_term = static_cast<double>(term);
      if (policy_.negligible(term, acc.value())) {
        if (++quiet == 2) break;
      } else {
        quiet = 0;
      }
    }
    r.outer_terms = n + 1;
    r.value = static_cast<double>(acc.value());
    return r;
  }

 private:
  PrabhakarSeries& inner_series(std::size_t n) {
    while (inner_.size() <= n) {
      const double k = static_cast<double>(inner_.size());
      inner_.emplace_back(mp_.p.alpha, mp_.p.beta * k + 1.0, mp_.p.gamma * k);
    }
    return inner_[n];
  }

  MaterialParams mp_;
  TruncationPolicy policy_;
  std::vector<PrabhakarSeries> inner_;
};

inline RelaxationResult relaxation_modulus_detailed(
    const MaterialParams& mp, double t, const TruncationPolicy& policy = kRelaxationPolicy) {
  RelaxationSeries series(mp, policy);
  return series.evaluate(t);
}

inline double relaxation_modulus(const MaterialParams& mp, double t,
                                 const TruncationPolicy& policy = kRelaxationPolicy) {
  return relaxation_modulus_detailed(mp, t, policy).value;
}

/// |a_{n+1}(k; t) / a_n(k; t)| for n = n_first..n_last, where
///   a_n(k; t) = (-a)^-n t^(beta n) (gamma n)_k / Gamma(alpha k + beta n + 1) (omega t^alpha)^k / k!
/// is the double-series term of G(t). Evaluated in logs; n_first >= 1.
inline std::vector<double> outer_ratio_profile(const MaterialParams& mp, double t, unsigned k,
                                               std::size_t n_first, std::size_t n_last) {
  mp.validate_for_relaxation();
  if (!(t > 0.0) || n_first < 1 || n_last < n_first)
    throw DomainError("outer_ratio_profile: need t > 0 and 1 <= n_first <= n_last");
  const auto& p = mp.p;
  auto log_abs_term = [&](std::size_t n) {
    const double gn = p.gamma * static_cast<double>(n);
    double log_poch = 0.0;
    for (unsigned j = 0; j < k; ++j) log_poch += std::log(std::fabs(gn + j));
    return -static_cast<double>(n) * std::log(std::fabs(mp.a)) +
           p.beta * static_cast<double>(n) * std::log(t) + log_poch -
           std::lgamma(p.alpha * k + p.beta * static_cast<double>(n) + 1.0);
  };
  std::vector<double> ratios;
  double prev = log_abs_term(n_first);
  for (std::size_t n = n_first; n <= n_last; ++n) {
    const double next = log_abs_term(n + 1);
    ratios.push_back(std::exp(next - prev));
    prev = next;
  }
  return ratios;
}

/// J~(s) = a/(b s) + 1 / (b s^(beta+1) (1 - omega s^-alpha)^gamma).
inline complex creep_compliance_image(const MaterialParams& mp, complex s) {
  mp.validate();
  if (s == complex(0.0, 0.0)) throw DomainError("creep_compliance_image: s = 0");
  const auto& p = mp.p;
  const complex q = prabhakar_image({p.alpha, -p.beta, p.gamma, p.omega}, GammaSign::minus_gamma, s);
  return mp.a / (mp.b * s) + 1.0 / (mp.b * s * q);
}

/// G~(s) = (b/(a s)) [1 + 1/(a s^beta (1 - omega s^-alpha)^gamma)]^-1,
/// written as b Q / (s (a Q + 1)) with Q = s^beta (1 - omega s^-alpha)^gamma.
inline complex relaxation_modulus_image(const MaterialParams& mp, complex s) {
  mp.validate();
  if (s == complex(0.0, 0.0)) throw DomainError("relaxation_modulus_image: s = 0");
  const auto& p = mp.p;
  const complex q = prabhakar_image({p.alpha, -p.beta, p.gamma, p.omega}, GammaSign::minus_gamma, s);
  return mp.b * q / (s * (mp.a * q + 1.0));
}

inline LaplaceImage creep_image(const MaterialParams& mp) {
  return {[mp](complex s) { return creep_compliance_image(mp, s); }, prabhakar_abscissa(mp.p)};
}

/// The abscissa covers the bracket root only; poles of G~ from a Q + 1 = 0
/// with a < 0 are not located.
inline LaplaceImage relaxation_image(const MaterialParams& mp) {
  return {[mp](complex s) { return relaxation_modulus_image(mp, s); }, prabhakar_abscissa(mp.p)};
}

// ---------------------------------------------------------------------------
// Classical reductions

enum class ClassicalModel { fractional_maxwell, fractional_voigt, fractional_zener };

struct ClassicalModelSpec {
  ClassicalModel kind = ClassicalModel::fractional_maxwell;
  double A = 0.0;
  double B = 1.0;
  double M = 1.0;
  double nu = 0.5;

  void validate() const {
    if (!(nu > 0.0 && nu < 1.0)) throw DomainError("classical model: need 0 < nu < 1");
    switch (kind) {
      case ClassicalModel::fractional_maxwell:
        if (!(A > 0.0 && B > 0.0)) throw DomainError("fractional Maxwell: need A, B > 0");
        break;
      case ClassicalModel::fractional_voigt:
        if (!(M > 0.0 && B > 0.0)) throw DomainError("fractional Voigt: need M, B > 0");
        break;
      case ClassicalModel::fractional_zener:
        if (!(M > 0.0 && A > 0.0 && B > 0.0)) throw DomainError("fractional Zener: need M, A, B > 0");
        break;
    }
  }

  /// s J~(s) of the classical model.
  complex s_creep(complex s) const {
    switch (kind) {
      case ClassicalModel::fractional_maxwell: {
        const double tau = std::pow(A, 1.0 / nu);  // tau^nu = A
        return (A / B) * (1.0 + 1.0 / std::pow(tau * s, nu));
      }
      case ClassicalModel::fractional_voigt: {
        const double tau = std::pow(B / M, 1.0 / nu);  // tau^nu = B/M
        return 1.0 / (M * (1.0 + std::pow(tau * s, nu)));
      }
      case ClassicalModel::fractional_zener: {
        const complex snu = std::pow(s, nu);
        return (1.0 / M) * (1.0 + A * snu) / (1.0 + B * snu / M);
      }
    }
    return {};
  }
};

struct ReductionReport {
  MaterialParams mapped;
  std::string variant;        ///< e.g. "maxwell-i", "zener-ii"
  double max_residual = 0.0;  ///< max |s J~_mapped - s J~_classical| over the probes
  double flipped_residual = 0.0;  ///< same with the sign of the mapped J~ reversed
  bool sign_mismatch = false;
  /// Fraction of probe points where |1 / (a s^beta (1 - omega s^-alpha)^gamma)| < 1.
  double series_condition_fraction = 0.0;
  bool operator_order_supported = true;  ///< 0 < beta < 1
  std::vector<std::string> notes;
};

/// 50 probe points r e^{i theta}: 10 log-spaced radii in [0.1, 10] times
/// 5 angles strictly inside (-pi/2, pi/2).
inline std::vector<complex> reduction_probes() {
  std::vector<complex> probes;
  for (int i = 0; i < 10; ++i) {
    const double r = 0.1 * std::pow(100.0, i / 9.0);
    for (int j = 0; j < 5; ++j) {
      const double theta = (std::numbers::pi / 2.0) * (-0.8 + 0.4 * j);
      probes.push_back(std::polar(r, theta));
    }
  }
  return probes;
}

namespace detail {

inline double checked_quotient(double num, double den, const char* what) {
  if (den == 0.0) {
    std::ostringstream os;
    os << "degenerate model: " << what << " has zero denominator (B = A M)";
    throw DomainError(os.str());
  }
  return num / den;
}

}  // namespace detail

/// Maps a classical model onto Maxwell-Prabhakar parameters and checks the
/// map on the probe points. variant is "i" or "ii" (Voigt has only "i").
///
/// Free parameters are pinned for determinism: Maxwell (i) takes omega = 0
/// and alpha = nu; Maxwell (ii) takes gamma = 1 and alpha = nu.
inline ReductionReport reduce_to_classical(const ClassicalModelSpec& spec, std::string_view variant) {
  spec.validate();
  if (variant != "i" && variant != "ii") {
    std::ostringstream os;
    os << "reduce: unknown variant '" << variant << "' (expected i or ii)";
    throw DomainError(os.str());
  }
  const bool first = variant == "i";
  ReductionReport rep;
  MaterialParams& m = rep.mapped;
  switch (spec.kind) {
    case ClassicalModel::fractional_maxwell:
      rep.variant = first ? "maxwell-i" : "maxwell-ii";
      m.a = spec.A;
      m.b = spec.B;
      m.p = first ? PrabhakarTriplet{spec.nu, spec.nu, 0.0, 0.0}
                  : PrabhakarTriplet{spec.nu, spec.nu, 1.0, 0.0};
      rep.notes.push_back(first ? "omega is free (any real); fixed to 0, alpha fixed to nu"
                                : "gamma is free (any real); fixed to 1, alpha fixed to nu");
      break;
    case ClassicalModel::fractional_voigt:
      if (!first) throw DomainError("reduce: the fractional Voigt model has a single map (variant i)");
      rep.variant = "voigt";
      m.a = 0.0;
      m.b = -spec.B;
      m.p = {spec.nu, spec.nu, 1.0, -spec.M / spec.B};
      break;
    case ClassicalModel::fractional_zener:
      if (first) {
        rep.variant = "zener-i";
        const double den = spec.B - spec.A * spec.M;
        m.a = detail::checked_quotient(spec.A * spec.B, den, "a = AB/(B - AM)");
        m.b = detail::checked_quotient(spec.B * spec.B, den, "b = B^2/(B - AM)");
        m.p = {spec.nu, spec.nu, 1.0, -spec.M / spec.B};
      } else {
        rep.variant = "zener-ii";
        m.a = detail::checked_quotient(spec.B, spec.A * spec.M - spec.B, "a = B/(AM - B)");
        m.b = spec.M * m.a;
        m.p = {spec.nu, 0.0, 1.0, -spec.M / spec.B};
      }
      break;
  }

  rep.operator_order_supported = m.p.beta > 0.0 && m.p.beta < 1.0;
  if (!rep.operator_order_supported)
    rep.notes.push_back("derivative-operator order beta = " + std::to_string(m.p.beta) +
                        " out of supported range (0, 1); material functions still defined");

  const auto probes = reduction_probes();
  std::size_t condition_ok = 0;
  for (const complex& s : probes) {
    const complex mapped = s * creep_compliance_image(m, s);
    const complex target = spec.s_creep(s);
    rep.max_residual = std::max(rep.max_residual, std::abs(mapped - target));
    rep.flipped_residual = std::max(rep.flipped_residual, std::abs(-mapped - target));
    const complex q =
        prabhakar_image({m.p.alpha, -m.p.beta, m.p.gamma, m.p.omega}, GammaSign::minus_gamma, s);
    if (m.a != 0.0 && std::abs(1.0 / (m.a * q)) < 1.0) ++condition_ok;
  }
  rep.series_condition_fraction = static_cast<double>(condition_ok) / probes.size();
  constexpr double kAgree = 1e-12;
  rep.sign_mismatch = rep.max_residual > kAgree && rep.flipped_residual <= kAgree;
  if (rep.sign_mismatch)
    rep.notes.push_back("mapped creep compliance is the negative of the classical one; b = +B matches exactly");
  return rep;
}

inline std::optional<ClassicalModel> parse_classical_model(std::string_view name) {
  if (name == "maxwell") return ClassicalModel::fractional_maxwell;
  if (name == "voigt") return ClassicalModel::fractional_voigt;
  if (name == "zener") return ClassicalModel::fractional_zener;
  return std::nullopt;
}

}  // namespace prabhakar
