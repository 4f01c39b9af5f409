#pragma once

// Three-parameter (Prabhakar) Mittag-Leffler function by direct series
// summation:
//
//   E^g_{a,b}(z) = sum_k (g)_k z^k / (Gamma(a k + b) k!)
//
// Coefficients (g)_k / (k! Gamma(a k + b)) are built once per parameter set in
// quad precision and cached, so tabulating many z for one (a, b, g) costs a
// polynomial evaluation per point. Each evaluation is first attempted in long
// double; if the running bound on cancellation error exceeds the tolerance
// it is repeated in quad precision, and if that also fails a TruncationError
// is raised instead of returning a value with lost digits.

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "prabhakar/detail/quad.hpp"
#include "prabhakar/detail/summation.hpp"
#include "prabhakar/types.hpp"

namespace prabhakar {

/// Series evaluation outside |z| <= kMaxAbsZ or alpha >= kMinAlpha is refused
/// unless the series terminates after finitely many terms.
inline constexpr double kMaxAbsZ = 50.0;
inline constexpr double kMinAlpha = 0.3;

struct SeriesResult {
  long double value = 0;
  std::size_t terms = 0;      ///< number of terms summed
  long double error_bound = 0;  ///< rounding bound from sum of |terms|
  bool used_quad = false;
};

namespace detail {

/// 1 / Gamma(x) with zeros at the poles.
inline quad reciprocal_gamma(quad x) {
  if (x <= 0 && floorq(x) == x) return 0;
  if (x < 1700) return 1 / tgammaq(x);
  return expq(-lgammaq(x));
}

}  // namespace detail

/// Cached coefficient table for one (alpha, beta, gamma).
///
/// Not safe to share between threads: evaluate() may grow the cache.
class PrabhakarSeries {
 public:
  PrabhakarSeries(double alpha, double beta, double gamma)
      : alpha_(alpha), beta_(beta), gamma_(gamma) {
    PrabhakarTriplet{alpha, beta, gamma, 0.0}.validate();
    // (g)_k / k! for k = 0
    poch_over_fact_ = 1;
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  /// True when (gamma)_k vanishes for every k > degree(), i.e. gamma is a
  /// non-positive integer.
  bool is_polynomial() const { return gamma_ <= 0.0 && std::floor(gamma_) == gamma_; }
  std::size_t degree() const { return static_cast<std::size_t>(-gamma_); }

  SeriesResult evaluate(double z, const TruncationPolicy& policy) {
    policy.validate();
    if (!std::isfinite(z)) throw DomainError("mlf3: z must be finite");

    const bool finite_series = is_polynomial() || z == 0.0;
    if (!finite_series && (std::fabs(z) > kMaxAbsZ || alpha_ < kMinAlpha)) {
      std::ostringstream os;
      os << "mlf3: policy exhausted, (alpha=" << alpha_ << ", z=" << z
         << ") lies outside the series validity envelope |z| <= " << kMaxAbsZ
         << ", alpha >= " << kMinAlpha;
      throw TruncationError(os.str(), 0.0, 0.0, 0);
    }

    SeriesResult r = sum<long double>(z, policy);
    if (within_tolerance(r, policy)) return r;
    SeriesResult q = sum<detail::quad>(z, policy);
    q.used_quad = true;
    if (within_tolerance(q, policy)) return q;

    std::ostringstream os;
    os << "mlf3: policy exhausted, cancellation in the series for (alpha=" << alpha_
       << ", beta=" << beta_ << ", gamma=" << gamma_ << ", z=" << z
       << ") exceeds the requested tolerance (bound " << static_cast<double>(q.error_bound)
       << ")";
    throw TruncationError(os.str(), static_cast<double>(q.value),
                          static_cast<double>(q.error_bound), q.terms);
  }

 private:
  static bool within_tolerance(const SeriesResult& r, const TruncationPolicy& policy) {
    return r.error_bound <= static_cast<long double>(policy.rtol) * std::fabs(r.value) +
                                static_cast<long double>(policy.atol);
  }

  const detail::quad& coefficient(std::size_t k) {
    while (coef_.size() <= k) {
      const std::size_t j = coef_.size();
      if (j > 0) poch_over_fact_ *= (detail::quad(gamma_) + (j - 1)) / detail::quad(j);
      const detail::quad x = detail::quad(alpha_) * j + detail::quad(beta_);
      coef_.push_back(poch_over_fact_ == 0 ? detail::quad(0)
                                           : poch_over_fact_ * detail::reciprocal_gamma(x));
    }
    return coef_[k];
  }

  template <typename Real>
  SeriesResult sum(double z, const TruncationPolicy& policy) {
    using detail::magnitude;
    detail::CompensatedSum<Real> acc;
    const Real zr = static_cast<Real>(z);
    Real zpow = 1;
    // sum_k (k + 2) |term_k|: each term carries O(k) roundings from z^k.
    Real weighted_abs = 0;
    int quiet = 0;
    std::size_t k = 0;
    Real term = 0;
    for (;; ++k) {
      if (k >= policy.max_terms) {
        std::ostringstream os;
        os << "mlf3: truncation budget exhausted after " << k << " terms (alpha=" << alpha_
           << ", beta=" << beta_ << ", gamma=" << gamma_ << ", z=" << z << ")";
        throw TruncationError(os.str(), static_cast<double>(acc.value()),
                              static_cast<double>(magnitude(term)), k);
      }
      term = static_cast<Real>(coefficient(k)) * zpow;
      acc.add(term);
      weighted_abs += Real(k + 2) * magnitude(term);

      if ((is_polynomial() && k >= degree()) || z == 0.0) {
        ++k;
        break;
      }
      const Real s = acc.value();
      if (magnitude(term) <= Real(policy.rtol) * magnitude(s) + Real(policy.atol)) {
        if (++quiet == 2) {
          ++k;
          break;
        }
      } else {
        quiet = 0;
      }
      zpow *= zr;
    }
    SeriesResult r;
    r.value = static_cast<long double>(acc.value());
    r.terms = k;
    r.error_bound = static_cast<long double>(weighted_abs * detail::epsilon<Real>());
    return r;
  }

  double alpha_;
  double beta_;
  double gamma_;
  detail::quad poch_over_fact_;
  std::vector<detail::quad> coef_;
};

/// E^gamma_{alpha,beta}(z) with the full evaluation record.
inline SeriesResult mlf3_detailed(double alpha, double beta, double gamma, double z,
                                  const TruncationPolicy& policy = {}) {
  if (!(alpha > 0.0)) {
    std::ostringstream os;
    os << "mlf3: alpha must be positive, got " << alpha;
    throw DomainError(os.str());
  }
  PrabhakarSeries series(alpha, beta, gamma);
  return series.evaluate(z, policy);
}

inline double mlf3(double alpha, double beta, double gamma, double z,
                   const TruncationPolicy& policy = {}) {
  return static_cast<double>(mlf3_detailed(alpha, beta, gamma, z, policy).value);
}

/// Two-parameter function E_{alpha,beta}(z) = E^1_{alpha,beta}(z).
inline double mlf2(double alpha, double beta, double z, const TruncationPolicy& policy = {}) {
  return mlf3(alpha, beta, 1.0, z, policy);
}

/// One-parameter function E_alpha(z) = E^1_{alpha,1}(z).
inline double mlf1(double alpha, double z, const TruncationPolicy& policy = {}) {
  return mlf3(alpha, 1.0, 1.0, z, policy);
}

/// e^gamma_{alpha,beta}(omega; t) = t^(beta-1) E^gamma_{alpha,beta}(omega t^alpha), t > 0.
inline double prabhakar_kernel(const PrabhakarTriplet& p, double t,
                               const TruncationPolicy& policy = {}) {
  p.validate();
  if (!(t > 0.0)) {
    std::ostringstream os;
    os << "prabhakar_kernel: t must be positive, got " << t;
    throw DomainError(os.str());
  }
  const double z = p.omega * std::pow(t, p.alpha);
  return std::pow(t, p.beta - 1.0) * mlf3(p.alpha, p.beta, p.gamma, z, policy);
}

}  // namespace prabhakar
