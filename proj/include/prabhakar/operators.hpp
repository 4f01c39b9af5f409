#pragma once

// Discrete Prabhakar integral, regularized Prabhakar derivative and the
// Caputo-Fabrizio operator on uniform grids.
//
// All operators are product-integration rules: the density is replaced by its
// piecewise-linear interpolant and integrated exactly against the kernel.
// With hat functions phi_j and lag m = n - j the weights only need the first
// and second antiderivatives of the kernel,
//
//   K1(x) = int_0^x k(u) du,   K2(x) = int_0^x K1(u) du,
//
//   w(0)        = K2(h) / h
//   w(m), 0<m<n = (K2((m+1)h) - 2 K2(mh) + K2((m-1)h)) / h
//   w_first(n)  = K1(nh) - (K2(nh) - K2((n-1)h)) / h      (j = 0 endpoint)
//
// For the Prabhakar kernel K1(x) = x^b E^g_{a,b+1}(w x^a) and
// K2(x) = x^(b+1) E^g_{a,b+2}(w x^a), so the weak singularity at u = 0 is
// integrated exactly.

#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <vector>

#include "prabhakar/mlf.hpp"
#include "prabhakar/types.hpp"

namespace prabhakar {

/// Samples f(t0 + i h), i = 0..n-1.
struct SampledSignal {
  double t0 = 0.0;
  double h = 1.0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double time(std::size_t i) const { return t0 + static_cast<double>(i) * h; }

  void validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("SampledSignal: step h must be positive");
    if (!(t0 >= 0.0) || !std::isfinite(t0)) throw DomainError("SampledSignal: t0 must be >= 0");
    if (values.size() < 2) throw DomainError("SampledSignal: need at least 2 samples");
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!std::isfinite(values[i])) {
        std::ostringstream os;
        os << "SampledSignal: non-finite value at index " << i;
        throw DomainError(os.str());
      }
    }
  }

  template <typename F>
  static SampledSignal sample(F&& f, double t0, double h, std::size_t n) {
    SampledSignal s{t0, h, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) s.values[i] = f(s.time(i));
    return s;
  }
};

/// Caputo-Fabrizio parameters; the normalization M must satisfy M(0) = M(1) = 1.
struct CFParams {
  double alpha = 0.5;
  std::function<double(double)> normalization = [](double) { return 1.0; };

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      std::ostringstream os;
      os << "Caputo-Fabrizio: alpha must lie in (0, 1), got " << alpha;
      throw DomainError(os.str());
    }
    if (!normalization) throw DomainError("Caputo-Fabrizio: missing normalization");
    if (std::fabs(normalization(0.0) - 1.0) > 1e-14 || std::fabs(normalization(1.0) - 1.0) > 1e-14)
      throw DomainError("Caputo-Fabrizio: normalization must satisfy M(0) = M(1) = 1");
  }

  double rate() const { return alpha / (1.0 - alpha); }
};

/// Lag weights of a product-integration rule on a uniform grid.
struct ConvolutionWeights {
  std::vector<double> lag;    ///< w(m), m = 0..n-1 (w(0) is the j = n endpoint)
  std::vector<double> first;  ///< w_first(n), n = 1..N-1 (index n; first[0] unused)
};

namespace detail {

inline ConvolutionWeights weights_from_antiderivatives(const std::vector<long double>& k1,
                                                       const std::vector<long double>& k2,
                                                       double h) {
  const std::size_t n = k2.size();
  const long double hl = h;
  ConvolutionWeights w;
  w.lag.assign(n, 0.0);
  w.first.assign(n, 0.0);
  if (n > 1) w.lag[0] = static_cast<double>(k2[1] / hl);
  for (std::size_t m = 1; m + 1 < n; ++m)
    w.lag[m] = static_cast<double>((k2[m + 1] - 2 * k2[m] + k2[m - 1]) / hl);
  for (std::size_t j = 1; j < n; ++j)
    w.first[j] = static_cast<double>(k1[j] - (k2[j] - k2[j - 1]) / hl);
  return w;
}

/// g_n = sum_j w f_j using the weight layout above; g_0 = 0.
inline SampledSignal convolve(const SampledSignal& f, const ConvolutionWeights& w) {
  const std::size_t n = f.size();
  SampledSignal g{f.t0, f.h, std::vector<double>(n, 0.0)};
  for (std::size_t i = 1; i < n; ++i) {
      detail::CompensatedSum<long double> acc;
    acc.add(static_cast<long double>(w.first[i]) * f.values[0]);
    for (std::size_t j = 1; j < i; ++j)
      acc.add(static_cast<long double>(w.lag[i - j]) * f.values[j]);
    acc.add(static_cast<long double>(w.lag[0]) * f.values[i]);
    g.values[i] = static_cast<double>(acc.value());
  }
  return g;
}

inline std::string at_index(const char* op, std::size_t i, const std::exception& e) {
  std::ostringstream os;
  os << op << ": kernel moment failed at grid index " << i << ": " << e.what();
  return os.str();
}

}  // namespace detail

/// Product-integration weights for the kernel e^gamma_{alpha,beta}(omega; .)
/// on n grid points of step h.
inline ConvolutionWeights prabhakar_weights(const PrabhakarTriplet& p, double h, std::size_t n,
                                            const TruncationPolicy& policy = {}) {
  p.validate();
  if (!(p.beta > 0.0)) {
    std::ostringstream os;
    os << "prabhakar_integral: beta must be positive, got " << p.beta;
    throw DomainError(os.str());
  }
  // Moments are second-differenced, so carry them beyond double precision.
  TruncationPolicy tight = policy;
  tight.rtol = std::min(policy.rtol, 1e-18);
  PrabhakarSeries first(p.alpha, p.beta + 1.0, p.gamma);
  PrabhakarSeries second(p.alpha, p.beta + 2.0, p.gamma);
  std::vector<long double> k1(n, 0.0L), k2(n, 0.0L);
  for (std::size_t i = 1; i < n; ++i) {
    const long double x = static_cast<long double>(i) * h;
    const double z = p.omega * std::pow(static_cast<double>(x), p.alpha);
    try {
      k1[i] = std::pow(x, static_cast<long double>(p.beta)) * first.evaluate(z, tight).value;
      k2[i] = std::pow(x, static_cast<long double>(p.beta) + 1) * second.evaluate(z, tight).value;
    } catch (const TruncationError& e) {
      throw TruncationError(detail::at_index("prabhakar_integral", i, e), e.partial_sum(),
                            e.last_term(), e.terms());
    }
  }
  return detail::weights_from_antiderivatives(k1, k2, h);
}

/// (E^gamma_{alpha,beta,omega} f)(t_i) = int_{t0}^{t_i} e^gamma_{alpha,beta}(omega; t_i - tau) f(tau) dtau.
inline SampledSignal prabhakar_integral(const SampledSignal& f, const PrabhakarTriplet& p,
                                        const TruncationPolicy& policy = {}) {
  f.validate();
  return detail::convolve(f, prabhakar_weights(p, f.h, f.size(), policy));
}

/// Second-order finite differences: central inside, one-sided at the ends.
inline SampledSignal first_derivative(const SampledSignal& f) {
  f.validate();
  const std::size_t n = f.size();
  if (n < 3) throw DomainError("first_derivative: need at least 3 samples");
  const auto& v = f.values;
  const double inv2h = 0.5 / f.h;
  SampledSignal d{f.t0, f.h, std::vector<double>(n)};
  d.values[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2h;
  for (std::size_t i = 1; i + 1 < n; ++i) d.values[i] = (v[i + 1] - v[i - 1]) * inv2h;
  d.values[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) * inv2h;
  return d;
}

/// Regularized Prabhakar derivative for 0 < beta < 1 (m = 1):
/// E^{-gamma}_{alpha, 1-beta, omega} applied to f'.
inline SampledSignal prabhakar_derivative(const SampledSignal& f, const PrabhakarTriplet& p,
                                          const TruncationPolicy& policy = {}) {
  p.validate();
  if (!(p.beta > 0.0 && p.beta < 1.0)) {
    std::ostringstream os;
    os << "prabhakar_derivative: order beta = " << p.beta
       << " unsupported, only 0 < beta < 1 (m = 1) is implemented";
    throw UnsupportedError(os.str());
  }
  f.validate();
  if (f.size() < 3) throw DomainError("prabhakar_derivative: need at least 3 samples");
  const PrabhakarTriplet inner{p.alpha, 1.0 - p.beta, -p.gamma, p.omega};
  return prabhakar_integral(first_derivative(f), inner, policy);
}

/// Closed-form weights for the kernel exp(-lambda u).
inline ConvolutionWeights exponential_weights(double lambda, double h, std::size_t n) {
  const double x = lambda * h;
  // (x - 1 + e^-x) / x^2 and (1 - e^-x (1 + x)) / x^2 without cancellation.
  double near_end, far_end;
  if (x < 0.1) {
    double a = 0.0, b = 0.0, term = 1.0;  // term = (-x)^k / k!
    for (int k = 0; k < 20; ++k) {
      a += term / ((k + 1.0) * (k + 2.0));
      b += term * (k + 1.0) / ((k + 1.0) * (k + 2.0));
      term *= -x / (k + 1.0);
    }
    near_end = a;
    far_end = b;
  } else {
    near_end = (x + std::expm1(-x)) / (x * x);
    far_end = (-std::expm1(-x) - x * std::exp(-x)) / (x * x);
  }
  // 4 sinh^2(x/2) / x^2
  const double sh = x == 0.0 ? 1.0 : std::sinh(0.5 * x) / (0.5 * x);
  const double interior = h * sh * sh;

  ConvolutionWeights w;
  w.lag.assign(n, 0.0);
  w.first.assign(n, 0.0);
  if (n > 1) w.lag[0] = h * near_end;
  for (std::size_t m = 1; m < n; ++m) w.lag[m] = interior * std::exp(-lambda * m * h);
  for (std::size_t j = 1; j < n; ++j) w.first[j] = h * far_end * std::exp(-lambda * (j - 1.0) * h);
  return w;
}

/// (M(alpha)/(1-alpha)) int_{t0}^t exp(-alpha/(1-alpha) (t - tau)) f'(tau) dtau.
inline SampledSignal caputo_fabrizio(const SampledSignal& f, const CFParams& cf) {
  cf.validate();
  f.validate();
  const SampledSignal df = first_derivative(f);
  SampledSignal g = detail::convolve(df, exponential_weights(cf.rate(), f.h, f.size()));
  const double scale = cf.normalization(cf.alpha) / (1.0 - cf.alpha);
  for (double& v : g.values) v *= scale;
  return g;
}

/// Caputo-Fabrizio operator evaluated as the Prabhakar integral of f' with
/// triplet (1, 1, 1, -alpha/(1-alpha)), using the generic Mittag-Leffler kernel.
inline SampledSignal cf_via_prabhakar(const SampledSignal& f, const CFParams& cf,
                                      const TruncationPolicy& policy = {}) {
  cf.validate();
  f.validate();
  const PrabhakarTriplet p{1.0, 1.0, 1.0, -cf.rate()};
  SampledSignal g = prabhakar_integral(first_derivative(f), p, policy);
  const double scale = cf.normalization(cf.alpha) / (1.0 - cf.alpha);
  for (double& v : g.values) v *= scale;
  return g;
}

}  // namespace prabhakar
