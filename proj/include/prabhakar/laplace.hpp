#pragma once

// Numerical inverse Laplace transform used as an independent oracle for the
// closed-form time-domain results.  Two unrelated algorithms are provided so
// that a failure of the oracle can be told apart from a formula bug:
//
//  * fixed Talbot (Abate & Valko, 2004): deformed Bromwich contour
//      s(theta) = r theta (cot theta + i), r = 2M / (5t);
//  * Euler summation (Abate & Whitt, 2006): trapezoidal rule on the Bromwich
//    line Re s = M ln(10) / (3t) accelerated by binomial (Euler) averaging.
//
// Both run in plain double precision. Fractional powers use the principal
// branch (cut along the negative real axis).

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "prabhakar/types.hpp"

namespace prabhakar {

using complex = std::complex<double>;

/// An s-domain function together with a real abscissa; all singularities
/// lie at Re(s) <= abscissa.
struct LaplaceImage {
  std::function<complex(complex)> eval;
  double abscissa = 0.0;
};

enum class InversionMethod { fixed_talbot, euler };

struct InversionConfig {
  InversionMethod method = InversionMethod::fixed_talbot;
  /// Talbot: number of contour nodes M. Euler: number of series terms; the
  /// Euler parameter is M = nodes / 2, giving 2M + 1 image evaluations.
  /// Euler's 10^(M/3) prefactor amplifies roundoff, so in double precision
  /// accuracy peaks near nodes = 32 (~1e-8) and degrades beyond ~40.
  int nodes = 32;
  int working_precision_digits = 16;

  static InversionConfig talbot(int nodes = 32) {
    return {InversionMethod::fixed_talbot, nodes, 16};
  }
  static InversionConfig euler(int nodes = 32) { return {InversionMethod::euler, nodes, 16}; }

  void validate() const {
    if (nodes < 8) throw DomainError("InversionConfig: nodes must be >= 8");
    if (working_precision_digits < 1 || working_precision_digits > 16)
      throw UnsupportedError(
          "InversionConfig: only double working precision (<= 16 digits) is implemented");
  }
};

/// The image could not be evaluated at a contour node.
class InversionError : public std::runtime_error {
 public:
  InversionError(const std::string& what, complex s) : std::runtime_error(what), s_(s) {}
  complex node() const noexcept { return s_; }

 private:
  complex s_;
};

namespace detail {

inline complex eval_image(const LaplaceImage& image, complex s) {
  complex v;
  try {
    v = image.eval(s);
  } catch (const std::exception& e) {
    std::ostringstream os;
    os << "invert: image evaluation failed at s = " << s << ": " << e.what();
    throw InversionError(os.str(), s);
  }
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "invert: image is not finite at s = " << s;
    throw InversionError(os.str(), s);
  }
  return v;
}

// Shift so the contour sits right of every singularity.
inline double contour_shift(const LaplaceImage& image) {
  return image.abscissa > 0.0 ? image.abscissa : 0.0;
}

inline double talbot(const LaplaceImage& image, double t, int m) {
  const double shift = contour_shift(image);
  const double r = 2.0 * m / (5.0 * t);
  double acc = 0.5 * std::exp(r * t) * detail::eval_image(image, complex(r + shift, 0.0)).real();
  for (int k = 1; k < m; ++k) {
    const double theta = k * std::numbers::pi / m;
    const double cot = std::cos(theta) / std::sin(theta);
    const complex s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const complex term =
        std::exp(t * s) * detail::eval_image(image, s + shift) * complex(1.0, sigma);
    acc += term.real();
  }
  return std::exp(shift * t) * (r / m) * acc;
}

// Euler weights eta_k, k = 0..2M.
inline std::vector<double> euler_weights(int m) {
  std::vector<double> xi(2 * m + 1, 1.0);
  xi[0] = 0.5;
  xi[2 * m] = std::ldexp(1.0, -m);
  double binom = 1.0;  // C(m, k)
  for (int k = 1; k < m; ++k) {
    binom = binom * (m - k + 1) / k;
    xi[2 * m - k] = xi[2 * m - k + 1] + std::ldexp(binom, -m);
  }
  std::vector<double> eta(2 * m + 1);
  for (int k = 0; k <= 2 * m; ++k) eta[k] = (k % 2 == 0 ? 1.0 : -1.0) * xi[k];
  return eta;
}

inline double euler(const LaplaceImage& image, double t, int nodes) {
  const int m = nodes / 2;
  const double shift = contour_shift(image);
  const std::vector<double> eta = euler_weights(m);
  const double a = m * std::log(10.0) / 3.0;
  double acc = 0.0;
  for (int k = 0; k <= 2 * m; ++k) {
    const complex s(a / t, k * std::numbers::pi / t);
    acc += eta[k] * detail::eval_image(image, s + shift).real();
  }
  return std::exp(shift * t) * std::pow(10.0, m / 3.0) / t * acc;
}

}  // namespace detail

/// f(t) from its Laplace image F(s), t > 0.
inline double invert(const LaplaceImage& image, double t, const InversionConfig& cfg = {}) {
  cfg.validate();
  if (!(t > 0.0)) throw DomainError("invert: t must be positive");
  if (!image.eval) throw DomainError("invert: empty image");
  const double f = cfg.method == InversionMethod::fixed_talbot
                       ? detail::talbot(image, t, cfg.nodes)
                       : detail::euler(image, t, cfg.nodes);
  if (!std::isfinite(f)) {
    std::ostringstream os;
    os << "invert: inversion unstable at t = " << t << " (non-finite result); try more nodes";
    throw InversionError(os.str(), complex(0.0, 0.0));
  }
  return f;
}

enum class GammaSign { plus_gamma, minus_gamma };

/// s^(-beta) (1 - omega s^(-alpha))^(-gamma) for plus_gamma (the image of the
/// kernel e^gamma_{alpha,beta}(omega; t)), or with exponent +gamma for
/// minus_gamma (image of e^{-gamma}_{alpha,beta}).
inline complex prabhakar_image(const PrabhakarTriplet& p, GammaSign sign, complex s) {
  if (s == complex(0.0, 0.0)) throw DomainError("prabhakar_image: s = 0");
  const complex bracket = 1.0 - p.omega * std::pow(s, -p.alpha);
  const double g = sign == GammaSign::plus_gamma ? -p.gamma : p.gamma;
  const complex power = p.gamma == 0.0 ? complex(1.0, 0.0) : std::pow(bracket, g);
  return std::pow(s, -p.beta) * power;
}

/// Rightmost singularity of prabhakar_image: the root s = omega^(1/alpha)
/// of the bracket when omega > 0, else the branch point at 0.
inline double prabhakar_abscissa(const PrabhakarTriplet& p) {
  return p.omega > 0.0 ? std::pow(p.omega, 1.0 / p.alpha) : 0.0;
}

inline LaplaceImage prabhakar_kernel_image(const PrabhakarTriplet& p,
                                           GammaSign sign = GammaSign::plus_gamma) {
  return {[p, sign](complex s) { return prabhakar_image(p, sign, s); }, prabhakar_abscissa(p)};
}

}  // namespace prabhakar
