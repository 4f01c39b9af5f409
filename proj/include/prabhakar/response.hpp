#pragma once

// Boltzmann superposition for the Maxwell-Prabhakar material:
//
//   sigma(t) = G(t) eps(0+) + int_0^t G(t - tau) d eps(tau)
//   eps(t)   = J(t) sigma(0+) + int_0^t J(t - tau) d sigma(tau)
//
// The Stieltjes integral is discretized with trapezoidal weights on each
// grid interval: sum_j (R_{n-j} + R_{n-j-1}) / 2 (x_{j+1} - x_j). A jump is
// only representable at t = 0, through the first sample.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "prabhakar/maxwell.hpp"
#include "prabhakar/operators.hpp"

namespace prabhakar {

/// Response y_n = R_n x_0 + sum_{j<n} (R_{n-j} + R_{n-j-1}) / 2 (x_{j+1} - x_j)
/// for a response-function table R on the same grid as the input x.
inline SampledSignal superpose(const SampledSignal& input, std::span<const double> table) {
  input.validate();
  const std::size_t n = input.size();
  if (table.size() < n) throw DomainError("superpose: response table shorter than input");
  const auto& x = input.values;
  std::vector<double> dx(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) dx[j] = x[j + 1] - x[j];
  SampledSignal y{input.t0, input.h, std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    detail::CompensatedSum<long double> acc;
    acc.add(static_cast<long double>(table[i]) * x[0]);
    for (std::size_t j = 0; j < i; ++j) {
      if (dx[j] == 0.0) continue;
      acc.add(0.5L * (static_cast<long double>(table[i - j]) + table[i - j - 1]) * dx[j]);
    }
    y.values[i] = static_cast<double>(acc.value());
  }
  return y;
}

/// G on the grid t_i = i h, with G(0) = b/a.
inline std::vector<double> relaxation_table(const MaterialParams& mp, double h, std::size_t n,
                                            const TruncationPolicy& policy = kRelaxationPolicy) {
  RelaxationSeries series(mp, policy);
  std::vector<double> g(n);
  g[0] = mp.b / mp.a;
  for (std::size_t i = 1; i < n; ++i) g[i] = series.evaluate(static_cast<double>(i) * h).value;
  return g;
}

/// J on the grid t_i = i h, with J(0) = a/b.
inline std::vector<double> creep_table(const MaterialParams& mp, double h, std::size_t n,
                                       const TruncationPolicy& policy = {}) {
  mp.validate();
  const auto& p = mp.p;
  PrabhakarSeries series(p.alpha, p.beta + 1.0, p.gamma);
  std::vector<double> j(n);
  j[0] = mp.a / mp.b;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i) * h;
    const double e = static_cast<double>(series.evaluate(p.omega * std::pow(t, p.alpha), policy).value);
    j[i] = mp.a / mp.b + std::pow(t, p.beta) / mp.b * e;
  }
  return j;
}

namespace detail {

inline void require_origin(const SampledSignal& s, const char* op) {
  if (s.t0 != 0.0) {
    std::ostringstream os;
    os << op << ": input must start at t0 = 0, got " << s.t0;
    throw DomainError(os.str());
  }
}

}  // namespace detail

/// Stress history for a prescribed strain history (strain.t0 must be 0).
inline SampledSignal simulate_stress(const SampledSignal& strain, const MaterialParams& mp,
                                     const TruncationPolicy& policy = kRelaxationPolicy) {
  strain.validate();
  detail::require_origin(strain, "simulate_stress");
  mp.validate_for_relaxation();
  const auto g = relaxation_table(mp, strain.h, strain.size(), policy);
  return superpose(strain, g);
}

/// Strain history for a prescribed stress history (stress.t0 must be 0).
/// Appends a warning if the initial jumps violate a sigma(0+) = b eps(0+).
inline SampledSignal simulate_strain(const SampledSignal& stress, const MaterialParams& mp,
                                     const TruncationPolicy& policy = {},
                                     std::vector<std::string>* warnings = nullptr) {
  stress.validate();
  detail::require_origin(stress, "simulate_strain");
  mp.validate();
  const auto j = creep_table(mp, stress.h, stress.size(), policy);
  SampledSignal strain = superpose(stress, j);
  const double lhs = mp.a * stress.values[0];
  const double rhs = mp.b * strain.values[0];
  if (warnings && std::fabs(lhs - rhs) > 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)})) {
    std::ostringstream os;
    os << "initial data incompatible: a sigma(0+) = " << lhs << " but b eps(0+) = " << rhs;
    warnings->push_back(os.str());
  }
  return strain;
}

enum class ExperimentMode { creep, relaxation, custom };

struct ExperimentSpec {
  ExperimentMode mode = ExperimentMode::relaxation;
  double amplitude = 1.0;
  double t_end = 1.0;
  double h = 1e-2;

  void validate() const {
    if (!(h > 0.0) || !(t_end > h)) throw DomainError("ExperimentSpec: need t_end > h > 0");
    if (!std::isfinite(amplitude) || !std::isfinite(t_end))
      throw DomainError("ExperimentSpec: amplitude and t_end must be finite");
  }
  std::size_t points() const { return static_cast<std::size_t>(std::llround(t_end / h)) + 1; }
};

struct ExperimentResult {
  SampledSignal input;     ///< stress (creep) or strain (relaxation / custom strain drive)
  SampledSignal response;  ///< strain (creep) or stress
  std::vector<std::string> warnings;
};

/// Step-stress (creep) or step-strain (relaxation) test of amplitude
/// spec.amplitude applied at t = 0.
inline ExperimentResult run_step_experiment(const ExperimentSpec& spec, const MaterialParams& mp,
                                            const TruncationPolicy& policy = {}) {
  spec.validate();
  if (spec.mode == ExperimentMode::custom)
    throw DomainError("run_step_experiment: custom mode needs an input signal");
  ExperimentResult r;
  r.input = SampledSignal{0.0, spec.h, std::vector<double>(spec.points(), spec.amplitude)};
  if (spec.mode == ExperimentMode::creep)
    r.response = simulate_strain(r.input, mp, policy, &r.warnings);
  else {
    TruncationPolicy relax = policy;
    relax.rtol = std::max(relax.rtol, kRelaxationPolicy.rtol);
    r.response = simulate_stress(r.input, mp, relax);
  }
  return r;
}

}  // namespace prabhakar
