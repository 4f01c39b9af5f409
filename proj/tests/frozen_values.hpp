#pragma once

// Reference values produced by tests/oracle/freeze_values.py (mpmath Talbot
// inversion at 40 digits, cross-checked against direct series or closed
// forms). Rounded to 17 significant digits.

namespace frozen {

// E^{0.8}_{0.7,1}(-1)
inline constexpr double kMlf3_a07_b1_g08_zm1 = 0.49050215655313466;
// E_{1/2}(-1) = e erfc(1)
inline constexpr double kMlf2_a05_b1_zm1 = 0.42758357615580700;
// e^{0.8}_{0.7,0.56}(-1; 2)
inline constexpr double kKernel_a07_b056_g08_t2 = 0.072817787589843397;
// regularized Prabhakar derivative of t^2, (0.7, 0.4, 0.8, -1)
inline constexpr double kPderivT2_t1 = 1.9720419627925868;
inline constexpr double kPderivT2_t2 = 7.0051495200306792;
inline constexpr double kPderivT2_t3 = 15.026851575207013;
// Caputo-Fabrizio of t^2, alpha = 0.3, M = 1, t = 2
inline constexpr double kCfT2_a03_t2 = 4.3791331549747771;
// J(2), a = b = 1, (0.7, 0.6, 0.8, -1)
inline constexpr double kCreep_t2 = 1.8196733271938147;
// G(1), a = b = 1, (0.7, 0.7, 0.8, -1)
inline constexpr double kRelax_t1 = 0.56873087792869449;

}  // namespace frozen
