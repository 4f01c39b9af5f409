#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "frozen_values.hpp"
#include "prabhakar/maxwell.hpp"

using namespace prabhakar;

TEST(Creep, OracleValue) {
  const MaterialParams mp{1.0, 1.0, {0.7, 0.6, 0.8, -1.0}};
  EXPECT_NEAR(creep_compliance(mp, 2.0), frozen::kCreep_t2, 1e-14 * frozen::kCreep_t2);
}

TEST(Creep, FractionalMaxwellLimit) {
  const MaterialParams mp{2.0, 4.0, {0.7, 0.5, 0.0, -1.0}};
  for (double t : {0.01, 0.5, 3.0})
    EXPECT_NEAR(creep_compliance(mp, t), 0.5 + std::sqrt(t) / (4.0 * std::tgamma(1.5)), 1e-14);
}

TEST(Creep, MatchesLaplaceOracle) {
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}, std::pair{-1.0, 2.0}}) {
    const MaterialParams mp{a, b, {0.4, 0.5, 2.0, -1.0}};
    for (double t : {0.1, 1.0, 10.0}) {
      const double ref = invert(creep_image(mp), t);
      EXPECT_NEAR(creep_compliance(mp, t), ref, 1e-6 * std::fabs(ref));
    }
  }
}

TEST(Creep, Rejections) {
  EXPECT_THROW(creep_compliance({1.0, 0.0, {}}, 1.0), DomainError);
  EXPECT_THROW(creep_compliance({1.0, 1.0, {}}, 0.0), DomainError);
  EXPECT_THROW(creep_compliance({NAN, 1.0, {}}, 1.0), DomainError);
}

TEST(Relaxation, OracleValue) {
  const MaterialParams mp{1.0, 1.0, {0.7, 0.7, 0.8, -1.0}};
  EXPECT_NEAR(relaxation_modulus(mp, 1.0), frozen::kRelax_t1, 1e-11 * frozen::kRelax_t1);
}

TEST(Relaxation, FractionalMaxwellIsMittagLeffler) {
  // gamma = 0: G(t) = (b/a) E_beta(-t^beta / a)
  const MaterialParams mp{2.0, 3.0, {0.6, 0.5, 0.0, -1.0}};
  for (double t : {0.1, 1.0, 4.0})
    EXPECT_NEAR(relaxation_modulus(mp, t), 1.5 * mlf1(0.5, -std::sqrt(t) / 2.0), 1e-12);
}

TEST(Relaxation, MatchesLaplaceOracle) {
  const MaterialParams mp{1.0, 1.0, {0.9, 1.5, 1.0, -1.0}};
  for (double t : {0.1, 1.0, 5.0}) {
    const double ref = invert(relaxation_image(mp), t);
    EXPECT_NEAR(relaxation_modulus(mp, t), ref, 1e-5 * std::fabs(ref));
  }
}

TEST(Relaxation, DiagnosticsAndBudget) {
  const MaterialParams mp{1.0, 1.0, {0.7, 1.0, 0.5, -1.0}};
  const auto r = relaxation_modulus_detailed(mp, 2.0);
  EXPECT_EQ(r.terms.size(), r.outer_terms);
  EXPECT_EQ(r.terms.front(), 1.0);
  EXPECT_GT(r.outer_terms, 5u);
  EXPECT_LT(std::fabs(r.last_term), 1e-12 * std::fabs(r.value));
  TruncationPolicy tight = kRelaxationPolicy;
  tight.max_terms = 3;
  EXPECT_THROW(relaxation_modulus(mp, 2.0, tight), TruncationError);
  EXPECT_THROW(relaxation_modulus({0.0, 1.0, mp.p}, 1.0), DomainError);
}

TEST(Relaxation, CachedSeriesIsConsistent) {
  const MaterialParams mp{1.0, 2.0, {0.4, 0.5, 2.0, -1.0}};
  RelaxationSeries g(mp);
  const double late = g.evaluate(3.0).value;
  EXPECT_EQ(g.evaluate(0.5).value, relaxation_modulus(mp, 0.5));
  EXPECT_EQ(late, relaxation_modulus(mp, 3.0));
}

TEST(Relaxation, OuterRatioTendsToZero) {
  const MaterialParams mp{1.0, 1.0, {0.7, 0.7, 0.8, -1.0}};
  const auto r = outer_ratio_profile(mp, 1.0, 0, 10, 1000);
  ASSERT_EQ(r.size(), 991u);
  EXPECT_LT(r.back(), r.front());
  EXPECT_LT(r.back(), 0.02);
  // beta = 1 reproduces the 1/(beta a n) law exactly.
  const auto one = outer_ratio_profile({1.0, 1.0, {0.7, 1.0, 0.8, -1.0}}, 1.0, 0, 10, 1000);
  EXPECT_NEAR(one.back() * 1000.0, 1.0, 2e-3);
}

TEST(Images, Reciprocity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 50; ++i) {
    const MaterialParams mp{u(rng), -u(rng), {u(rng), 0.5 * u(rng), u(rng) - 1.0, -u(rng)}};
    const complex s(u(rng), 3.0 * u(rng) - 3.0);
    EXPECT_NEAR(std::abs(s * s * creep_compliance_image(mp, s) * relaxation_modulus_image(mp, s) - 1.0),
                0.0, 1e-13);
  }
}

TEST(Reduce, ZenerExample) {
  const auto rep = reduce_to_classical({ClassicalModel::fractional_zener, 1.0, 3.0, 2.0, 0.6}, "i");
  EXPECT_EQ(rep.variant, "zener-i");
  EXPECT_DOUBLE_EQ(rep.mapped.a, 3.0);
  EXPECT_DOUBLE_EQ(rep.mapped.b, 9.0);
  EXPECT_DOUBLE_EQ(rep.mapped.p.omega, -0.6666666666666666);
  EXPECT_LT(rep.max_residual, 1e-12);
  EXPECT_FALSE(rep.sign_mismatch);
  EXPECT_TRUE(rep.operator_order_supported);
}

TEST(Reduce, MaxwellVariants) {
  for (const char* v : {"i", "ii"}) {
    const auto rep = reduce_to_classical({ClassicalModel::fractional_maxwell, 1.7, 0.4, 0.0, 0.35}, v);
    EXPECT_LT(rep.max_residual, 1e-12) << v;
    EXPECT_DOUBLE_EQ(rep.mapped.p.alpha, 0.35);
  }
}

TEST(Reduce, ZenerSecondMapFlagsOperatorOrder) {
  const auto rep = reduce_to_classical({ClassicalModel::fractional_zener, 2.0, 1.0, 3.0, 0.4}, "ii");
  EXPECT_LT(rep.max_residual, 1e-12);
  EXPECT_EQ(rep.mapped.p.beta, 0.0);
  EXPECT_FALSE(rep.operator_order_supported);
}

TEST(Reduce, VoigtSignMismatch) {
  const ClassicalModelSpec voigt{ClassicalModel::fractional_voigt, 0.0, 2.0, 1.5, 0.5};
  const auto rep = reduce_to_classical(voigt, "i");
  EXPECT_EQ(rep.variant, "voigt");
  EXPECT_TRUE(rep.sign_mismatch);
  EXPECT_GT(rep.max_residual, 1e-6);
  EXPECT_LT(rep.flipped_residual, 1e-12);
  EXPECT_THROW(reduce_to_classical(voigt, "ii"), DomainError);
}

TEST(Reduce, DegenerateZener) {
  EXPECT_THROW(reduce_to_classical({ClassicalModel::fractional_zener, 1.0, 2.0, 2.0, 0.5}, "i"), DomainError);
  EXPECT_THROW(reduce_to_classical({ClassicalModel::fractional_zener, 1.0, 2.0, 2.0, 0.5}, "ii"), DomainError);
}

TEST(Reduce, BadInputs) {
  EXPECT_THROW(reduce_to_classical({ClassicalModel::fractional_maxwell, 1.0, 1.0, 1.0, 1.2}, "i"), DomainError);
  EXPECT_THROW(reduce_to_classical({ClassicalModel::fractional_maxwell, 1.0, 1.0, 1.0, 0.5}, "iii"), DomainError);
  EXPECT_FALSE(parse_classical_model("kelvin").has_value());
}

TEST(Reduce, ProbesInsideRightHalfPlane) {
  const auto probes = reduction_probes();
  ASSERT_EQ(probes.size(), 50u);
  for (const auto& s : probes) {
    EXPECT_GT(s.real(), 0.0);
    EXPECT_GE(std::abs(s), 0.1 - 1e-15);
    EXPECT_LE(std::abs(s), 10.0 + 1e-12);
  }
}
