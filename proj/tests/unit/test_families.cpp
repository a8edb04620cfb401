#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace stellar;
using testing_support::entanglement;
using testing_support::kPi;

namespace {

FamilySpec spec(FamilyKind kind, int n, std::optional<int> k = {}, std::optional<double> gamma = {}) {
  FamilySpec s;
  s.kind = kind;
  s.n_qubits = n;
  s.k = k;
  s.gamma = gamma;
  return s;
}

}  // namespace

TEST(FamilySpec, ValidatesCombinations) {
  EXPECT_NO_THROW(spec(FamilyKind::dicke_k, 5, 2).validate());
  EXPECT_THROW(spec(FamilyKind::dicke_k, 5).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::dicke_k, 5, 6).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::ghz, 5, 1).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::quadratic_phase, 5).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::linear_phase, 5, {}, INFINITY).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::ghz, 5, {}, 1.0).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::coulomb, 1).validate(), std::invalid_argument);
  EXPECT_THROW(spec(FamilyKind::ghz, 0).validate(), std::invalid_argument);
  EXPECT_EQ(family_kind_from_string("quadratic_phase"), FamilyKind::quadratic_phase);
  EXPECT_THROW(family_kind_from_string("w"), std::invalid_argument);
}

TEST(BuildState, QuadraticPhaseAtPi) {
  const auto d = build_state(spec(FamilyKind::quadratic_phase, 2, {}, kPi));
  const double s = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(d[0] - s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d[1] + s), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d[2] - s), 0.0, 1e-15);
}

TEST(BuildState, ZeroPhaseIsUniform) {
  for (auto kind : {FamilyKind::quadratic_phase, FamilyKind::linear_phase}) {
    const auto d = build_state(spec(kind, 7, {}, 0.0));
    for (int k = 0; k <= 7; ++k) EXPECT_NEAR(std::abs(d[k] - 1.0 / std::sqrt(8.0)), 0.0, 1e-15);
  }
}

TEST(BuildState, DickeAndGhz) {
  const auto d = build_state(spec(FamilyKind::dicke_k, 6, 3));
  EXPECT_EQ(std::abs(d[3]), 1.0);
  EXPECT_NEAR(entanglement(d).e_g, 0.6875, 1e-12);
  EXPECT_EQ(balanced_excitations(7), 3);
  EXPECT_NEAR(dicke_entanglement_closed_form(7, 3), dicke_entanglement_closed_form(7, 4), 1e-15);
  EXPECT_EQ(std::abs(build_state(spec(FamilyKind::dicke_balanced, 8))[4]), 1.0);
  const auto g = build_state(spec(FamilyKind::ghz, 4));
  EXPECT_NEAR(std::abs(g[0]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(g[4]), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(BuildState, ArrangementFamilies) {
  const auto d = build_state(spec(FamilyKind::coulomb, 4), {4, 0});
  EXPECT_NEAR(entanglement(d).e_g, 2.0 / 3.0, 1e-9);
}

TEST(ScalingModels, Arithmetic) {
  EXPECT_NEAR(quadratic_scaling_model(99, 0.5, 2.0), 0.98, 1e-15);
  EXPECT_NEAR(coulomb_scaling_model(9, 1.0), 0.9, 1e-15);
  EXPECT_EQ(coulomb_scaling_model(9, 1.0), symmetric_upper_bound(9));
  EXPECT_EQ(kCoulombConstant, 1.71);
  EXPECT_EQ(kQuadraticConstantTwoThirds, 2.22);
  EXPECT_EQ(kQuadraticConstantOne, 2.81);
}

TEST(LinearPhase, AsymptoticArithmetic) {
  EXPECT_NEAR(linear_phase_asymptotic(100), 0.7518190, 1e-7);
  EXPECT_NEAR(linear_phase_overlap_profile(100, kPi / 2), std::sqrt(200 * kPi) / 101, 1e-15);
  EXPECT_NEAR(linear_phase_overlap_profile(100, kPi / 2), 0.2481810, 1e-7);
  EXPECT_EQ(linear_phase_overlap_profile(50, 0.0), 0.0);
  EXPECT_THROW(linear_phase_overlap_profile(9, 1.0), std::invalid_argument);
}

TEST(LinearPhase, ProfileMatchesExactOverlap) {
  const double gamma = 0.7;
  const auto d = linear_phase_state(100, gamma);
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double theta = kPi * i / 200;
    worst = std::max(worst, std::abs(linear_phase_overlap_profile(100, theta) - overlap_sq(d, BlochPoint(theta, gamma))));
  }
  EXPECT_LT(worst, 0.01);
}

TEST(LinearPhase, GammaIndependentWithMaximizerAtGamma) {
  for (int n : {10, 25, 50}) {
    const double base = entanglement(linear_phase_state(n, 0.0)).e_g;
    for (double gamma : {0.5, 2.0}) {
      const auto r = entanglement(linear_phase_state(n, gamma));
      EXPECT_NEAR(r.e_g, base, 1e-9);
      ASSERT_FALSE(r.maximizers.empty());
      const double dphi = std::remainder(r.maximizers.front().phi() - gamma, 2 * kPi);
      EXPECT_NEAR(dphi, 0.0, 1e-6);
      EXPECT_NEAR(r.maximizers.front().theta(), kPi / 2, 1e-6);
    }
  }
  EXPECT_NEAR(entanglement(linear_phase_state(50, 1.3)).e_g, linear_phase_asymptotic(50), 0.01);
}

TEST(Spiral, PredictionEndpointsAndMatch) {
  EXPECT_EQ(spiral_prediction(10, 0.3, 1).theta(), 0.0);
  EXPECT_NEAR(spiral_prediction(10, 0.3, 10).theta(), kPi, 1e-15);
  EXPECT_NEAR(spiral_prediction(10, 2.0 / 3.0, 2).phi(), std::fmod(-2.0 + 4 * kPi, 2 * kPi), 1e-12);
  EXPECT_THROW(spiral_prediction(10, 0.3, 0), std::invalid_argument);
  EXPECT_LT(spiral_mean_deviation(400, 2.0 / 3.0), 0.15);
}

TEST(QuadraticPhase, FluctuationsAreSmall) {
  std::vector<ScalingRow> rows;
  for (int n = 10; n <= 100; n += 5) rows.push_back({n, entanglement(quadratic_phase_state(n, 2.0 / 3.0)).e_g});
  const ScalingDataset data(rows);
  const auto fit = fit_scaling(data, ScalingModel::inverse_n_plus_1);
  for (const auto& [n, r] : residual_report(data, fit)) EXPECT_LT(std::abs(r), 0.01) << n;
}

TEST(Ordering, BalancedDickeBeatsLinearPhase) {
  for (int n = 2; n <= 40; ++n) {
    EXPECT_GT(dicke_entanglement_closed_form(n, n / 2), entanglement(linear_phase_state(n, 0.4)).e_g) << n;
  }
}
