#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace stellar;
using testing_support::entanglement;
using testing_support::kPi;

namespace {

double horner(std::initializer_list<double> coeffs, double x) {
  double acc = 0.0;
  for (auto it = std::rbegin(coeffs); it != std::rend(coeffs); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

TEST(CertificateRoots, OcticAndQuarticRoots) {
  const double c = five_qubit_cos_theta0();
  EXPECT_NEAR(horner({101, 362, 308, 894, 670, 894, 308, 362, 101}, c), 0.0, 1e-9);
  EXPECT_NEAR(c, std::cos(1.8737), 1e-4);
  const double e = five_qubit_entanglement();
  EXPECT_NEAR(horner({25, -475, 7630, -18980, 12824}, e), 0.0, 1e-9);
  EXPECT_NEAR(e, 0.7011, 5e-5);
}

TEST(DickeForms, EvaluateToTableValues) {
  EXPECT_NEAR(entanglement(dicke_form_of_maximal_states(4)).e_g, 2.0 / 3.0, 1e-10);
  EXPECT_NEAR(entanglement(dicke_form_of_maximal_states(5)).e_g, five_qubit_entanglement(), 1e-9);
  EXPECT_NEAR(entanglement(dicke_form_of_maximal_states(6)).e_g, 7.0 / 9.0, 1e-10);
  EXPECT_THROW(dicke_form_of_maximal_states(3), std::invalid_argument);
}

TEST(DickeForms, FourQubitCoefficients) {
  const auto d = dicke_form_of_maximal_states(4);
  EXPECT_NEAR(std::abs(d[0]), std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(std::abs(d[3]), std::sqrt(2.0 / 3.0), 1e-15);
}

TEST(ReferenceConfigurations, MatchDickeForms) {
  for (int n = 4; n <= 6; ++n) {
    const auto ref = dicke_from_majorana(reference_maximal_configuration(n));
    EXPECT_NEAR(entanglement(ref).e_g, entanglement(dicke_form_of_maximal_states(n)).e_g, 1e-9) << n;
  }
  const auto tetra = reference_maximal_configuration(4).vectors();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(tetra[i].dot(tetra[j]), -1.0 / 3.0, 1e-14);
  }
}

TEST(SquarePyramid, RecoversApexAngle) {
  const auto m = reference_maximal_configuration(5);
  EXPECT_NEAR(square_pyramid_cos_theta0(m), five_qubit_cos_theta0(), 1e-12);
  const auto rotated = apply_global_rotation(m, Eigen::Vector3d(0.6, 0.0, 0.8), 1.3);
  EXPECT_NEAR(square_pyramid_cos_theta0(rotated), five_qubit_cos_theta0(), 1e-10);
  const MajoranaSet irregular({{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(std::isnan(square_pyramid_cos_theta0(irregular)));
}

TEST(Certificates, AcceptReferenceAndRejectPerturbed) {
  for (int n = 4; n <= 6; ++n) {
    const auto m = reference_maximal_configuration(n);
    EXPECT_TRUE(verify_table1_certificate(n, m, entanglement(dicke_from_majorana(m)).e_g).passed()) << n;
  }
  const auto bad = verify_table1_certificate(4, reference_maximal_configuration(4), 0.66);
  EXPECT_FALSE(bad.passed());
  const auto octa = reference_maximal_configuration(6);
  std::vector<BlochPoint> pts(octa.points().begin(), octa.points().end());
  pts[2] = BlochPoint(pts[2].theta() + 0.01, pts[2].phi());
  EXPECT_FALSE(verify_table1_certificate(6, MajoranaSet(pts), 7.0 / 9.0).passed());
  EXPECT_THROW(verify_table1_certificate(3, reference_maximal_configuration(3), 5.0 / 9.0), std::invalid_argument);
}

TEST(Search, TwoAndThreeQubits) {
  SearchOptions opts;
  opts.restarts = 8;
  const auto two = search_max_entangled(2, {}, opts);
  EXPECT_NEAR(two.entanglement.e_g, 0.5, 1e-9);
  const auto three = search_max_entangled(3, {}, opts);
  EXPECT_NEAR(three.entanglement.e_g, 5.0 / 9.0, 1e-9);
  // The W state up to rotation: two coincident points and one antipodal.
  const auto v = three.configuration.vectors();
  int coincident = 0;
  int antipodal = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      coincident += v[i].dot(v[j]) > 1.0 - 1e-6;
      antipodal += v[i].dot(v[j]) < -1.0 + 1e-6;
    }
  }
  EXPECT_EQ(coincident, 1);
  EXPECT_EQ(antipodal, 2);
}

TEST(Search, GaugeAndDeterminism) {
  SearchOptions opts;
  opts.restarts = 4;
  OptimizerConfig cfg;
  cfg.seed = 9;
  const auto a = search_max_entangled(4, cfg, opts);
  const auto b = search_max_entangled(4, cfg, opts);
  EXPECT_EQ(a.entanglement.e_g, b.entanglement.e_g);
  EXPECT_TRUE(approx_equal(a.configuration, b.configuration, 0.0));
  EXPECT_EQ(a.configuration.points()[0].theta(), 0.0);
  EXPECT_EQ(a.configuration.points()[1].phi(), 0.0);
  EXPECT_EQ(a.restarts_run, 4);
  EXPECT_THROW(search_max_entangled(1), std::invalid_argument);
}
