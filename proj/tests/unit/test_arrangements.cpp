#include <cmath>
#include <random>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace stellar;
using testing_support::kPi;

namespace {

using Points = std::vector<Eigen::Vector3d>;

Points tetrahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
}

Points octahedron() {
  return {Eigen::Vector3d::UnitX(), -Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(),
          -Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitZ(), -Eigen::Vector3d::UnitZ()};
}

Points icosahedron() {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  Points p;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-t, t}) {
      p.emplace_back(0, a, b);
      p.emplace_back(a, b, 0);
      p.emplace_back(b, 0, a);
    }
  }
  for (auto& v : p) v.normalize();
  return p;
}

Points transform(const Points& p, const Eigen::Matrix3d& m) {
  Points out;
  for (const auto& v : p) out.push_back(m * v);
  return out;
}

}  // namespace

TEST(Arrangement, NormalizesAndValidates) {
  const Arrangement a({{0, 0, 2}, {3, 0, 0}}, ArrangementKind::imported);
  for (const auto& v : a.vectors()) EXPECT_NEAR(v.norm(), 1.0, 1e-15);
  EXPECT_THROW(Arrangement({}, ArrangementKind::imported), std::invalid_argument);
  EXPECT_THROW(Arrangement({{0, 0, 0}}, ArrangementKind::imported), std::invalid_argument);
}

TEST(CoulombEnergy, AnalyticValues) {
  EXPECT_NEAR(coulomb_energy(Arrangement({{0, 0, 1}, {0, 0, -1}}, ArrangementKind::imported)), 0.5, 1e-15);
  EXPECT_NEAR(coulomb_energy(Arrangement(tetrahedron(), ArrangementKind::imported)), 6.0 / std::sqrt(8.0 / 3.0), 1e-13);
  EXPECT_NEAR(coulomb_energy(Arrangement(tetrahedron(), ArrangementKind::imported)), 3.6742346, 1e-7);
  const Points tri{{1, 0, 0}, {-0.5, std::sqrt(3.0) / 2, 0}, {-0.5, -std::sqrt(3.0) / 2, 0}};
  EXPECT_NEAR(coulomb_energy(Arrangement(tri, ArrangementKind::imported)), std::sqrt(3.0), 1e-14);
  EXPECT_THROW(coulomb_energy(Arrangement({{0, 0, 1}, {0, 0, 1}}, ArrangementKind::imported)), DegenerateArrangementError);
}

TEST(TammesObjective, AnalyticValues) {
  EXPECT_NEAR(tammes_objective(Arrangement({{0, 0, 1}, {0, 0, -1}}, ArrangementKind::imported)), 2.0, 1e-15);
  EXPECT_NEAR(tammes_objective(Arrangement(tetrahedron(), ArrangementKind::imported)), std::sqrt(8.0 / 3.0), 1e-14);
  EXPECT_NEAR(tammes_objective(Arrangement(octahedron(), ArrangementKind::imported)), std::sqrt(2.0), 1e-15);
}

TEST(CoveringObjective, AnalyticValues) {
  EXPECT_NEAR(covering_objective(Arrangement({{0, 0, 1}, {0, 0, -1}}, ArrangementKind::imported)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(covering_objective(Arrangement({{0, 0, 1}}, ArrangementKind::imported)), 2.0, 1e-15);
  const double octa = 2.0 * std::sin(std::acos(1.0 / std::sqrt(3.0)) / 2.0);
  EXPECT_NEAR(covering_objective(Arrangement(octahedron(), ArrangementKind::imported)), octa, 1e-12);
  // Brute-force sampling never exceeds the covering radius.
  std::mt19937_64 rng(5);
  const Arrangement a(tetrahedron(), ArrangementKind::imported);
  const double cover = covering_objective(a);
  for (int i = 0; i < 20000; ++i) {
    const Eigen::Vector3d r = testing_support::random_axis(rng);
    double best = 4.0;
    for (const auto& v : a.vectors()) best = std::min(best, (v - r).norm());
    EXPECT_LE(best, cover + 1e-12);
  }
}

TEST(CoveringObjective, MeshConvergence) {
  std::mt19937_64 rng(8);
  for (int n : {5, 9, 17}) {
    Points p;
    for (int i = 0; i < n; ++i) p.push_back(testing_support::random_axis(rng));
    const Arrangement a(p, ArrangementKind::imported);
    EXPECT_NEAR(covering_objective(a, 5), covering_objective(a, 6), 1e-6) << n;
  }
  EXPECT_THROW(covering_objective(Arrangement(octahedron(), ArrangementKind::imported), 9), std::invalid_argument);
  EXPECT_EQ(geodesic_sphere_vertices(1).size(), 42U);
}

TEST(Objectives, InvariantUnderRotationAndReflection) {
  std::mt19937_64 rng(12);
  Points p;
  for (int i = 0; i < 11; ++i) p.push_back(testing_support::random_axis(rng));
  const Eigen::Matrix3d rot = Eigen::AngleAxisd(1.234, testing_support::random_axis(rng)).toRotationMatrix();
  const Eigen::Matrix3d refl = Eigen::Vector3d(1, 1, -1).asDiagonal();
  const Arrangement a(p, ArrangementKind::imported);
  for (const Eigen::Matrix3d& m : {rot, refl, Eigen::Matrix3d(rot * refl)}) {
    const Arrangement b(transform(p, m), ArrangementKind::imported);
    EXPECT_NEAR(coulomb_energy(a), coulomb_energy(b), 1e-12);
    EXPECT_NEAR(tammes_objective(a), tammes_objective(b), 1e-12);
    EXPECT_NEAR(covering_objective(a), covering_objective(b), 1e-12);
  }
}

TEST(Optimize, PlatonicSolids) {
  const Arrangement ico(icosahedron(), ArrangementKind::imported);
  for (auto kind : {ArrangementKind::coulomb, ArrangementKind::tammes, ArrangementKind::covering}) {
    const auto t = optimize_arrangement(4, kind, 4, 1);
    EXPECT_LT(rotation_distance(t, Arrangement(tetrahedron(), ArrangementKind::imported)), 1e-5) << to_string(kind);
    const auto o = optimize_arrangement(6, kind, 4, 1);
    EXPECT_LT(rotation_distance(o, Arrangement(octahedron(), ArrangementKind::imported)), 1e-5) << to_string(kind);
  }
  EXPECT_LT(rotation_distance(optimize_arrangement(12, ArrangementKind::coulomb, 4, 1), ico), 1e-5);
}

TEST(Optimize, BestIsNoWorseThanAnyRestart) {
  for (auto kind : {ArrangementKind::coulomb, ArrangementKind::tammes}) {
    const auto run = optimize_arrangement_run(9, kind, 6, 3);
    ASSERT_EQ(run.restart_objectives.size(), 6U);
    const double best = arrangement_objective(run.best, kind);
    for (double v : run.restart_objectives) EXPECT_FALSE(objective_better(kind, v, best));
  }
}

TEST(Optimize, DeterministicPerSeed) {
  const auto a = optimize_arrangement(8, ArrangementKind::coulomb, 3, 42);
  const auto b = optimize_arrangement(8, ArrangementKind::coulomb, 3, 42);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(a.vectors()[static_cast<std::size_t>(i)], b.vectors()[static_cast<std::size_t>(i)]);
  EXPECT_EQ(a.kind(), ArrangementKind::coulomb);
  EXPECT_THROW(optimize_arrangement(4, ArrangementKind::imported, 1, 0), std::invalid_argument);
  EXPECT_THROW(optimize_arrangement(4, ArrangementKind::coulomb, 0, 0), std::invalid_argument);
}

TEST(Optimize, DefaultRestarts) {
  EXPECT_EQ(default_restarts(12), 32);
  EXPECT_EQ(default_restarts(13), 128);
  EXPECT_EQ(default_restarts(30), 128);
}

TEST(ToMajorana, Angles) {
  const auto m = arrangement_to_majorana(Arrangement({{0, 0, 1}, {1, 0, 0}, {0, -1, 0}}, ArrangementKind::imported));
  EXPECT_EQ(m.points()[0].theta(), 0.0);
  EXPECT_EQ(m.points()[0].phi(), 0.0);
  EXPECT_NEAR(m.points()[1].theta(), kPi / 2, 1e-15);
  EXPECT_NEAR(m.points()[1].phi(), 0.0, 1e-15);
  EXPECT_NEAR(m.points()[2].phi(), 3 * kPi / 2, 1e-15);
}

TEST(ToMajorana, TetrahedronMatchesMaximalFourQubitState) {
  const auto m = arrangement_to_majorana(Arrangement(tetrahedron(), ArrangementKind::imported));
  EXPECT_LT(align_point_sets(m.vectors(), reference_maximal_configuration(4).vectors()).max_distance, 1e-9);
}

TEST(Import, ParsesFormats) {
  const auto two = import_arrangement("2\n0 0 1\n0 0 -1");
  EXPECT_EQ(two.n_points(), 2);
  EXPECT_EQ(two.kind(), ArrangementKind::imported);
  EXPECT_NEAR(tammes_objective(two), 2.0, 1e-15);
  const auto headerless = import_arrangement("# comment\n0 0 1\n0 0 -1   # tail\n", false);
  EXPECT_EQ(headerless.n_points(), 2);
  EXPECT_NEAR(coulomb_energy(import_arrangement(format_arrangement(Arrangement(tetrahedron(), ArrangementKind::coulomb)))),
              3.6742346141747673, 1e-13);
  const auto nearly = import_arrangement("1\n0 0 1.0000005\n");
  EXPECT_NEAR(nearly.vectors()[0].norm(), 1.0, 1e-15);
}

TEST(Import, ReportsLineNumbers) {
  const auto line_of = [](std::string_view text, bool header = true) -> std::size_t {
    try {
      import_arrangement(text, header);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("3\n0 0 1\n0 0 -1"), 4U);
  EXPECT_EQ(line_of("2\n0 0 1\n0 0\n"), 3U);
  EXPECT_EQ(line_of("2\n0 0 1\n0 0.5 0.5\n"), 3U);
  EXPECT_EQ(line_of("1\n0 0 1\n1 0 0\n"), 3U);
  EXPECT_EQ(line_of("x\n0 0 1\n"), 1U);
  EXPECT_EQ(line_of("0 0 1\n1 0 nan\n", false), 2U);
}
