#pragma once

#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "stellar/stellar.hpp"

namespace testing_support {

inline constexpr double kPi = 3.14159265358979323846;

inline stellar::DickeVector random_dicke(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return stellar::DickeVector(std::move(c));
}

inline std::vector<stellar::BlochPoint> random_points(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  std::uniform_real_distribution<double> phi(0.0, 2.0 * kPi);
  std::vector<stellar::BlochPoint> out;
  for (int i = 0; i < n; ++i) out.emplace_back(std::acos(z(rng)), phi(rng));
  return out;
}

inline Eigen::Vector3d random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized();
}

// Every entanglement value computed in the tests goes through here so the
// symmetric upper bound is checked on all of them.
inline stellar::EntanglementResult entanglement(const stellar::DickeVector& d,
                                                const stellar::OptimizerConfig& cfg = {}) {
  auto r = stellar::geometric_entanglement(d, cfg);
  EXPECT_LT(r.e_g, stellar::symmetric_upper_bound(d.n_qubits())) << "N=" << d.n_qubits();
  EXPECT_GE(r.e_g, 0.0);
  return r;
}

}  // namespace testing_support
