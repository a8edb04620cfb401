#include "stellar/symmetric_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "stellar/binomial.hpp"
#include "stellar/polynomial.hpp"

namespace stellar {

DickeVector dicke_from_majorana(const MajoranaSet& m) {
  const int n = m.n_qubits();
  // Elementary symmetric accumulation of prod_i (alpha_i + beta_i t).
  std::vector<Complex> e{Complex(1.0)};
  e.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto& p : m.points()) {
    const Complex a = p.alpha();
    const Complex b = p.beta();
    e.push_back(Complex{});
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] = a * e[k] + b * e[k - 1];
    e[0] *= a;
  }
  const auto sq = sqrt_binomials(n);
  for (int k = 0; k <= n; ++k) e[static_cast<std::size_t>(k)] /= sq[static_cast<std::size_t>(k)];
  return DickeVector(std::move(e));
}

MajoranaSet majorana_from_dicke(const DickeVector& d) {
  const int n = d.n_qubits();
  const auto sq = sqrt_binomials(n);
  double dmax = 0.0;
  for (const auto& x : d.coeffs()) dmax = std::max(dmax, std::abs(x));

  // Negligible amplitudes at either end stand for roots at infinity (north
  // pole) or at zero (south pole). The cut is applied to d_k rather than to
  // the binomially weighted polynomial coefficients, whose natural spread
  // grows like sqrt(C(N, N/2)).
  const double cut = kDegreeDeficitThreshold * dmax;
  int degree = n;
  while (std::abs(d[degree]) < cut) --degree;
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    if (std::abs(d[k]) < cut) continue;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(k)] = sign * sq[static_cast<std::size_t>(k)] * d[k];
  }

  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = degree; i < n; ++i) pts.emplace_back(0.0, 0.0);
  if (degree > 0) {
    for (const auto& z : polynomial_roots(c)) {
      pts.emplace_back(2.0 * std::atan2(1.0, std::abs(z)), -std::arg(z));
    }
  }
  return MajoranaSet(std::move(pts));
}

Complex coherent_overlap(const DickeVector& d, const BlochPoint& c) {
  const int n = d.n_qubits();
  const auto sq = sqrt_binomials(n);
  const double a = std::cos(0.5 * c.theta());
  const Complex b = c.beta();
  std::vector<double> apow(static_cast<std::size_t>(n) + 1, 1.0);
  for (int j = 1; j <= n; ++j) apow[static_cast<std::size_t>(j)] = apow[static_cast<std::size_t>(j) - 1] * a;
  Complex bpow(1.0);
  Complex s{};
  for (int k = 0; k <= n; ++k) {
    s += std::conj(d[k]) * sq[static_cast<std::size_t>(k)] * apow[static_cast<std::size_t>(n - k)] * bpow;
    bpow *= b;
  }
  return s;
}

DickeVector coherent_state(int n, const BlochPoint& c) {
  if (n < 1) throw std::invalid_argument("coherent_state: n must be positive");
  const auto sq = sqrt_binomials(n);
  const double a = std::cos(0.5 * c.theta());
  const Complex b = c.beta();
  std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1);
  Complex bpow(1.0);
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<std::size_t>(k)] = sq[static_cast<std::size_t>(k)] * std::pow(a, n - k) * bpow;
    bpow *= b;
  }
  return DickeVector(std::move(coeffs));
}

MajoranaSet apply_rotation(const MajoranaSet& m, const Eigen::Matrix3d& rotation) {
  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(m.n_qubits()));
  for (const auto& p : m.points()) pts.push_back(BlochPoint::from_vector(rotation * p.to_vector()));
  return MajoranaSet(std::move(pts));
}

MajoranaSet apply_global_rotation(const MajoranaSet& m, const Eigen::Vector3d& axis, double angle) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("apply_global_rotation: axis must be a unit vector");
  }
  return apply_rotation(m, Eigen::AngleAxisd(angle, axis).toRotationMatrix());
}

}  // namespace stellar
