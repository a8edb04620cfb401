#include "stellar/dicke_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace stellar {

DickeVector::DickeVector(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("DickeVector: need N + 1 >= 2 coefficients");
  }
  double norm_sq = 0.0;
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("DickeVector: non-finite coefficient");
    }
    norm_sq += std::norm(c);
  }
  if (!(norm_sq > 0.0)) throw std::invalid_argument("DickeVector: zero vector");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& c : coeffs_) c *= inv;
}

DickeVector DickeVector::basis(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("DickeVector::basis: need 0 <= k <= n");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{});
  c[static_cast<std::size_t>(k)] = 1.0;
  return DickeVector(std::move(c));
}

DickeVector DickeVector::with_global_phase(double angle) const {
  std::vector<Complex> c(coeffs_);
  const Complex ph = std::polar(1.0, angle);
  for (auto& x : c) x *= ph;
  return DickeVector(std::move(c));
}

Complex inner_product(const DickeVector& a, const DickeVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("inner_product: size mismatch");
  Complex s{};
  for (int k = 0; k <= a.n_qubits(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

double fidelity(const DickeVector& a, const DickeVector& b) { return std::abs(inner_product(a, b)); }

}  // namespace stellar
