#pragma once

#include <complex>
#include <span>
#include <vector>

namespace stellar {

using Complex = std::complex<double>;

/// A pure symmetric N-qubit state in the Dicke basis |D_N(0)>, ..., |D_N(N)>.
/// Always normalized; the constructor rescales its input and rejects the zero
/// vector.
class DickeVector {
 public:
  explicit DickeVector(std::vector<Complex> coeffs);

  static DickeVector basis(int n, int k);

  int n_qubits() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const Complex& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  DickeVector with_global_phase(double angle) const;

 private:
  std::vector<Complex> coeffs_;
};

// <a|b>
Complex inner_product(const DickeVector& a, const DickeVector& b);

// |<a|b>|, insensitive to global phase.
double fidelity(const DickeVector& a, const DickeVector& b);

}  // namespace stellar
