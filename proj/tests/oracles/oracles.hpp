#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the value types used to pass data in.

#include <complex>
#include <cstdint>
#include <vector>

#include "stellar/bloch_point.hpp"
#include "stellar/dicke_vector.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Full 2^N amplitude vector of the symmetric state sum_k d_k |D_N(k)>,
// with qubit value 1 carrying the beta amplitude.
std::vector<cplx> expand_symmetric(const stellar::DickeVector& d);

// Literal permutation sum over all N! orderings of the single-qubit states,
// projected back onto the Dicke basis and normalized.
std::vector<cplx> permutation_sum_dicke(const std::vector<stellar::BlochPoint>& points);

// <psi|phi^{(x)N}> by explicit contraction of 2^N amplitudes.
cplx brute_overlap(const stellar::DickeVector& d, const stellar::BlochPoint& c);

struct GridMaximum {
  double raw = 0.0;          // largest sampled |overlap|^2
  double interpolated = 0.0;  // raw corrected by a local quadratic fit
};

// Max of |overlap|^2 on an (nt x np) grid over [0, pi] x [0, 2 pi).
GridMaximum dense_grid_maximum(const stellar::DickeVector& d, int nt, int np);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Uniform-sphere average of |overlap|^2.
MonteCarloEstimate monte_carlo_average(const stellar::DickeVector& d, std::int64_t samples, std::uint64_t seed);

// Polynomial roots from the companion matrix; coefficients in ascending order.
std::vector<cplx> companion_roots(const std::vector<cplx>& coeffs);

// 1 - C(n,k) (k/n)^k ((n-k)/n)^(n-k) evaluated in long double.
double dicke_closed_form(int n, int k);

}  // namespace oracle
