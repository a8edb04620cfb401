#pragma once

#include <complex>
#include <span>
#include <vector>

namespace stellar {

struct RootFinderOptions {
  int max_iterations = 2000;
  // Roots closer than this (chordal metric on the Riemann sphere) are treated
  // as candidates for a single multiple root.
  double cluster_radius = 2e-2;
};

/// All roots of sum_k coeffs[k] z^k (ascending order, nonzero leading
/// coefficient) by Aberth-Ehrlich simultaneous iteration, followed by
/// Newton polishing in extended precision.
///
/// Exact zero roots are deflated first. Clusters of nearly equal roots are
/// replaced by a single multiple root when that lowers the residual.
std::vector<std::complex<double>> polynomial_roots(
    std::span<const std::complex<double>> coeffs, const RootFinderOptions& opts = {});

// Real roots (|imag| <= tol * (1 + |z|)) of a real polynomial, ascending.
std::vector<double> real_roots(std::span<const double> coeffs, double tol = 1e-9);

// Chordal distance between two points of the extended complex plane.
double riemann_chordal_distance(std::complex<double> a, std::complex<double> b);

}  // namespace stellar
