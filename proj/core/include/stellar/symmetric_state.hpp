#pragma once

#include <Eigen/Core>

#include "stellar/bloch_point.hpp"
#include "stellar/dicke_vector.hpp"
#include "stellar/majorana_set.hpp"

namespace stellar {

// Leading coefficients below this fraction of the largest one are treated as
// zero when reading the Majorana polynomial degree.
inline constexpr double kDegreeDeficitThreshold = 1e-12;

/// Dicke coefficients of the symmetrized product of the given single-qubit
/// states. d_k is proportional to e_k / sqrt(C(N, k)), where e_k is the
/// coefficient of t^k in prod_i (alpha_i + beta_i t); O(N^2).
DickeVector dicke_from_majorana(const MajoranaSet& m);

/// Majorana points from the roots of P(z) = sum_k (-1)^k sqrt(C(N,k)) d_k z^k.
/// A root z maps to theta = 2 atan(1/|z|), phi = -arg z (so z = alpha/beta);
/// each missing degree contributes a point at theta = 0.
MajoranaSet majorana_from_dicke(const DickeVector& d);

/// <psi|phi,...,phi> = sum_k conj(d_k) sqrt(C(N,k)) alpha^{N-k} beta^k.
Complex coherent_overlap(const DickeVector& d, const BlochPoint& c);

DickeVector coherent_state(int n, const BlochPoint& c);

/// Rigid rotation of every Majorana point about a unit axis (right-hand rule).
/// Throws std::invalid_argument when |axis| deviates from 1 by more than 1e-9.
MajoranaSet apply_global_rotation(const MajoranaSet& m, const Eigen::Vector3d& axis, double angle);

MajoranaSet apply_rotation(const MajoranaSet& m, const Eigen::Matrix3d& rotation);

}  // namespace stellar
