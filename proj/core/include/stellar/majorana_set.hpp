#pragma once

#include <span>
#include <vector>

#include "stellar/bloch_point.hpp"

namespace stellar {

/// Unordered multiset of N Bloch points describing a symmetric N-qubit state.
class MajoranaSet {
 public:
  explicit MajoranaSet(std::vector<BlochPoint> points);

  int n_qubits() const noexcept { return static_cast<int>(points_.size()); }
  std::span<const BlochPoint> points() const noexcept { return points_; }

  std::vector<Eigen::Vector3d> vectors() const;

 private:
  std::vector<BlochPoint> points_;
};

// Multiset equality: greedy pairing by increasing chordal distance, every
// pair within tol.
bool approx_equal(const MajoranaSet& a, const MajoranaSet& b, double tol = 1e-9);

// Largest chordal distance of the greedy pairing; +inf when sizes differ.
double greedy_matching_distance(std::span<const Eigen::Vector3d> a,
                                std::span<const Eigen::Vector3d> b);

}  // namespace stellar
