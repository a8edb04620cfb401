#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace stellar {

struct Alignment {
  // Maps the first point set onto the second.
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  // Largest chordal distance between matched points after rotation.
  double max_distance = 0.0;
  // permutation[i] is the index in the second set matched to point i.
  std::vector<int> permutation;
};

/// Best proper rotation (optionally with reflections) taking `from` onto `to`
/// as unordered point sets. Candidate frames are built from every pair of
/// `from` points whose mutual distance matches a reference pair in `to`, then
/// polished with a Kabsch fit over the matched points.
Alignment align_point_sets(std::span<const Eigen::Vector3d> from,
                           std::span<const Eigen::Vector3d> to,
                           bool allow_reflection = false);

// Minimum-cost perfect matching (Hungarian algorithm) on a square cost matrix.
// Returns assignment[row] = column.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

}  // namespace stellar
