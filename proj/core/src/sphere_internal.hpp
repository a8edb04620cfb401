#pragma once

// Helpers shared by the arrangement objectives and optimizers. Not installed.

#include <array>
#include <vector>

#include <Eigen/Core>

namespace stellar::internal {

// An empty spherical cap whose boundary passes through three points: its
// centre is a vertex of the spherical Voronoi diagram.
struct VoronoiVertex {
  std::array<int, 3> triple{};
  Eigen::Vector3d centre = Eigen::Vector3d::Zero();
  double radius = 0.0;  // chordal distance from centre to the three points
};

// Centre of the cap through a, b, c on the side of `side` (unit vector).
Eigen::Vector3d cap_centre(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c,
                           const Eigen::Vector3d& side);

// All Voronoi vertices by brute force over triples (N >= 3). A triple
// qualifies on a side when no other point lies strictly inside its cap.
std::vector<VoronoiVertex> voronoi_vertices(const std::vector<Eigen::Vector3d>& pts);

// Exact covering radius: the largest Voronoi vertex radius, with the
// closed forms for one and two points.
double covering_radius_exact(const std::vector<Eigen::Vector3d>& pts);

}  // namespace stellar::internal
