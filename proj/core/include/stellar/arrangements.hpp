#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "stellar/majorana_set.hpp"

namespace stellar {

enum class ArrangementKind { coulomb, tammes, covering, imported };

std::string_view to_string(ArrangementKind kind);
// Throws std::invalid_argument for unknown names.
ArrangementKind arrangement_kind_from_string(std::string_view name);

/// N unit vectors on the sphere. The constructor normalizes and rejects
/// vectors that are zero or not finite.
class Arrangement {
 public:
  Arrangement(std::vector<Eigen::Vector3d> vectors, ArrangementKind kind);

  int n_points() const noexcept { return static_cast<int>(vectors_.size()); }
  const std::vector<Eigen::Vector3d>& vectors() const noexcept { return vectors_; }
  ArrangementKind kind() const noexcept { return kind_; }

 private:
  std::vector<Eigen::Vector3d> vectors_;
  ArrangementKind kind_;
};

// sum_{i<j} 1/|r_i - r_j|; throws DegenerateArrangementError when two points
// are closer than 1e-9.
double coulomb_energy(const Arrangement& a);

// min_{i != j} |r_i - r_j|; +inf for a single point.
double tammes_objective(const Arrangement& a);

/// Covering radius max_{r on S} min_i |r - r_i| (chordal). An icosahedral
/// geodesic mesh with 20 * 4^mesh_level triangles locates the far regions;
/// each candidate is then snapped to the exact Voronoi vertex (or bisector /
/// antipode for N <= 2) it belongs to.
double covering_objective(const Arrangement& a, int mesh_level = 5);

// Depends only on the objective. Lower is better for coulomb and covering.
double arrangement_objective(const Arrangement& a, ArrangementKind kind);
bool objective_better(ArrangementKind kind, double lhs, double rhs);

// 32 restarts up to 12 points, 128 up to 30, 16 beyond.
int default_restarts(int n);

struct ArrangementRun {
  Arrangement best;
  std::vector<double> restart_objectives;
};

/// Multistart local optimization of the given objective from seeded uniform
/// random starts. Coulomb: projected Barzilai-Borwein descent. Tammes and
/// covering: softmin surrogate with temperature annealing, then polishing on
/// the exact objective. Best restart wins; ties keep the lowest restart index.
ArrangementRun optimize_arrangement_run(int n, ArrangementKind kind, int restarts,
                                        std::uint64_t seed);

Arrangement optimize_arrangement(int n, ArrangementKind kind, int restarts, std::uint64_t seed);

/// theta = arccos z, phi = atan2(y, x) mod 2 pi.
MajoranaSet arrangement_to_majorana(const Arrangement& a);

/// Parses "N\n x y z\n ..." ('#' starts a comment). With header = false the
/// count line is absent. Vectors must have unit norm within 1e-6.
Arrangement import_arrangement(std::string_view source, bool header = true);

std::string format_arrangement(const Arrangement& a);

// Max chordal distance between a and b after the best rotation and point
// matching.
double rotation_distance(const Arrangement& a, const Arrangement& b);

std::vector<Eigen::Vector3d> geodesic_sphere_vertices(int level);

}  // namespace stellar
