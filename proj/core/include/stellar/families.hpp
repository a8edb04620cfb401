#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "stellar/arrangements.hpp"
#include "stellar/bloch_point.hpp"
#include "stellar/dicke_vector.hpp"

namespace stellar {

enum class FamilyKind {
  ghz,
  dicke_balanced,
  dicke_k,
  quadratic_phase,
  linear_phase,
  coulomb,
  tammes,
  covering
};

std::string_view to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::ghz;
  int n_qubits = 2;
  std::optional<int> k;
  std::optional<double> gamma;

  // k iff dicke_k, gamma iff a phase family; throws std::invalid_argument.
  void validate() const;
};

struct ArrangementOptions {
  int restarts = 0;  // 0 selects default_restarts(n)
  std::uint64_t seed = 0;
};

DickeVector build_state(const FamilySpec& spec, const ArrangementOptions& arrangement = {});

DickeVector ghz_state(int n);
// sum_k e^{i gamma k^2} |D_N(k)> / sqrt(N+1)
DickeVector quadratic_phase_state(int n, double gamma);
// sum_k e^{i gamma k} |D_N(k)> / sqrt(N+1)
DickeVector linear_phase_state(int n, double gamma);
int balanced_excitations(int n);

double quadratic_scaling_model(int n, double gamma, double d_gamma);
double coulomb_scaling_model(int n, double c);
// 1 - sqrt(2 pi n) / (n + 1)
double linear_phase_asymptotic(int n);
// sqrt(8 pi p (1 - p) n) / (n + 1), p = cos^2(theta/2); requires n >= 10.
double linear_phase_overlap_profile(int n, double theta);

/// Approximate Majorana point k (1-based) of the quadratic-phase state:
/// theta_k = arccos(1 - 2(k-1)/(n-1)), phi_k = gamma (1 - 2k) mod 2 pi.
BlochPoint spiral_prediction(int n, double gamma, int k);

// Mean chordal distance of the optimal matching between the predicted spiral
// and the computed Majorana points of quadratic_phase_state(n, gamma).
double spiral_mean_deviation(int n, double gamma);

// Scaling constants reported for the quadratic-phase and Coulomb families.
inline constexpr double kQuadraticConstantTwoThirds = 2.22;
inline constexpr double kQuadraticConstantOne = 2.81;
inline constexpr double kCoulombConstant = 1.71;

}  // namespace stellar
