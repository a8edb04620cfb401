#pragma once

#include <cstdint>
#include <vector>

#include "stellar/bloch_point.hpp"
#include "stellar/dicke_vector.hpp"

namespace stellar {

/// Controls the two-angle maximization of the coherent-state overlap.
/// Zero grid sizes mean "4N + 8" for the state at hand.
struct OptimizerConfig {
  int grid_theta = 0;
  int grid_phi = 0;
  double refinement_tolerance = 1e-12;  // on overlap^2
  int max_refinement_steps = 200;
  double maximizer_cluster_radius = 1e-4;  // radians
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on grids below 8 or non-positive tolerances.
  void validate() const;
};

struct RefinementDiagnostics {
  int seeds = 0;
  int total_steps = 0;
  int max_steps = 0;
};

struct EntanglementResult {
  double e_g = 0.0;
  double overlap_sq = 1.0;
  // All distinct global maximizers (closest symmetric separable states).
  std::vector<BlochPoint> maximizers;
  RefinementDiagnostics diagnostics;
};

struct LocalMaximum {
  BlochPoint point;
  double overlap_sq = 0.0;
};

/// E_G = 1 - max |<psi|phi,...,phi>|^2. Dense (theta, phi) grid, then
/// Newton refinement from every grid local maximum. Deterministic.
/// Throws ConvergenceError when a refinement exceeds max_refinement_steps.
EntanglementResult geometric_entanglement(const DickeVector& d, const OptimizerConfig& cfg = {});

/// Every refined local maximum of the overlap, clustered by
/// cfg.maximizer_cluster_radius, sorted by decreasing overlap^2.
std::vector<LocalMaximum> overlap_local_maxima(const DickeVector& d, const OptimizerConfig& cfg,
                                               RefinementDiagnostics* diagnostics = nullptr);

/// Newton ascent of |<psi|phi^N>|^2 starting at `start`, in a stereographic
/// chart re-centred at every step so the poles need no special handling.
LocalMaximum refine_overlap_maximum(const DickeVector& d, const BlochPoint& start,
                                    const OptimizerConfig& cfg, int* steps = nullptr);

double overlap_sq(const DickeVector& d, const BlochPoint& c);

// 1 - C(n,k) (k/n)^k ((n-k)/n)^(n-k), with 0^0 = 1.
double dicke_entanglement_closed_form(int n, int k);

// 1 - sqrt(2 / (pi n))
double balanced_dicke_asymptotic(int n);

// 1 - 1/(n+1); E_G of any symmetric n-qubit state lies strictly below it.
double symmetric_upper_bound(int n);

/// Sphere average of |<psi|phi^N>|^2 by Gauss-Legendre in cos(theta) times a
/// uniform phi rule, `nodes` points each. Exact (= 1/(N+1)) once
/// nodes >= N + 1; throws std::invalid_argument below that.
double average_overlap_quadrature(const DickeVector& d, int nodes);

// sqrt(2 - 2 sqrt(1 - e_g))
double bures_from_entanglement(double e_g);

double bures_quantumness(const DickeVector& d, const OptimizerConfig& cfg = {});

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule on [-1, 1].
GaussLegendreRule gauss_legendre(int n);

}  // namespace stellar
