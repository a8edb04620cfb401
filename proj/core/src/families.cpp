#include "stellar/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "stellar/alignment.hpp"
#include "stellar/symmetric_state.hpp"

namespace stellar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr FamilyKind kAllFamilies[] = {FamilyKind::ghz,          FamilyKind::dicke_balanced,
                                       FamilyKind::dicke_k,      FamilyKind::quadratic_phase,
                                       FamilyKind::linear_phase, FamilyKind::coulomb,
                                       FamilyKind::tammes,       FamilyKind::covering};

bool is_phase_family(FamilyKind k) { return k == FamilyKind::quadratic_phase || k == FamilyKind::linear_phase; }

bool is_arrangement_family(FamilyKind k) {
  return k == FamilyKind::coulomb || k == FamilyKind::tammes || k == FamilyKind::covering;
}

DickeVector phase_state(int n, double gamma, int power) {
  if (n < 1) throw std::invalid_argument("phase state: n must be positive");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double kk = power == 2 ? static_cast<double>(k) * k : static_cast<double>(k);
    c[static_cast<std::size_t>(k)] = std::polar(1.0, std::fmod(gamma * kk, kTwoPi));
  }
  return DickeVector(std::move(c));
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ghz: return "ghz";
    case FamilyKind::dicke_balanced: return "dicke_balanced";
    case FamilyKind::dicke_k: return "dicke_k";
    case FamilyKind::quadratic_phase: return "quadratic_phase";
    case FamilyKind::linear_phase: return "linear_phase";
    case FamilyKind::coulomb: return "coulomb";
    case FamilyKind::tammes: return "tammes";
    case FamilyKind::covering: return "covering";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(std::string_view name) {
  for (auto k : kAllFamilies) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

void FamilySpec::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("FamilySpec: n_qubits must be positive");
  if (is_arrangement_family(kind) && n_qubits < 2) {
    throw std::invalid_argument("FamilySpec: arrangement families need at least 2 qubits");
  }
  if (kind == FamilyKind::dicke_k) {
    if (!k) throw std::invalid_argument("FamilySpec: dicke_k requires k");
    if (*k < 0 || *k > n_qubits) throw std::invalid_argument("FamilySpec: k must lie in [0, n]");
  } else if (k) {
    throw std::invalid_argument("FamilySpec: k is only valid for dicke_k");
  }
  if (is_phase_family(kind)) {
    if (!gamma) throw std::invalid_argument("FamilySpec: phase families require gamma");
    if (!std::isfinite(*gamma)) throw std::invalid_argument("FamilySpec: gamma must be finite");
  } else if (gamma) {
    throw std::invalid_argument("FamilySpec: gamma is only valid for phase families");
  }
}

DickeVector ghz_state(int n) {
  if (n < 1) throw std::invalid_argument("ghz_state: n must be positive");
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  c.front() = 1.0;
  c.back() = 1.0;
  return DickeVector(std::move(c));
}

DickeVector quadratic_phase_state(int n, double gamma) { return phase_state(n, gamma, 2); }

DickeVector linear_phase_state(int n, double gamma) { return phase_state(n, gamma, 1); }

int balanced_excitations(int n) { return n / 2; }

DickeVector build_state(const FamilySpec& spec, const ArrangementOptions& arrangement) {
  spec.validate();
  const int n = spec.n_qubits;
  switch (spec.kind) {
    case FamilyKind::ghz: return ghz_state(n);
    case FamilyKind::dicke_balanced: return DickeVector::basis(n, balanced_excitations(n));
    case FamilyKind::dicke_k: return DickeVector::basis(n, *spec.k);
    case FamilyKind::quadratic_phase: return quadratic_phase_state(n, *spec.gamma);
    case FamilyKind::linear_phase: return linear_phase_state(n, *spec.gamma);
    case FamilyKind::coulomb:
    case FamilyKind::tammes:
    case FamilyKind::covering: {
      const auto kind = arrangement_kind_from_string(to_string(spec.kind));
      const int restarts = arrangement.restarts > 0 ? arrangement.restarts : default_restarts(n);
      return dicke_from_majorana(arrangement_to_majorana(optimize_arrangement(n, kind, restarts, arrangement.seed)));
    }
  }
  throw std::invalid_argument("build_state: unknown family");
}

double quadratic_scaling_model(int n, double /*gamma*/, double d_gamma) { return 1.0 - d_gamma / (n + 1.0); }

double coulomb_scaling_model(int n, double c) { return 1.0 - c / (n + 1.0); }

double linear_phase_asymptotic(int n) {
  if (n < 1) throw std::invalid_argument("linear_phase_asymptotic: n must be positive");
  return 1.0 - std::sqrt(2.0 * std::numbers::pi * n) / (n + 1.0);
}

double linear_phase_overlap_profile(int n, double theta) {
  if (n < 10) throw std::invalid_argument("linear_phase_overlap_profile: the Gaussian form needs n >= 10");
  const double c = std::cos(0.5 * theta);
  const double p = c * c;
  return std::sqrt(8.0 * std::numbers::pi * p * (1.0 - p) * n) / (n + 1.0);
}

BlochPoint spiral_prediction(int n, double gamma, int k) {
  if (n < 2) throw std::invalid_argument("spiral_prediction: n must be at least 2");
  if (k < 1 || k > n) throw std::invalid_argument("spiral_prediction: k must lie in [1, n]");
  const double z = 1.0 - 2.0 * (k - 1.0) / (n - 1.0);
  return BlochPoint(std::acos(std::clamp(z, -1.0, 1.0)), std::fmod(gamma * (1.0 - 2.0 * k), kTwoPi));
}

double spiral_mean_deviation(int n, double gamma) {
  const MajoranaSet computed = majorana_from_dicke(quadratic_phase_state(n, gamma));
  const auto got = computed.vectors();
  std::vector<Eigen::Vector3d> predicted;
  predicted.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) predicted.push_back(spiral_prediction(n, gamma, k).to_vector());
  Eigen::MatrixXd cost(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cost(i, j) = (predicted[static_cast<std::size_t>(i)] - got[static_cast<std::size_t>(j)]).norm();
  }
  const auto assign = min_cost_assignment(cost);
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += cost(i, assign[static_cast<std::size_t>(i)]);
  return total / n;
}

}  // namespace stellar
