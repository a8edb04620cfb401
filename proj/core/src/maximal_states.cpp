#include "stellar/maximal_states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/Geometry>

#include "stellar/alignment.hpp"
#include "stellar/detail/minimax_qp.hpp"
#include "stellar/polynomial.hpp"
#include "stellar/symmetric_state.hpp"

namespace stellar {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauge-fixed angle vector <-> Majorana points. Point 0 sits at the north
// pole, point 1 on the phi = 0 meridian.
MajoranaSet points_from_angles(int n, const Eigen::VectorXd& x) {
  std::vector<BlochPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  pts.emplace_back(0.0, 0.0);
  pts.emplace_back(x(0), 0.0);
  for (int i = 2; i < n; ++i) pts.emplace_back(x(2 * i - 3), x(2 * i - 2));
  return MajoranaSet(std::move(pts));
}

DickeVector state_from_angles(int n, const Eigen::VectorXd& x) {
  return dicke_from_majorana(points_from_angles(n, x));
}

// Rotates a point set so that point 0 goes to the north pole and point 1 to
// phi = 0, then reads off the gauge-fixed angles.
Eigen::VectorXd gauge_fixed_angles(std::vector<Eigen::Vector3d> v) {
  const int n = static_cast<int>(v.size());
  Eigen::Matrix3d r = Eigen::Quaterniond::FromTwoVectors(v[0], Eigen::Vector3d::UnitZ()).toRotationMatrix();
  for (auto& p : v) p = r * p;
  const double az = std::atan2(v[1].y(), v[1].x());
  const Eigen::Matrix3d rz = Eigen::AngleAxisd(-az, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  for (auto& p : v) p = rz * p;
  Eigen::VectorXd x(2 * n - 3);
  x(0) = BlochPoint::from_vector(v[1]).theta();
  for (int i = 2; i < n; ++i) {
    const BlochPoint b = BlochPoint::from_vector(v[static_cast<std::size_t>(i)]);
    x(2 * i - 3) = b.theta();
    x(2 * i - 2) = b.phi();
  }
  return x;
}

// Angle list with points 2..N-1 sorted, used for deterministic tie-breaks.
std::vector<double> canonical_angles(int n, const Eigen::VectorXd& x) {
  const MajoranaSet m = points_from_angles(n, x);
  std::vector<std::pair<double, double>> rest;
  for (int i = 2; i < n; ++i) {
    rest.emplace_back(m.points()[static_cast<std::size_t>(i)].theta(), m.points()[static_cast<std::size_t>(i)].phi());
  }
  std::sort(rest.begin(), rest.end());
  std::vector<double> out{m.points()[1].theta()};
  for (const auto& [t, p] : rest) {
    out.push_back(t);
    out.push_back(p);
  }
  return out;
}

struct Tracked {
  BlochPoint point;
  double value = 0.0;
};

class MinimaxProblem {
 public:
  MinimaxProblem(int n, const OptimizerConfig& cfg) : n_(n), dim_(2 * n - 3), cfg_(cfg) {}

  int dim() const { return dim_; }

  // All local maxima of the overlap at x, largest first.
  std::vector<Tracked> maxima(const Eigen::VectorXd& x) const {
    std::vector<Tracked> out;
    for (const auto& m : overlap_local_maxima(state_from_angles(n_, x), cfg_)) out.push_back({m.point, m.overlap_sq});
    return out;
  }

  // Re-centres each tracked maximum on the state at x.
  std::vector<Tracked> follow(const Eigen::VectorXd& x, const std::vector<Tracked>& from) const {
    const DickeVector d = state_from_angles(n_, x);
    std::vector<Tracked> out;
    out.reserve(from.size());
    for (const auto& t : from) {
      const auto m = refine_overlap_maximum(d, t.point, cfg_);
      out.push_back({m.point, m.overlap_sq});
    }
    return out;
  }

  // Envelope gradients: d/dx f(x, p_j) at fixed maximizer p_j, one column each.
  Eigen::MatrixXd gradients(const Eigen::VectorXd& x, const std::vector<Tracked>& active) const {
    constexpr double h = 1e-6;
    Eigen::MatrixXd g(dim_, static_cast<Eigen::Index>(active.size()));
    for (int k = 0; k < dim_; ++k) {
      Eigen::VectorXd xp = x, xm = x;
      xp(k) += h;
      xm(k) -= h;
      const DickeVector dp = state_from_angles(n_, xp);
      const DickeVector dm = state_from_angles(n_, xm);
      for (std::size_t j = 0; j < active.size(); ++j) {
        g(k, static_cast<Eigen::Index>(j)) = (overlap_sq(dp, active[j].point) - overlap_sq(dm, active[j].point)) / (2.0 * h);
      }
    }
    return g;
  }

  // Finite-difference Hessian of sum_j lambda_j f_j(x), regularized to be
  // positive definite.
  Eigen::MatrixXd lagrangian_hessian(const Eigen::VectorXd& x, const std::vector<Tracked>& active,
                                     const Eigen::VectorXd& lambda) const {
    constexpr double h = 1e-4;
    Eigen::MatrixXd hess(dim_, dim_);
    for (int l = 0; l < dim_; ++l) {
      Eigen::VectorXd xp = x, xm = x;
      xp(l) += h;
      xm(l) -= h;
      const Eigen::VectorXd gp = gradients(xp, follow(xp, active)) * lambda;
      const Eigen::VectorXd gm = gradients(xm, follow(xm, active)) * lambda;
      hess.col(l) = (gp - gm) / (2.0 * h);
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(hess);
    Eigen::VectorXd mu = eig.eigenvalues().cwiseAbs();
    const double floor = 1e-3 * std::max(1.0, mu.maxCoeff());
    mu = mu.cwiseMax(floor);
    return eig.eigenvectors() * mu.asDiagonal() * eig.eigenvectors().transpose();
  }

 private:
  int n_;
  int dim_;
  OptimizerConfig cfg_;
};

struct LocalOutcome {
  Eigen::VectorXd x;
  double merit = 0.0;
};

LocalOutcome minimize_max_overlap(const MinimaxProblem& problem, Eigen::VectorXd x, const SearchOptions& opts) {
  auto maxima = problem.maxima(x);
  double merit = maxima.front().value;
  Eigen::MatrixXd hess = Eigen::MatrixXd::Identity(problem.dim(), problem.dim());
  for (int it = 0; it < opts.max_iterations; ++it) {
    std::vector<Tracked> active;
    for (const auto& m : maxima) {
      if (m.value >= merit - opts.active_margin && active.size() < 12) active.push_back(m);
    }
    Eigen::VectorXd values(static_cast<Eigen::Index>(active.size()));
    for (std::size_t j = 0; j < active.size(); ++j) values(static_cast<Eigen::Index>(j)) = active[j].value;
    const Eigen::MatrixXd grads = problem.gradients(x, active);

    // Multipliers from the previous model, then a fresh second-order model.
    const auto first = detail::solve_minimax_qp(values, grads, hess);
    hess = problem.lagrangian_hessian(x, active, first.multipliers);
    const auto qp = detail::solve_minimax_qp(values, grads, hess);

    const double predicted = merit - qp.model_value;
    if (!(predicted > 1e-15) || qp.step.norm() < 1e-12) break;

    bool accepted = false;
    double alpha = 1.0;
    for (int ls = 0; ls < 30; ++ls, alpha *= 0.5) {
      const Eigen::VectorXd trial = x + alpha * qp.step;
      auto trial_maxima = problem.maxima(trial);
      const double trial_merit = trial_maxima.front().value;
      if (trial_merit <= merit - 1e-4 * alpha * predicted) {
        x = trial;
        merit = trial_merit;
        maxima = std::move(trial_maxima);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  return {x, merit};
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v;
  do {
    v = Eigen::Vector3d(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace

SearchResult search_max_entangled(int n, const OptimizerConfig& cfg, const SearchOptions& opts) {
  if (n < 2) throw std::invalid_argument("search_max_entangled: n must be at least 2");
  if (opts.restarts < 1) throw std::invalid_argument("search_max_entangled: restarts must be positive");
  cfg.validate();
  const MinimaxProblem problem(n, cfg);

  Eigen::VectorXd best_x;
  double best_merit = std::numeric_limits<double>::infinity();
  std::vector<double> best_key;
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r) + 1);
    std::vector<Eigen::Vector3d> start;
    for (int i = 0; i < n; ++i) start.push_back(random_unit(rng));
    const LocalOutcome out = minimize_max_overlap(problem, gauge_fixed_angles(start), opts);
    const auto key = canonical_angles(n, out.x);
    // Maximal E_G means minimal merit; near-ties go to the smaller angle list.
    const bool better = out.merit < best_merit - 1e-10 ||
                        (std::abs(out.merit - best_merit) <= 1e-10 && key < best_key);
    if (better) {
      best_merit = std::min(best_merit, out.merit);
      best_x = out.x;
      best_key = key;
    }
  }

  SearchResult result{points_from_angles(n, best_x), {}, {}, opts.restarts};
  result.entanglement = geometric_entanglement(dicke_from_majorana(result.configuration), cfg);
  result.angles.assign(best_x.data(), best_x.data() + best_x.size());
  return result;
}

DickeVector dicke_form_of_maximal_states(int n) {
  switch (n) {
    case 4:
      return DickeVector({1.0, 0.0, 0.0, std::sqrt(2.0), 0.0});
    case 5:
      return DickeVector({std::sqrt(1.0 - kFiveQubitXi * kFiveQubitXi), 0.0, 0.0, 0.0, -kFiveQubitXi, 0.0});
    case 6:
      return DickeVector({0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0});
    default:
      throw std::invalid_argument("dicke_form_of_maximal_states: n must be 4, 5 or 6");
  }
}

MajoranaSet reference_maximal_configuration(int n) {
  switch (n) {
    case 2:
      return MajoranaSet({{0.0, 0.0}, {kPi, 0.0}});
    case 3:
      return MajoranaSet({{0.0, 0.0}, {0.0, 0.0}, {kPi, 0.0}});
    case 4: {
      const double t = std::acos(-1.0 / 3.0);
      return MajoranaSet({{0.0, 0.0}, {t, 0.0}, {t, 2.0 * kPi / 3.0}, {t, 4.0 * kPi / 3.0}});
    }
    case 5: {
      const double t = std::acos(five_qubit_cos_theta0());
      return MajoranaSet({{0.0, 0.0}, {t, 0.0}, {t, kPi / 2.0}, {t, kPi}, {t, 1.5 * kPi}});
    }
    case 6:
      return MajoranaSet({{0.0, 0.0}, {kPi, 0.0}, {kPi / 2, 0.0}, {kPi / 2, kPi / 2}, {kPi / 2, kPi}, {kPi / 2, 1.5 * kPi}});
    default:
      throw std::invalid_argument("reference_maximal_configuration: n must be in [2, 6]");
  }
}

double five_qubit_cos_theta0() {
  static const double root = [] {
    const std::array<double, 9> c{101, 362, 308, 894, 670, 894, 308, 362, 101};
    return real_roots(c).back();
  }();
  return root;
}

double five_qubit_entanglement() {
  static const double root = [] {
    const std::array<double, 5> c{25, -475, 7630, -18980, 12824};
    return real_roots(c).front();
  }();
  return root;
}

double square_pyramid_cos_theta0(const MajoranaSet& m, double tol) {
  if (m.n_qubits() != 5) return std::numeric_limits<double>::quiet_NaN();
  const auto v = m.vectors();
  for (std::size_t apex = 0; apex < v.size(); ++apex) {
    std::vector<Eigen::Vector3d> base;
    double sum = 0.0, lo = 2.0, hi = -2.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i == apex) continue;
      const double c = v[apex].dot(v[i]);
      sum += c;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      base.push_back(v[i]);
    }
    if (hi - lo > tol) continue;
    // The base must be a square: four equal sides, two diagonals sqrt(2) longer.
    std::vector<double> d;
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) d.push_back((base[i] - base[j]).norm());
    }
    std::sort(d.begin(), d.end());
    const bool square = d[3] - d[0] <= tol && d[5] - d[4] <= tol && std::abs(d[4] - std::sqrt(2.0) * d[0]) <= 10 * tol;
    if (square) return sum / 4.0;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool CertificateReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CertificateReport verify_table1_certificate(int n, const MajoranaSet& configuration, double e_g, double tolerance) {
  CertificateReport report;
  report.n = n;
  auto add = [&](std::string name, double value, double expected, double tol) {
    report.checks.push_back({std::move(name), value, expected, tol, std::abs(value - expected) <= tol});
  };
  auto geometry = [&](double tol) {
    const auto ref = reference_maximal_configuration(n).vectors();
    const auto got = configuration.vectors();
    add("configuration matches reference up to rotation", align_point_sets(got, ref).max_distance, 0.0, tol);
  };
  switch (n) {
    case 4:
      add("E_G = 2/3", e_g, 2.0 / 3.0, tolerance);
      geometry(1e-5);
      break;
    case 5: {
      const double c = square_pyramid_cos_theta0(configuration, 1e-6);
      add("cos(theta_0) = largest real root of the octic", c, five_qubit_cos_theta0(), tolerance);
      add("E_G = smallest real root of the quartic", e_g, five_qubit_entanglement(), tolerance);
      break;
    }
    case 6:
      add("E_G = 7/9", e_g, 7.0 / 9.0, tolerance);
      geometry(1e-5);
      break;
    default:
      throw std::invalid_argument("verify_table1_certificate: n must be 4, 5 or 6");
  }
  return report;
}

std::vector<CertificateReport> verify_table1_certificates(const OptimizerConfig& cfg, const SearchOptions& opts) {
  std::vector<CertificateReport> out;
  for (int n : {4, 5, 6}) {
    const auto r = search_max_entangled(n, cfg, opts);
    out.push_back(verify_table1_certificate(n, r.configuration, r.entanglement.e_g));
  }
  return out;
}

}  // namespace stellar
