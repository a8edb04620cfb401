#include "stellar/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "stellar/binomial.hpp"
#include "stellar/errors.hpp"
#include "stellar/symmetric_state.hpp"

namespace stellar {

namespace {

constexpr double kPi = std::numbers::pi;

// F(alpha, beta) = sum_k c_k alpha^(N-k) beta^k with c_k = conj(d_k) sqrt(C(N,k)),
// so that F evaluated at a normalized spinor is <psi|phi^N>.
class OverlapPolynomial {
 public:
  explicit OverlapPolynomial(const DickeVector& d) : n_(d.n_qubits()), c_(d.coeffs().size()) {
    const auto sq = sqrt_binomials(n_);
    for (int k = 0; k <= n_; ++k) {
      c_[static_cast<std::size_t>(k)] = std::conj(d[k]) * sq[static_cast<std::size_t>(k)];
    }
  }

  int n() const { return n_; }
  const std::vector<Complex>& coeffs() const { return c_; }

  Complex value(Complex a, Complex b) const {
    // Horner in t = b / a would break at a = 0; accumulate powers instead.
    Complex s{};
    Complex bp(1.0);
    std::vector<Complex> ap = powers(a);
    for (int k = 0; k <= n_; ++k) {
      s += c_[static_cast<std::size_t>(k)] * ap[static_cast<std::size_t>(n_ - k)] * bp;
      bp *= b;
    }
    return s;
  }

  struct Derivatives {
    Complex f, fa, fb, faa, fab, fbb;
  };

  Derivatives derivatives(Complex a, Complex b) const {
    const auto ap = powers(a);
    const auto bp = powers(b);
    Derivatives out{};
    for (int k = 0; k <= n_; ++k) {
      const Complex ck = c_[static_cast<std::size_t>(k)];
      const int j = n_ - k;
      const auto A = [&](int e) { return e < 0 ? Complex{} : ap[static_cast<std::size_t>(e)]; };
      const auto B = [&](int e) { return e < 0 ? Complex{} : bp[static_cast<std::size_t>(e)]; };
      out.f += ck * A(j) * B(k);
      out.fa += ck * static_cast<double>(j) * A(j - 1) * B(k);
      out.fb += ck * static_cast<double>(k) * A(j) * B(k - 1);
      out.faa += ck * static_cast<double>(j * (j - 1)) * A(j - 2) * B(k);
      out.fab += ck * static_cast<double>(j * k) * A(j - 1) * B(k - 1);
      out.fbb += ck * static_cast<double>(k * (k - 1)) * A(j) * B(k - 2);
    }
    return out;
  }

 private:
  std::vector<Complex> powers(Complex x) const {
    std::vector<Complex> p(static_cast<std::size_t>(n_) + 1);
    p[0] = 1.0;
    for (int e = 1; e <= n_; ++e) p[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(e) - 1] * x;
    return p;
  }

  int n_;
  std::vector<Complex> c_;
};

struct Spinor {
  Complex a, b;
};

Spinor spinor_of(const BlochPoint& p) { return {p.alpha(), p.beta()}; }

// Point of the chart centred at s: U (1, w) / sqrt(1 + |w|^2), with
// U = [[a, -conj(b)], [b, conj(a)]].
Spinor chart_point(const Spinor& s, Complex w) {
  const double inv = 1.0 / std::sqrt(1.0 + std::norm(w));
  return {(s.a - std::conj(s.b) * w) * inv, (s.b + std::conj(s.a) * w) * inv};
}

int resolved_grid(int requested, int n) { return requested > 0 ? requested : 4 * n + 8; }

// Quadratic model of |F|^2 in the chart centred at s.
struct ChartModel {
  double f = 0.0;
  Eigen::Vector2d grad;
  Eigen::Matrix2d hess;
};

ChartModel chart_model(const OverlapPolynomial& poly, const Spinor& s) {
  const auto dv = poly.derivatives(s.a, s.b);
  const Complex g0 = dv.f;
  const Complex g1 = -std::conj(s.b) * dv.fa + std::conj(s.a) * dv.fb;
  const Complex g2 = std::conj(s.b) * std::conj(s.b) * dv.faa -
                     2.0 * std::conj(s.a) * std::conj(s.b) * dv.fab +
                     std::conj(s.a) * std::conj(s.a) * dv.fbb;
  ChartModel m;
  m.f = std::norm(g0);
  const Complex h = std::conj(g0) * g1;
  const Complex q = std::conj(g0) * g2;
  const double kk = std::norm(g1) - poly.n() * m.f;
  m.grad = Eigen::Vector2d(2.0 * h.real(), -2.0 * h.imag());
  m.hess << 2.0 * kk + 2.0 * q.real(), -2.0 * q.imag(), -2.0 * q.imag(), 2.0 * kk - 2.0 * q.real();
  return m;
}

// Newton step restricted to the strongly curved directions. Applied after a
// trial step it pulls the point back onto a curved ridge of maxima, which
// the tangent-plane model alone follows very slowly.
Spinor ridge_correction(const OverlapPolynomial& poly, const Spinor& s) {
  const ChartModel m = chart_model(poly, s);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(m.hess);
  const double scale = std::max(eig.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  Eigen::Vector2d step = Eigen::Vector2d::Zero();
  for (int i = 0; i < 2; ++i) {
    const double mu = eig.eigenvalues()(i);
    if (mu < -1e-3 * scale) step -= (eig.eigenvectors().col(i).dot(m.grad) / mu) * eig.eigenvectors().col(i);
  }
  if (step.norm() > 0.1) return s;
  return chart_point(s, Complex(step(0), step(1)));
}

// Trial point for a chart step, with the ridge correction kept when it helps.
double evaluate_step(const OverlapPolynomial& poly, const Spinor& s, const Eigen::Vector2d& step, Spinor& out) {
  out = chart_point(s, Complex(step(0), step(1)));
  double f = std::norm(poly.value(out.a, out.b));
  const Spinor corrected = ridge_correction(poly, out);
  const double fc = std::norm(poly.value(corrected.a, corrected.b));
  if (fc > f) {
    out = corrected;
    f = fc;
  }
  return f;
}

constexpr double kMaxStep = 0.3;

// At a stationary point with a direction of positive curvature (a saddle on
// a ridge of maxima; grid seeds land there when the ridge is tilted against
// the grid rows), look for a higher point along that direction.
bool escape_saddle(const OverlapPolynomial& poly, Spinor& s, double& f0) {
  const ChartModel m = chart_model(poly, s);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(m.hess);
  const double scale = std::max({eig.eigenvalues().cwiseAbs().maxCoeff(), poly.n() * m.f, 1e-300});
  if (!(eig.eigenvalues()(1) > 1e-10 * scale)) return false;
  const Eigen::Vector2d v = eig.eigenvectors().col(1);
  Spinor best{};
  double f_best = m.f + 1e-15;
  bool found = false;
  for (double sign : {1.0, -1.0}) {
    for (double t = kMaxStep; t > 1e-6; t *= 0.5) {
      Spinor out{};
      const double f = evaluate_step(poly, s, sign * t * v, out);
      if (f > f_best) {
        f_best = f;
        best = out;
        found = true;
        break;
      }
    }
  }
  if (!found) return false;
  s = best;
  f0 = f_best;
  return true;
}

LocalMaximum refine(const OverlapPolynomial& poly, const BlochPoint& start, const OptimizerConfig& cfg,
                    int* steps_out) {
  constexpr int kMaxEscapes = 8;
  constexpr std::size_t kWindow = 8;
  Spinor s = spinor_of(start);
  double f0 = std::norm(poly.value(s.a, s.b));
  int steps = 0;
  int escapes = 0;
  bool converged = false;
  std::vector<double> history;
  while (steps < cfg.max_refinement_steps) {
    ++steps;
    bool stationary = false;
    const ChartModel m = chart_model(poly, s);
    f0 = m.f;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(m.hess);
    const double scale = std::max({eig.eigenvalues().cwiseAbs().maxCoeff(), poly.n() * f0, 1e-300});
    // Newton along directions of negative curvature, a gradient step along
    // the others (kept separately so that it can be stretched below).
    Eigen::Vector2d step = Eigen::Vector2d::Zero();
    Eigen::Vector2d flat = Eigen::Vector2d::Zero();
    for (int i = 0; i < 2; ++i) {
      const Eigen::Vector2d v = eig.eigenvectors().col(i);
      const double mu = eig.eigenvalues()(i);
      const double gv = v.dot(m.grad);
      if (mu < -1e-14 * scale) {
        step -= (gv / mu) * v;
      } else {
        flat += (gv / scale) * v;
      }
    }
    const bool newton = flat.isZero(0.0);
    step += flat;
    if (step.norm() > kMaxStep) {
      flat *= kMaxStep / step.norm();
      step *= kMaxStep / step.norm();
    }
    // On a degenerate ridge the gradient-scaled step keeps shrinking without
    // a clean Newton exit; the predicted gain covers both cases.
    const double predicted = m.grad.dot(step) + 0.5 * step.dot(m.hess * step);
    if (m.grad.norm() == 0.0 || predicted < 1e-6 * cfg.refinement_tolerance) stationary = true;

    if (!stationary) {
      // Backtrack until the overlap does not decrease.
      double f_new = 0.0;
      Spinor trial{};
      bool accepted = false;
      for (int bt = 0; bt < 40; ++bt) {
        f_new = evaluate_step(poly, s, step, trial);
        if (f_new >= f0) {
          accepted = true;
          break;
        }
        step *= 0.5;
        flat *= 0.5;
      }
      if (!accepted || step.norm() < 1e-15) {
        stationary = true;
      } else {
        // A gradient step along a nearly flat direction can be far too
        // short; stretch it while the overlap keeps growing.
        if (!newton) {
          const Eigen::Vector2d base = step - flat;
          Eigen::Vector2d extra = flat;
          while ((base + 2.0 * extra).norm() <= kMaxStep) {
            Spinor longer{};
            const double f_longer = evaluate_step(poly, s, base + 2.0 * extra, longer);
            if (f_longer <= f_new) break;
            extra *= 2.0;
            step = base + extra;
            trial = longer;
            f_new = f_longer;
          }
        }
        s = trial;
        const double gain = f_new - f0;
        f0 = f_new;
        history.push_back(f0);
        // Progress along a nearly degenerate ring is slow but bounded by the
        // ring's tiny variation, so stagnation counts as stationary.
        if ((gain <= 1e-18 && step.norm() < 1e-12) ||
            (history.size() > kWindow &&
             f0 - history[history.size() - 1 - kWindow] < 1e-1 * cfg.refinement_tolerance)) {
          stationary = true;
        }
      }
    }
    if (stationary) {
      if (escapes < kMaxEscapes && escape_saddle(poly, s, f0)) {
        ++escapes;
        history.clear();
        continue;
      }
      converged = true;
      break;
    }
  }
  if (steps_out) *steps_out = steps;
  if (!converged) {
    throw ConvergenceError("overlap refinement did not converge within " +
                           std::to_string(cfg.max_refinement_steps) + " steps");
  }
  return {BlochPoint::from_amplitudes(s.a, s.b), std::norm(poly.value(s.a, s.b))};
}
}  // namespace

void OptimizerConfig::validate() const {
  if ((grid_theta != 0 && grid_theta < 8) || (grid_phi != 0 && grid_phi < 8)) {
    throw std::invalid_argument("OptimizerConfig: grid sizes must be at least 8");
  }
  if (!(refinement_tolerance > 0.0) || !(maximizer_cluster_radius > 0.0)) {
    throw std::invalid_argument("OptimizerConfig: tolerances must be positive");
  }
  if (max_refinement_steps < 1) {
    throw std::invalid_argument("OptimizerConfig: max_refinement_steps must be positive");
  }
}

double overlap_sq(const DickeVector& d, const BlochPoint& c) { return std::norm(coherent_overlap(d, c)); }

LocalMaximum refine_overlap_maximum(const DickeVector& d, const BlochPoint& start,
                                    const OptimizerConfig& cfg, int* steps) {
  return refine(OverlapPolynomial(d), start, cfg, steps);
}

std::vector<LocalMaximum> overlap_local_maxima(const DickeVector& d, const OptimizerConfig& cfg,
                                               RefinementDiagnostics* diagnostics) {
  cfg.validate();
  const OverlapPolynomial poly(d);
  const int n = d.n_qubits();
  const int nt = resolved_grid(cfg.grid_theta, n);
  int np = resolved_grid(cfg.grid_phi, n);
  if (np % 2 != 0) ++np;

  // Cell-centred theta rows; row -1 / nt wraps over the pole to phi + pi.
  std::vector<double> grid(static_cast<std::size_t>(nt) * static_cast<std::size_t>(np));
  std::vector<Complex> u(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> e(static_cast<std::size_t>(np));
  for (int j = 0; j < np; ++j) e[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * kPi * j / np);
  for (int i = 0; i < nt; ++i) {
    const double theta = (i + 0.5) * kPi / nt;
    const double ca = std::cos(0.5 * theta);
    const double sa = std::sin(0.5 * theta);
    for (int k = 0; k <= n; ++k) {
      u[static_cast<std::size_t>(k)] = poly.coeffs()[static_cast<std::size_t>(k)] * std::pow(ca, n - k) * std::pow(sa, k);
    }
    for (int j = 0; j < np; ++j) {
      const Complex z = e[static_cast<std::size_t>(j)];
      Complex acc = u[static_cast<std::size_t>(n)];
      for (int k = n - 1; k >= 0; --k) acc = acc * z + u[static_cast<std::size_t>(k)];
      grid[static_cast<std::size_t>(i) * np + j] = std::norm(acc);
    }
  }
  const double grid_max = *std::max_element(grid.begin(), grid.end());
  const auto at = [&](int i, int j) {
    if (i < 0) {
      i = 0;
      j += np / 2;
    } else if (i >= nt) {
      i = nt - 1;
      j += np / 2;
    }
    j = ((j % np) + np) % np;
    return grid[static_cast<std::size_t>(i) * np + j];
  };

  std::vector<BlochPoint> seeds;
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < np; ++j) {
      const double v = at(i, j);
      if (!(v > 0.0) || v < 1e-6 * grid_max) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1 && is_max; ++dj) {
          if (di == 0 && dj == 0) continue;
          is_max = v >= at(i + di, j + dj) - 1e-12 * v;
        }
      }
      if (is_max) seeds.emplace_back((i + 0.5) * kPi / nt, 2.0 * kPi * j / np);
    }
  }

  RefinementDiagnostics diag;
  std::vector<LocalMaximum> refined;
  refined.reserve(seeds.size());
  for (const auto& seed : seeds) {
    int steps = 0;
    refined.push_back(refine(poly, seed, cfg, &steps));
    ++diag.seeds;
    diag.total_steps += steps;
    diag.max_steps = std::max(diag.max_steps, steps);
  }
  std::stable_sort(refined.begin(), refined.end(), [](const LocalMaximum& a, const LocalMaximum& b) {
    if (a.overlap_sq != b.overlap_sq) return a.overlap_sq > b.overlap_sq;
    if (a.point.theta() != b.point.theta()) return a.point.theta() < b.point.theta();
    return a.point.phi() < b.point.phi();
  });
  std::vector<LocalMaximum> clustered;
  for (const auto& m : refined) {
    const bool dup = std::any_of(clustered.begin(), clustered.end(), [&](const LocalMaximum& c) {
      return angular_distance(c.point, m.point) <= cfg.maximizer_cluster_radius;
    });
    if (!dup) clustered.push_back(m);
  }
  if (diagnostics) *diagnostics = diag;
  return clustered;
}

EntanglementResult geometric_entanglement(const DickeVector& d, const OptimizerConfig& cfg) {
  EntanglementResult r;
  const auto maxima = overlap_local_maxima(d, cfg, &r.diagnostics);
  if (maxima.empty()) throw ConvergenceError("no local maximum of the overlap was found");
  // Rounding can push |<phi|psi>|^2 a few ulps above one for coherent inputs.
  r.overlap_sq = std::min(maxima.front().overlap_sq, 1.0);
  r.e_g = 1.0 - r.overlap_sq;
  for (const auto& m : maxima) {
    if (m.overlap_sq >= r.overlap_sq - cfg.refinement_tolerance) r.maximizers.push_back(m.point);
  }
  return r;
}

double dicke_entanglement_closed_form(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("dicke_entanglement_closed_form: need 0 <= k <= n");
  double log_term = log_binomial(n, k);
  if (k > 0) log_term += k * std::log(static_cast<double>(k) / n);
  if (k < n) log_term += (n - k) * std::log(static_cast<double>(n - k) / n);
  return 1.0 - std::exp(log_term);
}

double balanced_dicke_asymptotic(int n) {
  if (n < 1) throw std::invalid_argument("balanced_dicke_asymptotic: n must be positive");
  return 1.0 - std::sqrt(2.0 / (kPi * n));
}

double symmetric_upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_upper_bound: n must be positive");
  return 1.0 - 1.0 / (n + 1.0);
}

double bures_from_entanglement(double e_g) {
  const double overlap = std::sqrt(std::max(0.0, 1.0 - e_g));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

double bures_quantumness(const DickeVector& d, const OptimizerConfig& cfg) {
  return bures_from_entanglement(geometric_entanglement(d, cfg).e_g);
}

}  // namespace stellar
