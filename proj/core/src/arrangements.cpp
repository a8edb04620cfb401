#include "stellar/arrangements.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Geometry>

#include "sphere_internal.hpp"
#include "stellar/alignment.hpp"
#include "stellar/detail/minimax_qp.hpp"
#include "stellar/errors.hpp"
#include "stellar/io.hpp"

namespace stellar {

using Points = std::vector<Eigen::Vector3d>;

std::string_view to_string(ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::coulomb: return "coulomb";
    case ArrangementKind::tammes: return "tammes";
    case ArrangementKind::covering: return "covering";
    case ArrangementKind::imported: return "imported";
  }
  return "unknown";
}

ArrangementKind arrangement_kind_from_string(std::string_view name) {
  for (auto k : {ArrangementKind::coulomb, ArrangementKind::tammes, ArrangementKind::covering, ArrangementKind::imported}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown arrangement kind '" + std::string(name) + "'");
}

Arrangement::Arrangement(std::vector<Eigen::Vector3d> vectors, ArrangementKind kind)
    : vectors_(std::move(vectors)), kind_(kind) {
  if (vectors_.empty()) throw std::invalid_argument("Arrangement: at least one point required");
  for (auto& v : vectors_) {
    const double len = v.norm();
    if (!std::isfinite(len) || !(len > 0.0)) throw std::invalid_argument("Arrangement: zero or non-finite vector");
    v /= len;
  }
}

double coulomb_energy(const Arrangement& a) {
  const auto& p = a.vectors();
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const double d = (p[i] - p[j]).norm();
      if (d <= 1e-9) throw DegenerateArrangementError("coulomb_energy: coincident points");
      e += 1.0 / d;
    }
  }
  return e;
}

double tammes_objective(const Arrangement& a) {
  const auto& p = a.vectors();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) best = std::min(best, (p[i] - p[j]).norm());
  }
  return best;
}

double arrangement_objective(const Arrangement& a, ArrangementKind kind) {
  switch (kind) {
    case ArrangementKind::coulomb: return coulomb_energy(a);
    case ArrangementKind::tammes: return tammes_objective(a);
    case ArrangementKind::covering: return covering_objective(a);
    case ArrangementKind::imported: break;
  }
  throw std::invalid_argument("arrangement_objective: no objective for imported arrangements");
}

bool objective_better(ArrangementKind kind, double lhs, double rhs) {
  return kind == ArrangementKind::tammes ? lhs > rhs : lhs < rhs;
}

int default_restarts(int n) {
  if (n <= 12) return 32;
  if (n <= 30) return 128;
  return 16;
}

namespace {

// Smooth objective on point sets: returns the value and fills the Euclidean
// gradient (one 3-vector per point).
using SmoothObjective = std::function<double(const Points&, Points&)>;

Points random_points(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Points p(static_cast<std::size_t>(n));
  for (auto& v : p) {
    do {
      v = Eigen::Vector3d(g(rng), g(rng), g(rng));
    } while (v.norm() < 1e-8);
    v.normalize();
  }
  return p;
}

void project_tangent(const Points& p, Points& g) {
  for (std::size_t i = 0; i < p.size(); ++i) g[i] -= g[i].dot(p[i]) * p[i];
}

Points retract(const Points& p, const Points& dir, double t) {
  Points q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = (p[i] + t * dir[i]).normalized();
  return q;
}

double dot_all(const Points& a, const Points& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].dot(b[i]);
  return s;
}

// Projected gradient descent with Barzilai-Borwein steps and a monotone
// backtracking safeguard.
Points descend(Points p, const SmoothObjective& f, int max_iter, double grad_tol) {
  Points g(p.size());
  double fx = f(p, g);
  project_tangent(p, g);
  double alpha = 1e-2 / static_cast<double>(p.size());
  int stalled = 0;
  for (int it = 0; it < max_iter && stalled < 5; ++it) {
    const double gnorm = std::sqrt(dot_all(g, g));
    if (gnorm < grad_tol) break;
    Points neg(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
    Points q;
    Points gq(p.size());
    double fq = 0.0;
    bool ok = false;
    for (int bt = 0; bt < 40; ++bt) {
      q = retract(p, neg, alpha);
      fq = f(q, gq);
      if (fq <= fx - 1e-4 * alpha * gnorm * gnorm) {
        ok = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!ok) break;
    stalled = fx - fq <= 1e-15 * std::abs(fx) ? stalled + 1 : 0;
    project_tangent(q, gq);
    // BB1 step from the tangent displacement and gradient change.
    double ss = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Eigen::Vector3d s = q[i] - p[i];
      ss += s.squaredNorm();
      sy += s.dot(gq[i] - g[i]);
    }
    alpha = sy > 0.0 ? std::clamp(ss / sy, 1e-8, 1.0) : std::min(1.0, 2.0 * alpha);
    p = std::move(q);
    g = std::move(gq);
    fx = fq;
  }
  return p;
}

double coulomb_with_gradient(const Points& p, Points& g) {
  for (auto& v : g) v.setZero();
  double e = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Eigen::Vector3d d = p[i] - p[j];
      const double r = std::max(d.norm(), 1e-12);
      e += 1.0 / r;
      const Eigen::Vector3d f = d / (r * r * r);
      g[i] -= f;
      g[j] += f;
    }
  }
  return e;
}

// Softmin of the pairwise log-distances at temperature T (minimized):
//   T log sum_{i<j} exp(-log(d_ij) / T), shifted by the current minimum.
SmoothObjective softmin_distance(double temperature) {
  return [temperature](const Points& p, Points& g) {
    const std::size_t n = p.size();
    double lmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) lmin = std::min(lmin, std::log(std::max((p[i] - p[j]).norm(), 1e-300)));
    }
    double z = 0.0;
    for (auto& v : g) v.setZero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Eigen::Vector3d d = p[i] - p[j];
        const double r = std::max(d.norm(), 1e-300);
        const double w = std::exp(-(std::log(r) - lmin) / temperature);
        z += w;
        // d/dp_i of exp(-log r / T) = -w / (T r^2) d
        const Eigen::Vector3d f = (w / (temperature * r * r)) * d;
        g[i] -= f;
        g[j] += f;
      }
    }
    for (auto& v : g) v *= temperature / z;
    return temperature * std::log(z) - lmin;
  };
}

// Softmax of the Voronoi vertex radii at temperature T (minimized).
SmoothObjective softmax_covering(double temperature) {
  return [temperature](const Points& p, Points& g) {
    for (auto& v : g) v.setZero();
    const auto verts = internal::voronoi_vertices(p);
    double rmax = 0.0;
    for (const auto& v : verts) rmax = std::max(rmax, v.radius);
    double z = 0.0;
    for (const auto& v : verts) {
      const double w = std::exp((v.radius - rmax) / temperature);
      z += w;
      // radius^2 = 2 - 2 c.a with c the unit normal of the triple's plane;
      // differentiate through c numerically per point (three points only).
      const auto radius_of = [&](const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
        const Eigen::Vector3d centre = internal::cap_centre(a, b, c, v.centre);
        return (centre - a).norm();
      };
      constexpr double h = 1e-7;
      std::array<Eigen::Vector3d, 3> q{p[static_cast<std::size_t>(v.triple[0])], p[static_cast<std::size_t>(v.triple[1])],
                                       p[static_cast<std::size_t>(v.triple[2])]};
      for (int t = 0; t < 3; ++t) {
        for (int c = 0; c < 3; ++c) {
          const double keep = q[static_cast<std::size_t>(t)](c);
          q[static_cast<std::size_t>(t)](c) = keep + h;
          const double up = radius_of(q[0], q[1], q[2]);
          q[static_cast<std::size_t>(t)](c) = keep - h;
          const double dn = radius_of(q[0], q[1], q[2]);
          q[static_cast<std::size_t>(t)](c) = keep;
          g[static_cast<std::size_t>(v.triple[static_cast<std::size_t>(t)])](c) += w * (up - dn) / (2.0 * h);
        }
      }
    }
    if (z == 0.0) return 0.0;
    for (auto& v : g) v /= z;
    return rmax + temperature * std::log(z);
  };
}

// One nonsmooth term of a max-type objective: its value and gradient
// contributions as (point index, Euclidean 3-vector).
struct Term {
  double value = 0.0;
  std::vector<std::pair<int, Eigen::Vector3d>> grad;
};

using TermsFn = std::function<std::vector<Term>(const Points&)>;
using ExactFn = std::function<double(const Points&)>;  // max over all terms

// Polishes min_x max_j f_j(x) with sequential minimax QPs in tangent
// coordinates and a proximal weight adapted by the actual decrease.
Points minimax_polish(Points p, const TermsFn& terms_of, const ExactFn& exact, int max_iter) {
  const std::size_t n = p.size();
  double fx = exact(p);
  double radius = 1e-2;
  for (int it = 0; it < max_iter && radius > 1e-13; ++it) {
    const auto terms = terms_of(p);
    if (terms.empty()) break;
    std::vector<std::array<Eigen::Vector3d, 2>> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::Vector3d helper = std::abs(p[i].x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
      const Eigen::Vector3d e1 = (helper - helper.dot(p[i]) * p[i]).normalized();
      basis[i] = {e1, p[i].cross(e1)};
    }
    const auto m = static_cast<Eigen::Index>(terms.size());
    const auto dim = static_cast<Eigen::Index>(2 * n);
    Eigen::VectorXd values(m);
    Eigen::MatrixXd grads = Eigen::MatrixXd::Zero(dim, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& t = terms[static_cast<std::size_t>(j)];
      values(j) = t.value;
      for (const auto& [idx, gv] : t.grad) {
        const auto& b = basis[static_cast<std::size_t>(idx)];
        grads(2 * idx, j) += gv.dot(b[0]);
        grads(2 * idx + 1, j) += gv.dot(b[1]);
      }
    }
    const Eigen::MatrixXd hess = Eigen::MatrixXd::Identity(dim, dim) / radius;
    const auto qp = detail::solve_minimax_qp(values, grads, hess);
    const double predicted = fx - qp.model_value;
    if (!(predicted > 1e-15)) {
      radius *= 0.25;
      continue;
    }
    Points dir(n);
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = qp.step(static_cast<Eigen::Index>(2 * i)) * basis[i][0] + qp.step(static_cast<Eigen::Index>(2 * i + 1)) * basis[i][1];
    }
    const Points q = retract(p, dir, 1.0);
    const double fq = exact(q);
    if (fq < fx - 0.1 * predicted) {
      p = q;
      fx = fq;
      radius = std::min(radius * 2.0, 0.1);
    } else {
      radius *= 0.25;
    }
  }
  return p;
}

// Tammes as min max_{i<j} (-d_ij) over pairs within `margin` of the minimum.
std::vector<Term> tammes_terms(const Points& p, double margin) {
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) dmin = std::min(dmin, (p[i] - p[j]).norm());
  }
  std::vector<Term> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const Eigen::Vector3d d = p[i] - p[j];
      const double r = d.norm();
      if (r > dmin + margin) continue;
      const Eigen::Vector3d u = d / std::max(r, 1e-300);
      out.push_back({-r, {{static_cast<int>(i), -u}, {static_cast<int>(j), Eigen::Vector3d(u)}}});
    }
  }
  return out;
}

std::vector<Term> covering_terms(const Points& p, double margin) {
  const auto verts = internal::voronoi_vertices(p);
  double rmax = 0.0;
  for (const auto& v : verts) rmax = std::max(rmax, v.radius);
  std::vector<Term> out;
  for (const auto& v : verts) {
    if (v.radius < rmax - margin) continue;
    Term t;
    t.value = v.radius;
    constexpr double h = 1e-7;
    std::array<Eigen::Vector3d, 3> q{p[static_cast<std::size_t>(v.triple[0])], p[static_cast<std::size_t>(v.triple[1])],
                                     p[static_cast<std::size_t>(v.triple[2])]};
    const auto radius_of = [&] { return (internal::cap_centre(q[0], q[1], q[2], v.centre) - q[0]).norm(); };
    for (std::size_t k = 0; k < 3; ++k) {
      Eigen::Vector3d gk;
      for (int c = 0; c < 3; ++c) {
        const double keep = q[k](c);
        q[k](c) = keep + h;
        const double up = radius_of();
        q[k](c) = keep - h;
        const double dn = radius_of();
        q[k](c) = keep;
        gk(c) = (up - dn) / (2.0 * h);
      }
      t.grad.emplace_back(v.triple[k], gk);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Points optimize_once(int n, ArrangementKind kind, std::mt19937_64& rng) {
  Points p = random_points(n, rng);
  if (n == 1) return p;
  switch (kind) {
    case ArrangementKind::coulomb:
      return descend(std::move(p), coulomb_with_gradient, 20000, 1e-11);
    case ArrangementKind::tammes: {
      for (double temp : {0.1, 0.03, 0.01, 0.003}) p = descend(std::move(p), softmin_distance(temp), 3000, 1e-10);
      const auto exact = [](const Points& q) { return -tammes_objective(Arrangement(q, ArrangementKind::tammes)); };
      return minimax_polish(std::move(p), [](const Points& q) { return tammes_terms(q, 0.05); }, exact, 400);
    }
    case ArrangementKind::covering: {
      if (n <= 2) {
        // One point: anything; two points: antipodal.
        if (n == 2) p[1] = -p[0];
        return p;
      }
      // A spread-out start makes the Voronoi structure sensible before the
      // covering surrogate takes over.
      p = descend(std::move(p), coulomb_with_gradient, 300, 1e-6);
      for (double temp : {0.05, 0.015, 0.005}) p = descend(std::move(p), softmax_covering(temp), 400, 1e-10);
      const auto exact = [](const Points& q) { return internal::covering_radius_exact(q); };
      return minimax_polish(std::move(p), [](const Points& q) { return covering_terms(q, 0.05); }, exact, 400);
    }
    case ArrangementKind::imported:
      break;
  }
  throw std::invalid_argument("optimize_arrangement: imported is not an optimizable kind");
}

double seeded_objective(const Points& p, ArrangementKind kind) {
  const Arrangement a(p, kind);
  if (kind == ArrangementKind::covering) return internal::covering_radius_exact(p);
  return arrangement_objective(a, kind);
}

}  // namespace

ArrangementRun optimize_arrangement_run(int n, ArrangementKind kind, int restarts, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("optimize_arrangement: n must be positive");
  if (restarts < 1) throw std::invalid_argument("optimize_arrangement: restarts must be positive");
  if (kind == ArrangementKind::imported) {
    throw std::invalid_argument("optimize_arrangement: imported is not an optimizable kind");
  }
  std::vector<double> objectives;
  Points best;
  double best_value = 0.0;
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x5851F42D4C957F2DULL * static_cast<std::uint64_t>(r + 1));
    Points p = optimize_once(n, kind, rng);
    const double v = seeded_objective(p, kind);
    objectives.push_back(v);
    if (best.empty() || objective_better(kind, v, best_value)) {
      best = std::move(p);
      best_value = v;
    }
  }
  return {Arrangement(std::move(best), kind), std::move(objectives)};
}

Arrangement optimize_arrangement(int n, ArrangementKind kind, int restarts, std::uint64_t seed) {
  return optimize_arrangement_run(n, kind, restarts, seed).best;
}

MajoranaSet arrangement_to_majorana(const Arrangement& a) {
  std::vector<BlochPoint> pts;
  pts.reserve(a.vectors().size());
  for (const auto& v : a.vectors()) {
    pts.emplace_back(std::acos(std::clamp(v.z(), -1.0, 1.0)), std::atan2(v.y(), v.x()));
  }
  return MajoranaSet(std::move(pts));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const auto* end = tok.data() + tok.size();
  const auto res = std::from_chars(tok.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

Arrangement import_arrangement(std::string_view source, bool header) {
  std::optional<long> declared;
  Points pts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < source.size()) {
    std::size_t next = source.find('\n', pos);
    if (next == std::string_view::npos) next = source.size();
    std::string_view line = source.substr(pos, next - pos);
    pos = next + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (header && !declared) {
      long count = 0;
      if (tokens.size() != 1 || !parse_number(tokens[0], count) || count < 1) {
        throw ParseError("expected a positive point count", line_no);
      }
      declared = count;
      continue;
    }
    if (tokens.size() != 3) throw ParseError("expected three coordinates 'x y z'", line_no);
    Eigen::Vector3d v;
    for (int c = 0; c < 3; ++c) {
      if (!parse_number(tokens[static_cast<std::size_t>(c)], v(c)) || !std::isfinite(v(c))) {
        throw ParseError("malformed number '" + std::string(tokens[static_cast<std::size_t>(c)]) + "'", line_no);
      }
    }
    if (std::abs(v.norm() - 1.0) > 1e-6) throw ParseError("vector is not of unit length", line_no);
    if (declared && static_cast<long>(pts.size()) >= *declared) {
      throw ParseError("more points than the declared count " + std::to_string(*declared), line_no);
    }
    pts.push_back(v);
  }
  if (header && !declared) throw ParseError("missing point count", line_no + 1);
  if (declared && static_cast<long>(pts.size()) != *declared) {
    throw ParseError("expected " + std::to_string(*declared) + " points, found " + std::to_string(pts.size()),
                     line_no + 1);
  }
  if (pts.empty()) throw ParseError("no points", line_no + 1);
  return Arrangement(std::move(pts), ArrangementKind::imported);
}

std::string format_arrangement(const Arrangement& a) {
  std::string out = "# kind: " + std::string(to_string(a.kind())) + "\n";
  out += std::to_string(a.n_points()) + "\n";
  for (const auto& v : a.vectors()) {
    out += format_double(v.x()) + " " + format_double(v.y()) + " " + format_double(v.z()) + "\n";
  }
  return out;
}

double rotation_distance(const Arrangement& a, const Arrangement& b) {
  if (a.n_points() != b.n_points()) return std::numeric_limits<double>::infinity();
  return align_point_sets(a.vectors(), b.vectors()).max_distance;
}

}  // namespace stellar
