#include "stellar/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stellar {

namespace {

using cld = std::complex<long double>;
using cd = std::complex<double>;

constexpr long double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation {
  cld newton;            // p(z) / p'(z)
  long double residual;  // |p(z)| / sum_k |c_k| |z|^k
};

// Value, derivative and absolute-value bound of sum c_k z^k. For |z| > 1 the
// reversed polynomial is used so that large degrees cannot overflow; the
// Newton ratio and relative residual are chart independent.
Evaluation evaluate(const std::vector<cld>& c, cld z) {
  const int n = static_cast<int>(c.size()) - 1;
  const long double az = std::abs(z);
  if (az <= 1.0L) {
    cld p = c[static_cast<std::size_t>(n)];
    cld dp = 0.0L;
    long double bound = std::abs(p);
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + c[static_cast<std::size_t>(k)];
      bound = bound * az + std::abs(c[static_cast<std::size_t>(k)]);
    }
    const long double res = bound > 0.0L ? std::abs(p) / bound : 0.0L;
    if (dp == cld(0.0L)) return {cld(0.0L), res};
    return {p / dp, res};
  }
  const cld w = 1.0L / z;
  const long double aw = 1.0L / az;
  cld q = c[0];
  cld dq = 0.0L;
  long double bound = std::abs(q);
  for (int j = 1; j <= n; ++j) {
    dq = dq * w + q;
    q = q * w + c[static_cast<std::size_t>(j)];
    bound = bound * aw + std::abs(c[static_cast<std::size_t>(j)]);
  }
  const long double res = bound > 0.0L ? std::abs(q) / bound : 0.0L;
  // p(z) = z^n q(w), p'(z) = z^{n-1} (n q - w q')
  const cld denom = static_cast<long double>(n) * q - w * dq;
  if (denom == cld(0.0L)) return {cld(0.0L), res};
  return {z * q / denom, res};
}

std::vector<cld> derivative(const std::vector<cld>& c) {
  std::vector<cld> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<long double>(k) * c[k]);
  return d;
}

// Aberth-Ehrlich iteration on a polynomial with c[0] != 0 and c[n] != 0.
std::vector<cld> aberth(const std::vector<cld>& c, int max_iterations) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<cld> z(static_cast<std::size_t>(n));
  if (n == 0) return z;
  if (n == 1) {
    z[0] = -c[0] / c[1];
    return z;
  }
  // Starting points spread over the Riemann sphere around the geometric-mean
  // root modulus, slightly off any symmetric pattern.
  const long double rho =
      std::pow(std::abs(c[0]) / std::abs(c[static_cast<std::size_t>(n)]), 1.0L / n);
  const long double golden = 2.399963229728653L;
  for (int i = 0; i < n; ++i) {
    const long double t = 1.0L - (2.0L * i + 1.0L) / n;
    const long double half = 0.5L * std::acos(t);
    const long double r = rho * std::cos(half) / std::sin(half);
    z[static_cast<std::size_t>(i)] = std::polar(r, golden * i + 0.4L);
  }
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (done[ui]) continue;
      all_done = false;
      const Evaluation e = evaluate(c, z[ui]);
      if (e.residual <= 4.0L * n * kEps) {
        done[ui] = true;
        continue;
      }
      cld s = 0.0L;
      for (int j = 0; j < n; ++j) {
        if (j != i) s += 1.0L / (z[ui] - z[static_cast<std::size_t>(j)]);
      }
      const cld step = e.newton / (1.0L - e.newton * s);
      z[ui] -= step;
      if (std::abs(step) <= 4.0L * kEps * std::abs(z[ui])) done[ui] = true;
    }
    if (all_done) break;
  }
  return z;
}

cld polish(const std::vector<cld>& c, cld z, int iterations) {
  Evaluation e = evaluate(c, z);
  for (int i = 0; i < iterations; ++i) {
    const cld next = z - e.newton;
    const Evaluation en = evaluate(c, next);
    if (!(en.residual <= e.residual)) break;
    z = next;
    e = en;
  }
  return z;
}

// Replace each cluster of nearby roots by one multiple root when the cluster
// centre, refined as a simple root of p^(m-1), annihilates p..p^(m-2).
void merge_clusters(const std::vector<cld>& c, std::vector<cld>& roots, double radius) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (riemann_chordal_distance(cd(roots[i]), cd(roots[j])) < radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  for (const auto& g : groups) {
    const int m = static_cast<int>(g.size());
    if (m < 2) continue;
    // Average in whichever chart keeps the cluster bounded.
    bool outer = true;
    for (auto i : g) outer = outer && std::abs(roots[i]) > 1.0L;
    cld centre = 0.0L;
    for (auto i : g) centre += outer ? 1.0L / roots[i] : roots[i];
    centre /= static_cast<long double>(m);
    if (outer) centre = 1.0L / centre;

    std::vector<std::vector<cld>> derivs{c};
    for (int j = 1; j < m; ++j) derivs.push_back(derivative(derivs.back()));
    const cld candidate = polish(derivs.back(), centre, 60);

    bool multiple = true;
    for (int j = 0; j + 1 < m && multiple; ++j) {
      multiple = evaluate(derivs[static_cast<std::size_t>(j)], candidate).residual <= 1e-9L;
    }
    if (!multiple) continue;
    for (auto i : g) roots[i] = candidate;
  }
}

}  // namespace

double riemann_chordal_distance(std::complex<double> a, std::complex<double> b) {
  const bool ia = !std::isfinite(std::abs(a));
  const bool ib = !std::isfinite(std::abs(b));
  if (ia && ib) return 0.0;
  if (ia) return 2.0 / std::sqrt(1.0 + std::norm(b));
  if (ib) return 2.0 / std::sqrt(1.0 + std::norm(a));
  return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs,
                                                   const RootFinderOptions& opts) {
  if (coeffs.empty() || coeffs.back() == cd(0.0)) {
    throw std::invalid_argument("polynomial_roots: leading coefficient must be nonzero");
  }
  std::size_t zeros = 0;
  while (coeffs[zeros] == cd(0.0)) ++zeros;

  std::vector<cld> c;
  for (std::size_t k = zeros; k < coeffs.size(); ++k) c.emplace_back(coeffs[k].real(), coeffs[k].imag());

  std::vector<cld> roots = aberth(c, opts.max_iterations);
  for (auto& r : roots) r = polish(c, r, 8);
  if (roots.size() > 1) merge_clusters(c, roots, opts.cluster_radius);

  std::vector<cd> out(zeros, cd(0.0));
  for (const auto& r : roots) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

std::vector<double> real_roots(std::span<const double> coeffs, double tol) {
  std::vector<cd> c(coeffs.begin(), coeffs.end());
  std::vector<double> out;
  for (const auto& z : polynomial_roots(c)) {
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) out.push_back(z.real());
  }
  // Real Newton polish in extended precision.
  for (auto& x : out) {
    long double r = x;
    for (int it = 0; it < 20; ++it) {
      long double p = 0.0L, dp = 0.0L;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        dp = dp * r + p;
        p = p * r + coeffs[k];
      }
      if (dp == 0.0L) break;
      const long double step = p / dp;
      r -= step;
      if (std::abs(step) <= 1e-19L * (1.0L + std::abs(r))) break;
    }
    x = static_cast<double>(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stellar
