#include "stellar/bloch_point.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Geometry>

namespace stellar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace

BlochPoint::BlochPoint(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("BlochPoint: angles must be finite");
  }
  // Fold theta onto [0, pi]; crossing a pole shifts the azimuth by pi.
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kPi) {
    t = kTwoPi - t;
    phi += kPi;
  }
  theta_ = std::clamp(t, 0.0, kPi);
  phi_ = (theta_ == 0.0 || theta_ == kPi) ? 0.0 : wrap_angle(phi);
}

BlochPoint BlochPoint::from_vector(const Eigen::Vector3d& v) {
  const double r = v.norm();
  if (!(r > 0.0)) throw std::invalid_argument("BlochPoint: zero vector");
  const double z = std::clamp(v.z() / r, -1.0, 1.0);
  double theta = std::acos(z);
  // acos loses precision near the poles; use the transverse component there.
  const double rho = std::hypot(v.x(), v.y()) / r;
  if (rho < 0.5) theta = z > 0.0 ? std::asin(rho) : kPi - std::asin(rho);
  return BlochPoint(theta, std::atan2(v.y(), v.x()));
}

BlochPoint BlochPoint::from_amplitudes(std::complex<double> alpha, std::complex<double> beta) {
  const double a = std::abs(alpha);
  const double b = std::abs(beta);
  if (!(a + b > 0.0)) throw std::invalid_argument("BlochPoint: zero spinor");
  const double theta = 2.0 * std::atan2(b, a);
  const double phi = (a == 0.0 || b == 0.0) ? 0.0 : std::arg(beta) - std::arg(alpha);
  return BlochPoint(theta, phi);
}

std::complex<double> BlochPoint::alpha() const { return {std::cos(0.5 * theta_), 0.0}; }

std::complex<double> BlochPoint::beta() const {
  return std::polar(std::sin(0.5 * theta_), phi_);
}

double BlochPoint::p() const {
  const double c = std::cos(0.5 * theta_);
  return c * c;
}

Eigen::Vector3d BlochPoint::to_vector() const {
  const double s = std::sin(theta_);
  return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

double chordal_distance(const BlochPoint& a, const BlochPoint& b) {
  return (a.to_vector() - b.to_vector()).norm();
}

double angular_distance(const BlochPoint& a, const BlochPoint& b) {
  const Eigen::Vector3d u = a.to_vector();
  const Eigen::Vector3d v = b.to_vector();
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

}  // namespace stellar
