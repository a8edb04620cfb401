#pragma once

#include <complex>

#include <Eigen/Core>

namespace stellar {

/// A single-qubit pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>,
/// equivalently a point on the unit sphere. Also used as the parameter of
/// the coherent state |phi, ..., phi>.
///
/// Construction canonicalizes: theta is folded into [0, pi], phi wrapped into
/// [0, 2 pi), and phi is set to 0 at either pole.
class BlochPoint {
 public:
  BlochPoint() = default;
  BlochPoint(double theta, double phi);

  static BlochPoint from_vector(const Eigen::Vector3d& v);
  // Inverse of amplitudes(); the global phase of (alpha, beta) is ignored.
  static BlochPoint from_amplitudes(std::complex<double> alpha, std::complex<double> beta);

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  std::complex<double> alpha() const;
  std::complex<double> beta() const;
  // cos^2(theta/2)
  double p() const;

  Eigen::Vector3d to_vector() const;

  friend bool operator==(const BlochPoint&, const BlochPoint&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

double chordal_distance(const BlochPoint& a, const BlochPoint& b);
double angular_distance(const BlochPoint& a, const BlochPoint& b);

}  // namespace stellar
