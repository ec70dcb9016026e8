#pragma once

#include <Eigen/Dense>

namespace relspin {

/// On-shell four-momentum of a massive particle in natural units (c = hbar = 1),
/// metric signature (+,-,-,-).
///
/// Only the mass and the spatial momentum are stored; the energy is always
/// derived from them, so the mass-shell relation E^2 - |p|^2 = m^2 holds by
/// construction and cannot drift under transformations.
struct FourMomentum {
  double mass = 1.0;
  Eigen::Vector3d p = Eigen::Vector3d::Zero();

  /// E = sqrt(m^2 + |p|^2).
  double energy() const { return std::sqrt(mass * mass + p.squaredNorm()); }
};

/// Builds an on-shell four-momentum, validating that the mass is positive and
/// all components are finite. Throws std::invalid_argument otherwise.
FourMomentum on_shell(double mass, const Eigen::Vector3d& p);

/// Spherical parametrization of a spatial momentum: magnitude |p| >= 0,
/// polar angle measured from the x3 axis in [0, pi], azimuth in [0, 2*pi).
struct SphericalMomentum {
  double magnitude = 0.0;
  double polar = 0.0;
  double azimuth = 0.0;

  /// (p sin(theta) cos(phi), p sin(theta) sin(phi), p cos(theta)).
  Eigen::Vector3d to_cartesian() const;

  /// Inverse of to_cartesian with canonical angle ranges. A zero vector maps
  /// to magnitude 0 with both angles 0.
  static SphericalMomentum from_cartesian(const Eigen::Vector3d& p);
};

/// A pure Lorentz boost along the x3 axis, parametrized by rapidity
/// (velocity = tanh(rapidity), positive rapidity boosts toward +x3).
struct BoostZ {
  double rapidity = 0.0;
};

/// Applies the boost to a four-momentum:
///   p3' = E sinh(xi) + p3 cosh(xi),   transverse components unchanged,
/// and the energy of the result follows from the mass shell,
///   E' = p3 sinh(xi) + E cosh(xi).
/// The map is injective in p3 for fixed transverse momentum, so distinct
/// momenta stay distinct. Throws std::invalid_argument on non-finite rapidity.
FourMomentum boost_momentum(const BoostZ& boost, const FourMomentum& k);

/// Standard boost L(p): the rotation-free Lorentz transformation taking the
/// rest-frame momentum (m, 0) to (E, p). As a 4x4 matrix acting on
/// (x0, x1, x2, x3) it is symmetric, has unit determinant, and satisfies
/// L^T eta L = eta with eta = diag(1, -1, -1, -1).
Eigen::Matrix4d standard_boost(const FourMomentum& k);

}  // namespace relspin
