#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relspin/states.hpp"

namespace relspin {

/// A spin measurement axis: a unit 3-vector. The constructor normalizes its
/// argument and throws std::invalid_argument on a (near-)zero vector.
class MeasurementDirection {
 public:
  MeasurementDirection() : axis_(0.0, 0.0, 1.0) {}
  explicit MeasurementDirection(const Eigen::Vector3d& v);

  /// Unit vector (sin th cos ph, sin th sin ph, cos th).
  static MeasurementDirection from_angles(double polar, double azimuth);

  const Eigen::Vector3d& axis() const { return axis_; }

 private:
  Eigen::Vector3d axis_;
};

/// The four analyzer axes of a CHSH measurement, two per particle.
struct BellSetting {
  MeasurementDirection a1, a2, b1, b2;
};

/// Wootters concurrence of a two-qubit density matrix: with
/// rho~ = (sy x sy) rho^* (sy x sy) and l1 >= l2 >= l3 >= l4 the square roots
/// of the eigenvalues of rho rho~, returns max(0, l1 - l2 - l3 - l4).
/// Eigenvalues are taken from a general complex eigensolver (rho rho~ is not
/// Hermitian); real parts within 1e-10 of zero are clipped to zero before the
/// square root, since the solver's noise on a rank-deficient product would
/// otherwise be amplified to ~1e-8 by the root.
double concurrence(const SpinDensityMatrix& rho);

/// Two-particle correlation of +/-1-valued spin measurements along a and b:
///   Tr[rho (sigma . a) x (sigma . b)].
double spin_correlation(const SpinDensityMatrix& rho, const MeasurementDirection& a,
                        const MeasurementDirection& b);

/// CHSH combination |C(a1,b1) + C(a1,b2) + C(a2,b1) - C(a2,b2)|. At most 2 for
/// separable states, at most 2 sqrt(2) overall.
double bell_parameter(const SpinDensityMatrix& rho, const BellSetting& setting);

/// Result of the Bell-parameter maximization: the value and where it is
/// attained.
struct BellOptimum {
  double value = 0.0;
  BellSetting setting;
};

/// Maximizes bell_parameter over all analyzer settings by multi-start
/// Nelder-Mead over the eight spherical angles (seeded, deterministic). The
/// search never consults the spectral formula below, so the two routes cross-
/// check each other.
BellOptimum bell_max_optimize(const SpinDensityMatrix& rho, std::uint64_t seed = 0,
                              int num_starts = 32);

/// Spectral maximum of the CHSH parameter: 2 sqrt(u1 + u2) where u1 >= u2 are
/// the two largest eigenvalues of T^T T, T_ij = Tr[rho sigma_i x sigma_j].
double bell_max_oracle(const SpinDensityMatrix& rho);

/// Concurrence of the boosted Bell-type momentum state in the limit of large
/// momentum and rapidity: |cos(phi)|.
double asymptotic_concurrence(double phi);

/// Bell basis vectors in the (+,+), (+,-), (-,+), (-,-) order.
Eigen::Vector4cd bell_phi_plus();   // (|++> + |-->)/sqrt(2)
Eigen::Vector4cd bell_phi_minus();  // (|++> - |-->)/sqrt(2)
Eigen::Vector4cd bell_psi_plus();   // (|+-> + |-+>)/sqrt(2)
Eigen::Vector4cd bell_psi_minus();  // (|+-> - |-+>)/sqrt(2)

/// Trace distance (1/2) ||a - b||_1 between Hermitian matrices.
double trace_distance(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b);

/// Named reference density matrices: the four Bell projectors, the equal
/// mixture of psi_minus and phi_plus, and the maximally mixed state.
const std::vector<std::pair<std::string, Eigen::Matrix4cd>>& reference_states();

/// The reference state nearest to rho in trace distance, with the distance.
std::pair<std::string, double> nearest_reference(const SpinDensityMatrix& rho);

}  // namespace relspin
