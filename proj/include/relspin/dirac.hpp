#pragma once

#include <complex>

#include <Eigen/Dense>

#include "relspin/kinematics.hpp"

namespace relspin {

/// 4x4 complex matrix acting on Dirac spinors.
using SpinorMatrix = Eigen::Matrix4cd;

/// beta = diag(1, 1, -1, -1) in the Dirac (standard) representation.
const SpinorMatrix& beta_matrix();

/// alpha_i = [[0, sigma_i], [sigma_i, 0]] for i in {1, 2, 3}.
/// Throws std::invalid_argument for any other index.
const SpinorMatrix& alpha_matrix(int i);

/// Conventional spin Sigma_i = diag(sigma_i, sigma_i) for i in {1, 2, 3};
/// the spin operator is Sigma_i / 2. Equals (1/2i) (alpha x alpha)_i.
const SpinorMatrix& spin_matrix(int i);

/// Free Dirac Hamiltonian H = alpha . p + beta m. Hermitian, squares to
/// E^2 * Identity, eigenvalues {+E, +E, -E, -E}.
SpinorMatrix dirac_hamiltonian(const FourMomentum& k);

/// Spinor representation of a pure boost along x3 with rapidity xi:
///   S = cosh(xi/2) I + sinh(xi/2) alpha_3.
/// Hermitian, S(xi1) S(xi2) = S(xi1 + xi2), S(-xi) = S(xi)^{-1}. The sign of
/// the sinh term is fixed so that S is consistent with the momentum boost
/// convention of boost_momentum (see the regression test).
SpinorMatrix spinor_boost(const BoostZ& boost);

/// Spinor representation of the standard boost L(p) taking the rest frame to
/// momentum p:  S(L(p)) = (m + E + alpha . p) / sqrt(2 m (E + m)).
SpinorMatrix spinor_standard_boost(const FourMomentum& k);

/// Foldy-Wouthuysen unitary
///   U(p) = (m + E + beta alpha . p) / sqrt(2 E (E + m)),
/// which diagonalizes the Hamiltonian: U H U^dag = beta E.
SpinorMatrix fw_unitary(const FourMomentum& k);

/// Mean-spin operator along a unit axis for momentum p:
///   U(p)^dag (Sigma . axis / 2) U(p).
/// Commutes with dirac_hamiltonian(p), squares to I/4, and the three axis
/// components close the su(2) algebra. Throws std::invalid_argument if the
/// axis is not unit length (tolerance 1e-9).
SpinorMatrix mean_spin(const FourMomentum& k, const Eigen::Vector3d& axis);

/// A Dirac-spinor amplitude tagged with its momentum, energy sign and
/// mean-spin label along x3.
struct SpinorAmplitude {
  FourMomentum momentum;
  int energy_sign = +1;  // +1 or -1
  int spin_label = +1;   // mean-spin eigenvalue sign along x3: +1 or -1
  Eigen::Vector4cd amplitude = Eigen::Vector4cd::Zero();
};

/// Simultaneous eigenspinor of the Hamiltonian (eigenvalue sign * E) and of
/// the mean spin along x3 (eigenvalue lambda/2): the column of U(p)^dag
/// selected by the pair, with columns ordered (+,+1), (+,-1), (-,+1), (-,-1).
/// For sign = +1 this reproduces the conventional positive-energy Dirac
/// spinor sqrt(m/E) S(L(p)) applied to the corresponding rest spinor.
/// Throws std::invalid_argument unless sign and lambda are each +1 or -1.
SpinorAmplitude fw_eigenspinor(const FourMomentum& k, int lambda, int sign);

}  // namespace relspin
