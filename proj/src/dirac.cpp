#include "relspin/dirac.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace relspin {

namespace {

using namespace std::complex_literals;

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s;
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -1i, 1i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

SpinorMatrix make_beta() {
  SpinorMatrix b = SpinorMatrix::Zero();
  b.diagonal() << 1, 1, -1, -1;
  return b;
}

SpinorMatrix make_alpha(int i) {
  SpinorMatrix a = SpinorMatrix::Zero();
  a.block<2, 2>(0, 2) = pauli(i);
  a.block<2, 2>(2, 0) = pauli(i);
  return a;
}

SpinorMatrix make_spin(int i) {
  SpinorMatrix s = SpinorMatrix::Zero();
  s.block<2, 2>(0, 0) = pauli(i);
  s.block<2, 2>(2, 2) = pauli(i);
  return s;
}

SpinorMatrix alpha_dot(const Eigen::Vector3d& p) {
  return p.x() * alpha_matrix(1) + p.y() * alpha_matrix(2) + p.z() * alpha_matrix(3);
}

}  // namespace

const SpinorMatrix& beta_matrix() {
  static const SpinorMatrix b = make_beta();
  return b;
}

const SpinorMatrix& alpha_matrix(int i) {
  static const std::array<SpinorMatrix, 3> a = {make_alpha(1), make_alpha(2), make_alpha(3)};
  if (i < 1 || i > 3) throw std::invalid_argument("alpha_matrix: index must be 1, 2 or 3");
  return a[i - 1];
}

const SpinorMatrix& spin_matrix(int i) {
  static const std::array<SpinorMatrix, 3> s = {make_spin(1), make_spin(2), make_spin(3)};
  if (i < 1 || i > 3) throw std::invalid_argument("spin_matrix: index must be 1, 2 or 3");
  return s[i - 1];
}

SpinorMatrix dirac_hamiltonian(const FourMomentum& k) {
  return alpha_dot(k.p) + k.mass * beta_matrix();
}

SpinorMatrix spinor_boost(const BoostZ& boost) {
  if (!std::isfinite(boost.rapidity)) {
    throw std::invalid_argument("spinor_boost: rapidity must be finite");
  }
  const double h = boost.rapidity / 2.0;
  return std::cosh(h) * SpinorMatrix::Identity() + std::sinh(h) * alpha_matrix(3);
}

SpinorMatrix spinor_standard_boost(const FourMomentum& k) {
  const double m = k.mass;
  const double E = k.energy();
  return ((m + E) * SpinorMatrix::Identity() + alpha_dot(k.p)) / std::sqrt(2.0 * m * (E + m));
}

SpinorMatrix fw_unitary(const FourMomentum& k) {
  const double m = k.mass;
  const double E = k.energy();
  return ((m + E) * SpinorMatrix::Identity() + beta_matrix() * alpha_dot(k.p)) /
         std::sqrt(2.0 * E * (E + m));
}

SpinorMatrix mean_spin(const FourMomentum& k, const Eigen::Vector3d& axis) {
  if (std::abs(axis.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("mean_spin: axis must be a unit vector");
  }
  const SpinorMatrix sigma_a =
      0.5 * (axis.x() * spin_matrix(1) + axis.y() * spin_matrix(2) + axis.z() * spin_matrix(3));
  const SpinorMatrix u = fw_unitary(k);
  return u.adjoint() * sigma_a * u;
}

SpinorAmplitude fw_eigenspinor(const FourMomentum& k, int lambda, int sign) {
  if (lambda != 1 && lambda != -1) {
    throw std::invalid_argument("fw_eigenspinor: lambda must be +1 or -1");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("fw_eigenspinor: sign must be +1 or -1");
  }
  const int col = (sign == 1 ? 0 : 2) + (lambda == 1 ? 0 : 1);
  SpinorAmplitude out;
  out.momentum = k;
  out.energy_sign = sign;
  out.spin_label = lambda;
  out.amplitude = fw_unitary(k).adjoint().col(col);
  return out;
}

}  // namespace relspin
