#pragma once

#include <Eigen/Dense>

#include "relspin/kinematics.hpp"

namespace relspin {

/// Real coefficients of the momentum-helicity transformation matrix induced on
/// Foldy-Wouthuysen (mean-spin) eigenspinors by a boost along x3. For momentum
/// (p, theta, phi) and rapidity xi, with E' the boosted energy:
///
///   A = sqrt((m+E)/(m+E')) [cosh(xi/2) + p cos(theta)/(m+E) sinh(xi/2)]
///   B = p sin(theta) sinh(xi/2) / sqrt((m+E)(m+E'))
///   C = sinh(xi/2) [cosh^2(xi/2) ((m+E)^2 - p^2 cos(2 phi))
///        + m p cos(phi) sinh(xi)] / (E' sqrt((E+m)(E'+m)))
///   D = -p sin(phi) sinh(xi) [E sinh(xi/2) + p cos(phi) cosh(xi/2)]
///        / (E' sqrt((E+m)(E'+m)))
///
/// A and B obey A^2 + B^2 = 1 identically; a_tilde and b_tilde are (E/E') A
/// and (E/E') B as constructed. A and B are evaluated in algebraically
/// rearranged cancellation-free forms so the identity survives in floating
/// point even for theta near 0/pi with |xi| large and p/m up to ~1e6.
struct TransformCoefficients {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double a_tilde = 1.0;
  double b_tilde = 0.0;
  double energy = 0.0;          // E
  double energy_boosted = 0.0;  // E'
};

/// 2x2 complex SU(2) matrix: the spin-1/2 rotation acting on mean-spin labels.
using WignerBlock = Eigen::Matrix2cd;

/// Computes the transformation coefficients. Requires mass > 0, magnitude >= 0
/// and finite angles (std::invalid_argument otherwise); |rapidity| > 300 is
/// rejected with std::domain_error (cosh overflow).
TransformCoefficients wigner_coefficients(double mass, const SphericalMomentum& k,
                                          const BoostZ& boost);

/// The closed-form 4x4 transformation matrix in the basis of fw_eigenspinor
/// columns (+,+1), (+,-1), (-,+1), (-,-1):
///
///   sqrt(E'/E) * [  A         B e^{-i phi}   C          D e^{-i phi} ]
///                [ -B e^{i phi}   A          D e^{i phi}   -C        ]
///                [  0             0          A~         B~ e^{-i phi}]
///                [  0             0         -B~ e^{i phi}  A~        ]
Eigen::Matrix4cd transform_closed_form(double mass, const SphericalMomentum& k,
                                       const BoostZ& boost);

/// The same transformation evaluated as the operator product
///   U(Lambda p) S(Lambda) U(p)^dag
/// of Foldy-Wouthuysen unitaries and the spinor boost. Its positive-energy
/// 2x2 block and lower-right block match transform_closed_form; the printed
/// C, D entries coupling negative- to positive-energy columns do not (see the
/// tests, which report the deviation without asserting on it).
Eigen::Matrix4cd transform_operator_product(double mass, const SphericalMomentum& k,
                                            const BoostZ& boost);

/// The positive-energy 2x2 block with the sqrt(E'/E) prefactor stripped:
///   [  A            B e^{-i phi} ]
///   [ -B e^{i phi}  A            ]
/// Unitary with unit determinant (A^2 + B^2 = 1), so it acts as the Wigner
/// rotation on mean-spin labels.
WignerBlock positive_block(double mass, const SphericalMomentum& k, const BoostZ& boost);

}  // namespace relspin
