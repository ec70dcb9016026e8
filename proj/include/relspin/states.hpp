#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "relspin/kinematics.hpp"

namespace relspin {

/// One basis term of a two-particle amplitude: momentum labels (indices into
/// the state's momentum table) and mean-spin labels (+1 or -1) for each
/// particle, with a complex coefficient.
struct SpinTerm {
  std::size_t momentum_a = 0;
  std::size_t momentum_b = 0;
  int spin_a = +1;
  int spin_b = +1;
  std::complex<double> amplitude;
};

/// A two-particle state with support on a finite set of momenta, expanded over
/// products of mean-spin (Foldy-Wouthuysen) eigenstates, positive energy only.
///
/// Construction canonicalizes the representation: momenta whose mass and
/// momentum components each agree within relative tolerance 1e-9 (with the
/// mass as the floor scale per component) are merged into one label, terms
/// with identical
/// (momentum, spin) keys have their amplitudes summed coherently, exact zeros
/// are dropped, unreferenced momenta are pruned, and terms are sorted by key.
class TwoParticleState {
 public:
  TwoParticleState() = default;
  TwoParticleState(std::vector<FourMomentum> momenta, std::vector<SpinTerm> terms);

  const std::vector<FourMomentum>& momenta() const { return momenta_; }
  const std::vector<SpinTerm>& terms() const { return terms_; }

  /// sqrt of the sum of |amplitude|^2 over all terms.
  double norm() const;

  /// Returns the state scaled to unit norm. Throws std::invalid_argument on a
  /// zero state.
  TwoParticleState normalized() const;

 private:
  std::vector<FourMomentum> momenta_;
  std::vector<SpinTerm> terms_;
};

/// 4x4 density matrix on the two-particle mean-spin space, basis ordered
/// (spin_a, spin_b) = (+,+), (+,-), (-,+), (-,-).
struct SpinDensityMatrix {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
};

/// max |rho - rho^dag| over elements.
double hermiticity_error(const SpinDensityMatrix& rho);

/// |trace(rho) - 1|.
double trace_error(const SpinDensityMatrix& rho);

/// Smallest eigenvalue of the Hermitian part of rho (negative values beyond
/// rounding noise indicate a non-physical matrix).
double min_eigenvalue(const SpinDensityMatrix& rho);

/// The Bell-type two-particle state with momentum support in the x1 x2 plane:
/// particle A on azimuths {0, phi} with magnitude p, particle B on the
/// opposite momenta, each pair carrying spin (|++> + |-->) with coefficient
/// 1/2. Normalized. For phi = 0 mod 2 pi the two pairs merge and the result
/// is exactly (|++> + |-->)/sqrt(2) on a single momentum pair. Requires
/// mass > 0, momentum > 0 and finite phi.
TwoParticleState bell_momentum_state(double mass, double momentum, double phi);

/// Applies a boost along x3 to both particles: momentum labels transform by
/// boost_momentum and each particle's spin labels rotate by the SU(2) Wigner
/// block of its own momentum. Preserves the norm.
TwoParticleState boost_state(const TwoParticleState& state, const BoostZ& boost);

/// Traces out the momenta: rho = sum over momentum pairs of the outer product
/// of that pair's spin amplitude vector, normalized to unit trace. Cross terms
/// between distinct momentum pairs drop because momentum eigenstates are
/// orthogonal. The result is Hermitian, trace one and positive semidefinite.
SpinDensityMatrix reduce_over_momentum(const TwoParticleState& state);

/// JSON serialization. Amplitudes and matrix elements are stored as [re, im]
/// pairs of decimal floats; doubles round-trip exactly.
void to_json(nlohmann::json& j, const TwoParticleState& state);
void from_json(const nlohmann::json& j, TwoParticleState& state);
void to_json(nlohmann::json& j, const SpinDensityMatrix& rho);
void from_json(const nlohmann::json& j, SpinDensityMatrix& rho);

}  // namespace relspin
