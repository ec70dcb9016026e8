#include "relspin/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace relspin {

FourMomentum on_shell(double mass, const Eigen::Vector3d& p) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::invalid_argument("on_shell: mass must be positive and finite");
  }
  if (!p.allFinite()) {
    throw std::invalid_argument("on_shell: momentum components must be finite");
  }
  return FourMomentum{mass, p};
}

Eigen::Vector3d SphericalMomentum::to_cartesian() const {
  const double st = std::sin(polar);
  return magnitude * Eigen::Vector3d(st * std::cos(azimuth), st * std::sin(azimuth),
                                     std::cos(polar));
}

SphericalMomentum SphericalMomentum::from_cartesian(const Eigen::Vector3d& p) {
  const double r = p.norm();
  if (r == 0.0) {
    return SphericalMomentum{0.0, 0.0, 0.0};
  }
  double az = std::atan2(p.y(), p.x());
  if (az < 0.0) az += 2.0 * M_PI;
  // atan2 of (transverse, longitudinal) keeps the polar angle relatively
  // accurate near the axis, where acos(z/r) only achieves absolute accuracy.
  const double polar = std::atan2(p.head<2>().norm(), p.z());
  return SphericalMomentum{r, polar, az};
}

FourMomentum boost_momentum(const BoostZ& boost, const FourMomentum& k) {
  if (!std::isfinite(boost.rapidity)) {
    throw std::invalid_argument("boost_momentum: rapidity must be finite");
  }
  const double xi = boost.rapidity;
  Eigen::Vector3d q = k.p;
  q.z() = k.energy() * std::sinh(xi) + k.p.z() * std::cosh(xi);
  return FourMomentum{k.mass, q};
}

Eigen::Matrix4d standard_boost(const FourMomentum& k) {
  const double m = k.mass;
  const double E = k.energy();
  Eigen::Matrix4d L = Eigen::Matrix4d::Identity();
  L(0, 0) = E / m;
  for (int i = 0; i < 3; ++i) {
    L(0, i + 1) = L(i + 1, 0) = k.p[i] / m;
    for (int j = 0; j < 3; ++j) {
      // (gamma - 1) phat_i phat_j = p_i p_j / (m (E + m)).
      L(i + 1, j + 1) += k.p[i] * k.p[j] / (m * (E + m));
    }
  }
  return L;
}

}  // namespace relspin
