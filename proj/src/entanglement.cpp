#include "relspin/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

namespace relspin {

namespace {

using namespace std::complex_literals;

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s;
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -1i, 1i, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Eigen::Matrix2cd pauli_dot(const Eigen::Vector3d& n) {
  return n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3);
}

/// T_ij = Tr[rho sigma_i x sigma_j]; bilinear in the analyzer axes:
/// spin_correlation(rho, a, b) = a . T b.
Eigen::Matrix3d correlation_matrix(const SpinDensityMatrix& rho) {
  Eigen::Matrix3d t;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      t(i - 1, j - 1) = (rho.matrix * kron(pauli(i), pauli(j))).trace().real();
  return t;
}

Eigen::Vector3d unit_from_angles(double polar, double azimuth) {
  const double st = std::sin(polar);
  return {st * std::cos(azimuth), st * std::sin(azimuth), std::cos(polar)};
}

/// CHSH value for analyzer angles packed as
/// (a1 polar, a1 azimuth, a2 polar, a2 azimuth, b1..., b2...).
double chsh_value(const Eigen::Matrix3d& t, const std::array<double, 8>& x) {
  const Eigen::Vector3d a1 = unit_from_angles(x[0], x[1]);
  const Eigen::Vector3d a2 = unit_from_angles(x[2], x[3]);
  const Eigen::Vector3d b1 = unit_from_angles(x[4], x[5]);
  const Eigen::Vector3d b2 = unit_from_angles(x[6], x[7]);
  return std::abs(a1.dot(t * (b1 + b2)) + a2.dot(t * (b1 - b2)));
}

/// Minimizes f over R^n by the Nelder-Mead simplex method, starting from a
/// simplex of edge `step` at x. Stops when the simplex value spread falls
/// below ftol or the evaluation budget is spent. Returns the best value and
/// leaves the best point in x.
template <int n, typename F>
double nelder_mead(const F& f, std::array<double, n>& x, double step, double ftol,
                   int max_evals) {
  using Point = std::array<double, n>;
  std::array<std::pair<double, Point>, n + 1> simplex;
  simplex[0] = {f(x), x};
  for (int i = 0; i < n; ++i) {
    Point p = x;
    p[i] += step;
    simplex[i + 1] = {f(p), p};
  }
  int evals = n + 1;

  const auto by_value = [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; };
  while (evals < max_evals) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex[n].first - simplex[0].first < ftol) break;

    Point centroid{};  // of all vertices but the worst
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += simplex[i].second[k] / n;
    const Point& worst = simplex[n].second;

    const auto affine = [&](double coef) {
      Point p;
      for (int k = 0; k < n; ++k) p[k] = centroid[k] + coef * (centroid[k] - worst[k]);
      return p;
    };

    Point reflected = affine(1.0);
    double fr = f(reflected);
    ++evals;
    if (fr < simplex[0].first) {
      Point expanded = affine(2.0);
      double fe = f(expanded);
      ++evals;
      simplex[n] = fe < fr ? std::pair{fe, expanded} : std::pair{fr, reflected};
    } else if (fr < simplex[n - 1].first) {
      simplex[n] = {fr, reflected};
    } else {
      Point contracted = affine(fr < simplex[n].first ? 0.5 : -0.5);
      double fc = f(contracted);
      ++evals;
      if (fc < std::min(fr, simplex[n].first)) {
        simplex[n] = {fc, contracted};
      } else {  // shrink toward the best vertex
        for (int i = 1; i <= n; ++i) {
          for (int k = 0; k < n; ++k) {
            simplex[i].second[k] = 0.5 * (simplex[i].second[k] + simplex[0].second[k]);
          }
          simplex[i].first = f(simplex[i].second);
        }
        evals += n;
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  x = simplex[0].second;
  return simplex[0].first;
}

}  // namespace

MeasurementDirection::MeasurementDirection(const Eigen::Vector3d& v) {
  const double n = v.norm();
  if (!(n > 1e-12) || !v.allFinite()) {
    throw std::invalid_argument("MeasurementDirection: vector must be finite and nonzero");
  }
  axis_ = v / n;
}

MeasurementDirection MeasurementDirection::from_angles(double polar, double azimuth) {
  return MeasurementDirection(unit_from_angles(polar, azimuth));
}

double concurrence(const SpinDensityMatrix& rho) {
  static const Eigen::Matrix4cd yy = kron(pauli(2), pauli(2));
  const Eigen::Matrix4cd rho_tilde = yy * rho.matrix.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho.matrix * rho_tilde, false);
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i) {
    double ev = es.eigenvalues()[i].real();
    if (std::abs(ev) <= 1e-10) ev = 0.0;  // rank-deficiency noise, sqrt would amplify it
    lam[i] = std::sqrt(std::max(ev, 0.0));
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double spin_correlation(const SpinDensityMatrix& rho, const MeasurementDirection& a,
                        const MeasurementDirection& b) {
  return (rho.matrix * kron(pauli_dot(a.axis()), pauli_dot(b.axis()))).trace().real();
}

double bell_parameter(const SpinDensityMatrix& rho, const BellSetting& setting) {
  return std::abs(spin_correlation(rho, setting.a1, setting.b1) +
                  spin_correlation(rho, setting.a1, setting.b2) +
                  spin_correlation(rho, setting.a2, setting.b1) -
                  spin_correlation(rho, setting.a2, setting.b2));
}

BellOptimum bell_max_optimize(const SpinDensityMatrix& rho, std::uint64_t seed,
                              int num_starts) {
  if (num_starts < 1) {
    throw std::invalid_argument("bell_max_optimize: need at least one start");
  }
  const Eigen::Matrix3d t = correlation_matrix(rho);
  const auto objective = [&t](const std::array<double, 8>& x) { return -chsh_value(t, x); };

  std::mt19937_64 rng(seed);
  const auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };

  // Standard CHSH geometry (a1 = z, a2 = x, b1/b2 diagonal) as the first
  // start; the remaining starts draw all eight angles at random.
  std::array<double, 8> best_x = {0.0,        0.0, M_PI / 2, 0.0,
                                  3 * M_PI / 4, M_PI, 3 * M_PI / 4, 0.0};
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < num_starts; ++s) {
    std::array<double, 8> x;
    if (s == 0) {
      x = best_x;
    } else {
      for (int k = 0; k < 4; ++k) {
        x[2 * k] = uniform(0.0, M_PI);
        x[2 * k + 1] = uniform(0.0, 2.0 * M_PI);
      }
    }
    // The start phase only needs to land in the right basin; the refinement
    // below supplies the precision, so a loose tolerance keeps this cheap.
    const double value = nelder_mead<8>(objective, x, 0.5, 1e-8, 1500);
    if (value < best) {
      best = value;
      best_x = x;
    }
  }
  // Refine around the winner with progressively smaller simplices.
  for (double step : {1e-2, 1e-4}) {
    best = nelder_mead<8>(objective, best_x, step, 1e-14, 4000);
  }

  BellOptimum out;
  out.value = -best;
  out.setting = BellSetting{MeasurementDirection::from_angles(best_x[0], best_x[1]),
                            MeasurementDirection::from_angles(best_x[2], best_x[3]),
                            MeasurementDirection::from_angles(best_x[4], best_x[5]),
                            MeasurementDirection::from_angles(best_x[6], best_x[7])};
  return out;
}

double bell_max_oracle(const SpinDensityMatrix& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(t.transpose() * t, Eigen::EigenvaluesOnly);
  return 2.0 * std::sqrt(es.eigenvalues()[2] + es.eigenvalues()[1]);
}

double asymptotic_concurrence(double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("asymptotic_concurrence: phi must be finite");
  }
  return std::abs(std::cos(phi));
}

Eigen::Vector4cd bell_phi_plus() {
  return Eigen::Vector4cd(1, 0, 0, 1) / std::sqrt(2.0);
}

Eigen::Vector4cd bell_phi_minus() {
  return Eigen::Vector4cd(1, 0, 0, -1) / std::sqrt(2.0);
}

Eigen::Vector4cd bell_psi_plus() {
  return Eigen::Vector4cd(0, 1, 1, 0) / std::sqrt(2.0);
}

Eigen::Vector4cd bell_psi_minus() {
  return Eigen::Vector4cd(0, 1, -1, 0) / std::sqrt(2.0);
}

double trace_distance(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  const Eigen::Matrix4cd diff = a - b;
  const Eigen::Matrix4cd herm = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

const std::vector<std::pair<std::string, Eigen::Matrix4cd>>& reference_states() {
  static const std::vector<std::pair<std::string, Eigen::Matrix4cd>> refs = [] {
    const auto projector = [](const Eigen::Vector4cd& v) -> Eigen::Matrix4cd {
      return v * v.adjoint();
    };
    std::vector<std::pair<std::string, Eigen::Matrix4cd>> r;
    r.emplace_back("phi_plus", projector(bell_phi_plus()));
    r.emplace_back("phi_minus", projector(bell_phi_minus()));
    r.emplace_back("psi_plus", projector(bell_psi_plus()));
    r.emplace_back("psi_minus", projector(bell_psi_minus()));
    r.emplace_back("psi_minus_phi_plus_mixture",
                   0.5 * projector(bell_psi_minus()) + 0.5 * projector(bell_phi_plus()));
    r.emplace_back("maximally_mixed", Eigen::Matrix4cd::Identity() / 4.0);
    return r;
  }();
  return refs;
}

std::pair<std::string, double> nearest_reference(const SpinDensityMatrix& rho) {
  std::pair<std::string, double> best{"", std::numeric_limits<double>::infinity()};
  for (const auto& [name, ref] : reference_states()) {
    const double d = trace_distance(rho.matrix, ref);
    if (d < best.second) best = {name, d};
  }
  return best;
}

}  // namespace relspin
