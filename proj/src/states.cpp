#include "relspin/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "relspin/wigner.hpp"

namespace relspin {

namespace {

constexpr double kMergeTolerance = 1e-9;

bool same_momentum(const FourMomentum& a, const FourMomentum& b) {
  if (std::abs(a.mass - b.mass) > kMergeTolerance * std::max(a.mass, b.mass)) return false;
  // Compare componentwise so that a large shared component (e.g. the
  // longitudinal momentum after a hard boost) cannot mask a genuine
  // transverse separation.  The mass provides the floor scale.
  for (int i = 0; i < 3; ++i) {
    const double scale = std::max({a.mass, std::abs(a.p[i]), std::abs(b.p[i])});
    if (std::abs(a.p[i] - b.p[i]) > kMergeTolerance * scale) return false;
  }
  return true;
}

int spin_index(int label) { return label == 1 ? 0 : 1; }

}  // namespace

TwoParticleState::TwoParticleState(std::vector<FourMomentum> momenta,
                                   std::vector<SpinTerm> terms) {
  for (const FourMomentum& k : momenta) {
    on_shell(k.mass, k.p);  // validates mass > 0 and finiteness
  }
  // Merge momentum labels that coincide within tolerance.
  std::vector<std::size_t> remap(momenta.size());
  std::vector<FourMomentum> merged;
  for (std::size_t i = 0; i < momenta.size(); ++i) {
    std::size_t found = merged.size();
    for (std::size_t j = 0; j < merged.size(); ++j) {
      if (same_momentum(momenta[i], merged[j])) {
        found = j;
        break;
      }
    }
    if (found == merged.size()) merged.push_back(momenta[i]);
    remap[i] = found;
  }

  // Combine amplitudes with identical (momentum, spin) keys.
  std::map<std::tuple<std::size_t, std::size_t, int, int>, std::complex<double>> combined;
  for (const SpinTerm& t : terms) {
    if (t.momentum_a >= momenta.size() || t.momentum_b >= momenta.size()) {
      throw std::invalid_argument("TwoParticleState: momentum label out of range");
    }
    if ((t.spin_a != 1 && t.spin_a != -1) || (t.spin_b != 1 && t.spin_b != -1)) {
      throw std::invalid_argument("TwoParticleState: spin labels must be +1 or -1");
    }
    if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag())) {
      throw std::invalid_argument("TwoParticleState: amplitude must be finite");
    }
    combined[{remap[t.momentum_a], remap[t.momentum_b], spin_index(t.spin_a),
              spin_index(t.spin_b)}] += t.amplitude;
  }

  // Keep only referenced momenta, in first-use order.
  std::vector<std::size_t> used(merged.size(), SIZE_MAX);
  for (const auto& [key, amp] : combined) {
    if (amp == std::complex<double>(0.0, 0.0)) continue;
    const auto& [ia, ib, sa, sb] = key;
    for (std::size_t label : {ia, ib}) {
      if (used[label] == SIZE_MAX) {
        used[label] = momenta_.size();
        momenta_.push_back(merged[label]);
      }
    }
    terms_.push_back(SpinTerm{used[ia], used[ib], sa == 0 ? 1 : -1, sb == 0 ? 1 : -1, amp});
  }
}

double TwoParticleState::norm() const {
  double n2 = 0.0;
  for (const SpinTerm& t : terms_) n2 += std::norm(t.amplitude);
  return std::sqrt(n2);
}

TwoParticleState TwoParticleState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("TwoParticleState: cannot normalize zero state");
  TwoParticleState out = *this;
  for (SpinTerm& t : out.terms_) t.amplitude /= n;
  return out;
}

double hermiticity_error(const SpinDensityMatrix& rho) {
  return (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
}

double trace_error(const SpinDensityMatrix& rho) {
  return std::abs(rho.matrix.trace() - std::complex<double>(1.0, 0.0));
}

double min_eigenvalue(const SpinDensityMatrix& rho) {
  const Eigen::Matrix4cd herm = 0.5 * (rho.matrix + rho.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TwoParticleState bell_momentum_state(double mass, double momentum, double phi) {
  if (!(momentum > 0.0) || !std::isfinite(momentum)) {
    throw std::invalid_argument("bell_momentum_state: momentum must be positive and finite");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("bell_momentum_state: phi must be finite");
  }
  const Eigen::Vector3d pa1(momentum, 0.0, 0.0);
  const Eigen::Vector3d pa2(momentum * std::cos(phi), momentum * std::sin(phi), 0.0);
  std::vector<FourMomentum> momenta = {
      on_shell(mass, pa1), on_shell(mass, -pa1),   // labels 0, 1: first pair
      on_shell(mass, pa2), on_shell(mass, -pa2)};  // labels 2, 3: second pair
  std::vector<SpinTerm> terms = {{0, 1, +1, +1, 0.5}, {0, 1, -1, -1, 0.5},
                                 {2, 3, +1, +1, 0.5}, {2, 3, -1, -1, 0.5}};
  return TwoParticleState(std::move(momenta), std::move(terms)).normalized();
}

TwoParticleState boost_state(const TwoParticleState& state, const BoostZ& boost) {
  std::vector<FourMomentum> boosted;
  std::vector<WignerBlock> blocks;
  boosted.reserve(state.momenta().size());
  blocks.reserve(state.momenta().size());
  for (const FourMomentum& k : state.momenta()) {
    boosted.push_back(boost_momentum(boost, k));
    blocks.push_back(positive_block(k.mass, SphericalMomentum::from_cartesian(k.p), boost));
  }

  std::vector<SpinTerm> terms;
  terms.reserve(4 * state.terms().size());
  for (const SpinTerm& t : state.terms()) {
    const WignerBlock& wa = blocks[t.momentum_a];
    const WignerBlock& wb = blocks[t.momentum_b];
    const int ca = spin_index(t.spin_a);
    const int cb = spin_index(t.spin_b);
    for (int ra = 0; ra < 2; ++ra) {
      for (int rb = 0; rb < 2; ++rb) {
        terms.push_back(SpinTerm{t.momentum_a, t.momentum_b, ra == 0 ? 1 : -1,
                                 rb == 0 ? 1 : -1, t.amplitude * wa(ra, ca) * wb(rb, cb)});
      }
    }
  }
  return TwoParticleState(std::move(boosted), std::move(terms));
}

SpinDensityMatrix reduce_over_momentum(const TwoParticleState& state) {
  std::map<std::pair<std::size_t, std::size_t>, Eigen::Vector4cd> groups;
  for (const SpinTerm& t : state.terms()) {
    auto it = groups.try_emplace({t.momentum_a, t.momentum_b}, Eigen::Vector4cd::Zero()).first;
    it->second[2 * spin_index(t.spin_a) + spin_index(t.spin_b)] += t.amplitude;
  }
  if (groups.empty()) {
    throw std::invalid_argument("reduce_over_momentum: empty state");
  }
  SpinDensityMatrix rho;
  double weight = 0.0;
  for (const auto& [key, v] : groups) {
    rho.matrix += v * v.adjoint();
    weight += v.squaredNorm();
  }
  rho.matrix /= weight;
  return rho;
}

void to_json(nlohmann::json& j, const TwoParticleState& state) {
  nlohmann::json momenta = nlohmann::json::array();
  for (const FourMomentum& k : state.momenta()) {
    momenta.push_back({{"mass", k.mass}, {"p", {k.p.x(), k.p.y(), k.p.z()}}});
  }
  nlohmann::json terms = nlohmann::json::array();
  for (const SpinTerm& t : state.terms()) {
    terms.push_back({{"a", t.momentum_a},
                     {"b", t.momentum_b},
                     {"spin_a", t.spin_a},
                     {"spin_b", t.spin_b},
                     {"amplitude", {t.amplitude.real(), t.amplitude.imag()}}});
  }
  j = nlohmann::json{{"momenta", momenta}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, TwoParticleState& state) {
  std::vector<FourMomentum> momenta;
  for (const auto& jk : j.at("momenta")) {
    const auto& p = jk.at("p");
    momenta.push_back(FourMomentum{
        jk.at("mass").get<double>(),
        Eigen::Vector3d(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>())});
  }
  std::vector<SpinTerm> terms;
  for (const auto& jt : j.at("terms")) {
    const auto& amp = jt.at("amplitude");
    terms.push_back(SpinTerm{jt.at("a").get<std::size_t>(), jt.at("b").get<std::size_t>(),
                             jt.at("spin_a").get<int>(), jt.at("spin_b").get<int>(),
                             {amp.at(0).get<double>(), amp.at(1).get<double>()}});
  }
  state = TwoParticleState(std::move(momenta), std::move(terms));
}

void to_json(nlohmann::json& j, const SpinDensityMatrix& rho) {
  nlohmann::json elements = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      elements.push_back({rho.matrix(r, c).real(), rho.matrix(r, c).imag()});
    }
  }
  j = nlohmann::json{{"basis", {"++", "+-", "-+", "--"}}, {"elements", elements}};
}

void from_json(const nlohmann::json& j, SpinDensityMatrix& rho) {
  const nlohmann::json expected_basis = {"++", "+-", "-+", "--"};
  if (j.at("basis") != expected_basis) {
    throw std::invalid_argument("SpinDensityMatrix: unexpected basis order");
  }
  const auto& elements = j.at("elements");
  if (elements.size() != 16) {
    throw std::invalid_argument("SpinDensityMatrix: expected 16 elements");
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto& e = elements.at(4 * r + c);
      rho.matrix(r, c) = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
}

}  // namespace relspin
