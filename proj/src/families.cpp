#include "slhs/families.hpp"

#include <cmath>

#include "slhs/random.hpp"

namespace slhs {

Ket bell(BellKind kind) {
  Vector v = Vector::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::PhiPlus:
      v(0) = s;
      v(3) = s;
      break;
    case BellKind::PhiMinus:
      v(0) = s;
      v(3) = -s;
      break;
    case BellKind::PsiPlus:
      v(1) = s;
      v(2) = s;
      break;
    case BellKind::PsiMinus:
      v(1) = s;
      v(2) = -s;
      break;
  }
  return Ket(std::move(v));
}

BipartiteState werner(const WernerSpec& spec) {
  if (spec.p < 0.0 || spec.p > 1.0 || spec.alpha < 0.0 || spec.alpha > 1.0)
    throw std::invalid_argument("werner: p and alpha must lie in [0, 1]");
  Vector psi = Vector::Zero(4);
  const Complex ph = std::polar(1.0, spec.phase);
  if (spec.kind == WernerKind::PhiPlus) {
    psi(0) = std::sqrt(spec.alpha);
    psi(3) = ph * std::sqrt(1.0 - spec.alpha);
  } else {
    psi(1) = std::sqrt(spec.alpha);
    psi(2) = ph * std::sqrt(1.0 - spec.alpha);
  }
  Matrix m = spec.p * (psi * psi.adjoint()) +
             (1.0 - spec.p) / 4.0 * Matrix::Identity(4, 4);
  return BipartiteState(2, 2, DensityMatrix(std::move(m)));
}

BipartiteState isotropic(const IsotropicSpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("isotropic: d must be >= 2");
  if (spec.p < 0.0 || spec.p > 1.0)
    throw std::invalid_argument("isotropic: p must lie in [0, 1]");
  const Index d = spec.d, D = d * d;
  Matrix m = (1.0 - spec.p) / static_cast<double>(D) * Matrix::Identity(D, D);
  const double w = spec.p / static_cast<double>(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i * d + i, j * d + j) += w;
  return BipartiteState(d, d, DensityMatrix(std::move(m)));
}

ThresholdTable thresholds(Index d) {
  if (d < 2) throw std::invalid_argument("thresholds: d must be >= 2");
  double harmonic_tail = 0.0;
  for (Index r = 2; r <= d; ++r) harmonic_tail += 1.0 / static_cast<double>(r);
  return ThresholdTable{d, 1.0 / static_cast<double>(d + 1),
                        harmonic_tail / static_cast<double>(d - 1),
                        1.0 / static_cast<double>(d)};
}

BipartiteState lhs_assemblage_state(std::uint64_t seed, int settings, int flags) {
  if (settings < 1) throw std::invalid_argument("lhs_assemblage_state: settings must be >= 1");
  if (flags < 1) throw std::invalid_argument("lhs_assemblage_state: flags must be >= 1");
  Rng rng(seed);
  const Index dB = 2;
  const Index dA = static_cast<Index>(std::max(flags, 2));  // keep a genuine qubit flag space
  const std::vector<double> weights = rng.dirichlet(flags * settings);
  Matrix m = Matrix::Zero(dA * dB, dA * dB);
  int k = 0;
  for (int a = 0; a < flags; ++a) {
    for (int theta = 0; theta < settings; ++theta, ++k) {
      const DensityMatrix cond = random_density(dB, rng);
      m.block(a * dB, a * dB, dB, dB) += weights[static_cast<std::size_t>(k)] * cond.mat();
    }
  }
  return BipartiteState(dA, dB, DensityMatrix(std::move(m)));
}

BipartiteState random_separable(std::uint64_t seed, int terms, Index dA, Index dB) {
  if (terms < 1 || terms > 16)
    throw std::invalid_argument("random_separable: terms must lie in [1, 16]");
  Rng rng(seed);
  const std::vector<double> q = rng.dirichlet(terms);
  Matrix m = Matrix::Zero(dA * dB, dA * dB);
  for (int t = 0; t < terms; ++t) {
    const DensityMatrix a = random_density(dA, rng);
    const DensityMatrix b = random_density(dB, rng);
    m += q[static_cast<std::size_t>(t)] * tensor(a.mat(), b.mat());
  }
  return BipartiteState(dA, dB, DensityMatrix(std::move(m)));
}

}  // namespace slhs
