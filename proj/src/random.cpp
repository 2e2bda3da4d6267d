#include "slhs/random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace slhs {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::normal() {
  // Box-Muller; u1 kept away from 0 so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> Rng::dirichlet(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - uniform());
    sum += x;
  }
  for (auto& x : w) x /= sum;
  return w;
}

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) g(r, c) = rng.cnormal();
  return g;
}

DensityMatrix random_density(Index d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Matrix m = g * g.adjoint();
  m /= m.trace();
  return DensityMatrix(std::move(m));
}

DensityMatrix random_density(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rng);
}

Matrix haar_unitary(Index d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase freedom of QR so the result is Haar, not merely unitary.
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : Complex(1.0, 0.0);
  }
  return q;
}

Matrix haar_unitary(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(d, rng);
}

}  // namespace slhs
