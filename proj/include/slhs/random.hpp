// random.hpp
// Seeded random ensembles: Ginibre-induced density matrices, Haar unitaries,
// and the uniform simplex draws used for mixing weights. All draws are
// reproducible bit-for-bit per seed; the raw stream is std::mt19937_64 (whose
// output sequence the standard pins down) and the real-valued transforms are
// implemented here rather than via the library distributions.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slhs/core.hpp"

namespace slhs {

/// Derives an independent stream seed from (seed, stream); used to key
/// parallel workers and per-run RNGs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double normal();

  /// Standard complex normal: independent N(0,1) real and imaginary parts.
  Complex cnormal() { return Complex(normal(), normal()); }

  /// Uniform draw from the probability simplex (flat Dirichlet).
  std::vector<double> dirichlet(int n);

 private:
  std::mt19937_64 gen_;
};

/// d x d matrix of i.i.d. standard complex normal entries.
Matrix ginibre(Index rows, Index cols, Rng& rng);

/// Ginibre-induced state G G† / tr(G G†). Full rank with probability one.
DensityMatrix random_density(Index d, std::uint64_t seed);
DensityMatrix random_density(Index d, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal's
/// phases folded into Q.
Matrix haar_unitary(Index d, std::uint64_t seed);
Matrix haar_unitary(Index d, Rng& rng);

}  // namespace slhs
