// core.hpp
// Dense complex linear algebra and quantum-state primitives shared by the
// rest of the library. States are immutable values: every constructor
// validates its invariants (Hermiticity, trace, positivity, unit norm,
// orthonormality) and throws std::invalid_argument on failure.
//
// Composite-index convention (A-major): the basis ket |a>|b> of a bipartite
// system with local dimensions dA, dB maps to row a*dB + b.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace slhs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Numerical tolerances for the type invariants. Double precision with
// local dimensions <= ~16 keeps construction error far below these.
namespace tol {
inline constexpr double hermiticity = 1e-10;  // max|M - M†|
inline constexpr double trace = 1e-10;        // |tr - 1|
inline constexpr double psd = 1e-9;           // smallest eigenvalue >= -psd
inline constexpr double unitarity = 1e-10;    // max|U†U - I|
inline constexpr double norm = 1e-10;         // |  ||v|| - 1 |
}  // namespace tol

/// Hermitian, unit-trace, positive-semidefinite matrix. With `repair` set,
/// eigenvalues in [-tol::psd, 0) are clipped to zero and the state is
/// renormalized instead of rejected; anything below -tol::psd is always
/// rejected.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, bool repair = false);

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

 private:
  Matrix mat_;
};

/// Pure-state vector with unit norm.
struct Ket {
  explicit Ket(Vector a);

  Index dim() const { return amps.size(); }

  Vector amps;
};

/// Orthonormal basis of one subsystem, stored as the columns of a unitary.
class LocalBasis {
 public:
  explicit LocalBasis(Matrix unitary);

  static LocalBasis computational(Index d);

  Index dim() const { return u_.rows(); }
  Vector vec(Index a) const { return u_.col(a); }
  const Matrix& unitary() const { return u_; }

 private:
  Matrix u_;
};

/// Density matrix together with the subsystem split dA x dB.
class BipartiteState {
 public:
  BipartiteState(Index dA, Index dB, DensityMatrix rho);

  Index dimA() const { return dA_; }
  Index dimB() const { return dB_; }
  const DensityMatrix& rho() const { return rho_; }
  const Matrix& mat() const { return rho_.mat(); }

 private:
  Index dA_, dB_;
  DensityMatrix rho_;
};

enum class Subsystem { A, B };

// Kronecker product under the A-major composite-index convention.
Matrix tensor(const Matrix& a, const Matrix& b);
Vector tensor(const Vector& a, const Vector& b);

/// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep);

/// <bra| rho |ket> as a complex number.
Complex matrix_element(const DensityMatrix& rho, const Ket& bra, const Ket& ket);

/// <psi| rho |psi>, clamped to [0, 1] at +-1e-12.
double fidelity_with_pure(const DensityMatrix& rho, const Ket& psi);

}  // namespace slhs
