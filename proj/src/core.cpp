#include "slhs/core.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

namespace slhs {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m, bool repair) {
  require(m.rows() == m.cols() && m.rows() >= 1, "DensityMatrix: matrix must be square");
  require(m.allFinite(), "DensityMatrix: entries must be finite");

  const double herm_err = (m - m.adjoint()).cwiseAbs().maxCoeff();
  require(herm_err <= tol::hermiticity,
          "DensityMatrix: not Hermitian (max|M - M'| = " + std::to_string(herm_err) + ")");
  m = ((m + m.adjoint()) / 2.0).eval();

  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  require(trace_err <= tol::trace,
          "DensityMatrix: trace differs from 1 by " + std::to_string(trace_err));

  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const double min_eig = es.eigenvalues().minCoeff();
  require(min_eig >= -tol::psd,
          "DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  if (min_eig < 0.0) {
    if (!repair)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                  std::to_string(min_eig) + " (pass repair=true to clip)");
    Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    clipped /= clipped.sum();
    m = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    m = ((m + m.adjoint()) / 2.0).eval();
  }
  mat_ = std::move(m);
}

Ket::Ket(Vector a) : amps(std::move(a)) {
  require(amps.size() >= 1 && amps.allFinite(), "Ket: amplitudes must be finite");
  const double n = amps.norm();
  require(std::abs(n - 1.0) <= tol::norm,
          "Ket: norm differs from 1 by " + std::to_string(std::abs(n - 1.0)));
}

LocalBasis::LocalBasis(Matrix unitary) : u_(std::move(unitary)) {
  require(u_.rows() == u_.cols() && u_.rows() >= 1, "LocalBasis: matrix must be square");
  const double err =
      (u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols())).cwiseAbs().maxCoeff();
  require(err <= tol::unitarity,
          "LocalBasis: columns not orthonormal (max|U'U - I| = " + std::to_string(err) + ")");
}

LocalBasis LocalBasis::computational(Index d) {
  return LocalBasis(Matrix::Identity(d, d));
}

BipartiteState::BipartiteState(Index dA, Index dB, DensityMatrix rho)
    : dA_(dA), dB_(dB), rho_(std::move(rho)) {
  require(dA >= 1 && dB >= 1, "BipartiteState: dimensions must be positive");
  require(rho_.dim() == dA * dB, "BipartiteState: dim(rho) != dA*dB");
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

Vector tensor(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

DensityMatrix partial_trace(const BipartiteState& s, Subsystem keep) {
  const Index dA = s.dimA(), dB = s.dimB();
  const Matrix& m = s.mat();
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(dA, dA);
    for (Index a = 0; a < dA; ++a)
      for (Index a2 = 0; a2 < dA; ++a2)
        for (Index b = 0; b < dB; ++b) out(a, a2) += m(a * dB + b, a2 * dB + b);
    return DensityMatrix(std::move(out));
  }
  Matrix out = Matrix::Zero(dB, dB);
  for (Index b = 0; b < dB; ++b)
    for (Index b2 = 0; b2 < dB; ++b2)
      for (Index a = 0; a < dA; ++a) out(b, b2) += m(a * dB + b, a * dB + b2);
  return DensityMatrix(std::move(out));
}

Complex matrix_element(const DensityMatrix& rho, const Ket& bra, const Ket& ket) {
  if (bra.dim() != rho.dim() || ket.dim() != rho.dim())
    throw std::invalid_argument("matrix_element: dimension mismatch");
  // Eigen's dot conjugates its left operand, giving <bra|rho|ket>.
  return bra.amps.dot(rho.mat() * ket.amps);
}

double fidelity_with_pure(const DensityMatrix& rho, const Ket& psi) {
  if (psi.dim() != rho.dim())
    throw std::invalid_argument("fidelity_with_pure: dimension mismatch");
  const double f = std::real(psi.amps.dot(rho.mat() * psi.amps));
  if (f < -1e-12 || f > 1.0 + 1e-12)
    throw std::invalid_argument("fidelity_with_pure: value " + std::to_string(f) +
                                " outside [0,1] beyond tolerance");
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace slhs
