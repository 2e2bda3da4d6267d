// basis_opt.hpp
// Numerical maximization over pairs of local orthonormal bases. A basis is
// parameterized as U = exp(i H) with H expanded in the generalized Gell-Mann
// set (d^2 real coordinates per side); search is derivative-free because the
// objectives are sums of matrix-element magnitudes and therefore non-smooth.

#pragma once

#include <cstdint>
#include <functional>

#include "slhs/core.hpp"

namespace slhs {

enum class OptMethod { NelderMead, CoordinateRotations };

struct OptimizerConfig {
  int restarts = 32;
  int max_evals = 2000;  // objective budget per restart
  std::uint64_t seed = 0;
  double tol = 1e-8;
  OptMethod method = OptMethod::NelderMead;
};

/// A point in basis-pair search space plus its objective value. `converged`
/// is false when the best restart stopped on budget rather than tolerance.
struct BasisPoint {
  Eigen::VectorXd params_a;
  Eigen::VectorXd params_b;
  double score = 0.0;
  bool converged = false;
};

/// Hermitian matrix from d^2 generator coordinates. Coordinate order: for
/// each index pair j<k (lexicographic) the symmetric then the antisymmetric
/// generator, then the d-1 diagonal generators, then the identity. For d=2
/// that is (sigma_x, sigma_y, sigma_z, I).
Matrix hermitian_from_params(const Eigen::VectorXd& params, Index d);

/// exp(i H(params)); unitary by construction.
Matrix unitary_from_params(const Eigen::VectorXd& params, Index d);

/// Inverse of unitary_from_params up to branch choice: coordinates of the
/// principal Hermitian logarithm -i log U.
Eigen::VectorXd params_from_unitary(const Matrix& u);

using BasisPairObjective = std::function<double(const LocalBasis&, const LocalBasis&)>;

/// Maximizes the objective over basis pairs. Restart 0 starts from the
/// identity pair, so the result never scores below the computational-basis
/// value; later restarts start from Haar-random bases on seed-keyed streams.
BasisPoint optimize(const BasisPairObjective& objective, Index d, const OptimizerConfig& cfg);

// Generic derivative-free minimizers, shared with the oracle searches.

struct MinimizeResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evals = 0;
  bool converged = false;
};

MinimizeResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::VectorXd& x0, double step, int max_evals, double tol);

/// Cyclic per-coordinate line search (coarse scan + golden-section refine).
MinimizeResult coordinate_descent(const std::function<double(const Eigen::VectorXd&)>& f,
                                  const Eigen::VectorXd& x0, double half_range, int max_evals,
                                  double tol);

}  // namespace slhs
