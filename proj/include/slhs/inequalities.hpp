// inequalities.hpp
// Transition-probability primitives and evaluators for the three families of
// symmetric-hidden-state inequalities over joint transition magnitudes.
//
// With |i^a> the columns of basisA and |j^b> of basisB, the joint transition
// magnitude is t(a,a',b,b') = |<i^a j^b| rho |i^a' j^b'>|. The three index
// patterns summed over ordered pairs a != a' (and b != b' where applicable):
//
//   aligned   sum_{a!=a'} t(a,a',a,a')            bound (d-1)/d
//   swapped   sum_{a!=a'} t(a,a',a',a)            bound (d-1)/d
//   combined  sum_{a!=a', b!=b'} t(a,a',b,b')     bound (d-1)^2
//
// Separable states (and more generally any state admitting a symmetric
// local-hidden-state decomposition of its transition magnitudes) satisfy all
// three bounds; a two-qubit Bell pair reaches aligned lhs = 1 > 1/2.

#pragma once

#include <array>
#include <map>

#include "slhs/basis_opt.hpp"
#include "slhs/core.hpp"

namespace slhs {

/// One local transition: basis plus an ordered index pair a != a'.
struct TransitionSpec {
  LocalBasis basis;
  Index a;
  Index a_prime;
};

/// |<i^a| rho |i^a'>|, symmetric under swapping a and a'.
double local_transition(const DensityMatrix& rho, const TransitionSpec& t);

/// |<i^a j^b| rho |i^a' j^b'>|.
double joint_transition(const BipartiteState& s, const LocalBasis& basisA,
                        const LocalBasis& basisB, Index a, Index a_prime, Index b,
                        Index b_prime);

enum class InequalityKind { Aligned, Swapped, Combined };

using TermKey = std::array<Index, 4>;  // (a, a', b, b')

struct InequalityReport {
  InequalityKind kind;
  double lhs = 0.0;
  double bound = 0.0;
  std::map<TermKey, double> terms;
  bool violated = false;
  LocalBasis basisA;
  LocalBasis basisB;
  bool optimizer_converged = true;  // meaningful only for max_violation results
};

double inequality_bound(InequalityKind kind, Index d);

/// Evaluates one inequality at fixed bases. Requires dA == dB.
InequalityReport evaluate(const BipartiteState& s, InequalityKind kind,
                          const LocalBasis& basisA, const LocalBasis& basisB);

/// Report at the best basis pair found by numerical search; never scores
/// below the computational-basis evaluation.
InequalityReport max_violation(const BipartiteState& s, InequalityKind kind,
                               const OptimizerConfig& cfg);

/// Search record for the d-dimensional bound attainability oracle: maximizes
/// sum_{a != a'} t_A(a,a') t_B(a,a') over pairs of single-system states,
/// whose supremum (d-1)/d is attained at uniform transition magnitude 1/d.
struct TransitionMaxRecord {
  double value = 0.0;
  Ket state_a;
  Ket state_b;
  double max_transition_deviation = 0.0;  // max |t(a,a') - 1/d| at the optimum
  bool converged = false;
};

TransitionMaxRecord transition_product_max(Index d, const OptimizerConfig& cfg);

}  // namespace slhs
