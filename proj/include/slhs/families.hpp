// families.hpp
// Constructors for the state families under study: Bell states, Werner and
// isotropic mixtures, one-sided-assemblage states, and random separable
// mixtures, plus the closed-form detection thresholds used for comparisons.

#pragma once

#include <cstdint>

#include "slhs/core.hpp"

namespace slhs {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// The standard maximally entangled two-qubit kets.
Ket bell(BellKind kind);

enum class WernerKind { PhiPlus, PsiPlus };

/// Werner family p |psi><psi| + (1-p) I4/4 where psi is the alpha-weighted
/// (and optionally phased) Bell-like ket:
///   PhiPlus: sqrt(alpha)|00> + e^{i phase} sqrt(1-alpha)|11>
///   PsiPlus: sqrt(alpha)|01> + e^{i phase} sqrt(1-alpha)|10>
struct WernerSpec {
  double p = 1.0;
  double alpha = 0.5;
  WernerKind kind = WernerKind::PhiPlus;
  double phase = 0.0;
};

BipartiteState werner(const WernerSpec& spec);

/// Isotropic family (1-p) I_{d^2}/d^2 + (p/d) sum_{ij} |ii><jj|.
struct IsotropicSpec {
  Index d = 2;
  double p = 1.0;
};

BipartiteState isotropic(const IsotropicSpec& spec);

/// Closed-form detection thresholds for the isotropic family at local
/// dimension d: entangled above 1/(d+1), one-sided-steerable above
/// (sum_{r=2}^d 1/r)/(d-1), symmetric-model nonlocal above 1/d.
struct ThresholdTable {
  Index d;
  double entangled;
  double steerable;
  double slhs;
};

ThresholdTable thresholds(Index d);

/// Random state of the one-sided-assemblage form
///   sum_{a,theta} p(a,theta) |a><a| (x) rho_{a|theta}
/// with computational-basis flags a in {0..flags-1} on A and Ginibre-random
/// conditional qubit states on B. Such states never violate the transition
/// inequalities.
BipartiteState lhs_assemblage_state(std::uint64_t seed, int settings, int flags = 2);

/// Random separable mixture sum_m q_m rho_m^A (x) rho_m^B with Ginibre local
/// factors and flat-Dirichlet weights q.
BipartiteState random_separable(std::uint64_t seed, int terms, Index dA, Index dB);

}  // namespace slhs
