#pragma once

#include <string>

#include "relkit/perturbation.hpp"

namespace relkit {

enum class ScenarioClass { generic, hermitian, self_adjoint, additive, gamma_admissible };

ScenarioClass scenario_class_from_string(const std::string& name);
std::string to_string(ScenarioClass c);

/// Seeded generation parameters. mul_dim and graph_dim may be -1 to draw
/// fresh values per trial; the seed fully determines every draw.
struct GeneratorConfig {
  int dim = 6;
  int mul_dim = -1;
  int graph_dim = -1;
  std::uint64_t seed = 0;
  int trials = 200;
  ScenarioClass cls = ScenarioClass::generic;

  void validate() const;
};

Matrix random_matrix(Index rows, Index cols, Rng& rng);
Matrix random_hermitian(Index n, Rng& rng);
/// Hermitian with the given rank (n for full), eigenvalues standard normal.
Matrix random_hermitian_of_rank(Index n, Index rank, Rng& rng);

/// Haar-like draw: orthonormalized Gaussian columns, dimension exactly r.
Subspace random_subspace(Index dim, Index r, Rng& rng, const Tolerances& tol = {});

/// A single relation of the requested class on C^dim; generated structure is
/// recomputed and asserted after the draw.
LinearRelation random_relation(const GeneratorConfig& cfg, Rng& rng, const Tolerances& tol = {});

/// Everywhere-defined Gaussian operator.
OperatorOnSubspace random_operator(Index dim_x, Index dim_y, Rng& rng);

/// S, T with D(S) ⊂ D(T) and S(0) ⊂ T(0) (the nested-pair regime).
struct NestedPair {
  LinearRelation s;
  LinearRelation t;
};
NestedPair random_nested_pair(Index dim, Rng& rng, const Tolerances& tol = {});

/// Pair with S(0) = T(0) = M and D(S), D(T) ⊂ M^⊥ drawn independently.
PerturbationScenario random_operator_part_pair(Index dim, Index mul_dim, Rng& rng,
                                               const Tolerances& tol = {});

/// Pair with S(0) = T(0) = M and a shared domain D ⊂ M^⊥.
PerturbationScenario random_same_domain_pair(Index dim, Index mul_dim, Rng& rng,
                                             const Tolerances& tol = {});

/// Self-adjoint S with S(0) = M, Hermitian operator A, T = S + A. rank_a < 0
/// draws a full-rank perturbation; full_domain_a = false restricts D(A) to
/// M^⊥ (the minimal admissible domain).
PerturbationScenario random_additive_scenario(Index dim, Index mul_dim, Index rank_a,
                                              bool full_domain_a, Rng& rng,
                                              const Tolerances& tol = {});

/// S, T of graph dimension dim with the multi-valued parts given, plus a
/// Gaussian A verified to lie in Γ(S, T); redraws until admissible.
PerturbationScenario random_gamma_scenario(Index dim, Index mul_s, Index mul_t, Rng& rng,
                                           const Tolerances& tol = {});

/// Per-class scenario used by the conformance suite.
PerturbationScenario random_scenario(const GeneratorConfig& cfg, Rng& rng,
                                     const Tolerances& tol = {});

}  // namespace relkit
