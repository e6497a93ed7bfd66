#pragma once

#include <optional>

#include "relkit/arens.hpp"
#include "relkit/relation.hpp"
#include "relkit/schatten.hpp"

namespace relkit {

/// Default λ sample for relation-level identities; nonreal points lie in the
/// resolvent set of every self-adjoint relation.
inline constexpr Complex kDefaultLambdaSample[] = {
    Complex(0.0, 1.0), Complex(0.0, -1.0), Complex(1.0, 1.0), Complex(2.0, 0.0)};

/// Orthogonal projection of the product space onto graph(T).
Matrix graph_projection(const LinearRelation& t);

/// The gap P_T − P_S between two graph projections, its singular spectrum,
/// and the two directed distances realizing ‖P_T − P_S‖ as a sup over unit
/// spheres (evaluated through principal angles).
struct ProjectionGap {
  Matrix p_t, p_s, gap;
  SingularSpectrum spectrum;
  double dist_t_to_s = 0.0;
  double dist_s_to_t = 0.0;
  double sup_formula_residual = 0.0;
};

ProjectionGap projection_gap(const LinearRelation& s, const LinearRelation& t,
                             const Tolerances& tol = {});

/// Standing hypotheses of the perturbation results, recomputed from the
/// data and never trusted from input.
struct HypothesisFlags {
  bool domains_in_dom_a = false;   // D(S) ∪ D(T) ⊂ D(A)
  bool equal_mul_parts = false;    // S(0) = T(0)
  bool equal_domains = false;      // D(S) = D(T)
  bool domains_in_mul_perp = false;  // D(S) ∪ D(T) ⊂ S(0)^⊥
  bool a_mul_in_s_mul = false;     // A(0) ⊂ S(0); automatic for operators
  bool mul_perp_in_dom_a = false;  // S(0)^⊥ ⊂ D(A)
  bool a_densely_defined = false;  // D(A) = X
  bool s_hermitian = false, t_hermitian = false, a_hermitian = false;
  bool s_self_adjoint = false, t_self_adjoint = false;
  bool gamma_member = false;       // A ∈ Γ(S, T)
  std::optional<Complex> resolvent_witness;  // some λ ∈ ρ(S) ∩ ρ(T)
};

struct PerturbationScenario {
  LinearRelation s;
  LinearRelation t;
  std::optional<OperatorOnSubspace> a;
  HypothesisFlags flags;

  static PerturbationScenario make(LinearRelation s, LinearRelation t,
                                   std::optional<OperatorOnSubspace> a,
                                   const Tolerances& tol = {});
};

/// γ = 2(1 + ‖A‖²).
double gamma_constant(const OperatorOnSubspace& a);

/// Both operator-norm inequalities between P_T − P_S and P_{T−A} − P_{S−A}
/// with the constant γ; ratios reported as tightness statistics.
CheckResult check_lemma31(const PerturbationScenario& sc, const Tolerances& tol = {},
                          double allowance = 1e-10);

/// The same two-sided chain per singular-value index.
CheckResult check_sv_inequalities(const PerturbationScenario& sc, const Tolerances& tol = {},
                                  double allowance = 1e-10);

/// A ∈ Γ(S,T): D(S) ∪ D(T) ⊂ D(A) and both (S−A)⁻¹ and (T−A)⁻¹ are
/// single-valued with dense (= full) domain. Density of D(A) itself is
/// recorded separately by the scenario flags, not required here.
bool is_in_gamma_set(const LinearRelation& s, const LinearRelation& t,
                     const OperatorOnSubspace& a, const Tolerances& tol = {});

/// The block decomposition of P_{(T−A)⁻¹} − P_{(S−A)⁻¹} together with the
/// resolvent difference W = (T−A)⁻¹ − (S−A)⁻¹ and the factors F, H. All
/// blocks are everywhere-defined matrices once A ∈ Γ(S,T).
struct ResolventBlocks {
  Matrix f_t, f_s;  // [I + (T*−A*)⁻¹(T−A)⁻¹]⁻¹ and the S version, on Y
  Matrix h_t, h_s;  // [I + (T−A)⁻¹(T*−A*)⁻¹]⁻¹ and the S version, on X
  Matrix p11, p12, p21, p22;
  Matrix w;
  Matrix b_t, b_s;       // (T−A)⁻¹ and (S−A)⁻¹ as matrices Y → X
  Matrix direct_gap;     // P_{(T−A)⁻¹} − P_{(S−A)⁻¹} from graph projections
  double assembly_residual = 0.0;  // ‖assembled − direct_gap‖

  Matrix assembled() const;
};

ResolventBlocks resolvent_blocks(const PerturbationScenario& sc, const Tolerances& tol = {});

/// Wraps resolvent_blocks into a pass/fail record on the assembly residual.
CheckResult check_resolvent_blocks(const PerturbationScenario& sc, const Tolerances& tol = {});

/// The factorization identities tying W to the blocks: the W formula, both
/// expressions for L₁, the F/H factorizations of P₁₁ and its dual, the P₂₁,
/// P₁₂ and P₂₂ reconstructions, and positivity of F and H.
CheckResult check_w_identities(const ResolventBlocks& rb, const Tolerances& tol = {});

/// Records ‖(T−λ)⁻¹ − (S−λ)⁻¹‖₁ against ‖P_T − P_S‖₁ at λ and at a second
/// sample point; informational, nothing asserted beyond finiteness.
CheckResult check_resolvent_criterion(const PerturbationScenario& sc, Complex lambda,
                                      const Tolerances& tol = {});

/// Under S(0) = T(0) and D(S) ∪ D(T) ⊂ T(0)^⊥ the projection gap of the
/// relations and of the operator parts agree pointwise; nonzero singular
/// values and trace norms coincide.
CheckResult reduce_to_operator_parts(const PerturbationScenario& sc, const Tolerances& tol = {});

/// For T = S + A with D(S) = D(T) = D ⊂ D(A): the operator-part sum
/// formulas on D, the domain/range inclusions, and the Hermitian special
/// case where A(0) ⊂ S(0) = T(0) is forced.
CheckResult additive_build(const PerturbationScenario& sc, const Tolerances& tol = {});

/// The relation identities (T−λ)⁻¹(T−S) = (T_s−λ)⁻¹(T_s−S_s) and
/// (T−λ)⁻¹ − (S−λ)⁻¹ = −(T_s−λ)⁻¹(T_s−S_s)(S−λ)⁻¹, valid for every λ under
/// S(0) = T(0) and D(S) = D(T) = D ⊂ S(0)^⊥.
CheckResult check_lemma33_prop34(const PerturbationScenario& sc, Complex lambda,
                                 const Tolerances& tol = {});

/// The Hermitian additive case: the resolvent difference equals
/// −(T_s−λ)⁻¹ P_{S(0)^⊥} A_s (S−λ)⁻¹ as matrices on X, with the trace-norm
/// bound and the finite-rank consequence.
CheckResult check_theorem36(const PerturbationScenario& sc, Complex lambda,
                            const Tolerances& tol = {});

/// Singular values of P_T − P_S match those of P_{T⁻¹} − P_{S⁻¹} through the
/// coordinate flip.
CheckResult check_flip_isometry(const LinearRelation& s, const LinearRelation& t,
                                const Tolerances& tol = {});

/// ‖P_T − P_S‖ agrees with the two-sided sup-distance formula.
CheckResult check_gap_sup_formula(const LinearRelation& s, const LinearRelation& t,
                                  const Tolerances& tol = {});

}  // namespace relkit
