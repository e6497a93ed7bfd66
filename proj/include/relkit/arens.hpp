#pragma once

#include <span>
#include <vector>

#include "relkit/relation.hpp"

namespace relkit {

/// Orthogonal splitting T = T_s ⊕ T_∞ into a single-valued operator part and
/// the purely multi-valued part {0} × T(0).
struct ArensDecomposition {
  LinearRelation op_part;
  OperatorOnSubspace op_part_matrix;  // same data as a matrix on D(T)
  LinearRelation mul_part;
};

ArensDecomposition arens(const LinearRelation& t, const Tolerances& tol = {});

/// λ is in the resolvent set iff (λI − T)⁻¹ is a single-valued operator
/// defined on the whole space; in finite dimension boundedness is automatic,
/// so the test is ker(T − λI) = {0} and R(T − λI) = X.
bool in_resolvent_set(const LinearRelation& t, Complex lambda, const Tolerances& tol = {});

/// The matrix of (λI − T)⁻¹; throws NotInResolventSet otherwise.
Matrix resolvent_operator(const LinearRelation& t, Complex lambda, const Tolerances& tol = {});

/// Re-coordinatizes a relation whose graph lies in sub × sub onto the
/// orthonormal basis of sub, producing a relation on a smaller square space.
LinearRelation compress_relation(const LinearRelation& t, const Subspace& sub,
                                 const Tolerances& tol = {});

struct SpectrumSample {
  Complex lambda;
  bool in_rho = false;          // resolvent membership for T on X
  bool in_rho_op_part = false;  // for T_s restricted to (T(0)^⊥)²
};

struct SpectrumIdentityReport {
  std::vector<SpectrumSample> samples;
  int mismatches = 0;
  bool mul_spectrum_empty = true;          // T_∞ restricted to T(0)² has no spectrum
  bool domain_equals_adjoint_mul_perp = false;  // diagnostic: D(T_s) vs T*(0)^⊥
};

/// For Hermitian T, resolvent membership of T and of its operator part agree
/// pointwise. The domain/adjoint diagnostic is recorded, not asserted.
SpectrumIdentityReport spectrum_identities(const LinearRelation& t, std::span<const Complex> sample,
                                           const Tolerances& tol = {});

/// ‖P_graph − (P_{T_s} + P_{T_∞})‖ ≈ 0 with T_s single-valued.
CheckResult check_arens_reconstruction(const LinearRelation& t, const Tolerances& tol = {});
/// For Hermitian T: T_s = T ∩ (T(0)^⊥)², T_∞ = T ∩ T(0)², T_s Hermitian on
/// T(0)^⊥, and T self-adjoint iff T_s is.
CheckResult check_hermitian_decomposition(const LinearRelation& t, const Tolerances& tol = {});
/// Wraps spectrum_identities into a pass/fail record.
CheckResult check_spectrum_identities(const LinearRelation& t, std::span<const Complex> sample,
                                      const Tolerances& tol = {});
/// For self-adjoint T, ‖(iI − T)⁻¹‖ ≤ 1, cross-checked against the
/// eigenvalues of the operator part.
CheckResult check_resolvent_bound(const LinearRelation& t, const Tolerances& tol = {});

}  // namespace relkit
