#pragma once

#include <optional>

#include "relkit/report.hpp"
#include "relkit/subspace.hpp"

namespace relkit {

/// A single-valued operator with an explicit (possibly proper) domain
/// subspace. The matrix acts on ambient X coordinates; only its restriction
/// to the domain is meaningful.
struct OperatorOnSubspace {
  Subspace domain;
  Matrix matrix;  // dim_y x dim_x

  Index dim_x() const { return domain.ambient_dim(); }
  Index dim_y() const { return matrix.rows(); }

  /// matrix · P_domain: acts as the operator on D(A) and as 0 on D(A)^⊥.
  Matrix extended() const;

  /// sup of ‖matrix·x‖ over unit vectors x in the domain.
  double norm() const;
};

/// A linear relation T ⊂ X×Y held as the orthonormal basis of its graph,
/// coordinates ordered (x, y). May be multi-valued and non-densely defined;
/// every finite-dimensional subspace is closed, so closedness is automatic.
class LinearRelation {
 public:
  LinearRelation(Index dim_x, Index dim_y, Subspace graph);

  Index dim_x() const { return dim_x_; }
  Index dim_y() const { return dim_y_; }
  const Subspace& graph() const { return graph_; }

 private:
  Index dim_x_, dim_y_;
  Subspace graph_;
};

LinearRelation from_operator(const OperatorOnSubspace& op, const Tolerances& tol = {});
/// Graph of an everywhere-defined operator given by its matrix.
LinearRelation graph_of(const Matrix& m, const Tolerances& tol = {});
LinearRelation identity_relation(Index d);
/// The trivial relation {(0, 0)}.
LinearRelation trivial_relation(Index dim_x, Index dim_y);
/// Relation spanned by arbitrary columns of the product space.
LinearRelation relation_from_span(Index dim_x, Index dim_y, const Matrix& columns,
                                  const Tolerances& tol = {});

Subspace domain(const LinearRelation& t, const Tolerances& tol = {});
Subspace range(const LinearRelation& t, const Tolerances& tol = {});
/// T(0) = {y : (0, y) ∈ T}, as a subspace of Y.
Subspace mul_part_space(const LinearRelation& t, const Tolerances& tol = {});
/// T⁻¹(0) = {x : (x, 0) ∈ T}.
Subspace kernel(const LinearRelation& t, const Tolerances& tol = {});

/// {(y, x) : (x, y) ∈ T}; an involution.
LinearRelation inverse(const LinearRelation& t);
/// αT = {(x, αy)}; α = 0 yields D(T) × {0}.
LinearRelation scalar_mul(Complex alpha, const LinearRelation& t, const Tolerances& tol = {});
/// T + S = {(x, y + z) : (x, y) ∈ T, (x, z) ∈ S}.
LinearRelation add(const LinearRelation& t, const LinearRelation& s, const Tolerances& tol = {});
/// T − S, i.e. add(T, scalar_mul(−1, S)).
LinearRelation sub(const LinearRelation& t, const LinearRelation& s, const Tolerances& tol = {});
/// The product ST = {(x, z) : ∃y, (x, y) ∈ T, (y, z) ∈ S}; T acts first.
LinearRelation compose(const LinearRelation& s, const LinearRelation& t, const Tolerances& tol = {});
/// T* = {(f, g) : ⟨g, x⟩ = ⟨f, y⟩ for all (x, y) ∈ T}, computed as the
/// orthogonal complement of the rotated graph {(−y, x)}; maps LR(X,Y) to
/// LR(Y,X) and needs no density assumption.
LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol = {});

/// T ⊂ T*.
bool is_hermitian(const LinearRelation& t, const Tolerances& tol = {});
/// T = T*.
bool is_self_adjoint(const LinearRelation& t, const Tolerances& tol = {});

struct ShiftedRelation {
  LinearRelation relation;
  bool domain_shrank;  // D(T) ⊄ D(A): the natural intersected domain was produced
};
/// T + sign·A for an operator A; never aborts on domain mismatch, the flag
/// reports shrinkage so callers can test outside the theorem regime.
ShiftedRelation shift_by_operator(const LinearRelation& t, const OperatorOnSubspace& a, int sign,
                                  const Tolerances& tol = {});
/// T − λI on a square space.
LinearRelation shift_lambda(const LinearRelation& t, Complex lambda, const Tolerances& tol = {});

bool rel_equals(const LinearRelation& a, const LinearRelation& b, const Tolerances& tol = {});
/// Graph inclusion b ⊂ a.
bool rel_contains(const LinearRelation& a, const LinearRelation& b, const Tolerances& tol = {});
/// T(0) = {0}.
bool is_operator(const LinearRelation& t, const Tolerances& tol = {});

/// Matrix of an everywhere-defined single-valued relation.
Matrix operator_matrix(const LinearRelation& t, const Tolerances& tol = {});
/// Single-valued relation as an operator on its (possibly proper) domain;
/// the returned matrix vanishes on the orthogonal complement of the domain.
OperatorOnSubspace to_operator(const LinearRelation& t, const Tolerances& tol = {});

/// adjoint(adjoint(T)) = T; exact in finite dimension.
CheckResult check_adjoint_involution(const LinearRelation& t, const Tolerances& tol = {});
/// S = (S−T)+T holds exactly when D(S) ⊂ D(T) and T(0) ⊂ S(0); verifies the
/// equivalence in both directions on the given pair.
CheckResult check_lemma21(const LinearRelation& s, const LinearRelation& t,
                          const Tolerances& tol = {});
/// T⁻¹ − S⁻¹ = T⁻¹(S−T)S⁻¹ under S(0) ⊂ T(0), D(S) ⊂ D(T).
CheckResult check_lemma22(const LinearRelation& s, const LinearRelation& t,
                          const Tolerances& tol = {});
/// dim T = dim D(T) + dim T(0) = dim R(T) + dim ker T.
CheckResult check_rank_nullity(const LinearRelation& t, const Tolerances& tol = {});

}  // namespace relkit
