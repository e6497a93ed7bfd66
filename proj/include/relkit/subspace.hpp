#pragma once

#include "relkit/core.hpp"

namespace relkit {

/// A linear subspace of C^n held as an ambient dimension plus an orthonormal
/// basis (n x r with r possibly 0). The zero subspace is an n x 0 matrix,
/// never a zero column. Values are immutable after construction and safe to
/// share across threads.
class Subspace {
 public:
  /// Wraps an already orthonormal basis; throws InvalidInput when the columns
  /// are not orthonormal within tol.eps_orth or dimensions are inconsistent.
  Subspace(Index ambient_dim, Matrix basis, const Tolerances& tol = {});

  static Subspace zero(Index ambient_dim);
  static Subspace full(Index ambient_dim);

  /// Orthonormal basis of the column space. Rank is decided by the relative
  /// singular-value cutoff tol.eps_rank against the largest singular value.
  static Subspace span(const Matrix& columns, const Tolerances& tol = {});

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

 private:
  Index ambient_;
  Matrix basis_;
};

/// P = B·Bᴴ: idempotent, Hermitian, range equal to s.
Matrix projection_matrix(const Subspace& s);

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerances& tol = {});
Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol = {});
Subspace complement(const Subspace& a, const Tolerances& tol = {});

/// Vector membership within tol.eps_eq (relative to max(1, ‖v‖)).
bool contains(const Subspace& s, const Vector& v, const Tolerances& tol = {});
/// Subspace inclusion inner ⊂ outer within tol.eps_eq.
bool contains(const Subspace& outer, const Subspace& inner, const Tolerances& tol = {});
/// Projector-norm equality: ‖P_a − P_b‖ ≤ tol.eps_eq. Bases are non-unique,
/// so equality is never tested entrywise on bases.
bool equals(const Subspace& a, const Subspace& b, const Tolerances& tol = {});

inline Index dim(const Subspace& s) { return s.dim(); }

}  // namespace relkit
