#include "relkit/subspace.hpp"

namespace relkit {

Subspace::Subspace(Index ambient_dim, Matrix basis, const Tolerances& tol)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  tol.validate();
  if (ambient_ <= 0) throw InvalidInput("ambient dimension must be positive");
  if (basis_.rows() != ambient_) throw DimensionMismatch("basis rows do not match ambient dimension");
  if (basis_.cols() > ambient_) throw InvalidInput("subspace dimension exceeds ambient dimension");
  if (!all_finite(basis_)) throw InvalidInput("basis has non-finite entries");
  const Index r = basis_.cols();
  if (r > 0) {
    const Matrix gram = basis_.adjoint() * basis_;
    if ((gram - Matrix::Identity(r, r)).cwiseAbs().maxCoeff() > tol.eps_orth * 10.0)
      throw InvalidInput("basis columns are not orthonormal");
  }
}

Subspace Subspace::zero(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Zero(ambient_dim, 0));
}

Subspace Subspace::full(Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::span(const Matrix& columns, const Tolerances& tol) {
  tol.validate();
  if (columns.rows() <= 0) throw InvalidInput("ambient dimension must be positive");
  if (!all_finite(columns)) throw InvalidInput("span input has non-finite entries");
  const Index n = columns.rows();
  if (columns.cols() == 0) return zero(n);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    const double cutoff = tol.eps_rank * sv(0);
    for (Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
  }
  return Subspace(n, svd.matrixU().leftCols(rank), tol);
}

Matrix projection_matrix(const Subspace& s) { return s.basis() * s.basis().adjoint(); }

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
}
}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_same_ambient(a, b);
  const Index n = a.ambient_dim();
  // v ∈ A ∩ B iff v is annihilated by both projector complements
  Matrix stacked(2 * n, n);
  stacked.topRows(n) = Matrix::Identity(n, n) - projection_matrix(a);
  stacked.bottomRows(n) = Matrix::Identity(n, n) - projection_matrix(b);
  return Subspace(n, kernel_basis(stacked, tol.eps_rank), tol);
}

Subspace sum(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_same_ambient(a, b);
  Matrix cat(a.ambient_dim(), a.dim() + b.dim());
  cat.leftCols(a.dim()) = a.basis();
  cat.rightCols(b.dim()) = b.basis();
  if (cat.cols() == 0) return Subspace::zero(a.ambient_dim());
  return Subspace::span(cat, tol);
}

Subspace complement(const Subspace& a, const Tolerances& tol) {
  return Subspace(a.ambient_dim(), kernel_basis(a.basis().adjoint(), tol.eps_rank), tol);
}

bool contains(const Subspace& s, const Vector& v, const Tolerances& tol) {
  if (v.size() != s.ambient_dim()) throw DimensionMismatch("vector size does not match ambient dimension");
  const Vector residual = v - s.basis() * (s.basis().adjoint() * v);
  return residual.norm() <= tol.eps_eq * std::max(1.0, v.norm());
}

bool contains(const Subspace& outer, const Subspace& inner, const Tolerances& tol) {
  require_same_ambient(outer, inner);
  if (inner.dim() == 0) return true;
  if (inner.dim() > outer.dim()) return false;
  const Matrix residual = inner.basis() - outer.basis() * (outer.basis().adjoint() * inner.basis());
  return spectral_norm(residual) <= tol.eps_eq;
}

bool equals(const Subspace& a, const Subspace& b, const Tolerances& tol) {
  require_same_ambient(a, b);
  if (a.dim() != b.dim()) return false;
  return spectral_norm(projection_matrix(a) - projection_matrix(b)) <= tol.eps_eq;
}

}  // namespace relkit
