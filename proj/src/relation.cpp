#include "relkit/relation.hpp"

namespace relkit {

Matrix OperatorOnSubspace::extended() const {
  return matrix * projection_matrix(domain);
}

double OperatorOnSubspace::norm() const {
  return spectral_norm(matrix * domain.basis());
}

LinearRelation::LinearRelation(Index dim_x, Index dim_y, Subspace graph)
    : dim_x_(dim_x), dim_y_(dim_y), graph_(std::move(graph)) {
  if (dim_x_ <= 0 || dim_y_ <= 0) throw InvalidInput("space dimensions must be positive");
  if (graph_.ambient_dim() != dim_x_ + dim_y_)
    throw DimensionMismatch("graph ambient dimension must be dim_x + dim_y");
}

LinearRelation from_operator(const OperatorOnSubspace& op, const Tolerances& tol) {
  const Index dx = op.dim_x();
  const Index dy = op.dim_y();
  if (op.matrix.cols() != dx) throw DimensionMismatch("operator matrix columns must match dim_x");
  const Matrix& d = op.domain.basis();
  Matrix cols(dx + dy, d.cols());
  cols.topRows(dx) = d;
  cols.bottomRows(dy) = op.matrix * d;
  return LinearRelation(dx, dy, Subspace::span(cols, tol));
}

LinearRelation graph_of(const Matrix& m, const Tolerances& tol) {
  return from_operator({Subspace::full(m.cols()), m}, tol);
}

LinearRelation identity_relation(Index d) {
  Matrix basis(2 * d, d);
  basis.topRows(d) = Matrix::Identity(d, d) / std::sqrt(2.0);
  basis.bottomRows(d) = Matrix::Identity(d, d) / std::sqrt(2.0);
  return LinearRelation(d, d, Subspace(2 * d, basis));
}

LinearRelation trivial_relation(Index dim_x, Index dim_y) {
  return LinearRelation(dim_x, dim_y, Subspace::zero(dim_x + dim_y));
}

LinearRelation relation_from_span(Index dim_x, Index dim_y, const Matrix& columns,
                                  const Tolerances& tol) {
  if (columns.rows() != dim_x + dim_y)
    throw DimensionMismatch("span columns must have dim_x + dim_y rows");
  return LinearRelation(dim_x, dim_y, Subspace::span(columns, tol));
}

Subspace domain(const LinearRelation& t, const Tolerances& tol) {
  if (t.graph().dim() == 0) return Subspace::zero(t.dim_x());
  return Subspace::span(t.graph().basis().topRows(t.dim_x()), tol);
}

Subspace range(const LinearRelation& t, const Tolerances& tol) {
  if (t.graph().dim() == 0) return Subspace::zero(t.dim_y());
  return Subspace::span(t.graph().basis().bottomRows(t.dim_y()), tol);
}

Subspace mul_part_space(const LinearRelation& t, const Tolerances& tol) {
  const Matrix& g = t.graph().basis();
  // graph directions with vanishing x-component
  const Matrix coeff = kernel_basis(g.topRows(t.dim_x()), tol.eps_rank);
  if (coeff.cols() == 0) return Subspace::zero(t.dim_y());
  return Subspace::span(g.bottomRows(t.dim_y()) * coeff, tol);
}

Subspace kernel(const LinearRelation& t, const Tolerances& tol) {
  const Matrix& g = t.graph().basis();
  const Matrix coeff = kernel_basis(g.bottomRows(t.dim_y()), tol.eps_rank);
  if (coeff.cols() == 0) return Subspace::zero(t.dim_x());
  return Subspace::span(g.topRows(t.dim_x()) * coeff, tol);
}

LinearRelation inverse(const LinearRelation& t) {
  const Matrix& g = t.graph().basis();
  Matrix swapped(g.rows(), g.cols());
  swapped.topRows(t.dim_y()) = g.bottomRows(t.dim_y());
  swapped.bottomRows(t.dim_x()) = g.topRows(t.dim_x());
  // row permutation keeps the basis orthonormal
  return LinearRelation(t.dim_y(), t.dim_x(), Subspace(g.rows(), swapped));
}

LinearRelation scalar_mul(Complex alpha, const LinearRelation& t, const Tolerances& tol) {
  const Matrix& g = t.graph().basis();
  Matrix cols(g.rows(), g.cols());
  cols.topRows(t.dim_x()) = g.topRows(t.dim_x());
  cols.bottomRows(t.dim_y()) = alpha * g.bottomRows(t.dim_y());
  return LinearRelation(t.dim_x(), t.dim_y(), Subspace::span(cols, tol));
}

LinearRelation add(const LinearRelation& t, const LinearRelation& s, const Tolerances& tol) {
  if (t.dim_x() != s.dim_x() || t.dim_y() != s.dim_y())
    throw DimensionMismatch("relation sum needs equal space dimensions");
  const Index dx = t.dim_x();
  const Index dy = t.dim_y();
  const Matrix& g = t.graph().basis();
  const Matrix& h = s.graph().basis();
  const Index rt = g.cols();
  const Index rs = h.cols();
  // pairs of graph coefficients sharing the same x
  Matrix constraint(dx, rt + rs);
  constraint.leftCols(rt) = g.topRows(dx);
  constraint.rightCols(rs) = -h.topRows(dx);
  const Matrix n = kernel_basis(constraint, tol.eps_rank);
  Matrix cols(dx + dy, n.cols());
  cols.topRows(dx) = g.topRows(dx) * n.topRows(rt);
  cols.bottomRows(dy) = g.bottomRows(dy) * n.topRows(rt) + h.bottomRows(dy) * n.bottomRows(rs);
  return LinearRelation(dx, dy, Subspace::span(cols, tol));
}

LinearRelation sub(const LinearRelation& t, const LinearRelation& s, const Tolerances& tol) {
  return add(t, scalar_mul(Complex(-1.0, 0.0), s, tol), tol);
}

LinearRelation compose(const LinearRelation& s, const LinearRelation& t, const Tolerances& tol) {
  if (s.dim_x() != t.dim_y())
    throw DimensionMismatch("product ST needs dim_x(S) = dim_y(T)");
  const Index dx = t.dim_x();
  const Index dm = t.dim_y();
  const Index dz = s.dim_y();
  const Matrix& g = t.graph().basis();
  const Matrix& h = s.graph().basis();
  const Index rt = g.cols();
  const Index rs = h.cols();
  Matrix constraint(dm, rt + rs);
  constraint.leftCols(rt) = g.bottomRows(dm);
  constraint.rightCols(rs) = -h.topRows(dm);
  const Matrix n = kernel_basis(constraint, tol.eps_rank);
  Matrix cols(dx + dz, n.cols());
  cols.topRows(dx) = g.topRows(dx) * n.topRows(rt);
  cols.bottomRows(dz) = h.bottomRows(dz) * n.bottomRows(rs);
  return LinearRelation(dx, dz, Subspace::span(cols, tol));
}

LinearRelation adjoint(const LinearRelation& t, const Tolerances& tol) {
  const Index dx = t.dim_x();
  const Index dy = t.dim_y();
  const Matrix& g = t.graph().basis();
  Matrix rotated(dy + dx, g.cols());
  rotated.topRows(dy) = -g.bottomRows(dy);
  rotated.bottomRows(dx) = g.topRows(dx);
  // (x, y) ↦ (−y, x) is unitary, so the rotated basis is orthonormal
  const Subspace flipped(dy + dx, rotated);
  return LinearRelation(dy, dx, complement(flipped, tol));
}

bool is_hermitian(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim_x() != t.dim_y()) throw DimensionMismatch("Hermitian test needs a square space");
  return rel_contains(adjoint(t, tol), t, tol);
}

bool is_self_adjoint(const LinearRelation& t, const Tolerances& tol) {
  if (t.dim_x() != t.dim_y()) throw DimensionMismatch("self-adjoint test needs a square space");
  return rel_equals(adjoint(t, tol), t, tol);
}

ShiftedRelation shift_by_operator(const LinearRelation& t, const OperatorOnSubspace& a, int sign,
                                  const Tolerances& tol) {
  if (a.dim_x() != t.dim_x() || a.dim_y() != t.dim_y())
    throw DimensionMismatch("operator shift needs matching space dimensions");
  OperatorOnSubspace scaled{a.domain, Complex(sign, 0.0) * a.matrix};
  const bool shrank = !contains(a.domain, domain(t, tol), tol);
  return {add(t, from_operator(scaled, tol), tol), shrank};
}

LinearRelation shift_lambda(const LinearRelation& t, Complex lambda, const Tolerances& tol) {
  if (t.dim_x() != t.dim_y()) throw DimensionMismatch("scalar shift needs a square space");
  const Index d = t.dim_x();
  const Matrix& g = t.graph().basis();
  Matrix cols(2 * d, g.cols());
  cols.topRows(d) = g.topRows(d);
  cols.bottomRows(d) = g.bottomRows(d) - lambda * g.topRows(d);
  return LinearRelation(d, d, Subspace::span(cols, tol));
}

bool rel_equals(const LinearRelation& a, const LinearRelation& b, const Tolerances& tol) {
  if (a.dim_x() != b.dim_x() || a.dim_y() != b.dim_y()) return false;
  return equals(a.graph(), b.graph(), tol);
}

bool rel_contains(const LinearRelation& a, const LinearRelation& b, const Tolerances& tol) {
  if (a.dim_x() != b.dim_x() || a.dim_y() != b.dim_y()) return false;
  return contains(a.graph(), b.graph(), tol);
}

bool is_operator(const LinearRelation& t, const Tolerances& tol) {
  return mul_part_space(t, tol).dim() == 0;
}

Matrix operator_matrix(const LinearRelation& t, const Tolerances& tol) {
  if (!is_operator(t, tol)) throw InvalidInput("relation is multi-valued");
  if (domain(t, tol).dim() != t.dim_x())
    throw InvalidInput("relation is not everywhere defined");
  const Matrix& g = t.graph().basis();
  return g.bottomRows(t.dim_y()) * pseudo_inverse(g.topRows(t.dim_x()), tol.eps_rank);
}

OperatorOnSubspace to_operator(const LinearRelation& t, const Tolerances& tol) {
  if (!is_operator(t, tol)) throw InvalidInput("relation is multi-valued");
  const Matrix& g = t.graph().basis();
  const Matrix m = g.bottomRows(t.dim_y()) * pseudo_inverse(g.topRows(t.dim_x()), tol.eps_rank);
  return {domain(t, tol), m};
}

CheckResult check_adjoint_involution(const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "adjoint_involution";
  r.paper_ref = "§2.1 adjoint";
  const LinearRelation back = adjoint(adjoint(t, tol), tol);
  r.residual = spectral_norm(projection_matrix(back.graph()) - projection_matrix(t.graph()));
  r.status = r.residual <= tol.eps_eq ? CheckStatus::pass : CheckStatus::fail;
  r.slack = tol.eps_eq - r.residual;
  return r;
}

CheckResult check_lemma21(const LinearRelation& s, const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "lemma_2_1";
  r.paper_ref = "Lemma 2.1";
  const bool hyp = contains(domain(t, tol), domain(s, tol), tol) &&
                   contains(mul_part_space(s, tol), mul_part_space(t, tol), tol);
  const LinearRelation rebuilt = add(sub(s, t, tol), t, tol);
  const double diff =
      spectral_norm(projection_matrix(rebuilt.graph()) - projection_matrix(s.graph()));
  const bool eq = rebuilt.graph().dim() == s.graph().dim() && diff <= tol.eps_eq;
  r.status = (eq == hyp) ? CheckStatus::pass : CheckStatus::fail;
  r.residual = hyp ? diff : 0.0;
  r.details["hypotheses_hold"] = hyp;
  r.details["identity_holds"] = eq;
  r.details["graph_residual"] = diff;
  return r;
}

CheckResult check_lemma22(const LinearRelation& s, const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "lemma_2_2";
  r.paper_ref = "Lemma 2.2";
  const bool hyp = contains(mul_part_space(t, tol), mul_part_space(s, tol), tol) &&
                   contains(domain(t, tol), domain(s, tol), tol);
  if (!hyp) {
    r.status = CheckStatus::hypothesis_violated;
    return r;
  }
  const LinearRelation lhs = sub(inverse(t), inverse(s), tol);
  const LinearRelation rhs = compose(inverse(t), compose(sub(s, t, tol), inverse(s), tol), tol);
  r.residual = spectral_norm(projection_matrix(lhs.graph()) - projection_matrix(rhs.graph()));
  r.status = r.residual <= tol.eps_eq ? CheckStatus::pass : CheckStatus::fail;
  r.details["lhs_dim"] = lhs.graph().dim();
  r.details["rhs_dim"] = rhs.graph().dim();
  return r;
}

CheckResult check_rank_nullity(const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "rank_nullity";
  r.paper_ref = "§2.1 domain/range";
  const Index g = t.graph().dim();
  const Index via_domain = domain(t, tol).dim() + mul_part_space(t, tol).dim();
  const Index via_range = range(t, tol).dim() + kernel(t, tol).dim();
  r.status = (g == via_domain && g == via_range) ? CheckStatus::pass : CheckStatus::fail;
  r.details["graph_dim"] = g;
  r.details["domain_plus_mul"] = via_domain;
  r.details["range_plus_kernel"] = via_range;
  return r;
}

}  // namespace relkit
