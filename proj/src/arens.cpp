#include "relkit/arens.hpp"

namespace relkit {

ArensDecomposition arens(const LinearRelation& t, const Tolerances& tol) {
  const Index dx = t.dim_x();
  const Index dy = t.dim_y();
  const Matrix& g = t.graph().basis();

  // multi-valued directions: graph coefficients annihilated by the x-block
  const Matrix coeff = kernel_basis(g.topRows(dx), tol.eps_rank);
  Subspace mul_y = Subspace::zero(dy);
  if (coeff.cols() > 0) mul_y = Subspace::span(g.bottomRows(dy) * coeff, tol);

  Matrix mul_graph = Matrix::Zero(dx + dy, mul_y.dim());
  mul_graph.bottomRows(dy) = mul_y.basis();
  LinearRelation mul_part(dx, dy, Subspace(dx + dy, mul_graph, tol));

  // operator part: graph components orthogonal to {0} × T(0)
  Matrix residualized = g;
  residualized.bottomRows(dy) -= mul_y.basis() * (mul_y.basis().adjoint() * g.bottomRows(dy));
  LinearRelation op_part(dx, dy, Subspace::span(residualized, tol));

  OperatorOnSubspace op_matrix = to_operator(op_part, tol);
  return {std::move(op_part), std::move(op_matrix), std::move(mul_part)};
}

bool in_resolvent_set(const LinearRelation& t, Complex lambda, const Tolerances& tol) {
  if (t.dim_x() != t.dim_y()) throw DimensionMismatch("resolvent needs a square space");
  const LinearRelation shifted = shift_lambda(t, lambda, tol);
  return kernel(shifted, tol).dim() == 0 && range(shifted, tol).dim() == t.dim_y();
}

Matrix resolvent_operator(const LinearRelation& t, Complex lambda, const Tolerances& tol) {
  if (!in_resolvent_set(t, lambda, tol))
    throw NotInResolventSet("lambda is not in the resolvent set");
  const LinearRelation lam_minus_t =
      scalar_mul(Complex(-1.0, 0.0), shift_lambda(t, lambda, tol), tol);
  return operator_matrix(inverse(lam_minus_t), tol);
}

LinearRelation compress_relation(const LinearRelation& t, const Subspace& sub,
                                 const Tolerances& tol) {
  if (t.dim_x() != t.dim_y() || sub.ambient_dim() != t.dim_x())
    throw DimensionMismatch("compression needs a square space matching the subspace ambient");
  const Index d = t.dim_x();
  const Index m = sub.dim();
  if (m == 0) throw InvalidInput("cannot compress onto the zero subspace");
  const Matrix& g = t.graph().basis();
  Matrix cols(2 * m, g.cols());
  cols.topRows(m) = sub.basis().adjoint() * g.topRows(d);
  cols.bottomRows(m) = sub.basis().adjoint() * g.bottomRows(d);
  const Subspace compressed = Subspace::span(cols, tol);
  if (compressed.dim() != g.cols())
    throw InvalidInput("relation does not live on the given subspace");
  return LinearRelation(m, m, compressed);
}

SpectrumIdentityReport spectrum_identities(const LinearRelation& t, std::span<const Complex> sample,
                                           const Tolerances& tol) {
  if (!is_hermitian(t, tol)) throw HypothesisViolated("spectrum identities need a Hermitian relation");
  SpectrumIdentityReport report;
  const ArensDecomposition dec = arens(t, tol);
  const Subspace mul = mul_part_space(t, tol);
  const Subspace perp = complement(mul, tol);

  std::optional<LinearRelation> op_small;
  if (perp.dim() > 0) op_small = compress_relation(dec.op_part, perp, tol);
  std::optional<LinearRelation> mul_small;
  if (mul.dim() > 0) mul_small = compress_relation(dec.mul_part, mul, tol);

  for (const Complex lambda : sample) {
    SpectrumSample entry;
    entry.lambda = lambda;
    entry.in_rho = in_resolvent_set(t, lambda, tol);
    entry.in_rho_op_part = op_small ? in_resolvent_set(*op_small, lambda, tol) : true;
    if (entry.in_rho != entry.in_rho_op_part) ++report.mismatches;
    if (mul_small && !in_resolvent_set(*mul_small, lambda, tol)) report.mul_spectrum_empty = false;
    report.samples.push_back(entry);
  }

  const Subspace adjoint_mul = mul_part_space(adjoint(t, tol), tol);
  report.domain_equals_adjoint_mul_perp =
      equals(domain(t, tol), complement(adjoint_mul, tol), tol);
  return report;
}

CheckResult check_arens_reconstruction(const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "arens_reconstruction";
  r.paper_ref = "Eqs (2.1)-(2.3)";
  const ArensDecomposition dec = arens(t, tol);
  const Matrix reconstructed =
      projection_matrix(dec.op_part.graph()) + projection_matrix(dec.mul_part.graph());
  r.residual = spectral_norm(projection_matrix(t.graph()) - reconstructed);

  const bool single_valued = mul_part_space(dec.op_part, tol).dim() == 0;
  const bool domains_match = equals(domain(dec.op_part, tol), domain(t, tol), tol);
  const bool range_ok = contains(complement(mul_part_space(t, tol), tol),
                                 range(dec.op_part, tol), tol);
  const bool orthogonal =
      spectral_norm(dec.op_part.graph().basis().adjoint() * dec.mul_part.graph().basis()) <=
      tol.eps_eq;
  r.status = (r.residual <= tol.eps_eq && single_valued && domains_match && range_ok && orthogonal)
                 ? CheckStatus::pass
                 : CheckStatus::fail;
  r.details["op_part_single_valued"] = single_valued;
  r.details["domains_match"] = domains_match;
  r.details["op_range_in_mul_perp"] = range_ok;
  r.details["parts_orthogonal"] = orthogonal;
  return r;
}

CheckResult check_hermitian_decomposition(const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "hermitian_decomposition_2_4";
  r.paper_ref = "Lemma 2.3, Lemma 2.4, Eq (2.4)";
  if (t.dim_x() != t.dim_y() || !is_hermitian(t, tol)) {
    r.status = CheckStatus::hypothesis_violated;
    return r;
  }
  const Index d = t.dim_x();
  const ArensDecomposition dec = arens(t, tol);
  const Subspace mul = mul_part_space(t, tol);
  const Subspace perp = complement(mul, tol);

  // product-space projectors of (T(0)^⊥)² and T(0)²
  Matrix perp_sq = Matrix::Zero(2 * d, 2 * perp.dim());
  perp_sq.block(0, 0, d, perp.dim()) = perp.basis();
  perp_sq.block(d, perp.dim(), d, perp.dim()) = perp.basis();
  Matrix mul_sq = Matrix::Zero(2 * d, 2 * mul.dim());
  mul_sq.block(0, 0, d, mul.dim()) = mul.basis();
  mul_sq.block(d, mul.dim(), d, mul.dim()) = mul.basis();

  const Subspace op_expected = intersect(t.graph(), Subspace(2 * d, perp_sq, tol), tol);
  const Subspace mul_expected = intersect(t.graph(), Subspace(2 * d, mul_sq, tol), tol);
  const double res_op =
      spectral_norm(projection_matrix(op_expected) - projection_matrix(dec.op_part.graph()));
  const double res_mul =
      spectral_norm(projection_matrix(mul_expected) - projection_matrix(dec.mul_part.graph()));
  r.residual = std::max(res_op, res_mul);

  bool op_part_hermitian = true;
  bool equiv_self_adjoint = true;
  if (perp.dim() > 0) {
    const LinearRelation small = compress_relation(dec.op_part, perp, tol);
    op_part_hermitian = is_hermitian(small, tol);
    equiv_self_adjoint = (is_self_adjoint(t, tol) == is_self_adjoint(small, tol));
  }
  r.status = (r.residual <= tol.eps_eq && op_part_hermitian && equiv_self_adjoint)
                 ? CheckStatus::pass
                 : CheckStatus::fail;
  r.details["op_part_residual"] = res_op;
  r.details["mul_part_residual"] = res_mul;
  r.details["op_part_hermitian_on_mul_perp"] = op_part_hermitian;
  r.details["self_adjointness_equivalent"] = equiv_self_adjoint;
  return r;
}

CheckResult check_spectrum_identities(const LinearRelation& t, std::span<const Complex> sample,
                                      const Tolerances& tol) {
  CheckResult r;
  r.check_id = "spectrum_identities_2_5";
  r.paper_ref = "Lemma 2.4, Eq (2.5)";
  if (t.dim_x() != t.dim_y() || !is_hermitian(t, tol)) {
    r.status = CheckStatus::hypothesis_violated;
    return r;
  }
  const SpectrumIdentityReport rep = spectrum_identities(t, sample, tol);
  r.status = (rep.mismatches == 0 && rep.mul_spectrum_empty) ? CheckStatus::pass : CheckStatus::fail;
  r.details["mismatches"] = rep.mismatches;
  r.details["mul_spectrum_empty"] = rep.mul_spectrum_empty;
  r.details["domain_equals_adjoint_mul_perp"] = rep.domain_equals_adjoint_mul_perp;
  r.details["samples"] = rep.samples.size();
  return r;
}

CheckResult check_resolvent_bound(const LinearRelation& t, const Tolerances& tol) {
  CheckResult r;
  r.check_id = "resolvent_bound_self_adjoint";
  r.paper_ref = "Definition 2.1";
  if (t.dim_x() != t.dim_y() || !is_self_adjoint(t, tol)) {
    r.status = CheckStatus::hypothesis_violated;
    return r;
  }
  const Complex lambda(0.0, 1.0);
  const Matrix res = resolvent_operator(t, lambda, tol);
  const double norm = spectral_norm(res);

  // expected norm from the eigenvalues of the operator part on T(0)^⊥
  const Subspace perp = complement(mul_part_space(t, tol), tol);
  double expected = 0.0;
  if (perp.dim() > 0) {
    const ArensDecomposition dec = arens(t, tol);
    const Matrix compressed =
        perp.basis().adjoint() * dec.op_part_matrix.extended() * perp.basis();
    Eigen::SelfAdjointEigenSolver<Matrix> es(compressed);
    for (Index i = 0; i < es.eigenvalues().size(); ++i)
      expected = std::max(expected, 1.0 / std::abs(lambda - Complex(es.eigenvalues()(i), 0.0)));
  }
  r.residual = std::abs(norm - expected);
  r.slack = 1.0 - norm;
  r.status = (norm <= 1.0 + tol.eps_eq && r.residual <= tol.eps_eq) ? CheckStatus::pass
                                                                    : CheckStatus::fail;
  r.details["norm"] = norm;
  r.details["expected_from_eigenvalues"] = expected;
  return r;
}

}  // namespace relkit
