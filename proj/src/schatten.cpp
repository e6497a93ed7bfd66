#include "relkit/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relkit {

SingularSpectrum SingularSpectrum::of(const Matrix& m) {
  if (!all_finite(m)) throw InvalidInput("matrix has non-finite entries");
  SingularSpectrum s;
  const Index k = std::min(m.rows(), m.cols());
  if (k == 0) return s;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  s.values.assign(sv.data(), sv.data() + sv.size());
  s.op_norm = s.values.front();
  for (const double v : s.values) s.trace_norm += v;
  return s;
}

Index numeric_rank(const Matrix& m, double eps_rank) {
  const SingularSpectrum s = SingularSpectrum::of(m);
  if (s.values.empty() || s.op_norm <= 0.0) return 0;
  const double cutoff = eps_rank * s.op_norm;
  return std::count_if(s.values.begin(), s.values.end(), [&](double v) { return v > cutoff; });
}

Matrix psd_sqrt(const Matrix& h) {
  // Hermitian eigendecomposition with eigenvalues clamped at zero; rounding
  // can push tiny eigenvalues negative
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * roots.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

Matrix abs_operator(const Matrix& m) { return psd_sqrt(m.adjoint() * m); }

Matrix assemble(const BlockOperator& b) {
  const Index dx = b.dim_x();
  const Index dy = b.dim_y();
  if (b.q11.cols() != dx || b.q21.rows() != dy || b.q21.cols() != dx || b.q12.rows() != dx ||
      b.q12.cols() != dy || b.q22.cols() != dy)
    throw DimensionMismatch("inconsistent block dimensions");
  Matrix m(dx + dy, dx + dy);
  m.topLeftCorner(dx, dx) = b.q11;
  m.topRightCorner(dx, dy) = b.q12;
  m.bottomLeftCorner(dy, dx) = b.q21;
  m.bottomRightCorner(dy, dy) = b.q22;
  return m;
}

BlockOperator split(const Matrix& m, Index dim_x, Index dim_y) {
  if (m.rows() != dim_x + dim_y || m.cols() != dim_x + dim_y)
    throw DimensionMismatch("matrix does not match the product-space dimensions");
  BlockOperator b;
  b.q11 = m.topLeftCorner(dim_x, dim_x);
  b.q12 = m.topRightCorner(dim_x, dim_y);
  b.q21 = m.bottomLeftCorner(dim_y, dim_x);
  b.q22 = m.bottomRightCorner(dim_y, dim_y);
  return b;
}

namespace {
double padded(const std::vector<double>& v, std::size_t n) {
  return n < v.size() ? v[n] : 0.0;
}
}  // namespace

CheckResult check_block_sv_bounds(const BlockOperator& b, int probe_count,
                                  std::uint64_t probe_seed, double allowance) {
  CheckResult r;
  r.check_id = "block_sv_bounds_2_1";
  r.paper_ref = "Proposition 2.1(ii), Eqs (2.13)-(2.16)";

  const Matrix q = assemble(b);
  const SingularSpectrum sq = SingularSpectrum::of(q);
  const SingularSpectrum s11 = SingularSpectrum::of(b.q11);
  const SingularSpectrum s12 = SingularSpectrum::of(b.q12);
  const SingularSpectrum s21 = SingularSpectrum::of(b.q21);
  const SingularSpectrum s22 = SingularSpectrum::of(b.q22);

  double violation = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  auto track = [&](double margin) {
    min_margin = std::min(min_margin, margin);
    violation = std::max(violation, -margin);
  };

  // s_n(Q) ≤ Σ_ij s_n(Q_ij) for every n; blocks are zero-padded past their size
  for (std::size_t n = 0; n < sq.values.size(); ++n) {
    const double bound = padded(s11.values, n) + padded(s12.values, n) + padded(s21.values, n) +
                         padded(s22.values, n);
    track(bound - sq.values[n]);
  }

  // ‖Q_i1 x‖ ≤ ‖P_1 x‖ and ‖Q_i2 y‖ ≤ ‖P_2 y‖ with P_j the root of the Gram
  // column sum, hence s_n(Q_ij) ≤ s_n(P_j)
  const Matrix p1 = psd_sqrt(b.q11.adjoint() * b.q11 + b.q21.adjoint() * b.q21);
  const Matrix p2 = psd_sqrt(b.q12.adjoint() * b.q12 + b.q22.adjoint() * b.q22);

  Rng rng(probe_seed);
  auto probe = [&](const Matrix& block, const Matrix& root, Index dim) {
    for (int k = 0; k < probe_count; ++k) {
      Vector x(dim);
      for (Index i = 0; i < dim; ++i) x(i) = rng.cgauss();
      track((root * x).norm() - (block * x).norm());
    }
  };
  probe(b.q11, p1, b.dim_x());
  probe(b.q21, p1, b.dim_x());
  probe(b.q12, p2, b.dim_y());
  probe(b.q22, p2, b.dim_y());

  const SingularSpectrum sp1 = SingularSpectrum::of(p1);
  const SingularSpectrum sp2 = SingularSpectrum::of(p2);
  for (std::size_t n = 0; n < sq.values.size(); ++n) {
    track(padded(sp1.values, n) - padded(s11.values, n));
    track(padded(sp1.values, n) - padded(s21.values, n));
    track(padded(sp2.values, n) - padded(s12.values, n));
    track(padded(sp2.values, n) - padded(s22.values, n));
  }

  r.residual = violation;
  r.slack = min_margin;
  r.status = violation <= allowance ? CheckStatus::pass : CheckStatus::fail;
  r.details["op_norm_q"] = sq.op_norm;
  r.details["trace_norm_q"] = sq.trace_norm;
  r.details["probes"] = probe_count;
  return r;
}

CheckResult trace_norm_algebra_checks(const Matrix& s, const Matrix& t, double allowance) {
  CheckResult r;
  r.check_id = "trace_norm_algebra_2_6";
  r.paper_ref = "Lemma 2.6, Lemma 2.7";
  if (s.rows() != t.rows() || s.cols() != t.cols())
    throw DimensionMismatch("trace-norm algebra needs same-shape matrices");

  const SingularSpectrum ss = SingularSpectrum::of(s);
  const SingularSpectrum st = SingularSpectrum::of(t);
  const SingularSpectrum ssum = SingularSpectrum::of(s + t);

  double violation = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  auto track = [&](double margin) {
    min_margin = std::min(min_margin, margin);
    violation = std::max(violation, -margin);
  };

  track(ss.trace_norm + st.trace_norm - ssum.trace_norm);
  if (s.cols() == t.rows()) {
    const SingularSpectrum sprod = SingularSpectrum::of(s * t);
    track(ss.op_norm * st.trace_norm - sprod.trace_norm);
    track(ss.trace_norm * st.op_norm - sprod.trace_norm);
  }
  // the adjoint has the same singular values
  violation = std::max(violation, std::abs(SingularSpectrum::of(s.adjoint()).op_norm - ss.op_norm));

  r.residual = violation;
  r.slack = min_margin;
  r.status = violation <= allowance ? CheckStatus::pass : CheckStatus::fail;
  r.details["trace_norm_s"] = ss.trace_norm;
  r.details["trace_norm_t"] = st.trace_norm;
  return r;
}

}  // namespace relkit
