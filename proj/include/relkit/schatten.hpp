#pragma once

#include <vector>

#include "relkit/report.hpp"
#include "relkit/core.hpp"

namespace relkit {

/// All min(m, n) singular values, non-increasing, zeros included. Values
/// below the rank cutoff still count towards the trace norm; rank decisions
/// are a separate concern.
struct SingularSpectrum {
  std::vector<double> values;
  double op_norm = 0.0;
  double trace_norm = 0.0;

  static SingularSpectrum of(const Matrix& m);
};

/// Number of singular values above eps_rank times the largest one.
Index numeric_rank(const Matrix& m, double eps_rank = 1e-10);

/// Square root of a Hermitian positive-semidefinite matrix.
Matrix psd_sqrt(const Matrix& h);

/// |M| = (MᴴM)^{1/2}, computed by a Hermitian eigendecomposition with
/// eigenvalues clamped at zero.
Matrix abs_operator(const Matrix& m);

/// 2×2 block operator on X×Y: q11 on X into X, q21 on X into Y, q12 on Y
/// into X, q22 on Y into Y.
struct BlockOperator {
  Matrix q11, q12, q21, q22;

  Index dim_x() const { return q11.rows(); }
  Index dim_y() const { return q22.rows(); }
};

Matrix assemble(const BlockOperator& b);
BlockOperator split(const Matrix& m, Index dim_x, Index dim_y);

/// Per-index singular-value bounds for a blocked operator: s_n(Q) is bounded
/// by the sum of the blocks' s_n, and each block is dominated by the square
/// root of its Gram column sum. probe_count random vectors exercise the
/// pointwise norm bound.
CheckResult check_block_sv_bounds(const BlockOperator& b, int probe_count = 50,
                                  std::uint64_t probe_seed = 1, double allowance = 1e-10);

/// Trace-norm algebra: triangle inequality for sums and the two mixed
/// operator/trace norm bounds for products.
CheckResult trace_norm_algebra_checks(const Matrix& s, const Matrix& t, double allowance = 1e-10);

}  // namespace relkit
