#ifndef QUATSYLV_ORACLE_HPP
#define QUATSYLV_ORACLE_HPP

#include <vector>

#include "quatsylv/qmatrix.hpp"

namespace quatsylv {

/// The 4nm x 4nm real matrix L with L vec(X) = vec(AX - XB), where vec
/// stacks each quaternion entry as 4 reals, row-major over entries.
/// Deliberately built from 4x4 real multiplication blocks, not from the
/// complex representation, so it is an independent route from the solvers.
struct RealLift {
    int n = 0, m = 0;
    std::vector<double> l; // row-major, size (4nm)^2

    int dim() const { return 4 * n * m; }
    double& at(int r, int c) { return l[static_cast<size_t>(r) * dim() + c]; }
    double at(int r, int c) const { return l[static_cast<size_t>(r) * dim() + c]; }
};

RealLift build_lift(const QMatrix& a, const QMatrix& b);

std::vector<double> vec(const QMatrix& x);
QMatrix unvec(const std::vector<double>& v, int n, int m);

/// Row-echelon rank of the lift with pivots declared zero below
/// tol * (1 + max initial row norm).
int lift_rank(const RealLift& lift, double tol = kDefaultTol);

enum class OracleVerdict { unique, affine, none };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::none;
    QMatrix x0;                    // unique solution, or minimum-norm particular solution
    std::vector<QMatrix> nullspace; // real basis of the homogeneous solution set
    int rank = 0;
};

/// Ground truth by Gaussian elimination with partial pivoting on [L | vec C]:
/// existence via rank comparison, nullspace by back-substitution over the
/// free columns, minimum-norm particular solution by removing the nullspace
/// component (normal equations over the basis).
OracleResult oracle_solve(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                          double tol = kDefaultTol);

} // namespace quatsylv

#endif
