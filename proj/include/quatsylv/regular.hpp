#ifndef QUATSYLV_REGULAR_HPP
#define QUATSYLV_REGULAR_HPP

#include <span>
#include <string_view>

#include "quatsylv/qmatrix.hpp"
#include "quatsylv/qpoly.hpp"

namespace quatsylv {

/// Unique-solution solvers for AX - XB = C, one per structure class, plus a
/// dispatcher that picks the most structured applicable method.

enum class Method { lift, poly_formula, jordan, two_diagonal, rows_lower_tri, cols_upper_tri, singular };

std::string_view method_name(Method m);

struct RegularSolveReport {
    QMatrix x;
    Method method = Method::lift;
    double residual = 0.0; // ||AX - XB - C||_F
};

/// General dense solver through the complex representation: solves
/// phi(A) Y - Y phi(B) = phi(C) as a dense complex linear system
/// (Kronecker form, LU with partial pivoting) and maps back with psi.
/// Throws SingularCaseError when the lifted operator is rank-deficient.
QMatrix solve_lift(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol = kDefaultTol);

/// Polynomial-coefficient formula: with a_0..a_{2n} the coefficients of
/// det(lambda I - phi(A)) (real; Faddeev-LeVerrier),
///   X = -(sum_{k=1}^{2n} sum_{j<k} a_k A^j C B^{k-j-1}) (sum_j a_j B^j)^{-1}.
QMatrix solve_poly_formula(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                           double tol = kDefaultTol);

/// Both sides Jordan blocks: A = J_n(alpha), B = J_m(beta)^T, alpha !~ beta.
QMatrix solve_jordan(const Quaternion& alpha, int n, const Quaternion& beta, int m,
                     const QMatrix& c, double tol = kDefaultTol);

/// A two-diagonal on a single-class chain, any B with X_V(B) invertible.
QMatrix solve_two_diagonal(const SphericalChain& alpha, const QMatrix& b, const QMatrix& c,
                           double tol = kDefaultTol);

/// A two-diagonal with arbitrary diagonal entries (classes may differ);
/// row-wise closed form. Uses the single-class power simplification when all
/// diagonal entries share a class.
QMatrix solve_rows_two_diagonal(std::span<const Quaternion> alpha, const QMatrix& b,
                                const QMatrix& c, double tol = kDefaultTol);
QMatrix solve_rows_two_diagonal(const SphericalChain& alpha, const QMatrix& b, const QMatrix& c,
                                double tol = kDefaultTol);

/// A lower triangular: rows by recursion. B upper triangular: columns, done
/// by the row solver on (B*, A*, -C*) and an adjoint.
QMatrix solve_lower_triangular(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                               double tol = kDefaultTol);
QMatrix solve_upper_triangular_cols(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                                    double tol = kDefaultTol);

/// Dispatcher: jordan > two_diagonal > rows/cols triangular > lift. Falls
/// back to the singular machinery when the spectra overlap and both sides
/// are two-diagonal chain matrices in one class; otherwise singular input
/// raises UnsupportedShapeError (or NoSolutionError when provably unsolvable).
RegularSolveReport solve(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                         double tol = kDefaultTol);

} // namespace quatsylv

#endif
