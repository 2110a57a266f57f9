#ifndef QUATSYLV_SINGULAR_HPP
#define QUATSYLV_SINGULAR_HPP

#include <vector>

#include "quatsylv/qmatrix.hpp"
#include "quatsylv/qpoly.hpp"

namespace quatsylv {

/// Singular case: A = J_alpha (lower two-diagonal), B = J_beta^T (upper),
/// both chains in one conjugacy class. Solvability is decided by m scalar
/// obstructions; solutions, when they exist, form an affine set with 2m real
/// parameters.

/// One problem instance. Inputs with m > n are normalized at construction
/// through the adjoint equation B* X* - X* A* = -C* (conjugated chains, same
/// order); results are adjointed back by the operations below.
struct SingularInstance {
    SphericalChain alpha; // length n (normalized: n >= m)
    SphericalChain beta;  // length m
    QMatrix c;            // n x m
    double tol = kDefaultTol;
    bool adjointed = false; // true when the m > n reduction was applied

    /// Validates shapes and the common-class requirement; applies the m > n
    /// normalization. Throws std::domain_error / std::invalid_argument.
    static SingularInstance make(const SphericalChain& alpha, const SphericalChain& beta,
                                 const QMatrix& c, double tol = kDefaultTol);
};

/// Triangular table of recursion values G_{k,j}, defined for k, j >= 1 with
/// k + j <= max_sum; reads outside that range (or at nonpositive indices)
/// return zero, matching the recursion's boundary conventions.
class GammaTable {
public:
    GammaTable() = default;
    GammaTable(int max_sum, int max_j);

    int max_sum() const { return max_sum_; }
    Quaternion get(int k, int j) const;
    void set(int k, int j, const Quaternion& v);

private:
    int max_sum_ = 0, max_j_ = 0;
    std::vector<Quaternion> v_;
};

struct SingularAnalysis {
    QMatrix d;                    // D = CB - A'C of the normalized instance
    GammaTable gamma;             // extent k + j <= n
    std::vector<Quaternion> s;    // obstructions S_1..S_m
    bool solvable = false;
    double max_obstruction = 0.0; // max_j |S_j|
};

/// D = CB - A'C, entrywise d_{i,j} = c_{i,j} b_j - conj(a_i) c_{i,j}
/// + c_{i,j-1} + c_{i-1,j} with out-of-range entries zero.
QMatrix build_D(const SingularInstance& inst);

/// The double recursion for Gamma up to k + j <= max_sum. Extents beyond n
/// use the chain extension a_{n+i} = a_n and zero rows appended to C.
GammaTable gamma_table(const SingularInstance& inst, const QMatrix& d, int max_sum);

/// Obstructions and verdict: solvable iff every |S_j| <= tol (1 + ||C||_F).
SingularAnalysis analyze(const SingularInstance& inst);

/// Particular solution by chain extension: the filled Gamma table on
/// k + j <= n + m, read off as an n x m matrix (adjointed back if the
/// instance was normalized). Throws NoSolutionError with the |S_j|.
QMatrix particular_solution(const SingularInstance& inst);

struct JordanSolvability {
    bool solvable = false;
    std::vector<Quaternion> obstructions; // one per column
};

/// Jordan-block criterion (constant chains): for j = 1..m,
///   sum_{2l <= j} Im(a) d_{2l+1, j-2l} + sum_{2l <= j} d_{2l, j-2l+1} Im(b) = 0.
/// Equivalent to the S_j conditions. Requires a ~ b non-real, n >= m.
JordanSolvability jordan_solvability(const Quaternion& alpha, const Quaternion& beta,
                                     const QMatrix& c, int n, int m, double tol = kDefaultTol);

/// Free parameters of the homogeneous solution set: mu_j in Pi_{a_n, b_j}.
struct NullBasisParam {
    std::vector<Quaternion> mu; // length m
};

/// Homogeneous solution from parameters (requires n >= m): zero block on
/// k + j <= n, Y_{n,1} = mu_1, interior entries by the counter-diagonal
/// recursion, bottom-row corrections from ordered inverse products.
/// Parameters within tol of their plane are projected onto it; farther
/// parameters are rejected (std::domain_error).
QMatrix homogeneous_from_params(const SphericalChain& alpha, const SphericalChain& beta,
                                const NullBasisParam& mu, double tol = kDefaultTol);

/// 2m independent homogeneous solutions: one per plane basis vector of
/// Pi_{a_n, b_j}, j = 1..m; together they span the nullspace. Ordered
/// j-major (the two basis directions of plane j are adjacent). Handles
/// m > n through the adjoint reduction.
std::vector<QMatrix> null_basis(const SphericalChain& alpha, const SphericalChain& beta,
                                double tol = kDefaultTol);

struct SingularSolution {
    QMatrix particular;
    std::vector<QMatrix> basis;
};

/// Particular solution plus nullspace basis: every solution is
/// particular + a real combination of the basis.
SingularSolution solve_all(const SingularInstance& inst);

} // namespace quatsylv

#endif
