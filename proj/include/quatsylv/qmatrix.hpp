#ifndef QUATSYLV_QMATRIX_HPP
#define QUATSYLV_QMATRIX_HPP

#include <complex>
#include <span>
#include <vector>

#include "quatsylv/quaternion.hpp"

namespace quatsylv {

/// Dense quaternion matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return e_.empty(); }

    Quaternion& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Quaternion& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const Quaternion> entries() const { return e_; }
    std::span<Quaternion> entries() { return e_; }

    QMatrix row(int i) const;
    QMatrix col(int j) const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Quaternion> e_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator-(const QMatrix& a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Quaternion& s, const QMatrix& a); // entrywise s * a_ij
QMatrix operator*(const QMatrix& a, const Quaternion& s); // entrywise a_ij * s

QMatrix transpose(const QMatrix& m);
QMatrix adjoint(const QMatrix& m); // conjugate transpose
QMatrix conj(const QMatrix& m);
double fnorm(const QMatrix& m); // Frobenius norm over all 4 nm real components
QMatrix mpow(const QMatrix& m, int k);

bool is_lower_triangular(const QMatrix& m);
bool is_upper_triangular(const QMatrix& m);

/// Solve A X = B over the quaternions by Gaussian elimination with partial
/// pivoting (pivot = entry of largest modulus). Throws SingularCaseError when
/// a pivot falls below tol * (1 + max initial row norm).
QMatrix solve_left(const QMatrix& a, const QMatrix& b, double tol = kDefaultTol);
QMatrix inverse(const QMatrix& a, double tol = kDefaultTol);

/// Dense complex matrix, row-major; carrier of the complex representation.
class CMatrix {
public:
    using value_type = std::complex<double>;

    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    value_type& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const value_type& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<value_type> e_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
double fnorm(const CMatrix& m);

/// Complex representation: M = A1 + A2 j maps to the 2n x 2m block matrix
/// [[A1, A2], [-conj A2, conj A1]]. Additive and multiplicative.
CMatrix phi(const QMatrix& m);

/// Left inverse of phi: psi(phi(M)) = M bitwise. Requires even dimensions.
QMatrix psi(const CMatrix& y);

/// alpha I_n + F_n with F_n the subdiagonal shift (lower Jordan block).
QMatrix jordan_block(int n, const Quaternion& alpha);

enum class Orientation { lower, upper };

/// Two-diagonal matrix seeded by a chain: diagonal entries from `elems`,
/// ones on the subdiagonal (lower) or superdiagonal (upper = transpose).
QMatrix chain_matrix(std::span<const Quaternion> elems, Orientation orientation);

/// Distinct conjugacy classes of the diagonal of a triangular matrix, as
/// canonical representatives Re + |Im| i. Throws on non-triangular input.
std::vector<Quaternion> right_spectrum_triangular(const QMatrix& a, double tol = kDefaultTol);

/// True when X -> AX - XB is invertible, i.e. the right spectra of A and B
/// are disjoint and the Sylvester equation is uniquely solvable for every C.
/// Decided by the rank of the 4nm x 4nm real lift of the operator.
bool uniqueness_check(const QMatrix& a, const QMatrix& b, double tol = kDefaultTol);

} // namespace quatsylv

#endif
