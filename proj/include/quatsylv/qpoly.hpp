#ifndef QUATSYLV_QPOLY_HPP
#define QUATSYLV_QPOLY_HPP

#include <span>
#include <utility>
#include <vector>

#include "quatsylv/qmatrix.hpp"
#include "quatsylv/quaternion.hpp"

namespace quatsylv {

/// Polynomial over H in a central variable z; coefficients stored lowest
/// degree first with trailing zeros trimmed. The zero polynomial is empty.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Quaternion> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<Quaternion> coeffs) : c_(coeffs) { trim(); }

    static QPoly constant(const Quaternion& q) { return QPoly{{q}}; }
    static QPoly monomial(const Quaternion& coeff, int power);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Quaternion coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Quaternion{};
    }
    std::span<const Quaternion> coeffs() const { return c_; }
    Quaternion leading() const { return c_.empty() ? Quaternion{} : c_.back(); }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Quaternion> c_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator-(const QPoly& a);

/// Convolution product keeping the left factor's coefficients on the left:
/// (fg)_i = sum_{k+j=i} f_k g_j.
QPoly operator*(const QPoly& f, const QPoly& g);

/// rho_alpha(z) = z - alpha, the generator of a maximal ideal.
QPoly rho(const Quaternion& alpha);

/// Characteristic (minimal) polynomial of the class [alpha]:
/// z^2 - 2 Re(alpha) z + |alpha|^2, real coefficients, constant on [alpha].
/// Throws std::domain_error for real alpha.
QPoly char_poly(const Quaternion& alpha, double tol = kDefaultTol);

/// Left and right evaluation: f^{el}(a) = sum a^j f_j, f^{er}(a) = sum f_j a^j.
Quaternion eval_left(const QPoly& f, const Quaternion& a);
Quaternion eval_right(const QPoly& f, const Quaternion& a);
QMatrix eval_left(const QPoly& f, const QMatrix& a);
QMatrix eval_right(const QPoly& f, const QMatrix& b);

/// divmod_right: f = q * d + r;  divmod_left: f = d * q + r;  deg r < deg d.
/// Exact over H since every nonzero leading coefficient is invertible.
std::pair<QPoly, QPoly> divmod_right(const QPoly& f, const QPoly& d);
std::pair<QPoly, QPoly> divmod_left(const QPoly& f, const QPoly& d);

/// Polynomial with matrix coefficients of one fixed shape.
class QMatPoly {
public:
    QMatPoly() = default;
    explicit QMatPoly(std::vector<QMatrix> coeffs);

    static QMatPoly constant(const QMatrix& m) { return QMatPoly{{m}}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    int coeff_rows() const { return rows_; }
    int coeff_cols() const { return cols_; }
    QMatrix coeff(int i) const;
    std::span<const QMatrix> coeffs() const { return c_; }

    /// Horner evaluations: sum A^j F_j and sum F_j B^j.
    QMatrix eval_left(const QMatrix& a) const;
    QMatrix eval_right(const QMatrix& b) const;

private:
    void trim();
    int rows_ = 0, cols_ = 0;
    std::vector<QMatrix> c_;
};

QMatPoly operator+(const QMatPoly& a, const QMatPoly& b);
QMatPoly operator-(const QMatPoly& a, const QMatPoly& b);
QMatPoly operator*(const QMatPoly& f, const QMatPoly& g);
QMatPoly operator*(const QPoly& f, const QMatPoly& g);
QMatPoly operator*(const QMatPoly& f, const QPoly& g);
QMatPoly operator*(const QPoly& f, const QMatrix& m); // coefficients f_t * M
QMatPoly operator*(const QMatPoly& f, const QMatrix& m);

/// || (fg)^{er}(B) - (f * g^{er}(B))^{er}(B) ||_F -- a test utility; the two
/// routes agree identically, so the return value is rounding noise.
double compose_eval_identity_check(const QMatPoly& f, const QMatPoly& g, const QMatrix& b);

/// Validated spherical chain (a_1, ..., a_n): pairwise similar, non-real,
/// and a_{j+1} != conj(a_j) with a guard, since downstream recursions divide
/// by (a_j - conj a_{j+1}).
class SphericalChain {
public:
    static constexpr double kDefaultGuard = 1e-8;

    /// Throws std::domain_error naming the first violating index.
    explicit SphericalChain(std::vector<Quaternion> elems, double tol = kDefaultTol,
                            double guard = kDefaultGuard);

    int size() const { return static_cast<int>(e_.size()); }
    const Quaternion& operator[](int i) const { return e_[i]; }
    std::span<const Quaternion> elems() const { return e_; }
    const Quaternion& front() const { return e_.front(); }
    const Quaternion& back() const { return e_.back(); }

    /// Canonical representative of the common conjugacy class.
    Quaternion class_rep() const { return class_representative(e_.front()); }

    /// Element-wise conjugated chain (valid whenever *this is).
    SphericalChain conjugated() const;

    QMatrix matrix(Orientation orientation) const { return chain_matrix(e_, orientation); }

private:
    struct unchecked_tag {};
    SphericalChain(std::vector<Quaternion> elems, unchecked_tag) : e_(std::move(elems)) {}
    std::vector<Quaternion> e_;
};

/// The unique row D with (rho_alpha D)^{er}(B) = M, namely
/// D = (rho_{conj alpha} M)^{er}(B) (X_[alpha](B))^{-1}.
/// Requires [alpha] disjoint from the right spectrum of B.
QMatrix solve_linear_row(const Quaternion& alpha, const QMatrix& m, const QMatrix& b,
                         double tol = kDefaultTol);

} // namespace quatsylv

#endif
