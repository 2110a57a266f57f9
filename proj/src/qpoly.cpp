#include "quatsylv/qpoly.hpp"

#include <stdexcept>
#include <string>

#include "quatsylv/errors.hpp"

namespace quatsylv {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == Quaternion{}) c_.pop_back();
}

QPoly QPoly::monomial(const Quaternion& coeff, int power) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<Quaternion> c(power + 1);
    c[power] = coeff;
    return QPoly{std::move(c)};
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

QPoly operator-(const QPoly& a) {
    std::vector<Quaternion> c(a.coeffs().begin(), a.coeffs().end());
    for (Quaternion& q : c) q = -q;
    return QPoly{std::move(c)};
}

QPoly operator*(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Quaternion> out(f.degree() + g.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) out[i + j] += f.coeff(i) * g.coeff(j);
    return QPoly{std::move(out)};
}

QPoly rho(const Quaternion& alpha) { return QPoly{{-alpha, Quaternion{1}}}; }

QPoly char_poly(const Quaternion& alpha, double tol) {
    if (is_real(alpha, tol))
        throw std::domain_error("char_poly: conjugacy class of a real quaternion is degenerate");
    return QPoly{{Quaternion{abs_sq(alpha)}, Quaternion{-2.0 * re(alpha)}, Quaternion{1}}};
}

Quaternion eval_left(const QPoly& f, const Quaternion& a) {
    Quaternion s;
    for (int j = f.degree(); j >= 0; --j) s = a * s + f.coeff(j);
    return s;
}

Quaternion eval_right(const QPoly& f, const Quaternion& a) {
    Quaternion s;
    for (int j = f.degree(); j >= 0; --j) s = s * a + f.coeff(j);
    return s;
}

QMatrix eval_left(const QPoly& f, const QMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    QMatrix s(a.rows(), a.cols());
    for (int j = f.degree(); j >= 0; --j) {
        s = a * s;
        for (int i = 0; i < a.rows(); ++i) s(i, i) += f.coeff(j);
    }
    return s;
}

QMatrix eval_right(const QPoly& f, const QMatrix& b) {
    if (b.rows() != b.cols()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    QMatrix s(b.rows(), b.cols());
    for (int j = f.degree(); j >= 0; --j) {
        s = s * b;
        for (int i = 0; i < b.rows(); ++i) s(i, i) += f.coeff(j);
    }
    return s;
}

std::pair<QPoly, QPoly> divmod_right(const QPoly& f, const QPoly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Quaternion> q(std::max(0, f.degree() - d.degree() + 1));
    std::vector<Quaternion> r(f.coeffs().begin(), f.coeffs().end());
    const Quaternion lead_inv = inv(d.leading());
    int deg_r = f.degree();
    while (deg_r >= d.degree() && deg_r >= 0) {
        const int t = deg_r - d.degree();
        const Quaternion coeff = r[deg_r] * lead_inv;
        q[t] += coeff;
        for (int i = 0; i <= d.degree(); ++i) r[t + i] -= coeff * d.coeff(i);
        r[deg_r] = Quaternion{}; // cancel exactly; rounding must not stall the loop
        while (deg_r >= 0 && r[deg_r] == Quaternion{}) --deg_r;
    }
    r.resize(deg_r + 1);
    return {QPoly{std::move(q)}, QPoly{std::move(r)}};
}

std::pair<QPoly, QPoly> divmod_left(const QPoly& f, const QPoly& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Quaternion> q(std::max(0, f.degree() - d.degree() + 1));
    std::vector<Quaternion> r(f.coeffs().begin(), f.coeffs().end());
    const Quaternion lead_inv = inv(d.leading());
    int deg_r = f.degree();
    while (deg_r >= d.degree() && deg_r >= 0) {
        const int t = deg_r - d.degree();
        const Quaternion coeff = lead_inv * r[deg_r];
        q[t] += coeff;
        for (int i = 0; i <= d.degree(); ++i) r[t + i] -= d.coeff(i) * coeff;
        r[deg_r] = Quaternion{};
        while (deg_r >= 0 && r[deg_r] == Quaternion{}) --deg_r;
    }
    r.resize(deg_r + 1);
    return {QPoly{std::move(q)}, QPoly{std::move(r)}};
}

QMatPoly::QMatPoly(std::vector<QMatrix> coeffs) : c_(std::move(coeffs)) {
    if (!c_.empty()) {
        rows_ = c_.front().rows();
        cols_ = c_.front().cols();
        for (const QMatrix& m : c_)
            if (m.rows() != rows_ || m.cols() != cols_)
                throw std::invalid_argument("matrix polynomial coefficients must share one shape");
    }
    trim();
}

void QMatPoly::trim() {
    // drops zero leading coefficients but keeps the coefficient shape, so a
    // zero polynomial still evaluates to a correctly shaped zero matrix
    const auto is_zero_mat = [](const QMatrix& m) {
        for (const Quaternion& q : m.entries())
            if (!(q == Quaternion{})) return false;
        return true;
    };
    while (!c_.empty() && is_zero_mat(c_.back())) c_.pop_back();
}

QMatrix QMatPoly::coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    return QMatrix(rows_, cols_);
}

QMatrix QMatPoly::eval_left(const QMatrix& a) const {
    if (rows_ == 0 && cols_ == 0)
        throw std::invalid_argument("matrix polynomial evaluation: shapeless zero polynomial");
    if (a.rows() != a.cols() || a.cols() != rows_)
        throw std::invalid_argument("matrix polynomial left evaluation: shape mismatch");
    if (c_.empty()) return QMatrix(rows_, cols_);
    QMatrix s = c_.back();
    for (int j = degree() - 1; j >= 0; --j) s = a * s + c_[j];
    return s;
}

QMatrix QMatPoly::eval_right(const QMatrix& b) const {
    if (rows_ == 0 && cols_ == 0)
        throw std::invalid_argument("matrix polynomial evaluation: shapeless zero polynomial");
    if (b.rows() != b.cols() || cols_ != b.rows())
        throw std::invalid_argument("matrix polynomial right evaluation: shape mismatch");
    if (c_.empty()) return QMatrix(rows_, cols_);
    QMatrix s = c_.back();
    for (int j = degree() - 1; j >= 0; --j) s = s * b + c_[j];
    return s;
}

QMatPoly operator+(const QMatPoly& a, const QMatPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<QMatrix> out;
    const int deg = std::max(a.degree(), b.degree());
    out.reserve(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        QMatrix c = a.coeff(i);
        if (c.empty()) c = b.coeff(i);
        else if (!b.coeff(i).empty()) c += b.coeff(i);
        out.push_back(std::move(c));
    }
    return QMatPoly{std::move(out)};
}

QMatPoly operator-(const QMatPoly& a, const QMatPoly& b) {
    if (b.is_zero()) return a;
    std::vector<QMatrix> neg;
    neg.reserve(b.degree() + 1);
    for (int i = 0; i <= b.degree(); ++i) neg.push_back(-b.coeff(i));
    return a + QMatPoly{std::move(neg)};
}

QMatPoly operator*(const QMatPoly& f, const QMatPoly& g) {
    if (f.coeff_cols() != g.coeff_rows())
        throw std::invalid_argument("matrix polynomial product shape mismatch");
    if (f.is_zero() || g.is_zero())
        return QMatPoly::constant(QMatrix(f.coeff_rows(), g.coeff_cols()));
    std::vector<QMatrix> out(f.degree() + g.degree() + 1,
                             QMatrix(f.coeff_rows(), g.coeff_cols()));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) out[i + j] += f.coeff(i) * g.coeff(j);
    return QMatPoly{std::move(out)};
}

QMatPoly operator*(const QPoly& f, const QMatPoly& g) {
    if (f.is_zero() || g.is_zero())
        return QMatPoly::constant(QMatrix(g.coeff_rows(), g.coeff_cols()));
    std::vector<QMatrix> out(f.degree() + g.degree() + 1,
                             QMatrix(g.coeff_rows(), g.coeff_cols()));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) out[i + j] += f.coeff(i) * g.coeff(j);
    return QMatPoly{std::move(out)};
}

QMatPoly operator*(const QMatPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero())
        return QMatPoly::constant(QMatrix(f.coeff_rows(), f.coeff_cols()));
    std::vector<QMatrix> out(f.degree() + g.degree() + 1,
                             QMatrix(f.coeff_rows(), f.coeff_cols()));
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j) out[i + j] += f.coeff(i) * g.coeff(j);
    return QMatPoly{std::move(out)};
}

QMatPoly operator*(const QPoly& f, const QMatrix& m) { return f * QMatPoly::constant(m); }

QMatPoly operator*(const QMatPoly& f, const QMatrix& m) { return f * QMatPoly::constant(m); }

double compose_eval_identity_check(const QMatPoly& f, const QMatPoly& g, const QMatrix& b) {
    const QMatrix lhs = (f * g).eval_right(b);
    const QMatrix rhs = (f * g.eval_right(b)).eval_right(b);
    return fnorm(lhs - rhs);
}

SphericalChain::SphericalChain(std::vector<Quaternion> elems, double tol, double guard)
    : e_(std::move(elems)) {
    if (e_.empty()) throw std::domain_error("spherical chain: empty");
    double scale = 0.0;
    for (const Quaternion& q : e_) scale = std::max(scale, abs(q));
    for (size_t i = 0; i < e_.size(); ++i) {
        if (is_real(e_[i], tol))
            throw std::domain_error("spherical chain: element " + std::to_string(i + 1) +
                                    " lies in a real (degenerate) class");
        if (!similar(e_.front(), e_[i], tol))
            throw std::domain_error("spherical chain: element " + std::to_string(i + 1) +
                                    " is not in the class of element 1");
    }
    for (size_t i = 0; i + 1 < e_.size(); ++i) {
        if (abs(e_[i + 1] - conj(e_[i])) <= guard * (1.0 + scale))
            throw std::domain_error("spherical chain: element " + std::to_string(i + 2) +
                                    " equals (or nearly equals) the conjugate of its predecessor");
    }
}

SphericalChain SphericalChain::conjugated() const {
    std::vector<Quaternion> c;
    c.reserve(e_.size());
    for (const Quaternion& q : e_) c.push_back(conj(q));
    return SphericalChain{std::move(c), unchecked_tag{}};
}

QMatrix solve_linear_row(const Quaternion& alpha, const QMatrix& m, const QMatrix& b, double tol) {
    if (m.rows() != 1 || m.cols() != b.rows() || b.rows() != b.cols())
        throw std::invalid_argument("solve_linear_row: expects a row and a square matrix");
    const QMatrix xb = eval_right(char_poly(alpha, tol), b);
    QMatrix xb_inv;
    try {
        xb_inv = inverse(xb, tol);
    } catch (const SingularCaseError&) {
        throw SingularCaseError("solve_linear_row: [alpha] meets the right spectrum of B");
    }
    return (rho(conj(alpha)) * m).eval_right(b) * xb_inv;
}

} // namespace quatsylv
