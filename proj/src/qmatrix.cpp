#include "quatsylv/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatsylv/errors.hpp"

namespace quatsylv {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch");
}

} // namespace

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Quaternion{1};
    return m;
}

QMatrix QMatrix::row(int i) const {
    QMatrix r(1, cols_);
    for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
    return r;
}

QMatrix QMatrix::col(int j) const {
    QMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    require_same_shape(*this, o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    require_same_shape(*this, o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

QMatrix operator-(const QMatrix& a) {
    QMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Quaternion& aik = a(i, k);
            if (aik == Quaternion{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

QMatrix operator*(const Quaternion& s, const QMatrix& a) {
    QMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

QMatrix operator*(const QMatrix& a, const Quaternion& s) {
    QMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * s;
    return out;
}

QMatrix transpose(const QMatrix& m) {
    QMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

QMatrix adjoint(const QMatrix& m) {
    QMatrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
    return out;
}

QMatrix conj(const QMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = conj(m(i, j));
    return out;
}

double fnorm(const QMatrix& m) {
    double s = 0.0;
    for (const Quaternion& q : m.entries()) s += abs_sq(q);
    return std::sqrt(s);
}

QMatrix mpow(const QMatrix& m, int k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix power of non-square matrix");
    QMatrix out = QMatrix::identity(m.rows());
    for (int t = 0; t < k; ++t) out = out * m;
    return out;
}

bool is_lower_triangular(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == Quaternion{})) return false;
    return true;
}

bool is_upper_triangular(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!(m(i, j) == Quaternion{})) return false;
    return true;
}

QMatrix solve_left(const QMatrix& a, const QMatrix& b, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_left: matrix not square");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_left: shape mismatch");
    const int n = a.rows();
    const int m = b.cols();

    // augmented [A | B], eliminated in place
    QMatrix w(n, n + m);
    double row_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        double rn = 0.0;
        for (int j = 0; j < n; ++j) {
            w(i, j) = a(i, j);
            rn += abs_sq(a(i, j));
        }
        for (int j = 0; j < m; ++j) w(i, n + j) = b(i, j);
        row_scale = std::max(row_scale, std::sqrt(rn));
    }
    const double thresh = tol * (1.0 + row_scale);

    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (abs_sq(w(r, c)) > abs_sq(w(p, c))) p = r;
        if (abs(w(p, c)) <= thresh)
            throw SingularCaseError("quaternion linear system is singular at tolerance");
        if (p != c)
            for (int j = 0; j < n + m; ++j) std::swap(w(c, j), w(p, j));
        const Quaternion piv_inv = inv(w(c, c));
        for (int j = c; j < n + m; ++j) w(c, j) = piv_inv * w(c, j);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const Quaternion f = w(r, c);
            if (f == Quaternion{}) continue;
            for (int j = c; j < n + m; ++j) w(r, j) -= f * w(c, j);
        }
    }

    QMatrix x(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) x(i, j) = w(i, n + j);
    return x;
}

QMatrix inverse(const QMatrix& a, double tol) { return solve_left(a, QMatrix::identity(a.rows()), tol); }

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("complex matrix shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("complex matrix shape mismatch");
    CMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("complex matrix product shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::complex<double> aik = a(i, k);
            if (aik == std::complex<double>{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

double fnorm(const CMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

CMatrix phi(const QMatrix& m) {
    const int n = m.rows(), c = m.cols();
    CMatrix out(2 * n, 2 * c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) {
            const Quaternion& q = m(i, j);
            const std::complex<double> a1{q.w, q.x};
            const std::complex<double> a2{q.y, q.z};
            out(i, j) = a1;
            out(i, c + j) = a2;
            out(n + i, j) = -std::conj(a2);
            out(n + i, c + j) = std::conj(a1);
        }
    return out;
}

QMatrix psi(const CMatrix& y) {
    if (y.rows() % 2 != 0 || y.cols() % 2 != 0)
        throw std::invalid_argument("psi requires even dimensions");
    const int n = y.rows() / 2, m = y.cols() / 2;
    QMatrix out(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const std::complex<double> p1 = (y(i, j) + std::conj(y(n + i, m + j))) / 2.0;
            const std::complex<double> p2 = (y(i, m + j) - std::conj(y(n + i, j))) / 2.0;
            out(i, j) = Quaternion{p1.real(), p1.imag(), p2.real(), p2.imag()};
        }
    return out;
}

QMatrix jordan_block(int n, const Quaternion& alpha) {
    if (n < 1) throw std::invalid_argument("jordan_block: size must be positive");
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = alpha;
        if (i + 1 < n) m(i + 1, i) = Quaternion{1};
    }
    return m;
}

QMatrix chain_matrix(std::span<const Quaternion> elems, Orientation orientation) {
    const int n = static_cast<int>(elems.size());
    if (n < 1) throw std::invalid_argument("chain_matrix: empty chain");
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = elems[i];
        if (i + 1 < n) m(i + 1, i) = Quaternion{1};
    }
    return orientation == Orientation::lower ? m : transpose(m);
}

std::vector<Quaternion> right_spectrum_triangular(const QMatrix& a, double tol) {
    if (!is_lower_triangular(a) && !is_upper_triangular(a))
        throw std::invalid_argument("right_spectrum_triangular: matrix is not triangular");
    std::vector<Quaternion> reps;
    for (int i = 0; i < a.rows(); ++i) {
        const Quaternion rep = class_representative(a(i, i));
        bool seen = false;
        for (const Quaternion& r : reps)
            if (similar(r, rep, tol)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(rep);
    }
    return reps;
}

// uniqueness_check lives in oracle.cpp next to the real-lift rank machinery.

} // namespace quatsylv
