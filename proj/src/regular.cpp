#include "quatsylv/regular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "quatsylv/errors.hpp"
#include "quatsylv/singular.hpp"

namespace quatsylv {

namespace {

// Minimal polynomial of the class [alpha] without the non-real guard of
// char_poly: for real alpha this is (z - alpha)^2, which still vanishes
// exactly on [alpha] = {alpha}, so the row solvers stay valid.
QPoly class_poly(const Quaternion& alpha) {
    return QPoly{{Quaternion{abs_sq(alpha)}, Quaternion{-2.0 * re(alpha)}, Quaternion{1}}};
}

long long binom(int n, int k) {
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

// Coefficients a_0..a_N of det(lambda I - M) for a complex N x N matrix,
// by the Faddeev-LeVerrier recurrence. For M = phi(A) they are real.
std::vector<double> char_coeffs(const CMatrix& m) {
    const int n = m.rows();
    std::vector<std::complex<double>> c(n + 1);
    c[n] = 1.0;
    CMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        std::complex<double> tr = 0.0;
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        const std::complex<double> ck = -tr / static_cast<double>(k);
        c[n - k] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) mk(i, i) += ck;
            mk = m * mk;
        }
    }
    std::vector<double> out(n + 1);
    for (int i = 0; i <= n; ++i) out[i] = c[i].real();
    return out;
}

// Dense complex linear solve, LU with partial pivoting; w is the augmented
// [G | rhs] system of width n+1, destroyed in place.
std::vector<std::complex<double>> complex_solve(std::vector<std::complex<double>>& w, int n,
                                                double tol) {
    const auto at = [&](int r, int c) -> std::complex<double>& {
        return w[static_cast<size_t>(r) * (n + 1) + c];
    };
    double row_scale = 0.0;
    for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int c = 0; c < n; ++c) s += std::norm(at(r, c));
        row_scale = std::max(row_scale, std::sqrt(s));
    }
    const double thresh = tol * (1.0 + row_scale);
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(at(r, c)) > std::abs(at(p, c))) p = r;
        if (std::abs(at(p, c)) <= thresh)
            throw SingularCaseError("lifted Sylvester operator is singular at tolerance");
        if (p != c)
            for (int j = 0; j <= n; ++j) std::swap(at(c, j), at(p, j));
        const std::complex<double> piv = at(c, c);
        for (int j = c; j <= n; ++j) at(c, j) /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const std::complex<double> f = at(r, c);
            if (f == std::complex<double>{}) continue;
            for (int j = c; j <= n; ++j) at(r, j) -= f * at(c, j);
        }
    }
    std::vector<std::complex<double>> x(n);
    for (int r = 0; r < n; ++r) x[r] = at(r, n);
    return x;
}

void require_shapes(const QMatrix& a, const QMatrix& b, const QMatrix& c) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("A and B must be square");
    if (c.rows() != a.rows() || c.cols() != b.rows())
        throw std::invalid_argument("C must be A.rows x B.rows");
}

// Two-diagonal shape with unit subdiagonal (J_alpha); returns the diagonal.
std::optional<std::vector<Quaternion>> lower_two_diagonal_of(const QMatrix& a) {
    const int n = a.rows();
    if (n != a.cols()) return std::nullopt;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i == j + 1) {
                if (!(a(i, j) == Quaternion{1})) return std::nullopt;
            } else if (!(a(i, j) == Quaternion{})) {
                return std::nullopt;
            }
        }
    std::vector<Quaternion> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i);
    return diag;
}

std::optional<std::vector<Quaternion>> upper_two_diagonal_of(const QMatrix& b) {
    return lower_two_diagonal_of(transpose(b));
}

bool constant_diag(const std::vector<Quaternion>& d) {
    for (const Quaternion& q : d)
        if (!(q == d.front())) return false;
    return true;
}

std::optional<SphericalChain> try_chain(const std::vector<Quaternion>& elems, double tol) {
    try {
        return SphericalChain{elems, tol};
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

} // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::lift: return "lift";
        case Method::poly_formula: return "poly_formula";
        case Method::jordan: return "jordan";
        case Method::two_diagonal: return "two_diagonal";
        case Method::rows_lower_tri: return "rows_lower_tri";
        case Method::cols_upper_tri: return "cols_upper_tri";
        case Method::singular: return "singular";
    }
    return "?";
}

QMatrix solve_lift(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol) {
    require_shapes(a, b, c);
    const CMatrix fa = phi(a), fb = phi(b), fc = phi(c);
    const int rows = fa.rows(), cols = fb.rows();
    const int dim = rows * cols;

    // phi(A) Y - Y phi(B) = phi(C) as a dense system over the row-major vec of Y
    std::vector<std::complex<double>> w(static_cast<size_t>(dim) * (dim + 1));
    const auto at = [&](int r, int cc) -> std::complex<double>& {
        return w[static_cast<size_t>(r) * (dim + 1) + cc];
    };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int r = i * cols + j;
            for (int k = 0; k < rows; ++k) at(r, k * cols + j) += fa(i, k);
            for (int k = 0; k < cols; ++k) at(r, i * cols + k) -= fb(k, j);
            at(r, dim) = fc(i, j);
        }

    const std::vector<std::complex<double>> y = complex_solve(w, dim, tol);
    CMatrix ym(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) ym(i, j) = y[static_cast<size_t>(i) * cols + j];
    return psi(ym);
}

QMatrix solve_poly_formula(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol) {
    require_shapes(a, b, c);
    const int n = a.rows(), m = b.rows();
    const std::vector<double> coef = char_coeffs(phi(a)); // a_0..a_{2n}

    std::vector<QMatrix> apow, bpow;
    apow.reserve(2 * n);
    bpow.reserve(2 * n + 1);
    apow.push_back(QMatrix::identity(n));
    bpow.push_back(QMatrix::identity(m));
    for (int j = 1; j <= 2 * n; ++j) bpow.push_back(bpow.back() * b);
    for (int j = 1; j <= 2 * n - 1; ++j) apow.push_back(apow.back() * a);

    QMatrix num(n, m);
    for (int k = 1; k <= 2 * n; ++k) {
        if (coef[k] == 0.0) continue;
        QMatrix inner(n, m);
        for (int j = 0; j < k; ++j) inner += apow[j] * c * bpow[k - j - 1];
        num += Quaternion{coef[k]} * inner;
    }
    QMatrix den(m, m);
    for (int j = 0; j <= 2 * n; ++j) den += Quaternion{coef[j]} * bpow[j];

    QMatrix den_inv;
    try {
        den_inv = inverse(den, tol);
    } catch (const SingularCaseError&) {
        throw SingularCaseError("characteristic value of B is singular: spectra overlap");
    }
    return -(num * den_inv);
}

QMatrix solve_jordan(const Quaternion& alpha, int n, const Quaternion& beta, int m,
                     const QMatrix& c, double tol) {
    if (n < 1 || m < 1) throw std::invalid_argument("solve_jordan: block sizes must be positive");
    if (c.rows() != n || c.cols() != m) throw std::invalid_argument("solve_jordan: C shape mismatch");
    const Quaternion p = scalar_resolvent(alpha, beta);
    const double p_scale = 1.0 + abs_sq(alpha) + abs_sq(beta);
    if (similar(alpha, beta, tol) || abs(p) <= tol * p_scale)
        throw SingularCaseError("solve_jordan: alpha ~ beta, the instance is singular");

    const Quaternion p_inv = inv(p);
    if (n == 1 && m == 1) {
        // the scalar closed form, same arithmetic path as the general theorem
        QMatrix x(1, 1);
        x(0, 0) = (conj(alpha) * c(0, 0) - c(0, 0) * beta) * p_inv;
        return x;
    }

    QMatrix fn(n, n), fmt(m, m); // subdiagonal and superdiagonal shifts
    for (int i = 0; i + 1 < n; ++i) fn(i + 1, i) = Quaternion{1};
    for (int i = 0; i + 1 < m; ++i) fmt(i, i + 1) = Quaternion{1};

    std::vector<QMatrix> fn_pow{QMatrix::identity(n)}, fmt_pow{QMatrix::identity(m)};
    for (int t = 1; t <= n + m - 2; ++t) {
        fn_pow.push_back(fn_pow.back() * fn);
        fmt_pow.push_back(fmt_pow.back() * fmt);
    }

    const Quaternion ac = conj(alpha);
    std::vector<Quaternion> ac_pow{Quaternion{1}}, beta_pow{Quaternion{1}};
    for (int t = 1; t <= n + m; ++t) {
        ac_pow.push_back(ac_pow.back() * ac);
        beta_pow.push_back(beta_pow.back() * beta);
    }

    QMatrix x(n, m);
    Quaternion p_inv_pow = p_inv;
    for (int k = 0; k <= n + m - 2; ++k) {
        QMatrix mk(n, m);
        for (int l = 0; l <= k; ++l) {
            const double s = ((l % 2) ? -1.0 : 1.0) * static_cast<double>(binom(k, l));
            if (k - l >= n || l >= m) continue; // shift powers vanish
            mk += Quaternion{s} * (fn_pow[k - l] * c * fmt_pow[l]);
        }
        QMatrix inner(n, m);
        for (int i = 0; i <= k + 1; ++i) {
            const double s = (((k + i) % 2) ? -1.0 : 1.0) * static_cast<double>(binom(k + 1, i));
            inner += Quaternion{s} * (ac_pow[k - i + 1] * mk * beta_pow[i]);
        }
        x += inner * p_inv_pow;
        p_inv_pow = p_inv_pow * p_inv;
    }
    return x;
}

QMatrix solve_two_diagonal(const SphericalChain& alpha, const QMatrix& b, const QMatrix& c,
                           double tol) {
    const int n = alpha.size(), m = b.rows();
    if (b.rows() != b.cols()) throw std::invalid_argument("solve_two_diagonal: B must be square");
    if (c.rows() != n || c.cols() != m)
        throw std::invalid_argument("solve_two_diagonal: C shape mismatch");

    // companion matrices of the chain: conjugated diagonal with -1 subdiagonal,
    // and the nilpotent remainder of A'A = |alpha|^2 I - A~
    QMatrix aprime(n, n), atilde(n, n);
    for (int i = 0; i < n; ++i) {
        aprime(i, i) = conj(alpha[i]);
        if (i + 1 < n) {
            aprime(i + 1, i) = Quaternion{-1};
            atilde(i + 1, i) = alpha[i] - conj(alpha[i + 1]);
        }
        if (i + 2 < n) atilde(i + 2, i) = Quaternion{1};
    }

    QMatrix xv_inv;
    try {
        xv_inv = inverse(eval_right(class_poly(alpha[0]), b), tol);
    } catch (const SingularCaseError&) {
        throw SingularCaseError("solve_two_diagonal: the chain class meets the right spectrum of B");
    }

    const QMatrix g = aprime * c - c * b;
    QMatrix x(n, m);
    QMatrix at_pow = QMatrix::identity(n);
    QMatrix r = xv_inv;
    for (int k = 0; k < n; ++k) {
        x += at_pow * g * r;
        if (k + 1 < n) {
            at_pow = at_pow * atilde;
            r = r * xv_inv;
        }
    }
    return x;
}

QMatrix solve_rows_two_diagonal(std::span<const Quaternion> alpha, const QMatrix& b,
                                const QMatrix& c, double tol) {
    const int n = static_cast<int>(alpha.size()), m = b.rows();
    if (b.rows() != b.cols())
        throw std::invalid_argument("solve_rows_two_diagonal: B must be square");
    if (c.rows() != n || c.cols() != m)
        throw std::invalid_argument("solve_rows_two_diagonal: C shape mismatch");

    // single-class chains share one characteristic value of B; detect the
    // exactly-constant class data and fall back to powers of one inverse
    bool one_class = true;
    for (const Quaternion& q : alpha)
        if (re(q) != re(alpha[0]) || abs_sq(q) != abs_sq(alpha[0])) {
            one_class = false;
            break;
        }

    std::vector<QMatrix> xinv(n);
    try {
        if (one_class) {
            const QMatrix shared = inverse(eval_right(class_poly(alpha[0]), b), tol);
            for (int k = 0; k < n; ++k) xinv[k] = shared;
        } else {
            for (int k = 0; k < n; ++k)
                xinv[k] = inverse(eval_right(class_poly(alpha[k]), b), tol);
        }
    } catch (const SingularCaseError&) {
        throw SingularCaseError(
            "solve_rows_two_diagonal: a diagonal class meets the right spectrum of B");
    }

    QMatrix x(n, m);
    for (int k = 0; k < n; ++k) {
        QMatrix acc(1, m);
        QPoly h = QPoly::constant(Quaternion{1});
        for (int j = k; j >= 0; --j) {
            h = h * rho(conj(alpha[j])); // rho_{conj a_k} rho_{conj a_{k-1}} ... rho_{conj a_j}
            QMatrix prod = xinv[j];
            for (int i = j + 1; i <= k; ++i) prod = prod * xinv[i];
            acc += (h * c.row(j)).eval_right(b) * prod;
        }
        const QMatrix xr = -acc;
        for (int j = 0; j < m; ++j) x(k, j) = xr(0, j);
    }
    return x;
}

QMatrix solve_rows_two_diagonal(const SphericalChain& alpha, const QMatrix& b, const QMatrix& c,
                                double tol) {
    return solve_rows_two_diagonal(alpha.elems(), b, c, tol);
}

QMatrix solve_lower_triangular(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol) {
    require_shapes(a, b, c);
    if (!is_lower_triangular(a))
        throw std::invalid_argument("solve_lower_triangular: A is not lower triangular");
    const int n = a.rows(), m = b.rows();

    QMatrix x(n, m);
    for (int k = 0; k < n; ++k) {
        QMatrix xinv;
        try {
            xinv = inverse(eval_right(class_poly(a(k, k)), b), tol);
        } catch (const SingularCaseError&) {
            throw SingularCaseError(
                "solve_lower_triangular: a diagonal class meets the right spectrum of B");
        }
        QMatrix rhs = -c.row(k);
        for (int j = 0; j < k; ++j) rhs += a(k, j) * x.row(j);
        const QMatrix xr = (rho(conj(a(k, k))) * rhs).eval_right(b) * xinv;
        for (int j = 0; j < m; ++j) x(k, j) = xr(0, j);
    }
    return x;
}

QMatrix solve_upper_triangular_cols(const QMatrix& a, const QMatrix& b, const QMatrix& c,
                                    double tol) {
    require_shapes(a, b, c);
    if (!is_upper_triangular(b))
        throw std::invalid_argument("solve_upper_triangular_cols: B is not upper triangular");
    // adjoint route: B* X* - X* A* = -C* with B* lower triangular
    const QMatrix xt = solve_lower_triangular(adjoint(b), adjoint(a), -adjoint(c), tol);
    return adjoint(xt);
}

RegularSolveReport solve(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol) {
    require_shapes(a, b, c);

    const auto a_diag = lower_two_diagonal_of(a);
    const auto b_diag = upper_two_diagonal_of(b);

    const auto finish = [&](QMatrix x, Method method) {
        RegularSolveReport rep;
        rep.residual = fnorm(a * x - x * b - c);
        rep.x = std::move(x);
        rep.method = method;
        return rep;
    };

    // singular escape hatch: both sides two-diagonal chain matrices in one class
    const auto try_singular = [&]() -> std::optional<RegularSolveReport> {
        if (!a_diag || !b_diag) return std::nullopt;
        const auto alpha = try_chain(*a_diag, tol);
        const auto beta = try_chain(*b_diag, tol);
        if (!alpha || !beta) return std::nullopt;
        if (!similar(alpha->front(), beta->front(), tol)) return std::nullopt;
        try {
            const SingularInstance inst = SingularInstance::make(*alpha, *beta, c, tol);
            return finish(particular_solution(inst), Method::singular); // NoSolutionError propagates
        } catch (const std::domain_error&) {
            return std::nullopt; // chains do not share one class at tolerance
        }
    };

    if (a_diag && b_diag && constant_diag(*a_diag) && constant_diag(*b_diag)) {
        const Quaternion alpha = a_diag->front(), beta = b_diag->front();
        if (!similar(alpha, beta, tol) &&
            abs(scalar_resolvent(alpha, beta)) > tol * (1.0 + abs_sq(alpha) + abs_sq(beta)))
            return finish(solve_jordan(alpha, a.rows(), beta, b.rows(), c, tol), Method::jordan);
        if (auto rep = try_singular()) return *rep;
        throw UnsupportedShapeError(
            "singular instance outside the supported two-diagonal chain shape");
    }

    if (a_diag) {
        try {
            if (const auto alpha = try_chain(*a_diag, tol))
                return finish(solve_two_diagonal(*alpha, b, c, tol), Method::two_diagonal);
            return finish(solve_rows_two_diagonal(*a_diag, b, c, tol), Method::rows_lower_tri);
        } catch (const SingularCaseError&) {
            if (auto rep = try_singular()) return *rep;
            throw UnsupportedShapeError(
                "singular instance outside the supported two-diagonal chain shape");
        }
    }

    if (is_lower_triangular(a)) {
        try {
            return finish(solve_lower_triangular(a, b, c, tol), Method::rows_lower_tri);
        } catch (const SingularCaseError&) {
            throw UnsupportedShapeError(
                "singular instance outside the supported two-diagonal chain shape");
        }
    }

    if (is_upper_triangular(b)) {
        try {
            return finish(solve_upper_triangular_cols(a, b, c, tol), Method::cols_upper_tri);
        } catch (const SingularCaseError&) {
            throw UnsupportedShapeError(
                "singular instance outside the supported two-diagonal chain shape");
        }
    }

    try {
        return finish(solve_lift(a, b, c, tol), Method::lift);
    } catch (const SingularCaseError&) {
        if (auto rep = try_singular()) return *rep;
        throw UnsupportedShapeError("singular instance outside the supported two-diagonal chain shape");
    }
}

} // namespace quatsylv
