#include "quatsylv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quatsylv {

namespace {

constexpr Quaternion kBasis[4] = {Quaternion{1}, Quaternion::unit_i(), Quaternion::unit_j(),
                                  Quaternion::unit_k()};

// 4x4 real matrix of q -> a*q, columns from products with the basis.
void add_left_block(RealLift& lift, int r, int c, const Quaternion& a, double sign) {
    for (int col = 0; col < 4; ++col) {
        const Quaternion prod = a * kBasis[col];
        const auto comps = prod.components();
        for (int row = 0; row < 4; ++row) lift.at(r + row, c + col) += sign * comps[row];
    }
}

// 4x4 real matrix of q -> q*b.
void add_right_block(RealLift& lift, int r, int c, const Quaternion& b, double sign) {
    for (int col = 0; col < 4; ++col) {
        const Quaternion prod = kBasis[col] * b;
        const auto comps = prod.components();
        for (int row = 0; row < 4; ++row) lift.at(r + row, c + col) += sign * comps[row];
    }
}

struct Echelon {
    std::vector<double> w;           // reduced augmented matrix, row-major, width dim+1
    std::vector<int> pivot_col;      // pivot column of each pivot row
    std::vector<char> col_is_pivot;  // per column
    int dim = 0;
    int rank = 0;
    double thresh = 0.0;

    double& at(int r, int c) { return w[static_cast<size_t>(r) * (dim + 1) + c]; }
    double at(int r, int c) const { return w[static_cast<size_t>(r) * (dim + 1) + c]; }
};

// Row echelon form of [L | rhs] with partial pivoting; pivots below
// tol * (1 + max initial row norm) count as zero.
Echelon eliminate(const RealLift& lift, const std::vector<double>& rhs, double tol) {
    Echelon e;
    const int dim = lift.dim();
    e.dim = dim;
    e.w.assign(static_cast<size_t>(dim) * (dim + 1), 0.0);
    e.col_is_pivot.assign(dim, 0);
    double row_scale = 0.0;
    for (int r = 0; r < dim; ++r) {
        double s = 0.0;
        for (int c = 0; c < dim; ++c) {
            e.at(r, c) = lift.at(r, c);
            s += lift.at(r, c) * lift.at(r, c);
        }
        e.at(r, dim) = rhs.empty() ? 0.0 : rhs[r];
        row_scale = std::max(row_scale, std::sqrt(s));
    }
    e.thresh = tol * (1.0 + row_scale);

    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
        int p = row;
        for (int r = row + 1; r < dim; ++r)
            if (std::abs(e.at(r, col)) > std::abs(e.at(p, col))) p = r;
        if (std::abs(e.at(p, col)) <= e.thresh) continue; // free column
        if (p != row)
            for (int c = 0; c <= dim; ++c) std::swap(e.at(row, c), e.at(p, c));
        const double piv = e.at(row, col);
        for (int c = col; c <= dim; ++c) e.at(row, c) /= piv;
        for (int r = 0; r < dim; ++r) {
            if (r == row) continue;
            const double f = e.at(r, col);
            if (f == 0.0) continue;
            for (int c = col; c <= dim; ++c) e.at(r, c) -= f * e.at(row, c);
        }
        e.pivot_col.push_back(col);
        e.col_is_pivot[col] = 1;
        ++row;
    }
    e.rank = row;
    return e;
}

std::vector<double> particular_from(const Echelon& e) {
    // free variables zero, pivot variables read off the reduced rows
    std::vector<double> x(e.dim, 0.0);
    for (int r = 0; r < e.rank; ++r) x[e.pivot_col[r]] = e.at(r, e.dim);
    return x;
}

std::vector<std::vector<double>> nullspace_from(const Echelon& e) {
    std::vector<std::vector<double>> basis;
    for (int col = 0; col < e.dim; ++col) {
        if (e.col_is_pivot[col]) continue;
        std::vector<double> v(e.dim, 0.0);
        v[col] = 1.0;
        for (int r = 0; r < e.rank; ++r) v[e.pivot_col[r]] = -e.at(r, col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Remove the nullspace component of x: solve (N^T N) t = N^T x and subtract N t.
void project_to_min_norm(std::vector<double>& x, const std::vector<std::vector<double>>& basis) {
    const int k = static_cast<int>(basis.size());
    if (k == 0) return;
    std::vector<double> g(static_cast<size_t>(k) * k, 0.0), b(k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (size_t t = 0; t < x.size(); ++t) s += basis[i][t] * basis[j][t];
            g[static_cast<size_t>(i) * k + j] = s;
        }
        double s = 0.0;
        for (size_t t = 0; t < x.size(); ++t) s += basis[i][t] * x[t];
        b[i] = s;
    }
    // small SPD system; plain Gaussian elimination is plenty
    for (int c = 0; c < k; ++c) {
        int p = c;
        for (int r = c + 1; r < k; ++r)
            if (std::abs(g[static_cast<size_t>(r) * k + c]) > std::abs(g[static_cast<size_t>(p) * k + c]))
                p = r;
        if (p != c) {
            for (int j = 0; j < k; ++j)
                std::swap(g[static_cast<size_t>(c) * k + j], g[static_cast<size_t>(p) * k + j]);
            std::swap(b[c], b[p]);
        }
        const double piv = g[static_cast<size_t>(c) * k + c];
        for (int r = 0; r < k; ++r) {
            if (r == c) continue;
            const double f = g[static_cast<size_t>(r) * k + c] / piv;
            for (int j = c; j < k; ++j)
                g[static_cast<size_t>(r) * k + j] -= f * g[static_cast<size_t>(c) * k + j];
            b[r] -= f * b[c];
        }
    }
    for (int i = 0; i < k; ++i) {
        const double t = b[i] / g[static_cast<size_t>(i) * k + i];
        for (size_t j = 0; j < x.size(); ++j) x[j] -= t * basis[i][j];
    }
}

} // namespace

RealLift build_lift(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("build_lift: A and B must be square");
    const int n = a.rows(), m = b.rows();
    RealLift lift;
    lift.n = n;
    lift.m = m;
    lift.l.assign(static_cast<size_t>(4 * n * m) * (4 * n * m), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int r = 4 * (i * m + j);
            for (int k = 0; k < n; ++k) add_left_block(lift, r, 4 * (k * m + j), a(i, k), +1.0);
            for (int k = 0; k < m; ++k) add_right_block(lift, r, 4 * (i * m + k), b(k, j), -1.0);
        }
    return lift;
}

std::vector<double> vec(const QMatrix& x) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(4) * x.rows() * x.cols());
    for (const Quaternion& q : x.entries()) {
        out.push_back(q.w);
        out.push_back(q.x);
        out.push_back(q.y);
        out.push_back(q.z);
    }
    return out;
}

QMatrix unvec(const std::vector<double>& v, int n, int m) {
    if (v.size() != static_cast<size_t>(4) * n * m) throw std::invalid_argument("unvec: bad length");
    QMatrix x(n, m);
    size_t t = 0;
    for (Quaternion& q : x.entries()) {
        q = Quaternion{v[t], v[t + 1], v[t + 2], v[t + 3]};
        t += 4;
    }
    return x;
}

int lift_rank(const RealLift& lift, double tol) { return eliminate(lift, {}, tol).rank; }

OracleResult oracle_solve(const QMatrix& a, const QMatrix& b, const QMatrix& c, double tol) {
    const int n = a.rows(), m = b.rows();
    if (c.rows() != n || c.cols() != m) throw std::invalid_argument("oracle_solve: C shape mismatch");
    const RealLift lift = build_lift(a, b);
    const std::vector<double> rhs = vec(c);
    const Echelon e = eliminate(lift, rhs, tol);

    OracleResult out;
    out.rank = e.rank;

    // consistency: a zero row of L with nonzero reduced rhs kills existence
    double rhs_scale = 0.0;
    for (double v : rhs) rhs_scale = std::max(rhs_scale, std::abs(v));
    for (int r = e.rank; r < e.dim; ++r) {
        // rows below the rank have zero L-part by construction of the echelon form
        double drop = 0.0;
        for (int cc = 0; cc < e.dim; ++cc) drop = std::max(drop, std::abs(e.at(r, cc)));
        if (drop <= e.thresh && std::abs(e.at(r, e.dim)) > tol * (1.0 + rhs_scale)) {
            out.verdict = OracleVerdict::none;
            return out;
        }
    }

    std::vector<double> x = particular_from(e);
    if (e.rank == e.dim) {
        out.verdict = OracleVerdict::unique;
        out.x0 = unvec(x, n, m);
        return out;
    }

    auto basis = nullspace_from(e);
    project_to_min_norm(x, basis);
    out.verdict = OracleVerdict::affine;
    out.x0 = unvec(x, n, m);
    out.nullspace.reserve(basis.size());
    for (const auto& v : basis) out.nullspace.push_back(unvec(v, n, m));
    return out;
}

bool uniqueness_check(const QMatrix& a, const QMatrix& b, double tol) {
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw std::invalid_argument("uniqueness_check: A and B must be square");
    const RealLift lift = build_lift(a, b);
    return lift_rank(lift, tol) == lift.dim();
}

} // namespace quatsylv
