#include "quatsylv/singular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quatsylv/errors.hpp"

namespace quatsylv {

namespace {

// d_{i,j} = c_{i,j} b_j - conj(a_i) c_{i,j} + c_{i,j-1} + c_{i-1,j}, 1-based,
// with c read as zero outside its stored rows (the chain may be longer than C).
struct DTable {
    int rows = 0, cols = 0;
    std::vector<Quaternion> v;

    Quaternion get(int i, int j) const {
        if (i < 1 || j < 1 || i > rows || j > cols) return {};
        return v[static_cast<size_t>(i - 1) * cols + (j - 1)];
    }
};

DTable build_d_table(std::span<const Quaternion> alpha, std::span<const Quaternion> beta,
                     const QMatrix& c, int rows) {
    const int m = static_cast<int>(beta.size());
    const auto centry = [&](int i, int j) -> Quaternion {
        if (i < 1 || j < 1 || i > c.rows() || j > c.cols()) return {};
        return c(i - 1, j - 1);
    };
    DTable d;
    d.rows = rows;
    d.cols = m;
    d.v.resize(static_cast<size_t>(rows) * m);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= m; ++j)
            d.v[static_cast<size_t>(i - 1) * m + (j - 1)] =
                centry(i, j) * beta[j - 1] - conj(alpha[i - 1]) * centry(i, j) +
                centry(i, j - 1) + centry(i - 1, j);
    return d;
}

// The double recursion, counter-diagonal by counter-diagonal. Within one
// counter-diagonal k+j = s the entry (k, j) needs (k+1, j-1) from the same
// diagonal, so k runs from s-1 down to 1.
GammaTable run_gamma(std::span<const Quaternion> alpha, std::span<const Quaternion> beta,
                     const DTable& d, int max_sum) {
    const int m = static_cast<int>(beta.size());
    GammaTable g(max_sum, m);
    for (int s = 2; s <= max_sum; ++s) {
        for (int k = s - 1; k >= 1; --k) {
            const int j = s - k;
            if (j > m) continue;
            const Quaternion den = alpha[k - 1] - conj(alpha[k]);
            const Quaternion beta_prev = j >= 2 ? beta[j - 2] : Quaternion{};
            const Quaternion val = d.get(k + 1, j) + g.get(k + 1, j - 2) - g.get(k - 1, j) -
                                   g.get(k + 1, j - 1) * (conj(beta[j - 1]) - beta_prev);
            g.set(k, j, inv(den) * val);
        }
    }
    return g;
}

std::vector<Quaternion> obstructions_from(std::span<const Quaternion> beta, const DTable& d,
                                          const GammaTable& g) {
    const int m = static_cast<int>(beta.size());
    std::vector<Quaternion> s(m);
    for (int j = 1; j <= m; ++j) {
        const Quaternion beta_prev = j >= 2 ? beta[j - 2] : Quaternion{};
        s[j - 1] = d.get(1, j) + g.get(1, j - 1) * (beta_prev - conj(beta[j - 1])) + g.get(1, j - 2);
    }
    return s;
}

std::vector<Quaternion> extended_alpha(const SphericalChain& alpha, int extra) {
    std::vector<Quaternion> ext(alpha.elems().begin(), alpha.elems().end());
    ext.insert(ext.end(), extra, alpha.back());
    return ext;
}

std::vector<double> norms_of(std::span<const Quaternion> qs) {
    std::vector<double> out;
    out.reserve(qs.size());
    for (const Quaternion& q : qs) out.push_back(abs(q));
    return out;
}

} // namespace

GammaTable::GammaTable(int max_sum, int max_j) : max_sum_(max_sum), max_j_(max_j) {
    if (max_sum_ >= 2 && max_j_ >= 1)
        v_.assign(static_cast<size_t>(max_sum_ - 1) * max_j_, Quaternion{});
}

Quaternion GammaTable::get(int k, int j) const {
    if (k < 1 || j < 1 || j > max_j_ || k + j > max_sum_) return {};
    return v_[static_cast<size_t>(k - 1) * max_j_ + (j - 1)];
}

void GammaTable::set(int k, int j, const Quaternion& v) {
    v_[static_cast<size_t>(k - 1) * max_j_ + (j - 1)] = v;
}

SingularInstance SingularInstance::make(const SphericalChain& alpha, const SphericalChain& beta,
                                        const QMatrix& c, double tol) {
    if (c.rows() != alpha.size() || c.cols() != beta.size())
        throw std::invalid_argument("singular instance: C must be len(alpha) x len(beta)");
    for (int j = 0; j < beta.size(); ++j)
        if (!similar(alpha.front(), beta[j], tol))
            throw std::domain_error("singular instance: chains are not in one conjugacy class (beta " +
                                    std::to_string(j + 1) + ")");

    SingularInstance inst{alpha, beta, c, tol, false};
    if (beta.size() > alpha.size()) {
        // adjoint reduction: B* X* - X* A* = -C* swaps the roles with
        // conjugated chains in original order
        inst.alpha = beta.conjugated();
        inst.beta = alpha.conjugated();
        inst.c = -adjoint(c);
        inst.adjointed = true;
    }
    return inst;
}

QMatrix build_D(const SingularInstance& inst) {
    const int n = inst.alpha.size(), m = inst.beta.size();
    const DTable d = build_d_table(inst.alpha.elems(), inst.beta.elems(), inst.c, n);
    QMatrix out(n, m);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) out(i - 1, j - 1) = d.get(i, j);
    return out;
}

GammaTable gamma_table(const SingularInstance& inst, const QMatrix& d, int max_sum) {
    const int n = inst.alpha.size(), m = inst.beta.size();
    if (max_sum <= n) {
        DTable dt;
        dt.rows = d.rows();
        dt.cols = d.cols();
        dt.v.assign(d.entries().begin(), d.entries().end());
        return run_gamma(inst.alpha.elems(), inst.beta.elems(), dt, max_sum);
    }
    // beyond n the chain is extended by repeating its last element and C by
    // zero rows; the d rows above n depend only on the last row of C
    const std::vector<Quaternion> ext = extended_alpha(inst.alpha, m);
    const DTable dt = build_d_table(ext, inst.beta.elems(), inst.c, std::min(max_sum, n + m));
    return run_gamma(ext, inst.beta.elems(), dt, max_sum);
}

SingularAnalysis analyze(const SingularInstance& inst) {
    const int n = inst.alpha.size();
    SingularAnalysis out;
    out.d = build_D(inst);
    out.gamma = gamma_table(inst, out.d, n);

    DTable dt;
    dt.rows = out.d.rows();
    dt.cols = out.d.cols();
    dt.v.assign(out.d.entries().begin(), out.d.entries().end());
    out.s = obstructions_from(inst.beta.elems(), dt, out.gamma);

    out.max_obstruction = 0.0;
    for (const Quaternion& q : out.s) out.max_obstruction = std::max(out.max_obstruction, abs(q));
    out.solvable = out.max_obstruction <= inst.tol * (1.0 + fnorm(inst.c));
    return out;
}

QMatrix particular_solution(const SingularInstance& inst) {
    const SingularAnalysis an = analyze(inst);
    if (!an.solvable)
        throw NoSolutionError("singular Sylvester equation has no solution", norms_of(an.s));

    const int n = inst.alpha.size(), m = inst.beta.size();
    const GammaTable g = gamma_table(inst, an.d, n + m);
    QMatrix x(n, m);
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= m; ++j) x(k - 1, j - 1) = g.get(k, j);
    return inst.adjointed ? adjoint(x) : x;
}

JordanSolvability jordan_solvability(const Quaternion& alpha, const Quaternion& beta,
                                     const QMatrix& c, int n, int m, double tol) {
    if (n < 1 || m < 1 || m > n)
        throw std::invalid_argument("jordan_solvability: requires 1 <= m <= n");
    if (c.rows() != n || c.cols() != m)
        throw std::invalid_argument("jordan_solvability: C shape mismatch");
    if (!similar(alpha, beta, tol))
        throw std::domain_error("jordan_solvability: alpha !~ beta, the instance is regular");
    if (is_real(alpha, tol))
        throw std::domain_error("jordan_solvability: degenerate (real) conjugacy class");

    const std::vector<Quaternion> av(n, alpha), bv(m, beta);
    const DTable d = build_d_table(av, bv, c, n);
    const Quaternion ia = im(alpha), ib = im(beta);

    JordanSolvability out;
    out.obstructions.resize(m);
    for (int j = 1; j <= m; ++j) {
        Quaternion s;
        for (int l = 0; 2 * l <= j; ++l) s += ia * d.get(2 * l + 1, j - 2 * l);
        for (int l = 1; 2 * l <= j; ++l) s += d.get(2 * l, j - 2 * l + 1) * ib;
        out.obstructions[j - 1] = s;
    }
    double worst = 0.0;
    for (const Quaternion& q : out.obstructions) worst = std::max(worst, abs(q));
    out.solvable = worst <= tol * (1.0 + fnorm(c)) * (1.0 + abs(ia));
    return out;
}

QMatrix homogeneous_from_params(const SphericalChain& alpha, const SphericalChain& beta,
                                const NullBasisParam& mu, double tol) {
    const int n = alpha.size(), m = beta.size();
    if (m > n)
        throw std::invalid_argument("homogeneous_from_params: requires n >= m (use solve_all)");
    if (static_cast<int>(mu.mu.size()) != m)
        throw std::invalid_argument("homogeneous_from_params: expected one parameter per column");

    // parameters must sit on their planes; project small drift, reject the rest
    std::vector<Quaternion> params(mu.mu.begin(), mu.mu.end());
    for (int j = 0; j < m; ++j) {
        const Plane plane = plane_of(alpha.back(), beta[j], tol);
        if (plane.distance(params[j]) > tol * (1.0 + abs(params[j])))
            throw std::domain_error("homogeneous parameter " + std::to_string(j + 1) +
                                    " is not in its plane");
        params[j] = plane.project(params[j]);
    }

    QMatrix y(n, m);
    const auto get = [&](int k, int j) -> Quaternion {
        if (k < 1 || k > n || j < 1 || j > m) return {};
        return y(k - 1, j - 1);
    };

    // counter-diagonals k + j = s, s = n+1 .. n+m: bottom entry first
    // (given parameter, then ordered-product corrections), then climb
    for (int s = n + 1; s <= n + m; ++s) {
        const int t = s - n;
        if (t == 1) {
            y(n - 1, 0) = params[0];
        } else {
            const int j = t - 1;
            Quaternion acc = params[t - 1];
            Quaternion prod{1};
            for (int l = 1; l <= j; ++l) {
                prod = prod * inv(conj(alpha[n - l]) - alpha[n - l - 1]);
                acc -= prod * get(n - l + 1, j);
            }
            y(n - 1, t - 1) = acc;
        }
        for (int k = n - 1; k >= 1; --k) {
            const int j = s - k;
            if (j < 2 || j > m) continue;
            const Quaternion den = conj(alpha[k]) - alpha[k - 1];
            const Quaternion val =
                get(k + 1, j - 1) * (conj(beta[j - 1]) - beta[j - 2]) - get(k + 1, j - 2) + get(k - 1, j);
            y(k - 1, j - 1) = inv(den) * val;
        }
    }
    return y;
}

std::vector<QMatrix> null_basis(const SphericalChain& alpha, const SphericalChain& beta,
                                double tol) {
    if (beta.size() > alpha.size()) {
        std::vector<QMatrix> basis = null_basis(beta.conjugated(), alpha.conjugated(), tol);
        for (QMatrix& y : basis) y = adjoint(y);
        return basis;
    }
    const int m = beta.size();
    std::vector<QMatrix> out;
    out.reserve(2 * m);
    for (int j = 0; j < m; ++j) {
        const Plane plane = plane_of(alpha.back(), beta[j], tol);
        for (const Quaternion& dir : {plane.b1, plane.b2}) {
            NullBasisParam p;
            p.mu.assign(m, Quaternion{});
            p.mu[j] = dir;
            out.push_back(homogeneous_from_params(alpha, beta, p, tol));
        }
    }
    return out;
}

SingularSolution solve_all(const SingularInstance& inst) {
    SingularSolution out;
    out.particular = particular_solution(inst);
    out.basis = null_basis(inst.alpha, inst.beta, inst.tol);
    if (inst.adjointed)
        for (QMatrix& y : out.basis) y = adjoint(y);
    return out;
}

} // namespace quatsylv
