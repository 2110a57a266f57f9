#include "quatsylv/interp.hpp"

#include <cmath>

#include "quatsylv/errors.hpp"
#include "quatsylv/regular.hpp"
#include "quatsylv/singular.hpp"

namespace quatsylv {

namespace {

double poly_norm(const QPoly& f) {
    double s = 0.0;
    for (const Quaternion& c : f.coeffs()) s += abs_sq(c);
    return std::sqrt(s);
}

} // namespace

InterpProblem InterpProblem::make(const SphericalChain& alpha, const SphericalChain& beta,
                                  const QPoly& g, const QPoly& g_tilde, double tol) {
    if (g.degree() >= alpha.size())
        throw std::invalid_argument("interpolation data g must have degree < len(alpha)");
    if (g_tilde.degree() >= beta.size())
        throw std::invalid_argument("interpolation data g~ must have degree < len(beta)");
    return InterpProblem{alpha, beta, g, g_tilde, tol};
}

QPoly chain_product(std::span<const Quaternion> elems, ChainOrder order) {
    QPoly p = QPoly::constant(Quaternion{1});
    if (order == ChainOrder::forward) {
        for (const Quaternion& a : elems) p = p * rho(a);
    } else {
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) p = p * rho(*it);
    }
    return p;
}

QPoly chain_product(const SphericalChain& chain, ChainOrder order) {
    return chain_product(chain.elems(), order);
}

QMatrix build_C(const InterpProblem& problem) {
    const int n = problem.alpha.size(), m = problem.beta.size();
    const QMatrix a = problem.alpha.matrix(Orientation::lower);
    const QMatrix bt = problem.beta.matrix(Orientation::upper);

    QMatrix c(n, m);
    // J_alpha^j E_n g_j lands in the first column
    QMatrix col(n, 1);
    col(0, 0) = Quaternion{1};
    for (int j = 0; j <= problem.g.degree(); ++j) {
        for (int i = 0; i < n; ++i) c(i, 0) += col(i, 0) * problem.g.coeff(j);
        col = a * col;
    }
    // E_n g~_k E_m^T (J_beta^T)^k lands in the first row
    QMatrix row(1, m);
    row(0, 0) = Quaternion{1};
    for (int k = 0; k <= problem.g_tilde.degree(); ++k) {
        for (int j = 0; j < m; ++j) c(0, j) -= problem.g_tilde.coeff(k) * row(0, j);
        row = row * bt;
    }
    return c;
}

InterpResult interpolate(const InterpProblem& problem) {
    const SphericalChain& alpha = problem.alpha;
    const SphericalChain& beta = problem.beta;
    const int n = alpha.size(), m = beta.size();
    const QMatrix c = build_C(problem);

    QMatrix x;
    if (similar(alpha.front(), beta.front(), problem.tol)) {
        const SingularInstance inst = SingularInstance::make(alpha, beta, c, problem.tol);
        try {
            x = particular_solution(inst);
        } catch (NoSolutionError& e) {
            throw NoSolutionError("no interpolant: the induced Sylvester equation is unsolvable",
                                  e.obstruction_norms);
        }
    } else {
        x = solve_two_diagonal(alpha, beta.matrix(Orientation::upper), c, problem.tol);
    }

    InterpResult out;
    out.p = chain_product(alpha, ChainOrder::forward);
    out.q = chain_product(beta, ChainOrder::reverse);

    // bottom-row form: f = g + sum_j p x_{n,j} rho_{b_{j-1}}...rho_{b_1}
    out.f0 = problem.g;
    QPoly tail = QPoly::constant(Quaternion{1});
    for (int j = 1; j <= m; ++j) {
        out.f0 += out.p * QPoly::constant(x(n - 1, j - 1)) * tail;
        tail = rho(beta[j - 1]) * tail;
    }

    // rightmost-column form: f = g~ + sum_k rho_{a_1}...rho_{a_{k-1}} x_{k,m} q
    out.f0_alt = problem.g_tilde;
    QPoly head = QPoly::constant(Quaternion{1});
    for (int k = 1; k <= n; ++k) {
        out.f0_alt += head * QPoly::constant(x(k - 1, m - 1)) * out.q;
        head = head * rho(alpha[k - 1]);
    }

    out.bottom_row.reserve(m);
    for (int j = 0; j < m; ++j) out.bottom_row.push_back(x(n - 1, j));

    out.membership_residual_p = poly_norm(divmod_left(out.f0 - problem.g, out.p).second);
    out.membership_residual_q = poly_norm(divmod_right(out.f0 - problem.g_tilde, out.q).second);
    out.forms_gap = poly_norm(out.f0 - out.f0_alt);
    return out;
}

} // namespace quatsylv
