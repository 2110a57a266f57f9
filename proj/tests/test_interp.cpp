#include <doctest.h>

#include "quatsylv/errors.hpp"
#include "quatsylv/interp.hpp"
#include "quatsylv/oracle.hpp"
#include "quatsylv/singular.hpp"
#include "support.hpp"

using namespace quatsylv;
using qstest::rand_chain;
using qstest::rand_in_class;
using qstest::rand_matrix;
using qstest::rand_nonreal;
using qstest::rand_quat;

namespace {

const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();

double poly_norm(const QPoly& f) {
    double s = 0;
    for (const Quaternion& c : f.coeffs()) s += abs_sq(c);
    return std::sqrt(s);
}

QPoly rand_poly(std::mt19937_64& rng, int max_deg) {
    std::vector<Quaternion> c(max_deg + 1);
    for (Quaternion& q : c) q = rand_quat(rng);
    return QPoly{std::move(c)};
}

// interpolation data admitting the interpolant f: g and g~ are the one-sided
// division remainders of f by p and q
std::pair<QPoly, QPoly> data_from_interpolant(const QPoly& f, const QPoly& p, const QPoly& q) {
    return {divmod_left(f, p).second, divmod_right(f, q).second};
}

} // namespace

TEST_SUITE_BEGIN("interp");

TEST_CASE("chain_product") {
    const SphericalChain single{{qi}};
    CHECK(chain_product(single, ChainOrder::forward) == rho(qi));

    const SphericalChain constant{{qi, qi}};
    const QPoly sq = chain_product(constant, ChainOrder::forward);
    CHECK(sq == rho(qi) * rho(qi)); // z^2 - 2iz - 1
    CHECK(abs(sq.coeff(0) - Quaternion{-1}) == 0.0);
    CHECK(abs(sq.coeff(1) + 2.0 * qi) == 0.0);

    const SphericalChain pair{{qi, qj}};
    CHECK(chain_product(pair, ChainOrder::forward) == rho(qi) * rho(qj));
    CHECK(chain_product(pair, ChainOrder::reverse) == rho(qj) * rho(qi));
}

TEST_CASE("build_C assemblies agree") {
    std::mt19937_64 rng(80);
    for (int t = 0; t < 15; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 4);
        const SphericalChain alpha = rand_chain(rng, n);
        const SphericalChain beta = rand_chain(rng, m);
        const QPoly g = rand_poly(rng, n - 1);
        const QPoly gt = rand_poly(rng, m - 1);
        const InterpProblem prob = InterpProblem::make(alpha, beta, g, gt);
        const QMatrix c = build_C(prob);

        // explicit matrix-product assembly
        const QMatrix a = alpha.matrix(Orientation::lower);
        const QMatrix bt = beta.matrix(Orientation::upper);
        QMatrix en(n, 1), emt(1, m);
        en(0, 0) = Quaternion{1};
        emt(0, 0) = Quaternion{1};
        QMatrix want(n, m);
        for (int j = 0; j <= prob.g.degree(); ++j)
            want += mpow(a, j) * en * prob.g.coeff(j) * emt;
        for (int k = 0; k <= prob.g_tilde.degree(); ++k)
            want -= en * prob.g_tilde.coeff(k) * (emt * mpow(bt, k));
        CHECK(fnorm(c - want) == 0.0);
    }

    // zero data gives zero C; scalar case recovers gamma - delta
    const SphericalChain a1{{qi}};
    const SphericalChain b1{{qj}};
    CHECK(fnorm(build_C(InterpProblem::make(a1, b1, QPoly{}, QPoly{}))) == 0.0);
    std::mt19937_64 rng2(81);
    const Quaternion gamma = rand_quat(rng2), delta = rand_quat(rng2);
    const QMatrix c1 =
        build_C(InterpProblem::make(a1, b1, QPoly::constant(gamma), QPoly::constant(delta)));
    CHECK(abs(c1(0, 0) - (gamma - delta)) == 0.0);

    // degree bounds are enforced
    CHECK_THROWS_AS(InterpProblem::make(a1, b1, rand_poly(rng2, 1), QPoly{}),
                    std::invalid_argument);
}

TEST_CASE("regular-path interpolation satisfies both memberships") {
    std::mt19937_64 rng(82);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 4);
        const SphericalChain alpha = rand_chain(rng, n);
        SphericalChain beta = rand_chain(rng, m);
        if (similar(alpha.front(), beta.front(), 1e-3)) continue;
        const QPoly g = rand_poly(rng, n - 1);
        const QPoly gt = rand_poly(rng, m - 1);
        const InterpResult res = interpolate(InterpProblem::make(alpha, beta, g, gt));

        CHECK(res.membership_residual_p <= 1e-9);
        CHECK(res.membership_residual_q <= 1e-9);
        CHECK(res.forms_gap <= 1e-9 * (1 + poly_norm(res.f0)));
        CHECK(res.f0.degree() < n + m);

        // direct division checks, independent of the recorded residuals
        CHECK(poly_norm(divmod_left(res.f0 - g, res.p).second) <= 1e-9);
        CHECK(poly_norm(divmod_right(res.f0 - gt, res.q).second) <= 1e-9);

        // the h-parametrized family stays inside both ideals
        const QPoly h = rand_poly(rng, 2);
        const QPoly fh = res.with_h(h);
        CHECK(poly_norm(divmod_left(fh - g, res.p).second) <= 1e-8 * (1 + poly_norm(fh)));
        CHECK(poly_norm(divmod_right(fh - gt, res.q).second) <= 1e-8 * (1 + poly_norm(fh)));
    }
}

TEST_CASE("n = m = 1 evaluations meet the data") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 30; ++t) {
        const Quaternion a = rand_nonreal(rng);
        const Quaternion b = rand_nonreal(rng);
        if (similar(a, b, 1e-3)) continue;
        const SphericalChain ca{{a}}, cb{{b}};
        const QPoly g = QPoly::constant(rand_quat(rng));
        const QPoly gt = QPoly::constant(rand_quat(rng));
        const InterpResult res = interpolate(InterpProblem::make(ca, cb, g, gt));
        // maximal-ideal conditions f^{el}(a) = gamma, f^{er}(b) = delta
        CHECK(abs(eval_left(res.f0, a) - g.coeff(0)) <= 1e-10 * (1 + poly_norm(res.f0)));
        CHECK(abs(eval_right(res.f0, b) - gt.coeff(0)) <= 1e-10 * (1 + poly_norm(res.f0)));
    }
}

TEST_CASE("scalar real-point interpolation matches the hand formula") {
    // two distinct real nodes handled as a plain linear interpolation
    // f = gamma + (z - 1) x with x = (gamma - delta) / (1 - 2)
    const Quaternion gamma{3.5, 1, 0, -2}, delta{-1.25, 0, 2, 0};
    const Quaternion x = (gamma - delta) * inv(Quaternion{1} - Quaternion{2});
    const QPoly f = QPoly::constant(gamma) + rho(Quaternion{1}) * QPoly::constant(x);
    CHECK(abs(eval_left(f, Quaternion{1}) - gamma) <= 1e-14);
    CHECK(abs(eval_right(f, Quaternion{2}) - delta) <= 1e-14);
}

TEST_CASE("singular-path interpolation") {
    std::mt19937_64 rng(84);
    int solved = 0;
    for (int t = 0; t < 30; ++t) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 4);
        const Quaternion cls = rand_nonreal(rng);
        const SphericalChain alpha = rand_chain(rng, n, cls);
        const SphericalChain beta = rand_chain(rng, m, cls);
        const QPoly p = chain_product(alpha, ChainOrder::forward);
        const QPoly q = chain_product(beta, ChainOrder::reverse);

        // derive compatible data from a random interpolant
        const QPoly f = rand_poly(rng, n + m - 1);
        const auto [g, gt] = data_from_interpolant(f, p, q);
        const InterpResult res = interpolate(InterpProblem::make(alpha, beta, g, gt));
        CHECK(res.membership_residual_p <= 1e-9 * (1 + poly_norm(f)));
        CHECK(res.membership_residual_q <= 1e-9 * (1 + poly_norm(f)));
        CHECK(res.forms_gap <= 1e-9 * (1 + poly_norm(res.f0)));
        CHECK(res.f0.degree() < n + m);
        ++solved;
    }
    CHECK(solved > 0);

    // generic data on a genuinely singular pencil has no interpolant
    int refused = 0;
    for (int t = 0; t < 20; ++t) {
        const Quaternion cls = rand_nonreal(rng);
        const SphericalChain alpha = rand_chain(rng, 3, cls);
        const SphericalChain beta = rand_chain(rng, 2, cls);
        try {
            interpolate(InterpProblem::make(alpha, beta, rand_poly(rng, 2), rand_poly(rng, 1)));
        } catch (const NoSolutionError& e) {
            CHECK(!e.obstruction_norms.empty());
            ++refused;
        }
    }
    CHECK(refused > 0);
}

TEST_CASE("zero data extracts ideal-intersection elements") {
    std::mt19937_64 rng(85);
    for (int t = 0; t < 10; ++t) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        SphericalChain alpha = rand_chain(rng, n);
        SphericalChain beta = rand_chain(rng, m);
        if (similar(alpha.front(), beta.front(), 1e-3)) continue;
        const InterpResult res = interpolate(InterpProblem::make(alpha, beta, QPoly{}, QPoly{}));
        // with zero data on a regular pencil, X = 0 and f0 = 0: the trivial member
        CHECK(poly_norm(res.f0) <= 1e-12);

        // a nontrivial intersection element: lift a nonzero h through the family
        const QPoly h = QPoly::constant(rand_quat(rng));
        const QPoly member = res.with_h(h);
        CHECK(poly_norm(divmod_left(member, res.p).second) <= 1e-10 * (1 + poly_norm(member)));
        CHECK(poly_norm(divmod_right(member, res.q).second) <= 1e-10 * (1 + poly_norm(member)));
    }

    // singular pencil with zero data: the nullspace supplies nontrivial members
    const Quaternion cls = rand_nonreal(rng);
    const SphericalChain alpha = rand_chain(rng, 3, cls);
    const SphericalChain beta = rand_chain(rng, 2, cls);
    const QPoly p = chain_product(alpha, ChainOrder::forward);
    const QPoly q = chain_product(beta, ChainOrder::reverse);
    const std::vector<QMatrix> basis = null_basis(alpha, beta);
    for (const QMatrix& y : basis) {
        // assemble f from the bottom row of the homogeneous solution
        QPoly f;
        QPoly tail = QPoly::constant(Quaternion{1});
        for (int j = 1; j <= 2; ++j) {
            f += p * QPoly::constant(y(2, j - 1)) * tail;
            tail = rho(beta[j - 1]) * tail;
        }
        if (poly_norm(f) < 1e-12) continue;
        CHECK(poly_norm(divmod_left(f, p).second) <= 1e-9 * (1 + poly_norm(f)));
        CHECK(poly_norm(divmod_right(f, q).second) <= 1e-9 * (1 + poly_norm(f)));
    }
}

TEST_SUITE_END();
