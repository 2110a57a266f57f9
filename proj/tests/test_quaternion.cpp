#include <doctest.h>

#include "quatsylv/oracle.hpp"
#include "quatsylv/qpoly.hpp"
#include "quatsylv/quaternion.hpp"
#include "support.hpp"

using namespace quatsylv;
using qstest::rand_in_class;
using qstest::rand_nonreal;
using qstest::rand_quat;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
} // namespace

TEST_SUITE_BEGIN("quaternion");

TEST_CASE("product rules") {
    CHECK(qi * qj == qk);
    CHECK(qj * qk == qi);
    CHECK(qk * qi == qj);
    CHECK(qi * qi == Quaternion{-1});
    CHECK(qi * qj * qk == Quaternion{-1});

    const Quaternion a{1, 2, 3, 4};
    CHECK(abs(a * inv(a) - Quaternion{1}) < 4e-16);
    CHECK(abs(inv(a) * a - Quaternion{1}) < 4e-16);
    CHECK(conj(Quaternion{1, 2, 3, 4}) == Quaternion{1, -2, -3, -4});
    CHECK(conj(conj(a)) == a);
    CHECK(re(a) == 1.0);
    CHECK(im(a) == Quaternion{0, 2, 3, 4});
    CHECK(abs_sq(a) == doctest::Approx(30.0).epsilon(1e-15));
    CHECK_THROWS_AS(inv(Quaternion{}), std::domain_error);
}

TEST_CASE("inverse identity on random values") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = rand_quat(rng, 10.0);
        if (abs(a) < 1e-6) continue;
        CHECK(abs(a * inv(a) - Quaternion{1}) <= 4e-16 * (1 + abs_sq(a)));
    }
}

TEST_CASE("similar") {
    CHECK(similar(qi, qj));
    CHECK(!similar(Quaternion{1}, Quaternion{2}));
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const Quaternion a = rand_quat(rng);
        CHECK(similar(a, conj(a)));
        const Quaternion h = rand_quat(rng);
        if (abs(h) < 1e-3) continue;
        CHECK(similar(a, inv(h) * a * h, 1e-12));
    }
}

TEST_CASE("plane_of canonical cases") {
    // same element: span{1, I}
    const Plane p1 = plane_of(qi, qi);
    CHECK(abs(p1.project(Quaternion{1}) - Quaternion{1}) < 1e-15);
    CHECK(abs(p1.project(qi) - qi) < 1e-15);
    CHECK(abs(p1.project(qj)) < 1e-15);

    // conjugate pair: the orthogonal complement span{j, k}
    const Plane p2 = plane_of(qi, -qi);
    CHECK(abs(p2.project(qj) - qj) < 1e-15);
    CHECK(abs(p2.project(qk) - qk) < 1e-15);
    CHECK(abs(p2.project(Quaternion{1})) < 1e-15);
    CHECK(abs(p2.project(qi)) < 1e-15);

    // generic pair: span{i + j, 1 - k}
    const Plane p3 = plane_of(qi, qj);
    CHECK(abs(p3.project(qi + qj) - (qi + qj)) < 1e-14);
    CHECK(abs(p3.project(Quaternion{1} - qk) - (Quaternion{1} - qk)) < 1e-14);
    CHECK(abs(p3.project(qi - qj)) < 1e-14);

    CHECK_THROWS_AS(plane_of(qi, Quaternion{1, 1}), std::domain_error);
    CHECK_THROWS_AS(plane_of(Quaternion{2}, Quaternion{2}), std::domain_error);
}

TEST_CASE("plane membership solves the homogeneous scalar equation") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = rand_nonreal(rng);
        const Quaternion b = rand_in_class(rng, a);
        const Plane plane = plane_of(a, b);
        CHECK(std::abs(abs(plane.b1) - 1.0) < 1e-14);  // orthonormal basis
        CHECK(std::abs(abs(plane.b2) - 1.0) < 1e-14);
        const Quaternion mu = plane.b1 * u(rng) + plane.b2 * u(rng);
        CHECK(abs(a * mu - mu * b) <= 1e-12 * (1 + abs(mu)));
    }
}

TEST_CASE("scalar_sylvester: regular, no-solution and affine cases") {
    // real commutative case
    const SolutionSet s1 = scalar_sylvester(Quaternion{2}, Quaternion{1}, Quaternion{5});
    REQUIRE(s1.kind == SolutionSet::Kind::unique);
    CHECK(abs(s1.point - Quaternion{5}) < 1e-15);

    // conj(i)*1 = -i differs from 1*j: no solution
    const SolutionSet s2 = scalar_sylvester(qi, qj, Quaternion{1});
    CHECK(s2.kind == SolutionSet::Kind::none);

    // derived case a=i, b=1+j, c=1: frozen from the 4x4 real linear solve
    const SolutionSet s3 = scalar_sylvester(qi, Quaternion{1, 0, 1, 0}, Quaternion{1});
    REQUIRE(s3.kind == SolutionSet::Kind::unique);
    CHECK(abs(s3.point - Quaternion{-0.6, -0.2, 0.2, 0.4}) < 1e-14);

    // solvable singular case: c on the membership plane
    const SolutionSet s4 = scalar_sylvester(qi, qj, qi + qj); // conj(i)(i+j) = (i+j)j = 1-k
    REQUIRE(s4.kind == SolutionSet::Kind::affine_plane);
    const Quaternion x0 = s4.point;
    CHECK(abs(qi * x0 - x0 * qj - (qi + qj)) < 1e-14);

    // degenerate real class
    CHECK(scalar_sylvester(Quaternion{1}, Quaternion{1}, Quaternion{}).kind ==
          SolutionSet::Kind::all);
    CHECK(scalar_sylvester(Quaternion{1}, Quaternion{1}, Quaternion{2}).kind ==
          SolutionSet::Kind::none);
}

TEST_CASE("scalar_sylvester residual and affine-plane property") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = rand_quat(rng), c = rand_quat(rng);
        const Quaternion b = (t % 2) ? rand_quat(rng) : rand_in_class(rng, a);
        const SolutionSet s = scalar_sylvester(a, b, c);
        if (s.kind == SolutionSet::Kind::unique) {
            CHECK(abs(a * s.point - s.point * b - c) <= 1e-9 * (1 + abs(c)));
        } else if (s.kind == SolutionSet::Kind::affine_plane) {
            const Quaternion x = s.point + s.plane->b1 * u(rng) + s.plane->b2 * u(rng);
            CHECK(abs(a * x - x * b - c) <= 1e-9 * (1 + abs(c)));
        }
    }
}

TEST_CASE("scalar_sylvester agrees with the real 4x4 oracle") {
    std::mt19937_64 rng(5);
    int unique_count = 0, other = 0;
    for (int t = 0; t < 1000; ++t) {
        const Quaternion a = rand_quat(rng), c = rand_quat(rng);
        // mix generic pairs with same-class pairs so the singular branch is hit
        const Quaternion b = (t % 3) ? rand_quat(rng) : rand_in_class(rng, a);
        QMatrix am(1, 1), bm(1, 1), cm(1, 1);
        am(0, 0) = a;
        bm(0, 0) = b;
        cm(0, 0) = c;
        const OracleResult o = oracle_solve(am, bm, cm);
        const SolutionSet s = scalar_sylvester(a, b, c);
        switch (s.kind) {
            case SolutionSet::Kind::unique:
                ++unique_count;
                REQUIRE(o.verdict == OracleVerdict::unique);
                CHECK(abs(s.point - o.x0(0, 0)) <= 1e-8 * (1 + abs(s.point)));
                break;
            case SolutionSet::Kind::none:
                ++other;
                REQUIRE(o.verdict == OracleVerdict::none);
                break;
            case SolutionSet::Kind::affine_plane:
                ++other;
                REQUIRE(o.verdict == OracleVerdict::affine);
                CHECK(o.nullspace.size() == 2);
                break;
            case SolutionSet::Kind::all:
                ++other;
                REQUIRE(o.verdict == OracleVerdict::affine);
                CHECK(o.nullspace.size() == 4);
                break;
        }
    }
    CHECK(unique_count > 0);
    CHECK(other > 0);
}

TEST_CASE("resolvent equals the characteristic value") {
    // P_{a,b} = X_[a](b), so both evaluations of the real polynomial agree
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = rand_nonreal(rng);
        const Quaternion b = rand_quat(rng);
        const QPoly chi = char_poly(a);
        CHECK(abs(scalar_resolvent(a, b) - eval_right(chi, b)) <= 1e-13 * (1 + abs_sq(b)));
        CHECK(abs(eval_left(chi, b) - eval_right(chi, b)) <= 1e-13 * (1 + abs_sq(b)));
    }
}

TEST_SUITE_END();
