#ifndef QUATSYLV_TESTS_SUPPORT_HPP
#define QUATSYLV_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "quatsylv/qmatrix.hpp"
#include "quatsylv/qpoly.hpp"

namespace qstest {

using quatsylv::QMatrix;
using quatsylv::Quaternion;
using quatsylv::SphericalChain;

inline Quaternion rand_quat(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng), u(rng)};
}

// a quaternion whose class is comfortably non-real
inline Quaternion rand_nonreal(std::mt19937_64& rng) {
    for (;;) {
        const Quaternion q = rand_quat(rng);
        if (quatsylv::abs(quatsylv::im(q)) > 0.3) return q;
    }
}

// random member of [alpha]: same real part, imaginary part rotated
inline Quaternion rand_in_class(std::mt19937_64& rng, const Quaternion& alpha) {
    std::normal_distribution<double> g;
    const double radius = quatsylv::abs(quatsylv::im(alpha));
    for (;;) {
        const double vx = g(rng), vy = g(rng), vz = g(rng);
        const double n = std::sqrt(vx * vx + vy * vy + vz * vz);
        if (n < 1e-3) continue;
        return {quatsylv::re(alpha), radius * vx / n, radius * vy / n, radius * vz / n};
    }
}

inline QMatrix rand_matrix(std::mt19937_64& rng, int n, int m, double scale = 1.0) {
    QMatrix out(n, m);
    for (Quaternion& q : out.entries()) q = rand_quat(rng, scale);
    return out;
}

inline QMatrix rand_lower_triangular(std::mt19937_64& rng, int n) {
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) out(i, j) = rand_quat(rng);
    return out;
}

// spherical chain of length n in the class of seed, consecutive guard 0.3
inline SphericalChain rand_chain(std::mt19937_64& rng, int n, const Quaternion& seed) {
    std::vector<Quaternion> elems{rand_in_class(rng, seed)};
    while (static_cast<int>(elems.size()) < n) {
        const Quaternion cand = rand_in_class(rng, seed);
        if (quatsylv::abs(cand - quatsylv::conj(elems.back())) > 0.3) elems.push_back(cand);
    }
    return SphericalChain{elems};
}

inline SphericalChain rand_chain(std::mt19937_64& rng, int n) {
    return rand_chain(rng, n, rand_nonreal(rng));
}

// arbitrary bidiagonal chain elements (consecutive guard only, classes free)
inline std::vector<Quaternion> rand_mixed_diag(std::mt19937_64& rng, int n) {
    std::vector<Quaternion> elems{rand_quat(rng)};
    while (static_cast<int>(elems.size()) < n) {
        const Quaternion cand = rand_quat(rng);
        if (quatsylv::abs(cand - quatsylv::conj(elems.back())) > 0.3) elems.push_back(cand);
    }
    return elems;
}

inline double rel_gap(const QMatrix& a, const QMatrix& b) {
    return quatsylv::fnorm(a - b) / (1.0 + quatsylv::fnorm(b));
}

inline double residual(const QMatrix& a, const QMatrix& b, const QMatrix& c, const QMatrix& x) {
    return quatsylv::fnorm(a * x - x * b - c);
}

} // namespace qstest

#endif
