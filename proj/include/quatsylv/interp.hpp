#ifndef QUATSYLV_INTERP_HPP
#define QUATSYLV_INTERP_HPP

#include <vector>

#include "quatsylv/qpoly.hpp"

namespace quatsylv {

/// Two-sided polynomial interpolation: find f with f - g in the right ideal
/// <p>_r and f - g~ in the left ideal <q>_l, where p and q are ordered
/// products of degree-one factors over spherical chains. Reduces to a
/// two-diagonal Sylvester equation.

struct InterpProblem {
    SphericalChain alpha; // length n, p = rho_{a_1} ... rho_{a_n}
    SphericalChain beta;  // length m, q = rho_{b_m} ... rho_{b_1}
    QPoly g;              // deg g < n
    QPoly g_tilde;        // deg g~ < m
    double tol = kDefaultTol;

    /// Validates the degree bounds.
    static InterpProblem make(const SphericalChain& alpha, const SphericalChain& beta,
                              const QPoly& g, const QPoly& g_tilde, double tol = kDefaultTol);
};

enum class ChainOrder { forward, reverse };

/// Ordered product of rho factors: forward gives rho_{a_1}...rho_{a_n},
/// reverse gives rho_{a_n}...rho_{a_1}.
QPoly chain_product(const SphericalChain& chain, ChainOrder order);
QPoly chain_product(std::span<const Quaternion> elems, ChainOrder order);

/// Right-hand side of the interpolation Sylvester equation:
/// C = sum_j J_alpha^j E_n g_j E_m^T - sum_k E_n g~_k E_m^T (J_beta^T)^k.
QMatrix build_C(const InterpProblem& problem);

struct InterpResult {
    QPoly f0;   // interpolant with the free polynomial parameter set to zero
    QPoly p, q; // ideal generators
    std::vector<Quaternion> bottom_row; // certificate: bottom row of the X used
    QPoly f0_alt;                       // same polynomial assembled from the rightmost column
    double membership_residual_p = 0.0; // remainder norm of (f0 - g) divided by p
    double membership_residual_q = 0.0; // remainder norm of (f0 - g~) divided by q
    double forms_gap = 0.0;             // coefficientwise gap between the two assemblies

    /// The full solution family: f(h) = f0 + p h q.
    QPoly with_h(const QPoly& h) const { return f0 + p * h * q; }
};

/// Solves the induced Sylvester equation (regular or singular path as the
/// chain classes dictate) and assembles the interpolant from the bottom row;
/// also assembles the rightmost-column form and cross-checks the two.
/// Throws NoSolutionError carrying the obstruction magnitudes when no
/// interpolant exists.
InterpResult interpolate(const InterpProblem& problem);

} // namespace quatsylv

#endif
