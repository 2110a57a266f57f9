#ifndef QUATSYLV_QUATERNION_HPP
#define QUATSYLV_QUATERNION_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace quatsylv {

/// Default absolute/relative tolerance used by every comparison that gates
/// behaviour (similarity, rank, solvability). Callers can override per call.
inline constexpr double kDefaultTol = 1e-9;

/// One element of the quaternion division ring, alpha = w + i x + j y + k z.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    constexpr std::array<double, 4> components() const { return {w, x, y, z}; }

    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product (i^2 = j^2 = k^2 = ijk = -1).
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }
constexpr double re(const Quaternion& a) { return a.w; }
constexpr Quaternion im(const Quaternion& a) { return {0, a.x, a.y, a.z}; }
constexpr double abs_sq(const Quaternion& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }
inline double abs(const Quaternion& a) { return std::sqrt(abs_sq(a)); }

inline Quaternion inv(const Quaternion& a) {
    const double n2 = abs_sq(a);
    if (n2 == 0.0) throw std::domain_error("quaternion inverse of zero");
    return {a.w / n2, -a.x / n2, -a.y / n2, -a.z / n2};
}

constexpr Quaternion operator/(const Quaternion& a, double s) { return {a.w / s, a.x / s, a.y / s, a.z / s}; }

/// alpha ~ beta: same real part and same modulus, so the two lie in one
/// conjugacy class (a 2-sphere). Comparison at tol*(1 + max modulus).
inline bool similar(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol) {
    const double scale = 1.0 + std::max(abs(a), abs(b));
    return std::abs(re(a) - re(b)) <= tol * scale && std::abs(abs(a) - abs(b)) <= tol * scale;
}

inline bool is_real(const Quaternion& a, double tol = kDefaultTol) {
    return abs(im(a)) <= tol * (1.0 + abs(a));
}

/// Canonical representative of the conjugacy class [a]: Re(a) + |Im(a)| i.
inline Quaternion class_representative(const Quaternion& a) {
    return {re(a), abs(im(a)), 0, 0};
}

/// P_{a,b} = |a|^2 - (a + conj a) b + b^2; nonzero exactly when a and b are
/// not similar, in which case the scalar equation a x - x b = c is uniquely
/// solvable.
constexpr Quaternion scalar_resolvent(const Quaternion& a, const Quaternion& b) {
    return Quaternion{abs_sq(a)} - (a + conj(a)) * b + b * b;
}

/// A two-dimensional real subspace of H, kept as an orthonormal basis pair.
struct Plane {
    Quaternion b1, b2;

    /// Orthogonal projection of mu onto the plane.
    Quaternion project(const Quaternion& mu) const {
        const auto dot = [](const Quaternion& p, const Quaternion& q) {
            return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
        };
        return b1 * dot(mu, b1) + b2 * dot(mu, b2);
    }
    double distance(const Quaternion& mu) const { return abs(mu - project(mu)); }
};

/// The plane of solutions x of a x = x b for similar a, b in a non-real
/// class. Throws std::domain_error when a !~ b or the class is real.
Plane plane_of(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol);

/// Full answer to the scalar Sylvester equation a x - x b = c.
struct SolutionSet {
    enum class Kind { unique, none, affine_plane, all };
    Kind kind = Kind::none;
    Quaternion point;           // the solution (unique) or a particular point (affine_plane)
    std::optional<Plane> plane; // present for affine_plane
};

SolutionSet scalar_sylvester(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             double tol = kDefaultTol);

} // namespace quatsylv

#endif
