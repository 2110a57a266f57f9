#include "quatsylv/quaternion.hpp"

#include <algorithm>
#include <cmath>

namespace quatsylv {

namespace {

double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion normalized(const Quaternion& a) {
    const double n = abs(a);
    return {a.w / n, a.x / n, a.y / n, a.z / n};
}

// Unit imaginary axis of a non-real quaternion.
Quaternion imaginary_axis(const Quaternion& a, double tol) {
    const Quaternion v = im(a);
    if (abs(v) <= tol * (1.0 + abs(a)))
        throw std::domain_error("degenerate class: quaternion is real, no imaginary axis");
    return normalized(v);
}

} // namespace

Plane plane_of(const Quaternion& a, const Quaternion& b, double tol) {
    if (!similar(a, b, tol)) throw std::domain_error("plane_of: inputs are not similar");
    const Quaternion axis_a = imaginary_axis(a, tol);
    const Quaternion axis_b = imaginary_axis(b, tol);
    const double scale = 1.0 + std::max(abs(a), abs(b));

    Quaternion v1, v2;
    if (abs(b - a) <= tol * scale) {
        v1 = Quaternion{1};
        v2 = axis_a;
    } else if (abs(b - conj(a)) <= tol * scale) {
        // orthogonal complement of span{1, I}: pick J perpendicular to I, pair with IJ
        Quaternion seed = Quaternion::unit_i();
        if (std::abs(dot4(seed, axis_a)) > 0.9) seed = Quaternion::unit_j();
        Quaternion perp = seed - axis_a * dot4(seed, axis_a);
        v1 = normalized(perp);
        v2 = axis_a * v1;
    } else {
        v1 = axis_a + axis_b;
        v2 = Quaternion{1} - axis_a * axis_b;
    }

    // Gram-Schmidt over R^4; the raw pairs are already orthogonal, this also
    // absorbs rounding in the third case.
    Quaternion b1 = normalized(v1);
    Quaternion b2 = v2 - b1 * dot4(v2, b1);
    b2 = normalized(b2);
    return Plane{b1, b2};
}

SolutionSet scalar_sylvester(const Quaternion& a, const Quaternion& b, const Quaternion& c,
                             double tol) {
    if (!similar(a, b, tol)) {
        const Quaternion p = scalar_resolvent(a, b);
        SolutionSet out;
        out.kind = SolutionSet::Kind::unique;
        out.point = (conj(a) * c - c * b) * inv(p);
        return out;
    }

    const double cscale = tol * (1.0 + abs(c));
    if (is_real(a, tol) && is_real(b, tol)) {
        // a = b real: the operator is identically zero.
        SolutionSet out;
        out.kind = abs(c) <= cscale ? SolutionSet::Kind::all : SolutionSet::Kind::none;
        return out;
    }

    if (abs(conj(a) * c - c * b) > cscale) return SolutionSet{SolutionSet::Kind::none, {}, {}};

    SolutionSet out;
    out.kind = SolutionSet::Kind::affine_plane;
    out.point = inv(2.0 * im(a)) * c;
    out.plane = plane_of(a, b, tol);
    return out;
}

} // namespace quatsylv
