#pragma once

#include <tuple>

#include "uclat/lattice.hpp"

namespace uclat {

/**
 * Exact circle: center in the (1, sqrt(d)) frame plus squared radius.
 * All fields are reduced rationals, so structural equality is point-set
 * equality.
 */
struct Circle {
    QPoint center;
    BigRat radius2;

    Circle(QPoint c, BigRat r2) : center(std::move(c)), radius2(std::move(r2)) {
        if (radius2.sgn() <= 0) throw std::domain_error("Circle: radius2 must be positive");
    }

    friend bool operator==(const Circle&, const Circle&) = default;
};

// Canonical dedup key: the reduced numerator/denominator pairs of the center
// coordinates and the squared radius. Identical circles produce identical
// keys no matter which triple generated them.
struct CircleKey {
    BigInt xn, xd, yn, yd, rn, rd;

    friend bool operator==(const CircleKey&, const CircleKey&) = default;

    friend bool operator<(const CircleKey& a, const CircleKey& b) {
        return std::tie(a.xn, a.xd, a.yn, a.yd, a.rn, a.rd) <
               std::tie(b.xn, b.xd, b.yn, b.yd, b.rn, b.rd);
    }

    std::size_t hash() const {
        std::size_t h = xn.hash();
        auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(xd.hash());
        mix(yn.hash());
        mix(yd.hash());
        mix(rn.hash());
        mix(rd.hash());
        return h;
    }
};

inline CircleKey canonical_key(const Circle& c) {
    return CircleKey{c.center.x.num(), c.center.x.den(), c.center.y.num(),
                     c.center.y.den(), c.radius2.num(),  c.radius2.den()};
}

// Ordering used to break ties among circles of equal squared radius:
// (radius2, center.x, center.y). Total on distinct circles.
inline bool circle_less(const Circle& a, const Circle& b) {
    if (a.radius2 != b.radius2) return a.radius2 < b.radius2;
    if (a.center.x != b.center.x) return a.center.x < b.center.x;
    return a.center.y < b.center.y;
}

/**
 * Unique circle through three pairwise distinct, non-collinear lattice
 * points, computed by solving the two perpendicular-bisector equations
 * exactly. p1 is translated to the origin, the system is solved in scaled
 * integer coordinates, and the center translated back.
 *
 * Throws std::domain_error when the points are collinear.
 */
inline Circle circumcircle(const LatticeSpec& spec, const LatticePoint& p1,
                           const LatticePoint& p2, const LatticePoint& p3) {
    LatticePoint q2{p2.a - p1.a, p2.b - p1.b};
    LatticePoint q3{p3.a - p1.a, p3.b - p1.b};
    auto [u2, v2] = scaled_coords(spec, q2);
    auto [u3, v3] = scaled_coords(spec, q3);

    BigInt U2(u2), V2(v2), U3(u3), V3(v3), D(spec.d);
    BigInt n2 = U2 * U2 + D * V2 * V2;
    BigInt n3 = U3 * U3 + D * V3 * V3;
    BigInt t = U2 * V3 - U3 * V2;
    if (t.is_zero()) throw std::domain_error("circumcircle: collinear points");

    // Center of the circle through 0, q2, q3 solves
    //   u2*cx + d*v2*cy = n2/4,   u3*cx + d*v3*cy = n3/4.
    BigInt w = BigInt(4) * D * t;
    BigInt a = D * (n2 * V3 - n3 * V2);
    BigInt b = U2 * n3 - U3 * n2;
    BigRat cx(a, w);
    BigRat cy(b, w);
    BigRat r2 = cx * cx + BigRat(spec.d) * cy * cy;

    QPoint base = embed(spec, p1);
    return Circle(QPoint{cx + base.x, cy + base.y}, r2);
}

struct OnCircle {
    long long count = 0;
    std::vector<LatticePoint> points;  // sorted by embedded (x, y)
};

/**
 * All lattice points lying exactly on the circle. Scans the admissible
 * u = 2x grid inside [x0 - sqrt(D), x0 + sqrt(D)] and tests per column
 * whether the remaining distance divided by d is the square of a rational.
 */
inline OnCircle count_on_circle(const LatticeSpec& spec, const Circle& c) {
    OnCircle res;
    const bool case_a = spec.basis_case == BasisCase::A;
    const BigRat four_r2 = BigRat(4) * c.radius2;
    const BigRat cu = BigRat(2) * c.center.x;
    const BigRat cv = BigRat(2) * c.center.y;
    const BigInt s = rat_floor_sqrt(four_r2);

    long long u_lo = (cu.floor() - s - BigInt(1)).to_int64();
    long long u_hi = (cu.ceil() + s + BigInt(1)).to_int64();
    const BigRat d(spec.d);

    for (long long u = u_lo; u <= u_hi; ++u) {
        if (case_a && (u & 1)) continue;
        BigRat du = BigRat(u) - cu;
        BigRat rem = four_r2 - du * du;  // d * (v - cv)^2 = rem
        if (rem.sgn() < 0) continue;
        auto root = rat_sqrt_exact(rem / d);
        if (!root) continue;
        for (int branch = 0; branch < (root->is_zero() ? 1 : 2); ++branch) {
            BigRat v = branch == 0 ? cv + *root : cv - *root;
            if (!v.is_integer()) continue;
            long long vi = v.num().to_int64();
            if (case_a) {
                if (vi & 1) continue;
            } else {
                if (((u ^ vi) & 1) != 0) continue;
            }
            res.points.push_back(point_from_scaled(spec, u, vi));
        }
    }
    std::sort(res.points.begin(), res.points.end(),
              [&](const LatticePoint& p, const LatticePoint& q) {
                  return scaled_coords(spec, p) < scaled_coords(spec, q);
              });
    res.count = static_cast<long long>(res.points.size());
    return res;
}

}  // namespace uclat

namespace std {
template <>
struct hash<uclat::CircleKey> {
    std::size_t operator()(const uclat::CircleKey& k) const { return k.hash(); }
};
}  // namespace std
