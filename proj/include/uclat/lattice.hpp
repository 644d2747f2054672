#pragma once

#include <array>
#include <algorithm>
#include <optional>
#include <vector>

#include "uclat/rational.hpp"

namespace uclat {

/**
 * The nine planar lattices handled by this library are the rings of integers
 * of the imaginary quadratic fields Q(sqrt(-d)) with class number one,
 * d in {1, 2, 3, 7, 11, 19, 43, 67, 163}, viewed as point sets in R^2.
 *
 * Basis by case:
 *   CaseA (d = 1, 2):      (1, 0), (0, sqrt(d))
 *   CaseB (d = 3 mod 4):   (1, 0), (-1/2, sqrt(d)/2)
 *
 * Every plane point is kept in the (1, sqrt(d)) frame: a QPoint (x, y) means
 * the point (x, y*sqrt(d)) with x and y rational. This removes all
 * irrationality from stored data; squared distances are x^2 + d*y^2 and stay
 * rational.
 */
enum class BasisCase { A, B };

struct LatticeSpec {
    int d;
    BasisCase basis_case;
    int discriminant;

    static constexpr std::array<int, 9> class_number_one = {1, 2, 3, 7, 11, 19, 43, 67, 163};

    static bool valid_d(int d) {
        return std::find(class_number_one.begin(), class_number_one.end(), d) !=
               class_number_one.end();
    }

    static LatticeSpec for_d(int d) {
        if (!valid_d(d))
            throw std::invalid_argument("LatticeSpec: d must be one of the nine class-number-one values");
        BasisCase c = (d % 4 == 3) ? BasisCase::B : BasisCase::A;
        int disc = (c == BasisCase::A) ? -4 * d : -d;
        return LatticeSpec{d, c, disc};
    }

    static std::vector<LatticeSpec> all() {
        std::vector<LatticeSpec> v;
        for (int d : class_number_one) v.push_back(for_d(d));
        return v;
    }
};

// Basis coordinates (a, b) of the lattice point a*e1 + b*e2.
struct LatticePoint {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Exact plane point (x, y*sqrt(d)) stored as rationals (x, y).
struct QPoint {
    BigRat x;
    BigRat y;

    friend bool operator==(const QPoint&, const QPoint&) = default;
};

inline QPoint embed(const LatticeSpec& spec, const LatticePoint& p) {
    if (spec.basis_case == BasisCase::A) {
        return QPoint{BigRat(p.a), BigRat(p.b)};
    }
    return QPoint{BigRat(2 * p.a - p.b, 2), BigRat(p.b, 2)};
}

// Scaled coordinates (u, v) = (2x, 2y); integral for every lattice point.
// CaseA lattice points have u, v both even; CaseB points have u = v (mod 2).
inline std::pair<long long, long long> scaled_coords(const LatticeSpec& spec,
                                                     const LatticePoint& p) {
    if (spec.basis_case == BasisCase::A) return {2 * p.a, 2 * p.b};
    return {2 * p.a - p.b, p.b};
}

inline LatticePoint point_from_scaled(const LatticeSpec& spec, long long u, long long v) {
    if (spec.basis_case == BasisCase::A) return LatticePoint{u / 2, v / 2};
    return LatticePoint{(u + v) / 2, v};
}

inline std::optional<LatticePoint> membership(const LatticeSpec& spec, const QPoint& p) {
    if (spec.basis_case == BasisCase::A) {
        if (!p.x.is_integer() || !p.y.is_integer()) return std::nullopt;
        return LatticePoint{p.x.num().to_int64(), p.y.num().to_int64()};
    }
    BigRat b2 = p.y * BigRat(2);
    if (!b2.is_integer()) return std::nullopt;
    BigRat a2 = p.x + p.y;
    if (!a2.is_integer()) return std::nullopt;
    return LatticePoint{a2.num().to_int64(), b2.num().to_int64()};
}

// Squared Euclidean norm of the embedded point: x^2 + d*y^2.
inline BigRat norm2(const LatticeSpec& spec, const QPoint& p) {
    return p.x * p.x + BigRat(spec.d) * p.y * p.y;
}

inline BigRat dist2(const LatticeSpec& spec, const QPoint& p, const QPoint& q) {
    return norm2(spec, QPoint{p.x - q.x, p.y - q.y});
}

/**
 * One element of the order-4 symmetry group generated by negation
 * (x, y) -> (-x, -y) and conjugation (x, y) -> (x, -y). Both generators map
 * each of the nine lattices onto itself, so the group acts on lattice points.
 */
struct Isometry {
    int sx = 1;  // sign applied to x
    int sy = 1;  // sign applied to y

    QPoint apply(const QPoint& p) const {
        return QPoint{sx < 0 ? -p.x : p.x, sy < 0 ? -p.y : p.y};
    }

    LatticePoint apply(const LatticeSpec& spec, const LatticePoint& p) const {
        if (spec.basis_case == BasisCase::A) return LatticePoint{sx * p.a, sy * p.b};
        // CaseB: x = a - b/2, y = b/2. Mapping signs gives b' = sy*b and
        // a' = sx*a + ((sy - sx)/2) * b.
        long long bp = sy * p.b;
        long long ap = sx * p.a + ((sy - sx) / 2) * p.b;
        return LatticePoint{ap, bp};
    }

    friend bool operator==(const Isometry&, const Isometry&) = default;
};

inline std::array<Isometry, 4> point_group(const LatticeSpec&) {
    return {Isometry{1, 1}, Isometry{-1, -1}, Isometry{1, -1}, Isometry{-1, 1}};
}

/**
 * All lattice points p with |embed(p) - center|^2 <= radius2_bound, each
 * exactly once, sorted by embedded (x, y). Scans the integral u = 2x grid
 * column by column and solves the admissible v range exactly.
 */
inline std::vector<LatticePoint> points_in_disk(const LatticeSpec& spec, const QPoint& center,
                                                const BigRat& radius2_bound) {
    std::vector<LatticePoint> out;
    if (radius2_bound.sgn() < 0) return out;

    const bool case_a = spec.basis_case == BasisCase::A;
    const BigRat four_r2 = BigRat(4) * radius2_bound;
    const BigRat cu = BigRat(2) * center.x;  // center in scaled coordinates
    const BigRat cv = BigRat(2) * center.y;
    const BigInt s = rat_floor_sqrt(four_r2);  // floor(2 * radius)

    long long u_lo = (cu.floor() - s - BigInt(1)).to_int64();
    long long u_hi = (cu.ceil() + s + BigInt(1)).to_int64();
    const BigRat d(spec.d);

    for (long long u = u_lo; u <= u_hi; ++u) {
        if (case_a && (u & 1)) continue;
        BigRat du = BigRat(u) - cu;
        BigRat rem = four_r2 - du * du;  // d * (v - cv)^2 <= rem
        if (rem.sgn() < 0) continue;
        BigRat vr2 = rem / d;
        BigInt sv = rat_floor_sqrt(vr2);
        long long v_lo = (cv.floor() - sv - BigInt(1)).to_int64();
        long long v_hi = (cv.ceil() + sv + BigInt(1)).to_int64();
        for (long long v = v_lo; v <= v_hi; ++v) {
            if (case_a) {
                if (v & 1) continue;
            } else {
                if (((u ^ v) & 1) != 0) continue;
            }
            BigRat dv = BigRat(v) - cv;
            if (dv * dv > vr2) continue;
            out.push_back(point_from_scaled(spec, u, v));
        }
    }
    // Columns are scanned in (u, v) order already, but keep the contract explicit.
    std::sort(out.begin(), out.end(), [&](const LatticePoint& p, const LatticePoint& q) {
        return scaled_coords(spec, p) < scaled_coords(spec, q);
    });
    return out;
}

}  // namespace uclat

namespace std {
template <>
struct hash<uclat::LatticePoint> {
    std::size_t operator()(const uclat::LatticePoint& p) const {
        std::size_t h = std::hash<long long>()(p.a);
        h ^= std::hash<long long>()(p.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
}  // namespace std
