#pragma once

#include <cmath>
#include <string>

#include "uclat/circle.hpp"
#include "uclat/int128.hpp"

namespace uclat {

enum class ResidueClass { OneMod4, OneMod3 };

/**
 * Primes of a fixed residue class in increasing order, prefixed by the
 * sentinel 1 so that products over indices 0..k read off directly.
 */
struct PrimeSequence {
    ResidueClass residue_class;
    std::vector<long long> values;  // values[0] == 1
};

struct GaussFactor {
    long long a = 0;
    long long b = 0;  // a + b*i, norm a^2 + b^2
};

struct EisensteinFactor {
    long long a = 0;
    long long b = 0;  // a + b*zeta with zeta = (1 + sqrt(-3))/2, norm a^2 + a*b + b^2
};

namespace detail {

inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        if (n % p == 0) return n == p;
    }
    for (long long f = 11; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

}  // namespace detail

inline PrimeSequence primes_in_class(ResidueClass cls, int count) {
    if (count < 0) throw std::invalid_argument("primes_in_class: negative count");
    long long mod = cls == ResidueClass::OneMod4 ? 4 : 3;
    PrimeSequence seq{cls, {1}};
    for (long long n = 2; static_cast<int>(seq.values.size()) <= count; ++n) {
        if (n % mod == 1 && detail::is_prime_ll(n)) seq.values.push_back(n);
    }
    return seq;
}

// Fermat two-squares decomposition p = a^2 + b^2, normalized to 0 < a <= b.
inline GaussFactor two_squares(long long p) {
    if (p == 2) return GaussFactor{1, 1};
    if (p % 4 != 1 || !detail::is_prime_ll(p))
        throw std::domain_error("two_squares: p must be 2 or a prime = 1 (mod 4)");
    for (long long a = 1; a * a * 2 <= p; ++a) {
        long long b;
        if (is_square_ll(p - a * a, b)) return GaussFactor{a, b};
    }
    throw std::logic_error("two_squares: no decomposition found");  // unreachable for valid p
}

// q = a^2 + a*b + b^2 with 0 < a <= b.
inline EisensteinFactor eisenstein_norm_decomp(long long q) {
    if (q % 3 != 1 || !detail::is_prime_ll(q))
        throw std::domain_error("eisenstein_norm_decomp: q must be a prime = 1 (mod 3)");
    for (long long a = 1; 3 * a * a <= q; ++a) {
        long long s;
        if (!is_square_ll(4 * q - 3 * a * a, s)) continue;
        if (((s - a) & 1) != 0) continue;
        long long b = (s - a) / 2;
        if (b >= a) return EisensteinFactor{a, b};
    }
    throw std::logic_error("eisenstein_norm_decomp: no decomposition found");
}

// Number of (X, Y) in Z^2 with X^2 + Y^2 = N, optionally with X and Y both
// odd. Brute-force column scan with exact square tests; doubles as the
// oracle for the closed-form counts below.
inline long long rep_count_gauss(long long n, bool odd_only) {
    if (n < 1) throw std::domain_error("rep_count_gauss: N must be positive");
    long long count = 0;
    long long r = isqrt_ll(n);
    for (long long x = -r; x <= r; ++x) {
        if (odd_only && (x & 1) == 0) continue;
        long long y;
        if (!is_square_ll(n - x * x, y)) continue;
        if (odd_only && (y & 1) == 0) continue;
        count += (y == 0) ? 1 : 2;
    }
    return count;
}

// Number of (x, y) in Z^2 with x^2 + x*y + y^2 = N.
inline long long rep_count_eisenstein(long long n) {
    if (n < 1) throw std::domain_error("rep_count_eisenstein: N must be positive");
    if (n > 2'000'000'000'000'000'000LL)
        throw std::domain_error("rep_count_eisenstein: N too large");
    long long count = 0;
    // x^2 + x*y + y^2 = N  <=>  (2y + x)^2 = 4N - 3x^2; s = |2y + x| has the
    // parity of x automatically, so each square s > 0 gives two y values.
    long long xmax = isqrt_ll(4 * n / 3);
    for (long long x = -xmax; x <= xmax; ++x) {
        long long s;
        if (!is_square_ll(4 * n - 3 * x * x, s)) continue;
        count += (s == 0) ? 1 : 2;
    }
    return count;
}

enum class RingVariant { Gauss, Eisenstein };

// The count predicted by the unit-times-conjugate-choice argument:
// Gauss: 4 * 2^(k+1) / 2 = 2^(k+2); Eisenstein: 6 * 2^k.
inline long long rep_count_via_factorization(RingVariant variant, int k) {
    if (k < 0 || k > 50) throw std::domain_error("rep_count_via_factorization: k out of range");
    if (variant == RingVariant::Gauss) return (4LL << (k + 1)) / 2;
    return 6LL << k;
}

struct Thm2Result {
    Circle circle;
    long long count = 0;
    long long predicted = 0;
    std::vector<LatticePoint> points;
};

class integrity_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/**
 * The explicit circle on Z^2 with center (1/2, 1/2) and squared radius
 * (1/2) * prod(p_0..p_ell), p_i the i-th smallest prime = 1 (mod 4) with
 * p_0 = 1. Counts its lattice points exactly and cross-checks the count
 * against both the closed form 2^(ell+2) and brute-force representation
 * counting of X^2 + Y^2 = 2*prod with X, Y odd.
 */
inline Thm2Result thm2_gauss_circle(int ell) {
    if (ell < 0) throw std::domain_error("thm2_gauss_circle: ell must be >= 0");
    PrimeSequence seq = primes_in_class(ResidueClass::OneMod4, ell);
    long long prod = 1;
    for (long long p : seq.values) {
        if (prod > 2'000'000'000'000LL / p)
            throw std::domain_error("thm2_gauss_circle: prime product too large to scan");
        prod *= p;
    }

    LatticeSpec spec = LatticeSpec::for_d(1);
    Circle circle(QPoint{BigRat(1, 2), BigRat(1, 2)}, BigRat(prod, 2));
    OnCircle on = count_on_circle(spec, circle);

    long long predicted = rep_count_via_factorization(RingVariant::Gauss, ell);
    long long reps_odd = rep_count_gauss(2 * prod, true);
    long long reps_all = rep_count_gauss(2 * prod, false);
    if (on.count != predicted || reps_odd != predicted || reps_all != reps_odd) {
        throw integrity_error("thm2_gauss_circle: point count disagrees with predicted count");
    }
    return Thm2Result{circle, on.count, predicted, on.points};
}

/**
 * The origin-centered circle on the d = 3 lattice with squared radius
 * prod(q_0..q_m), q_j the j-th smallest prime = 1 (mod 3) with q_0 = 1;
 * passes through exactly 6 * 2^m points.
 */
inline Thm2Result thm2_eisenstein_circle(int m) {
    if (m < 0) throw std::domain_error("thm2_eisenstein_circle: m must be >= 0");
    PrimeSequence seq = primes_in_class(ResidueClass::OneMod3, m);
    long long prod = 1;
    for (long long q : seq.values) {
        if (prod > 2'000'000'000'000LL / q)
            throw std::domain_error("thm2_eisenstein_circle: prime product too large to scan");
        prod *= q;
    }

    LatticeSpec spec = LatticeSpec::for_d(3);
    Circle circle(QPoint{BigRat(0), BigRat(0)}, BigRat(prod));
    OnCircle on = count_on_circle(spec, circle);

    long long predicted = rep_count_via_factorization(RingVariant::Eisenstein, m);
    long long reps = rep_count_eisenstein(prod);
    if (on.count != predicted || reps != predicted) {
        throw integrity_error("thm2_eisenstein_circle: point count disagrees with predicted count");
    }
    return Thm2Result{circle, on.count, predicted, on.points};
}

}  // namespace uclat
