#pragma once

#include <optional>

#include "uclat/bigint.hpp"

namespace uclat {

/**
 * BigRat: exact rational number.
 *
 * Always stored in lowest terms with a positive denominator, so equality is
 * structural and hashing is stable. Comparisons are exact cross
 * multiplications; nothing here ever rounds.
 */
class BigRat {
  private:
    BigInt _num;
    BigInt _den;  // > 0, gcd(|num|, den) = 1

    void _canonicalize() {
        if (_den.is_zero()) throw std::domain_error("BigRat: zero denominator");
        if (_num.is_zero()) {
            _den = BigInt(1);
            return;
        }
        if (_den.sgn() < 0) {
            _num = -_num;
            _den = -_den;
        }
        BigInt g = gcd(abs(_num), _den);
        if (!g.is_one()) {
            _num = _num / g;
            _den = _den / g;
        }
    }

  public:
    BigRat() : _num(0), _den(1) {}
    BigRat(long long v) : _num(v), _den(1) {}
    BigRat(int v) : _num(v), _den(1) {}
    BigRat(const BigInt& v) : _num(v), _den(1) {}
    BigRat(const BigInt& num, const BigInt& den) : _num(num), _den(den) { _canonicalize(); }
    BigRat(long long num, long long den) : _num(num), _den(den) { _canonicalize(); }

    // Parses "num/den" or "num".
    static BigRat parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return BigRat(BigInt(s));
        return BigRat(BigInt(s.substr(0, pos)), BigInt(s.substr(pos + 1)));
    }

    const BigInt& num() const { return _num; }
    const BigInt& den() const { return _den; }

    bool is_zero() const { return _num.is_zero(); }
    bool is_integer() const { return _den.is_one(); }
    int sgn() const { return _num.sgn(); }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a._num == b._num && a._den == b._den;
    }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        return (a._num * b._den) <=> (b._num * a._den);
    }

    friend BigRat operator-(const BigRat& a) {
        BigRat r;
        r._num = -a._num;
        r._den = a._den;
        return r;
    }
    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a._num * b._den + b._num * a._den, a._den * b._den);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a._num * b._den - b._num * a._den, a._den * b._den);
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a._num * b._num, a._den * b._den);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
        return BigRat(a._num * b._den, a._den * b._num);
    }

    BigRat& operator+=(const BigRat& b) { return *this = *this + b; }
    BigRat& operator-=(const BigRat& b) { return *this = *this - b; }
    BigRat& operator*=(const BigRat& b) { return *this = *this * b; }
    BigRat& operator/=(const BigRat& b) { return *this = *this / b; }

    friend BigRat abs(const BigRat& a) { return a.sgn() < 0 ? -a : a; }

    // Largest integer <= value.
    BigInt floor() const { return floor_div(_num, _den); }
    BigInt ceil() const { return ceil_div(_num, _den); }

    // Approximation for display only; never used in any comparison.
    double to_double() const { return _num.to_double() / _den.to_double(); }

    std::string str() const {
        if (_den.is_one()) return _num.str();
        return _num.str() + "/" + _den.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

    std::size_t hash() const {
        std::size_t h = _num.hash();
        h ^= _den.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Exact square root of a rational: defined iff numerator and denominator of
// the reduced form are both perfect squares.
inline std::optional<BigRat> rat_sqrt_exact(const BigRat& q) {
    if (q.sgn() < 0) throw std::domain_error("rat_sqrt_exact: negative input");
    if (q.is_zero()) return BigRat(0);
    if (!is_perfect_square(q.num()) || !is_perfect_square(q.den())) return std::nullopt;
    return BigRat(isqrt_floor(q.num()), isqrt_floor(q.den()));
}

// floor(sqrt(q)) as an exact integer. Uses floor(sqrt(q)) = isqrt(floor(q)):
// with f = floor(q) and m = isqrt(f), m^2 <= f <= q and (m+1)^2 >= f+1 > q.
inline BigInt rat_floor_sqrt(const BigRat& q) {
    if (q.sgn() < 0) throw std::domain_error("rat_floor_sqrt: negative input");
    return isqrt_floor(q.floor());
}

}  // namespace uclat

namespace std {
template <>
struct hash<uclat::BigRat> {
    std::size_t operator()(const uclat::BigRat& v) const { return v.hash(); }
};
}  // namespace std
