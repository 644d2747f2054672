#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uclat {

/**
 * BigInt: arbitrary-precision signed integer with value semantics.
 *
 * Thin RAII wrapper around a GMP mpz_t. All arithmetic is exact; division
 * truncates toward zero (floor_div/ceil_div are provided separately).
 */
class BigInt {
  private:
    mpz_t _z;

  public:
    BigInt() { mpz_init(_z); }
    BigInt(long long v) { mpz_init_set_si(_z, v); }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(_z, s.c_str(), 10) != 0) {
            mpz_clear(_z);
            throw std::invalid_argument("BigInt: invalid decimal string '" + s + "'");
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(_z, o._z); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(_z);
        mpz_swap(_z, o._z);
    }
    ~BigInt() { mpz_clear(_z); }

    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(_z, o._z);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        if (this != &o) mpz_swap(_z, o._z);
        return *this;
    }

    // ---- state ----
    bool is_zero() const { return mpz_sgn(_z) == 0; }
    bool is_one() const { return mpz_cmp_ui(_z, 1) == 0; }
    bool is_odd() const { return mpz_odd_p(_z) != 0; }
    int sgn() const { return mpz_sgn(_z); }

    bool fits_int64() const { return mpz_fits_slong_p(_z) != 0; }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
        return mpz_get_si(_z);
    }
    double to_double() const { return mpz_get_d(_z); }

    // ---- comparison ----
    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a._z, b._z) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = mpz_cmp(a._z, b._z);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // ---- arithmetic ----
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r._z, a._z);
        return r;
    }
    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r._z, a._z, b._z);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r._z, a._z, b._z);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r._z, a._z, b._z);
        return r;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_tdiv_q(r._z, a._z, b._z);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_tdiv_r(r._z, a._z, b._z);
        return r;
    }

    BigInt& operator+=(const BigInt& b) { mpz_add(_z, _z, b._z); return *this; }
    BigInt& operator-=(const BigInt& b) { mpz_sub(_z, _z, b._z); return *this; }
    BigInt& operator*=(const BigInt& b) { mpz_mul(_z, _z, b._z); return *this; }

    // Floor division (toward -inf); needed for exact scan bounds.
    friend BigInt floor_div(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_fdiv_q(r._z, a._z, b._z);
        return r;
    }
    friend BigInt ceil_div(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_cdiv_q(r._z, a._z, b._z);
        return r;
    }
    friend bool divides(const BigInt& a, const BigInt& b) {
        return mpz_divisible_p(b._z, a._z) != 0;
    }

    friend BigInt abs(const BigInt& a) {
        BigInt r;
        mpz_abs(r._z, a._z);
        return r;
    }
    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r._z, a._z, b._z);
        return r;
    }
    friend BigInt pow(const BigInt& base, unsigned long exp) {
        BigInt r;
        mpz_pow_ui(r._z, base._z, exp);
        return r;
    }

    // ---- square roots ----
    friend BigInt isqrt_floor(const BigInt& n) {
        if (n.sgn() < 0) throw std::domain_error("isqrt_floor: negative input");
        BigInt r;
        mpz_sqrt(r._z, n._z);
        return r;
    }
    friend bool is_perfect_square(const BigInt& n) {
        return n.sgn() >= 0 && mpz_perfect_square_p(n._z) != 0;
    }

    // ---- IO ----
    std::string str() const {
        std::vector<char> buf(mpz_sizeinbase(_z, 10) + 2);
        mpz_get_str(buf.data(), 10, _z);
        return std::string(buf.data());
    }
    friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.str(); }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(_z)) + 0x9e3779b97f4a7c15ULL;
        const mp_limb_t* limbs = mpz_limbs_read(_z);
        const mp_size_t n = static_cast<mp_size_t>(mpz_size(_z));
        for (mp_size_t i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(limbs[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline BigInt isqrt_floor(long long n) { return isqrt_floor(BigInt(n)); }

}  // namespace uclat

namespace std {
template <>
struct hash<uclat::BigInt> {
    std::size_t operator()(const uclat::BigInt& v) const { return v.hash(); }
};
}  // namespace std
