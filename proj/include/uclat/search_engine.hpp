#pragma once

#include <atomic>
#include <climits>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "uclat/int128.hpp"
#include "uclat/lattice.hpp"

namespace uclat::detail {

// Nonnegative fraction with 128-bit parts; comparisons go through exact
// cross multiplication (single u128 products when the operands allow,
// 256-bit otherwise).
struct Frac128 {
    u128 num = 0;
    u128 den = 1;
};

inline int cmp_frac(u128 n1, u128 d1, u128 n2, u128 d2) {
    if (((n1 | n2 | d1 | d2) >> 63) == 0) {
        u128 l = n1 * d2;
        u128 r = n2 * d1;
        return l < r ? -1 : (l > r ? 1 : 0);
    }
    return cmp_mul_u128(n1, d2, n2, d1);
}

inline int cmp(const Frac128& a, const Frac128& b) { return cmp_frac(a.num, a.den, b.num, b.den); }

inline long long ceil_to_ll(const Frac128& f) {
    u128 q = (f.num + f.den - 1) / f.den;
    if (q > static_cast<u128>(LLONG_MAX)) return LLONG_MAX;
    return static_cast<long long>(q);
}

inline std::optional<u128> u128_from_bigint(const BigInt& v) {
    if (v.sgn() < 0) return std::nullopt;
    BigInt base(1LL << 32);
    BigInt rest = v;
    u128 out = 0;
    int shift = 0;
    while (!rest.is_zero()) {
        if (shift >= 128) return std::nullopt;
        u128 chunk = static_cast<u128>((rest % base).to_int64());
        out |= chunk << shift;
        rest = rest / base;
        shift += 32;
    }
    return out;
}

inline std::optional<Frac128> frac_from_rat(const BigRat& q) {
    auto n = u128_from_bigint(q.num());
    auto d = u128_from_bigint(q.den());
    if (!n || !d) return std::nullopt;
    return Frac128{*n, *d};
}

// Lattice point in scaled coordinates (u, v) = (2x, 2y), with the integer
// squared scaled norm n = u^2 + d*v^2 = 4*|p|^2.
struct ScaledPoint {
    long long u = 0;
    long long v = 0;
    long long n = 0;
};

// Circle through the origin with center (a/w, b/w) in the (x, y) frame and
// squared radius (a^2 + d*b^2) / w^2. Stored reduced with w > 0, which makes
// the triple a canonical key for the circle.
struct PackedCircle {
    long long a = 0;
    long long b = 0;
    long long w = 1;

    friend bool operator==(const PackedCircle&, const PackedCircle&) = default;
    friend auto operator<=>(const PackedCircle&, const PackedCircle&) = default;
};

inline Frac128 circle_radius2(const PackedCircle& c, long long d) {
    u128 num = static_cast<u128>(static_cast<i128>(c.a) * c.a) +
               static_cast<u128>(d) * static_cast<u128>(static_cast<i128>(c.b) * c.b);
    return Frac128{num, static_cast<u128>(static_cast<i128>(c.w) * c.w)};
}

// Exact comparison of signed fractions n1/d1 vs n2/d2 with d1, d2 > 0.
inline int cmp_frac_signed(long long n1, long long d1, long long n2, long long d2) {
    i128 lhs = static_cast<i128>(n1) * d2;
    i128 rhs = static_cast<i128>(n2) * d1;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Keeps the engine inside the proven int64/int128 envelope: with
// u^2 + d*v^2 <= R4 <= 1e10 every intermediate fits (|a| <= 2*sqrt(d)*R4^1.5
// < 2^55, |w| <= 8*sqrt(d)*R4 < 2^41, radius2 numerators < 2^113).
inline constexpr long long kMaxScaledNorm = 10'000'000'000LL;

// All nonzero lattice points with u^2 + d*v^2 <= r4, sorted by (n, u, v).
inline std::vector<ScaledPoint> scaled_points_in_disk(const LatticeSpec& spec, long long r4) {
    if (r4 < 0) return {};
    if (r4 > kMaxScaledNorm)
        throw std::domain_error("search: bound exceeds the supported search-disk size");
    std::vector<ScaledPoint> pts;
    const bool case_a = spec.basis_case == BasisCase::A;
    const long long d = spec.d;
    long long umax = isqrt_ll(r4);
    for (long long u = -umax; u <= umax; ++u) {
        if (case_a && (u & 1)) continue;
        long long rem = r4 - u * u;
        long long vmax = isqrt_ll(rem / d);
        for (long long v = -vmax; v <= vmax; ++v) {
            if (case_a) {
                if (v & 1) continue;
            } else {
                if (((u ^ v) & 1) != 0) continue;
            }
            long long n = u * u + d * v * v;
            if (n == 0 || n > r4) continue;
            pts.push_back(ScaledPoint{u, v, n});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const ScaledPoint& x, const ScaledPoint& y) {
        return std::tie(x.n, x.u, x.v) < std::tie(y.n, y.u, y.v);
    });
    return pts;
}

// Fundamental domain of the order-4 group {+-1, conjugation}: x > 0, y >= 0,
// plus the positive y axis. Contains exactly one point of each nonzero orbit.
inline bool in_sector(const ScaledPoint& p) {
    return (p.u > 0 && p.v >= 0) || (p.u == 0 && p.v > 0);
}

// ---- perfect-square machinery for the hot counting loop ----

struct SquareTables {
    bool mod64[64] = {};
    bool mod63[63] = {};
    bool mod65[65] = {};

    constexpr SquareTables() {
        for (int i = 0; i < 64; ++i) mod64[(i * i) & 63] = true;
        for (int i = 0; i < 63; ++i) mod63[(i * i) % 63] = true;
        for (int i = 0; i < 65; ++i) mod65[(i * i) % 65] = true;
    }
};

inline constexpr SquareTables kSquareTables{};

inline bool is_square_filtered(long long n, long long& root) {
    if (!kSquareTables.mod64[n & 63]) return false;
    if (!kSquareTables.mod63[n % 63]) return false;
    if (!kSquareTables.mod65[n % 65]) return false;
    root = isqrt_ll(n);
    return root * root == n;
}

inline long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline long long ceil_div_ll(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// Counting scan specialized on the lattice: all arithmetic in int64, the
// divisor d folded into the instruction stream. Valid when f < 2^62.
template <long long D_, bool CASE_A>
long long count_scan_i64(long long a, long long b, long long w, long long f) {
    const long long s = isqrt_ll(f);
    const long long two_a = 2 * a;
    const long long two_b = 2 * b;
    const long long u_lo = ceil_div_ll(two_a - s, w);
    const long long u_hi = floor_div_ll(two_a + s, w);

    long long count = 0;
    long long sigma = u_lo * w - two_a;
    for (long long u = u_lo; u <= u_hi; ++u, sigma += w) {
        if constexpr (CASE_A) {
            if (u & 1) continue;
        }
        long long rem = f - sigma * sigma;
        if (rem < 0) continue;
        if constexpr (D_ > 1) {
            if (rem % D_) continue;
        }
        long long t2 = D_ > 1 ? rem / D_ : rem;
        long long r;
        if (!is_square_filtered(t2, r)) continue;
        for (int branch = 0; branch < (r == 0 ? 1 : 2); ++branch) {
            long long tau = branch == 0 ? r : -r;
            long long vnum = two_b + tau;
            if (vnum % w != 0) continue;
            long long v = vnum / w;
            if constexpr (CASE_A) {
                if (v & 1) continue;
            } else {
                if (((u ^ v) & 1) != 0) continue;
            }
            ++count;
        }
    }
    return count;
}

// Generic exact scan with 128-bit arithmetic; also collects points on demand.
inline long long count_points_packed(const LatticeSpec& spec, const PackedCircle& c,
                                     std::vector<std::pair<long long, long long>>* out_uv = nullptr) {
    const long long d = spec.d;
    const bool case_a = spec.basis_case == BasisCase::A;
    const u128 a2 = static_cast<u128>(static_cast<i128>(c.a) * c.a);
    const u128 b2 = static_cast<u128>(static_cast<i128>(c.b) * c.b);
    const u128 f = 4 * (a2 + static_cast<u128>(d) * b2);
    const u128 s = isqrt_u128(f);
    const i128 two_a = static_cast<i128>(2) * c.a;
    const i128 two_b = static_cast<i128>(2) * c.b;
    const i128 si = static_cast<i128>(s);

    long long count = 0;
    i128 u_lo = ceil_div_i128(two_a - si, c.w);
    i128 u_hi = floor_div_i128(two_a + si, c.w);
    for (i128 u = u_lo; u <= u_hi; ++u) {
        if (case_a && ((u & 1) != 0)) continue;
        i128 sigma = u * c.w - two_a;
        u128 sig2 = static_cast<u128>(sigma * sigma);
        if (sig2 > f) continue;
        u128 rem = f - sig2;
        if (rem % static_cast<u128>(d) != 0) continue;
        u128 t2 = rem / static_cast<u128>(d);
        u128 r;
        if (!is_square_u128(t2, r)) continue;
        for (int branch = 0; branch < (r == 0 ? 1 : 2); ++branch) {
            i128 tau = branch == 0 ? static_cast<i128>(r) : -static_cast<i128>(r);
            i128 vnum = two_b + tau;
            if (vnum % c.w != 0) continue;
            i128 v = vnum / c.w;
            if (case_a) {
                if ((v & 1) != 0) continue;
            } else {
                if (((u ^ v) & 1) != 0) continue;
            }
            ++count;
            if (out_uv)
                out_uv->emplace_back(static_cast<long long>(u), static_cast<long long>(v));
        }
    }
    return count;
}

inline long long count_points_fast(const LatticeSpec& spec, const PackedCircle& c) {
    const u128 f = 4 * (static_cast<u128>(static_cast<i128>(c.a) * c.a) +
                        static_cast<u128>(spec.d) *
                            static_cast<u128>(static_cast<i128>(c.b) * c.b));
    if (f < (static_cast<u128>(1) << 62)) {
        long long fl = static_cast<long long>(f);
        switch (spec.d) {
            case 1: return count_scan_i64<1, true>(c.a, c.b, c.w, fl);
            case 2: return count_scan_i64<2, true>(c.a, c.b, c.w, fl);
            case 3: return count_scan_i64<3, false>(c.a, c.b, c.w, fl);
            case 7: return count_scan_i64<7, false>(c.a, c.b, c.w, fl);
            case 11: return count_scan_i64<11, false>(c.a, c.b, c.w, fl);
            case 19: return count_scan_i64<19, false>(c.a, c.b, c.w, fl);
            case 43: return count_scan_i64<43, false>(c.a, c.b, c.w, fl);
            case 67: return count_scan_i64<67, false>(c.a, c.b, c.w, fl);
            case 163: return count_scan_i64<163, false>(c.a, c.b, c.w, fl);
            default: break;
        }
    }
    return count_points_packed(spec, c);
}

struct BinEntry {
    PackedCircle circle;
    Frac128 radius2;
    long long count = 0;
};

struct OriginSearchResult {
    std::map<long long, BinEntry> bins;  // point count -> minimal circle
    bool all_targets_filled = false;
};

/**
 * Search over all circles through at least three lattice points that have a
 * representative (under translation and the order-4 point group) with one
 * point at the origin and two more inside the scan disk u^2 + d*v^2 <= r4.
 *
 * Per target count the minimal circle is kept, ties broken by the canonical
 * order (radius2, center x, center y); the result is a set minimum and hence
 * independent of processing order and thread count.
 *
 * With a radius2 cap (certified mode) coverage is exhaustive up to the cap
 * in a single pass. Without one (heuristic mode) candidates are processed in
 * ascending radius2 waves until every target is resolved or the largest
 * candidate radius has been passed.
 *
 * Pruning: once every target is filled, the worst per-target radius2 is a
 * dynamic cap; candidates strictly beyond it are dropped before counting.
 * Lock-free ceiling snapshots of the cap and of the per-target minima keep
 * the shared mutex out of the hot loops; stale snapshots only cost work,
 * never correctness.
 */
class OriginSearch {
  public:
    // window_lo > 0 restricts the scan to circles with radius2 > window_lo;
    // in that case `seeds` must carry the complete per-target minima for
    // radius2 <= window_lo (from a prior exhaustive pass), which keeps the
    // combined result exact while skipping the already-settled range.
    OriginSearch(const LatticeSpec& spec, long long r4, std::optional<Frac128> radius2_cap,
                 std::vector<long long> targets, int threads, Frac128 window_lo = Frac128{0, 1},
                 const std::map<long long, BinEntry>* seeds = nullptr)
        : _spec(spec),
          _d(spec.d),
          _cap(radius2_cap),
          _targets(std::move(targets)),
          _threads(threads < 1 ? 1 : threads),
          _window_lo(window_lo) {
        std::sort(_targets.begin(), _targets.end());
        _targets.erase(std::unique(_targets.begin(), _targets.end()), _targets.end());
        _unfilled = _targets.size();
        _bin_ceils = std::make_unique<std::atomic<long long>[]>(_targets.size());
        for (size_t i = 0; i < _targets.size(); ++i) _bin_ceils[i].store(LLONG_MAX);
        _pts = scaled_points_in_disk(spec, r4);
        for (const auto& p : _pts) {
            if (in_sector(p)) _sector.push_back(p);
        }
        if (seeds) {
            for (const auto& [count, entry] : *seeds) {
                _bins.emplace(count, entry);
                auto it = std::lower_bound(_targets.begin(), _targets.end(), count);
                if (it != _targets.end() && *it == count) {
                    size_t idx = static_cast<size_t>(it - _targets.begin());
                    _bin_ceils[idx].store(ceil_to_ll(entry.radius2));
                    --_unfilled;
                }
            }
            if (!_targets.empty() && _unfilled == 0) publish_threshold();
        }
    }

    OriginSearchResult run() {
        if (_cap) {
            run_wave(_window_lo, *_cap, false);
        } else {
            Frac128 lo{0, 1};
            Frac128 hi{1024, 1};
            bool first = true;
            while (true) {
                run_wave(lo, hi, first);
                first = false;
                if (!_targets.empty() && _unfilled == 0) break;
                if (cmp(_max_seen, hi) <= 0) break;  // nothing beyond this wave
                lo = hi;
                hi.num *= 16;
            }
        }
        OriginSearchResult res;
        res.bins = _bins;
        res.all_targets_filled = !_targets.empty() && _unfilled == 0;
        return res;
    }

  private:
    struct Candidate {
        PackedCircle circle;
        u128 num;  // radius2 numerator (for the reduced circle)
        u128 den;  // radius2 denominator
    };

    void run_wave(const Frac128& lo, const Frac128& hi, bool track_max) {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            Frac128 local_max{0, 1};
            std::vector<Candidate> batch;
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= _sector.size()) break;
                process_p2(_sector[i], lo, hi, track_max, local_max, batch);
            }
            if (track_max) {
                std::lock_guard<std::mutex> g(_mu);
                if (cmp(local_max, _max_seen) > 0) _max_seen = local_max;
            }
        };
        if (_threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(_threads);
            for (int t = 0; t < _threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
    }

    // Largest scaled norm a point may have and still lie on a circle of
    // squared radius <= cap through the origin (diameter bound n <= 16*cap).
    long long norm_limit(const Frac128& hi) const {
        u128 lim = 16 * (hi.num / hi.den) + 16;
        if (lim > static_cast<u128>(kMaxScaledNorm)) return kMaxScaledNorm;
        return static_cast<long long>(lim);
    }

    long long pruned_norm_limit(const Frac128& hi) const {
        long long lim = norm_limit(hi);
        if (_all_filled.load(std::memory_order_relaxed)) {
            long long t = _thr_ceil.load(std::memory_order_relaxed);
            if (t < LLONG_MAX / 16 - 1) lim = std::min(lim, 16 * (t + 1));
        }
        return lim;
    }

    void process_p2(const ScaledPoint& p2, const Frac128& lo, const Frac128& hi, bool track_max,
                    Frac128& local_max, std::vector<Candidate>& batch) {
        const long long limit = track_max ? kMaxScaledNorm : pruned_norm_limit(hi);
        if (p2.n > limit) return;

        batch.clear();
        const long long d = _d;
        const bool prune = !track_max && _all_filled.load(std::memory_order_relaxed);
        const u128 thr_plus =
            prune ? static_cast<u128>(_thr_ceil.load(std::memory_order_relaxed)) + 1 : 0;

        for (const auto& p3 : _pts) {
            if (!track_max && p3.n > limit) break;
            long long t = p2.u * p3.v - p3.u * p2.v;
            if (t == 0) continue;
            long long a = d * (p2.n * p3.v - p3.n * p2.v);
            long long b = p2.u * p3.n - p3.u * p2.n;
            long long w = 4 * d * t;
            if (w < 0) {
                a = -a;
                b = -b;
                w = -w;
            }
            u128 num = static_cast<u128>(static_cast<i128>(a) * a) +
                       static_cast<u128>(d) * static_cast<u128>(static_cast<i128>(b) * b);
            u128 den = static_cast<u128>(static_cast<i128>(w) * w);
            if (track_max && cmp_frac(num, den, local_max.num, local_max.den) > 0)
                local_max = Frac128{num, den};
            if (lo.num != 0 && cmp_frac(num, den, lo.num, lo.den) <= 0) continue;
            if (cmp_frac(num, den, hi.num, hi.den) > 0) continue;
            if (prune && cmp_frac(num, den, thr_plus, 1) > 0) continue;

            long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), w);
            Candidate cand{PackedCircle{a / g, b / g, w / g}, 0, 0};
            u128 g2 = static_cast<u128>(g) * static_cast<u128>(g);
            cand.num = num / g2;
            cand.den = den / g2;
            batch.push_back(cand);
        }
        if (batch.empty()) return;

        std::sort(batch.begin(), batch.end(), [](const Candidate& x, const Candidate& y) {
            int c = cmp_frac(x.num, x.den, y.num, y.den);
            if (c != 0) return c < 0;
            c = cmp_frac_signed(x.circle.a, x.circle.w, y.circle.a, y.circle.w);
            if (c != 0) return c < 0;
            return cmp_frac_signed(x.circle.b, x.circle.w, y.circle.b, y.circle.w) < 0;
        });
        batch.erase(std::unique(batch.begin(), batch.end(),
                                [](const Candidate& x, const Candidate& y) {
                                    return x.circle == y.circle;
                                }),
                    batch.end());

        for (const auto& cand : batch) {
            if (_all_filled.load(std::memory_order_relaxed)) {
                u128 tp = static_cast<u128>(_thr_ceil.load(std::memory_order_relaxed)) + 1;
                if (cmp_frac(cand.num, cand.den, tp, 1) > 0) continue;
            }
            long long count = count_points_fast(_spec, cand.circle);
            offer(count, cand);
        }
    }

    void offer(long long count, const Candidate& cand) {
        size_t idx = _targets.size();
        if (!_targets.empty()) {
            auto it = std::lower_bound(_targets.begin(), _targets.end(), count);
            if (it == _targets.end() || *it != count) return;
            idx = static_cast<size_t>(it - _targets.begin());
            // Lock-free rejection of candidates that cannot improve this bin.
            long long ceil_known = _bin_ceils[idx].load(std::memory_order_relaxed);
            if (ceil_known != LLONG_MAX &&
                cmp_frac(cand.num, cand.den, static_cast<u128>(ceil_known) + 1, 1) > 0)
                return;
        }

        std::lock_guard<std::mutex> g(_mu);
        Frac128 r2{cand.num, cand.den};
        auto it = _bins.find(count);
        bool updated = false;
        if (it == _bins.end()) {
            _bins.emplace(count, BinEntry{cand.circle, r2, count});
            updated = true;
            if (!_targets.empty() && --_unfilled == 0) publish_threshold();
        } else if (candidate_before(cand, it->second)) {
            it->second = BinEntry{cand.circle, r2, count};
            updated = true;
            if (_all_filled.load(std::memory_order_relaxed)) publish_threshold();
        }
        if (updated && idx < _targets.size()) {
            _bin_ceils[idx].store(ceil_to_ll(r2), std::memory_order_relaxed);
        }
    }

    static bool candidate_before(const Candidate& cand, const BinEntry& e) {
        int c = cmp_frac(cand.num, cand.den, e.radius2.num, e.radius2.den);
        if (c != 0) return c < 0;
        c = cmp_frac_signed(cand.circle.a, cand.circle.w, e.circle.a, e.circle.w);
        if (c != 0) return c < 0;
        return cmp_frac_signed(cand.circle.b, cand.circle.w, e.circle.b, e.circle.w) < 0;
    }

    // Called with the mutex held, once every target has a candidate.
    void publish_threshold() {
        Frac128 worst{0, 1};
        for (long long t : _targets) {
            const auto& e = _bins.at(t);
            if (cmp(e.radius2, worst) > 0) worst = e.radius2;
        }
        _thr_ceil.store(ceil_to_ll(worst), std::memory_order_relaxed);
        _all_filled.store(true, std::memory_order_release);
    }

    LatticeSpec _spec;
    long long _d;
    std::optional<Frac128> _cap;
    std::vector<long long> _targets;
    int _threads;
    Frac128 _window_lo{0, 1};
    std::vector<ScaledPoint> _pts;
    std::vector<ScaledPoint> _sector;

    std::mutex _mu;
    std::map<long long, BinEntry> _bins;
    size_t _unfilled = 0;
    std::unique_ptr<std::atomic<long long>[]> _bin_ceils;
    std::atomic<bool> _all_filled{false};
    std::atomic<long long> _thr_ceil{LLONG_MAX};
    Frac128 _max_seen{0, 1};
};

}  // namespace uclat::detail
