#pragma once

#include <unordered_set>

#include "uclat/circle.hpp"
#include "uclat/search_engine.hpp"

namespace uclat {

enum class SearchMode { Heuristic, Certified };

/**
 * Certified mode: bound is an upper bound B on the squared radius; the scan
 * disk has radius 2*sqrt(B), which covers every circle of squared radius
 * <= B through three or more lattice points (all points of such a circle lie
 * within one diameter of any of its points). Searches deepen by doubling B
 * up to bound_cap.
 *
 * Heuristic mode: bound is the scan region radius; whatever circles arise
 * from triples inside it are counted, with no completeness claim.
 */
struct SearchConfig {
    SearchMode mode = SearchMode::Certified;
    BigRat bound = BigRat(4);
    BigRat bound_cap = BigRat(1'048'576);
    int threads = 1;
};

struct UcResult {
    int lattice_d = 0;
    int n = 0;
    BigRat min_radius2;
    Circle witness;
    std::vector<LatticePoint> witness_points;  // exactly n points, sorted by (x, y)
    bool certified = false;
    BigRat bound_used;
    SearchMode mode = SearchMode::Certified;
};

struct UcTableEntry {
    int n = 0;
    std::optional<UcResult> result;  // empty: no circle with exactly n points found
    BigRat bound_used;
};

class bound_exhausted_error : public std::runtime_error {
  public:
    bound_exhausted_error(const std::string& msg, std::optional<BigRat> best, BigRat bound)
        : std::runtime_error(msg), best_upper(std::move(best)), bound_used(std::move(bound)) {}

    std::optional<BigRat> best_upper;
    BigRat bound_used;
};

struct EnumeratedCircle {
    Circle circle;
    long long count = 0;
    std::vector<LatticePoint> points;
};

/**
 * Reference enumeration: every distinct circle through the origin and two
 * more lattice points of the scan disk, deduplicated by canonical key and
 * counted exactly once. The first point of each candidate triple is pinned
 * to the origin; the second ranges over a fundamental sector of the order-4
 * point group; the third over the whole disk minus collinear points.
 *
 * This is the plain-rational baseline the fast engine is tested against;
 * use uc / uc_table for real searches.
 */
inline std::vector<EnumeratedCircle> enumerate_circles(const LatticeSpec& spec,
                                                       const SearchConfig& cfg) {
    if (cfg.bound.sgn() <= 0) throw std::invalid_argument("enumerate_circles: bound must be positive");
    BigRat disk_r2 = cfg.mode == SearchMode::Certified ? BigRat(4) * cfg.bound
                                                       : cfg.bound * cfg.bound;
    auto pts = points_in_disk(spec, QPoint{}, disk_r2);

    std::vector<LatticePoint> sector, all;
    for (const auto& p : pts) {
        auto [u, v] = scaled_coords(spec, p);
        if (u == 0 && v == 0) continue;
        all.push_back(p);
        if ((u > 0 && v >= 0) || (u == 0 && v > 0)) sector.push_back(p);
    }

    const LatticePoint origin{0, 0};
    std::unordered_set<CircleKey> seen;
    std::vector<EnumeratedCircle> out;
    for (const auto& p2 : sector) {
        auto [u2, v2] = scaled_coords(spec, p2);
        for (const auto& p3 : all) {
            auto [u3, v3] = scaled_coords(spec, p3);
            if (u2 * v3 - u3 * v2 == 0) continue;
            Circle c = circumcircle(spec, origin, p2, p3);
            if (cfg.mode == SearchMode::Certified && c.radius2 > cfg.bound) continue;
            if (!seen.insert(canonical_key(c)).second) continue;
            OnCircle on = count_on_circle(spec, c);
            out.push_back(EnumeratedCircle{std::move(c), on.count, std::move(on.points)});
        }
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedCircle& x, const EnumeratedCircle& y) {
        return circle_less(x.circle, y.circle);
    });
    return out;
}

namespace detail {

inline long long scan_norm_for(SearchMode mode, const BigRat& bound) {
    BigRat r4 = mode == SearchMode::Certified ? BigRat(16) * bound : BigRat(4) * bound * bound;
    BigInt fl = r4.floor();
    if (!fl.fits_int64()) throw std::domain_error("search: bound exceeds the supported search-disk size");
    return fl.to_int64();
}

inline OriginSearchResult run_origin_search(const LatticeSpec& spec, SearchMode mode,
                                            const BigRat& bound,
                                            const std::vector<long long>& targets, int threads,
                                            const BigRat* window_lo = nullptr,
                                            const std::map<long long, BinEntry>* seeds = nullptr) {
    std::optional<Frac128> cap;
    if (mode == SearchMode::Certified) {
        cap = frac_from_rat(bound);
        if (!cap) throw std::domain_error("search: bound exceeds the supported search-disk size");
    }
    Frac128 lo{0, 1};
    if (window_lo) {
        auto f = frac_from_rat(*window_lo);
        if (!f) throw std::domain_error("search: bound exceeds the supported search-disk size");
        lo = *f;
    }
    OriginSearch search(spec, scan_norm_for(mode, bound), cap, targets, threads, lo, seeds);
    return search.run();
}

// Rebuilds the exact-rational circle and its point list from a packed engine
// hit; the recount through the public exact path doubles as a consistency
// check on the engine.
inline UcResult materialize(const LatticeSpec& spec, int n, const BinEntry& bin, bool certified,
                            const BigRat& bound_used, SearchMode mode) {
    BigRat cx(bin.circle.a, bin.circle.w);
    BigRat cy(bin.circle.b, bin.circle.w);
    BigRat r2 = cx * cx + BigRat(spec.d) * cy * cy;
    Circle witness(QPoint{cx, cy}, r2);
    OnCircle on = count_on_circle(spec, witness);
    if (on.count != bin.count || on.count != n) {
        throw std::logic_error("search: engine count disagrees with exact recount");
    }
    return UcResult{spec.d, n, r2, witness, std::move(on.points), certified, bound_used, mode};
}

}  // namespace detail

/**
 * uc(lattice, n): squared radius of the smallest circle passing through
 * exactly n lattice points, together with the witness circle and its points.
 *
 * Certified mode proves global minimality by iterative deepening; heuristic
 * mode reports the best value realized within the fixed scan region (an
 * upper bound on the true invariant). Throws bound_exhausted_error when the
 * deepening cap (or the heuristic region) is exhausted without a hit.
 */
inline UcResult uc(const LatticeSpec& spec, int n, const SearchConfig& cfg) {
    if (n < 3) throw std::invalid_argument("uc: unsupported-n (n must be at least 3)");
    if (cfg.bound.sgn() <= 0) throw std::invalid_argument("uc: bound must be positive");
    std::vector<long long> targets{n};

    if (cfg.mode == SearchMode::Heuristic) {
        auto res = detail::run_origin_search(spec, cfg.mode, cfg.bound, targets, cfg.threads);
        auto it = res.bins.find(n);
        if (it == res.bins.end())
            throw bound_exhausted_error("uc: no circle with exactly n points in the scan region",
                                        std::nullopt, cfg.bound);
        return detail::materialize(spec, n, it->second, false, cfg.bound, cfg.mode);
    }

    // Iterative deepening; each round is seeded with the previous round's
    // minima and scans only the fresh (prev, B] radius window.
    BigRat b = cfg.bound;
    std::optional<BigRat> prev;
    std::map<long long, detail::BinEntry> seeds;
    while (true) {
        auto res = detail::run_origin_search(spec, cfg.mode, b, targets, cfg.threads,
                                             prev ? &*prev : nullptr, prev ? &seeds : nullptr);
        auto it = res.bins.find(n);
        if (it != res.bins.end()) return detail::materialize(spec, n, it->second, true, b, cfg.mode);
        if (b >= cfg.bound_cap)
            throw bound_exhausted_error("uc: bound cap exhausted without a hit", std::nullopt, b);
        prev = b;
        seeds = std::move(res.bins);
        b = b * BigRat(2);
        if (b > cfg.bound_cap) b = cfg.bound_cap;
    }
}

/**
 * One shared enumeration answers every n in [n_lo, n_hi]: per-circle counts
 * are binned and per-n minima extracted. Counts with no qualifying circle
 * are reported as entries without a result rather than omitted.
 */
inline std::vector<UcTableEntry> uc_table(const LatticeSpec& spec, int n_lo, int n_hi,
                                          const SearchConfig& cfg) {
    if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("uc_table: need 3 <= n_lo <= n_hi");
    if (cfg.bound.sgn() <= 0) throw std::invalid_argument("uc_table: bound must be positive");
    std::vector<long long> targets;
    for (int n = n_lo; n <= n_hi; ++n) targets.push_back(n);

    detail::OriginSearchResult res;
    BigRat bound_used = cfg.bound;
    if (cfg.mode == SearchMode::Heuristic) {
        res = detail::run_origin_search(spec, cfg.mode, cfg.bound, targets, cfg.threads);
    } else {
        std::optional<BigRat> prev;
        std::map<long long, detail::BinEntry> seeds;
        while (true) {
            res = detail::run_origin_search(spec, cfg.mode, bound_used, targets, cfg.threads,
                                            prev ? &*prev : nullptr, prev ? &seeds : nullptr);
            if (res.all_targets_filled || bound_used >= cfg.bound_cap) break;
            prev = bound_used;
            seeds = std::move(res.bins);
            bound_used = bound_used * BigRat(2);
            if (bound_used > cfg.bound_cap) bound_used = cfg.bound_cap;
        }
    }

    std::vector<UcTableEntry> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto it = res.bins.find(n);
        if (it == res.bins.end()) {
            out.push_back(UcTableEntry{n, std::nullopt, bound_used});
        } else {
            bool cert = cfg.mode == SearchMode::Certified;
            out.push_back(UcTableEntry{
                n, detail::materialize(spec, n, it->second, cert, bound_used, cfg.mode), bound_used});
        }
    }
    return out;
}

/**
 * True iff the scan disk used by the search was wide enough to guarantee the
 * result is the global minimum: the disk radius must be at least
 * 2*sqrt(min_radius2), since any two points on a circle lie within one
 * diameter of each other. Compared exactly by squaring.
 */
inline bool certify_completeness(const LatticeSpec&, const UcResult& res) {
    if (res.mode == SearchMode::Certified) {
        // Disk radius 2*sqrt(B) vs 2*sqrt(D): complete iff D <= B.
        return res.min_radius2 <= res.bound_used;
    }
    // Disk radius ell vs 2*sqrt(D): complete iff ell^2 >= 4 D.
    return res.bound_used * res.bound_used >= BigRat(4) * res.min_radius2;
}

}  // namespace uclat
