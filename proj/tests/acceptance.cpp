// Acceptance suite: runs each acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "uclat/golden.hpp"
#include "uclat/rings.hpp"
#include "uclat/search.hpp"

using namespace uclat;

namespace {

int g_threads = 2;

struct Outcome {
    bool pass = true;
    std::ostringstream notes;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const std::string& name, const Outcome& o, double secs) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                secs);
    std::string n = o.notes.str();
    if (!n.empty()) std::printf("%s", n.c_str());
    std::fflush(stdout);
}

// ---- criteria 1-3: golden table tiers ----

void check_tier(Outcome& o, const std::vector<int>& ds, SearchMode mode, const BigRat& bound,
                bool expect_certified) {
    for (int d : ds) {
        auto spec = LatticeSpec::for_d(d);
        SearchConfig cfg;
        cfg.mode = mode;
        cfg.bound = bound;
        cfg.threads = g_threads;
        auto rows = uc_table(spec, 3, 10, cfg);
        for (const auto& e : rows) {
            auto g = golden_uc(d, e.n);
            if (!e.result) {
                o.pass = false;
                o.notes << "    d=" << d << " n=" << e.n << ": no circle found, expected "
                        << g->str() << "\n";
                continue;
            }
            if (e.result->min_radius2 != *g) {
                o.pass = false;
                o.notes << "    d=" << d << " n=" << e.n << ": got "
                        << e.result->min_radius2.str() << ", expected " << g->str() << "\n";
            }
            if (e.result->certified != expect_certified) {
                o.pass = false;
                o.notes << "    d=" << d << " n=" << e.n << ": certification flag wrong\n";
            }
        }
    }
}

// Independent witness construction for a prescribed squared radius D = M/m^2:
// points on a circle with center gamma/m correspond to delta in O_K with
// N(delta) = M and delta = -gamma (mod m O_K). A residue class with exactly
// n solutions exhibits a circle through exactly n lattice points.
struct WitnessInfo {
    bool found = false;
    Circle circle{QPoint{BigRat(0), BigRat(0)}, BigRat(1)};
    double min_region_radius = 0.0;
};

WitnessInfo find_witness_by_norm_classes(int d, const BigRat& target_d, long long n_target,
                                         long long m) {
    WitnessInfo out;
    BigRat m2d = BigRat(m * m) * target_d;
    if (!m2d.is_integer()) return out;
    long long big_m = m2d.num().to_int64();
    long long four_m = 4 * big_m;
    long long tmax = isqrt_ll(four_m / d);

    std::map<std::pair<long long, long long>, std::vector<std::pair<long long, long long>>> classes;
    for (long long t = -tmax; t <= tmax; ++t) {
        long long rem = four_m - d * t * t;
        long long s;
        if (!is_square_ll(rem, s)) continue;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            long long ss = sign ? -s : s;
            if (((ss - t) & 1) != 0) continue;
            // delta = a + b*(1+sqrt(-d))/2 with 2a + b = ss, b = t.
            long long a = (ss - t) / 2, b = t;
            classes[{((a % m) + m) % m, ((b % m) + m) % m}].push_back({a, b});
        }
    }
    auto spec = LatticeSpec::for_d(d);
    for (const auto& [key, sols] : classes) {
        if (static_cast<long long>(sols.size()) != n_target) continue;
        BigRat cx(-(2 * key.first + key.second), 2 * m);
        BigRat cy(-key.second, 2 * m);
        Circle c(QPoint{cx, cy}, target_d);
        OnCircle on = count_on_circle(spec, c);
        if (on.count != n_target) continue;
        double best = 1e300;
        for (const auto& p : on.points) {
            std::vector<double> dists;
            QPoint ep = embed(spec, p);
            for (const auto& q : on.points) {
                if (q == p) continue;
                dists.push_back(std::sqrt(dist2(spec, ep, embed(spec, q)).to_double()));
            }
            std::sort(dists.begin(), dists.end());
            if (dists.size() >= 2 && dists[1] < best) best = dists[1];
        }
        out.found = true;
        out.circle = c;
        out.min_region_radius = best;
        return out;
    }
    return out;
}

void heuristic_tier_witness_notes(Outcome& o) {
    struct Cell {
        int d;
        int n;
        long long m;  // smallest m with m^2 * uc integral
    };
    o.notes << "    note: independent witness check of the heuristic-tier reference values\n";
    for (const Cell& c : {Cell{67, 7, 201}, Cell{67, 10, 67}, Cell{163, 5, 489},
                          Cell{163, 7, 978}, Cell{163, 10, 489}}) {
        auto g = golden_uc(c.d, c.n);
        WitnessInfo w = find_witness_by_norm_classes(c.d, *g, c.n, c.m);
        if (w.found) {
            o.notes << "    note: d=" << c.d << " n=" << c.n << ": circle with exactly " << c.n
                    << " points at D=" << g->str() << " exists (center ("
                    << w.circle.center.x.str() << ", " << w.circle.center.y.str()
                    << ")); smallest region radius reaching it: " << std::fixed
                    << w.min_region_radius << "\n";
        } else {
            o.notes << "    note: d=" << c.d << " n=" << c.n
                    << ": witness construction FAILED - reference value unconfirmed\n";
        }
    }
}

// ---- criterion 5: oracle equivalence on Z^2, disk radius 5 ----

std::map<long long, BigRat> reduced_map_z2() {
    auto spec = LatticeSpec::for_d(1);
    SearchConfig cfg;
    cfg.mode = SearchMode::Heuristic;
    cfg.bound = BigRat(5);
    std::map<long long, BigRat> m;
    for (const auto& ec : enumerate_circles(spec, cfg)) {
        auto it = m.find(ec.count);
        if (it == m.end() || ec.circle.radius2 < it->second) m[ec.count] = ec.circle.radius2;
    }
    return m;
}

std::map<long long, BigRat> naive_map_z2() {
    auto spec = LatticeSpec::for_d(1);
    auto pts = points_in_disk(spec, QPoint{BigRat(0), BigRat(0)}, BigRat(25));
    const LatticePoint origin{0, 0};
    std::map<long long, BigRat> m;
    for (const auto& p2 : pts) {
        auto [u2, v2] = scaled_coords(spec, p2);
        if (u2 == 0 && v2 == 0) continue;
        for (const auto& p3 : pts) {
            auto [u3, v3] = scaled_coords(spec, p3);
            if (u2 * v3 - u3 * v2 == 0) continue;
            Circle c = circumcircle(spec, origin, p2, p3);
            OnCircle on = count_on_circle(spec, c);
            auto it = m.find(on.count);
            if (it == m.end() || c.radius2 < it->second) m[on.count] = c.radius2;
        }
    }
    return m;
}

// ---- criterion 6 helpers ----

bool collinear(const LatticeSpec& spec, const LatticePoint& p1, const LatticePoint& p2,
               const LatticePoint& p3) {
    auto [u2, v2] = scaled_coords(spec, LatticePoint{p2.a - p1.a, p2.b - p1.b});
    auto [u3, v3] = scaled_coords(spec, LatticePoint{p3.a - p1.a, p3.b - p1.b});
    return u2 * v3 - u3 * v2 == 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_threads = std::atoi(argv[1]);
    int failures = 0;
    std::printf("acceptance suite (threads=%d)\n", g_threads);

    // 1. Golden table, certified tier: d in {1,2,7,11}, n = 3..10, exact.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        check_tier(o, {1, 2, 7, 11}, SearchMode::Certified, BigRat(4), true);
        report(1, "golden table, certified tier (d=1,2,7,11; n=3..10)", o, seconds_since(t0));
        failures += !o.pass;
    }

    // 2. Golden table, certified tier 2: d in {3,19,43}.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        check_tier(o, {3, 19, 43}, SearchMode::Certified, BigRat(4), true);
        report(2, "golden table, certified tier 2 (d=3,19,43; n=3..10)", o, seconds_since(t0));
        failures += !o.pass;
    }

    // 3. Golden table, heuristic tier: d in {67,163}, region radius 50, as
    // specified. Followed by an informational witness check of the reference
    // values themselves.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        check_tier(o, {67, 163}, SearchMode::Heuristic, BigRat(50), false);
        heuristic_tier_witness_notes(o);
        report(3, "golden table, heuristic tier (d=67,163; n=3..10; ell=50)", o,
               seconds_since(t0));
        failures += !o.pass;
    }

    // 4. Explicit prime-product circles: counts 2^(ell+2) and 6*2^m for
    // ell, m = 0..6, each cross-checked against representation counting.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        for (int ell = 0; ell <= 6; ++ell) {
            try {
                auto r = thm2_gauss_circle(ell);
                if (r.count != (4LL << ell)) {
                    o.pass = false;
                    o.notes << "    gauss ell=" << ell << ": count " << r.count << "\n";
                }
            } catch (const std::exception& e) {
                o.pass = false;
                o.notes << "    gauss ell=" << ell << ": " << e.what() << "\n";
            }
        }
        for (int m = 0; m <= 6; ++m) {
            try {
                auto r = thm2_eisenstein_circle(m);
                if (r.count != (6LL << m)) {
                    o.pass = false;
                    o.notes << "    eisenstein m=" << m << ": count " << r.count << "\n";
                }
            } catch (const std::exception& e) {
                o.pass = false;
                o.notes << "    eisenstein m=" << m << ": " << e.what() << "\n";
            }
        }
        report(4, "explicit circle constructions (ell,m = 0..6)", o, seconds_since(t0));
        failures += !o.pass;
    }

    // 5. Oracle equivalence on Z^2 with scan disk radius 5: reduced and
    // deduplicated enumeration vs naive all-triples enumeration.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        auto reduced = reduced_map_z2();
        auto naive = naive_map_z2();
        if (reduced != naive) {
            o.pass = false;
            o.notes << "    per-count minimal D maps differ (reduced " << reduced.size()
                    << " counts, naive " << naive.size() << ")\n";
        }
        report(5, "oracle equivalence (Z^2, disk radius 5)", o, seconds_since(t0));
        failures += !o.pass;
    }

    // 6. Property suites, all exact.
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        std::mt19937_64 rng(20250808);

        // Circumcircle substitution identity, 1000 non-collinear triples per lattice.
        for (const auto& spec : LatticeSpec::all()) {
            std::uniform_int_distribution<long long> coord(-9, 9);
            int done = 0;
            while (done < 1000) {
                LatticePoint p1{coord(rng), coord(rng)}, p2{coord(rng), coord(rng)},
                    p3{coord(rng), coord(rng)};
                if (p1 == p2 || p1 == p3 || p2 == p3 || collinear(spec, p1, p2, p3)) continue;
                Circle c = circumcircle(spec, p1, p2, p3);
                for (const auto& p : {p1, p2, p3}) {
                    if (dist2(spec, embed(spec, p), c.center) != c.radius2) {
                        o.pass = false;
                        o.notes << "    substitution identity failed (d=" << spec.d << ")\n";
                    }
                }
                ++done;
            }
        }

        // Point-group invariance of counts, 100 circles per lattice.
        for (const auto& spec : LatticeSpec::all()) {
            std::uniform_int_distribution<long long> coord(-5, 5);
            int done = 0;
            while (done < 100) {
                LatticePoint p1{coord(rng), coord(rng)}, p2{coord(rng), coord(rng)},
                    p3{coord(rng), coord(rng)};
                if (p1 == p2 || p1 == p3 || p2 == p3 || collinear(spec, p1, p2, p3)) continue;
                Circle c = circumcircle(spec, p1, p2, p3);
                long long base = count_on_circle(spec, c).count;
                for (const auto& iso : point_group(spec)) {
                    Circle mapped(iso.apply(c.center), c.radius2);
                    if (count_on_circle(spec, mapped).count != base) {
                        o.pass = false;
                        o.notes << "    point-group invariance failed (d=" << spec.d << ")\n";
                    }
                }
                ++done;
            }
        }

        // Membership/embed round trip, ~10^4 points across the nine lattices.
        for (const auto& spec : LatticeSpec::all()) {
            std::uniform_int_distribution<long long> coord(-1000, 1000);
            for (int i = 0; i < 1112; ++i) {
                LatticePoint p{coord(rng), coord(rng)};
                auto back = membership(spec, embed(spec, p));
                if (!back || !(*back == p)) {
                    o.pass = false;
                    o.notes << "    membership round trip failed (d=" << spec.d << ")\n";
                }
            }
        }

        // Parity lemma: all representations of 2*prod(p_0..ell) are odd/odd.
        {
            auto ps = primes_in_class(ResidueClass::OneMod4, 6);
            for (int ell = 0; ell <= 6; ++ell) {
                long long prod = 1;
                for (int k = 0; k <= ell; ++k) prod *= ps.values[k];
                if (rep_count_gauss(2 * prod, true) != rep_count_gauss(2 * prod, false)) {
                    o.pass = false;
                    o.notes << "    parity lemma failed at ell=" << ell << "\n";
                }
            }
        }

        // Exactness laws for the rational substrate.
        {
            std::uniform_int_distribution<long long> num(-100000, 100000);
            std::uniform_int_distribution<long long> den(1, 100000);
            for (int i = 0; i < 2000; ++i) {
                BigRat a(num(rng), den(rng));
                BigRat b(num(rng), den(rng));
                if ((a + b) - b != a) o.pass = false;
                if (!b.is_zero() && (a * b) / b != a) o.pass = false;
                BigRat q(num(rng), den(rng));
                auto r = rat_sqrt_exact(q * q);
                if (!r || *r != abs(q)) o.pass = false;
                BigRat nn(std::abs(num(rng)), den(rng));
                BigInt fs = rat_floor_sqrt(nn);
                if (BigRat(fs * fs) > nn || nn >= BigRat((fs + BigInt(1)) * (fs + BigInt(1))))
                    o.pass = false;
            }
        }

        report(6, "property suites (exact, no tolerances)", o, seconds_since(t0));
        failures += !o.pass;
    }

    // 7. Bound consistency: search values never exceed the explicit circle
    // bounds; equality at (ell=0, n=4), (ell=1, n=8), (m=0, n=6).
    {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        SearchConfig cfg;
        cfg.threads = g_threads;
        auto z2 = LatticeSpec::for_d(1);
        auto eis = LatticeSpec::for_d(3);
        auto ps = primes_in_class(ResidueClass::OneMod4, 6);
        auto qs = primes_in_class(ResidueClass::OneMod3, 6);

        struct Check {
            bool gauss;
            int k;
            bool expect_equal;
        };
        for (const Check& c : {Check{true, 0, true}, Check{true, 1, true}, Check{true, 2, false},
                               Check{true, 3, false}, Check{false, 0, true},
                               Check{false, 1, false}, Check{false, 2, false}}) {
            long long prod = 1;
            for (int i = 0; i <= c.k; ++i) prod *= (c.gauss ? ps : qs).values[i];
            BigRat bound = c.gauss ? BigRat(prod, 2) : BigRat(prod);
            int n = c.gauss ? (4 << c.k) : (6 << c.k);
            UcResult r = uc(c.gauss ? z2 : eis, n, cfg);
            if (r.min_radius2 > bound) {
                o.pass = false;
                o.notes << "    uc(" << (c.gauss ? 1 : 3) << ", " << n << ") = "
                        << r.min_radius2.str() << " exceeds bound " << bound.str() << "\n";
            }
            if (c.expect_equal && r.min_radius2 != bound) {
                o.pass = false;
                o.notes << "    uc(" << (c.gauss ? 1 : 3) << ", " << n << ") = "
                        << r.min_radius2.str() << " expected to equal bound " << bound.str()
                        << "\n";
            }
        }
        report(7, "bound consistency with the explicit circles", o, seconds_since(t0));
        failures += !o.pass;
    }

    std::printf("%d of 7 criteria passed\n", 7 - failures);
    return failures;
}
