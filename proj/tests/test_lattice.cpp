#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "uclat/lattice.hpp"

using namespace uclat;

namespace {

// Independent disk oracle: scan a safely oversized box in basis coordinates
// and keep points by the exact distance test.
std::vector<LatticePoint> naive_points_in_disk(const LatticeSpec& spec, const QPoint& center,
                                               const BigRat& bound) {
    std::vector<LatticePoint> out;
    long long reach = rat_floor_sqrt(bound).to_int64() + 1;
    long long cx = center.x.floor().to_int64();
    long long cy = center.y.floor().to_int64();
    long long box = 2 * reach + 4;
    for (long long a = cx - 2 * box; a <= cx + 2 * box; ++a) {
        for (long long b = cy - 2 * box; b <= cy + 2 * box; ++b) {
            LatticePoint p{a, b};
            QPoint e = embed(spec, p);
            if (dist2(spec, e, center) <= bound) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [&](const LatticePoint& p, const LatticePoint& q) {
        return scaled_coords(spec, p) < scaled_coords(spec, q);
    });
    return out;
}

}  // namespace

TEST_CASE("the nine lattice specs") {
    CHECK_THROWS_AS(LatticeSpec::for_d(5), std::invalid_argument);
    CHECK_THROWS_AS(LatticeSpec::for_d(0), std::invalid_argument);

    CHECK(LatticeSpec::for_d(1).basis_case == BasisCase::A);
    CHECK(LatticeSpec::for_d(2).basis_case == BasisCase::A);
    for (int d : {3, 7, 11, 19, 43, 67, 163}) {
        CHECK(LatticeSpec::for_d(d).basis_case == BasisCase::B);
    }

    CHECK(LatticeSpec::for_d(1).discriminant == -4);
    CHECK(LatticeSpec::for_d(2).discriminant == -8);
    for (int d : {3, 7, 11, 19, 43, 67, 163}) {
        CHECK(LatticeSpec::for_d(d).discriminant == -d);
    }
    CHECK(LatticeSpec::all().size() == 9);
}

TEST_CASE("membership examples") {
    auto z2 = LatticeSpec::for_d(1);
    auto m = membership(z2, QPoint{BigRat(3), BigRat(-2)});
    REQUIRE(m.has_value());
    CHECK(*m == LatticePoint{3, -2});

    auto eis = LatticeSpec::for_d(3);
    auto m2 = membership(eis, QPoint{BigRat(1, 2), BigRat(1, 2)});
    REQUIRE(m2.has_value());
    CHECK(*m2 == LatticePoint{1, 1});

    CHECK(!membership(eis, QPoint{BigRat(1, 2), BigRat(1, 3)}).has_value());
    CHECK(!membership(z2, QPoint{BigRat(1, 2), BigRat(0)}).has_value());
}

TEST_CASE("membership/embed round trip") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<long long> coord(-50, 50);
    for (const auto& spec : LatticeSpec::all()) {
        for (int i = 0; i < 1200; ++i) {
            LatticePoint p{coord(rng), coord(rng)};
            auto back = membership(spec, embed(spec, p));
            REQUIRE(back.has_value());
            CHECK(*back == p);
        }
    }
}

TEST_CASE("norm2 examples") {
    CHECK(norm2(LatticeSpec::for_d(1), QPoint{BigRat(1), BigRat(1)}) == BigRat(2));
    CHECK(norm2(LatticeSpec::for_d(3), QPoint{BigRat(1, 2), BigRat(1, 2)}) == BigRat(1));
    // (1 + 163) / 4
    CHECK(norm2(LatticeSpec::for_d(163), QPoint{BigRat(1, 2), BigRat(1, 2)}) == BigRat(41));
}

TEST_CASE("points_in_disk examples") {
    QPoint origin{BigRat(0), BigRat(0)};

    auto z2 = points_in_disk(LatticeSpec::for_d(1), origin, BigRat(1));
    CHECK(z2.size() == 5);

    auto eis = points_in_disk(LatticeSpec::for_d(3), origin, BigRat(1));
    CHECK(eis.size() == 7);

    auto d2 = points_in_disk(LatticeSpec::for_d(2), origin, BigRat(2));
    CHECK(d2.size() == 5);
    std::set<std::pair<long long, long long>> got;
    for (const auto& p : d2) got.insert({p.a, p.b});
    CHECK(got == std::set<std::pair<long long, long long>>{
                     {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST_CASE("points_in_disk agrees with the naive oracle") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long long> num(-8, 8);
    std::uniform_int_distribution<long long> den(1, 4);
    std::uniform_int_distribution<long long> bnum(0, 60);
    for (const auto& spec : LatticeSpec::all()) {
        for (int i = 0; i < 12; ++i) {
            QPoint center{BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng))};
            BigRat bound(bnum(rng), den(rng));
            auto fast = points_in_disk(spec, center, bound);
            auto naive = naive_points_in_disk(spec, center, bound);
            CHECK(fast == naive);
        }
    }
}

TEST_CASE("every returned point satisfies membership and the bound") {
    auto spec = LatticeSpec::for_d(7);
    QPoint center{BigRat(1, 2), BigRat(3, 2)};
    BigRat bound(37, 3);
    for (const auto& p : points_in_disk(spec, center, bound)) {
        QPoint e = embed(spec, p);
        auto back = membership(spec, e);
        REQUIRE(back.has_value());
        CHECK(*back == p);
        CHECK(dist2(spec, e, center) <= bound);
    }
}

TEST_CASE("point group") {
    auto spec = LatticeSpec::for_d(7);
    auto group = point_group(spec);
    CHECK(group.size() == 4);
    CHECK(group[0] == Isometry{1, 1});

    // Conjugating (a, b) = (0, 1), embedded (-1/2, 1/2), gives (-1/2, -1/2),
    // which is the lattice point (-1, -1).
    Isometry conj{1, -1};
    LatticePoint p{0, 1};
    QPoint image = conj.apply(embed(spec, p));
    auto m = membership(spec, image);
    REQUIRE(m.has_value());
    CHECK(*m == LatticePoint{-1, -1});
    CHECK(conj.apply(spec, p) == LatticePoint{-1, -1});

    // Involutions compose to the identity.
    for (const auto& spec2 : LatticeSpec::all()) {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long long> coord(-20, 20);
        for (const auto& iso : group) {
            for (int i = 0; i < 50; ++i) {
                LatticePoint p2{coord(rng), coord(rng)};
                CHECK(iso.apply(spec2, iso.apply(spec2, p2)) == p2);
                // Group elements act consistently with the embedding.
                CHECK(embed(spec2, iso.apply(spec2, p2)) == iso.apply(embed(spec2, p2)));
            }
        }
    }
}

TEST_CASE("origin disks are closed under the point group") {
    for (const auto& spec : LatticeSpec::all()) {
        auto pts = points_in_disk(spec, QPoint{BigRat(0), BigRat(0)}, BigRat(30));
        std::set<std::pair<long long, long long>> have;
        for (const auto& p : pts) have.insert({p.a, p.b});
        for (const auto& iso : point_group(spec)) {
            for (const auto& p : pts) {
                LatticePoint q = iso.apply(spec, p);
                CHECK(have.count({q.a, q.b}) == 1);
            }
        }
    }
}

TEST_CASE("degenerate disks") {
    auto eis = LatticeSpec::for_d(3);

    // Zero radius about a lattice point: exactly that point.
    QPoint at = embed(eis, LatticePoint{2, 1});
    auto only = points_in_disk(eis, at, BigRat(0));
    REQUIRE(only.size() == 1);
    CHECK(only[0] == LatticePoint{2, 1});

    // Zero radius off the lattice: nothing.
    CHECK(points_in_disk(eis, QPoint{BigRat(1, 3), BigRat(0)}, BigRat(0)).empty());

    // Negative bound: nothing.
    CHECK(points_in_disk(eis, at, BigRat(-1)).empty());
}

TEST_CASE("point density approaches 1/covolume") {
    for (const auto& spec : LatticeSpec::all()) {
        double covol = spec.basis_case == BasisCase::A ? std::sqrt(double(spec.d))
                                                       : std::sqrt(double(spec.d)) / 2.0;
        for (long long r2 : {100, 400}) {
            auto pts = points_in_disk(spec, QPoint{BigRat(0), BigRat(0)}, BigRat(r2));
            double expected = M_PI * double(r2) / covol;
            double ratio = double(pts.size()) / expected;
            CHECK(ratio > 0.85);
            CHECK(ratio < 1.15);
        }
    }
}
