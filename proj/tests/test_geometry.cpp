#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swc/geometry.hpp"

using namespace swc;

TEST_CASE("chart maps the listed rationals exactly") {
    CHECK(chart_fwd(rat(1, 2)) == rat(1));
    CHECK(chart_inv(rat(1, 3)) == rat(1, 4));
    CHECK(chart_inv(rat(2, 3)) == rat(2, 5));
    CHECK(chart_map(rat(1, 2), true) == rat(1));
    CHECK(chart_map(rat(1, 3), false) == rat(1, 4));
    CHECK_THROWS_AS(chart_fwd(rat(1)), DomainError);
    CHECK_THROWS_AS(chart_fwd(rat(0)), DomainError);
    CHECK_THROWS_AS(chart_fwd(rat(3, 2)), DomainError);
    CHECK_THROWS_AS(chart_inv(rat(0)), DomainError);
    CHECK_THROWS_AS(chart_inv(rat(-1)), DomainError);
}

TEST_CASE("chart round trip on 1000 random rationals in (0,1)") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> den(2, 5000);
    for (int i = 0; i < 1000; ++i) {
        long q = den(rng);
        std::uniform_int_distribution<long> num(1, q - 1);
        Rat t = rat(num(rng), q);
        CHECK(chart_inv(chart_fwd(t)) == t);
        Rat s = rat(num(rng), q) * 7; // any positive rational
        CHECK(chart_fwd(chart_inv(s)) == s);
    }
}

TEST_CASE("interval_of reproduces the seven explicitly listed boxes") {
    auto box = [](long long n, long long k) { return interval_of(n, k); };
    CHECK(box(0, 0).lo == rat(1, 3));
    CHECK(box(0, 0).hi == rat(2, 3));
    CHECK(box(1, 0).lo == rat(7, 6));
    CHECK(box(1, 0).hi == rat(8, 6));
    CHECK(box(1, 1).lo == rat(10, 6));
    CHECK(box(1, 1).hi == rat(11, 6));
    CHECK(box(2, 0).lo == rat(25, 12));
    CHECK(box(2, 0).hi == rat(26, 12));
    CHECK(box(2, 1).lo == rat(28, 12));
    CHECK(box(2, 1).hi == rat(29, 12));
    CHECK(box(2, 2).lo == rat(31, 12));
    CHECK(box(2, 2).hi == rat(32, 12));
    CHECK(box(2, 3).lo == rat(34, 12));
    CHECK(box(2, 3).hi == rat(35, 12));
}

TEST_CASE("interval_of general formula and index errors") {
    IntervalBox b = interval_of(5, 19);
    CHECK(b.lo == 5 + rat(1 + 3 * 19, 3 * 32));
    CHECK(b.hi == 5 + rat(2 + 3 * 19, 3 * 32));
    CHECK_THROWS_AS(interval_of(2, 4), IndexError);
    CHECK_THROWS_AS(interval_of(2, -1), IndexError);
    CHECK_THROWS_AS(interval_of(-1, 0), IndexError);
}

TEST_CASE("ball_of is the chart preimage of the interval") {
    Ball b00 = ball_of(0, 0);
    CHECK(b00.xlo == rat(1, 4));
    CHECK(b00.xhi == rat(2, 5));
    Ball b10 = ball_of(1, 0);
    CHECK(b10.xlo == rat(7, 13));
    CHECK(b10.xhi == rat(8, 14));
    for (long long n = 0; n <= 8; ++n) {
        Ball b = ball_of(n, (1ll << n) - 1);
        CHECK(b.xhi < 1);
        CHECK(b.xlo > 0);
    }
}

TEST_CASE("locate recovers the listed examples") {
    Point p{rat(1, 3), rat(1, 2)};
    auto loc = locate(p);
    REQUIRE(loc.has_value());
    CHECK(loc->n == 0);
    CHECK(loc->k == 0);

    Point boundary{rat(1, 2), rat(1, 2)}; // s = 1, slab boundary
    CHECK(!locate(boundary).has_value());

    Point outside{rat(3, 2), rat(1, 2)};
    CHECK(!locate(outside).has_value());
    Point face{rat(1, 3), rat(1)}; // cross coordinate on the cube face
    CHECK(!locate(face).has_value());
}

TEST_CASE("locate round trip on ball centers for n <= 6") {
    for (long long n = 0; n <= 6; ++n) {
        for (long long k = 0; k < (1ll << n); ++k) {
            Ball b = ball_of(n, k);
            Point p{b.center_x(), rat(1, 2)};
            auto loc = locate(p);
            REQUIRE(loc.has_value());
            CHECK(loc->n == n);
            CHECK(loc->k == k);
        }
    }
}

TEST_CASE("locate returns nothing at interval endpoints") {
    Ball b = ball_of(3, 5);
    CHECK(!locate(Point{b.xlo, rat(1, 2)}).has_value());
    CHECK(!locate(Point{b.xhi, rat(1, 2)}).has_value());
}

TEST_CASE("intervals at one level are pairwise disjoint and ordered by k") {
    for (long long n = 0; n <= 6; ++n) {
        Rat prev_hi = rat(0);
        for (long long k = 0; k < (1ll << n); ++k) {
            IntervalBox b = interval_of(n, k);
            CHECK(b.lo < b.hi);
            CHECK(b.lo > prev_hi);
            prev_hi = b.hi;
        }
        CHECK(prev_hi < n + 1);
    }
}

TEST_CASE("core ball shrinks the cross-section only") {
    CoreBall cb = core_ball_of(0, 0, rat(1, 8));
    CHECK(cb.base.xlo == rat(1, 4));
    CHECK(cb.delta == rat(1, 8));
    CHECK_THROWS_AS(core_ball_of(0, 0, rat(1, 2)), DomainError);
}

TEST_CASE("slab locate agrees with full locate through the chart") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long> den(2, 3000);
    for (int i = 0; i < 3000; ++i) {
        long q = den(rng);
        std::uniform_int_distribution<long> num(1, q - 1);
        Rat x = rat(num(rng), q);
        Point p{x, rat(1, 2)};
        auto a = locate(p);
        auto b = locate_slab(chart_fwd(x));
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(a->n == b->n);
            CHECK(a->k == b->k);
        }
    }
}
