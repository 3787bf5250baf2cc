#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "swc/rat.hpp"

using namespace swc;

namespace {

/* Independent oracle: rational arithmetic on (long long) pairs reduced with
 * std::gcd, no GMP involved. Values are kept small enough not to overflow. */
struct SmallQ {
    long long p, q; // q > 0, reduced

    static SmallQ make(long long p, long long q) {
        if (q < 0) {
            p = -p;
            q = -q;
        }
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g == 0)
            g = 1;
        return {p / g, q / g};
    }
    SmallQ add(const SmallQ& o) const { return make(p * o.q + o.p * q, q * o.q); }
    SmallQ sub(const SmallQ& o) const { return make(p * o.q - o.p * q, q * o.q); }
    SmallQ mul(const SmallQ& o) const { return make(p * o.p, q * o.q); }
    SmallQ div(const SmallQ& o) const { return make(p * o.q, q * o.p); }
};

Rat lift(const SmallQ& x) { return rat(x.p, x.q); }

} // namespace

TEST_CASE("rat construction reduces to lowest terms with positive denominator") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat_str(rat(2, -4)) == "-1/2");
    CHECK_THROWS_AS(rat(1, 0), DomainError);
}

TEST_CASE("rat parse/serialize round trip") {
    CHECK(parse_rat("7/5") == rat(7, 5));
    CHECK(parse_rat("-7/5") == rat(-7, 5));
    CHECK(parse_rat("3") == rat(3));
    CHECK(rat_str(rat(3)) == "3/1");
    CHECK(rat_str(rat(0)) == "0/1");
    CHECK(parse_rat(rat_str(rat(-22, 7))) == rat(-22, 7));
    CHECK_THROWS_AS(parse_rat(""), DomainError);
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rat("x/3"), DomainError);
}

TEST_CASE("rat arithmetic matches an independent small-integer oracle") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 40);
    for (int i = 0; i < 2000; ++i) {
        SmallQ a = SmallQ::make(num(rng), den(rng));
        SmallQ b = SmallQ::make(num(rng), den(rng));
        Rat ra = lift(a), rb = lift(b);
        CHECK(ra + rb == lift(a.add(b)));
        CHECK(ra - rb == lift(a.sub(b)));
        CHECK(ra * rb == lift(a.mul(b)));
        if (b.p != 0)
            CHECK(ra / rb == lift(a.div(b)));
        CHECK((ra < rb) == (a.p * b.q < b.p * a.q));
    }
}

TEST_CASE("rat_floor uses floor semantics for negatives") {
    CHECK(rat_floor(rat(7, 2)) == 3);
    CHECK(rat_floor(rat(-7, 2)) == -4);
    CHECK(rat_floor(rat(4)) == 4);
    CHECK(rat_is_integer(rat(8, 2)));
    CHECK(!rat_is_integer(rat(7, 2)));
}

TEST_CASE("pow2 and signed half powers") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(half_pow_signed(0) == rat(1));
    CHECK(half_pow_signed(1) == rat(-1, 2));
    CHECK(half_pow_signed(2) == rat(1, 4));
    CHECK(half_pow_signed(5) == rat(-1, 32));
}

TEST_CASE("point_str") {
    CHECK(point_str({rat(1, 3), rat(1, 2)}) == "(1/3, 1/2)");
}
