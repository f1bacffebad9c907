#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tl/ring.hpp"

using namespace tl;

TEST_CASE("ring tags parse and print") {
    CHECK(RingSpec::integers().tag() == "Z");
    CHECK(RingSpec::rationals().tag() == "Q");
    CHECK(RingSpec::prime_field(5).tag() == "Fp:5");
    CHECK(RingSpec::parse_tag("Fp:7") == RingSpec::prime_field(7));
    CHECK_THROWS_AS(RingSpec::prime_field(6), invalid_input);
    CHECK_THROWS_AS(RingSpec::parse_tag("Fp:abc"), invalid_input);
}

TEST_CASE("context over F_5 with v=2, theta1") {
    auto F5 = RingSpec::prime_field(5);
    auto ctx = make_context(F5, FromUnit{RingValue::from_long(F5, 2)});
    // 2^-1 = 3 in F_5, so a = 2 + 3 = 0; q = 4; lambda = -1 = 4; mu = 2
    CHECK(ctx.a == RingValue::zero(F5));
    CHECK(*ctx.q == RingValue::from_long(F5, 4));
    CHECK(*ctx.lambda == RingValue::from_long(F5, 4));
    CHECK(*ctx.mu == RingValue::from_long(F5, 2));
}

TEST_CASE("context over Z with v=1") {
    auto Z = RingSpec::integers();
    auto ctx = make_context(Z, FromUnit{RingValue::from_long(Z, 1)});
    CHECK(ctx.a == RingValue::from_long(Z, 2));
    CHECK(*ctx.q == RingValue::one(Z));
    CHECK(*ctx.lambda == RingValue::from_long(Z, -1));
    CHECK(*ctx.mu == RingValue::one(Z));
}

TEST_CASE("direct-a context has no unit data") {
    auto Q = RingSpec::rationals();
    auto ctx = make_context(Q, DirectA{RingValue::from_long(Q, 3)});
    CHECK(ctx.a == RingValue::from_long(Q, 3));
    CHECK(!ctx.has_unit());
    CHECK_THROWS_AS(ctx.require_v(), invalid_input);
}

TEST_CASE("non-unit v rejected") {
    auto Z = RingSpec::integers();
    CHECK_THROWS_AS(make_context(Z, FromUnit{RingValue::from_long(Z, 2)}), invalid_input);
}

TEST_CASE("theta2 parameters") {
    auto Q = RingSpec::rationals();
    auto ctx = make_context(Q, FromUnit{RingValue::from_long(Q, 1)}, ThetaChoice::Theta2);
    CHECK(*ctx.lambda == RingValue::one(Q));   // v^2
    CHECK(*ctx.mu == RingValue::from_long(Q, -1));  // -v
}

TEST_CASE("annihilator of a") {
    auto Z = RingSpec::integers();
    auto F2 = RingSpec::prime_field(2);
    auto Q = RingSpec::rationals();
    CHECK(annihilator_of_a(make_context(Z, DirectA{RingValue::from_long(Z, 2)})) == Annihilator::Zero);
    CHECK(annihilator_of_a(make_context(F2, FromUnit{RingValue::one(F2)})) == Annihilator::WholeRing);
    CHECK(annihilator_of_a(make_context(Q, DirectA{RingValue::zero(Q)})) == Annihilator::WholeRing);
}

TEST_CASE("a is symmetric under v <-> v^-1") {
    for (auto ring : {RingSpec::prime_field(5), RingSpec::prime_field(7), RingSpec::rationals()}) {
        for (long raw = 1; raw < 7; ++raw) {
            RingValue v = RingValue::from_long(ring, raw);
            if (!v.is_unit()) continue;
            auto c1 = make_context(ring, FromUnit{v});
            auto c2 = make_context(ring, FromUnit{v.inverse()});
            CHECK(c1.a == c2.a);
        }
    }
}

TEST_CASE("lambda and mu are units") {
    for (auto theta : {ThetaChoice::Theta1, ThetaChoice::Theta2}) {
        auto F7 = RingSpec::prime_field(7);
        for (long raw = 1; raw < 7; ++raw) {
            auto ctx = make_context(F7, FromUnit{RingValue::from_long(F7, raw)}, theta);
            CHECK((*ctx.lambda * ctx.lambda->inverse()).is_one());
            CHECK((*ctx.mu * ctx.mu->inverse()).is_one());
        }
    }
}

TEST_CASE("commutative-ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    auto rand_val = [&rng](const RingSpec& r) {
        long v = static_cast<long>(rng() % 2001) - 1000;
        if (r.kind() == RingKind::Rationals && rng() % 2) {
            long den = 1 + static_cast<long>(rng() % 40);
            return RingValue::from_mpq(r, mpq_class(v, den));
        }
        return RingValue::from_long(r, v);
    };
    for (auto ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::prime_field(5)}) {
        for (int it = 0; it < 300; ++it) {
            RingValue x = rand_val(ring), y = rand_val(ring), z = rand_val(ring);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + RingValue::zero(ring) == x);
            CHECK(x * RingValue::one(ring) == x);
            CHECK((x - x).is_zero());
        }
    }
}

TEST_CASE("rationals stored in lowest terms") {
    auto Q = RingSpec::rationals();
    CHECK(RingValue::parse(Q, "4/6").str() == "2/3");
    CHECK(RingValue::parse(Q, "-10/5").str() == "-2");
}
