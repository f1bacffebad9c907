#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tl/element.hpp"

using namespace tl;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

ParamContext ctx_z_v1() { return make_context(Z, FromUnit{RingValue::one(Z)}); }
ParamContext ctx_q_v1() { return make_context(Q, FromUnit{RingValue::one(Q)}); }
ParamContext ctx_f5_v2() {
    auto F5 = RingSpec::prime_field(5);
    return make_context(F5, FromUnit{RingValue::from_long(F5, 2)});
}

TLElement gen(const ParamContext& ctx, int n, int i) {
    return TLElement::from_generator(ctx.ring, n, i);
}

}  // namespace

TEST_CASE("from_word applies loop factors") {
    auto ctx = make_context(Z, DirectA{RingValue::from_long(Z, 2)});
    auto u1u1 = from_word(ctx, parse_word(2, "U1 U1"));
    CHECK(u1u1 == gen(ctx, 2, 1).scaled(RingValue::from_long(Z, 2)));

    auto ctx3 = make_context(Z, DirectA{RingValue::from_long(Z, 7)});
    CHECK(from_word(ctx3, parse_word(3, "U1 U2 U1")) == gen(ctx3, 3, 1));

    auto w = parse_word(5, "U2 U1 U4 U2 U3");
    auto direct = from_word(ctx3, w);
    auto target = from_word(ctx3, parse_word(5, "U4 U2 U3"));
    CHECK(direct == target);
}

TEST_CASE("multiply: section 2 product, identity, annihilation") {
    auto ctx = ctx_z_v1();  // a = 2
    auto x = from_word(ctx, parse_word(5, "U4 U1 U2"));
    auto y = from_word(ctx, parse_word(5, "U2 U3 U4 U1 U2"));
    auto xy = multiply(ctx, x, y);
    CHECK(xy == x.scaled(ctx.a));  // the section-2 figure: xy = a*x

    CHECK(multiply(ctx, TLElement::identity(5, Z), x) == x);

    // (U_1)(a - U_1) = 0
    auto u1 = gen(ctx, 2, 1);
    auto a_minus = TLElement::identity(2, Z).scaled(ctx.a) - u1;
    CHECK(multiply(ctx, u1, a_minus).is_zero());
    CHECK(multiply(ctx, a_minus, u1).is_zero());
}

TEST_CASE("defining relations for n <= 6") {
    auto ctx = make_context(Z, DirectA{RingValue::from_long(Z, 5)});
    for (int n = 2; n <= 6; ++n) {
        for (int i = 1; i < n; ++i) {
            auto ui = gen(ctx, n, i);
            CHECK(multiply(ctx, ui, ui) == ui.scaled(ctx.a));
            for (int j = 1; j < n; ++j) {
                auto uj = gen(ctx, n, j);
                if (std::abs(i - j) >= 2)
                    CHECK(multiply(ctx, ui, uj) == multiply(ctx, uj, ui));
                if (std::abs(i - j) == 1)
                    CHECK(multiply(ctx, multiply(ctx, ui, uj), ui) == ui);
            }
        }
    }
}

TEST_CASE("jones_normal_form") {
    auto [k1, w1] = jones_normal_form(parse_word(5, "U2 U1 U4 U2 U3"));
    CHECK(k1 == 0);
    CHECK(render_jones_word(w1) == "(U4)(U2 U3)");

    auto [k2, w2] = jones_normal_form(parse_word(2, "U1 U1"));
    CHECK(k2 == 1);
    CHECK(render_jones_word(w2) == "(U1)");

    FreeWord empty{4, {}};
    auto [k3, w3] = jones_normal_form(empty);
    CHECK(k3 == 0);
    CHECK(w3.is_identity());
}

TEST_CASE("jones_normal_form terminus monotonicity on random words") {
    std::mt19937_64 rng(99);
    int samples_per_n = 2500;
    for (int n = 2; n <= 6; ++n) {
        for (int s = 0; s < samples_per_n; ++s) {
            int len = 1 + static_cast<int>(rng() % 12);
            FreeWord w{n, {}};
            for (int t = 0; t < len; ++t) w.letters.push_back(1 + static_cast<int>(rng() % (n - 1)));
            auto [k, jw] = jones_normal_form(w);
            (void)k;
            int tw = word_terminus(w), tj = word_terminus(jw);
            CHECK(tj <= tw);
            if (tj < tw) CHECK(tj <= tw - 2);
        }
    }
}

TEST_CASE("index and terminus of free words") {
    auto w = parse_word(5, "U4 U2 U3");
    CHECK(word_terminus(w) == 3);
    CHECK(word_index(w) == 2);
    CHECK(word_terminus(parse_word(5, "1")) == infinite_index);
}

TEST_CASE("s elements") {
    auto ctx = ctx_z_v1();
    auto s1 = s_element(ctx, 3, 1);
    auto expect = gen(ctx, 3, 1) - TLElement::identity(3, Z);
    CHECK(s1 == expect);  // -1*id + 1*U_1

    auto f5 = ctx_f5_v2();
    auto s = s_element(f5, 2, 1);
    CHECK(constant_term(s) == RingValue::from_long(f5.ring, 4));
    CHECK(s.coefficient(PlanarDiagram::generator(2, 1)) == RingValue::from_long(f5.ring, 2));

    auto q2 = make_context(Q, FromUnit{RingValue::one(Q)}, ThetaChoice::Theta2);
    auto s2 = s_element(q2, 2, 1);
    CHECK(s2 == TLElement::identity(2, Q) - gen(q2, 2, 1));

    auto nov = make_context(Z, DirectA{RingValue::from_long(Z, 2)});
    CHECK_THROWS_AS(s_element(nov, 2, 1), invalid_input);
}

TEST_CASE("s_i relations of Definition 3.1") {
    for (const auto& ctx : {ctx_z_v1(), ctx_q_v1(), ctx_f5_v2()}) {
        const RingValue q = *ctx.q;
        const RingValue lam = *ctx.lambda;
        for (int n = 2; n <= 5; ++n) {
            auto id = TLElement::identity(n, ctx.ring);
            for (int i = 1; i < n; ++i) {
                auto si = s_element(ctx, n, i);
                // s_i^2 = (q-1) s_i + q
                CHECK(multiply(ctx, si, si) ==
                      si.scaled(q - RingValue::one(ctx.ring)) + id.scaled(q));
                // constant term is lambda
                CHECK(constant_term(si) == lam);
                // invertibility: s_i^-1 = lambda^-1 + mu^-1 U_i
                auto sinv = id.scaled(lam.inverse());
                sinv.add_term(PlanarDiagram::generator(n, i), ctx.mu->inverse());
                CHECK(multiply(ctx, si, sinv) == id);
                for (int j = 1; j < n; ++j) {
                    auto sj = s_element(ctx, n, j);
                    if (std::abs(i - j) >= 2)
                        CHECK(multiply(ctx, si, sj) == multiply(ctx, sj, si));
                    if (std::abs(i - j) == 1) {
                        auto sisjsi = multiply(ctx, multiply(ctx, si, sj), si);
                        auto sjsisj = multiply(ctx, multiply(ctx, sj, si), sj);
                        CHECK(sisjsi == sjsisj);
                        // quartic: s_is_js_i - l s_is_j - l s_js_i + l^2 s_i + l^2 s_j - l^3 = 0
                        auto quartic = sisjsi - multiply(ctx, si, sj).scaled(lam)
                                     - multiply(ctx, sj, si).scaled(lam)
                                     + si.scaled(lam * lam) + sj.scaled(lam * lam)
                                     - id.scaled(lam * lam * lam);
                        CHECK(quartic.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("tower and shuffle identities") {
    for (const auto& ctx : {ctx_q_v1(), ctx_f5_v2()}) {
        // s_1...s_m...s_p = (s_m...s_{p+1}) (s_1...s_m)
        for (int m = 1; m <= 5; ++m) {
            int n = m + 2;
            for (int p = 1; p <= m; ++p) {
                auto lhs = s_product_ascending(ctx, n, 1, m);
                lhs = multiply(ctx, lhs, s_product(ctx, n, m - 1, p));
                auto rhs = multiply(ctx, s_product(ctx, n, m, p + 1), s_product_ascending(ctx, n, 1, m));
                CHECK(lhs == rhs);
            }
        }
        // (s_1...s_p)(s_q...s_r) = (s_{q+1}...s_{r+1})(s_1...s_p) for p >= q+1
        for (int p = 2; p <= 5; ++p) {
            int n = p + 2;
            for (int q = 1; q <= p - 1; ++q)
                for (int r = 1; r <= q; ++r) {
                    auto lhs = multiply(ctx, s_product_ascending(ctx, n, 1, p), s_product(ctx, n, q, r));
                    auto rhs = multiply(ctx, s_product(ctx, n, q + 1, r + 1), s_product_ascending(ctx, n, 1, p));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("s_product conventions") {
    auto ctx = ctx_z_v1();
    CHECK(s_product(ctx, 3, 0, 1) == TLElement::identity(3, Z));  // hi < lo: empty product
    CHECK(s_product(ctx, 3, 1, 1) == s_element(ctx, 3, 1));
    // (Z, v=1): s_2 s_1 = id - U_1 - U_2 + U_2 U_1
    auto prod = s_product(ctx, 3, 2, 1);
    auto expect = TLElement::identity(3, Z) - gen(ctx, 3, 1) - gen(ctx, 3, 2) +
                  from_word(ctx, parse_word(3, "U2 U1"));
    CHECK(prod == expect);
}

TEST_CASE("jacobsthal element") {
    auto ctx = ctx_z_v1();
    // J_2 = (mu/lambda) U_1 = -U_1 at v=1, theta1
    auto j2 = jacobsthal_element(ctx, 2);
    CHECK(j2 == gen(ctx, 2, 1).scaled(RingValue::from_long(Z, -1)));
    // J_1 = 1
    CHECK(jacobsthal_element(ctx, 1) == TLElement::identity(1, Z));
    // n = 4: five monomials; with mu/lambda = -1 the coefficient
    // (-1)^{(r-1)+4} (mu/lambda)^r = (-1)^{2r-1} = -1 for every r
    auto j4 = jacobsthal_element(ctx, 4);
    CHECK(j4.terms().size() == jacobsthal_number(4));
    for (const char* word : {"U3", "U1", "U3 U2", "U3 U1", "U3 U2 U1"}) {
        auto d = word_diagram(parse_word(4, word)).first;
        CHECK(j4.coefficient(d) == RingValue::from_long(Z, -1));
    }
    // constant summand is +1 exactly for odd n
    for (int n = 1; n <= 6; ++n) {
        auto jn = jacobsthal_element(ctx, n);
        CHECK(jn.terms().size() == jacobsthal_number(n));
        if (n % 2 == 1)
            CHECK(constant_term(jn) == RingValue::one(Z));
        else
            CHECK(constant_term(jn).is_zero());
    }
}

TEST_CASE("constant term") {
    auto ctx = ctx_z_v1();
    CHECK(constant_term(TLElement::identity(4, Z)) == RingValue::one(Z));
    CHECK(constant_term(gen(ctx, 4, 1)).is_zero());
    CHECK(constant_term(s_element(ctx, 4, 2)) == *ctx.lambda);
}

TEST_CASE("element rendering") {
    auto ctx = make_context(Z, DirectA{RingValue::from_long(Z, 2)});
    auto x = from_word(ctx, parse_word(2, "U1 U1"));
    CHECK(render_element(x) == "2*(U1)");
    auto y = from_word(ctx, parse_word(5, "U2 U1 U4 U2 U3"));
    CHECK(render_element(y) == "1*(U4)(U2 U3)");
    CHECK(render_element(TLElement::zero(2, Z)) == "0");
}
