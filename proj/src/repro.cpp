#include "tl/repro.hpp"

#include <sstream>

#include "tl/homology.hpp"
#include "tl/jw.hpp"

namespace tl {

namespace {

const RingSpec kZ = RingSpec::integers();
const RingSpec kQ = RingSpec::rationals();

ParamContext q_v1() { return make_context(kQ, FromUnit{RingValue::one(kQ)}); }
ParamContext z_v1() { return make_context(kZ, FromUnit{RingValue::one(kZ)}); }
ParamContext f2_v1() {
    auto F2 = RingSpec::prime_field(2);
    return make_context(F2, FromUnit{RingValue::one(F2)});
}
ParamContext f5_v2() {
    auto F5 = RingSpec::prime_field(5);
    return make_context(F5, FromUnit{RingValue::from_long(F5, 2)});
}

struct Checker {
    bool pass = true;
    std::ostringstream log;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            log << "FAILED: " << what << "; ";
        }
    }
    CriterionResult result(const std::string& summary) {
        CriterionResult r;
        r.pass = pass;
        r.details = pass ? summary : log.str();
        return r;
    }
};

CriterionResult criterion_counts() {
    Checker c;
    for (int n = 0; n <= 8; ++n)
        c.require(enumerate_diagrams(n).size() == catalan(n),
                  "diagram count n=" + std::to_string(n));
    for (int n = 2; n <= 10; ++n)
        c.require(catalan(n) == 2 * fine_number(n) + fine_number(n - 1),
                  "catalan(n) = 2 fine(n) + fine(n-1) at n=" + std::to_string(n));
    return c.result("diagram counts match Catalan for n<=8; Catalan/Fine identity for n<=10");
}

CriterionResult criterion_rewriting() {
    Checker c;
    auto [k, w] = jones_normal_form(parse_word(5, "U2 U1 U4 U2 U3"));
    c.require(k == 0 && render_jones_word(w) == "(U4)(U2 U3)",
              "U2U1U4U2U3 normalizes to (U4)(U2 U3) with exponent 0");
    for (int n = 0; n <= 6; ++n) {
        for (const auto& d : enumerate_diagrams(n)) {
            auto jw = diagram_to_jones_word(d);
            c.require(jones_word_to_diagram(jw) == d, "diagram->word->diagram at n=" + std::to_string(n));
        }
        for (const auto& jw : jones_basis(n)) {
            auto d = jones_word_to_diagram(jw);
            c.require(diagram_to_jones_word(d) == jw, "word->diagram->word at n=" + std::to_string(n));
        }
    }
    return c.result("section-2 rewriting example and full round trips for n<=6");
}

CriterionResult criterion_w_complex() {
    Checker c;
    for (const auto& ctx : {q_v1(), f2_v1(), f5_v2()}) {
        for (int n = 0; n <= 7; ++n) {
            try {
                build_W(ctx, n);  // d^2 = 0 verified at construction
            } catch (const internal_error& e) {
                c.require(false, "W(" + std::to_string(n) + ") over " + ctx.ring.tag() + ": " + e.what());
            }
        }
    }
    return c.result("W(n) verified as a complex for n<=7 in all three contexts");
}

CriterionResult criterion_theorem_e() {
    Checker c;
    for (const auto& ctx : {q_v1(), f2_v1(), f5_v2(), z_v1()}) {
        bool integral = ctx.ring.kind() == RingKind::Integers;
        for (int n = 1; n <= 6; ++n) {
            auto H = homology_of(build_W(ctx, n));
            for (int d = -1; d <= n - 2; ++d)
                c.require(H.at(d).is_zero(), "H_" + std::to_string(d) + "(W(" + std::to_string(n) +
                                                 ")) = 0 over " + ctx.ring.tag());
            c.require(H.at(n - 1).rank == static_cast<long long>(fine_number(n)),
                      "top rank = Fine(n) over " + ctx.ring.tag());
            if (integral)
                c.require(H.at(n - 1).torsion.empty(), "torsion-free top homology over Z");
        }
    }
    return c.result("Theorem E for n<=6 (three contexts + Z): vanishing below top, Fine rank on top");
}

CriterionResult criterion_inductive_resolutions() {
    Checker c;
    const int L = 8;
    auto check_interior = [&](const ChainComplex& X, const std::string& what) {
        auto H = homology_of(X);
        for (int d = -1; d <= L - 2; ++d)
            c.require(H.at(d).is_zero(), what + " at degree " + std::to_string(d));
    };
    auto check_invariants = [&](const ChainComplex& X, const std::string& what) {
        auto HC = homology_of(trivial_coinvariants(X));
        auto HI = homology_of(trivial_invariants(X));
        for (int d = -1; d <= L - 2; ++d) {
            c.require(HC.at(d).is_zero(), "coinvariants of " + what + " at degree " + std::to_string(d));
            c.require(HI.at(-d).is_zero(), "invariants of " + what + " at degree " + std::to_string(d));
        }
    };
    for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= n; ++m) {
            auto C = build_C(q_v1(), n, m, L);
            check_interior(C, "C(" + std::to_string(m) + ") in TL_" + std::to_string(n));
            check_invariants(C, "C(" + std::to_string(m) + ")");
        }
        for (int m = 2; m < n; ++m) {
            for (const auto& ctx : {z_v1(), f5_v2()}) {
                auto D = build_D(ctx, n, m, L);
                check_interior(D, "D(" + std::to_string(m) + ") in TL_" + std::to_string(n) + " over " +
                                      ctx.ring.tag());
                check_invariants(D, "D(" + std::to_string(m) + ") over " + ctx.ring.tag());
            }
        }
    }
    return c.result("C(m)/D(m) truncations (L=8) and their (co)invariants acyclic for n<=5");
}

CriterionResult criterion_tl2_table() {
    Checker c;
    const int L = 7;
    for (const auto& ctx : {z_v1(), f2_v1(), q_v1()}) {
        bool integral = ctx.ring.kind() == RingKind::Integers;
        bool zero_a = ctx.a.is_zero();
        auto expected_tor = [&](int d) {
            HomologyGroup g;
            if (d == 0) { g.rank = 1; return g; }
            if (integral) {
                if (d % 2 == 1) g.torsion.push_back(2);  // R/aR = Z/2
                return g;                                 // R_a = 0
            }
            if (zero_a) { g.rank = 1; return g; }  // F_2: R/aR = R_a = F_2
            return g;                               // Q, a=2 unit: 0
        };
        auto expected_ext = [&](int d) {
            HomologyGroup g;
            if (d == 0) { g.rank = 1; return g; }
            if (integral) {
                if (d % 2 == 0) g.torsion.push_back(2);
                return g;
            }
            if (zero_a) { g.rank = 1; return g; }
            return g;
        };
        auto tor = tor_trivial(ctx, trivial_module(ctx, 2), L - 1);
        auto ext = ext_trivial(ctx, trivial_module(ctx, 2), L - 1);
        // the same groups through the explicit resolution
        auto R = build_tl2_resolution(ctx, L);
        auto TC = homology_of(truncate(trivial_coinvariants(R), L - 1));
        auto TI = homology_of(trivial_invariants(R));
        for (int d = 0; d < L - 1; ++d) {
            c.require(tor[d] == expected_tor(d),
                      "Tor_" + std::to_string(d) + " over " + ctx.ring.tag() + " (generic)");
            c.require(ext[d] == expected_ext(d),
                      "Ext^" + std::to_string(d) + " over " + ctx.ring.tag() + " (generic)");
            if (d >= 1) {
                c.require(TC.at(d) == expected_tor(d),
                          "Tor_" + std::to_string(d) + " over " + ctx.ring.tag() + " (explicit)");
                c.require(TI.at(-d) == expected_ext(d),
                          "Ext^" + std::to_string(d) + " over " + ctx.ring.tag() + " (explicit)");
            }
        }
    }
    return c.result("full TL_2 Tor/Ext tables over (Z,2), (F_2,0), (Q,2), explicit == generic");
}

CriterionResult criterion_vanishing_bd() {
    Checker c;
    {
        auto tor = tor_trivial(f5_v2(), trivial_module(f5_v2(), 5), 5);
        for (int d = 1; d <= 4; ++d)
            c.require(tor[d].is_zero(), "Tor_" + std::to_string(d) + "(t,t) = 0 at n=5 over F_5, delta=0");
    }
    {
        auto tor = tor_trivial(f2_v1(), trivial_module(f2_v1(), 3), 3);
        for (int d = 1; d <= 2; ++d)
            c.require(tor[d].is_zero(), "Tor_" + std::to_string(d) + "(t,t) = 0 at n=3 over F_2, delta=0");
    }
    {
        auto tor = tor_trivial(f5_v2(), trivial_module(f5_v2(), 4), 3);
        for (int d = 1; d <= 2; ++d)
            c.require(tor[d].is_zero(), "Tor_" + std::to_string(d) + "(t,t) = 0 at n=4 over F_5, delta=0");
    }
    return c.result("Theorem B/D vanishing at (5,F_5,v=2), (3,F_2,v=1), (4,F_5,v=2)");
}

CriterionResult criterion_sharpness() {
    Checker c;
    struct Case {
        ParamContext ctx;
        int n;
    };
    std::vector<Case> cases = {{z_v1(), 2}, {f2_v1(), 2}, {f5_v2(), 4}};
    for (const auto& [ctx, n] : cases) {
        auto rep = verify_tor_sequence(ctx, n, n + 2);
        c.require(rep.pass, "Theorem 5.1 sequence at n=" + std::to_string(n) + " over " + ctx.ring.tag());
        c.require(!rep.tor_n_minus_1.is_zero(),
                  "Tor_{n-1} != 0 at n=" + std::to_string(n) + " over " + ctx.ring.tag());
        c.require(ctx.a.divides(rep.b), "b is a multiple of a at n=" + std::to_string(n));
    }
    return c.result("Theorem C sharpness witnessed at (2,Z), (2,F_2), (4,F_5); b divisible by a");
}

CriterionResult criterion_shapiro() {
    Checker c;
    for (int n = 2; n <= 4; ++n)
        for (int m = 0; m < n; ++m)
            for (const auto& ctx : {f2_v1(), z_v1()}) {
                auto tor = tor_trivial(ctx, induced_as_module(ctx, n, m), 4);
                for (int d = 1; d <= 3; ++d)
                    c.require(tor[d].is_zero(), "Tor_" + std::to_string(d) + "(t, TL_" + std::to_string(n) +
                                                    " (x)_{TL_" + std::to_string(m) + "} t) over " +
                                                    ctx.ring.tag());
            }
    auto qa2 = make_context(kQ, DirectA{RingValue::from_long(kQ, 2)});
    for (int n = 2; n <= 4; ++n) {
        auto tor = tor_trivial(qa2, induced_as_module(qa2, n, n), 4);
        for (int d = 1; d <= 3; ++d)
            c.require(tor[d].is_zero(), "Tor_" + std::to_string(d) + " for m=n over Q, a=2");
    }
    return c.result("Theorem F / Claim 3.2: induced modules acyclic in degrees 1..3 for n<=4");
}

CriterionResult criterion_tor_sequences() {
    Checker c;
    auto zrep = verify_tor_sequence(z_v1(), 2, 4);
    c.require(zrep.pass, "tor-sequence at (2, Z, a=2)");
    c.require(zrep.b == RingValue::from_long(kZ, 2), "b = 2 at (2, Z)");
    auto frep = verify_tor_sequence(f2_v1(), 2, 4);
    c.require(frep.pass, "tor-sequence at (2, F_2, a=0)");

    for (const auto& ctx : {z_v1(), f2_v1()}) {
        auto rep = verify_shifted_iso(ctx, 2, 6);
        c.require(rep.pass, "shifted iso n=2 over " + ctx.ring.tag());
        // section-7 corollary pattern: R/aR in odd degrees, R_a in even
        for (std::size_t t = 0; t < rep.degrees.size(); ++t) {
            int i = rep.degrees[t];
            HomologyGroup expect;
            if (ctx.ring.kind() == RingKind::Integers) {
                if (i % 2 == 1) expect.torsion.push_back(2);
            } else {
                expect.rank = 1;  // F_2: both R/aR and R_a are F_2
            }
            c.require(rep.lhs[t] == expect,
                      "pattern at degree " + std::to_string(i) + " over " + ctx.ring.tag());
        }
    }
    return c.result("Theorem 5.1 exact sequence and the shifted isomorphisms for n=2, i<=5");
}

CriterionResult criterion_filtration() {
    Checker c;
    for (const auto& ctx : {q_v1(), f5_v2()}) {
        for (int n = 1; n <= 5; ++n) {
            c.require(is_chain_iso(phi0(ctx, n)), "phi0 iso at n=" + std::to_string(n) + " over " + ctx.ring.tag());
            for (int k = 1; k <= n - 1; ++k)
                c.require(is_chain_iso(psik(ctx, n, k)), "psik iso at n=" + std::to_string(n) + ", k=" +
                                                             std::to_string(k) + " over " + ctx.ring.tag());
        }
    }
    for (int n = 1; n <= 6; ++n) {
        auto prev = filtration_indices(n, 0);
        std::vector<std::size_t> total(prev.size());
        for (std::size_t t = 0; t < prev.size(); ++t) total[t] = prev[t].size();
        for (int k = 1; k <= n; ++k) {
            auto cur = filtration_indices(n, k);
            for (std::size_t t = 0; t < cur.size(); ++t) total[t] += cur[t].size() - prev[t].size();
            prev = cur;
        }
        for (int i = -1; i <= n - 1; ++i)
            c.require(total[i + 1] == static_cast<std::size_t>(InducedBasis::get(n, n - i - 1).size()),
                      "filtration dims telescope at n=" + std::to_string(n));
    }
    return c.result("phi0/psik chain isomorphisms for n<=5 and telescoping filtration dims for n<=6");
}

CriterionResult criterion_jw() {
    Checker c;
    for (int n = 0; n <= 12; ++n)
        for (int r = 0; r <= n; ++r)
            c.require(quantum_binomial(n, r).eval_int(0) == qbc_delta_zero(n, r),
                      "delta-zero closed form at [" + std::to_string(n) + " " + std::to_string(r) + "]");
    c.require(quantum_binomial(3, 1) == DeltaPoly({-1, 0, 1}), "[3 1] = d^2 - 1");
    c.require(quantum_binomial(4, 1) == DeltaPoly({0, -2, 0, 1}), "[4 1] = d(d^2-2)");
    c.require(quantum_binomial(4, 2) == DeltaPoly({2, 0, -3, 0, 1}), "[4 2] = (d^2-1)(d^2-2)");
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        auto F = RingSpec::prime_field(p);
        for (std::uint64_t v = 1; v < p; ++v) {
            auto ctx = make_context(F, FromUnit{RingValue::from_long(F, static_cast<long>(v))});
            for (int n = 1; n <= 6; ++n) {
                bool exists = jw_exists(ctx, n);
                auto found = compute_jw(ctx, n);
                c.require(exists == found.has_value(),
                          "existence criterion at p=" + std::to_string(p) + ", v=" + std::to_string(v) +
                              ", n=" + std::to_string(n));
                if (found && n <= 4) {
                    auto tor = tor_trivial(ctx, trivial_module(ctx, n), 4);
                    for (int d = 1; d <= 3; ++d)
                        c.require(tor[d].is_zero(), "projective vanishing at p=" + std::to_string(p) +
                                                        ", v=" + std::to_string(v) + ", n=" + std::to_string(n));
                }
            }
        }
    }
    return c.result("quantum binomial identities and JW existence/projectivity over F_p, n<=6");
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> criteria = {
        {1, "Diagram counts (Catalan, Fine cross-check)", criterion_counts},
        {2, "Jones rewriting and diagram/word round trips", criterion_rewriting},
        {3, "W(n) is a complex for n<=7", criterion_w_complex},
        {4, "Theorem E: homology of W(n), n<=6", criterion_theorem_e},
        {5, "Lemmas 3.5-3.6: inductive resolutions acyclic", criterion_inductive_resolutions},
        {6, "Prop 7.1: full TL_2 Tor/Ext tables, both routes", criterion_tl2_table},
        {7, "Theorems B/D: vanishing ranges", criterion_vanishing_bd},
        {8, "Theorem C: sharpness at even n", criterion_sharpness},
        {9, "Theorem F / Claim 3.2: induced-module vanishing", criterion_shapiro},
        {10, "Theorem 5.1: exact sequence and shifted isomorphisms", criterion_tor_sequences},
        {11, "Filtration identification: phi0/psik isomorphisms", criterion_filtration},
        {12, "Jones-Wenzl: binomials, existence, projectivity", criterion_jw},
    };
    return criteria;
}

}  // namespace tl
