#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>

#include "tl/homology.hpp"

namespace tl {

int resolution_budget() {
    if (const char* env = std::getenv("TLHOM_BUDGET")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20000;
}

namespace {

// Left multiplication by each basis diagram on the diagram basis of TL_n.
struct DiagramTable {
    int size = 0;
    std::vector<std::vector<std::pair<int, int>>> mult;  // [d][e] -> (index of d*e, loops)
};

const DiagramTable& diagram_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DiagramTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto t = std::make_unique<DiagramTable>();
        const auto& full = InducedBasis::full(n);
        t->size = full.size();
        t->mult.assign(t->size, std::vector<std::pair<int, int>>(t->size));
        for (int d = 0; d < t->size; ++d)
            for (int e = 0; e < t->size; ++e) {
                auto [f, loops] = compose(full.diagram_at(d), full.diagram_at(e));
                t->mult[d][e] = {full.position_of(f), loops};
            }
        it = cache.emplace(n, std::move(t)).first;
    }
    return *it->second;
}

// Union type over the per-ring incremental spans.
class SpanUnion {
public:
    SpanUnion(const RingSpec& ring, int n) : ring_(ring) {
        switch (ring.kind()) {
            case RingKind::PrimeField: ff_.emplace(n, ring.prime()); break;
            case RingKind::Rationals: q_.emplace(n); break;
            case RingKind::Integers: z_.emplace(n); break;
        }
    }
    bool contains(const std::vector<RingValue>& v) const {
        switch (ring_.kind()) {
            case RingKind::PrimeField: return ff_->contains(to_ff_vec(v));
            case RingKind::Rationals: return q_->contains(to_q_vec(v));
            case RingKind::Integers: return z_->contains(to_z_vec(v));
        }
        return false;
    }
    void insert(const std::vector<RingValue>& v) {
        switch (ring_.kind()) {
            case RingKind::PrimeField: ff_->insert(to_ff_vec(v)); break;
            case RingKind::Rationals: q_->insert(to_q_vec(v)); break;
            case RingKind::Integers: z_->insert(to_z_vec(v)); break;
        }
    }

private:
    static std::vector<std::uint64_t> to_ff_vec(const std::vector<RingValue>& v) {
        std::vector<std::uint64_t> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(x.as_residue());
        return out;
    }
    static std::vector<mpq_class> to_q_vec(const std::vector<RingValue>& v) {
        std::vector<mpq_class> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(x.as_mpq());
        return out;
    }
    static std::vector<mpz_class> to_z_vec(const std::vector<RingValue>& v) {
        std::vector<mpz_class> out;
        out.reserve(v.size());
        for (const auto& x : v) out.push_back(x.as_mpz());
        return out;
    }
    RingSpec ring_;
    std::optional<FfSpan> ff_;
    std::optional<QSpan> q_;
    std::optional<ZLattice> z_;
};

}  // namespace

FreeResolution free_resolution(const LeftModule& M, int length, int budget) {
    const ParamContext& ctx = M.ctx;
    const RingSpec& ring = ctx.ring;
    const int n = M.n;
    const auto& full = InducedBasis::full(n);
    const int NA = full.size();
    const DiagramTable& table = diagram_table(n);
    std::vector<RingValue> apow;
    for (int k = 0; k <= n + 1; ++k) apow.push_back(ctx.a.pow(k));

    // block-diagonal left action of a basis diagram on A^{r}
    auto act = [&](int d, const std::vector<RingValue>& v) {
        std::vector<RingValue> out(v.size(), RingValue::zero(ring));
        int blocks = static_cast<int>(v.size()) / NA;
        for (int s = 0; s < blocks; ++s)
            for (int e = 0; e < NA; ++e) {
                const RingValue& c = v[s * NA + e];
                if (c.is_zero()) continue;
                auto [f, loops] = table.mult[d][e];
                out[s * NA + f] += c * apow[loops];
            }
        return out;
    };

    // action of each basis diagram on M
    std::vector<RingMatrix> act_M;
    act_M.reserve(NA);
    for (int d = 0; d < NA; ++d)
        act_M.push_back(M.action_of_word(FreeWord{n, full.word_at(d).letters()}));

    FreeResolution res;

    // stage 0: a generating set of M by greedy closure over its basis vectors
    std::vector<std::vector<RingValue>> gens0;
    {
        SpanUnion span(ring, M.dim);
        for (int t = 0; t < M.dim; ++t) {
            std::vector<RingValue> v(M.dim, RingValue::zero(ring));
            v[t] = RingValue::one(ring);
            if (span.contains(v)) continue;
            gens0.push_back(v);
            for (int d = 0; d < NA; ++d) {
                std::vector<RingValue> w(M.dim, RingValue::zero(ring));
                for (const auto& [rc, val] : act_M[d].entries)
                    if (rc.second == t) w[rc.first] = val;
                span.insert(w);
            }
        }
    }
    int r0 = static_cast<int>(gens0.size());
    if (r0 * NA > budget)
        throw infeasible("DimensionBudgetExceeded: stage 0 needs R-dimension " + std::to_string(r0 * NA));
    res.ranks.push_back(r0);
    res.augmentation = RingMatrix::zero(ring, M.dim, r0);
    for (int s = 0; s < r0; ++s)
        for (int r = 0; r < M.dim; ++r) res.augmentation.add(r, s, gens0[s][r]);

    // linearization of P_0 -> M: column (s, e) is the action of diagram e on g_s
    RingMatrix lin_prev = RingMatrix::zero(ring, M.dim, r0 * NA);
    for (int s = 0; s < r0; ++s) {
        for (int e = 0; e < NA; ++e) {
            // act_M[e] * gens0[s]
            for (const auto& [rc, val] : act_M[e].entries) {
                const RingValue& g = gens0[s][rc.second];
                if (!g.is_zero()) lin_prev.add(rc.first, s * NA + e, val * g);
            }
        }
    }

    int r_prev = r0;
    for (int stage = 1; stage <= length; ++stage) {
        auto kernel = kernel_columns(lin_prev);
        std::vector<std::vector<RingValue>> gens;
        {
            SpanUnion span(ring, r_prev * NA);
            for (auto& v : kernel) {
                if (span.contains(v)) continue;
                gens.push_back(v);
                for (int d = 0; d < NA; ++d) span.insert(act(d, v));
            }
        }
        int rj = static_cast<int>(gens.size());
        if (rj * NA > budget)
            throw infeasible("DimensionBudgetExceeded: stage " + std::to_string(stage) +
                             " needs R-dimension " + std::to_string(rj * NA) + " (budget " +
                             std::to_string(budget) + ")");
        res.ranks.push_back(rj);

        // algebra matrix P_stage -> P_{stage-1}
        std::vector<std::vector<TLElement>> amat(
            r_prev, std::vector<TLElement>(rj, TLElement::zero(n, ring)));
        for (int t = 0; t < rj; ++t)
            for (int s = 0; s < r_prev; ++s) {
                TLElement x(n, ring);
                for (int e = 0; e < NA; ++e) {
                    const RingValue& c = gens[t][s * NA + e];
                    if (!c.is_zero()) x.add_term(full.diagram_at(e), c);
                }
                amat[s][t] = std::move(x);
            }
        res.maps.push_back(std::move(amat));

        // linearize P_stage -> P_{stage-1} and assert exactness data
        RingMatrix lin = RingMatrix::zero(ring, r_prev * NA, rj * NA);
        for (int t = 0; t < rj; ++t)
            for (int e = 0; e < NA; ++e) {
                auto col = act(e, gens[t]);
                for (int r = 0; r < static_cast<int>(col.size()); ++r)
                    if (!col[r].is_zero()) lin.add(r, t * NA + e, col[r]);
            }
        check_internal((lin_prev * lin).is_zero(), "resolution stage does not compose to zero");
        lin_prev = std::move(lin);
        r_prev = rj;
        if (rj == 0) {
            // the rest of the resolution is zero
            while (static_cast<int>(res.ranks.size()) <= length) {
                res.ranks.push_back(0);
                res.maps.push_back({});
            }
            break;
        }
    }
    while (static_cast<int>(res.maps.size()) < length) res.maps.push_back({});
    return res;
}

namespace {

// R-complex obtained by applying constant_term entrywise to the resolution.
ChainComplex tensor_trivial_complex(const ParamContext& ctx, const FreeResolution& res, int L) {
    ChainComplex Y;
    Y.ring = ctx.ring;
    Y.lo = 0;
    Y.hi = L;
    for (int j = 0; j <= L; ++j) {
        Y.dims.push_back(res.ranks[j]);
        std::vector<std::string> lbl;
        for (int t = 0; t < res.ranks[j]; ++t) lbl.push_back("e" + std::to_string(t + 1));
        Y.labels.push_back(std::move(lbl));
    }
    for (int j = 1; j <= L; ++j) {
        RingMatrix m = RingMatrix::zero(ctx.ring, res.ranks[j - 1], res.ranks[j]);
        const auto& amat = res.maps[j - 1];
        for (int s = 0; s < res.ranks[j - 1]; ++s)
            for (int t = 0; t < res.ranks[j]; ++t) m.add(s, t, constant_term(amat[s][t]));
        Y.diff.emplace(j, std::move(m));
    }
    Y.verify();
    return Y;
}

}  // namespace

std::vector<HomologyGroup> tor_trivial(const ParamContext& ctx, const LeftModule& M, int L) {
    FreeResolution res = free_resolution(M, L);
    ChainComplex Y = tensor_trivial_complex(ctx, res, L);
    auto H = homology_of(Y);
    std::vector<HomologyGroup> out;
    for (int d = 0; d < L; ++d) out.push_back(H.at(d));
    return out;
}

std::vector<HomologyGroup> ext_trivial(const ParamContext& ctx, const LeftModule& M, int L) {
    FreeResolution res = free_resolution(M, L);
    ChainComplex Y = tensor_trivial_complex(ctx, res, L);
    // cochain complex with reflected grading: degree -d holds Hom(P_d, t)
    ChainComplex C;
    C.ring = ctx.ring;
    C.lo = -L;
    C.hi = 0;
    for (int j = C.lo; j <= C.hi; ++j) {
        C.dims.push_back(Y.dim(-j));
        C.labels.push_back(Y.labels_at(-j));
    }
    for (int j = C.lo + 1; j <= C.hi; ++j) {
        // d_C at degree j is the transpose of Y's differential out of -j+1
        C.diff.emplace(j, Y.d(-j + 1).transpose());
    }
    C.verify();
    auto H = homology_of(C);
    std::vector<HomologyGroup> out;
    for (int d = 0; d < L; ++d) out.push_back(H.at(-d));
    return out;
}

TorSequenceReport verify_tor_sequence(const ParamContext& ctx, int n, int L) {
    if (n % 2 != 0 || n < 2) throw invalid_input("verify_tor_sequence needs n even and positive");
    if (L < n + 1) throw invalid_input("verify_tor_sequence needs L >= n+1");
    TorSequenceReport rep{false, {}, {}, {}, {}, {}, RingValue::zero(ctx.ring)};
    auto tors = tor_trivial(ctx, trivial_module(ctx, n), L);
    rep.tor_n = tors[n];
    rep.tor_n_minus_1 = tors[n - 1];

    LeftModule F = fineberg_module(ctx, n);
    rep.coinv_fineberg = coinvariants(F);

    // the middle map t (x) F_n -> t is induced by the constant terms of the
    // ambient kernel basis vectors
    std::vector<RingValue> c;
    c.reserve(F.dim);
    for (const auto& e : F.ambient_basis) c.push_back(constant_term(e));

    // cokernel of the middle map and the reported b
    if (ctx.ring.kind() == RingKind::Integers) {
        mpz_class g = 0;
        for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.as_mpz().get_mpz_t());
        rep.b = RingValue::from_mpz(ctx.ring, g);
        if (g == 0) rep.cokernel_of_middle.rank = 1;
        else if (g > 1) rep.cokernel_of_middle.torsion.push_back(g);
    } else {
        bool any = std::any_of(c.begin(), c.end(), [](const RingValue& x) { return !x.is_zero(); });
        rep.b = any ? RingValue::one(ctx.ring) : RingValue::zero(ctx.ring);
        if (!any) rep.cokernel_of_middle.rank = 1;
    }

    // kernel of the middle map: ker(c)/im(relations of t (x) F_n)
    RingMatrix cmat = RingMatrix::zero(ctx.ring, 1, F.dim);
    for (int t = 0; t < F.dim; ++t) cmat.add(0, t, c[t]);
    auto nbasis = kernel_columns(cmat);
    RingMatrix N = RingMatrix::zero(ctx.ring, F.dim, static_cast<int>(nbasis.size()));
    for (int j = 0; j < static_cast<int>(nbasis.size()); ++j)
        for (int r = 0; r < F.dim; ++r) N.add(r, j, nbasis[j][r]);
    int gens = n - 1;
    RingMatrix B = RingMatrix::zero(ctx.ring, F.dim, gens * F.dim);
    for (int i = 0; i < gens; ++i)
        for (const auto& [rc, v] : F.action[i].entries) B.add(rc.first, i * F.dim + rc.second, v);
    RingMatrix Yc;
    bool ok = solve_matrix(N, B, Yc);
    check_internal(ok, "coinvariant relations do not lie in ker(middle map)");
    rep.kernel_of_middle = cokernel_group(Yc);

    rep.pass = rep.kernel_of_middle == rep.tor_n && rep.cokernel_of_middle == rep.tor_n_minus_1;
    return rep;
}

ShiftedIsoReport verify_shifted_iso(const ParamContext& ctx, int n, int L) {
    ShiftedIsoReport rep;
    rep.first_degree = n % 2 == 1 ? n : n + 1;
    if (L - 1 < rep.first_degree)
        throw invalid_input("verify_shifted_iso needs L-1 >= " + std::to_string(rep.first_degree));
    auto lhs_all = tor_trivial(ctx, trivial_module(ctx, n), L);
    LeftModule F = fineberg_module(ctx, n);
    auto rhs_all = tor_trivial(ctx, F, L - n);
    rep.pass = true;
    for (int i = rep.first_degree; i <= L - 1; ++i) {
        rep.degrees.push_back(i);
        rep.lhs.push_back(lhs_all[i]);
        rep.rhs.push_back(rhs_all[i - n]);
        if (!(lhs_all[i] == rhs_all[i - n])) rep.pass = false;
    }
    return rep;
}

}  // namespace tl
