#include "tl/complex.hpp"

#include <algorithm>

#include "tl/homology.hpp"

namespace tl {

namespace {

RingMatrix zero_matrix(const RingSpec& ring, int rows, int cols) {
    return RingMatrix::zero(ring, rows, cols);
}

// The shift map sigma: TL_{n-1} -> TL_n, U_i -> U_{i+1}; diagrammatically a
// new straight strand at the bottom.
PlanarDiagram shift_diagram(const PlanarDiagram& d) {
    const int n = d.n() + 1;
    std::vector<int> mate(2 * n, -1);
    mate[PlanarDiagram::pos_of_left(n, 1)] = PlanarDiagram::pos_of_right(n, 1);
    mate[PlanarDiagram::pos_of_right(n, 1)] = PlanarDiagram::pos_of_left(n, 1);
    auto new_pos = [&](int p) {
        if (p < d.n()) return PlanarDiagram::pos_of_left(n, p + 2);
        return PlanarDiagram::pos_of_right(n, 2 * d.n() - p + 1);
    };
    for (int p = 0; p < 2 * d.n(); ++p) {
        int q = d.mate_of_pos(p);
        mate[new_pos(p)] = new_pos(q);
    }
    return PlanarDiagram::from_mates(n, std::move(mate));
}

TLElement shift_element(const TLElement& x) {
    TLElement out(x.n() + 1, x.ring());
    for (const auto& [d, c] : x.terms()) out.add_term(shift_diagram(d), c);
    return out;
}

std::vector<std::string> basis_labels(int n, int m) {
    std::vector<std::string> out;
    for (const auto& w : InducedBasis::get(n, m).words()) out.push_back(render_jones_word(w));
    return out;
}

}  // namespace

const RingMatrix& ChainComplex::d(int deg) const {
    auto it = diff.find(deg);
    if (it == diff.end()) throw invalid_input("no differential at degree " + std::to_string(deg));
    return it->second;
}

void ChainComplex::verify() const {
    for (const auto& [deg, m] : diff) {
        check_internal(deg > lo && deg <= hi, "differential outside degree range");
        check_internal(m.rows == dim(deg - 1) && m.cols == dim(deg), "differential shape mismatch");
    }
    for (int deg = lo + 2; deg <= hi; ++deg) {
        if (!has_d(deg) || !has_d(deg - 1)) continue;
        if (!(d(deg - 1) * d(deg)).is_zero())
            throw internal_error("d^2 != 0 between degrees " + std::to_string(deg) + " and " +
                                 std::to_string(deg - 2));
    }
}

void ChainMap::verify_chain_map() const {
    if (source.ring != target.ring) throw internal_error("chain map over mismatched rings");
    auto f_at = [&](int deg) -> RingMatrix {
        auto it = f.find(deg);
        if (it != f.end()) return it->second;
        return zero_matrix(source.ring, target.dim(deg), source.dim(deg));
    };
    for (const auto& [deg, fm] : f)
        check_internal(fm.rows == target.dim(deg) && fm.cols == source.dim(deg),
                       "chain map component shape mismatch");
    int lo = std::min(source.lo, target.lo), hi = std::max(source.hi, target.hi);
    for (int deg = lo + 1; deg <= hi; ++deg) {
        RingMatrix lhs = source.has_d(deg) ? f_at(deg - 1) * source.d(deg)
                                           : zero_matrix(source.ring, target.dim(deg - 1), source.dim(deg));
        RingMatrix rhs = target.has_d(deg) ? target.d(deg) * f_at(deg)
                                           : zero_matrix(source.ring, target.dim(deg - 1), source.dim(deg));
        if (!(lhs == rhs))
            throw internal_error("chain map does not commute with d at degree " + std::to_string(deg));
    }
}

ChainComplex build_W(const ParamContext& ctx, int n) {
    ctx.require_v();
    if (n < 0) throw invalid_input("build_W needs n >= 0");
    ChainComplex X;
    X.ring = ctx.ring;
    X.lo = -1;
    X.hi = n - 1;
    InducedTermsMeta meta;
    meta.n = n;
    for (int i = -1; i <= n - 1; ++i) {
        int m = n - i - 1;
        X.dims.push_back(InducedBasis::get(n, m).size());
        X.labels.push_back(basis_labels(n, m));
        meta.m_of_degree.push_back(m);
    }
    const RingValue lam_inv = ctx.require_lambda().inverse();
    for (int i = 0; i <= n - 1; ++i) {
        RingMatrix di = zero_matrix(ctx.ring, X.dim(i - 1), X.dim(i));
        std::vector<std::pair<RingValue, TLElement>> mults;
        for (int j = 0; j <= i; ++j) {
            TLElement g = s_product(ctx, n, n - i + j - 1, n - i);
            RingValue c = lam_inv.pow(j);
            if (j % 2 == 1) c = -c;
            di = di + right_mult_map(ctx, n, n - i - 1, n - i, g).scaled(c);
            mults.emplace_back(c, g);
        }
        X.diff.emplace(i, std::move(di));
        meta.mults.emplace(i, std::move(mults));
    }
    X.induced_meta = std::move(meta);
    X.verify();
    return X;
}

namespace {

ChainComplex build_inductive(const ParamContext& ctx, int n, int m, int L, bool variant_c) {
    if (m < 2 || m > n || (variant_c ? false : m >= n))
        throw invalid_input("BadRange: inductive resolution needs 2 <= m " +
                            std::string(variant_c ? "<= n" : "< n"));
    if (L < 0) throw invalid_input("BadRange: negative truncation length");
    if (variant_c && !ctx.a.is_unit())
        throw infeasible("NonInvertibleA: C(m) needs the parameter a invertible");
    ChainComplex X;
    X.ring = ctx.ring;
    X.lo = -1;
    X.hi = L;
    InducedTermsMeta meta;
    meta.n = n;
    auto m_of = [&](int deg) { return deg <= -1 ? m : (deg == 0 ? m - 1 : m - 2); };
    for (int deg = -1; deg <= L; ++deg) {
        X.dims.push_back(InducedBasis::get(n, m_of(deg)).size());
        X.labels.push_back(basis_labels(n, m_of(deg)));
        meta.m_of_degree.push_back(m_of(deg));
    }
    auto one = TLElement::identity(n, ctx.ring);
    TLElement idem(n, ctx.ring);
    if (variant_c) {
        idem = TLElement::from_generator(ctx.ring, n, m - 1).scaled(ctx.a.inverse());
    } else {
        idem = from_word(ctx, FreeWord{n, {m - 1, m}});
    }
    for (int deg = 0; deg <= L; ++deg) {
        TLElement g(n, ctx.ring);
        if (deg == 0) g = one;
        else if (deg == 1) g = variant_c ? idem : TLElement::from_generator(ctx.ring, n, m - 1);
        else if (deg % 2 == 0) g = one - idem;
        else g = idem;
        X.diff.emplace(deg, right_mult_map(ctx, n, m_of(deg), m_of(deg - 1), g));
        meta.mults.emplace(deg, std::vector<std::pair<RingValue, TLElement>>{{RingValue::one(ctx.ring), g}});
    }
    X.induced_meta = std::move(meta);
    X.verify();
    return X;
}

}  // namespace

ChainComplex build_C(const ParamContext& ctx, int n, int m, int L) {
    return build_inductive(ctx, n, m, L, true);
}

ChainComplex build_D(const ParamContext& ctx, int n, int m, int L) {
    return build_inductive(ctx, n, m, L, false);
}

ChainComplex build_tl2_resolution(const ParamContext& ctx, int L) {
    if (L < 1) throw invalid_input("BadRange: tl2 resolution needs L >= 1");
    const int n = 2;
    ChainComplex X;
    X.ring = ctx.ring;
    X.lo = -1;
    X.hi = L;
    InducedTermsMeta meta;
    meta.n = n;
    auto m_of = [&](int deg) { return deg <= -1 ? 2 : 0; };
    for (int deg = -1; deg <= L; ++deg) {
        X.dims.push_back(InducedBasis::get(n, m_of(deg)).size());
        X.labels.push_back(basis_labels(n, m_of(deg)));
        meta.m_of_degree.push_back(m_of(deg));
    }
    auto u1 = TLElement::from_generator(ctx.ring, n, 1);
    auto a_minus_u1 = TLElement::identity(n, ctx.ring).scaled(ctx.a) - u1;
    for (int deg = 0; deg <= L; ++deg) {
        TLElement g = deg == 0 ? TLElement::identity(n, ctx.ring) : (deg % 2 == 1 ? u1 : a_minus_u1);
        X.diff.emplace(deg, right_mult_map(ctx, n, m_of(deg), m_of(deg - 1), g));
        meta.mults.emplace(deg, std::vector<std::pair<RingValue, TLElement>>{{RingValue::one(ctx.ring), g}});
    }
    X.induced_meta = std::move(meta);
    X.verify();
    return X;
}

ChainComplex cone(const ChainComplex& X) {
    ChainComplex C;
    C.ring = X.ring;
    C.lo = X.lo;
    C.hi = X.hi + 1;
    for (int deg = C.lo; deg <= C.hi; ++deg) {
        C.dims.push_back(X.dim(deg) + X.dim(deg - 1));
        std::vector<std::string> lbl;
        if (deg <= X.hi)
            for (const auto& s : X.labels_at(deg)) lbl.push_back("x:" + s);
        if (deg - 1 >= X.lo)
            for (const auto& s : X.labels_at(deg - 1)) lbl.push_back("y:" + s);
        C.labels.push_back(std::move(lbl));
    }
    for (int deg = C.lo + 1; deg <= C.hi; ++deg) {
        // d(x, y) = (d x + y, -d y)
        RingMatrix m = zero_matrix(X.ring, C.dim(deg - 1), C.dim(deg));
        int rows_x = X.dim(deg - 1);
        if (X.has_d(deg)) {
            const RingMatrix& dx = X.d(deg);
            for (const auto& [rc, v] : dx.entries) m.add(rc.first, rc.second, v);
        }
        for (int t = 0; t < X.dim(deg - 1); ++t) m.add(t, X.dim(deg) + t, RingValue::one(X.ring));
        if (X.has_d(deg - 1)) {
            const RingMatrix& dy = X.d(deg - 1);
            for (const auto& [rc, v] : dy.entries) m.add(rows_x + rc.first, X.dim(deg) + rc.second, -v);
        }
        C.diff.emplace(deg, std::move(m));
    }
    C.verify();
    return C;
}

ChainComplex suspend(const ChainComplex& X, int k) {
    ChainComplex S = X;
    S.lo = X.lo + k;
    S.hi = X.hi + k;
    S.diff.clear();
    for (const auto& [deg, m] : X.diff) S.diff.emplace(deg + k, m);
    S.induced_meta.reset();
    return S;
}

ChainComplex truncate(const ChainComplex& X, int p) {
    if (p < X.lo) throw invalid_input("truncation below the complex");
    ChainComplex T;
    T.ring = X.ring;
    T.lo = X.lo;
    T.hi = std::min(X.hi, p);
    for (int deg = T.lo; deg <= T.hi; ++deg) {
        T.dims.push_back(X.dim(deg));
        T.labels.push_back(X.labels_at(deg));
    }
    for (const auto& [deg, m] : X.diff)
        if (deg <= T.hi) T.diff.emplace(deg, m);
    return T;
}

std::vector<std::vector<int>> filtration_indices(int n, int k) {
    if (k < 0 || k > n) throw invalid_input("filtration stage out of range");
    std::vector<std::vector<int>> out;
    for (int i = -1; i <= n - 1; ++i) {
        const auto& basis = InducedBasis::get(n, n - i - 1);
        std::vector<int> sel;
        for (int t = 0; t < basis.size(); ++t) {
            const JonesWord& w = basis.word_at(t);
            int idx = word_index(w), term = word_terminus(w);
            bool keep = (idx >= 2 && term >= n - i - 1) ||
                        (idx == 1 && n - i - 1 <= term && term <= n - i - 1 + k);
            if (keep) sel.push_back(t);
        }
        out.push_back(std::move(sel));
    }
    return out;
}

std::vector<std::vector<std::string>> filtration_basis(int n, int k) {
    auto idx = filtration_indices(n, k);
    std::vector<std::vector<std::string>> out;
    for (int i = -1; i <= n - 1; ++i) {
        const auto& basis = InducedBasis::get(n, n - i - 1);
        std::vector<std::string> lbl;
        for (int t : idx[i + 1]) lbl.push_back(render_jones_word(basis.word_at(t)));
        out.push_back(std::move(lbl));
    }
    return out;
}

ChainComplex subcomplex(const ChainComplex& X, const std::vector<std::vector<int>>& selected) {
    if (static_cast<int>(selected.size()) != X.hi - X.lo + 1)
        throw invalid_input("selected index lists do not match the degree range");
    ChainComplex S;
    S.ring = X.ring;
    S.lo = X.lo;
    S.hi = X.hi;
    std::vector<std::map<int, int>> renumber(selected.size());
    for (std::size_t t = 0; t < selected.size(); ++t) {
        int deg = X.lo + static_cast<int>(t);
        std::vector<std::string> lbl;
        for (std::size_t j = 0; j < selected[t].size(); ++j) {
            int idx = selected[t][j];
            if (idx < 0 || idx >= X.dim(deg)) throw invalid_input("selected index out of range");
            renumber[t].emplace(idx, static_cast<int>(j));
            lbl.push_back(X.labels_at(deg)[idx]);
        }
        S.dims.push_back(static_cast<int>(selected[t].size()));
        S.labels.push_back(std::move(lbl));
    }
    for (const auto& [deg, m] : X.diff) {
        const auto& cols = renumber[deg - X.lo];
        const auto& rows = renumber[deg - 1 - X.lo];
        RingMatrix sm = zero_matrix(X.ring, S.dim(deg - 1), S.dim(deg));
        for (const auto& [rc, v] : m.entries) {
            auto cit = cols.find(rc.second);
            if (cit == cols.end()) continue;
            auto rit = rows.find(rc.first);
            if (rit == rows.end())
                throw invalid_input("NotClosed: selected labels are not closed under the differential");
            sm.add(rit->second, cit->second, v);
        }
        S.diff.emplace(deg, std::move(sm));
    }
    S.verify();
    return S;
}

ChainComplex quotient_complex(const ChainComplex& X, const std::vector<std::vector<int>>& sub) {
    if (static_cast<int>(sub.size()) != X.hi - X.lo + 1)
        throw invalid_input("subcomplex index lists do not match the degree range");
    // verify the sub data is closed (this also validates indices)
    (void)subcomplex(X, sub);
    std::vector<std::vector<int>> comp(sub.size());
    std::vector<std::map<int, int>> renumber(sub.size());
    for (std::size_t t = 0; t < sub.size(); ++t) {
        int deg = X.lo + static_cast<int>(t);
        std::vector<char> in_sub(X.dim(deg), 0);
        for (int idx : sub[t]) in_sub[idx] = 1;
        for (int idx = 0; idx < X.dim(deg); ++idx)
            if (!in_sub[idx]) {
                renumber[t].emplace(idx, static_cast<int>(comp[t].size()));
                comp[t].push_back(idx);
            }
    }
    ChainComplex Q;
    Q.ring = X.ring;
    Q.lo = X.lo;
    Q.hi = X.hi;
    for (std::size_t t = 0; t < comp.size(); ++t) {
        int deg = X.lo + static_cast<int>(t);
        std::vector<std::string> lbl;
        for (int idx : comp[t]) lbl.push_back(X.labels_at(deg)[idx]);
        Q.dims.push_back(static_cast<int>(comp[t].size()));
        Q.labels.push_back(std::move(lbl));
    }
    for (const auto& [deg, m] : X.diff) {
        const auto& cols = renumber[deg - X.lo];
        const auto& rows = renumber[deg - 1 - X.lo];
        RingMatrix qm = zero_matrix(X.ring, Q.dim(deg - 1), Q.dim(deg));
        for (const auto& [rc, v] : m.entries) {
            auto cit = cols.find(rc.second);
            if (cit == cols.end()) continue;  // column in the subcomplex
            auto rit = rows.find(rc.first);
            if (rit == rows.end()) continue;  // row projected away
            qm.add(rit->second, cit->second, v);
        }
        Q.diff.emplace(deg, std::move(qm));
    }
    Q.verify();
    return Q;
}

ChainMap phi0(const ParamContext& ctx, int n) {
    if (n < 1) throw invalid_input("phi0 needs n >= 1");
    ctx.require_v();
    const RingValue lam = ctx.require_lambda();
    ChainMap F;
    ChainComplex W_small = build_W(ctx, n - 1);
    ChainComplex W_big = build_W(ctx, n);
    auto sel = filtration_indices(n, 0);
    F.source = cone(W_small);
    F.target = subcomplex(W_big, sel);
    for (int i = -1; i <= n - 1; ++i) {
        const auto& big_basis = InducedBasis::get(n, n - i - 1);
        std::map<int, int> rowmap;
        const auto& seli = sel[i + 1];
        for (std::size_t j = 0; j < seli.size(); ++j) rowmap.emplace(seli[j], static_cast<int>(j));
        RingMatrix fm = zero_matrix(ctx.ring, F.target.dim(i), F.source.dim(i));
        int col = 0;
        // xi block: W(n-1)_i, basis (n-1, n-i-2)
        if (i <= n - 2) {
            const auto& src = InducedBasis::get(n - 1, n - i - 2);
            for (int t = 0; t < src.size(); ++t, ++col) {
                TLElement img = shift_element(src.lift(ctx.ring, t)).scaled(lam.pow(n - 1));
                for (const auto& [pos, v] : reduce(img, big_basis).coords) {
                    auto it = rowmap.find(pos);
                    check_internal(it != rowmap.end(), "phi0 image leaves F^0");
                    fm.add(it->second, col, v);
                }
            }
        }
        // eta block: W(n-1)_{i-1}, basis (n-1, n-i-1)
        if (i - 1 >= -1) {
            const auto& src = InducedBasis::get(n - 1, n - i - 1);
            TLElement tail = s_product_ascending(ctx, n, 1, n - i - 1);
            for (int t = 0; t < src.size(); ++t, ++col) {
                TLElement img =
                    multiply(ctx, shift_element(src.lift(ctx.ring, t)), tail).scaled(lam.pow(i));
                for (const auto& [pos, v] : reduce(img, big_basis).coords) {
                    auto it = rowmap.find(pos);
                    check_internal(it != rowmap.end(), "phi0 image leaves F^0");
                    fm.add(it->second, col, v);
                }
            }
        }
        check_internal(col == F.source.dim(i), "phi0 column count mismatch");
        F.f.emplace(i, std::move(fm));
    }
    F.verify_chain_map();
    return F;
}

ChainMap psik(const ParamContext& ctx, int n, int k) {
    if (k < 1 || k > n - 1) throw invalid_input("psik needs 1 <= k <= n-1");
    ctx.require_v();
    const RingValue lam = ctx.require_lambda();
    ChainMap F;
    ChainComplex W_small = build_W(ctx, n - 1);
    ChainComplex W_big = build_W(ctx, n);
    F.source = truncate(suspend(W_small, k + 1), n - 1);
    auto sel_k = filtration_indices(n, k);
    auto sel_km1 = filtration_indices(n, k - 1);
    ChainComplex Fk = subcomplex(W_big, sel_k);
    // positions of F^{k-1} inside F^k
    std::vector<std::vector<int>> sub_in_fk(sel_k.size());
    for (std::size_t t = 0; t < sel_k.size(); ++t) {
        std::map<int, int> posmap;
        for (std::size_t j = 0; j < sel_k[t].size(); ++j) posmap.emplace(sel_k[t][j], static_cast<int>(j));
        for (int idx : sel_km1[t]) {
            auto it = posmap.find(idx);
            check_internal(it != posmap.end(), "F^{k-1} not inside F^k");
            sub_in_fk[t].push_back(it->second);
        }
    }
    F.target = quotient_complex(Fk, sub_in_fk);
    // quotient-basis positions: original W(n) index -> row in F^k/F^{k-1}
    for (int i = k; i <= n - 1; ++i) {
        std::map<int, int> rowmap;  // W index -> quotient row
        {
            std::vector<char> in_sub(W_big.dim(i), 0);
            for (int idx : sel_km1[i + 1]) in_sub[idx] = 1;
            int r = 0;
            for (int idx : sel_k[i + 1])
                if (!in_sub[idx]) rowmap.emplace(idx, r++);
        }
        std::vector<char> in_fk(W_big.dim(i), 0);
        for (int idx : sel_k[i + 1]) in_fk[idx] = 1;
        const auto& big_basis = InducedBasis::get(n, n - i - 1);
        const auto& src = InducedBasis::get(n - 1, n - i - 1 + k);
        RingMatrix fm = zero_matrix(ctx.ring, F.target.dim(i), F.source.dim(i));
        check_internal(src.size() == F.source.dim(i), "psik source dimension mismatch");
        TLElement tail = s_product_ascending(ctx, n, 1, n - i - 1 + k);
        RingValue sign = RingValue::one(ctx.ring);
        if ((static_cast<long>(i) * (k + 1)) % 2 != 0) sign = -sign;
        for (int t = 0; t < src.size(); ++t) {
            TLElement img =
                multiply(ctx, shift_element(src.lift(ctx.ring, t)), tail).scaled(lam.pow(i) * sign);
            for (const auto& [pos, v] : reduce(img, big_basis).coords) {
                check_internal(in_fk[pos], "psik image leaves F^k");
                auto it = rowmap.find(pos);
                if (it == rowmap.end()) continue;  // lands in F^{k-1}: zero in the quotient
                fm.add(it->second, t, v);
            }
        }
        F.f.emplace(i, std::move(fm));
    }
    F.verify_chain_map();
    return F;
}

bool is_chain_iso(const ChainMap& F) {
    int lo = std::min(F.source.lo, F.target.lo), hi = std::max(F.source.hi, F.target.hi);
    for (int deg = lo; deg <= hi; ++deg) {
        int ds = F.source.dim(deg), dt = F.target.dim(deg);
        if (ds != dt) return false;
        if (ds == 0) continue;
        auto it = F.f.find(deg);
        if (it == F.f.end()) return false;
        if (!is_invertible_matrix(it->second)) return false;
    }
    return true;
}

namespace {

RingValue differential_scalar(const ChainComplex& X, int deg) {
    const auto& meta = *X.induced_meta;
    RingValue s = RingValue::zero(X.ring);
    auto it = meta.mults.find(deg);
    check_internal(it != meta.mults.end(), "missing multiplier metadata");
    for (const auto& [c, g] : it->second) s += c * constant_term(g);
    return s;
}

}  // namespace

ChainComplex trivial_coinvariants(const ChainComplex& X) {
    if (!X.induced_meta) throw invalid_input("NotInducedComplex: no induced-terms metadata");
    ChainComplex T;
    T.ring = X.ring;
    T.lo = X.lo;
    T.hi = X.hi;
    for (int deg = T.lo; deg <= T.hi; ++deg) {
        T.dims.push_back(1);
        T.labels.push_back({"t"});
    }
    for (const auto& [deg, m] : X.diff) {
        (void)m;
        RingMatrix s = zero_matrix(X.ring, 1, 1);
        s.add(0, 0, differential_scalar(X, deg));
        T.diff.emplace(deg, std::move(s));
    }
    T.verify();
    return T;
}

ChainComplex trivial_invariants(const ChainComplex& X) {
    if (!X.induced_meta) throw invalid_input("NotInducedComplex: no induced-terms metadata");
    ChainComplex T;
    T.ring = X.ring;
    T.lo = -X.hi;
    T.hi = -X.lo;
    for (int deg = T.lo; deg <= T.hi; ++deg) {
        T.dims.push_back(1);
        T.labels.push_back({"t*"});
    }
    // d_T at reflected degree j corresponds to the cochain map out of
    // cohomological degree -j, whose scalar is that of X's d(-j+1).
    for (int j = T.lo + 1; j <= T.hi; ++j) {
        int original = -j + 1;
        if (!X.has_d(original)) continue;
        RingMatrix s = zero_matrix(X.ring, 1, 1);
        s.add(0, 0, differential_scalar(X, original));
        T.diff.emplace(j, std::move(s));
    }
    T.verify();
    return T;
}

}  // namespace tl
