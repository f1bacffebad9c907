#include "tl/homology.hpp"

#include <algorithm>

namespace tl {

FfMat to_ff(const RingMatrix& m) {
    if (m.ring.kind() != RingKind::PrimeField) throw invalid_input("to_ff needs a prime field matrix");
    FfMat out(m.rows, m.cols, m.ring.prime());
    for (const auto& [rc, v] : m.entries) out.at(rc.first, rc.second) = v.as_residue();
    return out;
}

QMat to_q(const RingMatrix& m) {
    if (m.ring.kind() != RingKind::Rationals) throw invalid_input("to_q needs a rational matrix");
    QMat out(m.rows, m.cols);
    for (const auto& [rc, v] : m.entries) out.at(rc.first, rc.second) = v.as_mpq();
    return out;
}

ZMat to_z(const RingMatrix& m) {
    if (m.ring.kind() != RingKind::Integers) throw invalid_input("to_z needs an integer matrix");
    ZMat out(m.rows, m.cols);
    for (const auto& [rc, v] : m.entries) out.at(rc.first, rc.second) = v.as_mpz();
    return out;
}

int rank_of(const RingMatrix& m) {
    switch (m.ring.kind()) {
        case RingKind::PrimeField: return ff_rank(to_ff(m));
        case RingKind::Rationals: return q_rank(to_q(m));
        case RingKind::Integers: return z_rank(to_z(m));
    }
    return 0;
}

bool is_invertible_matrix(const RingMatrix& m) {
    if (m.rows != m.cols) return false;
    if (m.rows == 0) return true;
    if (m.ring.kind() == RingKind::Integers) {
        auto f = smith_invariant_factors(to_z(m));
        if (static_cast<int>(f.size()) != m.rows) return false;
        return std::all_of(f.begin(), f.end(), [](const mpz_class& x) { return x == 1; });
    }
    return rank_of(m) == m.rows;
}

std::string HomologyGroup::str(const RingSpec& ring) const {
    if (is_zero()) return "0";
    std::string base = ring.kind() == RingKind::Integers ? "Z"
                     : ring.kind() == RingKind::Rationals ? "Q"
                                                          : "F" + std::to_string(ring.prime());
    std::string out;
    if (rank > 0) {
        out = base;
        if (rank > 1) out += "^" + std::to_string(rank);
    }
    for (const auto& t : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + t.get_str();
    }
    return out;
}

std::map<int, HomologyGroup> homology_of(const ChainComplex& X) {
    X.verify();
    std::map<int, HomologyGroup> H;
    std::map<int, int> rank_cache;
    auto rank_d = [&](int deg) {
        if (!X.has_d(deg)) return 0;
        auto it = rank_cache.find(deg);
        if (it == rank_cache.end()) it = rank_cache.emplace(deg, rank_of(X.d(deg))).first;
        return it->second;
    };
    for (int deg = X.lo; deg <= X.hi; ++deg) {
        HomologyGroup g;
        g.rank = X.dim(deg) - rank_d(deg) - rank_d(deg + 1);
        check_internal(g.rank >= 0, "negative homology rank");
        if (X.ring.kind() == RingKind::Integers && X.has_d(deg + 1)) {
            for (const auto& f : smith_invariant_factors(to_z(X.d(deg + 1))))
                if (f > 1) g.torsion.push_back(f);
        }
        H.emplace(deg, std::move(g));
    }
    return H;
}

RingMatrix LeftModule::action_of_word(const FreeWord& w) const {
    RingMatrix m = RingMatrix::identity(ctx.ring, dim);
    for (int letter : w.letters) {
        if (letter < 1 || letter > n - 1) throw invalid_input("IndexOutOfRange in module action");
        m = m * action[letter - 1];
    }
    return m;
}

RingMatrix LeftModule::action_of_element(const TLElement& x) const {
    if (x.n() != n) throw invalid_input("SizeMismatch in module action");
    RingMatrix m = RingMatrix::zero(ctx.ring, dim, dim);
    for (const auto& [d, c] : x.terms()) {
        JonesWord w = diagram_to_jones_word(d);
        m = m + action_of_word(FreeWord{n, w.letters()}).scaled(c);
    }
    return m;
}

void LeftModule::verify_relations() const {
    for (int i = 1; i <= n - 1; ++i) {
        const RingMatrix& ai = action[i - 1];
        check_internal(ai.rows == dim && ai.cols == dim, "action matrix shape");
        check_internal(ai * ai == ai.scaled(ctx.a), "module violates U_i^2 = a U_i");
        for (int j = 1; j <= n - 1; ++j) {
            const RingMatrix& aj = action[j - 1];
            if (std::abs(i - j) >= 2)
                check_internal(ai * aj == aj * ai, "module violates commuting relation");
            if (std::abs(i - j) == 1)
                check_internal((ai * aj) * ai == ai, "module violates U_i U_j U_i = U_i");
        }
    }
}

LeftModule trivial_module(const ParamContext& ctx, int n) {
    LeftModule M;
    M.ctx = ctx;
    M.n = n;
    M.dim = 1;
    for (int i = 1; i <= n - 1; ++i) M.action.push_back(RingMatrix::zero(ctx.ring, 1, 1));
    M.verify_relations();
    return M;
}

LeftModule induced_as_module(const ParamContext& ctx, int n, int m) {
    LeftModule M;
    M.ctx = ctx;
    M.n = n;
    M.dim = InducedBasis::get(n, m).size();
    for (int i = 1; i <= n - 1; ++i)
        M.action.push_back(left_action_matrix(ctx, n, m, TLElement::from_generator(ctx.ring, n, i)));
    M.verify_relations();
    return M;
}

// kernel basis of a ring matrix, as columns of RingValue vectors
std::vector<std::vector<RingValue>> kernel_columns(const RingMatrix& m) {
    std::vector<std::vector<RingValue>> out;
    auto push_cols = [&](auto&& mat, auto&& get) {
        for (int c = 0; c < mat.cols; ++c) {
            std::vector<RingValue> v;
            v.reserve(mat.rows);
            for (int r = 0; r < mat.rows; ++r) v.push_back(get(mat, r, c));
            out.push_back(std::move(v));
        }
    };
    switch (m.ring.kind()) {
        case RingKind::PrimeField: {
            auto k = ff_kernel(to_ff(m));
            push_cols(k, [&](const FfMat& km, int r, int c) {
                return RingValue::from_long(m.ring, static_cast<long>(km.at(r, c)));
            });
            break;
        }
        case RingKind::Rationals: {
            auto k = q_kernel(to_q(m));
            push_cols(k, [&](const QMat& km, int r, int c) { return RingValue::from_mpq(m.ring, km.at(r, c)); });
            break;
        }
        case RingKind::Integers: {
            auto k = z_kernel(to_z(m));
            push_cols(k, [&](const ZMat& km, int r, int c) { return RingValue::from_mpz(m.ring, km.at(r, c)); });
            break;
        }
    }
    return out;
}

bool solve_matrix(const RingMatrix& A, const RingMatrix& B, RingMatrix& X) {
    switch (A.ring.kind()) {
        case RingKind::PrimeField: {
            FfMat x;
            if (!ff_solve_matrix(to_ff(A), to_ff(B), x)) return false;
            X = RingMatrix::zero(A.ring, x.rows, x.cols);
            for (int r = 0; r < x.rows; ++r)
                for (int c = 0; c < x.cols; ++c)
                    X.add(r, c, RingValue::from_long(A.ring, static_cast<long>(x.at(r, c))));
            return true;
        }
        case RingKind::Rationals: {
            QMat x;
            if (!q_solve_matrix(to_q(A), to_q(B), x)) return false;
            X = RingMatrix::zero(A.ring, x.rows, x.cols);
            for (int r = 0; r < x.rows; ++r)
                for (int c = 0; c < x.cols; ++c) X.add(r, c, RingValue::from_mpq(A.ring, x.at(r, c)));
            return true;
        }
        case RingKind::Integers: {
            ZMat x;
            if (!z_solve_matrix(to_z(A), to_z(B), x)) return false;
            X = RingMatrix::zero(A.ring, x.rows, x.cols);
            for (int r = 0; r < x.rows; ++r)
                for (int c = 0; c < x.cols; ++c) X.add(r, c, RingValue::from_mpz(A.ring, x.at(r, c)));
            return true;
        }
    }
    return false;
}

HomologyGroup cokernel_group(const RingMatrix& m) {
    HomologyGroup g;
    g.rank = m.rows - rank_of(m);
    if (m.ring.kind() == RingKind::Integers) {
        for (const auto& f : smith_invariant_factors(to_z(m)))
            if (f > 1) g.torsion.push_back(f);
    }
    return g;
}

LeftModule fineberg_module(const ParamContext& ctx, int n) {
    if (n < 1) throw invalid_input("fineberg_module needs n >= 1");
    // Kernel of the top boundary map of W(n), realized as right
    // multiplication by the expanded differential element (same support as
    // the Jacobsthal element, signs matching the boundary expansion).
    TLElement J = top_differential_element(ctx, n);
    RingMatrix rj = right_mult_map(ctx, n, 0, 0, J);
    auto kernel = kernel_columns(rj);
    const auto& full = InducedBasis::full(n);

    LeftModule M;
    M.ctx = ctx;
    M.n = n;
    M.dim = static_cast<int>(kernel.size());
    RingMatrix K = RingMatrix::zero(ctx.ring, full.size(), M.dim);
    for (int c = 0; c < M.dim; ++c) {
        TLElement e(n, ctx.ring);
        for (int r = 0; r < full.size(); ++r) {
            K.add(r, c, kernel[c][r]);
            e.add_term(full.diagram_at(r), kernel[c][r]);
        }
        M.ambient_basis.push_back(std::move(e));
    }
    for (int i = 1; i <= n - 1; ++i) {
        RingMatrix L = left_action_matrix(ctx, n, 0, TLElement::from_generator(ctx.ring, n, i));
        RingMatrix X;
        bool ok = solve_matrix(K, L * K, X);
        check_internal(ok, "Fineberg kernel not closed under the left action");
        M.action.push_back(std::move(X));
    }
    M.verify_relations();
    return M;
}

HomologyGroup coinvariants(const LeftModule& M) {
    const RingSpec& ring = M.ctx.ring;
    int gens = static_cast<int>(M.action.size());
    RingMatrix stacked = RingMatrix::zero(ring, M.dim, gens * M.dim);
    for (int i = 0; i < gens; ++i)
        for (const auto& [rc, v] : M.action[i].entries) stacked.add(rc.first, i * M.dim + rc.second, v);
    HomologyGroup g;
    if (gens == 0 || M.dim == 0) {
        g.rank = M.dim;
        return g;
    }
    g.rank = M.dim - rank_of(stacked);
    if (ring.kind() == RingKind::Integers) {
        for (const auto& f : smith_invariant_factors(to_z(stacked)))
            if (f > 1) g.torsion.push_back(f);
    }
    return g;
}

}  // namespace tl
