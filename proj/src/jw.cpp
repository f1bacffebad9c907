#include "tl/jw.hpp"

#include <algorithm>

#include "tl/homology.hpp"

namespace tl {

LaurentPoly LaurentPoly::monomial(long long c, int exp) {
    LaurentPoly p;
    p.add_coeff(exp, c);
    return p;
}

long long LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::add_coeff(int exp, long long c) {
    if (c == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
        c_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    for (auto [e, c] : o.c_) p.add_coeff(e, c);
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    for (auto [e, c] : o.c_) p.add_coeff(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p;
    for (auto [e1, c1] : c_)
        for (auto [e2, c2] : o.c_) p.add_coeff(e1 + e2, c1 * c2);
    return p;
}

DeltaPoly::DeltaPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

void DeltaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
    std::vector<long long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return DeltaPoly(std::move(out));
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& o) const {
    std::vector<long long> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return DeltaPoly(std::move(out));
}

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
    if (c_.empty() || o.c_.empty()) return DeltaPoly();
    std::vector<long long> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return DeltaPoly(std::move(out));
}

RingValue DeltaPoly::eval(const RingSpec& ring, const RingValue& x) const {
    RingValue acc = RingValue::zero(ring);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + RingValue::from_long(ring, *it);
    return acc;
}

long long DeltaPoly::eval_int(long long x) const {
    long long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string DeltaPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!out.empty()) out += c_[k] > 0 ? " + " : " - ";
        else if (c_[k] < 0) out += "-";
        long long mag = std::llabs(c_[k]);
        std::string term;
        if (k == 0) term = std::to_string(mag);
        else {
            if (mag != 1) term = std::to_string(mag) + "*";
            term += "d";
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

LaurentPoly quantum_integer(int n) {
    if (n < 0) throw invalid_input("quantum_integer needs n >= 0");
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p = p + LaurentPoly::monomial(1, n - 1 - 2 * k);
    return p;
}

namespace {

LaurentPoly quantum_binomial_laurent(int n, int r) {
    if (r < 0 || r > n) throw invalid_input("quantum binomial out of range");
    // [n r] = q^{n-r} [n-1 r-1] + q^{-r} [n-1 r]
    std::vector<std::vector<LaurentPoly>> table(n + 1);
    for (int nn = 0; nn <= n; ++nn) {
        table[nn].resize(nn + 1);
        for (int rr = 0; rr <= nn; ++rr) {
            if (rr == 0 || rr == nn) {
                table[nn][rr] = LaurentPoly::constant(1);
            } else {
                table[nn][rr] = LaurentPoly::monomial(1, nn - rr) * table[nn - 1][rr - 1] +
                                LaurentPoly::monomial(1, -rr) * table[nn - 1][rr];
            }
        }
    }
    return table[n][r];
}

// Chebyshev-like conversion basis: q^k + q^-k = P_k(delta),
// P_0 = 2, P_1 = delta, P_{k+1} = delta P_k - P_{k-1}.
DeltaPoly p_poly(int k) {
    if (k == 0) return DeltaPoly::constant(2);
    DeltaPoly prev = DeltaPoly::constant(2), cur = DeltaPoly::delta();
    for (int t = 1; t < k; ++t) {
        DeltaPoly next = DeltaPoly::delta() * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

DeltaPoly quantum_binomial(int n, int r) {
    LaurentPoly f = quantum_binomial_laurent(n, r);
    DeltaPoly out;
    LaurentPoly remainder = f;
    // peel symmetric pairs q^k + q^-k from the top
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        auto [exp, c] = *it;
        if (exp < 0) break;
        if (exp == 0) {
            out = out + DeltaPoly::constant(c);
            remainder = remainder - LaurentPoly::constant(c);
        } else {
            out = out + DeltaPoly::constant(c) * p_poly(exp);
            remainder = remainder - (LaurentPoly::monomial(c, exp) + LaurentPoly::monomial(c, -exp));
        }
    }
    check_internal(remainder.is_zero(), "quantum binomial is not a polynomial in delta");
    return out;
}

long long qbc_delta_zero(int n, int r) {
    if (r < 0 || r > n) throw invalid_input("quantum binomial out of range");
    auto binom = [](int a, int t) {
        long long acc = 1;
        for (int i = 1; i <= t; ++i) acc = acc * (a - t + i) / i;
        return acc;
    };
    if (n % 2 == 0 && r % 2 == 1) return 0;
    if (n % 2 == 0 && r % 2 == 0) return binom(n / 2, r / 2);
    int a = (n - 1) / 2;
    if (r % 2 == 0) {
        int t = r / 2;
        return (t % 2 == 0 ? 1 : -1) * binom(a, t);
    }
    int t = (r - 1) / 2;
    return ((a - t) % 2 == 0 ? 1 : -1) * binom(a, t);
}

bool jw_exists(const ParamContext& ctx, int n) {
    if (!ctx.ring.is_field()) throw invalid_input("NotAField: jw_exists needs a field");
    ctx.require_v();
    for (int r = 0; r <= n; ++r)
        if (quantum_binomial(n, r).eval(ctx.ring, ctx.a).is_zero()) return false;
    return true;
}

std::optional<TLElement> compute_jw(const ParamContext& ctx, int n) {
    if (n < 1) throw invalid_input("compute_jw needs n >= 1");
    const auto& full = InducedBasis::full(n);
    const int N = full.size();
    // unknowns: coefficients over the non-identity diagrams (positions != id)
    int id_pos = full.position_of(PlanarDiagram::identity(n));
    std::vector<int> unknowns;
    for (int t = 0; t < N; ++t)
        if (t != id_pos) unknowns.push_back(t);
    const int U = static_cast<int>(unknowns.size());
    // equations: for each generator i and each diagram row e:
    //   sum_d c_d [U_i d]_e = -[U_i]_e
    RingMatrix A = RingMatrix::zero(ctx.ring, (n - 1) * N, U);
    RingMatrix B = RingMatrix::zero(ctx.ring, (n - 1) * N, 1);
    for (int i = 1; i <= n - 1; ++i) {
        RingMatrix L = left_action_matrix(ctx, n, 0, TLElement::from_generator(ctx.ring, n, i));
        for (int col = 0; col < U; ++col)
            for (int row = 0; row < N; ++row) {
                RingValue v = L.at(row, unknowns[col]);
                if (!v.is_zero()) A.add((i - 1) * N + row, col, v);
            }
        for (int row = 0; row < N; ++row) {
            RingValue v = L.at(row, id_pos);
            if (!v.is_zero()) B.add((i - 1) * N + row, 0, -v);
        }
    }
    RingMatrix X;
    if (!solve_matrix(A, B, X)) return std::nullopt;
    TLElement jw = TLElement::identity(n, ctx.ring);
    for (int col = 0; col < U; ++col) jw.add_term(full.diagram_at(unknowns[col]), X.at(col, 0));
    check_internal(check_jw(ctx, jw), "one-sided JW solution fails the two-sided check");
    check_internal(multiply(ctx, jw, jw) == jw, "JW solution is not idempotent");
    return jw;
}

bool check_jw(const ParamContext& ctx, const TLElement& e) {
    int n = e.n();
    if (!constant_term(e).is_one()) return false;
    for (int i = 1; i <= n - 1; ++i) {
        auto ui = TLElement::from_generator(ctx.ring, n, i);
        if (!multiply(ctx, ui, e).is_zero()) return false;
        if (!multiply(ctx, e, ui).is_zero()) return false;
    }
    return true;
}

}  // namespace tl
