#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tl/element.hpp"

namespace tl {

// Integer Laurent polynomial in q, used for quantum integers and binomials.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long c, int exp);
    static LaurentPoly constant(long long c) { return monomial(c, 0); }

    long long coeff(int exp) const;
    const std::map<int, long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

private:
    void add_coeff(int exp, long long c);
    std::map<int, long long> c_;  // exponent -> coefficient, no zeros
};

// Integer polynomial in delta = q + q^-1.
class DeltaPoly {
public:
    DeltaPoly() = default;
    explicit DeltaPoly(std::vector<long long> coeffs);
    static DeltaPoly constant(long long c) { return DeltaPoly({c}); }
    static DeltaPoly delta() { return DeltaPoly({0, 1}); }

    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    DeltaPoly operator+(const DeltaPoly& o) const;
    DeltaPoly operator-(const DeltaPoly& o) const;
    DeltaPoly operator*(const DeltaPoly& o) const;
    bool operator==(const DeltaPoly& o) const { return c_ == o.c_; }

    RingValue eval(const RingSpec& ring, const RingValue& x) const;
    long long eval_int(long long x) const;
    // `c0 + c1*d + c2*d^2 + ...` with d for delta
    std::string str() const;

private:
    void trim();
    std::vector<long long> c_;  // c_[k] is the coefficient of delta^k
};

// [n] = (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}.
LaurentPoly quantum_integer(int n);

// [n r] via the recursion [n r] = q^{n-r}[n-1 r-1] + q^{-r}[n-1 r], then
// converted to Z[delta] through q^k + q^-k = P_k(delta); a nonzero
// conversion remainder is an internal error.
DeltaPoly quantum_binomial(int n, int r);

// The closed forms of [n r] at delta = 0 (four parity cases).
long long qbc_delta_zero(int n, int r);

// Over a field: JW_n exists iff every [n r] evaluated at delta = a is nonzero.
bool jw_exists(const ParamContext& ctx, int n);

// Solve the linear system U_i (1 + sum c_d d) = 0 over non-identity diagrams;
// on success the two-sided annihilation and idempotency are verified.
// Absence is a value, not an error.
std::optional<TLElement> compute_jw(const ParamContext& ctx, int n);

// True iff e lies in 1 + I_n and U_i e = e U_i = 0 for all i.
bool check_jw(const ParamContext& ctx, const TLElement& e);

}  // namespace tl
