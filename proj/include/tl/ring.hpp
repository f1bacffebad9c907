#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tl/errors.hpp"

namespace tl {

enum class RingKind { Integers, Rationals, PrimeField };

// One of Z, Q, F_p.  Ring tags are `Z`, `Q`, `Fp:<p>`.
class RingSpec {
public:
    static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
    static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
    static RingSpec prime_field(std::uint64_t p);
    static RingSpec parse_tag(std::string_view tag);

    RingKind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    bool is_field() const { return kind_ != RingKind::Integers; }
    std::string tag() const;

    bool operator==(const RingSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

private:
    RingSpec(RingKind k, std::uint64_t p) : kind_(k), p_(p) {}
    RingKind kind_;
    std::uint64_t p_;
};

// Exact scalar in the ring named by a RingSpec.  No floating point anywhere.
class RingValue {
public:
    RingValue() : ring_(RingSpec::integers()) {}
    static RingValue zero(const RingSpec& r);
    static RingValue one(const RingSpec& r);
    static RingValue from_long(const RingSpec& r, long v);
    static RingValue from_mpz(const RingSpec& r, const mpz_class& v);
    static RingValue from_mpq(const RingSpec& r, const mpq_class& v);
    // Accepts "-3" everywhere and "p/q" over Q.
    static RingValue parse(const RingSpec& r, std::string_view text);

    const RingSpec& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;

    RingValue operator+(const RingValue& o) const;
    RingValue operator-(const RingValue& o) const;
    RingValue operator*(const RingValue& o) const;
    RingValue operator-() const;
    RingValue& operator+=(const RingValue& o) { return *this = *this + o; }
    RingValue& operator-=(const RingValue& o) { return *this = *this - o; }
    RingValue& operator*=(const RingValue& o) { return *this = *this * o; }

    RingValue inverse() const;  // throws invalid_input on a non-unit
    RingValue pow(long e) const;

    bool operator==(const RingValue& o) const;
    bool operator!=(const RingValue& o) const { return !(*this == o); }
    bool divides(const RingValue& o) const;

    // Exact conversions; throw invalid_input when the value does not fit the
    // requested view.
    const mpz_class& as_mpz() const;
    const mpq_class& as_mpq() const;
    std::uint64_t as_residue() const;

    std::string str() const;

private:
    explicit RingValue(const RingSpec& r) : ring_(r) {}
    void match(const RingValue& o) const;

    RingSpec ring_;
    mpz_class z_;
    mpq_class q_;
    std::uint64_t f_ = 0;
};

enum class ThetaChoice { Theta1, Theta2 };

// Parameter in a = v + v^-1 form.
struct FromUnit {
    RingValue v;
};
// Direct choice of a; no v/q/lambda/mu available.
struct DirectA {
    RingValue a;
};
using ParamChoice = std::variant<DirectA, FromUnit>;

// Coefficient ring plus the parameters a, and optionally v, q = v^2 and the
// theta data (lambda, mu).  Immutable after construction.
struct ParamContext {
    RingSpec ring = RingSpec::integers();
    RingValue a;
    std::optional<RingValue> v;
    std::optional<RingValue> q;
    std::optional<RingValue> lambda;
    std::optional<RingValue> mu;
    ThetaChoice theta = ThetaChoice::Theta1;

    bool has_unit() const { return v.has_value(); }
    const RingValue& require_v() const;
    const RingValue& require_lambda() const;
    const RingValue& require_mu() const;
};

ParamContext make_context(const RingSpec& ring, const ParamChoice& param,
                          ThetaChoice theta = ThetaChoice::Theta1);

enum class Annihilator { Zero, WholeRing };
Annihilator annihilator_of_a(const ParamContext& ctx);

}  // namespace tl
