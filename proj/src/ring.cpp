#include "tl/ring.hpp"

#include <charconv>

namespace tl {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

RingSpec RingSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw invalid_input("BadPrime: " + std::to_string(p) + " is not prime");
    if (p >= (1ull << 31)) throw invalid_input("BadPrime: modulus too large");
    return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse_tag(std::string_view tag) {
    if (tag == "Z") return integers();
    if (tag == "Q") return rationals();
    if (tag.size() > 3 && tag.substr(0, 3) == "Fp:") {
        std::uint64_t p = 0;
        auto body = tag.substr(3);
        auto res = std::from_chars(body.data(), body.data() + body.size(), p);
        if (res.ec != std::errc() || res.ptr != body.data() + body.size())
            throw invalid_input("bad ring tag: " + std::string(tag));
        return prime_field(p);
    }
    throw invalid_input("bad ring tag: " + std::string(tag));
}

std::string RingSpec::tag() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "Fp:" + std::to_string(p_);
    }
    return "?";
}

RingValue RingValue::zero(const RingSpec& r) { return RingValue(r); }

RingValue RingValue::one(const RingSpec& r) { return from_long(r, 1); }

RingValue RingValue::from_long(const RingSpec& r, long v) {
    RingValue x(r);
    switch (r.kind()) {
        case RingKind::Integers: x.z_ = v; break;
        case RingKind::Rationals: x.q_ = v; break;
        case RingKind::PrimeField: {
            long long m = static_cast<long long>(r.prime());
            long long t = static_cast<long long>(v) % m;
            if (t < 0) t += m;
            x.f_ = static_cast<std::uint64_t>(t);
            break;
        }
    }
    return x;
}

RingValue RingValue::from_mpz(const RingSpec& r, const mpz_class& v) {
    RingValue x(r);
    switch (r.kind()) {
        case RingKind::Integers: x.z_ = v; break;
        case RingKind::Rationals: x.q_ = v; break;
        case RingKind::PrimeField: {
            mpz_class m(static_cast<unsigned long>(r.prime()));
            mpz_class t = v % m;
            if (t < 0) t += m;
            x.f_ = t.get_ui();
            break;
        }
    }
    return x;
}

RingValue RingValue::from_mpq(const RingSpec& r, const mpq_class& v) {
    if (r.kind() == RingKind::Rationals) {
        RingValue x(r);
        x.q_ = v;
        x.q_.canonicalize();
        return x;
    }
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() == 1) return from_mpz(r, c.get_num());
    if (r.kind() == RingKind::PrimeField)
        return from_mpz(r, c.get_num()) * from_mpz(r, c.get_den()).inverse();
    throw invalid_input("non-integral value over Z: " + c.get_str());
}

RingValue RingValue::parse(const RingSpec& r, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw invalid_input("empty scalar literal");
    try {
        if (s.find('/') != std::string::npos) return from_mpq(r, mpq_class(s));
        return from_mpz(r, mpz_class(s));
    } catch (const std::invalid_argument&) {
        throw invalid_input("bad scalar literal: " + s);
    }
}

void RingValue::match(const RingValue& o) const {
    if (ring_ != o.ring_) throw invalid_input("ring mismatch: " + ring_.tag() + " vs " + o.ring_.tag());
}

bool RingValue::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return z_ == 0;
        case RingKind::Rationals: return q_ == 0;
        case RingKind::PrimeField: return f_ == 0;
    }
    return false;
}

bool RingValue::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return z_ == 1;
        case RingKind::Rationals: return q_ == 1;
        case RingKind::PrimeField: return f_ == 1 % ring_.prime();
    }
    return false;
}

bool RingValue::is_unit() const {
    if (ring_.kind() == RingKind::Integers) return z_ == 1 || z_ == -1;
    return !is_zero();
}

RingValue RingValue::operator+(const RingValue& o) const {
    match(o);
    RingValue x(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers: x.z_ = z_ + o.z_; break;
        case RingKind::Rationals: x.q_ = q_ + o.q_; break;
        case RingKind::PrimeField: x.f_ = (f_ + o.f_) % ring_.prime(); break;
    }
    return x;
}

RingValue RingValue::operator-(const RingValue& o) const {
    match(o);
    RingValue x(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers: x.z_ = z_ - o.z_; break;
        case RingKind::Rationals: x.q_ = q_ - o.q_; break;
        case RingKind::PrimeField: x.f_ = (f_ + ring_.prime() - o.f_) % ring_.prime(); break;
    }
    return x;
}

RingValue RingValue::operator*(const RingValue& o) const {
    match(o);
    RingValue x(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers: x.z_ = z_ * o.z_; break;
        case RingKind::Rationals: x.q_ = q_ * o.q_; break;
        case RingKind::PrimeField: x.f_ = mulmod(f_, o.f_, ring_.prime()); break;
    }
    return x;
}

RingValue RingValue::operator-() const {
    RingValue x(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers: x.z_ = -z_; break;
        case RingKind::Rationals: x.q_ = -q_; break;
        case RingKind::PrimeField: x.f_ = f_ == 0 ? 0 : ring_.prime() - f_; break;
    }
    return x;
}

RingValue RingValue::inverse() const {
    if (!is_unit()) throw invalid_input("NonUnit: " + str() + " is not invertible in " + ring_.tag());
    RingValue x(ring_);
    switch (ring_.kind()) {
        case RingKind::Integers: x.z_ = z_; break;  // +-1
        case RingKind::Rationals: x.q_ = 1 / q_; break;
        case RingKind::PrimeField: x.f_ = powmod(f_, ring_.prime() - 2, ring_.prime()); break;
    }
    return x;
}

RingValue RingValue::pow(long e) const {
    RingValue base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RingValue r = one(ring_);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool RingValue::operator==(const RingValue& o) const {
    if (ring_ != o.ring_) return false;
    switch (ring_.kind()) {
        case RingKind::Integers: return z_ == o.z_;
        case RingKind::Rationals: return q_ == o.q_;
        case RingKind::PrimeField: return f_ == o.f_;
    }
    return false;
}

bool RingValue::divides(const RingValue& o) const {
    match(o);
    if (ring_.kind() != RingKind::Integers) {
        if (!is_zero()) return true;  // fields
        return o.is_zero();
    }
    if (z_ == 0) return o.z_ == 0;
    return mpz_divisible_p(o.z_.get_mpz_t(), z_.get_mpz_t()) != 0;
}

const mpz_class& RingValue::as_mpz() const {
    if (ring_.kind() != RingKind::Integers) throw invalid_input("not an integer value");
    return z_;
}

const mpq_class& RingValue::as_mpq() const {
    if (ring_.kind() != RingKind::Rationals) throw invalid_input("not a rational value");
    return q_;
}

std::uint64_t RingValue::as_residue() const {
    if (ring_.kind() != RingKind::PrimeField) throw invalid_input("not a prime-field value");
    return f_;
}

std::string RingValue::str() const {
    switch (ring_.kind()) {
        case RingKind::Integers: return z_.get_str();
        case RingKind::Rationals: return q_.get_str();
        case RingKind::PrimeField: return std::to_string(f_);
    }
    return "?";
}

const RingValue& ParamContext::require_v() const {
    if (!v) throw invalid_input("MissingUnit: this operation needs a context with a = v + v^-1");
    return *v;
}

const RingValue& ParamContext::require_lambda() const {
    require_v();
    return *lambda;
}

const RingValue& ParamContext::require_mu() const {
    require_v();
    return *mu;
}

ParamContext make_context(const RingSpec& ring, const ParamChoice& param, ThetaChoice theta) {
    ParamContext ctx;
    ctx.ring = ring;
    ctx.theta = theta;
    if (std::holds_alternative<DirectA>(param)) {
        ctx.a = std::get<DirectA>(param).a;
        if (ctx.a.ring() != ring) throw invalid_input("parameter a from a different ring");
        return ctx;
    }
    const RingValue& v = std::get<FromUnit>(param).v;
    if (v.ring() != ring) throw invalid_input("parameter v from a different ring");
    RingValue vinv = v.inverse();  // throws NonUnit
    ctx.v = v;
    ctx.a = v + vinv;
    ctx.q = v * v;
    if (theta == ThetaChoice::Theta1) {
        // theta1(T_i) = vU_i - 1
        ctx.lambda = -RingValue::one(ring);
        ctx.mu = v;
    } else {
        // theta2(T_i) = v^2 - vU_i
        ctx.lambda = *ctx.q;
        ctx.mu = -v;
    }
    return ctx;
}

Annihilator annihilator_of_a(const ParamContext& ctx) {
    // Z, Q and F_p are integral domains.
    return ctx.a.is_zero() ? Annihilator::WholeRing : Annihilator::Zero;
}

}  // namespace tl
