#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tl/diagram.hpp"
#include "tl/ring.hpp"

namespace tl {

// A word in the free monoid on U_1..U_{n-1}; empty = identity.
struct FreeWord {
    int n = 0;
    std::vector<int> letters;

    void validate() const;
};

// `1` or whitespace-separated tokens `U<k>`.
FreeWord parse_word(int n, std::string_view text);

int word_index(const FreeWord& w);
int word_terminus(const FreeWord& w);

// Compose the generator diagrams of a word left to right, accumulating loops.
std::pair<PlanarDiagram, int> word_diagram(const FreeWord& w);

// Finite formal sum of diagrams with ring coefficients; no zero terms stored.
class TLElement {
public:
    TLElement(int n, const RingSpec& ring) : n_(n), ring_(ring) {}
    static TLElement zero(int n, const RingSpec& ring) { return TLElement(n, ring); }
    static TLElement identity(int n, const RingSpec& ring);
    static TLElement from_diagram(const RingSpec& ring, const PlanarDiagram& d);
    static TLElement from_generator(const RingSpec& ring, int n, int i);

    int n() const { return n_; }
    const RingSpec& ring() const { return ring_; }
    const std::map<PlanarDiagram, RingValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PlanarDiagram& d, const RingValue& c);
    RingValue coefficient(const PlanarDiagram& d) const;

    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const RingValue& c) const;
    bool operator==(const TLElement& o) const { return n_ == o.n_ && ring_ == o.ring_ && terms_ == o.terms_; }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

private:
    int n_;
    RingSpec ring_;
    std::map<PlanarDiagram, RingValue> terms_;
};

// Product of generator diagrams with an a^loops coefficient.
TLElement from_word(const ParamContext& ctx, const FreeWord& w);

// Bilinear extension of diagram pasting, each loop contributing a factor a.
TLElement multiply(const ParamContext& ctx, const TLElement& x, const TLElement& y);

// Semantic Jones normal form: w = a^k * x_jw in TL_n(a) for every a.
std::pair<int, JonesWord> jones_normal_form(const FreeWord& w);

// Coefficient of the identity diagram; the action of the element on the
// trivial module.
RingValue constant_term(const TLElement& x);

// s_i = lambda + mu U_i.
TLElement s_element(const ParamContext& ctx, int n, int i);

// s_hi s_{hi-1} ... s_lo, indices decreasing left to right; empty if hi < lo.
TLElement s_product(const ParamContext& ctx, int n, int hi, int lo);

// s_lo s_{lo+1} ... s_hi, indices increasing left to right; empty if hi < lo.
TLElement s_product_ascending(const ParamContext& ctx, int n, int lo, int hi);

// The Jacobsthal element J_n: signed sum over the parity-constrained
// decreasing sequences with coefficients (-1)^{(r-1)+n} (mu/lambda)^r.
TLElement jacobsthal_element(const ParamContext& ctx, int n);

// The element whose right multiplication is the top boundary map of W(n),
// obtained by expanding sum_j (-1)^j lambda^{-j} s_j...s_1: same monomials
// as the Jacobsthal element but with coefficients (-1)^{a_1} (mu/lambda)^r.
TLElement top_differential_element(const ParamContext& ctx, int n);

std::string render_jones_word(const JonesWord& w);
std::string render_free_word(const FreeWord& w);
// `c1*<jones-word> + c2*<jones-word> + ...`, terms in Jones basis order.
std::string render_element(const TLElement& x);

}  // namespace tl
