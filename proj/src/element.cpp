#include "tl/element.hpp"

#include <algorithm>
#include <sstream>

namespace tl {

void FreeWord::validate() const {
    for (int l : letters)
        if (l < 1 || l > n - 1)
            throw invalid_input("IndexOutOfRange: letter U_" + std::to_string(l) + " in TL_" + std::to_string(n));
}

FreeWord parse_word(int n, std::string_view text) {
    FreeWord w{n, {}};
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() == 1 && toks[0] == "1") return w;
    for (const auto& t : toks) {
        if (t.size() < 2 || t[0] != 'U') throw invalid_input("bad word token: " + t);
        int letter = 0;
        try {
            letter = std::stoi(t.substr(1));
        } catch (...) {
            throw invalid_input("bad word token: " + t);
        }
        w.letters.push_back(letter);
    }
    w.validate();
    return w;
}

int word_index(const FreeWord& w) {
    if (w.letters.empty()) return infinite_index;
    return *std::min_element(w.letters.begin(), w.letters.end());
}

int word_terminus(const FreeWord& w) {
    if (w.letters.empty()) return infinite_index;
    return w.letters.back();
}

std::pair<PlanarDiagram, int> word_diagram(const FreeWord& w) {
    w.validate();
    PlanarDiagram d = PlanarDiagram::identity(w.n);
    int loops = 0;
    for (int l : w.letters) {
        auto [nd, k] = compose(d, PlanarDiagram::generator(w.n, l));
        d = nd;
        loops += k;
    }
    return {d, loops};
}

TLElement TLElement::identity(int n, const RingSpec& ring) {
    return from_diagram(ring, PlanarDiagram::identity(n));
}

TLElement TLElement::from_diagram(const RingSpec& ring, const PlanarDiagram& d) {
    TLElement x(d.n(), ring);
    x.add_term(d, RingValue::one(ring));
    return x;
}

TLElement TLElement::from_generator(const RingSpec& ring, int n, int i) {
    return from_diagram(ring, PlanarDiagram::generator(n, i));
}

void TLElement::add_term(const PlanarDiagram& d, const RingValue& c) {
    if (c.is_zero()) return;
    if (d.n() != n_) throw invalid_input("SizeMismatch: diagram size differs from element size");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RingValue TLElement::coefficient(const PlanarDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? RingValue::zero(ring_) : it->second;
}

TLElement TLElement::operator+(const TLElement& o) const {
    TLElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
    TLElement r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

TLElement TLElement::scaled(const RingValue& c) const {
    TLElement r(n_, ring_);
    for (const auto& [d, v] : terms_) r.add_term(d, v * c);
    return r;
}

TLElement from_word(const ParamContext& ctx, const FreeWord& w) {
    auto [d, loops] = word_diagram(w);
    TLElement x(w.n, ctx.ring);
    x.add_term(d, ctx.a.pow(loops));
    return x;
}

TLElement multiply(const ParamContext& ctx, const TLElement& x, const TLElement& y) {
    if (x.n() != y.n()) throw invalid_input("SizeMismatch: multiplying elements of different sizes");
    TLElement r(x.n(), ctx.ring);
    for (const auto& [dx, cx] : x.terms()) {
        for (const auto& [dy, cy] : y.terms()) {
            auto [d, loops] = compose(dx, dy);
            r.add_term(d, cx * cy * ctx.a.pow(loops));
        }
    }
    return r;
}

std::pair<int, JonesWord> jones_normal_form(const FreeWord& w) {
    auto [d, loops] = word_diagram(w);
    return {loops, diagram_to_jones_word(d)};
}

RingValue constant_term(const TLElement& x) {
    return x.coefficient(PlanarDiagram::identity(x.n()));
}

TLElement s_element(const ParamContext& ctx, int n, int i) {
    const RingValue& lambda = ctx.require_lambda();
    const RingValue& mu = ctx.require_mu();
    TLElement r = TLElement::identity(n, ctx.ring).scaled(lambda);
    r.add_term(PlanarDiagram::generator(n, i), mu);
    return r;
}

TLElement s_product(const ParamContext& ctx, int n, int hi, int lo) {
    ctx.require_v();
    TLElement r = TLElement::identity(n, ctx.ring);
    for (int i = hi; i >= lo; --i) r = multiply(ctx, r, s_element(ctx, n, i));
    return r;
}

TLElement s_product_ascending(const ParamContext& ctx, int n, int lo, int hi) {
    ctx.require_v();
    TLElement r = TLElement::identity(n, ctx.ring);
    for (int i = lo; i <= hi; ++i) r = multiply(ctx, r, s_element(ctx, n, i));
    return r;
}

TLElement jacobsthal_element(const ParamContext& ctx, int n) {
    if (n < 1) throw invalid_input("jacobsthal_element needs n >= 1");
    const RingValue& lambda = ctx.require_lambda();
    const RingValue& mu = ctx.require_mu();
    RingValue ratio = mu * lambda.inverse();
    TLElement r(n, ctx.ring);
    for (const auto& seq : enumerate_jacobsthal_sequences(n)) {
        int rr = static_cast<int>(seq.size());
        RingValue coeff = ratio.pow(rr);
        if (((rr - 1) + n) % 2 != 0) coeff = -coeff;
        FreeWord w{n, seq};
        auto [d, loops] = word_diagram(w);
        check_internal(loops == 0, "Jacobsthal monomial composed with loops");
        r.add_term(d, coeff);
    }
    return r;
}

TLElement top_differential_element(const ParamContext& ctx, int n) {
    if (n < 1) throw invalid_input("top_differential_element needs n >= 1");
    const RingValue& lambda = ctx.require_lambda();
    const RingValue& mu = ctx.require_mu();
    RingValue ratio = mu * lambda.inverse();
    TLElement r(n, ctx.ring);
    for (const auto& seq : enumerate_jacobsthal_sequences(n)) {
        int rr = static_cast<int>(seq.size());
        int a1 = seq.empty() ? 0 : seq[0];
        RingValue coeff = ratio.pow(rr);
        if (a1 % 2 != 0) coeff = -coeff;
        FreeWord w{n, seq};
        auto [d, loops] = word_diagram(w);
        check_internal(loops == 0, "top differential monomial composed with loops");
        r.add_term(d, coeff);
    }
    return r;
}

std::string render_jones_word(const JonesWord& w) {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.segments) {
        out += "(";
        for (int t = s.a; t <= s.b; ++t) {
            if (t > s.a) out += " ";
            out += "U" + std::to_string(t);
        }
        out += ")";
    }
    return out;
}

std::string render_free_word(const FreeWord& w) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += " ";
        out += "U" + std::to_string(w.letters[i]);
    }
    return out;
}

std::string render_element(const TLElement& x) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<JonesWord, RingValue>> items;
    for (const auto& [d, c] : x.terms()) items.emplace_back(diagram_to_jones_word(d), c);
    std::sort(items.begin(), items.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += " + ";
        out += items[i].second.str() + "*" + render_jones_word(items[i].first);
    }
    return out;
}

}  // namespace tl
