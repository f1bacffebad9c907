#include "tl/induced.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tl {

RingMatrix RingMatrix::zero(const RingSpec& r, int rows, int cols) {
    RingMatrix m;
    m.ring = r;
    m.rows = rows;
    m.cols = cols;
    return m;
}

RingMatrix RingMatrix::identity(const RingSpec& r, int n) {
    RingMatrix m = zero(r, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, RingValue::one(r));
    return m;
}

void RingMatrix::add(int r, int c, const RingValue& v) {
    if (v.is_zero()) return;
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw invalid_input("matrix index out of range");
    auto key = std::make_pair(r, c);
    auto it = entries.find(key);
    if (it == entries.end()) {
        entries.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) entries.erase(it);
    }
}

void RingMatrix::set(int r, int c, const RingValue& v) {
    auto key = std::make_pair(r, c);
    entries.erase(key);
    if (!v.is_zero()) {
        if (r < 0 || r >= rows || c < 0 || c >= cols) throw invalid_input("matrix index out of range");
        entries.emplace(key, v);
    }
}

RingValue RingMatrix::at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? RingValue::zero(ring) : it->second;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (cols != o.rows || ring != o.ring) throw invalid_input("matrix product shape/ring mismatch");
    RingMatrix out = zero(ring, rows, o.cols);
    for (const auto& [rc, v] : entries) {
        auto [r, k] = rc;
        auto it = o.entries.lower_bound({k, 0});
        for (; it != o.entries.end() && it->first.first == k; ++it)
            out.add(r, it->first.second, v * it->second);
    }
    return out;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (rows != o.rows || cols != o.cols || ring != o.ring) throw invalid_input("matrix sum mismatch");
    RingMatrix out = *this;
    for (const auto& [rc, v] : o.entries) out.add(rc.first, rc.second, v);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (rows != o.rows || cols != o.cols || ring != o.ring) throw invalid_input("matrix difference mismatch");
    RingMatrix out = *this;
    for (const auto& [rc, v] : o.entries) out.add(rc.first, rc.second, -v);
    return out;
}

RingMatrix RingMatrix::scaled(const RingValue& c) const {
    RingMatrix out = zero(ring, rows, cols);
    for (const auto& [rc, v] : entries) out.add(rc.first, rc.second, v * c);
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out = zero(ring, cols, rows);
    for (const auto& [rc, v] : entries) out.set(rc.second, rc.first, v);
    return out;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return rows == o.rows && cols == o.cols && ring == o.ring && entries == o.entries;
}

namespace {

std::vector<JonesWord> enumerate_jones_words(int n) {
    std::vector<JonesWord> out;
    out.push_back(JonesWord{n, {}});
    std::vector<JonesWord::Segment> cur;
    std::function<void(int, int)> rec = [&](int max_a, int max_b) {
        for (int a = 1; a <= max_a; ++a) {
            for (int b = a; b <= max_b; ++b) {
                cur.push_back({a, b});
                out.push_back(JonesWord{n, cur});
                rec(a - 1, b - 1);
                cur.pop_back();
            }
        }
    };
    rec(n - 1, n - 1);
    std::sort(out.begin(), out.end());
    check_internal(out.size() == catalan(n), "Jones word enumeration does not match Catalan");
    return out;
}

}  // namespace

const std::vector<JonesWord>& jones_basis(int n) {
    return InducedBasis::full(n).words();
}

InducedBasis::InducedBasis(int n, int m) : n_(n), m_(m) {
    if (m < 0 || m > n) throw invalid_input("induced basis needs 0 <= m <= n");
    for (const auto& w : enumerate_jones_words(n)) {
        if (word_terminus(w) > m - 1) {
            diagrams_.push_back(jones_word_to_diagram(w));
            pos_.emplace(diagrams_.back(), static_cast<int>(words_.size()));
            words_.push_back(w);
        }
    }
}

const InducedBasis& InducedBasis::get(int n, int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<InducedBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<InducedBasis>(new InducedBasis(n, m))).first;
    return *it->second;
}

int InducedBasis::position_of(const PlanarDiagram& d) const {
    auto it = pos_.find(d);
    return it == pos_.end() ? -1 : it->second;
}

TLElement InducedBasis::lift(const RingSpec& ring, int i) const {
    return TLElement::from_diagram(ring, diagrams_[i]);
}

std::vector<JonesWord> ideal_basis(int n, int m) {
    std::vector<JonesWord> out;
    for (const auto& w : jones_basis(n))
        if (word_terminus(w) <= m - 1) out.push_back(w);
    return out;
}

void ModuleVector::add(int i, const RingValue& v) {
    if (v.is_zero()) return;
    auto it = coords.find(i);
    if (it == coords.end()) {
        coords.emplace(i, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) coords.erase(it);
    }
}

bool ModuleVector::operator==(const ModuleVector& o) const {
    return basis == o.basis && coords == o.coords;
}

ModuleVector reduce(const TLElement& x, const InducedBasis& basis) {
    if (x.n() != basis.n()) throw invalid_input("SizeMismatch in reduce");
    ModuleVector v;
    v.basis = &basis;
    for (const auto& [d, c] : x.terms()) {
        int pos = basis.position_of(d);
        if (pos >= 0) v.add(pos, c);
    }
    return v;
}

ModuleVector reduce(const ParamContext& ctx, const TLElement& x, int m) {
    (void)ctx;
    return reduce(x, InducedBasis::get(x.n(), m));
}

namespace {

// Columns are independent; build them in parallel and merge.
RingMatrix columns_to_matrix(const RingSpec& ring, int rows, const std::vector<ModuleVector>& cols) {
    RingMatrix out = RingMatrix::zero(ring, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (const auto& [i, v] : cols[j].coords) out.add(i, j, v);
    return out;
}

}  // namespace

RingMatrix left_action_matrix(const ParamContext& ctx, int n, int m, const TLElement& g) {
    if (g.n() != n) throw invalid_input("SizeMismatch in left_action_matrix");
    const InducedBasis& basis = InducedBasis::get(n, m);
    std::vector<ModuleVector> cols(basis.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (basis.size() > 32)
#endif
    for (int j = 0; j < basis.size(); ++j)
        cols[j] = reduce(multiply(ctx, g, basis.lift(ctx.ring, j)), basis);
    return columns_to_matrix(ctx.ring, basis.size(), cols);
}

RingMatrix right_mult_map(const ParamContext& ctx, int n, int m_src, int m_tgt, const TLElement& g) {
    if (g.n() != n) throw invalid_input("SizeMismatch in right_mult_map");
    if (m_src > m_tgt) throw invalid_input("right_mult_map needs m_src <= m_tgt");
    for (int i = 1; i <= m_src - 1; ++i) {
        auto ui = TLElement::from_generator(ctx.ring, n, i);
        if (multiply(ctx, g, ui) != multiply(ctx, ui, g))
            throw invalid_input("NotWellDefined: g does not commute with U_" + std::to_string(i));
    }
    const InducedBasis& src = InducedBasis::get(n, m_src);
    const InducedBasis& tgt = InducedBasis::get(n, m_tgt);
    std::vector<ModuleVector> cols(src.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (src.size() > 32)
#endif
    for (int j = 0; j < src.size(); ++j)
        cols[j] = reduce(multiply(ctx, src.lift(ctx.ring, j), g), tgt);
    return columns_to_matrix(ctx.ring, tgt.size(), cols);
}

}  // namespace tl
