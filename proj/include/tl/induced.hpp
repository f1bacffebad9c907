#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "tl/element.hpp"

namespace tl {

// Sparse matrix over an exact ring; entries sorted by (row, col), 0-based,
// no explicit zeros.
struct RingMatrix {
    int rows = 0, cols = 0;
    RingSpec ring = RingSpec::integers();
    std::map<std::pair<int, int>, RingValue> entries;

    static RingMatrix zero(const RingSpec& r, int rows, int cols);
    static RingMatrix identity(const RingSpec& r, int n);

    void add(int r, int c, const RingValue& v);
    void set(int r, int c, const RingValue& v);
    RingValue at(int r, int c) const;
    bool is_zero() const { return entries.empty(); }

    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix scaled(const RingValue& c) const;
    RingMatrix transpose() const;
    bool operator==(const RingMatrix& o) const;
};

// The Jones basis of TL_n in canonical order, and the induced-module basis
// of TL_n (x) TL_m t: Jones words with terminus > m-1.  Cached per (n, m).
class InducedBasis {
public:
    static const InducedBasis& get(int n, int m);
    static const InducedBasis& full(int n) { return get(n, 0); }

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<JonesWord>& words() const { return words_; }
    const JonesWord& word_at(int i) const { return words_[i]; }
    const PlanarDiagram& diagram_at(int i) const { return diagrams_[i]; }
    // -1 when the diagram's Jones word lies in the ideal I_m
    int position_of(const PlanarDiagram& d) const;
    TLElement lift(const RingSpec& ring, int i) const;

private:
    InducedBasis(int n, int m);
    int n_, m_;
    std::vector<JonesWord> words_;
    std::vector<PlanarDiagram> diagrams_;
    std::unordered_map<PlanarDiagram, int, DiagramHash> pos_;
};

// All Jones words of TL_n, canonical (segments, flattened-tuple) order.
const std::vector<JonesWord>& jones_basis(int n);

// Complement of the induced basis inside the Jones basis (a basis of I_m).
std::vector<JonesWord> ideal_basis(int n, int m);

// Sparse coordinates of a module element with respect to an induced basis.
struct ModuleVector {
    const InducedBasis* basis = nullptr;
    std::map<int, RingValue> coords;

    bool is_zero() const { return coords.empty(); }
    void add(int i, const RingValue& v);
    bool operator==(const ModuleVector& o) const;
};

// Express x in the Jones basis and discard the words killed by I_m.
ModuleVector reduce(const TLElement& x, const InducedBasis& basis);
ModuleVector reduce(const ParamContext& ctx, const TLElement& x, int m);

// Matrix of v -> reduce(g * lift(v)) on the induced basis of (n, m).
RingMatrix left_action_matrix(const ParamContext& ctx, int n, int m, const TLElement& g);

// Matrix of x (x) r -> x g (x) r from basis (n, m_src) to basis (n, m_tgt).
// Well-definedness is enforced by checking that g commutes with
// U_1, ..., U_{m_src - 1}.
RingMatrix right_mult_map(const ParamContext& ctx, int n, int m_src, int m_tgt, const TLElement& g);

}  // namespace tl
