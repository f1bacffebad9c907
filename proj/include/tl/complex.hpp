#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tl/induced.hpp"

namespace tl {

// Metadata kept for complexes whose terms are induced modules
// TL_n (x)_{TL_m} t and whose differentials are sums of right
// multiplications; this is what collapses each term to R under t (x) - .
struct InducedTermsMeta {
    int n = 0;
    std::vector<int> m_of_degree;  // aligned with the degree interval
    // per degree d (source of the differential): list of (coeff, g) with
    // d = sum coeff * (right multiplication by g)
    std::map<int, std::vector<std::pair<RingValue, TLElement>>> mults;
};

// Graded labeled bases with ring-matrix differentials d(i): degree i -> i-1.
struct ChainComplex {
    RingSpec ring = RingSpec::integers();
    int lo = 0;
    int hi = -1;  // empty when hi < lo
    std::vector<int> dims;
    std::vector<std::vector<std::string>> labels;
    std::map<int, RingMatrix> diff;  // keys in (lo, hi]
    std::optional<InducedTermsMeta> induced_meta;

    int dim(int deg) const { return deg < lo || deg > hi ? 0 : dims[deg - lo]; }
    const std::vector<std::string>& labels_at(int deg) const { return labels[deg - lo]; }
    bool has_d(int deg) const { return diff.count(deg) != 0; }
    const RingMatrix& d(int deg) const;
    // shape checks plus d(i) d(i+1) = 0; throws internal_error on failure
    void verify() const;
};

// Per-degree matrices f(i): source_i -> target_i commuting with the
// differentials (missing degrees are zero).
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::map<int, RingMatrix> f;

    void verify_chain_map() const;  // throws internal_error
};

// The complex of planar injective words W(n): degree i carries
// TL_n (x)_{TL_{n-i-1}} t for -1 <= i <= n-1, with alternating sums of
// s-product right multiplications as differentials.
ChainComplex build_W(const ParamContext& ctx, int n);

// The inductive resolutions, truncated at top degree L.  C(m) needs a
// invertible; D(m) needs m < n.
ChainComplex build_C(const ParamContext& ctx, int n, int m, int L);
ChainComplex build_D(const ParamContext& ctx, int n, int m, int L);

// The explicit TL_2 resolution of the trivial module: free in degrees >= 0,
// maps alternating right multiplication by U_1 and (a - U_1).
ChainComplex build_tl2_resolution(const ParamContext& ctx, int L);

ChainComplex cone(const ChainComplex& X);
ChainComplex suspend(const ChainComplex& X, int k);
ChainComplex truncate(const ChainComplex& X, int p);

// Indices (into the degree-i induced basis of W(n)) of the filtration stage
// F^k: words with index >= 2, or index 1 and terminus <= n-i-1+k.
std::vector<std::vector<int>> filtration_indices(int n, int k);
// The same selection as rendered word labels.
std::vector<std::vector<std::string>> filtration_basis(int n, int k);

// Per-degree selected index lists; closure under the differential is checked.
ChainComplex subcomplex(const ChainComplex& X, const std::vector<std::vector<int>>& selected);
// Quotient by a subcomplex given by per-degree index lists into X's bases.
ChainComplex quotient_complex(const ChainComplex& X, const std::vector<std::vector<int>>& sub);

// The chain map C(W(n-1)) -> F^0 realizing the filtration identification.
ChainMap phi0(const ParamContext& ctx, int n);
// The chain map tau_{n-1} Sigma^{k+1} W(n-1) -> F^k/F^{k-1}, 1 <= k <= n-1.
ChainMap psik(const ParamContext& ctx, int n, int k);

// True iff every per-degree matrix is square and invertible over the ring.
bool is_chain_iso(const ChainMap& f);

// Collapse an induced-terms complex under t (x)_TL_n -  (each term becomes R
// and each right multiplication acts by its constant term).
ChainComplex trivial_coinvariants(const ChainComplex& X);
// Hom_TL_n(-, t) as a chain complex with reflected grading: the returned
// complex has degree -i worth Hom(X_i, t), so H_{-i} of the result is the
// cohomology H^i.
ChainComplex trivial_invariants(const ChainComplex& X);

}  // namespace tl
