#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tl/complex.hpp"
#include "tl/linalg.hpp"

namespace tl {

// Conversions between the sparse ring matrices and the dense elimination
// types; each requires the matching ring.
FfMat to_ff(const RingMatrix& m);
QMat to_q(const RingMatrix& m);
ZMat to_z(const RingMatrix& m);

int rank_of(const RingMatrix& m);
bool is_invertible_matrix(const RingMatrix& m);  // over Z: determinant a unit

// Kernel basis as columns (over Z an exact lattice basis).
std::vector<std::vector<RingValue>> kernel_columns(const RingMatrix& m);
// Solve A X = B in the ring (integral over Z); false when unsolvable.
bool solve_matrix(const RingMatrix& A, const RingMatrix& B, RingMatrix& X);

// Finitely generated module over Z (rank + invariant factors > 1 in a
// divisibility chain) or over a field (torsion always empty).
struct HomologyGroup {
    long long rank = 0;
    std::vector<mpz_class> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
    std::string str(const RingSpec& ring) const;
};

// The cokernel of R^cols -> R^rows as a finitely generated module.
HomologyGroup cokernel_group(const RingMatrix& m);

// Exact homology in every degree of the stored interval.
std::map<int, HomologyGroup> homology_of(const ChainComplex& X);

// A finite-dimensional left TL_n-module presented by the action matrices of
// the generators U_1..U_{n-1}; the TL relations are checked at construction.
struct LeftModule {
    ParamContext ctx;
    int n = 0;
    int dim = 0;
    std::vector<RingMatrix> action;  // action[i-1] is the matrix of U_i
    // When the module arrives as an R-submodule of TL_n (the Fineberg case),
    // the ambient basis vectors are kept for the Theorem 5.1 maps.
    std::vector<TLElement> ambient_basis;

    RingMatrix action_of_word(const FreeWord& w) const;
    RingMatrix action_of_element(const TLElement& x) const;
    void verify_relations() const;  // throws internal_error
};

LeftModule trivial_module(const ParamContext& ctx, int n);
LeftModule induced_as_module(const ParamContext& ctx, int n, int m);

// Kernel of right multiplication by the Jacobsthal element inside TL_n,
// with the left U_i-actions restricted to it.
LeftModule fineberg_module(const ParamContext& ctx, int n);

// Free resolution P_L -> ... -> P_0 -> M of a left module by iterated
// kernels; maps are matrices of algebra elements, the augmentation is an
// R-matrix of module vectors.
struct FreeResolution {
    std::vector<int> ranks;  // r_0 .. r_L
    // maps[j] is P_{j+1} -> P_j as an r_j x r_{j+1} matrix of TL_n entries,
    // for 0 <= j < L
    std::vector<std::vector<std::vector<TLElement>>> maps;
    RingMatrix augmentation;  // dim(M) x r_0 over R
};

// The per-stage dimension budget (R-dimension of each P_j); the environment
// variable TLHOM_BUDGET overrides the default of 20000.
int resolution_budget();

FreeResolution free_resolution(const LeftModule& M, int length, int budget = resolution_budget());

// Tor_d^{TL_n}(t, M) for d = 0..L-1, via t (x)_A P_* (constant terms of the
// algebra matrices).
std::vector<HomologyGroup> tor_trivial(const ParamContext& ctx, const LeftModule& M, int L);
// Ext^d_{TL_n}(M, t) for d = 0..L-1, via Hom_A(P_*, t) (transposes).
std::vector<HomologyGroup> ext_trivial(const ParamContext& ctx, const LeftModule& M, int L);

// t (x)_A M = M / sum_i im(U_i).
HomologyGroup coinvariants(const LeftModule& M);

// Theorem 5.1 verification data for n even:
// 0 -> Tor_n(t,t) -> t (x) F_n -> t -> Tor_{n-1}(t,t) -> 0.
struct TorSequenceReport {
    bool pass = false;
    HomologyGroup tor_n;
    HomologyGroup tor_n_minus_1;
    HomologyGroup coinv_fineberg;
    HomologyGroup kernel_of_middle;
    HomologyGroup cokernel_of_middle;
    RingValue b;  // Tor_{n-1} = R/bR, the reported multiple of a
};
TorSequenceReport verify_tor_sequence(const ParamContext& ctx, int n, int L);

// Degreewise comparison Tor_i(t,t) vs Tor_{i-n}(t, F_n) in the stated range.
struct ShiftedIsoReport {
    bool pass = false;
    int first_degree = 0;
    std::vector<int> degrees;
    std::vector<HomologyGroup> lhs;  // Tor_i(t,t)
    std::vector<HomologyGroup> rhs;  // Tor_{i-n}(t,F_n)
};
ShiftedIsoReport verify_shifted_iso(const ParamContext& ctx, int n, int L);

}  // namespace tl
