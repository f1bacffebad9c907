#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "tl/errors.hpp"

namespace tl {

// Dense exact matrices used by the elimination kernels.  The parallel
// entry points use OpenMP row updates; the *_serial versions are the
// reference implementations the tests and the benchmark compare against.

struct FfMat {
    int rows = 0, cols = 0;
    std::uint64_t p = 2;
    std::vector<std::uint64_t> a;  // row-major

    FfMat() = default;
    FfMat(int r, int c, std::uint64_t mod) : rows(r), cols(c), p(mod), a(static_cast<std::size_t>(r) * c, 0) {}
    std::uint64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

int ff_rank(FfMat m);
int ff_rank_serial(FfMat m);
// Columns span the kernel { x : Mx = 0 }.
FfMat ff_kernel(const FfMat& m);
FfMat ff_kernel_serial(const FfMat& m);
// Solve A X = B; returns false when inconsistent.
bool ff_solve_matrix(const FfMat& A, const FfMat& B, FfMat& X);

struct QMat {
    int rows = 0, cols = 0;
    std::vector<mpq_class> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, mpq_class(0)) {}
    mpq_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const mpq_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

int q_rank(QMat m);
int q_rank_serial(QMat m);
QMat q_kernel(const QMat& m);
bool q_solve_matrix(const QMat& A, const QMat& B, QMat& X);

struct ZMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, mpz_class(0)) {}
    mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const mpz_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Column echelon form by unimodular column operations: A U = H where pivot
// rows strictly increase column by column and pivots are positive.
struct ColumnEchelon {
    ZMat H;
    ZMat U;
    std::vector<std::pair<int, int>> pivots;  // (row, col) pairs
};
ColumnEchelon column_echelon(const ZMat& A);

int z_rank(const ZMat& A);
// Lattice basis (columns) of the integer kernel of A.
ZMat z_kernel(const ZMat& A);
// Integral solve A X = B; false when no integral solution exists.
bool z_solve_matrix(const ZMat& A, const ZMat& B, ZMat& X);
// Nontrivial invariant factors (those > 1) plus leading ones are dropped;
// returns the full nonzero diagonal d_1 | d_2 | ... of the Smith form.
std::vector<mpz_class> smith_invariant_factors(ZMat A);

// Incremental spans for greedy closure.  Over a field: reduced echelon rows;
// over Z: a triangular lattice basis, membership meaning exact (integral)
// lattice membership.

class FfSpan {
public:
    FfSpan(int n, std::uint64_t p) : n_(n), p_(p) {}
    bool contains(std::vector<std::uint64_t> v) const;
    bool insert(std::vector<std::uint64_t> v);  // true if the span grew
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<std::uint64_t>& v) const;
    int n_;
    std::uint64_t p_;
    std::map<int, std::vector<std::uint64_t>> rows_;  // pivot -> normalized vector
};

class QSpan {
public:
    explicit QSpan(int n) : n_(n) {}
    bool contains(std::vector<mpq_class> v) const;
    bool insert(std::vector<mpq_class> v);
    int dim() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<mpq_class>& v) const;
    int n_;
    std::map<int, std::vector<mpq_class>> rows_;
};

class ZLattice {
public:
    explicit ZLattice(int n) : n_(n) {}
    bool contains(std::vector<mpz_class> v) const;
    bool insert(std::vector<mpz_class> v);  // true if the lattice grew
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int n_;
    std::map<int, std::vector<mpz_class>> rows_;  // pivot row -> vector, positive pivot
};

}  // namespace tl
