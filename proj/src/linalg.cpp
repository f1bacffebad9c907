#include "tl/linalg.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tl {

namespace {

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

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

// Forward elimination to row echelon form; records pivot columns.  The
// parallel flag toggles OpenMP over the row-update loop, which is the
// data-parallel inner kernel.
template <bool Parallel>
int ff_echelon(FfMat& m, std::vector<int>* pivot_cols, std::vector<int>* pivot_rows) {
    const std::uint64_t p = m.p;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        const std::uint64_t inv = invmod(m.at(rank, col), p);
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = mulmod(m.at(rank, c), inv, p);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (Parallel && m.rows - rank > 64)
#endif
        for (int r = rank + 1; r < m.rows; ++r) {
            std::uint64_t f = m.at(r, col);
            if (f == 0) continue;
            std::uint64_t neg = p - f;
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = (m.at(r, c) + mulmod(neg, m.at(rank, c), p)) % p;
        }
        if (pivot_cols) pivot_cols->push_back(col);
        if (pivot_rows) pivot_rows->push_back(rank);
        ++rank;
    }
    return rank;
}

FfMat ff_kernel_impl(FfMat m, bool parallel) {
    const std::uint64_t p = m.p;
    const int cols = m.cols;
    std::vector<int> pivot_cols;
    int rank = parallel ? ff_echelon<true>(m, &pivot_cols, nullptr)
                        : ff_echelon<false>(m, &pivot_cols, nullptr);
    // back substitution to reduced echelon
    for (int k = rank - 1; k >= 0; --k) {
        int pc = pivot_cols[k];
        for (int r = 0; r < k; ++r) {
            std::uint64_t f = m.at(r, pc);
            if (f == 0) continue;
            std::uint64_t neg = p - f;
            for (int c = pc; c < cols; ++c)
                m.at(r, c) = (m.at(r, c) + mulmod(neg, m.at(k, c), p)) % p;
        }
    }
    std::vector<char> is_pivot(cols, 0);
    for (int pc : pivot_cols) is_pivot[pc] = 1;
    FfMat kern(cols, cols - rank, p);
    int kc = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        kern.at(c, kc) = 1;
        for (int k = 0; k < rank; ++k) {
            std::uint64_t v = m.at(k, c);
            if (v != 0) kern.at(pivot_cols[k], kc) = p - v;
        }
        ++kc;
    }
    return kern;
}

template <bool Parallel>
int q_echelon(QMat& m, std::vector<int>* pivot_cols) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        mpq_class inv = 1 / m.at(rank, col);
        for (int c = col; c < m.cols; ++c) m.at(rank, c) *= inv;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (Parallel && m.rows - rank > 32)
#endif
        for (int r = rank + 1; r < m.rows; ++r) {
            if (m.at(r, col) == 0) continue;
            mpq_class f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

int ff_rank(FfMat m) { return ff_echelon<true>(m, nullptr, nullptr); }
int ff_rank_serial(FfMat m) { return ff_echelon<false>(m, nullptr, nullptr); }
FfMat ff_kernel(const FfMat& m) { return ff_kernel_impl(m, true); }
FfMat ff_kernel_serial(const FfMat& m) { return ff_kernel_impl(m, false); }

bool ff_solve_matrix(const FfMat& A, const FfMat& B, FfMat& X) {
    check_internal(A.rows == B.rows, "ff_solve_matrix shape mismatch");
    const std::uint64_t p = A.p;
    FfMat aug(A.rows, A.cols + B.cols, p);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
    }
    std::vector<int> pivot_cols;
    int rank = ff_echelon<true>(aug, &pivot_cols, nullptr);
    // any pivot in the B block means inconsistency
    for (int k = 0; k < rank; ++k)
        if (pivot_cols[k] >= A.cols) return false;
    // back substitution
    for (int k = rank - 1; k >= 0; --k) {
        int pc = pivot_cols[k];
        for (int r = 0; r < k; ++r) {
            std::uint64_t f = aug.at(r, pc);
            if (f == 0) continue;
            std::uint64_t neg = p - f;
            for (int c = pc; c < aug.cols; ++c)
                aug.at(r, c) = (aug.at(r, c) + mulmod(neg, aug.at(k, c), p)) % p;
        }
    }
    X = FfMat(A.cols, B.cols, p);
    for (int k = 0; k < rank; ++k)
        for (int c = 0; c < B.cols; ++c) X.at(pivot_cols[k], c) = aug.at(k, A.cols + c);
    return true;
}

int q_rank(QMat m) { return q_echelon<true>(m, nullptr); }
int q_rank_serial(QMat m) { return q_echelon<false>(m, nullptr); }

QMat q_kernel(const QMat& m0) {
    QMat m = m0;
    const int cols = m.cols;
    std::vector<int> pivot_cols;
    int rank = q_echelon<true>(m, &pivot_cols);
    for (int k = rank - 1; k >= 0; --k) {
        int pc = pivot_cols[k];
        for (int r = 0; r < k; ++r) {
            if (m.at(r, pc) == 0) continue;
            mpq_class f = m.at(r, pc);
            for (int c = pc; c < cols; ++c) m.at(r, c) -= f * m.at(k, c);
        }
    }
    std::vector<char> is_pivot(cols, 0);
    for (int pc : pivot_cols) is_pivot[pc] = 1;
    QMat kern(cols, cols - rank);
    int kc = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        kern.at(c, kc) = 1;
        for (int k = 0; k < rank; ++k)
            if (m.at(k, c) != 0) kern.at(pivot_cols[k], kc) = -m.at(k, c);
        ++kc;
    }
    return kern;
}

bool q_solve_matrix(const QMat& A, const QMat& B, QMat& X) {
    check_internal(A.rows == B.rows, "q_solve_matrix shape mismatch");
    QMat aug(A.rows, A.cols + B.cols);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
        for (int c = 0; c < B.cols; ++c) aug.at(r, A.cols + c) = B.at(r, c);
    }
    std::vector<int> pivot_cols;
    int rank = q_echelon<true>(aug, &pivot_cols);
    for (int k = 0; k < rank; ++k)
        if (pivot_cols[k] >= A.cols) return false;
    for (int k = rank - 1; k >= 0; --k) {
        int pc = pivot_cols[k];
        for (int r = 0; r < k; ++r) {
            if (aug.at(r, pc) == 0) continue;
            mpq_class f = aug.at(r, pc);
            for (int c = pc; c < aug.cols; ++c) aug.at(r, c) -= f * aug.at(k, c);
        }
    }
    X = QMat(A.cols, B.cols);
    for (int k = 0; k < rank; ++k)
        for (int c = 0; c < B.cols; ++c) X.at(pivot_cols[k], c) = aug.at(k, A.cols + c);
    return true;
}

ColumnEchelon column_echelon(const ZMat& A) {
    ColumnEchelon ce;
    ce.H = A;
    ce.U = ZMat(A.cols, A.cols);
    for (int i = 0; i < A.cols; ++i) ce.U.at(i, i) = 1;
    ZMat& H = ce.H;
    ZMat& U = ce.U;
    auto col_swap = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int r = 0; r < H.rows; ++r) std::swap(H.at(r, c1), H.at(r, c2));
        for (int r = 0; r < U.rows; ++r) std::swap(U.at(r, c1), U.at(r, c2));
    };
    auto col_axpy = [&](int dst, int src, const mpz_class& f) {  // col_dst += f * col_src
        if (f == 0) return;
        for (int r = 0; r < H.rows; ++r) H.at(r, dst) += f * H.at(r, src);
        for (int r = 0; r < U.rows; ++r) U.at(r, dst) += f * U.at(r, src);
    };
    auto col_negate = [&](int c) {
        for (int r = 0; r < H.rows; ++r) H.at(r, c) = -H.at(r, c);
        for (int r = 0; r < U.rows; ++r) U.at(r, c) = -U.at(r, c);
    };
    int lead = 0;
    for (int row = 0; row < A.rows && lead < A.cols; ++row) {
        // clear row `row` across columns >= lead down to a single positive entry
        while (true) {
            int best = -1;
            for (int c = lead; c < A.cols; ++c) {
                if (H.at(row, c) == 0) continue;
                if (best < 0 || mpz_cmpabs(H.at(row, c).get_mpz_t(), H.at(row, best).get_mpz_t()) < 0) best = c;
            }
            if (best < 0) break;
            col_swap(lead, best);
            bool clean = true;
            for (int c = lead + 1; c < A.cols; ++c) {
                if (H.at(row, c) == 0) continue;
                mpz_class qq;
                mpz_fdiv_q(qq.get_mpz_t(), H.at(row, c).get_mpz_t(), H.at(row, lead).get_mpz_t());
                col_axpy(c, lead, -qq);
                if (H.at(row, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(row, lead) != 0) {
            if (H.at(row, lead) < 0) col_negate(lead);
            ce.pivots.emplace_back(row, lead);
            ++lead;
        }
    }
    return ce;
}

int z_rank(const ZMat& A) { return static_cast<int>(column_echelon(A).pivots.size()); }

ZMat z_kernel(const ZMat& A) {
    ColumnEchelon ce = column_echelon(A);
    int rank = static_cast<int>(ce.pivots.size());
    ZMat kern(A.cols, A.cols - rank);
    for (int c = rank; c < A.cols; ++c)
        for (int r = 0; r < A.cols; ++r) kern.at(r, c - rank) = ce.U.at(r, c);
    return kern;
}

bool z_solve_matrix(const ZMat& A, const ZMat& B, ZMat& X) {
    check_internal(A.rows == B.rows, "z_solve_matrix shape mismatch");
    ColumnEchelon ce = column_echelon(A);
    X = ZMat(A.cols, B.cols);
    for (int bc = 0; bc < B.cols; ++bc) {
        std::vector<mpz_class> b(A.rows);
        for (int r = 0; r < A.rows; ++r) b[r] = B.at(r, bc);
        std::vector<mpz_class> y(A.cols, mpz_class(0));
        for (auto [pr, pc] : ce.pivots) {
            if (b[pr] == 0) continue;
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), b[pr].get_mpz_t(), ce.H.at(pr, pc).get_mpz_t());
            if (rem != 0) return false;
            y[pc] = q;
            for (int r = pr; r < A.rows; ++r) b[r] -= q * ce.H.at(r, pc);
        }
        for (int r = 0; r < A.rows; ++r)
            if (b[r] != 0) return false;
        for (int r = 0; r < A.cols; ++r) {
            mpz_class acc = 0;
            for (auto [pr, pc] : ce.pivots) acc += ce.U.at(r, pc) * y[pc];
            X.at(r, bc) = acc;
        }
    }
    return true;
}

std::vector<mpz_class> smith_invariant_factors(ZMat A) {
    const int rows = A.rows, cols = A.cols;
    std::vector<mpz_class> diag;
    int s = 0;
    auto row_axpy = [&](int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int c = s; c < cols; ++c) A.at(dst, c) += f * A.at(src, c);
    };
    auto col_axpy = [&](int dst, int src, const mpz_class& f) {
        if (f == 0) return;
        for (int r = s; r < rows; ++r) A.at(r, dst) += f * A.at(r, src);
    };
    for (; s < std::min(rows, cols); ++s) {
        while (true) {
            int pr = -1, pc = -1;
            for (int r = s; r < rows; ++r)
                for (int c = s; c < cols; ++c) {
                    if (A.at(r, c) == 0) continue;
                    if (pr < 0 || mpz_cmpabs(A.at(r, c).get_mpz_t(), A.at(pr, pc).get_mpz_t()) < 0) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) return diag;  // all remaining entries zero
            if (pr != s)
                for (int c = s; c < cols; ++c) std::swap(A.at(pr, c), A.at(s, c));
            if (pc != s)
                for (int r = s; r < rows; ++r) std::swap(A.at(r, pc), A.at(r, s));
            bool clean = true;
            for (int r = s + 1; r < rows; ++r) {
                if (A.at(r, s) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(r, s).get_mpz_t(), A.at(s, s).get_mpz_t());
                row_axpy(r, s, -q);
                if (A.at(r, s) != 0) clean = false;
            }
            for (int c = s + 1; c < cols; ++c) {
                if (A.at(s, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(s, c).get_mpz_t(), A.at(s, s).get_mpz_t());
                col_axpy(c, s, -q);
                if (A.at(s, c) != 0) clean = false;
            }
            if (!clean) continue;
            // enforce divisibility of the remaining block
            bool divisible = true;
            for (int r = s + 1; r < rows && divisible; ++r)
                for (int c = s + 1; c < cols && divisible; ++c)
                    if (!mpz_divisible_p(A.at(r, c).get_mpz_t(), A.at(s, s).get_mpz_t())) {
                        row_axpy(s, r, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        mpz_class d = A.at(s, s);
        diag.push_back(abs(d));
    }
    return diag;
}

void FfSpan::reduce(std::vector<std::uint64_t>& v) const {
    for (const auto& [piv, row] : rows_) {
        if (v[piv] == 0) continue;
        std::uint64_t f = p_ - v[piv];
        for (int c = piv; c < n_; ++c) v[c] = (v[c] + mulmod(f, row[c], p_)) % p_;
    }
}

bool FfSpan::contains(std::vector<std::uint64_t> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

bool FfSpan::insert(std::vector<std::uint64_t> v) {
    reduce(v);
    int piv = -1;
    for (int c = 0; c < n_; ++c)
        if (v[c] != 0) {
            piv = c;
            break;
        }
    if (piv < 0) return false;
    std::uint64_t inv = invmod(v[piv], p_);
    for (int c = piv; c < n_; ++c) v[c] = mulmod(v[c], inv, p_);
    rows_.emplace(piv, std::move(v));
    return true;
}

void QSpan::reduce(std::vector<mpq_class>& v) const {
    for (const auto& [piv, row] : rows_) {
        if (v[piv] == 0) continue;
        mpq_class f = v[piv];
        for (int c = piv; c < n_; ++c) v[c] -= f * row[c];
    }
}

bool QSpan::contains(std::vector<mpq_class> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

bool QSpan::insert(std::vector<mpq_class> v) {
    reduce(v);
    int piv = -1;
    for (int c = 0; c < n_; ++c)
        if (v[c] != 0) {
            piv = c;
            break;
        }
    if (piv < 0) return false;
    mpq_class inv = 1 / v[piv];
    for (int c = piv; c < n_; ++c) v[c] *= inv;
    rows_.emplace(piv, std::move(v));
    return true;
}

bool ZLattice::contains(std::vector<mpz_class> v) const {
    for (const auto& [piv, row] : rows_) {
        if (v[piv] == 0) continue;
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[piv].get_mpz_t(), row[piv].get_mpz_t());
        if (rem != 0) return false;
        for (int c = piv; c < n_; ++c) v[c] -= q * row[c];
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

bool ZLattice::insert(std::vector<mpz_class> v) {
    bool grew = false;
    int start = 0;
    while (true) {
        int piv = -1;
        for (int c = start; c < n_; ++c)
            if (v[c] != 0) {
                piv = c;
                break;
            }
        if (piv < 0) return grew;
        auto it = rows_.find(piv);
        if (it == rows_.end()) {
            if (v[piv] < 0)
                for (auto& x : v) x = -x;
            rows_.emplace(piv, std::move(v));
            return true;
        }
        std::vector<mpz_class>& w = it->second;
        mpz_class rem;
        mpz_class q;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[piv].get_mpz_t(), w[piv].get_mpz_t());
        if (rem == 0) {
            for (int c = piv; c < n_; ++c) v[c] -= q * w[c];
        } else {
            // replace the basis vector by the gcd combination, keep reducing v
            mpz_class g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), w[piv].get_mpz_t(), v[piv].get_mpz_t());
            std::vector<mpz_class> nw(n_, mpz_class(0));
            mpz_class cw = w[piv] / g, cv = v[piv] / g;
            for (int c = piv; c < n_; ++c) nw[c] = x * w[c] + y * v[c];
            std::vector<mpz_class> nv(n_, mpz_class(0));
            for (int c = piv; c < n_; ++c) nv[c] = cw * v[c] - cv * w[c];
            w = std::move(nw);
            v = std::move(nv);
            grew = true;
        }
        start = piv + 1;
    }
}

}  // namespace tl
