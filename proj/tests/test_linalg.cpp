#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tl/linalg.hpp"

using namespace tl;

namespace {

FfMat random_ff(int rows, int cols, std::uint64_t p, std::mt19937_64& rng, int rank_cap = -1) {
    if (rank_cap < 0) {
        FfMat m(rows, cols, p);
        for (auto& x : m.a) x = rng() % p;
        return m;
    }
    // product of rows x rank_cap and rank_cap x cols
    FfMat l(rows, rank_cap, p), r(rank_cap, cols, p), m(rows, cols, p);
    for (auto& x : l.a) x = rng() % p;
    for (auto& x : r.a) x = rng() % p;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            unsigned __int128 acc = 0;
            for (int k = 0; k < rank_cap; ++k) acc += static_cast<unsigned __int128>(l.at(i, k)) * r.at(k, j);
            m.at(i, j) = static_cast<std::uint64_t>(acc % p);
        }
    return m;
}

}  // namespace

TEST_CASE("ff rank: parallel equals serial reference") {
    std::mt19937_64 rng(42);
    for (std::uint64_t p : {2ull, 5ull, 7919ull}) {
        for (int it = 0; it < 8; ++it) {
            int rows = 20 + static_cast<int>(rng() % 60);
            int cols = 20 + static_cast<int>(rng() % 60);
            int cap = static_cast<int>(rng() % 30);
            auto m = random_ff(rows, cols, p, rng, it % 2 ? cap : -1);
            int rk_par = ff_rank(m);
            int rk_ser = ff_rank_serial(m);
            CHECK(rk_par == rk_ser);
            if (it % 2) CHECK(rk_par <= cap);
        }
    }
}

TEST_CASE("ff kernel annihilates and has complementary dimension") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 10; ++it) {
        std::uint64_t p = it % 2 ? 5 : 13;
        auto m = random_ff(15 + it, 25, p, rng, 9);
        auto k = ff_kernel(m);
        auto ks = ff_kernel_serial(m);
        CHECK(k.cols == 25 - ff_rank(m));
        CHECK(k.a == ks.a);
        for (int c = 0; c < k.cols; ++c)
            for (int r = 0; r < m.rows; ++r) {
                unsigned __int128 acc = 0;
                for (int j = 0; j < m.cols; ++j) acc += static_cast<unsigned __int128>(m.at(r, j)) * k.at(j, c);
                CHECK(static_cast<std::uint64_t>(acc % p) == 0);
            }
    }
}

TEST_CASE("ff solve") {
    std::mt19937_64 rng(44);
    std::uint64_t p = 7;
    auto A = random_ff(12, 9, p, rng);
    auto X0 = random_ff(9, 3, p, rng);
    FfMat B(12, 3, p);
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 3; ++c) {
            unsigned __int128 acc = 0;
            for (int k = 0; k < 9; ++k) acc += static_cast<unsigned __int128>(A.at(r, k)) * X0.at(k, c);
            B.at(r, c) = static_cast<std::uint64_t>(acc % p);
        }
    FfMat X;
    REQUIRE(ff_solve_matrix(A, B, X));
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 3; ++c) {
            unsigned __int128 acc = 0;
            for (int k = 0; k < 9; ++k) acc += static_cast<unsigned __int128>(A.at(r, k)) * X.at(k, c);
            CHECK(static_cast<std::uint64_t>(acc % p) == B.at(r, c));
        }
}

TEST_CASE("q rank and kernel") {
    std::mt19937_64 rng(45);
    QMat m(8, 12);
    for (auto& x : m.a) {
        x = mpq_class(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
        x.canonicalize();
    }
    CHECK(q_rank(m) == q_rank_serial(m));
    auto k = q_kernel(m);
    CHECK(k.cols == 12 - q_rank(m));
    for (int c = 0; c < k.cols; ++c)
        for (int r = 0; r < m.rows; ++r) {
            mpq_class acc = 0;
            for (int j = 0; j < m.cols; ++j) acc += m.at(r, j) * k.at(j, c);
            CHECK(acc == 0);
        }
}

TEST_CASE("column echelon gives unimodular transform") {
    std::mt19937_64 rng(46);
    ZMat A(7, 10);
    for (auto& x : A.a) x = static_cast<long>(rng() % 21) - 10;
    auto ce = column_echelon(A);
    // A * U == H
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) {
            mpz_class acc = 0;
            for (int k = 0; k < A.cols; ++k) acc += A.at(r, k) * ce.U.at(k, c);
            CHECK(acc == ce.H.at(r, c));
        }
    // U unimodular: all invariant factors 1
    auto fac = smith_invariant_factors(ce.U);
    CHECK(static_cast<int>(fac.size()) == A.cols);
    for (const auto& f : fac) CHECK(f == 1);
}

TEST_CASE("z kernel is an exact lattice basis") {
    ZMat A(3, 5);
    long vals[3][5] = {{2, 4, 6, 0, 2}, {1, 2, 3, 1, 0}, {0, 0, 0, 2, 4}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) A.at(r, c) = vals[r][c];
    auto K = z_kernel(A);
    for (int c = 0; c < K.cols; ++c)
        for (int r = 0; r < 3; ++r) {
            mpz_class acc = 0;
            for (int j = 0; j < 5; ++j) acc += A.at(r, j) * K.at(j, c);
            CHECK(acc == 0);
        }
    // the kernel has rank 5 - rank(A)
    CHECK(K.cols == 5 - z_rank(A));
    // saturation: (1,-... any integer kernel vector must be an integer combination
    ZLattice lat(5);
    for (int c = 0; c < K.cols; ++c) {
        std::vector<mpz_class> v(5);
        for (int r = 0; r < 5; ++r) v[r] = K.at(r, c);
        lat.insert(v);
    }
    // brute force small kernel vectors and check membership
    for (int x0 = -2; x0 <= 2; ++x0)
        for (int x1 = -2; x1 <= 2; ++x1)
            for (int x2 = -2; x2 <= 2; ++x2)
                for (int x3 = -2; x3 <= 2; ++x3)
                    for (int x4 = -2; x4 <= 2; ++x4) {
                        std::vector<long> x = {x0, x1, x2, x3, x4};
                        bool in_ker = true;
                        for (int r = 0; r < 3 && in_ker; ++r) {
                            long acc = 0;
                            for (int j = 0; j < 5; ++j) acc += vals[r][j] * x[j];
                            in_ker = acc == 0;
                        }
                        if (!in_ker) continue;
                        std::vector<mpz_class> v(5);
                        for (int r = 0; r < 5; ++r) v[r] = x[r];
                        CHECK(lat.contains(v));
                    }
}

TEST_CASE("smith normal form examples") {
    // diag(2,0) -> [2]
    ZMat d(2, 2);
    d.at(0, 0) = 2;
    auto f1 = smith_invariant_factors(d);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == 2);

    // [[2,4],[6,8]] -> [2,4]: d1 = gcd = 2, d1*d2 = |det| = 8
    ZMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    auto f2 = smith_invariant_factors(m);
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == 2);
    CHECK(f2[1] == 4);

    ZMat z(3, 4);
    CHECK(smith_invariant_factors(z).empty());
}

TEST_CASE("smith factors divide successively on random matrices") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 12; ++it) {
        ZMat A(5, 6);
        for (auto& x : A.a) x = static_cast<long>(rng() % 13) - 6;
        auto f = smith_invariant_factors(A);
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            CHECK(mpz_divisible_p(f[i + 1].get_mpz_t(), f[i].get_mpz_t()));
    }
}

TEST_CASE("z solve finds integral solutions when they exist") {
    ZMat A(2, 2);
    A.at(0, 0) = 2;
    A.at(1, 1) = 3;
    ZMat B(2, 1);
    B.at(0, 0) = 4;
    B.at(1, 0) = 9;
    ZMat X;
    REQUIRE(z_solve_matrix(A, B, X));
    CHECK(X.at(0, 0) == 2);
    CHECK(X.at(1, 0) == 3);
    B.at(0, 0) = 3;  // 2x = 3 has no integral solution
    CHECK(!z_solve_matrix(A, B, X));
}

TEST_CASE("spans and lattices") {
    FfSpan sp(3, 5);
    CHECK(sp.insert({1, 2, 3}));
    CHECK(!sp.insert({2, 4, 6}));
    CHECK(sp.insert({0, 1, 0}));
    CHECK(sp.contains({1, 3, 3}));
    CHECK(!sp.contains({0, 0, 1}));
    CHECK(sp.dim() == 2);

    ZLattice lat(2);
    std::vector<mpz_class> v1 = {mpz_class(2), mpz_class(0)};
    std::vector<mpz_class> v2 = {mpz_class(3), mpz_class(0)};
    CHECK(lat.insert(v1));
    CHECK(!lat.contains({mpz_class(1), mpz_class(0)}));
    CHECK(lat.insert(v2));  // gcd drops to 1
    CHECK(lat.contains({mpz_class(1), mpz_class(0)}));
    CHECK(!lat.contains({mpz_class(0), mpz_class(1)}));

    QSpan qs(2);
    std::vector<mpq_class> q1 = {mpq_class(1, 2), mpq_class(1)};
    CHECK(qs.insert(q1));
    CHECK(qs.contains({mpq_class(1), mpq_class(2)}));
    CHECK(!qs.contains({mpq_class(1), mpq_class(0)}));
}
