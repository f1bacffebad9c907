// Benchmark for the exact elimination kernels: OpenMP row updates vs the
// serial reference, over F_p and over Q.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tl/linalg.hpp"

using namespace tl;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

FfMat random_ff(int n, int m, std::uint64_t p, std::mt19937_64& rng) {
    FfMat a(n, m, p);
    for (auto& x : a.a) x = rng() % p;
    return a;
}

QMat random_q(int n, int m, std::mt19937_64& rng) {
    QMat a(n, m);
    for (auto& x : a.a) {
        x = mpq_class(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
        x.canonicalize();
    }
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 1200;
    std::uint64_t p = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 5;
    int reps = argc > 3 ? std::atoi(argv[3]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial path\n");
#endif
    std::mt19937_64 rng(2024);

    std::printf("F_%llu rank, %dx%d dense, %d reps\n", static_cast<unsigned long long>(p), n, n, reps);
    auto a = random_ff(n, n, p, rng);
    int r1 = 0, r2 = 0;
    auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i) r1 = ff_rank_serial(a);
    double serial = seconds_since(t0) / reps;
    t0 = clock_type::now();
    for (int i = 0; i < reps; ++i) r2 = ff_rank(a);
    double parallel = seconds_since(t0) / reps;
    std::printf("  serial   %8.3f s  (rank %d)\n", serial, r1);
    std::printf("  parallel %8.3f s  (rank %d)  speedup %.2fx\n", parallel, r2, serial / parallel);
    if (r1 != r2) {
        std::printf("  RANK MISMATCH\n");
        return 1;
    }

    int qn = std::max(60, n / 8);
    std::printf("Q rank, %dx%d dense rationals\n", qn, qn);
    auto b = random_q(qn, qn, rng);
    t0 = clock_type::now();
    int qr1 = q_rank_serial(b);
    double qserial = seconds_since(t0);
    t0 = clock_type::now();
    int qr2 = q_rank(b);
    double qparallel = seconds_since(t0);
    std::printf("  serial   %8.3f s  (rank %d)\n", qserial, qr1);
    std::printf("  parallel %8.3f s  (rank %d)  speedup %.2fx\n", qparallel, qr2, qserial / qparallel);
    return qr1 == qr2 ? 0 : 1;
}
