// Timing harness for the parallel kernels against their serial reference
// implementations. Usage: horomean-bench [limit]   (default 2000000)
//
// Every parallel kernel reduces over fixed-size blocks in ascending order, so
// besides the speedup this also reports the observed numeric gap, which must
// be zero for the integer table and tiny for the floating reductions.

#include "horomean/chi.hpp"
#include "horomean/prime_table.hpp"
#include "horomean/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace horomean;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void report(const char* name, double serial_ms, double parallel_ms, double diff) {
    std::printf("%-34s %10.1f %12.1f %8.2fx %12.3g\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, diff);
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t limit = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000000;
    const double s = 1.5;

#ifdef _OPENMP
    std::printf("threads: %d, limit: %llu\n", omp_get_max_threads(),
                static_cast<unsigned long long>(limit));
#else
    std::printf("threads: 1 (no OpenMP), limit: %llu\n",
                static_cast<unsigned long long>(limit));
#endif
    std::printf("%-34s %10s %12s %8s %12s\n", "kernel", "serial_ms", "parallel_ms",
                "speedup", "diff");

    double t0 = now_ms();
    PrimeTable ts = PrimeTable::build_serial(2, limit);
    double t1 = now_ms();
    PrimeTable tp = PrimeTable::build(2, limit);
    double t2 = now_ms();
    report("prime table build (q=2)", t1 - t0, t2 - t1, ts == tp ? 0.0 : 1.0);

    ChiFunction psi = ChiFunction::psi(tp);
    t0 = now_ms();
    auto es = euler_product_serial(psi, s, limit);
    t1 = now_ms();
    auto ep = euler_product(psi, s, limit);
    t2 = now_ms();
    report("euler product psi, s=1.5", t1 - t0, t2 - t1, std::abs(es - ep));

    t0 = now_ms();
    auto ds = dirichlet_sum_serial(psi, 2.0, limit);
    t1 = now_ms();
    auto dp = dirichlet_sum(psi, 2.0, limit);
    t2 = now_ms();
    report("dirichlet sum psi, s=2", t1 - t0, t2 - t1, std::abs(ds - dp));

    t0 = now_ms();
    Eq2Result qs = eq2_identity_check_serial(tp, 1, s, limit);
    t1 = now_ms();
    Eq2Result qp = eq2_identity_check(tp, 1, s, limit);
    t2 = now_ms();
    report("prime-sum identity scan, t=1", t1 - t0, t2 - t1, std::abs(qs.rhs - qp.rhs));

    t0 = now_ms();
    double as = artin_constant_serial(limit);
    t1 = now_ms();
    double ap = artin_constant(limit);
    t2 = now_ms();
    report("density constant product", t1 - t0, t2 - t1, std::abs(as - ap));

    return 0;
}
