// Timing comparison between the serial and the OpenMP oracle scans, plus a
// balanced-set sweep throughput figure. Results must agree exactly; the
// speedup is whatever the machine gives.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitiv/classifier.hpp"
#include "splitiv/oracle.hpp"

using namespace splitiv;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_oracle(const DvrContext& ctx, const std::vector<Element>& s, const char* label) {
    SplitPolynomial f = equalizing_polynomial(ctx, s);
    BigInt max_mult = 0;
    for (const auto& m : f.mult)
        if (m > max_mult) max_mult = m;
    OracleConfig cfg;
    cfg.max_mult = 2 * max_mult.convert_to<int>();
    cfg.max_power = cfg.max_mult;

    cfg.parallel = false;
    auto t0 = Clock::now();
    OracleResult serial = oracle_check(f, cfg);
    double serial_time = seconds_since(t0);

    cfg.parallel = true;
    t0 = Clock::now();
    OracleResult parallel = oracle_check(f, cfg);
    double parallel_time = seconds_since(t0);

    if (serial.confirmed != parallel.confirmed) {
        std::cerr << "MISMATCH between serial and parallel oracle on " << label << "\n";
        std::exit(1);
    }
    std::cout << label << ": K=" << cfg.max_mult << "  serial " << serial_time << "s  parallel "
              << parallel_time << "s  speedup " << serial_time / parallel_time << "x\n";
}

void bench_sweep(const DvrContext& ctx, int level) {
    auto t0 = Clock::now();
    std::size_t count = 0;
    enumerate_balanced(ctx, level, std::int64_t{1} << 30, [&](const std::vector<Element>& s) {
        ClassificationReport r = classify(equalizing_polynomial(ctx, s));
        if (r.verdict != Verdict::absolutely_irreducible) {
            std::cerr << "sweep produced a non-irreducible equalizing polynomial\n";
            std::exit(1);
        }
        ++count;
        return true;
    });
    std::cout << ctx.describe() << " level " << level << ": " << count << " balanced sets in "
              << seconds_since(t0) << "s\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP\n";
#endif

    DvrContext z2 = DvrContext::make_zp(2);
    DvrContext z3 = DvrContext::make_zp(3);

    // Oracle: confirming an equalizing polynomial scans the whole bounded
    // candidate space, which is the worst case.
    bench_oracle(z2, {z2.from_integer(0), z2.from_integer(1), z2.from_integer(2),
                      z2.from_integer(4), z2.from_integer(6)},
                 "zp p=2, 5 roots, depth 3");
    bench_oracle(z3,
                 {z3.from_integer(0), z3.from_integer(3), z3.from_integer(6), z3.from_integer(1),
                  z3.from_integer(2)},
                 "zp p=3, 5 roots, depth 2");

    bench_sweep(z2, 3);
    bench_sweep(z3, 3);
    return 0;
}
