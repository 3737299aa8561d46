// Benchmark comparing the serial reference kernels against the OpenMP ones:
// GF(2) row reduction on random matrices, and a Hochschild table on the
// largest shipped fixture pipeline. Run as: homcat-bench [max_size]

#include <chrono>
#include <cstdio>
#include <random>

#include "homcat/gf2.hpp"
#include "homcat/hochschild.hpp"
#include "homcat/mutation.hpp"
#include "homcat/zerodim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace homcat;
using clk = std::chrono::steady_clock;

static double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

int main(int argc, char** argv) {
    int max_size = argc > 1 ? std::atoi(argv[1]) : 4096;
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");
    for (int n = 512; n <= max_size; n *= 2) {
        std::mt19937_64 rng(11);
        GF2Matrix m = GF2Matrix::random(n, n, rng, 0.5);
        auto t0 = clk::now();
        auto serial = m.echelon_serial();
        double ts = ms_since(t0);
        t0 = clk::now();
        auto par = m.echelon();
        double tp = ms_since(t0);
        if (!(serial.rref == par.rref) || serial.pivot_cols != par.pivot_cols) {
            std::printf("MISMATCH at n=%d\n", n);
            return 1;
        }
        char name[64];
        std::snprintf(name, sizeof name, "gf2 echelon %dx%d", n, n);
        std::printf("%-28s %12.2f %12.2f %7.2fx\n", name, ts, tp, ts / tp);
    }

    // one run of the mutation + Hochschild pipeline on the genus-2 fixture
    ZeroConfig cfg;
    cfg.fibre = 2;
    for (int i = 0; i < 5; ++i) cfg.spheres.push_back(GradedZeroSphere(0, 1, 0, 0));
    auto cat = std::make_shared<DirectedCategory>(fukaya(cfg));
    auto t0 = clk::now();
    CatPtr moved = run_script(cat, parse_script("c r c"));
    auto table = hh(*cat);
    std::printf("%-28s %12.2f %12s %8s\n", "mutate c r c + hh (A_g2)", ms_since(t0), "-", "-");
    (void)moved;
    (void)table;
    return 0;
}
