// Compares serial and threaded throughput of the batch suites. The suites
// partition independent seeded instances across OpenMP workers; reports are
// order-stable, so both runs must agree check-for-check.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cychb/suites.hpp"

using namespace cychb;

namespace {

double run_timed(const char* label, int threads, int count, std::uint64_t seed, bool correspond, ojson& out) {
    const auto start = std::chrono::steady_clock::now();
    const Field f = Field::prime(10007);
    const Report rep = correspond ? run_correspond_suite(f, seed, count, threads)
                                  : run_spectral_suite(f, seed, count, threads);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out = rep.to_json(false);
    std::cout << label << ": " << sec << " s, pass=" << (rep.pass() ? "yes" : "no") << "\n";
    return sec;
}

} // namespace

int main(int argc, char** argv) {
    int count = 40;
    std::uint64_t seed = 7;
    if (argc > 1) count = std::atoi(argv[1]);
    if (argc > 2) seed = std::strtoull(argv[2], nullptr, 10);
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::cout << "batch size " << count << ", seed " << seed << ", max threads " << max_threads << "\n";

    for (bool correspond : {false, true}) {
        std::cout << (correspond ? "-- correspond round trips --" : "-- spectral module checks --") << "\n";
        ojson serial, parallel;
        const double t1 = run_timed("serial  ", 1, count, seed, correspond, serial);
        const double tn = run_timed("threaded", 0, count, seed, correspond, parallel);
        std::cout << "speedup " << (tn > 0 ? t1 / tn : 0.0)
                  << ", reports identical: " << (serial == parallel ? "yes" : "NO") << "\n";
        if (serial != parallel) return 1;
    }
    return 0;
}
