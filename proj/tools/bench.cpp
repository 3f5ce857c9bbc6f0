// Benchmark: times the parallel enumeration kernels against their serial
// reference twins and checks that both produce identical catalogs.

#include <chrono>
#include <cstdio>
#include <string>

#include "ybe/enumerate.hpp"

using namespace ybe;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool same_catalog(const Catalog& a, const Catalog& b) {
    if (a.count() != b.count())
        return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i].sol == b.entries[i].sol))
            return false;
    return true;
}

void bench_one(const char* label, int n, bool involutive, int jobs,
               Catalog (*serial)(int, bool), Catalog (*parallel)(int, bool, int)) {
    auto t0 = std::chrono::steady_clock::now();
    Catalog cs = serial(n, involutive);
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Catalog cp = parallel(n, involutive, jobs);
    double tp = seconds_since(t0);

    const char* ok = same_catalog(cs, cp) ? "match" : "MISMATCH";
    std::printf("%-14s n=%d  count=%-7zu serial %8.3fs  parallel(%d) %8.3fs  speedup %5.2fx  [%s]\n",
                label, n, cs.count(), ts, jobs, tp, tp > 0 ? ts / tp : 0.0, ok);
    std::fflush(stdout);
}

} // namespace

int main(int argc, char** argv) {
    int max_n = 5;
    int jobs = 4;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--max-size" && i + 1 < argc)
            max_n = std::stoi(argv[++i]);
        else if (arg == "--jobs" && i + 1 < argc)
            jobs = std::stoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench [--max-size N] [--jobs J]\n");
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, %d worker thread(s) requested\n", jobs);
#else
    std::printf("OpenMP not available; parallel paths run serially\n");
#endif
    for (int n = 2; n <= max_n; ++n) {
        bench_one("sf2r", n, false, jobs, enumerate_sf_2reductive_serial, enumerate_sf_2reductive);
        bench_one("2perm", n, false, jobs, enumerate_2permutational_serial, enumerate_2permutational);
        bench_one("2perm-inv", n, true, jobs, enumerate_2permutational_serial, enumerate_2permutational);
    }
    return 0;
}
