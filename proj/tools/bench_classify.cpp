// Wall-clock comparison of the serial and OpenMP classification drivers
// over a batch of spaces.  Results are checked for equality before timing
// is reported.

#include "schur/rigidity.hpp"
#include "schur/space.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace schur;

namespace {

double run_ms(const CominusculeSpace& X, HassePoset& poset, Execution mode) {
    auto t0 = std::chrono::steady_clock::now();
    classify(X, poset, mode);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int repeats = 3;
    if (argc > 1) repeats = std::stoi(argv[1]);

    struct Spec {
        Family family;
        int rank, node;
    };
    std::vector<Spec> specs = {
        {Family::A, 11, 5}, {Family::A, 12, 6}, {Family::C, 8, 8},
        {Family::D, 9, 9},  {Family::E7, 7, 7},
    };

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode runs serially\n");
#endif
    std::printf("%-10s %8s %12s %12s %8s\n", "space", "classes", "serial[ms]", "parallel[ms]",
                "speedup");

    for (const Spec& s : specs) {
        CominusculeSpace X = build_space(s.family, s.rank, s.node);
        HassePoset serial_poset = enumerate_classes(X);
        HassePoset parallel_poset = serial_poset;

        double ts = 0, tp = 0;
        for (int r = 0; r < repeats; ++r) {
            ts += run_ms(X, serial_poset, Execution::serial);
            tp += run_ms(X, parallel_poset, Execution::parallel);
        }
        ts /= repeats;
        tp /= repeats;

        for (std::size_t c = 0; c < serial_poset.info.size(); ++c) {
            const ClassInfo& a = serial_poset.info[c];
            const ClassInfo& b = parallel_poset.info[c];
            if (a.rigid != b.rigid || a.h1 != b.h1 || a.h2 != b.h2 ||
                !(a.aj == b.aj)) {
                std::fprintf(stderr, "mismatch between serial and parallel results in %s\n",
                             X.label().c_str());
                return 1;
            }
        }

        std::printf("%-10s %8zu %12.2f %12.2f %7.2fx\n", X.label().c_str(),
                    serial_poset.classes.size(), ts, tp, ts / tp);
    }
    return 0;
}
