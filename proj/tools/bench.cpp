// Benchmark comparing the serial reference path with the OpenMP path on the
// per-character kernels (metric construction and arithmetic classes).
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tamearith/parallel.hpp"
#include "tamearith/verify.hpp"

using namespace tamearith;

namespace {

double run_batch(const std::vector<GroupBundle>& groups, unsigned long seed, int rounds) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(seed);
    for (int r = 0; r < rounds; ++r) {
        for (const auto& b : groups) {
            auto fixture = random_complex(rng, b);
            auto m = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, b.reps);
            auto cls = arithmetic_class_std(m, b.table, b.reps);
            (void)cls;
        }
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus = corpus_root(argc > 1 ? argv[1] : "data");
    int rounds = argc > 2 ? std::atoi(argv[2]) : 6;
    std::vector<GroupBundle> groups;
    for (const char* name : {"s3", "d4", "q8"})
        groups.push_back(load_group_file(corpus + "/groups/" + name + ".json"));

    std::printf("arithmetic-class batch over S3, D4, Q8 (%d rounds)\n", rounds);
    std::printf("threads available: %d\n", parallel::max_threads());

    parallel::set_enabled(false);
    double serial = run_batch(groups, 42, rounds);
    std::printf("serial reference: %8.3f s\n", serial);

    parallel::set_enabled(true);
    double par = run_batch(groups, 42, rounds);
    std::printf("openmp kernels:   %8.3f s  (speedup %.2fx)\n", par, serial / par);
    return 0;
}
