// Copyright 2026 The Holoform Authors
// SPDX-License-Identifier: Apache-2.0

// Compares the OpenMP node-sweep kernels against the serial reference on the
// same workloads: the circle evaluations behind the mean-value tests and the
// numerical-range sampling sweep.

#include <chrono>
#include <cstdio>
#include <string>

#include "holoform/holo.hpp"
#include "holoform/parallel.hpp"
#include "holoform/random_gen.hpp"
#include "holoform/sector.hpp"
#include "holoform/semigroup.hpp"

using namespace holoform;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Workload {
    FormFamily family;
    Vector probe;
};

Workload make_workload(Index dim, std::uint64_t seed) {
    Rng rng(seed);
    auto v = HilbertSpace::make(gen::random_pd(rng, dim));
    auto h = HilbertSpace::make(gen::random_pd(rng, dim));
    Embedding embed(v, h, gen::random_invertible(rng, dim));
    Matrix m0 = gen::random_pd(rng, dim);
    Matrix b = rng.gaussian_matrix(dim, dim);
    b *= 0.2 * m0.norm() / b.norm();
    FormFamily family(embed, {m0, b}, 10.0);
    const double vertex = form_vertex(family.at(0.0), embed);
    Vector probe = rng.gaussian_vector(dim);
    return {family.shifted(1.0 - vertex), probe / h->norm(probe)};
}

template <typename MapFn>
double time_circle_sweep(const FormFamily& family, int nodes, int repeats, MapFn&& map_fn) {
    const double r = 0.05;
    const auto start = std::chrono::steady_clock::now();
    double sink = 0.0;
    for (int rep = 0; rep < repeats; ++rep) {
        auto values = map_fn(static_cast<std::size_t>(nodes), [&](std::size_t n) {
            const Complex z = r * std::polar(1.0, 6.283185307179586 * double(n) / nodes);
            return resolvent(family, z, Complex(0.0, 0.0));
        });
        sink += circle_mean(values).norm();
    }
    std::printf("  (checksum %.6f)\n", sink);
    return seconds_since(start);
}

template <typename MapFn>
double time_semigroup_sweep(const FormFamily& family, int nodes, MapFn&& map_fn) {
    const double r = 0.05;
    const auto start = std::chrono::steady_clock::now();
    auto values = map_fn(static_cast<std::size_t>(nodes), [&](std::size_t n) {
        const Complex z = r * std::polar(1.0, 6.283185307179586 * double(n) / nodes);
        const Matrix a = family_operator(family, z);
        Matrix acc = Matrix::Zero(a.rows(), a.cols());
        for (int k = 1; k <= 8; ++k) acc += matrix_exponential(a, 0.125 * k);
        return acc;
    });
    std::printf("  (checksum %.6f)\n", circle_mean(values).norm());
    return seconds_since(start);
}

double time_range_sweep(const FormFamily& family, int count) {
    const auto start = std::chrono::steady_clock::now();
    auto points = numerical_range_sample(family.at(0.0), family.embedding(), count, 7);
    Complex acc = 0.0;
    for (Complex w : points) acc += w;
    std::printf("  (checksum %.6f)\n", std::abs(acc) / double(count));
    return seconds_since(start);
}

}  // namespace

int main(int argc, char** argv) {
    Index dim = 64;
    int nodes = 32;
    int repeats = 4;
    if (argc > 1 && std::string(argv[1]) == "--quick") {
        dim = 16;
        repeats = 1;
    }

    std::printf("threads: %d (OpenMP %s)\n", par::max_threads(),
                par::enabled() ? "on" : "off");
    Workload w = make_workload(dim, 2026);

    std::printf("resolvent circle sweep, dim %lld, %d nodes x %d:\n",
                static_cast<long long>(dim), nodes, repeats);
    const double serial_circle = time_circle_sweep(
        w.family, nodes, repeats,
        [](std::size_t n, auto&& fn) { return par::indexed_map_serial(n, fn); });
    const double parallel_circle = time_circle_sweep(
        w.family, nodes, repeats,
        [](std::size_t n, auto&& fn) { return par::indexed_map(n, fn); });
    std::printf("  serial   %8.3f s\n  parallel %8.3f s  (speedup %.2fx)\n", serial_circle,
                parallel_circle, serial_circle / parallel_circle);

    std::printf("semigroup node sweep, dim %lld, %d nodes x 8 times:\n",
                static_cast<long long>(dim), nodes);
    const double serial_sg = time_semigroup_sweep(
        w.family, nodes,
        [](std::size_t n, auto&& fn) { return par::indexed_map_serial(n, fn); });
    const double parallel_sg = time_semigroup_sweep(
        w.family, nodes, [](std::size_t n, auto&& fn) { return par::indexed_map(n, fn); });
    std::printf("  serial   %8.3f s\n  parallel %8.3f s  (speedup %.2fx)\n", serial_sg,
                parallel_sg, serial_sg / parallel_sg);

    // the sampling sweep parallelizes internally; the checksum pins the
    // thread-count-independent output
    const int samples = repeats * 20000;
    std::printf("numerical range sampling, dim %lld, %d points:\n",
                static_cast<long long>(dim), samples);
    std::printf("  elapsed  %8.3f s\n", time_range_sweep(w.family, samples));
    return 0;
}
