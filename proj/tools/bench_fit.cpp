// Compares the OpenMP fit path against the serial reference on synthetic
// data: same seeds, same restart schedule, identical results expected.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "archetypes/fit.hpp"
#include "archetypes/reference.hpp"
#include "archetypes/rng.hpp"

using namespace archetypes;

namespace {

DataMatrix synthetic(Eigen::Index n, Eigen::Index m, int k, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd archetypes(k, m);
    for (int j = 0; j < k; ++j)
        for (Eigen::Index c = 0; c < m; ++c) archetypes(j, c) = rng.uniform(-3, 3);

    DataMatrix data;
    data.values.resize(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd w(k);
        double sum = 0;
        for (int j = 0; j < k; ++j) {
            w(j) = rng.uniform();
            sum += w(j);
        }
        w /= sum;
        data.values.row(i) = (w.transpose() * archetypes).array() + 0.01 * rng.uniform(-1, 1);
    }
    for (Eigen::Index c = 0; c < m; ++c) data.column_names.push_back("c" + std::to_string(c));
    return data;
}

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    Eigen::Index n = 600, m = 12;
    int k = 4, restarts = 8, max_iter = 30;
    std::uint64_t seed = 7;

    CLI::App app{"serial vs OpenMP fit benchmark"};
    app.add_option("--n", n, "observations");
    app.add_option("--m", m, "attributes");
    app.add_option("--k", k, "archetypes");
    app.add_option("--restarts", restarts, "restarts");
    app.add_option("--max-iter", max_iter, "iterations per restart");
    app.add_option("--seed", seed, "seed");
    CLI11_PARSE(app, argc, argv);

    const DataMatrix data = synthetic(n, m, k, seed);
    FitConfig config;
    config.k = k;
    config.restarts = restarts;
    config.max_iterations = max_iter;
    config.seed = seed;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("data: n=%lld m=%lld k=%d restarts=%d max_iter=%d\n",
                static_cast<long long>(n), static_cast<long long>(m), k, restarts, max_iter);

    ArchetypalModel serial, parallel;
    const double t_serial = time_seconds([&] { serial = reference::fit(data, config); });
    const double t_parallel = time_seconds([&] { parallel = fit(data, config); });

    const bool identical =
        serial.rss == parallel.rss &&
        std::memcmp(serial.alpha.data(), parallel.alpha.data(),
                    sizeof(double) * static_cast<std::size_t>(serial.alpha.size())) == 0;

    std::printf("serial reference: %8.3f s   rss=%.6g\n", t_serial, serial.rss);
    std::printf("openmp kernels:   %8.3f s   rss=%.6g\n", t_parallel, parallel.rss);
    std::printf("speedup: %.2fx   results identical: %s\n", t_serial / t_parallel,
                identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
