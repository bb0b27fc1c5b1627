// Timing comparison of the OpenMP kernels against the serial reference path.
// The two paths are bit-identical by construction; this target only measures.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hml/fft.hpp"
#include "hml/grid.hpp"
#include "hml/kernels.hpp"
#include "hml/rng.hpp"
#include "hml/transforms.hpp"

namespace {

using hml::cxd;

double seconds(const std::function<void()>& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() /
           reps;
}

std::vector<cxd> random_vec(std::size_t n, hml::Rng& rng) {
    std::vector<cxd> v(n);
    for (auto& z : v) z = rng.complex_normal();
    return v;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available: both columns run the serial code\n");
#endif
    hml::Rng rng(42);

    {
        const std::size_t n = 1u << 22;
        auto a = random_vec(n, rng);
        auto b = random_vec(n, rng);
        std::vector<cxd> out(n);
        const double ts = seconds([&] { hml::kernels::pointwise_mul_serial(a, b, out); }, 5);
        const double tp = seconds([&] { hml::kernels::pointwise_mul_omp(a, b, out); }, 5);
        std::printf("pointwise_mul n=2^22      serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
    }
    {
        const std::size_t n = 1u << 15;
        std::vector<std::vector<cxd>> vecs(48);
        for (auto& v : vecs) v = random_vec(n, rng);
        std::vector<double> w(n, 1.0);
        const double ts = seconds([&] { (void)hml::kernels::gram_serial(vecs, w); }, 3);
        const double tp = seconds([&] { (void)hml::kernels::gram_omp(vecs, w); }, 3);
        std::printf("gram 48x48 (n=2^15)       serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
        auto gs = hml::kernels::gram_serial(vecs, w);
        auto gp = hml::kernels::gram_omp(vecs, w);
        std::printf("  paths bit-identical: %s\n", gs == gp ? "yes" : "NO");
    }
    {
        // batched Mellin transforms: the batch loop is the parallel axis
        auto grid = hml::build_log_grid(-26.0, 26.0, 1u << 18, hml::Domain::half_line);
        std::vector<hml::SampledFunction> fs;
        for (int i = 0; i < 8; ++i) {
            hml::SampledFunction f = hml::zero_function(grid);
            for (auto& z : f.values) z = rng.complex_normal();
            fs.push_back(std::move(f));
        }
        auto run_batch = [&](bool par) {
            std::vector<hml::SampledFunction> out(fs.size());
#pragma omp parallel for schedule(static) if (par)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fs.size()); ++i)
                out[i] = hml::mellin(fs[i], hml::TransformDirection::forward);
        };
        const double ts = seconds([&] { run_batch(false); }, 2);
        const double tp = seconds([&] { run_batch(true); }, 2);
        std::printf("mellin batch 8x(n=2^18)   serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
    }
    {
        const std::size_t n = 1u << 20;
        auto a = random_vec(n, rng);
        const double ts = seconds([&] { (void)hml::kernels::max_abs_serial(a); }, 10);
        const double tp = seconds([&] { (void)hml::kernels::max_abs_omp(a); }, 10);
        std::printf("max_abs n=2^20            serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                    ts * 1e3, tp * 1e3, ts / tp);
    }
    return 0;
}
