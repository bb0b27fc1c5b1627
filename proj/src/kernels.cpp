#include "hml/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

#include "hml/error.hpp"

namespace hml::kernels {

namespace {

std::atomic<bool> g_parallel{true};

bool env_disables_parallel() {
    const char* v = std::getenv("HML_SERIAL");
    return v != nullptr && v[0] != '\0' && v[0] != '0';
}

const bool g_env_serial = env_disables_parallel();

} // namespace

void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load(std::memory_order_relaxed) && !g_env_serial;
#else
    return false;
#endif
}

void pointwise_mul_serial(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

void pointwise_mul_omp(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void pointwise_mul(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out) {
    if (parallel_enabled())
        pointwise_mul_omp(a, b, out);
    else
        pointwise_mul_serial(a, b, out);
}

void axpby_serial(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
                  std::span<cxd> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
}

void axpby_omp(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
               std::span<cxd> out) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = alpha * a[i] + beta * b[i];
}

void axpby(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
           std::span<cxd> out) {
    if (parallel_enabled())
        axpby_omp(alpha, a, beta, b, out);
    else
        axpby_serial(alpha, a, beta, b, out);
}

cxd weighted_dot(std::span<const cxd> a, std::span<const cxd> b, std::span<const double> w) {
    require(a.size() == b.size(), "size-mismatch", "weighted_dot operand lengths differ");
    cxd acc{0.0, 0.0};
    if (w.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) acc += w[i] * a[i] * std::conj(b[i]);
    }
    return acc;
}

namespace {

cxd gram_entry(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w,
               std::size_t i, std::size_t j) {
    return weighted_dot(vecs[i], vecs[j], w);
}

} // namespace

std::vector<cxd> gram_serial(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w) {
    const std::size_t m = vecs.size();
    std::vector<cxd> g(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            g[i * m + j] = gram_entry(vecs, w, i, j);
            g[j * m + i] = std::conj(g[i * m + j]);
        }
    return g;
}

std::vector<cxd> gram_omp(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w) {
    const std::size_t m = vecs.size();
    std::vector<cxd> g(m * m);
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(m * (m + 1) / 2);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < pairs; ++p) {
        // unrank the lower-triangular pair index
        std::size_t i = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(p) + 1.0) - 1.0) / 2.0);
        while ((i + 1) * (i + 2) / 2 <= static_cast<std::size_t>(p)) ++i;
        while (i * (i + 1) / 2 > static_cast<std::size_t>(p)) --i;
        std::size_t j = static_cast<std::size_t>(p) - i * (i + 1) / 2;
        g[i * m + j] = gram_entry(vecs, w, i, j);
        if (i != j) g[j * m + i] = std::conj(g[i * m + j]);
    }
    return g;
}

std::vector<cxd> gram(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w) {
    return parallel_enabled() ? gram_omp(vecs, w) : gram_serial(vecs, w);
}

double max_abs_serial(std::span<const cxd> a) {
    double m = 0.0;
    for (const cxd& v : a) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_omp(std::span<const cxd> a) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
    return m;
}

double max_abs(std::span<const cxd> a) {
    return parallel_enabled() ? max_abs_omp(a) : max_abs_serial(a);
}

void cumtrapz(std::span<const cxd> f, std::span<cxd> cum) {
    require(f.size() == cum.size(), "size-mismatch", "cumtrapz buffer lengths differ");
    if (f.empty()) return;
    cum[0] = cxd{0.0, 0.0};
    for (std::size_t j = 1; j < f.size(); ++j) cum[j] = cum[j - 1] + 0.5 * (f[j - 1] + f[j]);
}

void tailtrapz(std::span<const cxd> f, std::span<cxd> tail) {
    require(f.size() == tail.size(), "size-mismatch", "tailtrapz buffer lengths differ");
    if (f.empty()) return;
    const std::size_t n = f.size();
    tail[n - 1] = cxd{0.0, 0.0};
    for (std::size_t j = n - 1; j-- > 0;) tail[j] = tail[j + 1] + 0.5 * (f[j] + f[j + 1]);
}

std::vector<double> jacobi_eigenvalues(std::vector<cxd> a, std::size_t m) {
    require(a.size() == m * m, "size-mismatch", "jacobi matrix is not m x m");
    auto at = [&](std::size_t i, std::size_t j) -> cxd& { return a[i * m + j]; };

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) off += std::norm(at(i, j));
        if (off < 1e-28) break;

        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const cxd apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                // complex rotation: phase to make the pivot real, then a real Jacobi angle
                const cxd phase = apq / std::abs(apq);
                const double g = std::abs(apq);
                const double theta = 0.5 * std::atan2(2.0 * g, aqq - app);
                const double c = std::cos(theta);
                const cxd s = std::sin(theta) * std::conj(phase);

                for (std::size_t k = 0; k < m; ++k) {
                    const cxd akp = at(k, p);
                    const cxd akq = at(k, q);
                    at(k, p) = c * akp - std::conj(s) * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const cxd apk = at(p, k);
                    const cxd aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = std::conj(s) * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> ev(m);
    for (std::size_t i = 0; i < m; ++i) ev[i] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace hml::kernels
