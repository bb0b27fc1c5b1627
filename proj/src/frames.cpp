#include "hml/frames.hpp"

#include <cmath>

#include "hml/error.hpp"
#include "hml/kernels.hpp"
#include "hml/laguerre.hpp"

namespace hml {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Q f evaluated off the grid by the same quadrature mellin uses, with an
// incremental phase rotor per node.
cxd mellin_boundary_value(const SampledFunction& f, double beta) {
    const LogGrid& g = *f.grid;
    const auto st = g.sqrt_t();
    const auto w = g.trapezoid_weights();
    const cxd rot{std::cos(beta * g.delta()), std::sin(beta * g.delta())};
    cxd phase{std::cos(beta * g.x_min()), std::sin(beta * g.x_min())};
    cxd acc{0.0, 0.0};
    for (std::size_t j = 0; j < g.n(); ++j) {
        acc += w[j] * f.values[j] * st[j] * phase;
        phase *= rot;
    }
    return acc * (g.delta() / kSqrt2Pi);
}

} // namespace

std::vector<SampledFunction> orbit(const OperatorHandle& op, const SampledFunction& v, int M) {
    require(M >= 1, "invalid-size", "orbit length must be at least 1");
    std::vector<SampledFunction> out;
    out.reserve(static_cast<std::size_t>(M));
    out.push_back(v);
    for (int k = 1; k < M; ++k) out.push_back(op.apply(out.back()));
    return out;
}

FrameReport frame_bounds_gram(const std::vector<SampledFunction>& vectors, int probe_dim) {
    require(!vectors.empty(), "insufficient-orbit", "empty orbit");
    const int M = static_cast<int>(vectors.size());
    require(probe_dim >= 1 && probe_dim <= M, "insufficient-orbit",
            "probe dimension exceeds the orbit length");
    require(2 * probe_dim <= M, "insufficient-orbit",
            "probe dimension above M/2: truncation would dominate");
    const GridPtr grid = vectors.front().grid;
    for (const auto& v : vectors) check_compatible(vectors.front(), v);

    // orthonormal probe family V^i chi restricted to (0,1)
    std::vector<SampledFunction> probes;
    probes.reserve(static_cast<std::size_t>(probe_dim));
    for (int i = 0; i < probe_dim; ++i)
        probes.push_back(laguerre_orbit_fn(i, OrbitSide::unit, grid));

    // B[i][n] = <probe_i, v_n>; G = B B^H on the probe span
    const std::size_t p = static_cast<std::size_t>(probe_dim);
    std::vector<cxd> B(p * static_cast<std::size_t>(M));
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(p) * M;
#pragma omp parallel for schedule(static) if (kernels::parallel_enabled())
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx) / static_cast<std::size_t>(M);
        const std::size_t n = static_cast<std::size_t>(idx) % static_cast<std::size_t>(M);
        B[idx] = inner_product(probes[i], vectors[n]);
    }

    std::vector<cxd> G(p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            cxd acc{0.0, 0.0};
            for (int n = 0; n < M; ++n)
                acc += B[i * M + n] * std::conj(B[j * M + n]);
            G[i * p + j] = acc;
        }

    const std::vector<double> ev = kernels::jacobi_eigenvalues(std::move(G), p);
    FrameReport r;
    r.method = FrameMethod::gram_eigen;
    r.truncation_M = M;
    r.probe_dim = probe_dim;
    r.c1 = ev.front();
    r.c2 = ev.back();
    return r;
}

FrameReport frame_symbol_check(const SampledFunction& f, std::size_t circle_n) {
    require(circle_n >= 256, "invalid-size", "symbol check needs at least 256 angle nodes");
    require(f.grid->domain() == Domain::unit_interval, "domain-mismatch",
            "frame symbol check expects a unit-interval function");

    const auto theta = disk_angles(circle_n);
    const auto btar = cayley_beta_targets(circle_n);
    std::vector<cxd> u(circle_n);
    const std::ptrdiff_t cn = static_cast<std::ptrdiff_t>(circle_n);
#pragma omp parallel for schedule(static) if (kernels::parallel_enabled())
    for (std::ptrdiff_t m = 0; m < cn; ++m) {
        const cxd z{std::cos(theta[m]), std::sin(theta[m])};
        u[m] = kSqrt2Pi / (1.0 - z) * mellin_boundary_value(f, btar[m]);
    }

    FrameReport r;
    r.method = FrameMethod::symbol_extrema;
    r.probe_dim = static_cast<int>(circle_n);
    double lo = std::abs(u[0]), hi = std::abs(u[0]);
    for (const cxd& v : u) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    r.min_abs_symbol = lo;
    r.max_abs_symbol = hi;
    r.c1 = lo * lo;
    r.c2 = hi * hi;

    // analyticity surrogate: negative disk-Fourier coefficients of u
    double max_coeff = 0.0, max_neg = 0.0;
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(circle_n) / 2;
    for (std::ptrdiff_t k = -half; k < half; ++k) {
        cxd acc{0.0, 0.0};
        for (std::size_t m = 0; m < circle_n; ++m) {
            const double ang = -static_cast<double>(k) * theta[m];
            acc += u[m] * cxd{std::cos(ang), std::sin(ang)};
        }
        const double a = std::abs(acc) / static_cast<double>(circle_n);
        max_coeff = std::max(max_coeff, a);
        if (k < 0) max_neg = std::max(max_neg, a);
    }
    r.neg_coeff_rel = max_coeff > 0.0 ? max_neg / max_coeff : 0.0;
    r.frame_vector = r.min_abs_symbol > 1e-3 && r.neg_coeff_rel <= 1e-3;
    return r;
}

std::vector<double> negative_frame_probe(NegativeKind kind, const SampledFunction& v, int M,
                                         int K) {
    require(K <= M, "invalid-size", "probe count K must not exceed the orbit length M");
    require(v.side == Side::frequency, "domain-mismatch",
            "negative frame probes act on the frequency side");
    const GridPtr grid = v.grid;
    const LogGrid& g = *grid;
    const std::size_t n = g.n();
    const auto beta = g.beta();

    std::vector<std::vector<cxd>> probes(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        probes[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (kind == NegativeKind::backward_shift)
                probes[k][i] = model_basis_value(k, BasisSign::plus, beta[i]);
            else
                probes[k][i] = k == 0 ? model_basis_value(0, BasisSign::plus, beta[i])
                                      : model_basis_value(k - 1, BasisSign::minus, beta[i]);
        }
    }

    std::vector<cxd> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = phi_symbol(beta[i]);

    std::vector<double> seq(static_cast<std::size_t>(K) + 1, 0.0);
    std::vector<cxd> w = v.values;
    for (int step = 0; step <= M; ++step) {
        for (int k = 0; k <= K; ++k) {
            const cxd ip = kernels::weighted_dot(probes[k], w, {}) * g.dbeta();
            seq[k] += std::norm(ip);
        }
        if (kind == NegativeKind::backward_shift) {
            for (std::size_t i = 0; i < n; ++i) w[i] *= std::conj(phi[i]);
            riesz_project_values(g, w, /*plus=*/true);
        } else {
            for (std::size_t i = 0; i < n; ++i) w[i] *= phi[i];
        }
    }
    return seq;
}

std::vector<double> cesaro_orbit_decay(int dim, int M) {
    require(dim >= 2 && M >= 1, "invalid-size", "cesaro probe needs dim >= 2, M >= 1");
    std::vector<double> a(static_cast<std::size_t>(dim), 0.0);
    a[0] = 1.0;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(M) + 1);
    for (int step = 0; step <= M; ++step) {
        double n2 = 0.0;
        for (double c : a) n2 += c * c;
        out.push_back(std::sqrt(n2));
        // (I - C) a, with (C a)_m = (a_0 + ... + a_m)/(m+1)
        std::vector<double> next(a.size());
        double run = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) {
            run += a[m];
            next[m] = a[m] - run / static_cast<double>(m + 1);
        }
        a = std::move(next);
    }
    return out;
}

} // namespace hml
