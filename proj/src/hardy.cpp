#include "hml/hardy.hpp"

#include <cmath>

#include "hml/error.hpp"
#include "hml/kernels.hpp"
#include "hml/probes.hpp"
#include "hml/rng.hpp"

namespace hml {

namespace {

void check_domain(HardyKind kind, const SampledFunction& f) {
    require(f.side == Side::time, "domain-mismatch", "Hardy operators act on the time side");
    const Domain d = f.grid->domain();
    const bool unit = kind == HardyKind::H1 || kind == HardyKind::H1star;
    if (unit)
        require(d == Domain::unit_interval, "domain-mismatch", "H1 variants need a unit-interval grid");
    else
        require(d == Domain::half_line, "domain-mismatch", "Hinf variants need a half-line grid");
}

bool is_avg(HardyKind kind) { return kind == HardyKind::H1 || kind == HardyKind::Hinf; }

} // namespace

SampledFunction apply_hardy(HardyKind kind, const SampledFunction& f) {
    check_domain(kind, f);
    const LogGrid& g = *f.grid;
    const std::size_t n = g.n();
    SampledFunction out;
    out.grid = f.grid;
    out.side = Side::time;
    out.values.resize(n);

    if (is_avg(kind)) {
        // (1/t) * cumulative trapezoid of f(e^s) e^s
        const auto t = g.t();
        std::vector<cxd> ft(n);
        for (std::size_t j = 0; j < n; ++j) ft[j] = f.values[j] * t[j];
        std::vector<cxd> cum(n);
        kernels::cumtrapz(ft, cum);
        for (std::size_t j = 0; j < n; ++j) out.values[j] = cum[j] * g.delta() / t[j];
    } else {
        // tail trapezoid of f(e^s)
        std::vector<cxd> tail(n);
        kernels::tailtrapz(f.values, tail);
        for (std::size_t j = 0; j < n; ++j) out.values[j] = tail[j] * g.delta();
    }
    return out;
}

SampledFunction apply_hardy_avg_adjoint(const SampledFunction& gf) {
    const LogGrid& g = *gf.grid;
    const std::size_t n = g.n();
    const auto w = g.trapezoid_weights();
    SampledFunction out;
    out.grid = gf.grid;
    out.side = Side::time;
    out.values.resize(n);

    // (A* g)_s = (delta / w_s) sum_{j >= s} c_{js} w_j g_j with c the cumtrapz
    // coefficient pattern; R_s = sum_{j > s} w_j g_j by a reverse scan.
    std::vector<cxd> wg(n);
    for (std::size_t j = 0; j < n; ++j) wg[j] = w[j] * gf.values[j];
    cxd run{0.0, 0.0};
    std::vector<cxd> R(n);
    R[n - 1] = cxd{0.0, 0.0};
    for (std::size_t j = n - 1; j-- > 0;) {
        run += wg[j + 1];
        R[j] = run;
    }
    out.values[0] = 0.5 * R[0] * g.delta() / w[0];
    for (std::size_t s = 1; s < n; ++s)
        out.values[s] = (0.5 * wg[s] + R[s]) * g.delta() / w[s];
    return out;
}

SampledFunction apply_hardy_tail_adjoint(const SampledFunction& gf) {
    const LogGrid& g = *gf.grid;
    const std::size_t n = g.n();
    const auto w = g.trapezoid_weights();
    const auto t = g.t();
    SampledFunction out;
    out.grid = gf.grid;
    out.side = Side::time;
    out.values.resize(n);

    // (B* g)_r = (delta / (w_r t_r)) sum_{s <= r} d_{sr} w_s t_s g_s with d the
    // tail-trapezoid coefficient pattern.
    std::vector<cxd> q(n);
    for (std::size_t s = 0; s < n; ++s) q[s] = w[s] * t[s] * gf.values[s];
    cxd prefix{0.0, 0.0};
    out.values[0] = 0.5 * g.delta() * gf.values[0];
    for (std::size_t r = 1; r < n; ++r) {
        prefix += q[r - 1];
        if (r < n - 1)
            out.values[r] = (prefix + 0.5 * q[r]) * g.delta() / (w[r] * t[r]);
        else
            out.values[r] = 0.5 * prefix * g.delta() / (w[r] * t[r]);
    }
    return out;
}

OperatorHandle hardy_operator(HardyKind kind, const GridPtr& grid) {
    OperatorHandle op;
    op.grid = grid;
    switch (kind) {
        case HardyKind::H1: op.name = "H1"; break;
        case HardyKind::H1star: op.name = "H1*"; break;
        case HardyKind::Hinf: op.name = "Hinf"; break;
        case HardyKind::Hinfstar: op.name = "Hinf*"; break;
    }
    op.apply = [kind](const SampledFunction& f) { return apply_hardy(kind, f); };
    if (is_avg(kind))
        op.apply_adjoint = [](const SampledFunction& f) { return apply_hardy_avg_adjoint(f); };
    else
        op.apply_adjoint = [](const SampledFunction& f) { return apply_hardy_tail_adjoint(f); };
    return op;
}

OperatorHandle identity_operator(const GridPtr& grid) {
    OperatorHandle op;
    op.name = "identity";
    op.grid = grid;
    op.apply = [](const SampledFunction& f) { return f; };
    op.apply_adjoint = [](const SampledFunction& f) { return f; };
    return op;
}

SampledFunction apply_V(const SampledFunction& f) {
    require(f.grid->domain() == Domain::half_line, "domain-mismatch",
            "V = I - Hinf* acts on half-line functions");
    SampledFunction h = apply_hardy(HardyKind::Hinfstar, f);
    SampledFunction out = f;
    for (std::size_t j = 0; j < out.size(); ++j) out.values[j] -= h.values[j];
    return out;
}

OperatorHandle shift_operator(const GridPtr& grid) {
    OperatorHandle op;
    op.name = "I-Hinf*";
    op.grid = grid;
    op.apply = [](const SampledFunction& f) { return apply_V(f); };
    op.apply_adjoint = [](const SampledFunction& f) {
        SampledFunction h = apply_hardy_tail_adjoint(f);
        SampledFunction out = f;
        for (std::size_t j = 0; j < out.size(); ++j) out.values[j] -= h.values[j];
        return out;
    };
    return op;
}

double operator_norm_estimate(const OperatorHandle& op, int iters, std::uint64_t seed) {
    require(iters >= 50, "invalid-size", "power iteration needs at least 50 steps");
    Rng rng(seed);
    SampledFunction v = zero_function(op.grid);
    for (auto& z : v.values) z = rng.complex_normal();
    double nv = norm(v);
    for (auto& z : v.values) z /= nv;

    double est = 0.0, prev = 0.0;
    for (int i = 0; i < iters; ++i) {
        SampledFunction w = op.apply_adjoint(op.apply(v));
        const double lam = inner_product(w, v).real();
        const double wn = norm(w);
        require(wn > 0.0, "no-convergence", "power iteration collapsed to zero");
        for (std::size_t j = 0; j < w.size(); ++j) w.values[j] /= wn;
        v = std::move(w);
        prev = est;
        est = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }
    require(std::abs(est - prev) <= 1e-6, "no-convergence",
            "power iteration still moving after the requested steps");
    return est;
}

double normality_defect(const OperatorHandle& op, int trials, std::uint64_t seed) {
    require(trials >= 8, "invalid-size", "normality probe needs at least 8 trials");
    const GridPtr& grid = op.grid;
    // centers may reach almost the right edge of a unit-interval window: the
    // commutator weights probes by their mass near t = 1
    const double lo = grid->x_min() + 8.0;
    const double hi = grid->domain() == Domain::unit_interval
                          ? -1.5
                          : std::min(0.0, grid->x_max() - 8.0);

    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (kernels::parallel_enabled())
    for (int tr = 0; tr < trials; ++tr) {
        Rng rng(seed + 0x51ed2701u * static_cast<std::uint64_t>(tr + 1));
        SampledFunction f = random_bump_function(grid, rng, lo, hi);
        SampledFunction a = op.apply(op.apply_adjoint(f));
        SampledFunction b = op.apply_adjoint(op.apply(f));
        for (std::size_t j = 0; j < a.size(); ++j) a.values[j] -= b.values[j];
        worst = std::max(worst, norm(a));
    }
    return worst;
}

cxd spectrum_probe(HardyKind kind, cxd s, const GridPtr& grid) {
    if (kind == HardyKind::H1) {
        require(s.real() > -0.5, "domain-mismatch", "monomial probe needs Re s > -1/2");
        require(grid->domain() == Domain::unit_interval, "domain-mismatch",
                "H1 probe needs a unit-interval grid");
        SampledFunction f = sample_x([s](double x) { return std::exp(s * x); }, grid);
        SampledFunction hf = apply_hardy(HardyKind::H1, f);
        return inner_product(hf, f) / inner_product(f, f);
    }
    require(kind == HardyKind::Hinf, "domain-mismatch", "spectrum probe knows H1 and Hinf");
    require(grid->domain() == Domain::half_line, "domain-mismatch",
            "Hinf probe needs a half-line grid");
    const double tau = s.imag();
    const double mid = 0.5 * (grid->x_min() + grid->x_max());
    const double sig = (grid->x_max() - grid->x_min()) / 10.0;
    // t^{i tau - 1/2} under a Gaussian window in the log coordinate
    SampledFunction f = sample_x(
        [tau, mid, sig](double x) {
            const double d = (x - mid) / sig;
            const cxd osc{std::cos(tau * x), std::sin(tau * x)};
            return osc * std::exp(-0.5 * d * d - 0.5 * x);
        },
        grid);
    SampledFunction hf = apply_hardy(HardyKind::Hinf, f);
    return inner_product(hf, f) / inner_product(f, f);
}

} // namespace hml
