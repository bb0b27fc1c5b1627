#include "hml/semigroup.hpp"

#include <cmath>

#include "hml/error.hpp"

namespace hml {

SampledFunction apply_Ct(const SampledFunction& f, double t) {
    require(t >= 0.0, "negative-time", "the dilation semigroup is defined for t >= 0");
    require(f.side == Side::time, "domain-mismatch", "C_t acts on time-side functions");
    const LogGrid& g = *f.grid;
    const std::size_t n = g.n();
    SampledFunction out = zero_function(f.grid);
    const double w = std::exp(-0.5 * t);
    const double m = t / g.delta();
    const double mr = std::round(m);

    if (std::abs(m - mr) < 1e-9) {
        const std::size_t shift = static_cast<std::size_t>(mr);
        if (shift < n)
            for (std::size_t j = shift; j < n; ++j) out.values[j] = w * f.values[j - shift];
    } else {
        const std::size_t lo = static_cast<std::size_t>(std::floor(m));
        const double frac = m - std::floor(m);
        for (std::size_t j = 0; j < n; ++j) {
            cxd a{0.0, 0.0}, b{0.0, 0.0};
            if (j >= lo && j - lo < n) a = f.values[j - lo];
            if (j >= lo + 1 && j - lo - 1 < n) b = f.values[j - lo - 1];
            out.values[j] = w * ((1.0 - frac) * a + frac * b);
        }
    }
    return out;
}

SampledFunction hardy_via_semigroup(const SampledFunction& f, double t_max, double dt) {
    require(t_max >= 20.0, "step-misaligned", "t_max must be at least 20");
    const double m = dt / f.grid->delta();
    require(std::abs(m - std::round(m)) < 1e-9 && m >= 1.0 - 1e-9, "step-misaligned",
            "dt must be a positive integer multiple of delta");

    const int steps = static_cast<int>(std::round(t_max / dt));
    SampledFunction acc = f; // t = 0 term, weight 1/2
    for (auto& v : acc.values) v *= 0.5;
    for (int s = 1; s < steps; ++s) {
        const double t = s * dt;
        SampledFunction ct = apply_Ct(f, t);
        const double w = std::exp(-0.5 * t);
        for (std::size_t j = 0; j < acc.size(); ++j) acc.values[j] += w * ct.values[j];
    }
    {
        SampledFunction ct = apply_Ct(f, t_max);
        const double w = 0.5 * std::exp(-0.5 * t_max);
        for (std::size_t j = 0; j < acc.size(); ++j) acc.values[j] += w * ct.values[j];
    }
    for (auto& v : acc.values) v *= dt;
    return acc;
}

SampledFunction generator_apply(const std::function<cxd(double)>& f,
                                const std::function<cxd(double)>& fprime, const GridPtr& grid) {
    SampledFunction out = zero_function(grid);
    const auto t = grid->t();
    for (std::size_t j = 0; j < grid->n(); ++j)
        out.values[j] = -t[j] * fprime(t[j]) - 0.5 * f(t[j]);
    return out;
}

} // namespace hml
