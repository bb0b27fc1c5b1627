#include "hml/probes.hpp"

#include <cmath>

#include "hml/error.hpp"

namespace hml {

SampledFunction random_bump_function(const GridPtr& grid, Rng& rng, double x_lo, double x_hi,
                                     int bumps, double sigma_lo, double sigma_hi) {
    require(x_lo < x_hi, "invalid-range", "bump center range is empty");
    SampledFunction f = zero_function(grid);
    const auto x = grid->x();
    for (int b = 0; b < bumps; ++b) {
        const double mu = rng.uniform(x_lo, x_hi);
        const double sig = rng.uniform(sigma_lo, sigma_hi);
        const cxd a = rng.complex_normal();
        for (std::size_t j = 0; j < grid->n(); ++j) {
            const double d = (x[j] - mu) / sig;
            f.values[j] += a * std::exp(-0.5 * d * d);
        }
    }
    const double nrm = norm(f);
    require(nrm > 0.0, "non-finite-sample", "degenerate random probe");
    for (auto& v : f.values) v /= nrm;
    return f;
}

SampledFunction random_probe(const GridPtr& grid, Rng& rng) {
    const double lo = grid->x_min() + 8.0;
    double hi = std::min(0.0, grid->x_max() - 8.0);
    if (hi <= lo) hi = grid->x_min() + 0.75 * (grid->x_max() - grid->x_min());
    return random_bump_function(grid, rng, lo, hi);
}

} // namespace hml
