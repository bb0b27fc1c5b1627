#pragma once

#include "hml/grid.hpp"
#include "hml/rng.hpp"

namespace hml {

// Random smooth test function: a few complex Gaussian bumps in the log
// coordinate, normalized to unit norm. Centers are kept in [x_lo, x_hi] so
// probes (and their Hardy images) stay numerically compact in the window.
SampledFunction random_bump_function(const GridPtr& grid, Rng& rng, double x_lo, double x_hi,
                                     int bumps = 4, double sigma_lo = 0.5, double sigma_hi = 1.5);

// Default probe policy for a grid: centers in [x_min+8, min(0, x_max-8)],
// which keeps H_infinity images window-compact on half-line grids.
SampledFunction random_probe(const GridPtr& grid, Rng& rng);

} // namespace hml
