#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hml/grid.hpp"

namespace hml {

enum class TransformDirection { forward, inverse };
enum class SymbolClass { generic, h2plus, h2minus, unimodular };
enum class HalfPlaneSign { plus, minus };

// A function on the frequency line i*R, sampled on a grid's dual nodes.
// Symbols born from closed forms keep their evaluator so they can be read off
// the grid (the Cayley transform needs values at cot(theta/2)/2); symbols
// loaded from data fall back to cubic interpolation.
struct HalfPlaneSymbol {
    GridPtr grid;
    std::vector<cxd> values; // at grid->beta() (FFT order)
    SymbolClass tag = SymbolClass::generic;
    std::function<cxd(double)> evaluator; // may be empty

    static HalfPlaneSymbol from_function(const GridPtr& grid, std::function<cxd(double)> fn,
                                         SymbolClass tag);
    static HalfPlaneSymbol from_values(const GridPtr& grid, std::vector<cxd> vals, SymbolClass tag);

    cxd eval(double beta) const;
    SampledFunction as_function() const;
    double max_abs() const;
};

// Continuous-transform approximation of the Fourier pair on the real line.
//   time side  -> frequency: forward kernel e^{-i beta x}, inverse kernel e^{+i beta x}
//   frequency  -> time     : inverse kernel e^{+i beta x}, forward kernel e^{-i beta x}
// inverse(forward(f)) reproduces f exactly in the discrete chain.
SampledFunction fourier(const SampledFunction& f, TransformDirection dir);

// (Tf)(x) = f(e^x) e^{x/2}; output tagged as a real-line function on the same nodes.
SampledFunction cov_T(const SampledFunction& f, TransformDirection dir);

// (Wf)(u) = f(e^{-u}) e^{-u/2}; unit-interval samples to the reflected u-line
// [-x_max, -x_min], uniform in u (the Laplace-transform side of Q f = L W f).
SampledFunction cov_W(const SampledFunction& f, TransformDirection dir);

// Mellin transform Q f = F^{-1} T f and its exact discrete inverse.
SampledFunction mellin(const SampledFunction& f, TransformDirection dir);

// Riesz projections of L^2(iR) onto H^2_plus/minus: transform to the reflected
// x-window with the e^{+i beta y} kernel, mask y > 0 (plus) or y <= 0 (minus),
// transform back. Exactly idempotent and complementary.
HalfPlaneSymbol riesz_projection(const SampledFunction& g, HalfPlaneSign sign);
void riesz_project_values(const LogGrid& grid, std::vector<cxd>& values, bool plus);

// Disk-side samples at theta_m = 2 pi (m + 1/2) / circle_n; theta = 0 (z = 1,
// the pole of J^{-1}) is excluded by construction.
struct DiskSamples {
    std::size_t circle_n = 0;
    std::vector<cxd> values;
};

std::vector<double> disk_angles(std::size_t circle_n);
// beta targets 0.5 cot(theta/2) matched to disk_angles
std::vector<double> cayley_beta_targets(std::size_t circle_n);

// (J^{-1} F)(z) = sqrt(2 pi) / (1 - z) * F(0.5 (1+z)/(1-z)) on the angle grid
DiskSamples cayley_J_inverse(const std::function<cxd(double)>& boundary, std::size_t circle_n);
DiskSamples cayley_J_inverse(const HalfPlaneSymbol& F, std::size_t circle_n);
// (J f)(i beta_m) = (1/sqrt(2 pi)) / (i beta_m + 1/2) * f(z_m); the forward map
// evaluated at the same matched boundary points
std::vector<cxd> cayley_J_forward(const DiskSamples& disk);

} // namespace hml
