#pragma once

#include <functional>

#include "hml/grid.hpp"

namespace hml {

// (C_t f)(x) = e^{-t/2} f(e^{-t} x): a weighted right translation by t in the
// log coordinate. Integer multiples of delta shift indices exactly; other t
// use linear interpolation.
SampledFunction apply_Ct(const SampledFunction& f, double t);

// trapezoid in t of e^{-t/2} C_t f over [0, t_max]; reproduces Hinf f
SampledFunction hardy_via_semigroup(const SampledFunction& f, double t_max, double dt);

// A f = -t f'(t) - f(t)/2 sampled from analytic expressions (no numerical
// differentiation; the generator is unbounded and sample differencing would
// amplify grid noise).
SampledFunction generator_apply(const std::function<cxd(double)>& f,
                                const std::function<cxd(double)>& fprime, const GridPtr& grid);

} // namespace hml
