#pragma once

#include "hml/grid.hpp"
#include "hml/transforms.hpp"

namespace hml {

enum class OrbitSide { unit, tail };
enum class BasisSign { plus, minus };

// L_n(x) by the three-term recurrence; stable in doubles up to n ~ 64.
double laguerre_poly(int n, double x);

// The closed-form shift orbits of the indicator chi = chi_(0,1):
//   unit: L_n(-log t) chi(t)          (the V^n chi family)
//   tail: -L_n(log t) / t (1 - chi)   (the adjoint-orbit family on (1, inf))
// A node sitting exactly on t = 1 carries the mean of the one-sided limits,
// consistent with trapezoid quadrature across the jump.
SampledFunction laguerre_orbit_fn(int n, OrbitSide side, const GridPtr& grid);

// Model bases of H^2_plus / H^2_minus:
//   u_n(i b) = (1/sqrt(2 pi)) phi(i b)^n / (i b + 1/2)
//   v_n(i b) = (1/sqrt(2 pi)) (i b + 1/2)^n / (i b - 1/2)^{n+1}
// v_n is the Mellin image of the tail orbit functions (the sign convention
// follows that identity; see README notes on the basis orientation).
HalfPlaneSymbol model_basis(int n, BasisSign sign, const GridPtr& grid);

// closed-form basis values, usable off the grid
cxd model_basis_value(int n, BasisSign sign, double beta);

// phi(i b) = (i b - 1/2)/(i b + 1/2), the unimodular symbol of the shift
cxd phi_symbol(double beta);

// von Neumann's Laguerre shift (L f)(x) = f(x) - int_{lo}^{x} e^{(s-x)/2} f(s) ds
// on a real-line grid, lo = 0 (snapped to the last node <= 0) or -infinity.
SampledFunction laguerre_shift(const SampledFunction& f, bool bilateral);

// Laguerre functions Phi_n, bilateral index per the shift orbit:
//   n >= 0: e^{-x/2} L_n(x) on x > 0;  n < 0: -e^{x/2} L_{-n-1}(-x) on x < 0.
SampledFunction laguerre_function(int n, const GridPtr& grid);

} // namespace hml
