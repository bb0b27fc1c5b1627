#pragma once

#include <functional>
#include <string>

#include "hml/grid.hpp"

namespace hml {

enum class HardyKind { H1, H1star, Hinf, Hinfstar };

// Matrix-free linear map together with its adjoint in the discrete L^2 inner
// product. apply_adjoint is built as the exact transpose of the quadrature
// scheme, so <Af, g> = <f, A*g> holds to machine precision.
struct OperatorHandle {
    std::string name;
    GridPtr grid;
    std::function<SampledFunction(const SampledFunction&)> apply;
    std::function<SampledFunction(const SampledFunction&)> apply_adjoint;
};

// (H f)(x) = (1/x) int_0^x f, (H* f)(x) = int_x^up f(t)/t dt, with cumulative
// trapezoid sums in the log coordinate; mass below t_min counts as zero.
SampledFunction apply_hardy(HardyKind kind, const SampledFunction& f);

// exact discrete adjoints of the two quadrature schemes above
SampledFunction apply_hardy_avg_adjoint(const SampledFunction& g);  // adjoint of H1/Hinf
SampledFunction apply_hardy_tail_adjoint(const SampledFunction& g); // adjoint of H1*/Hinf*

OperatorHandle hardy_operator(HardyKind kind, const GridPtr& grid);
OperatorHandle identity_operator(const GridPtr& grid);
OperatorHandle shift_operator(const GridPtr& grid); // V = I - Hinf*

// V = I - Hinf* (unitary on L^2(0, infinity))
SampledFunction apply_V(const SampledFunction& f);

// Power iteration on op composed with its adjoint from a seeded random start.
// Throws "no-convergence" if the last step still moves by more than 1e-6.
double operator_norm_estimate(const OperatorHandle& op, int iters,
                              std::uint64_t seed = 0x9E3779B9ull);

// max over seeded random unit probes of ||(op op* - op* op) f||
double normality_defect(const OperatorHandle& op, int trials,
                        std::uint64_t seed = 0x9E3779B9ull);

// Rayleigh-quotient probe of the spectrum: monomials t^s for H1 (returns
// approximately 1/(s+1)); a wave packet t^{i tau - 1/2} with tau = Im(s) for
// Hinf (returns a point near the circle |z - 1| = 1).
cxd spectrum_probe(HardyKind kind, cxd s, const GridPtr& grid);

} // namespace hml
