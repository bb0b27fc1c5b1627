#pragma once

#include <cstdint>
#include <vector>

#include "hml/grid.hpp"
#include "hml/transforms.hpp"

namespace hml {

// Grid-level stand-in for a measurable frequency set E.
struct FrequencySet {
    GridPtr grid;
    std::vector<std::uint8_t> indicator; // FFT order, 0/1

    static FrequencySet all(const GridPtr& grid);
    static FrequencySet none(const GridPtr& grid);
    // keep signed beta in [lo, hi]
    static FrequencySet band(const GridPtr& grid, double lo, double hi);
    // keep |beta| in [b0, b1]
    static FrequencySet abs_band(const GridPtr& grid, double b0, double b1);
    FrequencySet complement() const;
};

// P_E = Q^{-1} chi_E Q: the reducing-subspace projection attached to E.
SampledFunction reducing_projection(const FrequencySet& E, const SampledFunction& f);

// Which operator the subspace q H^2 is invariant for decides the mirror:
// the adjoint side uses P_plus (invariant for Hinf*), the operator side P_minus.
enum class InvariantFor { adjoint, op };

// Projection onto the shift-invariant subspace with unimodular symbol q:
// f -> Q^{-1}( q P_pm( conj(q) Q f ) ).
SampledFunction nonreducing_projection(const HalfPlaneSymbol& q, const SampledFunction& f,
                                       InvariantFor which = InvariantFor::adjoint);

enum class CyclicityOutcome { star_cyclic_consistent, not_star_cyclic, cyclic_consistent, inconclusive };

const char* to_string(CyclicityOutcome v);

struct CyclicityVerdict {
    double min_abs_symbol = 0.0;
    double vanishing_fraction = 0.0;
    // truncated integrals of log|Q f| / (1 + w^2) over windows |w| <= w_top 2^{k-K}
    std::vector<double> log_integral_estimates;
    CyclicityOutcome verdict = CyclicityOutcome::inconclusive;
    double threshold = 0.0; // absolute threshold actually used
    double w_top = 0.0;     // top log-integral window (cyclic diagnostic only)
};

// Verdict on the nowhere-vanishing condition for the Mellin symbol. A
// below-threshold run that touches the end of the frequency grid is treated
// as decay of the symbol, not vanishing; only interior runs of relative
// length >= 1% flag not_star_cyclic.
CyclicityVerdict star_cyclic_diagnostic(const SampledFunction& f, double threshold = -1.0);

// Adds the truncated log-integral window test (K = 6 doublings below the
// largest frequency at which the computed symbol is still trustworthy).
CyclicityVerdict cyclic_diagnostic(const SampledFunction& f);

} // namespace hml
