#pragma once

#include "hml/grid.hpp"
#include "hml/transforms.hpp"

namespace hml {

enum class CommutantKind { Hinf, H1star };

// A f = Q^{-1} M_g Q f, the generic element of the commutant of Hinf (bounded
// g) resp. of H1* (bounded analytic g; the result is kept in the Q-image of
// L^2(0,1) by a plus-projection before inversion).
SampledFunction commutant_apply(CommutantKind which, const HalfPlaneSymbol& g,
                                const SampledFunction& f, double bound_cap = 1e6);

// max over seeded random unit probes of ||A H f - H A f|| with H the matching
// Hardy operator (the adjoint H1* on the unit interval).
double commutation_defect(CommutantKind which, const HalfPlaneSymbol& g, int trials,
                          std::uint64_t seed = 0x9E3779B9ull);

// negative-coefficient analyticity surrogate of a symbol transported to the
// disk by composition with the Cayley map; small means boundary trace of H^inf
double symbol_analyticity_defect(const HalfPlaneSymbol& g, std::size_t circle_n = 512);

} // namespace hml
