#include "hml/commutant.hpp"

#include <cmath>

#include "hml/error.hpp"
#include "hml/hardy.hpp"
#include "hml/kernels.hpp"
#include "hml/probes.hpp"
#include "hml/rng.hpp"

namespace hml {

double symbol_analyticity_defect(const HalfPlaneSymbol& g, std::size_t circle_n) {
    const auto theta = disk_angles(circle_n);
    const auto btar = cayley_beta_targets(circle_n);
    std::vector<cxd> disk(circle_n);
    for (std::size_t m = 0; m < circle_n; ++m) disk[m] = g.eval(btar[m]);

    double max_coeff = 0.0, max_neg = 0.0;
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(circle_n) / 2;
    for (std::ptrdiff_t k = -half; k < half; ++k) {
        cxd acc{0.0, 0.0};
        for (std::size_t m = 0; m < circle_n; ++m) {
            const double ang = -static_cast<double>(k) * theta[m];
            acc += disk[m] * cxd{std::cos(ang), std::sin(ang)};
        }
        const double a = std::abs(acc) / static_cast<double>(circle_n);
        max_coeff = std::max(max_coeff, a);
        if (k < 0) max_neg = std::max(max_neg, a);
    }
    return max_coeff > 0.0 ? max_neg / max_coeff : 0.0;
}

SampledFunction commutant_apply(CommutantKind which, const HalfPlaneSymbol& g,
                                const SampledFunction& f, double bound_cap) {
    require(g.grid->same_as(*f.grid), "grid-mismatch", "symbol and function grids differ");
    require(g.max_abs() <= bound_cap, "unbounded-symbol",
            "symbol magnitude exceeds the configured cap");
    if (which == CommutantKind::Hinf) {
        require(f.grid->domain() == Domain::half_line, "domain-mismatch",
                "the Hinf commutant acts on half-line functions");
    } else {
        require(f.grid->domain() == Domain::unit_interval, "domain-mismatch",
                "the H1* commutant acts on unit-interval functions");
        require(symbol_analyticity_defect(g) <= 1e-3, "not-analytic",
                "symbol fails the analyticity surrogate");
    }

    SampledFunction q = mellin(f, TransformDirection::forward);
    for (std::size_t k = 0; k < q.size(); ++k) q.values[k] *= g.values[k];
    if (which == CommutantKind::H1star) riesz_project_values(*f.grid, q.values, /*plus=*/true);
    return mellin(q, TransformDirection::inverse);
}

double commutation_defect(CommutantKind which, const HalfPlaneSymbol& g, int trials,
                          std::uint64_t seed) {
    require(trials >= 8, "invalid-size", "defect probe needs at least 8 trials");
    const GridPtr grid = g.grid;
    const HardyKind hk = which == CommutantKind::Hinf ? HardyKind::Hinf : HardyKind::H1star;
    // seam-clean probes: the Mellin route wraps window-edge mass around, so
    // centers stay clear of t = 1 (unit interval) resp. the right edge
    const double lo = grid->x_min() + 8.0;
    const double hi = grid->domain() == Domain::unit_interval
                          ? -6.0
                          : std::min(0.0, grid->x_max() - 8.0);

    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst) if (kernels::parallel_enabled())
    for (int tr = 0; tr < trials; ++tr) {
        Rng rng(seed + 0x2545F491u * static_cast<std::uint64_t>(tr + 1));
        SampledFunction f = random_bump_function(grid, rng, lo, hi, 4, 0.5, 1.2);
        SampledFunction lhs = apply_hardy(hk, commutant_apply(which, g, f));
        SampledFunction rhs = commutant_apply(which, g, apply_hardy(hk, f));
        for (std::size_t j = 0; j < lhs.size(); ++j) lhs.values[j] -= rhs.values[j];
        worst = std::max(worst, norm(lhs));
    }
    return worst;
}

} // namespace hml
