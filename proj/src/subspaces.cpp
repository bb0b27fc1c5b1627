#include "hml/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hml/error.hpp"
#include "hml/kernels.hpp"

namespace hml {

namespace {

constexpr int kWindowDoublings = 6;
constexpr double kFloorRel = 1e-6; // trust the symbol down to this fraction of its peak

} // namespace

FrequencySet FrequencySet::all(const GridPtr& grid) {
    return {grid, std::vector<std::uint8_t>(grid->n(), 1)};
}

FrequencySet FrequencySet::none(const GridPtr& grid) {
    return {grid, std::vector<std::uint8_t>(grid->n(), 0)};
}

FrequencySet FrequencySet::band(const GridPtr& grid, double lo, double hi) {
    FrequencySet e{grid, std::vector<std::uint8_t>(grid->n(), 0)};
    const auto beta = grid->beta();
    for (std::size_t k = 0; k < grid->n(); ++k)
        e.indicator[k] = (beta[k] >= lo && beta[k] <= hi) ? 1 : 0;
    return e;
}

FrequencySet FrequencySet::abs_band(const GridPtr& grid, double b0, double b1) {
    FrequencySet e{grid, std::vector<std::uint8_t>(grid->n(), 0)};
    const auto beta = grid->beta();
    for (std::size_t k = 0; k < grid->n(); ++k) {
        const double a = std::abs(beta[k]);
        e.indicator[k] = (a >= b0 && a <= b1) ? 1 : 0;
    }
    return e;
}

FrequencySet FrequencySet::complement() const {
    FrequencySet e{grid, indicator};
    for (auto& b : e.indicator) b = b ? 0 : 1;
    return e;
}

SampledFunction reducing_projection(const FrequencySet& E, const SampledFunction& f) {
    require(E.grid && E.grid->same_as(*f.grid), "grid-mismatch",
            "frequency set and function live on different grids");
    require(f.grid->domain() == Domain::half_line, "domain-mismatch",
            "reducing projections act on half-line functions");
    SampledFunction g = mellin(f, TransformDirection::forward);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!E.indicator[k]) g.values[k] = cxd{0.0, 0.0};
    return mellin(g, TransformDirection::inverse);
}

SampledFunction nonreducing_projection(const HalfPlaneSymbol& q, const SampledFunction& f,
                                       InvariantFor which) {
    require(q.tag == SymbolClass::unimodular, "not-unimodular",
            "nonreducing projections need a unimodular symbol");
    require(q.grid->same_as(*f.grid), "grid-mismatch",
            "symbol and function live on different grids");
    SampledFunction g = mellin(f, TransformDirection::forward);
    for (std::size_t k = 0; k < g.size(); ++k) g.values[k] *= std::conj(q.values[k]);
    riesz_project_values(*f.grid, g.values, which == InvariantFor::adjoint);
    for (std::size_t k = 0; k < g.size(); ++k) g.values[k] *= q.values[k];
    return mellin(g, TransformDirection::inverse);
}

const char* to_string(CyclicityOutcome v) {
    switch (v) {
        case CyclicityOutcome::star_cyclic_consistent: return "star_cyclic_consistent";
        case CyclicityOutcome::not_star_cyclic: return "not_star_cyclic";
        case CyclicityOutcome::cyclic_consistent: return "cyclic_consistent";
        case CyclicityOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

struct SymbolScan {
    std::vector<double> beta_sorted;
    std::vector<double> abs_sorted;
    double max_abs = 0.0;
};

SymbolScan scan_symbol(const SampledFunction& f, std::vector<cxd>* symbol_out = nullptr) {
    SampledFunction Q = mellin(f, TransformDirection::forward);
    const LogGrid& g = *f.grid;
    const std::size_t n = g.n();
    SymbolScan s;
    s.beta_sorted.resize(n);
    s.abs_sorted.resize(n);
    // FFT order -> ascending beta
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = (k + n / 2) % n;
        s.beta_sorted[k] = g.beta()[src];
        s.abs_sorted[k] = std::abs(Q.values[src]);
        s.max_abs = std::max(s.max_abs, s.abs_sorted[k]);
    }
    if (symbol_out) *symbol_out = std::move(Q.values);
    return s;
}

CyclicityVerdict star_verdict_from_scan(const SymbolScan& s, double threshold) {
    CyclicityVerdict v;
    const std::size_t n = s.abs_sorted.size();
    v.threshold = threshold > 0.0 ? threshold : 1e-8 * s.max_abs;
    v.min_abs_symbol = *std::min_element(s.abs_sorted.begin(), s.abs_sorted.end());

    std::size_t below = 0;
    std::size_t longest_interior = 0;
    std::size_t run = 0, run_start = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const bool b = k < n && s.abs_sorted[k] < v.threshold;
        if (b) {
            if (run == 0) run_start = k;
            ++run;
            ++below;
        } else if (run > 0) {
            const bool touches_edge = run_start == 0 || k == n;
            if (!touches_edge) longest_interior = std::max(longest_interior, run);
            run = 0;
        }
    }
    v.vanishing_fraction = static_cast<double>(below) / static_cast<double>(n);
    if (static_cast<double>(longest_interior) >= 0.01 * static_cast<double>(n))
        v.verdict = CyclicityOutcome::not_star_cyclic;
    else
        v.verdict = CyclicityOutcome::star_cyclic_consistent;
    return v;
}

} // namespace

CyclicityVerdict star_cyclic_diagnostic(const SampledFunction& f, double threshold) {
    return star_verdict_from_scan(scan_symbol(f), threshold);
}

CyclicityVerdict cyclic_diagnostic(const SampledFunction& f) {
    const SymbolScan s = scan_symbol(f);
    CyclicityVerdict v = star_verdict_from_scan(s, -1.0);
    if (v.verdict == CyclicityOutcome::not_star_cyclic) return v;

    const std::size_t n = s.abs_sorted.size();
    const double dbeta = f.grid->dbeta();
    const double bmax = s.beta_sorted.back();

    // largest contiguous-from-zero frequency at which the computed symbol is
    // still above the quadrature trust floor
    const double floor_abs = kFloorRel * s.max_abs;
    std::size_t i0 = static_cast<std::size_t>(
        std::lower_bound(s.beta_sorted.begin(), s.beta_sorted.end(), 0.0) - s.beta_sorted.begin());
    double w_top = 0.0;
    for (std::size_t k = i0; k < n && s.abs_sorted[k] >= floor_abs; ++k) w_top = s.beta_sorted[k];
    w_top = std::min(w_top, 0.5 * bmax);
    v.w_top = w_top;

    if (w_top <= 0.0) {
        v.verdict = CyclicityOutcome::inconclusive;
        return v;
    }

    v.log_integral_estimates.resize(kWindowDoublings + 1);
    for (int k = 0; k <= kWindowDoublings; ++k) {
        const double W = w_top * std::pow(2.0, k - kWindowDoublings);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(s.beta_sorted[j]) > W) continue;
            const double a = std::max(s.abs_sorted[j], 1e-300);
            acc += std::log(a) / (1.0 + s.beta_sorted[j] * s.beta_sorted[j]);
        }
        v.log_integral_estimates[k] = acc * dbeta;
    }

    // last three doublings must each push the truncated integral down by at
    // least 10% of its current magnitude
    bool diverging = true;
    for (int k = kWindowDoublings - 2; k <= kWindowDoublings; ++k) {
        const double drop = v.log_integral_estimates[k - 1] - v.log_integral_estimates[k];
        if (!(drop >= 0.1 * std::abs(v.log_integral_estimates[k]))) diverging = false;
    }
    v.verdict = diverging ? CyclicityOutcome::cyclic_consistent : CyclicityOutcome::inconclusive;
    return v;
}

} // namespace hml
