#include "hml/laguerre.hpp"

#include <cmath>

#include "hml/error.hpp"
#include "hml/kernels.hpp"

namespace hml {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

// index of a node within delta/4 of x = 0, or npos
std::size_t jump_node(const LogGrid& g) {
    if (g.x_min() > 0.0 || g.x_max() < 0.0) return static_cast<std::size_t>(-1);
    const double j = -g.x_min() / g.delta();
    const double jr = std::round(j);
    if (std::abs(j - jr) < 0.25 && jr >= 0.0 && jr < static_cast<double>(g.n()))
        return static_cast<std::size_t>(jr);
    return static_cast<std::size_t>(-1);
}

} // namespace

double laguerre_poly(int n, double x) {
    require(n >= 0, "negative-degree", "Laguerre degree must be nonnegative");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

SampledFunction laguerre_orbit_fn(int n, OrbitSide side, const GridPtr& grid) {
    require(n >= 0, "negative-degree", "orbit index must be nonnegative");
    require(grid->has_t_nodes(), "domain-mismatch", "orbit functions live on (0, infinity)");
    SampledFunction f = zero_function(grid);
    const auto x = grid->x();
    const auto t = grid->t();
    const std::size_t j1 = jump_node(*grid);
    for (std::size_t j = 0; j < grid->n(); ++j) {
        if (side == OrbitSide::unit) {
            if (x[j] < 0.0) f.values[j] = laguerre_poly(n, -x[j]);
        } else {
            if (x[j] > 0.0) f.values[j] = -laguerre_poly(n, x[j]) / t[j];
        }
    }
    if (j1 != static_cast<std::size_t>(-1))
        f.values[j1] = side == OrbitSide::unit ? cxd{0.5, 0.0} : cxd{-0.5, 0.0};
    return f;
}

cxd phi_symbol(double beta) {
    const cxd ib{0.0, beta};
    return (ib - 0.5) / (ib + 0.5);
}

cxd model_basis_value(int n, BasisSign sign, double beta) {
    const cxd ib{0.0, beta};
    if (sign == BasisSign::plus) {
        cxd p{1.0, 0.0};
        const cxd phi = phi_symbol(beta);
        for (int k = 0; k < n; ++k) p *= phi;
        return p / (kSqrt2Pi * (ib + 0.5));
    }
    cxd p{1.0, 0.0};
    const cxd r = (ib + 0.5) / (ib - 0.5);
    for (int k = 0; k < n; ++k) p *= r;
    return p / (kSqrt2Pi * (ib - 0.5));
}

HalfPlaneSymbol model_basis(int n, BasisSign sign, const GridPtr& grid) {
    require(n >= 0, "negative-degree", "basis index must be nonnegative");
    return HalfPlaneSymbol::from_function(
        grid, [n, sign](double b) { return model_basis_value(n, sign, b); },
        sign == BasisSign::plus ? SymbolClass::h2plus : SymbolClass::h2minus);
}

SampledFunction laguerre_shift(const SampledFunction& f, bool bilateral) {
    const LogGrid& g = *f.grid;
    const std::size_t n = g.n();
    const auto x = g.x();

    std::vector<cxd> wf(n);
    for (std::size_t j = 0; j < n; ++j) wf[j] = std::exp(0.5 * x[j]) * f.values[j];
    std::vector<cxd> cum(n);
    kernels::cumtrapz(wf, cum);

    cxd base{0.0, 0.0};
    if (!bilateral) {
        // lower limit 0, snapped to the last node strictly below 0 so that a
        // mean-value jump node at x = 0 stays on the upper side of the limit
        std::size_t jlast = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (x[j] < -0.25 * g.delta()) jlast = j;
        base = cum[jlast];
    }

    SampledFunction out = f;
    for (std::size_t j = 0; j < n; ++j)
        out.values[j] -= std::exp(-0.5 * x[j]) * (cum[j] - base) * g.delta();
    return out;
}

SampledFunction laguerre_function(int n, const GridPtr& grid) {
    SampledFunction f = zero_function(grid);
    const auto x = grid->x();
    const std::size_t j0 = jump_node(*grid);
    for (std::size_t j = 0; j < grid->n(); ++j) {
        if (n >= 0) {
            if (x[j] > 0.0) f.values[j] = std::exp(-0.5 * x[j]) * laguerre_poly(n, x[j]);
        } else {
            if (x[j] < 0.0) f.values[j] = -std::exp(0.5 * x[j]) * laguerre_poly(-n - 1, -x[j]);
        }
    }
    if (j0 != static_cast<std::size_t>(-1))
        f.values[j0] = n >= 0 ? cxd{0.5 * laguerre_poly(n, 0.0), 0.0}
                              : cxd{-0.5 * laguerre_poly(-n - 1, 0.0), 0.0};
    return f;
}

} // namespace hml
