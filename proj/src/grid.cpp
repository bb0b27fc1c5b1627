#include "hml/grid.hpp"

#include <cmath>

#include "hml/error.hpp"
#include "hml/kernels.hpp"

namespace hml {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// exp(x) must stay a positive normal double for t-node grids
constexpr double kMaxLogNode = 706.0;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

std::string to_string(Domain d) {
    switch (d) {
        case Domain::half_line: return "half-line";
        case Domain::unit_interval: return "unit-interval";
        case Domain::real_line: return "real-line";
    }
    return "?";
}

GridPtr LogGrid::create(double x_min, double x_max, std::size_t n, Domain domain) {
    require(x_min < x_max, "invalid-range", "x_min must be smaller than x_max");
    require(is_pow2(n) && n >= 16, "invalid-size", "node count must be a power of two >= 16");
    if (domain == Domain::unit_interval)
        require(x_max <= 0.0, "domain-mismatch", "unit-interval grid needs x_max <= 0");
    if (domain != Domain::real_line)
        require(x_max <= kMaxLogNode && x_min >= -kMaxLogNode, "invalid-range",
                "t nodes exp(x) not representable on this window; use a real-line grid");

    auto g = std::shared_ptr<LogGrid>(new LogGrid());
    g->x_min_ = x_min;
    g->x_max_ = x_max;
    g->n_ = n;
    g->domain_ = domain;
    g->delta_ = (x_max - x_min) / static_cast<double>(n - 1);
    g->dbeta_ = kTwoPi / (static_cast<double>(n) * g->delta_);

    g->x_.resize(n);
    g->w_.assign(n, 1.0);
    g->w_.front() = 0.5;
    g->w_.back() = 0.5;
    for (std::size_t j = 0; j < n; ++j) g->x_[j] = x_min + g->delta_ * static_cast<double>(j);

    if (domain != Domain::real_line) {
        g->t_.resize(n);
        g->sqrt_t_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            g->t_[j] = std::exp(g->x_[j]);
            g->sqrt_t_[j] = std::exp(0.5 * g->x_[j]);
        }
    }

    g->beta_.resize(n);
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t k = 0; k < n; ++k) {
        const std::ptrdiff_t ks = static_cast<std::ptrdiff_t>(k) < half
                                      ? static_cast<std::ptrdiff_t>(k)
                                      : static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(n);
        g->beta_[k] = g->dbeta_ * static_cast<double>(ks);
    }
    return g;
}

GridPtr LogGrid::create_aligned(double x_min, double x_max_target, std::size_t n, Domain domain) {
    require(x_min < 0.0 && x_max_target > x_min, "invalid-range",
            "aligned grid needs x_min < 0 < x_max coverage");
    const double d0 = (x_max_target - x_min) / static_cast<double>(n - 1);
    const double m = std::round(-x_min / d0);
    require(m >= 1.0, "invalid-range", "aligned grid window too small");
    const double d = -x_min / m;
    return create(x_min, x_min + d * static_cast<double>(n - 1), n, domain);
}

std::span<const double> LogGrid::t() const {
    require(!t_.empty(), "domain-mismatch", "real-line grid has no t nodes");
    return t_;
}

std::span<const double> LogGrid::sqrt_t() const {
    require(!sqrt_t_.empty(), "domain-mismatch", "real-line grid has no t nodes");
    return sqrt_t_;
}

bool LogGrid::same_as(const LogGrid& other) const {
    return this == &other ||
           (domain_ == other.domain_ && n_ == other.n_ && x_min_ == other.x_min_ &&
            x_max_ == other.x_max_);
}

GridPtr build_log_grid(double x_min, double x_max, std::size_t n, Domain domain) {
    return LogGrid::create(x_min, x_max, n, domain);
}

SampledFunction sample(const std::function<cxd(double)>& expr, const GridPtr& grid) {
    SampledFunction f;
    f.grid = grid;
    f.side = Side::time;
    f.values.resize(grid->n());
    const auto t = grid->t();
    for (std::size_t j = 0; j < grid->n(); ++j) {
        const cxd v = expr(t[j]);
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), "non-finite-sample",
                "expression not finite at t = " + std::to_string(t[j]));
        f.values[j] = v;
    }
    return f;
}

SampledFunction sample_x(const std::function<cxd(double)>& expr, const GridPtr& grid) {
    SampledFunction f;
    f.grid = grid;
    f.side = Side::time;
    f.values.resize(grid->n());
    const auto x = grid->x();
    for (std::size_t j = 0; j < grid->n(); ++j) {
        const cxd v = expr(x[j]);
        require(std::isfinite(v.real()) && std::isfinite(v.imag()), "non-finite-sample",
                "expression not finite at x = " + std::to_string(x[j]));
        f.values[j] = v;
    }
    return f;
}

SampledFunction zero_function(const GridPtr& grid, Side side) {
    SampledFunction f;
    f.grid = grid;
    f.side = side;
    f.values.assign(grid->n(), cxd{0.0, 0.0});
    return f;
}

void check_compatible(const SampledFunction& f, const SampledFunction& g) {
    require(f.grid && g.grid, "grid-mismatch", "sampled function without a grid");
    require(f.grid->same_as(*g.grid), "grid-mismatch", "functions live on different grids");
    require(f.side == g.side, "grid-mismatch", "functions live on different sides");
}

cxd inner_product(const SampledFunction& f, const SampledFunction& g) {
    check_compatible(f, g);
    const LogGrid& gr = *f.grid;
    if (f.side == Side::frequency) {
        return kernels::weighted_dot(f.values, g.values, {}) * gr.dbeta();
    }
    if (gr.domain() == Domain::real_line) {
        return kernels::weighted_dot(f.values, g.values, gr.trapezoid_weights()) * gr.delta();
    }
    // time side on (0, infinity): pre-scale by sqrt(t) so the products stay
    // inside the double range even when |f| itself is huge near t = 0
    const auto st = gr.sqrt_t();
    const std::size_t n = gr.n();
    const auto w = gr.trapezoid_weights();
    cxd acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        const cxd a = f.values[j] * st[j];
        const cxd b = g.values[j] * st[j];
        acc += w[j] * a * std::conj(b);
    }
    return acc * gr.delta();
}

double norm(const SampledFunction& f) {
    const double n2 = inner_product(f, f).real();
    return n2 > 0.0 ? std::sqrt(n2) : 0.0;
}

} // namespace hml
