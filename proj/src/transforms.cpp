#include "hml/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "hml/error.hpp"
#include "hml/fft.hpp"
#include "hml/kernels.hpp"

namespace hml {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

std::vector<cxd> phase_factors(const LogGrid& g, double x0, int sign) {
    std::vector<cxd> ph(g.n());
    const auto beta = g.beta();
    for (std::size_t k = 0; k < g.n(); ++k) {
        const double ang = sign * beta[k] * x0;
        ph[k] = {std::cos(ang), std::sin(ang)};
    }
    return ph;
}

// time-side samples on the x nodes -> frequency samples; kernel e^{sign * i beta x}
std::vector<cxd> line_to_frequency(const LogGrid& g, std::vector<cxd> buf, int sign) {
    Fft fft(g.n());
    fft.transform(buf, sign);
    const auto ph = phase_factors(g, g.x_min(), sign);
    const double scale = g.delta() / kSqrt2Pi;
    for (std::size_t k = 0; k < g.n(); ++k) buf[k] *= scale * ph[k];
    return buf;
}

// frequency samples -> time-side samples on the x nodes; kernel e^{sign * i beta x}
std::vector<cxd> frequency_to_line(const LogGrid& g, std::vector<cxd> buf, int sign) {
    const auto ph = phase_factors(g, g.x_min(), sign);
    for (std::size_t k = 0; k < g.n(); ++k) buf[k] *= ph[k];
    Fft fft(g.n());
    fft.transform(buf, sign);
    const double scale = g.dbeta() / kSqrt2Pi;
    for (std::size_t k = 0; k < g.n(); ++k) buf[k] *= scale;
    return buf;
}

} // namespace

HalfPlaneSymbol HalfPlaneSymbol::from_function(const GridPtr& grid, std::function<cxd(double)> fn,
                                               SymbolClass tag) {
    HalfPlaneSymbol s;
    s.grid = grid;
    s.tag = tag;
    s.evaluator = std::move(fn);
    s.values.resize(grid->n());
    const auto beta = grid->beta();
    for (std::size_t k = 0; k < grid->n(); ++k) s.values[k] = s.evaluator(beta[k]);
    if (tag == SymbolClass::unimodular) {
        for (const cxd& v : s.values)
            require(std::abs(std::abs(v) - 1.0) <= 1e-8, "not-unimodular",
                    "symbol magnitude deviates from 1");
    }
    return s;
}

HalfPlaneSymbol HalfPlaneSymbol::from_values(const GridPtr& grid, std::vector<cxd> vals,
                                             SymbolClass tag) {
    require(vals.size() == grid->n(), "grid-mismatch", "symbol length differs from grid");
    HalfPlaneSymbol s;
    s.grid = grid;
    s.tag = tag;
    s.values = std::move(vals);
    if (tag == SymbolClass::unimodular) {
        for (const cxd& v : s.values)
            require(std::abs(std::abs(v) - 1.0) <= 1e-8, "not-unimodular",
                    "symbol magnitude deviates from 1");
    }
    return s;
}

cxd HalfPlaneSymbol::eval(double beta) const {
    if (evaluator) return evaluator(beta);
    // Catmull-Rom interpolation on the sorted beta axis
    const LogGrid& g = *grid;
    const double db = g.dbeta();
    const std::size_t n = g.n();
    const double bmin = -db * static_cast<double>(n / 2);
    double pos = (beta - bmin) / db;
    pos = std::clamp(pos, 1.0, static_cast<double>(n - 3));
    const std::size_t i = static_cast<std::size_t>(pos);
    const double s = pos - static_cast<double>(i);
    // sorted index -> FFT index
    auto vat = [&](std::size_t sorted) {
        return values[(sorted + n / 2) % n];
    };
    const cxd p0 = vat(i - 1), p1 = vat(i), p2 = vat(i + 1), p3 = vat(i + 2);
    return 0.5 * ((2.0 * p1) + (-p0 + p2) * s + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * s * s +
                  (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * s * s * s);
}

SampledFunction HalfPlaneSymbol::as_function() const {
    SampledFunction f;
    f.grid = grid;
    f.side = Side::frequency;
    f.values = values;
    return f;
}

double HalfPlaneSymbol::max_abs() const { return kernels::max_abs(values); }

SampledFunction fourier(const SampledFunction& f, TransformDirection dir) {
    require(f.grid != nullptr, "grid-mismatch", "function without a grid");
    const LogGrid& g = *f.grid;
    SampledFunction out;
    out.grid = f.grid;
    if (f.side == Side::time) {
        out.side = Side::frequency;
        out.values = line_to_frequency(g, f.values, dir == TransformDirection::forward ? -1 : +1);
    } else {
        out.side = Side::time;
        out.values = frequency_to_line(g, f.values, dir == TransformDirection::forward ? -1 : +1);
    }
    return out;
}

SampledFunction cov_T(const SampledFunction& f, TransformDirection dir) {
    require(f.side == Side::time, "domain-mismatch", "cov_T expects a time-side function");
    const LogGrid& g = *f.grid;
    SampledFunction out;
    out.grid = f.grid;
    out.side = Side::time;
    out.values.resize(g.n());
    const auto st = g.sqrt_t();
    if (dir == TransformDirection::forward) {
        for (std::size_t j = 0; j < g.n(); ++j) out.values[j] = f.values[j] * st[j];
    } else {
        for (std::size_t j = 0; j < g.n(); ++j) out.values[j] = f.values[j] / st[j];
    }
    return out;
}

SampledFunction cov_W(const SampledFunction& f, TransformDirection dir) {
    require(f.side == Side::time, "domain-mismatch", "cov_W expects a time-side function");
    const LogGrid& g = *f.grid;
    const std::size_t n = g.n();
    SampledFunction out;
    out.side = Side::time;
    out.values.resize(n);
    if (dir == TransformDirection::forward) {
        require(g.domain() == Domain::unit_interval, "domain-mismatch",
                "cov_W forward expects a unit-interval function");
        // u_j = -x_{n-1-j}: reflected window, uniform in u
        out.grid = LogGrid::create(-g.x_max(), -g.x_min(), n, Domain::real_line);
        const auto st = g.sqrt_t();
        for (std::size_t j = 0; j < n; ++j) out.values[j] = f.values[n - 1 - j] * st[n - 1 - j];
    } else {
        require(g.domain() == Domain::real_line, "domain-mismatch",
                "cov_W inverse expects the reflected u-line samples");
        out.grid = LogGrid::create(-g.x_max(), -g.x_min(), n, Domain::unit_interval);
        const auto st = out.grid->sqrt_t();
        for (std::size_t j = 0; j < n; ++j) out.values[j] = f.values[n - 1 - j] / st[j];
    }
    return out;
}

SampledFunction mellin(const SampledFunction& f, TransformDirection dir) {
    const LogGrid& g = *f.grid;
    SampledFunction out;
    out.grid = f.grid;
    if (dir == TransformDirection::forward) {
        require(f.side == Side::time, "domain-mismatch", "mellin forward expects the time side");
        require(g.has_t_nodes(), "domain-mismatch", "mellin needs a grid on (0, infinity)");
        std::vector<cxd> buf(g.n());
        const auto st = g.sqrt_t();
        for (std::size_t j = 0; j < g.n(); ++j) buf[j] = f.values[j] * st[j];
        out.side = Side::frequency;
        out.values = line_to_frequency(g, std::move(buf), +1); // F^{-1} kernel
    } else {
        require(f.side == Side::frequency, "domain-mismatch",
                "mellin inverse expects the frequency side");
        require(g.has_t_nodes(), "domain-mismatch", "mellin needs a grid on (0, infinity)");
        std::vector<cxd> buf = frequency_to_line(g, f.values, -1); // F kernel
        const auto st = g.sqrt_t();
        for (std::size_t j = 0; j < g.n(); ++j) buf[j] /= st[j];
        out.side = Side::time;
        out.values = std::move(buf);
    }
    return out;
}

void riesz_project_values(const LogGrid& g, std::vector<cxd>& values, bool plus) {
    const std::size_t n = g.n();
    const double y0 = -g.x_max();
    const auto beta = g.beta();
    Fft fft(n);

    std::vector<cxd>& buf = values;
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = beta[k] * y0;
        buf[k] *= cxd{std::cos(ang), std::sin(ang)};
    }
    fft.transform(buf, +1);

    // a node at y = 0 belongs to the minus side; the tolerance only absorbs
    // floating-point noise in y_j, not a real panel
    const double tol = g.delta() * 1e-9;
    for (std::size_t j = 0; j < n; ++j) {
        const double y = y0 + g.delta() * static_cast<double>(j);
        const bool minus_side = y <= tol;
        if (minus_side == plus) buf[j] = cxd{0.0, 0.0};
    }

    fft.transform(buf, -1);
    const double scale = g.delta() * g.dbeta() / (2.0 * 3.14159265358979323846264338328);
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = -beta[k] * y0;
        buf[k] *= scale * cxd{std::cos(ang), std::sin(ang)};
    }
}

HalfPlaneSymbol riesz_projection(const SampledFunction& gfun, HalfPlaneSign sign) {
    require(gfun.side == Side::frequency, "domain-mismatch",
            "riesz_projection expects a frequency-side function");
    std::vector<cxd> vals = gfun.values;
    riesz_project_values(*gfun.grid, vals, sign == HalfPlaneSign::plus);
    return HalfPlaneSymbol::from_values(
        gfun.grid, std::move(vals),
        sign == HalfPlaneSign::plus ? SymbolClass::h2plus : SymbolClass::h2minus);
}

std::vector<double> disk_angles(std::size_t circle_n) {
    require(circle_n >= 16, "invalid-size", "angle grid too small");
    std::vector<double> th(circle_n);
    for (std::size_t m = 0; m < circle_n; ++m)
        th[m] = 2.0 * 3.14159265358979323846264338328 * (static_cast<double>(m) + 0.5) /
                static_cast<double>(circle_n);
    return th;
}

std::vector<double> cayley_beta_targets(std::size_t circle_n) {
    auto th = disk_angles(circle_n);
    std::vector<double> b(circle_n);
    for (std::size_t m = 0; m < circle_n; ++m) b[m] = 0.5 / std::tan(0.5 * th[m]);
    return b;
}

DiskSamples cayley_J_inverse(const std::function<cxd(double)>& boundary, std::size_t circle_n) {
    const auto th = disk_angles(circle_n);
    const auto bt = cayley_beta_targets(circle_n);
    DiskSamples out;
    out.circle_n = circle_n;
    out.values.resize(circle_n);
    for (std::size_t m = 0; m < circle_n; ++m) {
        const cxd z = {std::cos(th[m]), std::sin(th[m])};
        out.values[m] = kSqrt2Pi / (1.0 - z) * boundary(bt[m]);
    }
    return out;
}

DiskSamples cayley_J_inverse(const HalfPlaneSymbol& F, std::size_t circle_n) {
    return cayley_J_inverse([&](double b) { return F.eval(b); }, circle_n);
}

std::vector<cxd> cayley_J_forward(const DiskSamples& disk) {
    const auto th = disk_angles(disk.circle_n);
    const auto bt = cayley_beta_targets(disk.circle_n);
    std::vector<cxd> out(disk.circle_n);
    for (std::size_t m = 0; m < disk.circle_n; ++m) {
        out[m] = disk.values[m] / (kSqrt2Pi * (cxd{0.0, bt[m]} + 0.5));
    }
    return out;
}

} // namespace hml
