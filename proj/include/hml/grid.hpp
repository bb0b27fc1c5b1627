#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hml {

using cxd = std::complex<double>;

enum class Domain { half_line, unit_interval, real_line };
enum class Side { time, frequency };

std::string to_string(Domain d);

// Uniform grid in the log coordinate x, nodes x_j = x_min + j*delta and
// t_j = exp(x_j). The same object doubles as a plain real-line grid (Domain::
// real_line), in which case the t nodes are never materialized; that keeps
// windows wider than the exp() range representable.
class LogGrid {
public:
    static std::shared_ptr<const LogGrid> create(double x_min, double x_max, std::size_t n,
                                                 Domain domain);

    // Same, but nudges x_max so that x = 0 falls exactly on a node (used by
    // experiments that sample functions with a jump at t = 1).
    static std::shared_ptr<const LogGrid> create_aligned(double x_min, double x_max_target,
                                                         std::size_t n, Domain domain);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double delta() const { return delta_; }
    double dbeta() const { return dbeta_; }
    std::size_t n() const { return n_; }
    Domain domain() const { return domain_; }

    std::span<const double> x() const { return x_; }
    std::span<const double> t() const;       // half_line / unit_interval only
    std::span<const double> sqrt_t() const;  // half_line / unit_interval only
    std::span<const double> trapezoid_weights() const { return w_; }
    // signed FFT-ordered frequencies beta_k = 2 pi k' / (n delta)
    std::span<const double> beta() const { return beta_; }

    bool has_t_nodes() const { return !t_.empty(); }
    bool same_as(const LogGrid& other) const;

private:
    LogGrid() = default;

    double x_min_ = 0.0, x_max_ = 0.0, delta_ = 0.0, dbeta_ = 0.0;
    std::size_t n_ = 0;
    Domain domain_ = Domain::half_line;
    std::vector<double> x_, t_, sqrt_t_, w_, beta_;
};

using GridPtr = std::shared_ptr<const LogGrid>;

struct SampledFunction {
    GridPtr grid;
    Side side = Side::time;
    std::vector<cxd> values;

    std::size_t size() const { return values.size(); }
};

// --- grid module operations ---

GridPtr build_log_grid(double x_min, double x_max, std::size_t n, Domain domain);

// values[j] = expr(t_j); requires a grid with t nodes
SampledFunction sample(const std::function<cxd(double)>& expr, const GridPtr& grid);

// values[j] = expr(x_j); for real-line grids (and occasionally handy elsewhere)
SampledFunction sample_x(const std::function<cxd(double)>& expr, const GridPtr& grid);

SampledFunction zero_function(const GridPtr& grid, Side side = Side::time);

// Trapezoid-weighted sesquilinear pairing, conjugate in the second slot.
cxd inner_product(const SampledFunction& f, const SampledFunction& g);

double norm(const SampledFunction& f);

void check_compatible(const SampledFunction& f, const SampledFunction& g);

} // namespace hml
