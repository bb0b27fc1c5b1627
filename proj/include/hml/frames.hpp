#pragma once

#include <vector>

#include "hml/grid.hpp"
#include "hml/hardy.hpp"
#include "hml/transforms.hpp"

namespace hml {

enum class FrameMethod { gram_eigen, symbol_extrema };

struct FrameReport {
    double c1 = 0.0;
    double c2 = 0.0;
    int truncation_M = 0;
    int probe_dim = 0;
    FrameMethod method = FrameMethod::gram_eigen;
    // symbol-method evidence
    double min_abs_symbol = 0.0;
    double max_abs_symbol = 0.0;
    double neg_coeff_rel = 0.0;
    bool frame_vector = false;
};

// [v, op v, ..., op^{M-1} v]
std::vector<SampledFunction> orbit(const OperatorHandle& op, const SampledFunction& v, int M);

// Truncated frame operator S_M = sum_n <.,v_n> v_n compressed to the span of
// the first probe_dim Laguerre-orbit basis functions; extreme eigenvalues by
// cyclic Jacobi.
FrameReport frame_bounds_gram(const std::vector<SampledFunction>& vectors, int probe_dim);

// u = J^{-1}(Q f) on circle_n angles: c1 = (min|u|)^2, c2 = (max|u|)^2, plus
// the negative-Fourier-coefficient analyticity surrogate for 1/u, u in H^inf.
FrameReport frame_symbol_check(const SampledFunction& f, std::size_t circle_n);

enum class NegativeKind { backward_shift, bilateral_shift };

// k -> sum_{n<=M} |<probe_k, op^n v>|^2 with op realized on the frequency grid:
// backward shift = P_plus M_phibar against probes u_k; bilateral shift = M_phi
// against the descending z-power probes (u_0, v_0, v_1, ...). The sequences
// must decay in k: no uniform lower frame bound exists.
std::vector<double> negative_frame_probe(NegativeKind kind, const SampledFunction& v, int M, int K);

// Illustrative decay curve for the discrete Cesaro operator on truncated
// coefficient space: n -> ||(I - C)^n e_0||. Plot data only; no acceptance
// claim is attached (the Kriete-Trutt space itself is out of scope).
std::vector<double> cesaro_orbit_decay(int dim, int M);

} // namespace hml
