#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hml::kernels {

using cxd = std::complex<double>;

// Runtime switch between the OpenMP kernels and the serial reference path.
// Every parallel kernel assigns whole output elements to threads and computes
// each element with the same serial code, so the two paths are bit-identical;
// tests assert that and the bench target times them against each other.
void set_parallel(bool on);
bool parallel_enabled();

// out[i] = a[i] * b[i]
void pointwise_mul_serial(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out);
void pointwise_mul_omp(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out);
void pointwise_mul(std::span<const cxd> a, std::span<const cxd> b, std::span<cxd> out);

// out[i] = alpha * a[i] + beta * b[i]
void axpby_serial(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
                  std::span<cxd> out);
void axpby_omp(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
               std::span<cxd> out);
void axpby(cxd alpha, std::span<const cxd> a, cxd beta, std::span<const cxd> b,
           std::span<cxd> out);

// sum_i w[i] * a[i] * conj(b[i]); w may be empty (all-ones). Serial by design:
// a single reduction stays on one thread so results do not depend on the
// thread count.
cxd weighted_dot(std::span<const cxd> a, std::span<const cxd> b, std::span<const double> w);

// Hermitian Gram matrix G[i][j] = sum_k w[k] v_i[k] conj(v_j[k]), row-major m x m.
// The OpenMP variant parallelizes over (i, j) pairs.
std::vector<cxd> gram_serial(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w);
std::vector<cxd> gram_omp(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w);
std::vector<cxd> gram(const std::vector<std::vector<cxd>>& vecs, std::span<const double> w);

double max_abs_serial(std::span<const cxd> a);
double max_abs_omp(std::span<const cxd> a);
double max_abs(std::span<const cxd> a);

// cum[j] = sum of trapezoid panels of f over [0, j]; cum[0] = 0. Sequential scan.
void cumtrapz(std::span<const cxd> f, std::span<cxd> cum);

// tail[j] = sum of trapezoid panels of f over [j, n-1]; tail[n-1] = 0.
void tailtrapz(std::span<const cxd> f, std::span<cxd> tail);

// Eigenvalues of a dense Hermitian m x m matrix (row-major) by cyclic Jacobi.
// Returns eigenvalues sorted ascending. Intended for small probe matrices.
std::vector<double> jacobi_eigenvalues(std::vector<cxd> a, std::size_t m);

} // namespace hml::kernels
