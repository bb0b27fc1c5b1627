#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hml {

// Radix-2 in-place FFT. Grid sizes are powers of two by invariant, so nothing
// fancier is needed; the transform is kept serial so results never depend on
// the thread count.
class Fft {
public:
    explicit Fft(std::size_t n);

    // sign = -1: X_k = sum_j x_j e^{-2pi i jk/n}   (standard forward DFT)
    // sign = +1: X_k = sum_j x_j e^{+2pi i jk/n}   (un-normalized inverse)
    void transform(std::span<std::complex<double>> data, int sign) const;

    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::complex<double>> twiddle_; // e^{-2pi i k/n}, k < n/2
};

} // namespace hml
