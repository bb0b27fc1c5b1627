#include "hml/fft.hpp"

#include <cmath>

#include "hml/error.hpp"

namespace hml {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

Fft::Fft(std::size_t n) : n_(n) {
    require(is_pow2(n), "invalid-size", "FFT length must be a power of two");
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = -kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        twiddle_[k] = {std::cos(ang), std::sin(ang)};
    }
}

void Fft::transform(std::span<std::complex<double>> data, int sign) const {
    require(data.size() == n_, "size-mismatch", "FFT buffer length differs from plan");
    require(sign == 1 || sign == -1, "invalid-size", "FFT sign must be +1 or -1");
    const std::size_t n = n_;
    if (n == 1) return;

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = twiddle_[k * step];
                if (sign == 1) w = std::conj(w);
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + half] * w;
                data[i + k] = u + v;
                data[i + k + half] = u - v;
            }
        }
    }
}

} // namespace hml
