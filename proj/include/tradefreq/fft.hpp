#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tradefreq::detail {

// In-place iterative radix-2 transform. a.size() must be a power of two.
// Forward uses the e^{-2*pi*i*jk/n} kernel; inverse divides by n.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

std::size_t next_pow2(std::size_t n);

}  // namespace tradefreq::detail
