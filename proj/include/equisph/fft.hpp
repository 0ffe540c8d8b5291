#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace equisph::detail {

// Unnormalized DFT: out[k] = sum_j in[j] * exp(-2*pi*i*j*k/n), inverse flips
// the sign and leaves the 1/n scaling to the caller. Radix-2 when n is a
// power of two, O(n^2) with cached twiddles otherwise; grid sizes here never
// exceed a few hundred.
void dft(std::complex<double>* data, std::size_t n, bool inverse);

void dft(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace equisph::detail
