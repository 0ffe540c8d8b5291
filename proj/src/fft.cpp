#include "equisph/fft.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace equisph::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

const std::vector<std::complex<double>>& twiddles(std::size_t n) {
    static std::mutex mtx;
    static std::unordered_map<std::size_t, std::vector<std::complex<double>>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(n, std::move(w)).first->second;
}

void fft_pow2(std::complex<double>* a, std::size_t n, bool inverse) {
    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> t = w[k * step];
                if (inverse) t = std::conj(t);
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * t;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

void dft_generic(std::complex<double>* a, std::size_t n, bool inverse) {
    const auto& w = twiddles(n);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> t = w[(j * k) % n];
            if (inverse) t = std::conj(t);
            acc += a[j] * t;
        }
        out[k] = acc;
    }
    for (std::size_t k = 0; k < n; ++k) a[k] = out[k];
}

}  // namespace

void dft(std::complex<double>* data, std::size_t n, bool inverse) {
    if (n == 0) throw std::invalid_argument("dft: empty input");
    if (n == 1) return;
    if (is_pow2(n))
        fft_pow2(data, n, inverse);
    else
        dft_generic(data, n, inverse);
}

void dft(std::vector<std::complex<double>>& data, bool inverse) {
    dft(data.data(), data.size(), inverse);
}

}  // namespace equisph::detail
