#include "equisph/signal.hpp"

#include <cstdlib>
#include <stdexcept>

namespace equisph {

SphericalSignal::SphericalSignal(Bandwidth b, int channels, bool real) : b_(b), real_(real) {
    if (channels < 1) throw std::invalid_argument("SphericalSignal: channels must be >= 1");
    const std::size_t n = static_cast<std::size_t>(size()) * size();
    data_.assign(channels, std::vector<cplx>(n, cplx{0.0, 0.0}));
}

Spectrum::Spectrum(Bandwidth b, int channels, int spin) : b_(b), spin_(spin) {
    if (channels < 1) throw std::invalid_argument("Spectrum: channels must be >= 1");
    if (std::abs(spin) >= b.value())
        throw std::invalid_argument("Spectrum: |spin| must be < bandwidth");
    const std::size_t n = static_cast<std::size_t>(b.value()) * b.value();
    coeffs_.assign(channels, std::vector<cplx>(n, cplx{0.0, 0.0}));
}

cplx& Spectrum::at(int channel, int ell, int m) {
    if (ell < 0 || ell >= b_.value() || std::abs(m) > ell)
        throw std::out_of_range("Spectrum::at: index out of bounds");
    return coeffs_[channel][index(ell, m)];
}

const cplx& Spectrum::at(int channel, int ell, int m) const {
    if (ell < 0 || ell >= b_.value() || std::abs(m) > ell)
        throw std::out_of_range("Spectrum::at: index out of bounds");
    return coeffs_[channel][index(ell, m)];
}

Spectrum Spectrum::resized(Bandwidth b_out) const {
    Spectrum out(b_out, channels(), spin_);
    const int keep = std::min(b_.value(), b_out.value());
    for (int c = 0; c < channels(); ++c)
        for (int ell = 0; ell < keep; ++ell)
            for (int m = -ell; m <= ell; ++m) out.at(c, ell, m) = at(c, ell, m);
    return out;
}

double Spectrum::squared_norm() const {
    double s = 0.0;
    for (const auto& chan : coeffs_)
        for (const auto& z : chan) s += std::norm(z);
    return s;
}

}  // namespace equisph
