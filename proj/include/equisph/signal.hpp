#pragma once

#include <complex>
#include <vector>

#include "equisph/grid.hpp"

namespace equisph {

using cplx = std::complex<double>;

/// Multi-channel samples on the 2b x 2b equiangular grid, theta-major.
/// Real-valued signals keep the flag so transforms can take the symmetric
/// fast path; their imaginary parts are zero by construction.
class SphericalSignal {
  public:
    SphericalSignal(Bandwidth b, int channels, bool real = true);

    Bandwidth bandwidth() const { return b_; }
    int channels() const { return static_cast<int>(data_.size()); }
    int size() const { return b_.grid_size(); }
    bool is_real() const { return real_; }
    void mark_complex() { real_ = false; }

    cplx& at(int channel, int j, int k) { return data_[channel][j * size() + k]; }
    const cplx& at(int channel, int j, int k) const { return data_[channel][j * size() + k]; }
    std::vector<cplx>& channel(int c) { return data_[c]; }
    const std::vector<cplx>& channel(int c) const { return data_[c]; }

  private:
    Bandwidth b_;
    bool real_;
    std::vector<std::vector<cplx>> data_;
};

/// Triangular table of coefficients f^ell_m, 0 <= ell < b, |m| <= ell,
/// b^2 entries per channel, flat index ell^2 + ell + m. The spin tag is 0
/// for scalar spectra; spin-weighted tables keep entries zero for ell < |s|.
class Spectrum {
  public:
    Spectrum(Bandwidth b, int channels = 1, int spin = 0);

    static std::size_t index(int ell, int m) {
        return static_cast<std::size_t>(ell) * ell + ell + m;
    }

    Bandwidth bandwidth() const { return b_; }
    int channels() const { return static_cast<int>(coeffs_.size()); }
    int spin() const { return spin_; }

    cplx& at(int channel, int ell, int m);
    const cplx& at(int channel, int ell, int m) const;
    std::vector<cplx>& channel(int c) { return coeffs_[c]; }
    const std::vector<cplx>& channel(int c) const { return coeffs_[c]; }

    /// Copy into a larger bandwidth (zero pad) or smaller one (truncate).
    Spectrum resized(Bandwidth b_out) const;

    double squared_norm() const;

  private:
    Bandwidth b_;
    int spin_;
    std::vector<std::vector<cplx>> coeffs_;
};

}  // namespace equisph
