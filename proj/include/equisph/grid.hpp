#pragma once

#include <vector>

namespace equisph {

/// Bandwidth b: coefficients run over degrees 0 <= ell < b and the
/// equiangular grid has 2b samples per axis.
class Bandwidth {
  public:
    explicit Bandwidth(int b);
    int value() const { return b_; }
    int grid_size() const { return 2 * b_; }
    friend bool operator==(Bandwidth lhs, Bandwidth rhs) { return lhs.b_ == rhs.b_; }
    friend bool operator!=(Bandwidth lhs, Bandwidth rhs) { return lhs.b_ != rhs.b_; }

  private:
    int b_;
};

/// Equiangular grid: theta_j = pi*j/(2b), phi_k = pi*k/b, 0 <= j,k < 2b.
struct GridSpec {
    Bandwidth b;
    std::vector<double> thetas;
    std::vector<double> phis;
};

GridSpec make_grid(Bandwidth b);

/// Per-ring weights a_j that make the discrete spherical Fourier transform
/// with prefactor sqrt(2*pi)/(2b) exact on all harmonics of degree < b.
struct QuadratureWeights {
    Bandwidth b;
    std::vector<double> a;
};

/// Computed once per bandwidth by solving the exactness system against
/// Legendre polynomials up to degree 2b-1, then cached.
const QuadratureWeights& quadrature_weights(Bandwidth b);

}  // namespace equisph
