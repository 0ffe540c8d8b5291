#pragma once

#include <complex>
#include <vector>

#include "equisph/rotation.hpp"
#include "equisph/signal.hpp"

namespace equisph {

/// Associated Legendre P^ell_m(x) with the Condon-Shortley sign, i.e.
/// P^1_1(0) = -1. Requires 0 <= m <= ell and |x| <= 1.
double legendre_assoc(int ell, int m, double x);

/// Orthonormal complex spherical harmonic Y^ell_m(theta, phi);
/// negative orders via Y^ell_{-m} = (-1)^m conj(Y^ell_m).
cplx sph_harm(int ell, int m, double theta, double phi);

/// Wigner little-d matrix d^ell(beta), (2ell+1)^2 row-major with both
/// indices ascending from -ell; entry (m, n) at (m+ell)*(2ell+1) + (n+ell).
std::vector<double> little_d(int ell, double beta);

/// All little-d blocks of degree < b at a fixed angle (an O(b^3) stack).
std::vector<std::vector<double>> wigner_d_blocks(int b, double beta);

/// d^ell_{m,n}(beta) for a fixed column n and every ell < b, |m| <= ell.
/// Flat layout ell*(2b-1) + (m+b-1); entries outside |m|,|n| <= ell are 0.
std::vector<double> wigner_d_order_column(int b, int n, double beta);

struct WignerDBlock {
    int ell;
    std::vector<cplx> entries;  // (2ell+1)^2 row-major, ascending m, n

    cplx& at(int m, int n) { return entries[(m + ell) * (2 * ell + 1) + (n + ell)]; }
    const cplx& at(int m, int n) const { return entries[(m + ell) * (2 * ell + 1) + (n + ell)]; }
};

/// D^ell_{m,n}(alpha,beta,gamma) = exp(-i(m*alpha + n*gamma)) d^ell_{m,n}(beta).
WignerDBlock wigner_D(int ell, const RotationZYZ& g);

struct DeltaBlock {
    int ell;
    std::vector<double> entries;  // little_d(ell, pi/2)

    double at(int m, int n) const { return entries[(m + ell) * (2 * ell + 1) + (n + ell)]; }
};

/// Cached d^ell(pi/2).
const DeltaBlock& delta_matrix(int ell);

/// Spin-weighted spherical harmonic
///   sY^ell_m(theta, phi) = (-1)^s sqrt((2ell+1)/(4pi)) d^ell_{m,-s}(theta) e^{i m phi};
/// s = 0 reduces to sph_harm. Requires |m| <= ell and |s| <= ell.
cplx swsh(int s, int ell, int m, double theta, double phi);

/// Spectrum of x -> f(g x): per degree, f^ell_n <- sum_m conj(D^ell_{m,n}(g)) f^ell_m.
/// Valid for any spin tag; degree norms are preserved.
Spectrum rotate_spectrum(const Spectrum& spec, const RotationZYZ& g);

namespace detail {
/// Fully normalized Legendre N^ell_m = sqrt((2ell+1)/(4pi) (ell-m)!/(ell+m)!) P^ell_m,
/// the theta part of sph_harm; m >= 0.
double legendre_normalized(int ell, int m, double x);
}  // namespace detail

}  // namespace equisph
