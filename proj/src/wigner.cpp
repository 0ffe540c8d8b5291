#include "equisph/wigner.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace equisph {

namespace {

// Seed of the degree recurrence: ell0 = max(|m|,|n|), where the Jacobi
// factor degenerates to a monomial,
//   d^ell0_{m,n}(beta) = xi sqrt(binom(mu+nu, mu)) sin(beta/2)^mu cos(beta/2)^nu
// with mu = |m-n|, nu = |m+n| and xi = (-1)^{m-n} when n < m, else 1.
double d_seed(int m, int n, double beta) {
    const int mu = std::abs(m - n);
    const int nu = std::abs(m + n);
    const double xi = (n >= m) ? 1.0 : ((m - n) % 2 == 0 ? 1.0 : -1.0);
    const double logbinom =
        0.5 * (std::lgamma(mu + nu + 1.0) - std::lgamma(mu + 1.0) - std::lgamma(nu + 1.0));
    const double sh = std::sin(beta / 2.0), ch = std::cos(beta / 2.0);
    double v = xi * std::exp(logbinom);
    for (int i = 0; i < mu; ++i) v *= sh;
    for (int i = 0; i < nu; ++i) v *= ch;
    return v;
}

// Three-term recurrence in the degree at fixed (m, n):
//   d^{l+1} = ((2l+1)(l(l+1)x - mn) d^l - (l+1) sqrt(l^2-m^2) sqrt(l^2-n^2) d^{l-1})
//             / (l sqrt((l+1)^2-m^2) sqrt((l+1)^2-n^2))
// Seeded at ell0 where the d^{l-1} coefficient vanishes. Stable well past
// the ell ~ 128 degrees used here; the factorial closed form is never used
// above the seed.
struct DRecurrence {
    int m, n, ell;
    double x;  // cos(beta)
    double cur, prev;

    DRecurrence(int m_, int n_, double beta) : m(m_), n(n_), ell(std::max(std::abs(m_), std::abs(n_))) {
        x = std::cos(beta);
        cur = d_seed(m, n, beta);
        prev = 0.0;
    }

    double value() const { return cur; }

    void advance() {
        const double l = ell;
        double next;
        if (ell == 0) {
            next = x;  // d^1_{0,0}
        } else {
            const double c0 = (2 * l + 1) * (l * (l + 1) * x - m * n);
            const double c1 = (l + 1) * std::sqrt((l * l - m * m) * (l * l - n * n));
            const double c2 =
                l * std::sqrt(((l + 1) * (l + 1) - m * m) * ((l + 1) * (l + 1) - n * n));
            next = (c0 * cur - c1 * prev) / c2;
        }
        prev = cur;
        cur = next;
        ++ell;
    }
};

}  // namespace

namespace detail {

double legendre_normalized(int ell, int m, double x) {
    if (m < 0 || m > ell) throw std::invalid_argument("legendre_normalized: need 0 <= m <= ell");
    if (std::abs(x) > 1.0) throw std::invalid_argument("legendre_normalized: |x| > 1");
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    double pmm = std::sqrt(1.0 / (4.0 * std::numbers::pi));
    for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
    if (ell == m) return pmm;
    double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
    if (ell == m + 1) return pm1;
    double pm2 = pmm;
    for (int l = m + 2; l <= ell; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - m * m));
        const double bcoef =
            std::sqrt((static_cast<double>(l - 1) * (l - 1) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        const double p = a * (x * pm1 - bcoef * pm2);
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

}  // namespace detail

double legendre_assoc(int ell, int m, double x) {
    if (m < 0 || m > ell) throw std::invalid_argument("legendre_assoc: need 0 <= m <= ell");
    if (std::abs(x) > 1.0) throw std::invalid_argument("legendre_assoc: |x| > 1");
    // factorial ratio in log space
    const double scale = std::sqrt(4.0 * std::numbers::pi / (2.0 * ell + 1.0)) *
                         std::exp(0.5 * (std::lgamma(ell + m + 1.0) - std::lgamma(ell - m + 1.0)));
    return detail::legendre_normalized(ell, m, x) * scale;
}

cplx sph_harm(int ell, int m, double theta, double phi) {
    if (std::abs(m) > ell) throw std::invalid_argument("sph_harm: |m| > ell");
    const int am = std::abs(m);
    const double nl = detail::legendre_normalized(ell, am, std::cos(theta));
    cplx y = nl * std::exp(cplx{0.0, am * phi});
    if (m < 0) {
        y = std::conj(y);
        if (am % 2 != 0) y = -y;
    }
    return y;
}

std::vector<std::vector<double>> wigner_d_blocks(int b, double beta) {
    if (b < 1) throw std::invalid_argument("wigner_d_blocks: b < 1");
    std::vector<std::vector<double>> blocks(b);
    for (int ell = 0; ell < b; ++ell)
        blocks[ell].assign(static_cast<std::size_t>(2 * ell + 1) * (2 * ell + 1), 0.0);
    for (int m = -(b - 1); m <= b - 1; ++m) {
        for (int n = -(b - 1); n <= b - 1; ++n) {
            DRecurrence rec(m, n, beta);
            for (int ell = rec.ell; ell < b; ) {
                blocks[ell][(m + ell) * (2 * ell + 1) + (n + ell)] = rec.value();
                rec.advance();
                ell = rec.ell;
            }
        }
    }
    return blocks;
}

std::vector<double> little_d(int ell, double beta) {
    if (ell < 0) throw std::invalid_argument("little_d: ell < 0");
    const int side = 2 * ell + 1;
    std::vector<double> out(static_cast<std::size_t>(side) * side, 0.0);
    for (int m = -ell; m <= ell; ++m) {
        for (int n = -ell; n <= ell; ++n) {
            DRecurrence rec(m, n, beta);
            while (rec.ell < ell) rec.advance();
            out[(m + ell) * side + (n + ell)] = rec.value();
        }
    }
    return out;
}

std::vector<double> wigner_d_order_column(int b, int n, double beta) {
    if (std::abs(n) >= b) throw std::invalid_argument("wigner_d_order_column: |n| >= b");
    const int w = 2 * b - 1;
    std::vector<double> out(static_cast<std::size_t>(b) * w, 0.0);
    for (int m = -(b - 1); m <= b - 1; ++m) {
        DRecurrence rec(m, n, beta);
        for (int ell = rec.ell; ell < b; ) {
            out[static_cast<std::size_t>(ell) * w + (m + b - 1)] = rec.value();
            rec.advance();
            ell = rec.ell;
        }
    }
    return out;
}

WignerDBlock wigner_D(int ell, const RotationZYZ& g) {
    WignerDBlock blk{ell, {}};
    blk.entries.assign(static_cast<std::size_t>(2 * ell + 1) * (2 * ell + 1), cplx{0.0, 0.0});
    const std::vector<double> d = little_d(ell, g.beta());
    const int side = 2 * ell + 1;
    std::vector<cplx> ea(side), eg(side);
    for (int m = -ell; m <= ell; ++m) {
        ea[m + ell] = std::exp(cplx{0.0, -m * g.alpha()});
        eg[m + ell] = std::exp(cplx{0.0, -m * g.gamma()});
    }
    for (int m = -ell; m <= ell; ++m)
        for (int n = -ell; n <= ell; ++n)
            blk.entries[(m + ell) * side + (n + ell)] =
                ea[m + ell] * d[(m + ell) * side + (n + ell)] * eg[n + ell];
    return blk;
}

const DeltaBlock& delta_matrix(int ell) {
    if (ell < 0) throw std::invalid_argument("delta_matrix: ell < 0");
    static std::mutex mtx;
    static std::map<int, DeltaBlock> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    DeltaBlock blk{ell, little_d(ell, std::numbers::pi / 2.0)};
    return cache.emplace(ell, std::move(blk)).first->second;
}

cplx swsh(int s, int ell, int m, double theta, double phi) {
    if (std::abs(m) > ell) throw std::invalid_argument("swsh: |m| > ell");
    if (std::abs(s) > ell) throw std::domain_error("swsh: |s| > ell, harmonic undefined");
    DRecurrence rec(m, -s, theta);
    while (rec.ell < ell) rec.advance();
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    const double norm = std::sqrt((2.0 * ell + 1.0) / (4.0 * std::numbers::pi));
    return sign * norm * rec.value() * std::exp(cplx{0.0, m * phi});
}

Spectrum rotate_spectrum(const Spectrum& spec, const RotationZYZ& g) {
    const int b = spec.bandwidth().value();
    const auto blocks = wigner_d_blocks(b, g.beta());
    std::vector<cplx> ea(2 * b - 1), eg(2 * b - 1);
    for (int m = -(b - 1); m <= b - 1; ++m) {
        ea[m + b - 1] = std::exp(cplx{0.0, m * g.alpha()});   // conj of e^{-i m alpha}
        eg[m + b - 1] = std::exp(cplx{0.0, m * g.gamma()});
    }
    Spectrum out(spec.bandwidth(), spec.channels(), spec.spin());
    for (int c = 0; c < spec.channels(); ++c) {
        for (int ell = 0; ell < b; ++ell) {
            const int side = 2 * ell + 1;
            const auto& d = blocks[ell];
            std::vector<cplx> pre(side);
            for (int m = -ell; m <= ell; ++m)
                pre[m + ell] = ea[m + b - 1] * spec.at(c, ell, m);
            for (int n = -ell; n <= ell; ++n) {
                cplx acc{0.0, 0.0};
                for (int m = -ell; m <= ell; ++m)
                    acc += d[(m + ell) * side + (n + ell)] * pre[m + ell];
                out.at(c, ell, n) = eg[n + b - 1] * acc;
            }
        }
    }
    return out;
}

}  // namespace equisph
