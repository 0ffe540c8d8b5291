#include "equisph/grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace equisph {

namespace {

// Gaussian elimination with partial pivoting; a is n x n row-major and is
// destroyed. Systems here are at most (2b) x (2b).
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> rhs, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(a[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a[r * n + col]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) throw std::runtime_error("quadrature system is singular");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            std::swap(rhs[pivot], rhs[col]);
        }
        double d = a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            double factor = a[r * n + col] / d;
            if (factor == 0.0) continue;
            for (int c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double acc = rhs[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r * n + c] * x[c];
        x[r] = acc / a[r * n + r];
    }
    return x;
}

}  // namespace

Bandwidth::Bandwidth(int b) : b_(b) {
    if (b < 1) throw std::invalid_argument("bandwidth must be >= 1");
}

GridSpec make_grid(Bandwidth b) {
    const int n = b.grid_size();
    GridSpec g{b, {}, {}};
    g.thetas.resize(n);
    g.phis.resize(n);
    for (int j = 0; j < n; ++j) g.thetas[j] = std::numbers::pi * j / n;
    for (int k = 0; k < n; ++k) g.phis[k] = std::numbers::pi * k / b.value();
    return g;
}

const QuadratureWeights& quadrature_weights(Bandwidth b) {
    static std::mutex mtx;
    static std::map<int, QuadratureWeights> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(b.value());
    if (it != cache.end()) return it->second;

    // Exactness system: sum_j a_j P_t(cos theta_j) must reproduce
    // sqrt(2*pi) * integral_0^pi P_t(cos theta) sin theta dtheta for all
    // t < 2b, i.e. 2*sqrt(2*pi) for t = 0 and 0 otherwise. The sqrt(2*pi)
    // scale pairs with the sqrt(2*pi)/(2b) transform prefactor so that a
    // constant signal c maps to f^0_0 = c*sqrt(4*pi).
    const int n = b.grid_size();
    const GridSpec grid = make_grid(b);
    std::vector<double> mat(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
        const double x = std::cos(grid.thetas[j]);
        double pm2 = 1.0, pm1 = x;
        mat[0 * n + j] = 1.0;
        if (n > 1) mat[1 * n + j] = x;
        for (int t = 2; t < n; ++t) {
            double p = ((2 * t - 1) * x * pm1 - (t - 1) * pm2) / t;
            mat[t * n + j] = p;
            pm2 = pm1;
            pm1 = p;
        }
    }
    std::vector<double> rhs(n, 0.0);
    rhs[0] = 2.0 * std::sqrt(2.0 * std::numbers::pi);

    QuadratureWeights w{b, solve_dense(std::move(mat), std::move(rhs), n)};
    return cache.emplace(b.value(), std::move(w)).first->second;
}

}  // namespace equisph
