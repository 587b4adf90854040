#include "lagsphere/quadrature.hpp"

namespace lagsphere {

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    std::vector<std::pair<double, double>> nw(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[i] = {-x, w};
        nw[n - 1 - i] = {x, w};
    }
    if (n % 2 == 1) nw[n / 2].first = 0.0;
    return nw;
}

QuadratureGrid QuadratureGrid::make(int n_x, int n_theta) {
    if (n_x < 2 || n_theta < 2) throw std::invalid_argument("QuadratureGrid: grid too small");
    QuadratureGrid g;
    g.n_x = n_x;
    g.n_theta = n_theta;
    const auto nw = gauss_legendre(n_x);
    g.x.resize(n_x);
    g.wx.resize(n_x);
    for (int i = 0; i < n_x; ++i) {
        g.x[i] = nw[i].first;
        g.wx[i] = nw[i].second;
    }
    return g;
}

}  // namespace lagsphere
