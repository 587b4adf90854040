#ifndef LAGSPHERE_QUADRATURE_HPP
#define LAGSPHERE_QUADRATURE_HPP

/// Product quadrature on the sphere chart (theta, x): Gauss-Legendre in
/// x on (-1,1) and trapezoid (uniform, periodic) in theta on [0, 2pi).

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lagsphere {

struct QuadratureGrid {
    int n_x = 0;
    int n_theta = 0;
    std::vector<double> x;   // Gauss-Legendre nodes, ascending, interior to (-1,1)
    std::vector<double> wx;  // matching weights, sum = 2

    double theta(int i) const { return 2.0 * M_PI * i / n_theta; }
    double theta_weight() const { return 2.0 * M_PI / n_theta; }
    int nodes() const { return n_x * n_theta; }

    static QuadratureGrid make(int n_x, int n_theta);

    QuadratureGrid halved() const { return make(std::max(4, n_x / 2), std::max(4, n_theta / 2)); }
    QuadratureGrid doubled() const { return make(2 * n_x, 2 * n_theta); }
};

/// Gauss-Legendre nodes/weights on (-1,1) by Newton iteration on P_n.
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace lagsphere

#endif
