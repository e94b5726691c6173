#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maex {

/// Nodes and weights of a 1-d quadrature rule.
struct QuadRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree 2n-1.
/// Nodes are found by Newton iteration on P_n with the classical Chebyshev
/// initial guess; the rule is symmetric by construction.
inline QuadRule1D gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadRule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n and P_{n-1} by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

/// Gauss-Chebyshev rule of the second kind: integrates f(t)*sqrt(1-t^2) on
/// [-1, 1] exactly for polynomial f of degree 2n-1. Closed-form nodes/weights.
inline QuadRule1D chebyshev_second_kind(int n) {
    if (n < 1)
        throw std::invalid_argument("chebyshev_second_kind: order must be >= 1");
    QuadRule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double phi = M_PI * (i + 1.0) / (n + 1.0);
        rule.nodes[i] = std::cos(phi);
        rule.weights[i] = M_PI / (n + 1.0) * std::sin(phi) * std::sin(phi);
    }
    return rule;
}

/// Affine map of a rule from [-1, 1] to [a, b].
inline QuadRule1D mapped_to(const QuadRule1D& rule, double a, double b) {
    QuadRule1D out = rule;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (std::size_t i = 0; i < out.nodes.size(); ++i) {
        out.nodes[i] = mid + half * rule.nodes[i];
        out.weights[i] = half * rule.weights[i];
    }
    return out;
}

}  // namespace maex
