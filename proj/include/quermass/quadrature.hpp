#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quermass {

// Small fixed-capacity vectors/matrices: quadrature-backed bodies live in
// dimension <= 3 and projections come from ambient dimension <= 4, so nothing
// here touches the heap.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

// Gauss-Legendre nodes/weights on [-1, 1] via Newton iteration on the
// three-term recurrence; accurate to machine precision for the orders used.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need order >= 1");
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
            }
            double dp = n * (t * p0 - p1) / (t * t - 1.0);
            double dt = p0 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        // recompute derivative at the converged node
        p0 = 1.0;
        p1 = 0.0;
        for (int k = 0; k < n; ++k) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
        }
        double dp = n * (t * p0 - p1) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return {x, w};
}

// Nodes and positive weights on the unit circle or sphere, summing to the
// full sphere area. 2D uses the uniform angular rule (exact for trig
// polynomials of degree < node count); 3D is Gauss-Legendre in the polar
// cosine times a uniform azimuthal rule, with no node at either pole.
struct QuadratureGrid {
    int dim = 0;
    int resolution = 0;  // 2D: node count, 3D: Gauss-Legendre order
    std::vector<Vec> nodes;
    std::vector<double> weights;

    static QuadratureGrid circle(int n_nodes) {
        if (n_nodes < 4) throw std::invalid_argument("QuadratureGrid: need >= 4 circle nodes");
        QuadratureGrid g;
        g.dim = 2;
        g.resolution = n_nodes;
        g.nodes.reserve(n_nodes);
        g.weights.assign(n_nodes, 2.0 * std::numbers::pi / n_nodes);
        for (int k = 0; k < n_nodes; ++k) {
            double th = 2.0 * std::numbers::pi * k / n_nodes;
            Vec u(2);
            u << std::cos(th), std::sin(th);
            g.nodes.push_back(u);
        }
        return g;
    }

    static QuadratureGrid sphere(int gl_order) {
        if (gl_order < 2) throw std::invalid_argument("QuadratureGrid: need GL order >= 2");
        QuadratureGrid g;
        g.dim = 3;
        g.resolution = gl_order;
        const int n_az = 2 * gl_order;
        auto [t, wt] = gauss_legendre(gl_order);
        const double waz = 2.0 * std::numbers::pi / n_az;
        g.nodes.reserve(static_cast<size_t>(gl_order) * n_az);
        g.weights.reserve(static_cast<size_t>(gl_order) * n_az);
        for (int i = 0; i < gl_order; ++i) {
            double ct = t[i];
            double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < n_az; ++j) {
                double ps = 2.0 * std::numbers::pi * (j + 0.5) / n_az;
                Vec u(3);
                u << st * std::cos(ps), st * std::sin(ps), ct;
                g.nodes.push_back(u);
                g.weights.push_back(wt[i] * waz);
            }
        }
        return g;
    }

    static QuadratureGrid with_resolution(int dim, int res) {
        if (dim == 2) return circle(res);
        if (dim == 3) return sphere(res);
        throw std::invalid_argument("QuadratureGrid: quadrature covers dim 2 and 3 only");
    }

    // Defaults are exact (to round-off) for every analytic family shipped.
    static const QuadratureGrid& standard(int dim) {
        static const QuadratureGrid g2 = circle(256);
        static const QuadratureGrid g3 = sphere(48);
        if (dim == 2) return g2;
        if (dim == 3) return g3;
        throw std::invalid_argument("QuadratureGrid: quadrature covers dim 2 and 3 only");
    }

    double weight_sum() const {
        double s = 0;
        for (double w : weights) s += w;
        return s;
    }
};

}  // namespace quermass
