#pragma once

#include <stdexcept>
#include <vector>

#include "quermass/exact.hpp"
#include "quermass/formulas.hpp"
#include "quermass/numeric.hpp"
#include "quermass/quadrature.hpp"
#include "quermass/rng.hpp"
#include "quermass/support_body.hpp"

namespace quermass {

// Quadrature-backed quantities of support bodies, all in the Gauss-map
// parametrization: with s_j the C(dim-1,j)-normalized elementary symmetric
// function of the curvature radii,
//   M_i      = integral of s_{dim-1-i} over the unit sphere
//   volume   = (1/dim) integral of h * (product of radii)
// One-dimensional bodies (segments) use the counting-measure conventions:
// M_0 = 2 and volume = length.

namespace detail {

struct NodeData {
    double h;
    double sym1;  // s_1(radii): mean of the radii
    double symP;  // product of the radii
};

inline NodeData node_data(const SupportBody& body, const Vec& u) {
    SupportBody::Eval e = body.eval(u);
    Mat t = tangent_basis(u);
    Mat a = t.transpose() * e.hess * t;
    NodeData nd;
    nd.h = e.h;
    if (body.dim() == 2) {
        double r = a(0, 0);
        if (r <= 0) throw std::domain_error("loss of convexity during quadrature");
        nd.sym1 = r;
        nd.symP = r;
    } else {
        double tr = a(0, 0) + a(1, 1);
        double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        if (tr <= 0 || det <= 0) throw std::domain_error("loss of convexity during quadrature");
        nd.sym1 = tr / 2;
        nd.symP = det;
    }
    return nd;
}

}  // namespace detail

inline double mean_curvature_integral(const SupportBody& body, int i, const QuadratureGrid& grid) {
    const int d = body.dim();
    if (d == 1) {
        if (i != 0) throw std::domain_error("mean_curvature_integral: segment has only M_0");
        return 2.0;
    }
    if (d < 2 || d > 3)
        throw std::domain_error("mean_curvature_integral: quadrature covers dim 2 and 3");
    if (i < 0 || i > d - 1)
        throw std::domain_error("mean_curvature_integral: need 0 <= i <= dim-1");
    if (grid.dim != d) throw std::invalid_argument("mean_curvature_integral: grid dim mismatch");
    NeumaierSum acc;
    const int j = d - 1 - i;  // s_j is integrated
    for (size_t k = 0; k < grid.nodes.size(); ++k) {
        double v;
        if (j == 0) {
            v = 1.0;
        } else {
            auto nd = detail::node_data(body, grid.nodes[k]);
            v = (j == 1) ? nd.sym1 : nd.symP;
        }
        acc.add(grid.weights[k] * v);
    }
    return acc.value();
}

inline double mean_curvature_integral(const SupportBody& body, int i) {
    if (body.dim() == 1) return mean_curvature_integral(body, i, QuadratureGrid{});
    return mean_curvature_integral(body, i, QuadratureGrid::standard(body.dim()));
}

inline double volume(const SupportBody& body, const QuadratureGrid& grid) {
    const int d = body.dim();
    if (d == 1) {
        Vec plus(1), minus(1);
        plus << 1.0;
        minus << -1.0;
        return body.support(plus) + body.support(minus);
    }
    if (d < 2 || d > 3) throw std::domain_error("volume: quadrature covers dim 2 and 3");
    if (grid.dim != d) throw std::invalid_argument("volume: grid dim mismatch");
    NeumaierSum acc;
    for (size_t k = 0; k < grid.nodes.size(); ++k) {
        auto nd = detail::node_data(body, grid.nodes[k]);
        acc.add(grid.weights[k] * nd.h * nd.symP);
    }
    return acc.value() / d;
}

inline double volume(const SupportBody& body) {
    if (body.dim() == 1) return volume(body, QuadratureGrid{});
    return volume(body, QuadratureGrid::standard(body.dim()));
}

// W_i of the body: W_0 is the volume, W_i = M_{i-1}/n for 1 <= i <= n-1 and
// W_n = O_{n-1}/n.
inline double quermass_value(const SupportBody& body, int i, const QuadratureGrid& grid) {
    const int n = body.dim();
    if (i < 0 || i > n) throw std::domain_error("quermass_value: need 0 <= i <= dim");
    if (i == 0) return volume(body, grid);
    if (i == n) return sphere_area(n - 1).to_double() / n;
    return mean_curvature_integral(body, i - 1, grid) / n;
}

inline double quermass_value(const SupportBody& body, int i) {
    const int n = body.dim();
    if (i == n && n >= 1) return sphere_area(n - 1).to_double() / n;
    if (body.dim() == 1) return quermass_value(body, i, QuadratureGrid{});
    return quermass_value(body, i, QuadratureGrid::standard(body.dim()));
}

inline bool is_constant_width(const SupportBody& body, double tol) {
    const int d = body.dim();
    if (d == 1) return true;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -mn;
    auto probe = [&](const Vec& u) {
        double w = body.width(u);
        mn = std::min(mn, w);
        mx = std::max(mx, w);
    };
    if (d == 2) {
        const int n = 512;
        for (int k = 0; k < n; ++k) {
            double th = std::numbers::pi * k / n;  // widths repeat under u -> -u
            Vec u(2);
            u << std::cos(th), std::sin(th);
            probe(u);
        }
    } else if (d == 3) {
        const int nt = 48, np = 96;
        for (int i = 0; i < nt; ++i) {
            double ct = -1.0 + 2.0 * (i + 0.5) / nt;
            double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < np; ++j) {
                double ps = 2.0 * std::numbers::pi * (j + 0.5) / np;
                Vec u(3);
                u << st * std::cos(ps), st * std::sin(ps), ct;
                probe(u);
            }
        }
    } else {
        throw std::domain_error("is_constant_width: dim must be 1..3");
    }
    return mx - mn <= tol;
}

inline SupportBody project(const SupportBody& body, const SubspaceFrame& frame) {
    return SupportBody::projected(body, frame);
}

// M^(n)_q of an r-dimensional projection regarded as a flattened body of
// n-space: the flattened-body rewrite evaluated with quadrature values of the
// projection. Flattened bodies are never quadratured directly in n-space
// (their parallel bodies are only C^{1,1} across the edge), so this is the
// one route to their integrals.
inline double flattened_mci(int n, const SupportBody& proj, int q, const QuadratureGrid& grid) {
    const int r = proj.dim();
    if (r < 1 || r > n - 1) throw std::domain_error("flattened_mci: need proj dim in 1..n-1");
    FormulaPoly poly = formulas::santalo_project(n, r, q);
    std::map<Atom, double> bindings;
    for (const Atom& a : poly.atoms()) {
        if (a.kind() == AtomKind::MciProj)
            bindings[a] = (r == 1) ? mean_curvature_integral(proj, a.index())
                                   : mean_curvature_integral(proj, a.index(), grid);
        else if (a.kind() == AtomKind::VolProj)
            bindings[a] = (r == 1) ? volume(proj) : volume(proj, grid);
    }
    return poly.eval(bindings);
}

inline double flattened_mci(int n, const SupportBody& proj, int q) {
    const QuadratureGrid& g =
        proj.dim() == 1 ? QuadratureGrid{} : QuadratureGrid::standard(proj.dim());
    return flattened_mci(n, proj, q, g);
}

// Trusted reference for M^(n)_l of the outer parallel body (in n-space, at
// distance rho) of a flattened projection: the Steiner expansion over the
// flattened quermassintegrals, with W_0 = 0 for a flattened body.
inline double parallel_flattened_mci_oracle(int n, const SupportBody& proj, double rho, int l,
                                            const QuadratureGrid& grid) {
    if (l < 0 || l > n - 1)
        throw std::domain_error("parallel_flattened_mci_oracle: need 0 <= l <= n-1");
    if (rho < 0) throw std::domain_error("parallel_flattened_mci_oracle: need rho >= 0");
    auto w_flat = [&](int s) -> double {
        if (s == 0) return 0.0;
        return flattened_mci(n, proj, s - 1, grid) / n;
    };
    NeumaierSum acc;
    double rho_pow = 1.0;
    for (int j = 0; j <= n - l - 1; ++j) {
        acc.add(rational_to_double(binomial(n - l - 1, j)) * w_flat(l + 1 + j) * rho_pow);
        rho_pow *= rho;
    }
    return n * acc.value();
}

inline double parallel_flattened_mci_oracle(int n, const SupportBody& proj, double rho, int l) {
    const QuadratureGrid& g =
        proj.dim() == 1 ? QuadratureGrid{} : QuadratureGrid::standard(proj.dim());
    return parallel_flattened_mci_oracle(n, proj, rho, l, g);
}

// Monte Carlo volume via the membership test x in K iff
// max_u (<x,u> - h(u)) <= 0 over the grid directions: an oracle for the
// oracle, good to ~1e-2 relative at modest sample counts.
inline double mc_volume_estimate(const SupportBody& body, uint64_t samples, uint64_t seed) {
    const int d = body.dim();
    if (d < 2 || d > 3) throw std::domain_error("mc_volume_estimate: dim must be 2 or 3");
    const QuadratureGrid& grid = QuadratureGrid::standard(d);
    // bounding radius: max support over the grid
    double rmax = 0;
    std::vector<double> hs(grid.nodes.size());
    for (size_t k = 0; k < grid.nodes.size(); ++k) {
        hs[k] = body.support(grid.nodes[k]);
        rmax = std::max(rmax, hs[k]);
    }
    rmax *= 1.0 + 1e-12;
    uint64_t inside = 0;
    for (uint64_t i = 0; i < samples; ++i) {
        Vec x(d);
        for (int c = 0; c < d; ++c)
            x[c] = rmax * (2.0 * rng::uniform(seed, 17, i * d + c) - 1.0);
        bool in = true;
        for (size_t k = 0; k < grid.nodes.size() && in; ++k)
            if (x.dot(grid.nodes[k]) > hs[k]) in = false;
        inside += in;
    }
    double box = std::pow(2 * rmax, d);
    return box * static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace quermass
