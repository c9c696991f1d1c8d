#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quermass/exact.hpp"
#include "quermass/frame.hpp"
#include "quermass/geometry.hpp"
#include "quermass/numeric.hpp"
#include "quermass/parallel.hpp"
#include "quermass/report.hpp"
#include "quermass/rng.hpp"

namespace quermass {

// Monte Carlo over the Grassmannian: frames drawn from the rotation-invariant
// measure (r independent standard-normal n-vectors, orthonormalized). Sample
// i is a pure function of (seed, i), so estimates are bit-identical for any
// worker count and any run is replayable from (seed, samples) alone.

inline SubspaceFrame sample_subspace(int n, int r, uint64_t seed, uint64_t index = 0) {
    if (n < 2) throw std::domain_error("sample_subspace: need n >= 2");
    if (r < 1 || r > n - 1) throw std::domain_error("sample_subspace: need 1 <= r <= n-1");
    const uint64_t slots = (static_cast<uint64_t>(n) * r + 1) & ~1ull;  // Box-Muller pairs
    for (uint64_t attempt = 0; attempt < 100; ++attempt) {
        Eigen::MatrixXd m(n, r);
        for (int c = 0; c < r; ++c)
            for (int i = 0; i < n; ++i)
                m(i, c) = rng::normal(seed, index, attempt * slots +
                                                        static_cast<uint64_t>(c) * n + i);
        try {
            return SubspaceFrame::orthonormalized(std::move(m));
        } catch (const std::invalid_argument&) {
            // rank-deficient draw; redrawn with fresh slots
        }
    }
    throw std::runtime_error("sample_subspace: exceeded the retry cap of 100 degenerate draws");
}

struct McEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
};

namespace detail {

inline std::string frame_to_string(const SubspaceFrame& f) {
    std::ostringstream os;
    os.precision(17);
    os << f.basis().transpose();
    return os.str();
}

}  // namespace detail

// Plain expectation of fn over random r-planes (no measure scaling).
template <typename Fn>
McEstimate mc_frame_mean(Fn&& fn, int n, int r, uint64_t samples, uint64_t seed,
                         int workers = default_workers()) {
    if (samples < 2) throw std::invalid_argument("mc_frame_mean: need samples >= 2");
    std::vector<double> vals(samples);
    parallel_for(samples, workers, [&](size_t i) {
        SubspaceFrame f = sample_subspace(n, r, seed, i);
        double v = fn(f);
        if (!std::isfinite(v))
            throw std::runtime_error("mc_frame_mean: non-finite integrand at sample " +
                                     std::to_string(i) + ", frame rows:\n" +
                                     detail::frame_to_string(f));
        vals[i] = v;
    });
    NeumaierSum sum;
    for (double v : vals) sum.add(v);
    const double mean = sum.value() / static_cast<double>(samples);
    NeumaierSum var;
    for (double v : vals) var.add((v - mean) * (v - mean));
    const double sd = std::sqrt(var.value() / static_cast<double>(samples - 1));
    return {mean, sd / std::sqrt(static_cast<double>(samples)), samples, seed};
}

// Integral over the Grassmannian: m(G_{r,n-r}) times the sample mean, with
// the standard error scaled the same way.
template <typename Fn>
McEstimate mc_grassmann_integral(Fn&& fn, int n, int r, uint64_t samples, uint64_t seed,
                                 int workers = default_workers()) {
    McEstimate e = mc_frame_mean(fn, n, r, samples, seed, workers);
    const double scale = grassmann_measure(n, r).to_double();
    e.mean *= scale;
    e.standard_error *= scale;
    return e;
}

// Statistical verdicts use a 4-sigma band plus a small relative floor: several
// fixture integrands (ball projections, Barbier perimeters) are constant, so
// their standard error vanishes and a bare 4-sigma band would reject round-off.
inline constexpr double kStatRelFloor = 1e-9;

inline std::string stat_verdict(double lhs, double rhs, double se) {
    const double band = 4.0 * se + kStatRelFloor * std::max(std::abs(lhs), std::abs(rhs));
    return std::abs(lhs - rhs) <= band ? "pass" : "fail";
}

// Cauchy-Kubota cross-check: W_r(K) from the mean projected volume,
//   W_r(K) = (n-r) O_{n-1} / (n O_{n-r-1}) * E[V(K'_{n-r})],
// against W_r = M_{r-1}/n from curvature quadrature.
inline CheckReport kubota_check(const SupportBody& body, int r, uint64_t samples, uint64_t seed,
                                int workers = default_workers(), int proj_resolution = 32) {
    const int n = body.dim();
    if (n < 2 || n > 3) throw std::domain_error("kubota_check: body dim must be 2 or 3");
    if (r < 1 || r > n - 1) throw std::domain_error("kubota_check: need 1 <= r <= n-1");
    const int pd = n - r;  // projection dimension
    QuadratureGrid proj_grid;
    if (pd >= 2) proj_grid = QuadratureGrid::with_resolution(pd, proj_resolution);
    auto fn = [&](const SubspaceFrame& f) {
        SupportBody p = project(body, f);
        return pd == 1 ? volume(p) : volume(p, proj_grid);
    };
    McEstimate est = mc_frame_mean(fn, n, pd, samples, seed, workers);
    const double coef =
        (PiScalar(Rational(n - r)) * sphere_area(n - 1) /
         (PiScalar(Rational(n)) * sphere_area(n - r - 1)))
            .to_double();
    const double lhs = coef * est.mean;
    const double se = coef * est.standard_error;
    const double rhs = quermass_value(body, r);

    CheckReport rep;
    rep.check_id = "kubota";
    rep.config = {{"body", body.spec_string()},
                  {"n", std::to_string(n)},
                  {"r", std::to_string(r)},
                  {"samples", std::to_string(samples)},
                  {"seed", std::to_string(seed)}};
    rep.lhs = format_g17(lhs);
    rep.rhs = format_g17(rhs);
    rep.abs_error = std::abs(lhs - rhs);
    rep.rel_error = rep.abs_error / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    rep.standard_error = se;
    rep.verdict = stat_verdict(lhs, rhs, se);
    return rep;
}

}  // namespace quermass
