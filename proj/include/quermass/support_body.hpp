#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quermass/frame.hpp"
#include "quermass/quadrature.hpp"

namespace quermass {

// One odd cosine/sine pair of the planar support function h(theta).
struct Harmonic2D {
    int degree = 3;
    double cos_coef = 0.0;
    double sin_coef = 0.0;
};

// One real degree-3 solid harmonic of the spatial support function; order is
// the usual m in -3..3 (negative orders are the sine-type harmonics).
struct Harmonic3D {
    int degree = 3;
    int order = 0;
    double coef = 0.0;
};

namespace detail {

// Value, gradient and Hessian of the real solid harmonics of degree 3.
inline void solid3(int order, const Vec& x, double& p, Vec& g, Mat& h) {
    const double X = x[0], Y = x[1], Z = x[2];
    g.setZero(3);
    h.setZero(3, 3);
    switch (order) {
        case 0:  // z(2z^2 - 3x^2 - 3y^2)
            p = Z * (2 * Z * Z - 3 * X * X - 3 * Y * Y);
            g << -6 * X * Z, -6 * Y * Z, 6 * Z * Z - 3 * X * X - 3 * Y * Y;
            h(0, 0) = -6 * Z; h(1, 1) = -6 * Z; h(2, 2) = 12 * Z;
            h(0, 2) = h(2, 0) = -6 * X;
            h(1, 2) = h(2, 1) = -6 * Y;
            break;
        case 1:  // x(4z^2 - x^2 - y^2)
            p = X * (4 * Z * Z - X * X - Y * Y);
            g << 4 * Z * Z - 3 * X * X - Y * Y, -2 * X * Y, 8 * X * Z;
            h(0, 0) = -6 * X; h(1, 1) = -2 * X; h(2, 2) = 8 * X;
            h(0, 1) = h(1, 0) = -2 * Y;
            h(0, 2) = h(2, 0) = 8 * Z;
            break;
        case -1:  // y(4z^2 - x^2 - y^2)
            p = Y * (4 * Z * Z - X * X - Y * Y);
            g << -2 * X * Y, 4 * Z * Z - X * X - 3 * Y * Y, 8 * Y * Z;
            h(0, 0) = -2 * Y; h(1, 1) = -6 * Y; h(2, 2) = 8 * Y;
            h(0, 1) = h(1, 0) = -2 * X;
            h(1, 2) = h(2, 1) = 8 * Z;
            break;
        case 2:  // z(x^2 - y^2)
            p = Z * (X * X - Y * Y);
            g << 2 * X * Z, -2 * Y * Z, X * X - Y * Y;
            h(0, 0) = 2 * Z; h(1, 1) = -2 * Z;
            h(0, 2) = h(2, 0) = 2 * X;
            h(1, 2) = h(2, 1) = -2 * Y;
            break;
        case -2:  // xyz
            p = X * Y * Z;
            g << Y * Z, X * Z, X * Y;
            h(0, 1) = h(1, 0) = Z;
            h(0, 2) = h(2, 0) = Y;
            h(1, 2) = h(2, 1) = X;
            break;
        case 3:  // x(x^2 - 3y^2)
            p = X * (X * X - 3 * Y * Y);
            g << 3 * X * X - 3 * Y * Y, -6 * X * Y, 0;
            h(0, 0) = 6 * X; h(1, 1) = -6 * X;
            h(0, 1) = h(1, 0) = -6 * Y;
            break;
        case -3:  // y(3x^2 - y^2)
            p = Y * (3 * X * X - Y * Y);
            g << 6 * X * Y, 3 * X * X - 3 * Y * Y, 0;
            h(0, 0) = 6 * Y; h(1, 1) = -6 * Y;
            h(0, 1) = h(1, 0) = 6 * X;
            break;
        default:
            throw std::invalid_argument("Harmonic3D: order must be in -3..3");
    }
}

}  // namespace detail

// Convex body given by an analytic support function on the unit sphere.
// eval() returns the value, gradient and Hessian of the degree-1 homogeneous
// support extension H(x) = |x| h(x/|x|) at a unit direction; the restriction
// of that Hessian to the tangent plane is the reverse Weingarten map, whose
// eigenvalues are the principal curvature radii.
//
// Families: balls (any dimension), constant-width odd-harmonic perturbations
// of a ball (2D: odd trigonometric terms, 3D: degree-3 real spherical
// harmonics), outer parallel bodies, and orthogonal projections onto a frame.
// Parallel bodies and projections of convex bodies are convex, so only the
// odd-harmonic families run the convexity certificate at construction.
class SupportBody {
public:
    struct Eval {
        double h = 0;
        Vec grad;
        Mat hess;
    };

    static SupportBody ball(double radius, int dim = 3) {
        if (radius <= 0) throw std::domain_error("ball: radius must be positive");
        if (dim < 1 || dim > 4) throw std::domain_error("ball: dim must be 1..4");
        return SupportBody(dim, BallF{radius});
    }

    static SupportBody odd_harmonic_2d(double halfwidth, std::vector<Harmonic2D> harmonics) {
        if (halfwidth <= 0) throw std::domain_error("odd_harmonic_2d: halfwidth must be positive");
        for (const auto& hm : harmonics)
            if (hm.degree < 3 || hm.degree % 2 == 0)
                throw std::invalid_argument("odd_harmonic_2d: degrees must be odd and >= 3");
        SupportBody b(2, Odd2F{halfwidth, std::move(harmonics)});
        b.certify_convexity(kOddHarmonicMargin);
        return b;
    }

    static SupportBody odd_harmonic_3d(double halfwidth, std::vector<Harmonic3D> harmonics) {
        if (halfwidth <= 0) throw std::domain_error("odd_harmonic_3d: halfwidth must be positive");
        for (const auto& hm : harmonics) {
            if (hm.degree != 3)
                throw std::invalid_argument("odd_harmonic_3d: only degree-3 harmonics supported");
            if (hm.order < -3 || hm.order > 3)
                throw std::invalid_argument("odd_harmonic_3d: order must be in -3..3");
        }
        SupportBody b(3, Odd3F{halfwidth, std::move(harmonics)});
        b.certify_convexity(kOddHarmonicMargin);
        return b;
    }

    static SupportBody parallel(const SupportBody& base, double rho) {
        if (rho < 0) throw std::domain_error("parallel: rho must be >= 0");
        return SupportBody(base.dim(),
                           ParallelF{std::make_shared<SupportBody>(base), rho});
    }

    static SupportBody projected(const SupportBody& base, const SubspaceFrame& frame) {
        if (frame.ambient_dim() != base.dim())
            throw std::invalid_argument("projected: frame ambient dim does not match the body");
        if (base.dim() > 4)
            throw std::invalid_argument("projected: ambient dim above 4 is not supported");
        if (frame.gram_error() > SubspaceFrame::kGramTol)
            throw std::invalid_argument("projected: frame is not orthonormal");
        Mat basis = frame.basis();
        return SupportBody(frame.rank(),
                           ProjectedF{std::make_shared<SupportBody>(base), std::move(basis)});
    }

    int dim() const { return dim_; }

    double support(const Vec& u) const {
        if (u.size() != dim_) throw std::invalid_argument("support: direction has wrong dimension");
        return support_impl(u);
    }

    double width(const Vec& u) const { return support(u) + support(Vec(-u)); }

    Eval eval(const Vec& u) const {
        if (u.size() != dim_) throw std::invalid_argument("eval: direction has wrong dimension");
        return eval_impl(u);
    }

    // Smallest eigenvalue of the reverse Weingarten map found on the
    // validation grid (cached from the construction-time certificate where it
    // ran; recomputable for any body).
    double min_radius_on_grid() const { return scan_min_radius(); }

    nlohmann::json to_json() const;
    static SupportBody from_json(const nlohmann::json& spec, int context_dim = 0);
    std::string spec_string() const { return to_json().dump(); }

private:
    struct BallF {
        double radius;
    };
    struct Odd2F {
        double halfwidth;
        std::vector<Harmonic2D> harmonics;
    };
    struct Odd3F {
        double halfwidth;
        std::vector<Harmonic3D> harmonics;
    };
    struct ParallelF {
        std::shared_ptr<const SupportBody> base;
        double rho;
    };
    struct ProjectedF {
        std::shared_ptr<const SupportBody> base;
        Mat basis;  // ambient_dim x rank, orthonormal columns
    };
    using Family = std::variant<BallF, Odd2F, Odd3F, ParallelF, ProjectedF>;

    static constexpr double kOddHarmonicMargin = 1e-6;

    SupportBody(int dim, Family f) : dim_(dim), family_(std::move(f)) {}

    double support_impl(const Vec& u) const {
        return std::visit(
            [&](const auto& f) -> double {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, BallF>) {
                    return f.radius;
                } else if constexpr (std::is_same_v<T, Odd2F>) {
                    double th = std::atan2(u[1], u[0]);
                    double h = f.halfwidth;
                    for (const auto& hm : f.harmonics)
                        h += hm.cos_coef * std::cos(hm.degree * th) +
                             hm.sin_coef * std::sin(hm.degree * th);
                    return h;
                } else if constexpr (std::is_same_v<T, Odd3F>) {
                    double h = f.halfwidth;
                    double p;
                    Vec g;
                    Mat hs;
                    for (const auto& hm : f.harmonics) {
                        detail::solid3(hm.order, u, p, g, hs);
                        h += hm.coef * p;
                    }
                    return h;
                } else if constexpr (std::is_same_v<T, ParallelF>) {
                    return f.base->support_impl(u) + f.rho;
                } else {
                    Vec x = f.basis * u;
                    return f.base->support_impl(x);
                }
            },
            family_);
    }

    Eval eval_impl(const Vec& u) const {
        return std::visit(
            [&](const auto& f) -> Eval {
                using T = std::decay_t<decltype(f)>;
                Eval e;
                if constexpr (std::is_same_v<T, BallF>) {
                    e.h = f.radius;
                    e.grad = f.radius * u;
                    e.hess = f.radius * (Mat::Identity(dim_, dim_) - u * u.transpose());
                } else if constexpr (std::is_same_v<T, Odd2F>) {
                    double th = std::atan2(u[1], u[0]);
                    double h = f.halfwidth, dh = 0, ddh = 0;
                    for (const auto& hm : f.harmonics) {
                        double c = std::cos(hm.degree * th), s = std::sin(hm.degree * th);
                        h += hm.cos_coef * c + hm.sin_coef * s;
                        dh += hm.degree * (-hm.cos_coef * s + hm.sin_coef * c);
                        ddh -= hm.degree * hm.degree * (hm.cos_coef * c + hm.sin_coef * s);
                    }
                    Vec et(2);
                    et << -u[1], u[0];
                    e.h = h;
                    e.grad = h * u + dh * et;
                    e.hess = (h + ddh) * (et * et.transpose());
                } else if constexpr (std::is_same_v<T, Odd3F>) {
                    // H = a0 |x| + |x|^{-2} P(x) with P homogeneous of degree 3;
                    // at |x| = 1:
                    //   grad H = a0 u - 2 P u + grad P
                    //   hess H = a0 (I - uu^T) + 6 P uu^T - 2 P (I - uu^T)
                    //            - 2 (u gradP^T + gradP u^T) + hess P
                    double p_total = 0;
                    Vec g_total = Vec::Zero(3);
                    Mat h_total = Mat::Zero(3, 3);
                    double p;
                    Vec g;
                    Mat hs;
                    for (const auto& hm : f.harmonics) {
                        detail::solid3(hm.order, u, p, g, hs);
                        p_total += hm.coef * p;
                        g_total += hm.coef * g;
                        h_total += hm.coef * hs;
                    }
                    Mat id = Mat::Identity(3, 3);
                    Mat uu = u * u.transpose();
                    e.h = f.halfwidth + p_total;
                    e.grad = f.halfwidth * u - 2 * p_total * u + g_total;
                    e.hess = f.halfwidth * (id - uu) + 6 * p_total * uu - 2 * p_total * (id - uu) -
                             2 * (u * g_total.transpose() + g_total * u.transpose()) + h_total;
                } else if constexpr (std::is_same_v<T, ParallelF>) {
                    e = f.base->eval_impl(u);
                    e.h += f.rho;
                    e.grad += f.rho * u;
                    e.hess += f.rho * (Mat::Identity(dim_, dim_) - u * u.transpose());
                } else {
                    Vec x = f.basis * u;
                    Eval be = f.base->eval_impl(x);
                    e.h = be.h;
                    e.grad = f.basis.transpose() * be.grad;
                    e.hess = f.basis.transpose() * be.hess * f.basis;
                }
                return e;
            },
            family_);
    }

    double scan_min_radius(Vec* where = nullptr) const;
    void certify_convexity(double margin) const {
        if (dim_ < 2) return;
        Vec worst;
        double mn = scan_min_radius(&worst);
        if (mn < margin) {
            std::string dir = "(";
            for (int k = 0; k < worst.size(); ++k)
                dir += (k ? ", " : "") + std::to_string(worst[k]);
            throw std::domain_error("convexity certificate failed at direction " + dir +
                                    "): min curvature radius " + std::to_string(mn) +
                                    " below margin " + std::to_string(margin));
        }
    }

    int dim_;
    Family family_;

    friend Mat reverse_weingarten(const SupportBody&, const Vec&);
};

// Orthonormal basis of the tangent space at a unit direction.
inline Mat tangent_basis(const Vec& u) {
    const int d = static_cast<int>(u.size());
    Mat t(d, d - 1);
    if (d == 2) {
        t(0, 0) = -u[1];
        t(1, 0) = u[0];
        return t;
    }
    if (d == 3) {
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(u[i]) < std::abs(u[k])) k = i;
        Vec v = Vec::Zero(3);
        v[k] = 1.0;
        v -= v.dot(u) * u;
        v /= v.norm();
        Vec w(3);
        w << u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0];
        t.col(0) = v;
        t.col(1) = w;
        return t;
    }
    throw std::invalid_argument("tangent_basis: dim must be 2 or 3");
}

// Tangential restriction of the support Hessian: the reverse Weingarten map,
// a (dim-1) x (dim-1) symmetric matrix whose eigenvalues are the principal
// curvature radii at the boundary point with outer normal u.
inline Mat reverse_weingarten(const SupportBody& body, const Vec& u) {
    Mat t = tangent_basis(u);
    SupportBody::Eval e = body.eval(u);
    return Mat(t.transpose() * e.hess * t);
}

// Principal curvature radii (reciprocal principal curvatures), all positive
// for a convex body; a non-positive eigenvalue reports loss of convexity.
inline std::vector<double> curvature_radii(const SupportBody& body, const Vec& u_in) {
    if (body.dim() < 2 || body.dim() > 3)
        throw std::invalid_argument("curvature_radii: dim must be 2 or 3");
    Vec u = u_in;
    double nrm = u.norm();
    if (nrm == 0) throw std::invalid_argument("curvature_radii: zero direction");
    u /= nrm;
    Mat a = reverse_weingarten(body, u);
    std::vector<double> radii;
    if (body.dim() == 2) {
        radii = {a(0, 0)};
    } else {
        // cancellation-free eigenvalues of a symmetric 2x2
        double mid = (a(0, 0) + a(1, 1)) / 2;
        double disc = std::hypot((a(0, 0) - a(1, 1)) / 2, a(0, 1));
        radii = {mid - disc, mid + disc};
    }
    for (double r : radii)
        if (r <= 0) {
            std::string dir = "(";
            for (int k = 0; k < u.size(); ++k) dir += (k ? ", " : "") + std::to_string(u[k]);
            throw std::domain_error("loss of convexity at direction " + dir +
                                    "): non-positive radius " + std::to_string(r));
        }
    return radii;
}

inline double SupportBody::scan_min_radius(Vec* where) const {
    double mn = std::numeric_limits<double>::infinity();
    auto consider = [&](double r, const Vec& u) {
        if (r < mn) {
            mn = r;
            if (where) *where = u;
        }
    };
    if (dim_ == 2) {
        const int n = 720;
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n;
            Vec u(2);
            u << std::cos(th), std::sin(th);
            consider(reverse_weingarten(*this, u)(0, 0), u);
        }
        return mn;
    }
    if (dim_ == 3) {
        const int nt = 64, np = 128;
        for (int i = 0; i < nt; ++i) {
            double ct = -1.0 + 2.0 * (i + 0.5) / nt;
            double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < np; ++j) {
                double ps = 2.0 * std::numbers::pi * (j + 0.5) / np;
                Vec u(3);
                u << st * std::cos(ps), st * std::sin(ps), ct;
                Mat a = reverse_weingarten(*this, u);
                double mid = (a(0, 0) + a(1, 1)) / 2;
                double disc = std::hypot((a(0, 0) - a(1, 1)) / 2, a(0, 1));
                consider(mid - disc, u);
            }
        }
        return mn;
    }
    return mn;
}

inline nlohmann::json SupportBody::to_json() const {
    return std::visit(
        [&](const auto& f) -> nlohmann::json {
            using T = std::decay_t<decltype(f)>;
            nlohmann::json j;
            if constexpr (std::is_same_v<T, BallF>) {
                j["family"] = "ball";
                j["radius"] = f.radius;
                j["dim"] = dim_;
            } else if constexpr (std::is_same_v<T, Odd2F>) {
                j["family"] = "odd_harmonic_2d";
                j["halfwidth"] = f.halfwidth;
                j["harmonics"] = nlohmann::json::array();
                for (const auto& hm : f.harmonics)
                    j["harmonics"].push_back(
                        {{"degree", hm.degree}, {"cos", hm.cos_coef}, {"sin", hm.sin_coef}});
            } else if constexpr (std::is_same_v<T, Odd3F>) {
                j["family"] = "odd_harmonic_3d";
                j["halfwidth"] = f.halfwidth;
                j["harmonics"] = nlohmann::json::array();
                for (const auto& hm : f.harmonics)
                    j["harmonics"].push_back(
                        {{"degree", hm.degree}, {"order", hm.order}, {"coef", hm.coef}});
            } else if constexpr (std::is_same_v<T, ParallelF>) {
                j["family"] = "parallel";
                j["rho"] = f.rho;
                j["base"] = f.base->to_json();
            } else {
                j["family"] = "projected";
                j["base"] = f.base->to_json();
                auto frame = nlohmann::json::array();
                for (int c = 0; c < f.basis.cols(); ++c) {
                    auto col = nlohmann::json::array();
                    for (int r = 0; r < f.basis.rows(); ++r) col.push_back(f.basis(r, c));
                    frame.push_back(col);
                }
                j["frame"] = frame;
            }
            return j;
        },
        family_);
}

inline SupportBody SupportBody::from_json(const nlohmann::json& spec, int context_dim) {
    if (!spec.contains("family")) throw std::invalid_argument("body spec: missing \"family\"");
    const std::string family = spec.at("family");
    if (family == "ball") {
        int dim = spec.value("dim", context_dim > 0 ? context_dim : 3);
        return ball(spec.at("radius").get<double>(), dim);
    }
    if (family == "odd_harmonic_2d") {
        std::vector<Harmonic2D> hs;
        for (const auto& h : spec.value("harmonics", nlohmann::json::array()))
            hs.push_back({h.value("degree", 3), h.value("cos", 0.0), h.value("sin", 0.0)});
        return odd_harmonic_2d(spec.at("halfwidth").get<double>(), std::move(hs));
    }
    if (family == "odd_harmonic_3d") {
        std::vector<Harmonic3D> hs;
        for (const auto& h : spec.value("harmonics", nlohmann::json::array()))
            hs.push_back({h.value("degree", 3), h.value("order", 0), h.value("coef", 0.0)});
        return odd_harmonic_3d(spec.at("halfwidth").get<double>(), std::move(hs));
    }
    if (family == "parallel") {
        SupportBody base = from_json(spec.at("base"), context_dim);
        return parallel(base, spec.at("rho").get<double>());
    }
    if (family == "projected") {
        SupportBody base = from_json(spec.at("base"));
        const auto& cols = spec.at("frame");
        if (cols.empty()) throw std::invalid_argument("body spec: empty frame");
        Eigen::MatrixXd m(cols[0].size(), cols.size());
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r].get<double>();
        return projected(base, SubspaceFrame::checked(std::move(m)));
    }
    throw std::invalid_argument("body spec: unknown family '" + family + "'");
}

}  // namespace quermass
