#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quermass/exact.hpp"
#include "quermass/formula_poly.hpp"

namespace quermass {
namespace formulas {

// Builders for the identity catalog. Each function transcribes one display
// term-for-term; the internal-consistency and transfer suites then prove the
// transcriptions against each other, and the numeric oracle probes them
// against actual convex bodies. Fidelity comes first here: nothing is
// simplified or "corrected" relative to the catalog statement.

inline void check_nr(int n, int r) {
    if (n < 2) throw std::domain_error("need n >= 2");
    if (r < 1 || r > n - 1) throw std::domain_error("need 1 <= r <= n-1");
}

inline FormulaPoly rho_poly() { return FormulaPoly::atom(Atom::rho()); }
inline FormulaPoly width_poly() { return FormulaPoly::atom(Atom::width()); }

inline FormulaPoly var_power(const Atom& a, int e) {
    if (e == 0) return FormulaPoly{PiScalar(Rational(1))};
    return FormulaPoly::monomial(Monomial{{a, e}}, Rational(1));
}

// O_{n-2} O_{n-3} ... O_{n-r}; empty (= 1) when r = 1.
inline PiScalar sphere_chain_high(int n, int r) {
    PiScalar out{Rational(1)};
    for (int m = n - r; m <= n - 2; ++m) out *= sphere_area(m);
    return out;
}

// O_{r-2} O_{r-3} ... O_0; empty (= 1) when r = 1.
inline PiScalar sphere_chain_low(int r) {
    PiScalar out{Rational(1)};
    for (int m = 0; m <= r - 2; ++m) out *= sphere_area(m);
    return out;
}

// Steiner expansion of the outer parallel volume:
//   V(K_rho) = sum_{i=0}^{n} C(n,i) W(n,i) rho^i
inline FormulaPoly steiner_volume(int n) {
    if (n < 1) throw std::domain_error("steiner_volume: need n >= 1");
    FormulaPoly out;
    for (int i = 0; i <= n; ++i) {
        FormulaPoly term{PiScalar(binomial(n, i))};
        term *= FormulaPoly::atom(Atom::quermass(n, i));
        term *= var_power(Atom::rho(), i);
        out += term;
    }
    return out;
}

// Same expansion with an arbitrary polynomial in place of the distance:
//   W(n,i)(K_d) = sum_{j=0}^{n-i} C(n-i,j) W(n,i+j) d^j
inline FormulaPoly steiner_quermass_at(int n, int i, const FormulaPoly& dist) {
    if (n < 1) throw std::domain_error("steiner_quermass: need n >= 1");
    if (i < 0 || i > n) throw std::domain_error("steiner_quermass: need 0 <= i <= n");
    FormulaPoly out;
    for (int j = 0; j <= n - i; ++j) {
        FormulaPoly term{PiScalar(binomial(n - i, j))};
        term *= FormulaPoly::atom(Atom::quermass(n, i + j));
        term *= dist.pow(j);
        out += term;
    }
    return out;
}

// Quermassintegral of the outer parallel body in the distance rho.
inline FormulaPoly steiner_quermass(int n, int i) {
    return steiner_quermass_at(n, i, rho_poly());
}

// Mean curvature integrals against quermassintegrals: M(n,i) = n W(n,i+1).
inline FormulaPoly mci_from_quermass(int n, int i) {
    if (n < 1) throw std::domain_error("mci_from_quermass: need n >= 1");
    if (i < 0 || i > n - 1) throw std::domain_error("mci_from_quermass: need 0 <= i <= n-1");
    return PiScalar(Rational(n)) * FormulaPoly::atom(Atom::quermass(n, i + 1));
}

// Santalo's flattened-body relations: rewrite of M^(n)_q of an r-dimensional
// convex set K'_r regarded as a flattened body of n-space.
//   q >= n-r:    C(r-1, q-n+r)/C(n-1, q) * O_q/O_{q-n+r} * M^(r)_{q-n+r}
//   q = n-r-1:   C(n-1, n-r-1)^{-1} O_{n-r-1} V_r
//   q < n-r-1:   0
inline FormulaPoly santalo_project(int n, int r, int q) {
    check_nr(n, r);
    if (q < 0 || q > n - 1) throw std::domain_error("santalo_project: need 0 <= q <= n-1");
    if (q >= n - r) {
        PiScalar coef{binomial(r - 1, q - n + r) / binomial(n - 1, q)};
        coef *= sphere_area(q);
        coef = coef / sphere_area(q - n + r);
        return coef * FormulaPoly::atom(Atom::mci_proj(r, q - n + r));
    }
    if (q == n - r - 1) {
        PiScalar coef{Rational(1) / binomial(n - 1, n - r - 1)};
        coef *= sphere_area(n - r - 1);
        return coef * FormulaPoly::atom(Atom::vol_proj(r));
    }
    return FormulaPoly{};
}

// All flattened integrals of one (n, r) pair, keyed for substitution.
inline std::map<Atom, FormulaPoly> santalo_bindings(int n, int r) {
    std::map<Atom, FormulaPoly> out;
    for (int q = 0; q <= n - 1; ++q) out.emplace(Atom::mci_flat(n, q), santalo_project(n, r, q));
    return out;
}

// Quermassintegrals of a constant-width body in terms of the top ones:
//   W(n,s) = sum_{i=0}^{n-s} (-1)^i C(n-s,i) W(n,n-i) h^{n-s-i}
inline FormulaPoly constant_width_reduce(int n, int s) {
    if (n < 1) throw std::domain_error("constant_width_reduce: need n >= 1");
    if (s < 0 || s > n) throw std::domain_error("constant_width_reduce: need 0 <= s <= n");
    FormulaPoly out;
    for (int i = 0; i <= n - s; ++i) {
        Rational c = binomial(n - s, i);
        if (i % 2) c = -c;
        FormulaPoly term{PiScalar(c)};
        term *= FormulaPoly::atom(Atom::quermass(n, n - i));
        term *= var_power(Atom::width(), n - s - i);
        out += term;
    }
    return out;
}

// W(n,l) of the outer parallel body of a constant-width body: the Steiner
// expansion composed with the constant-width reduction,
//   sum_j sum_i (-1)^i C(n-l,j) C(n-l-j,i) W(n,n-i) rho^j h^{n-l-j-i}
inline FormulaPoly parallel_constwidth_quermass(int n, int l) {
    if (n < 1) throw std::domain_error("parallel_constwidth_quermass: need n >= 1");
    if (l < 0 || l > n) throw std::domain_error("parallel_constwidth_quermass: need 0 <= l <= n");
    FormulaPoly out;
    for (int j = 0; j <= n - l; ++j)
        for (int i = 0; i <= n - l - j; ++i) {
            Rational c = binomial(n - l, j) * binomial(n - l - j, i);
            if (i % 2) c = -c;
            FormulaPoly term{PiScalar(c)};
            term *= FormulaPoly::atom(Atom::quermass(n, n - i));
            term *= var_power(Atom::rho(), j);
            term *= var_power(Atom::width(), n - l - j - i);
            out += term;
        }
    return out;
}

// The pre-Santalo expansion of M^(n)_l of the parallel body of the flattened
// projection, over flattened atoms:
//   sum_{j=0}^{n-l-1} sum_{i=0}^{n-l-j-1} (-1)^i C(n-l-1,j) C(n-l-j-1,i)
//     Mflat(n, n-i-1) rho^j h^{n-l-j-i-1}
inline FormulaPoly wc_expansion(int n, int r, int l) {
    check_nr(n, r);
    if (l < 0 || l > n - 1) throw std::domain_error("wc_expansion: need 0 <= l <= n-1");
    FormulaPoly out;
    for (int j = 0; j <= n - l - 1; ++j)
        for (int i = 0; i <= n - l - j - 1; ++i) {
            Rational c = binomial(n - l - 1, j) * binomial(n - l - j - 1, i);
            if (i % 2) c = -c;
            FormulaPoly term{PiScalar(c)};
            term *= FormulaPoly::atom(Atom::mci_flat(n, n - i - 1));
            term *= var_power(Atom::rho(), j);
            term *= var_power(Atom::width(), n - l - j - i - 1);
            out += term;
        }
    return out;
}

namespace detail {

// Shared coefficient of the projected-integral terms:
//   C(r-1, r-i-1)/C(n-1, n-i-1) * O_{n-i-1}/O_{r-i-1}
inline PiScalar projected_term_coef(int n, int r, int i) {
    PiScalar coef{binomial(r - 1, r - i - 1) / binomial(n - 1, n - i - 1)};
    coef *= sphere_area(n - i - 1);
    return coef / sphere_area(r - i - 1);
}

// Builds the three-case evaluator. `proj_atom(i)` supplies the atom standing
// for the i-th projected integral and `extra(i)` any additional scalar factor
// (the Grassmann chains of the integrated version); `vol_term()` supplies the
// polynomial replacing the O_{n-r-1} V_r contribution.
inline FormulaPoly three_cases(int n, int r, int l,
                               const std::function<FormulaPoly(int)>& proj_part,
                               const std::function<FormulaPoly()>& vol_part) {
    check_nr(n, r);
    if (l < 0 || l > n - 1) throw std::domain_error("theorem evaluator: need 0 <= l <= n-1");

    auto signed_term = [](Rational c, int i) {
        if (i % 2) c = -c;
        return PiScalar(c);
    };

    FormulaPoly out;
    if (l >= n - r) {
        // Case 1: every flattened integral rewrites through the projection.
        for (int j = 0; j <= n - l - 1; ++j)
            for (int i = 0; i <= n - l - j - 1; ++i) {
                FormulaPoly term{signed_term(binomial(n - l - 1, j) * binomial(n - l - j - 1, i), i)};
                term *= proj_part(i);
                term *= var_power(Atom::rho(), j);
                term *= var_power(Atom::width(), n - l - j - i - 1);
                out += term;
            }
        return out;
    }
    if (l == n - r - 1) {
        // Case 2: the i = r, j = 0 corner contributes the volume term.
        {
            FormulaPoly term = vol_part();
            if (r % 2) term = -term;
            out += term;
        }
        for (int i = 0; i <= r - 1; ++i) {
            FormulaPoly term{signed_term(binomial(r, i), i)};
            term *= proj_part(i);
            term *= var_power(Atom::width(), r - i);
            out += term;
        }
        for (int j = 1; j <= r; ++j)
            for (int i = 0; i <= r - j; ++i) {
                FormulaPoly term{signed_term(binomial(r, j) * binomial(r - j, i), i)};
                term *= proj_part(i);
                term *= var_power(Atom::rho(), j);
                term *= var_power(Atom::width(), r - j - i);
                out += term;
            }
        return out;
    }
    // Case 3: l < n-r-1. Volume corners for small j, projected terms split at
    // j = n-r-l; indices i > r vanish.
    for (int j = 0; j <= n - r - l - 1; ++j) {
        FormulaPoly term{PiScalar(binomial(n - l - 1, j) * binomial(n - l - j - 1, r))};
        if (r % 2) term = -term;
        term *= vol_part();
        term *= var_power(Atom::rho(), j);
        term *= var_power(Atom::width(), n - l - j - r - 1);
        out += term;
    }
    for (int j = 0; j <= n - r - l; ++j)
        for (int i = 0; i <= r - 1; ++i) {
            FormulaPoly term{signed_term(binomial(n - l - 1, j) * binomial(n - l - j - 1, i), i)};
            term *= proj_part(i);
            term *= var_power(Atom::rho(), j);
            term *= var_power(Atom::width(), n - l - j - i - 1);
            out += term;
        }
    for (int j = n - r - l + 1; j <= n - l - 1; ++j)
        for (int i = 0; i <= n - l - j - 1; ++i) {
            FormulaPoly term{signed_term(binomial(n - l - 1, j) * binomial(n - l - j - 1, i), i)};
            term *= proj_part(i);
            term *= var_power(Atom::rho(), j);
            term *= var_power(Atom::width(), n - l - j - i - 1);
            out += term;
        }
    return out;
}

}  // namespace detail

// The fixed-subspace evaluator: M^(n)_l of the outer parallel body of the
// projection of a constant-width body, in atoms M'(r,.) and V'_r.
inline FormulaPoly theorem1(int n, int r, int l) {
    auto proj = [n, r](int i) {
        return detail::projected_term_coef(n, r, i) *
               FormulaPoly::atom(Atom::mci_proj(r, r - i - 1));
    };
    auto vol = [n, r]() {
        PiScalar coef{Rational(1) / binomial(n - 1, n - r - 1)};
        coef *= sphere_area(n - r - 1);
        return coef * FormulaPoly::atom(Atom::vol_proj(r));
    };
    return detail::three_cases(n, r, l, proj, vol);
}

// The Grassmann-integrated evaluator: the same quantity integrated over all
// r-planes through the origin, in atoms M(n,.).
inline FormulaPoly theorem2(int n, int r, int l) {
    const PiScalar chain_ratio = sphere_chain_high(n, r) / sphere_chain_low(r);
    auto proj = [n, r, chain_ratio](int i) {
        return (detail::projected_term_coef(n, r, i) * chain_ratio) *
               FormulaPoly::atom(Atom::mci_body(n, n - i - 1));
    };
    auto vol = [n, r, chain_ratio]() {
        PiScalar coef{Rational(1) / binomial(n - 1, n - r - 1)};
        coef *= sphere_area(n - r - 1);
        coef *= chain_ratio;
        coef *= PiScalar(Rational(1, r));
        return coef * FormulaPoly::atom(Atom::mci_body(n, n - r - 1));
    };
    return detail::three_cases(n, r, l, proj, vol);
}

// Grassmann transfer of a projected mean curvature integral:
//   integral of M'(r,t) over all r-planes
//     = O_{n-2}...O_{n-r} / (O_{r-2}...O_0) * M(n, n-r+t)
inline FormulaPoly grassmann_mci_transfer(int n, int r, int t) {
    check_nr(n, r);
    if (t < 0 || t > r - 1) throw std::domain_error("grassmann_mci_transfer: need 0 <= t <= r-1");
    PiScalar coef = sphere_chain_high(n, r) / sphere_chain_low(r);
    return coef * FormulaPoly::atom(Atom::mci_body(n, n - r + t));
}

// Grassmann integral of the projection volume:
//   integral of V'_r over all r-planes
//     = O_{n-2}...O_{n-r} / (r O_{r-2}...O_0) * M(n, n-r-1)
inline FormulaPoly projection_volume_integral(int n, int r) {
    check_nr(n, r);
    PiScalar coef = sphere_chain_high(n, r) / sphere_chain_low(r);
    coef *= PiScalar(Rational(1, r));
    return coef * FormulaPoly::atom(Atom::mci_body(n, n - r - 1));
}

// Bindings turning the fixed-subspace evaluator into the integrated one.
inline std::map<Atom, FormulaPoly> transfer_bindings(int n, int r) {
    std::map<Atom, FormulaPoly> out;
    for (int t = 0; t <= r - 1; ++t)
        out.emplace(Atom::mci_proj(r, t), grassmann_mci_transfer(n, r, t));
    out.emplace(Atom::vol_proj(r), projection_volume_integral(n, r));
    return out;
}

// ---------------------------------------------------------------------------
// Catalog: stable string ids for the CLI and the reports.

struct CatalogEntry {
    std::string id;
    std::string synopsis;
    std::vector<std::string> params;  // required integer parameters
    std::function<FormulaPoly(const std::map<std::string, int>&)> build;
};

inline const std::vector<CatalogEntry>& formula_catalog() {
    static const std::vector<CatalogEntry> catalog = [] {
        auto p = [](const std::map<std::string, int>& m, const std::string& k) {
            auto it = m.find(k);
            if (it == m.end()) throw std::invalid_argument("missing parameter --" + k);
            return it->second;
        };
        std::vector<CatalogEntry> v;
        v.push_back({"eq-2.5", "Steiner expansion of the parallel-body volume", {"n"},
                     [p](const auto& m) { return steiner_volume(p(m, "n")); }});
        v.push_back({"eq-2.6", "Steiner expansion of a parallel-body quermassintegral", {"n", "i"},
                     [p](const auto& m) { return steiner_quermass(p(m, "n"), p(m, "i")); }});
        v.push_back({"eq-2.7", "mean curvature integral as n*W(n,i+1)", {"n", "i"},
                     [p](const auto& m) { return mci_from_quermass(p(m, "n"), p(m, "i")); }});
        v.push_back({"santalo", "flattened-body mean curvature integral rewrite", {"n", "r", "q"},
                     [p](const auto& m) { return santalo_project(p(m, "n"), p(m, "r"), p(m, "q")); }});
        v.push_back({"eq-2.11", "constant-width quermassintegral reduction", {"n", "s"},
                     [p](const auto& m) { return constant_width_reduce(p(m, "n"), p(m, "s")); }});
        v.push_back({"eq-3.1", "parallel body of a constant-width body, W(n,l)", {"n", "l"},
                     [p](const auto& m) {
                         return parallel_constwidth_quermass(p(m, "n"), p(m, "l"));
                     }});
        v.push_back({"eq-3.4", "pre-Santalo expansion over flattened atoms", {"n", "r", "l"},
                     [p](const auto& m) { return wc_expansion(p(m, "n"), p(m, "r"), p(m, "l")); }});
        v.push_back({"thm-1.1", "fixed-subspace evaluator (three cases)", {"n", "r", "l"},
                     [p](const auto& m) { return theorem1(p(m, "n"), p(m, "r"), p(m, "l")); }});
        v.push_back({"thm-1.2", "Grassmann-integrated evaluator (three cases)", {"n", "r", "l"},
                     [p](const auto& m) { return theorem2(p(m, "n"), p(m, "r"), p(m, "l")); }});
        v.push_back({"thm-1.2-case2", "integrated evaluator at l = n-r-1", {"n", "r"},
                     [p](const auto& m) {
                         int n = p(m, "n"), r = p(m, "r");
                         return theorem2(n, r, n - r - 1);
                     }});
        v.push_back({"eq-3.9", "re-derived integrated case l = n-r-1", {"n", "r"},
                     [p](const auto& m) {
                         int n = p(m, "n"), r = p(m, "r");
                         return theorem2(n, r, n - r - 1);
                     }});
        v.push_back({"eq-3.8", "Grassmann transfer of a projected integral", {"n", "r", "t"},
                     [p](const auto& m) {
                         return grassmann_mci_transfer(p(m, "n"), p(m, "r"), p(m, "t"));
                     }});
        v.push_back({"eq-3.10", "Grassmann integral of the projection volume", {"n", "r"},
                     [p](const auto& m) {
                         return projection_volume_integral(p(m, "n"), p(m, "r"));
                     }});
        return v;
    }();
    return catalog;
}

inline const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : formula_catalog())
        if (e.id == id) return e;
    std::string known;
    for (const auto& e : formula_catalog()) known += (known.empty() ? "" : ", ") + e.id;
    throw std::invalid_argument("unknown formula id '" + id + "' (valid ids: " + known + ")");
}

inline FormulaPoly build_formula(const std::string& id, const std::map<std::string, int>& params) {
    return catalog_entry(id).build(params);
}

}  // namespace formulas
}  // namespace quermass
