#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "quermass/atom.hpp"
#include "quermass/pi_scalar.hpp"

namespace quermass {

// Monomial: atoms with positive exponents, canonically ordered by the atom
// ordering. The empty monomial is the constant term.
using Monomial = std::map<Atom, int>;

inline std::string monomial_str(const Monomial& m) {
    std::string out;
    for (const auto& [atom, exp] : m) {
        out += "*" + atom.str();
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

// Exact multivariate polynomial over Q[pi] in the symbolic atoms. The medium
// in which every identity of the catalog is transcribed and compared.
// Normalization (sorted monomials, no zero coefficients) is maintained by
// construction, so equality is plain term-map equality.
class FormulaPoly {
public:
    static constexpr int kMaxExponent = 64;  // degree guard; the catalog never exceeds n

    FormulaPoly() = default;
    FormulaPoly(const PiScalar& c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    FormulaPoly(long long v) : FormulaPoly(PiScalar(v)) {}  // NOLINT(google-explicit-constructor)

    static FormulaPoly atom(const Atom& a) {
        FormulaPoly p;
        p.terms_.emplace(Monomial{{a, 1}}, PiScalar(Rational(1)));
        return p;
    }
    static FormulaPoly monomial(Monomial m, const PiScalar& c) {
        FormulaPoly p;
        if (!c.is_zero()) {
            for (const auto& [atom, exp] : m)
                if (exp <= 0) throw std::invalid_argument("FormulaPoly: non-positive exponent");
            p.terms_.emplace(std::move(m), c);
        }
        return p;
    }

    const std::map<Monomial, PiScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::set<Atom> atoms() const {
        std::set<Atom> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [atom, exp] : m) out.insert(atom);
        return out;
    }

    FormulaPoly& operator+=(const FormulaPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    FormulaPoly& operator-=(const FormulaPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    FormulaPoly operator-() const {
        FormulaPoly out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    FormulaPoly& operator*=(const FormulaPoly& o) { return *this = *this * o; }

    friend FormulaPoly operator+(FormulaPoly a, const FormulaPoly& b) { return a += b; }
    friend FormulaPoly operator-(FormulaPoly a, const FormulaPoly& b) { return a -= b; }
    friend FormulaPoly operator*(const FormulaPoly& a, const FormulaPoly& b) {
        FormulaPoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [atom, exp] : mb) {
                    int& e = m[atom];
                    e += exp;
                    if (e > kMaxExponent)
                        throw std::domain_error("FormulaPoly: exponent exceeds guard of 64");
                }
                out.add_term(m, ca * cb);
            }
        return out;
    }

    FormulaPoly pow(int e) const {
        if (e < 0) throw std::domain_error("FormulaPoly::pow: negative exponent");
        FormulaPoly out{PiScalar(Rational(1))};
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

    friend bool operator==(const FormulaPoly& a, const FormulaPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormulaPoly& a, const FormulaPoly& b) { return !(a == b); }

    // Simultaneous substitution. Identity entries (atom bound to itself) are
    // no-ops; any other binding whose replacement mentions a bound atom is a
    // cycle and rejected.
    FormulaPoly substitute(const std::map<Atom, FormulaPoly>& bindings) const {
        std::map<Atom, FormulaPoly> live;
        for (const auto& [atom, repl] : bindings) {
            if (repl == FormulaPoly::atom(atom)) continue;
            live.emplace(atom, repl);
        }
        for (const auto& [atom, repl] : live)
            for (const auto& a : repl.atoms())
                if (live.count(a))
                    throw std::invalid_argument("substitute: cyclic binding through atom " +
                                                a.str());
        FormulaPoly out;
        for (const auto& [m, c] : terms_) {
            FormulaPoly term{c};
            Monomial untouched;
            for (const auto& [atom, exp] : m) {
                auto it = live.find(atom);
                if (it == live.end())
                    untouched.emplace(atom, exp);
                else
                    term *= it->second.pow(exp);
            }
            if (!untouched.empty()) term *= FormulaPoly::monomial(std::move(untouched), Rational(1));
            out += term;
        }
        return out;
    }

    // Numeric evaluation; pi is floated only here. Every atom must be bound.
    double eval(const std::map<Atom, double>& bindings) const {
        double sum = 0.0, comp = 0.0;  // Neumaier compensation
        for (const auto& [m, c] : terms_) {
            double v = c.to_double();
            for (const auto& [atom, exp] : m) {
                auto it = bindings.find(atom);
                if (it == bindings.end())
                    throw std::invalid_argument("eval: unbound atom " + atom.str());
                for (int e = 0; e < exp; ++e) v *= it->second;
            }
            double t = sum + v;
            comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
            sum = t;
        }
        return sum + comp;
    }

    // Exact evaluation with PiScalar bindings (used for closed-form residuals).
    PiScalar eval_exact(const std::map<Atom, PiScalar>& bindings) const {
        PiScalar sum;
        for (const auto& [m, c] : terms_) {
            PiScalar v = c;
            for (const auto& [atom, exp] : m) {
                auto it = bindings.find(atom);
                if (it == bindings.end())
                    throw std::invalid_argument("eval_exact: unbound atom " + atom.str());
                for (int e = 0; e < exp; ++e) v *= it->second;
            }
            sum += v;
        }
        return sum;
    }

    // Canonical text form, e.g. "(-2)*V'_1 + (pi)*M'(1,0)*h + (pi)*M'(1,0)*rho".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += "(" + c.str() + ")" + monomial_str(m);
        }
        return out;
    }

private:
    void add_term(const Monomial& m, const PiScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, PiScalar> terms_;
};

inline FormulaPoly operator*(const PiScalar& c, const FormulaPoly& p) {
    return FormulaPoly(c) * p;
}

}  // namespace quermass
