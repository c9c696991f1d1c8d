#pragma once

#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quermass/rational.hpp"

namespace quermass {

// Element of the ring Q[pi]: a finite sum  sum_k q_k * pi^k  with rational
// coefficients and non-negative integer exponents. pi is treated as a formal
// indeterminate (it is transcendental, so two elements are equal iff their
// coefficient maps agree). Unit-sphere areas, Grassmannian volumes and every
// coefficient of the transcribed identities live in this ring.
//
// Division is defined only by a single pi-monomial whose exponent does not
// exceed any exponent of the dividend; that covers every ratio the identity
// catalog needs (e.g. O_{n-i-1}/O_{r-i-1}) while keeping the ring honest.
class PiScalar {
public:
    PiScalar() = default;
    PiScalar(const Rational& q) {  // NOLINT(google-explicit-constructor)
        if (q != 0) terms_[0] = q;
    }
    PiScalar(long long v) : PiScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    static PiScalar pi_power(int k, const Rational& q = Rational(1)) {
        if (k < 0) throw std::domain_error("PiScalar: negative pi exponent");
        PiScalar out;
        if (q != 0) out.terms_[k] = q;
        return out;
    }
    static PiScalar pi() { return pi_power(1); }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rational rational_part() const {
        if (terms_.empty()) return Rational(0);
        if (!is_rational()) throw std::domain_error("PiScalar: not a pure rational");
        return terms_.begin()->second;
    }

    PiScalar& operator+=(const PiScalar& o) {
        for (const auto& [k, q] : o.terms_) add_term(k, q);
        return *this;
    }
    PiScalar& operator-=(const PiScalar& o) {
        for (const auto& [k, q] : o.terms_) add_term(k, -q);
        return *this;
    }
    PiScalar operator-() const {
        PiScalar out;
        for (const auto& [k, q] : terms_) out.terms_[k] = -q;
        return out;
    }
    PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        PiScalar out;
        for (const auto& [ka, qa] : a.terms_)
            for (const auto& [kb, qb] : b.terms_) out.add_term(ka + kb, qa * qb);
        return out;
    }

    // Division by a single pi-monomial; anything else is a domain error.
    friend PiScalar operator/(const PiScalar& a, const PiScalar& b) {
        if (!b.is_monomial())
            throw std::domain_error("PiScalar: division defined only by a single pi-monomial");
        const auto [kb, qb] = *b.terms_.begin();
        PiScalar out;
        for (const auto& [k, q] : a.terms_) {
            if (k < kb)
                throw std::domain_error("PiScalar: division would need a negative pi exponent");
            out.terms_[k - kb] = q / qb;
        }
        return out;
    }

    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }
    friend bool operator<(const PiScalar& a, const PiScalar& b) { return a.terms_ < b.terms_; }

    // pi becomes a floating value here and nowhere earlier.
    double to_double() const {
        double out = 0.0;
        for (const auto& [k, q] : terms_)
            out += rational_to_double(q) * std::pow(std::numbers::pi, k);
        return out;
    }

    // Canonical form "q0 + q1*pi + q2*pi^2 + ..." with lowest-term rationals,
    // ascending exponents and unit coefficients elided ("pi", "-pi^2").
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, q] : terms_) {
            std::string t = term_str(k, q);
            if (first) {
                out = std::move(t);
                first = false;
            } else if (!t.empty() && t[0] == '-') {
                out += " - ";
                out += t.substr(1);
            } else {
                out += " + ";
                out += t;
            }
        }
        return out;
    }

    static PiScalar parse(std::string_view s);

private:
    void add_term(int k, const Rational& q) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (q != 0) terms_.emplace(k, q);
            return;
        }
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }

    static std::string term_str(int k, const Rational& q) {
        if (k == 0) return rational_to_string(q);
        std::string pi_part = (k == 1) ? "pi" : "pi^" + std::to_string(k);
        if (q == 1) return pi_part;
        if (q == -1) return "-" + pi_part;
        return rational_to_string(q) + "*" + pi_part;
    }

    std::map<int, Rational> terms_;  // exponent -> nonzero coefficient
};

inline PiScalar PiScalar::parse(std::string_view s) {
    PiScalar out;
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    bool first = true;
    while (skip_ws(), pos < s.size()) {
        int sign = 1;
        if (!first) {
            if (s[pos] == '+') sign = 1;
            else if (s[pos] == '-') sign = -1;
            else throw std::invalid_argument("PiScalar::parse: expected '+' or '-'");
            ++pos;
            skip_ws();
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        first = false;
        size_t start = pos;
        while (pos < s.size() && s[pos] != ' ') ++pos;
        std::string_view term = s.substr(start, pos - start);
        if (term.empty()) throw std::invalid_argument("PiScalar::parse: empty term");

        Rational coef(1);
        int exp = 0;
        auto star = term.find('*');
        std::string_view num_part = term, pi_part;
        if (star != std::string_view::npos) {
            num_part = term.substr(0, star);
            pi_part = term.substr(star + 1);
        } else if (term.substr(0, 2) == "pi") {
            num_part = {};
            pi_part = term;
        }
        if (!num_part.empty()) coef = rational_from_string(num_part);
        if (!pi_part.empty()) {
            if (pi_part.substr(0, 2) != "pi")
                throw std::invalid_argument("PiScalar::parse: bad term '" + std::string(term) + "'");
            if (pi_part.size() == 2) exp = 1;
            else if (pi_part[2] == '^') exp = std::stoi(std::string(pi_part.substr(3)));
            else throw std::invalid_argument("PiScalar::parse: bad pi power");
        }
        if (sign < 0) coef = -coef;
        out += pi_power(exp, coef);
    }
    return out;
}

}  // namespace quermass
