#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quermass {

// Exact arbitrary-precision arithmetic. Every coefficient handled by the
// symbolic engine is a rational (or rational times a power of pi), so the
// whole identity suite runs without floating-point error. Conversion to
// double happens only at report time.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double rational_to_double(const Rational& q) {
    return q.template convert_to<double>();
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

// Exact dyadic decomposition: every finite double is mantissa * 2^e.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int e = 0;
    double m = std::frexp(x, &e);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    e -= 53;
    Rational r(mant);
    if (e > 0)
        r *= Rational(BigInt(1) << e);
    else if (e < 0)
        r /= Rational(BigInt(1) << (-e));
    return r;
}

inline std::string rational_to_string(const Rational& q) { return q.str(); }

inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
}

}  // namespace quermass
