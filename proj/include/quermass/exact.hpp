#pragma once

#include <stdexcept>

#include "quermass/pi_scalar.hpp"
#include "quermass/rational.hpp"

namespace quermass {

// C(n, k), exact; out-of-range k returns 0 by convention.
inline Rational binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return Rational(0);
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= (n - k + i);
        den *= i;
    }
    return Rational(num, den);
}

// Area O_m of the unit m-sphere, exactly: a single pi-monomial.
//   O_{2k}   = 2 * 4^k * k! / (2k)! * pi^k
//   O_{2k+1} = 2 / k! * pi^{k+1}
// Both come from O_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2) with the half-integer
// Gamma values expanded.
inline PiScalar sphere_area(int m) {
    if (m < 0) throw std::domain_error("sphere_area: negative dimension");
    if (m % 2 == 0) {
        const int k = m / 2;
        BigInt pow4 = BigInt(1) << (2 * k);
        return PiScalar::pi_power(k, Rational(2 * pow4 * factorial(k), factorial(2 * k)));
    }
    const int k = (m - 1) / 2;
    return PiScalar::pi_power(k + 1, Rational(BigInt(2), factorial(k)));
}

// Total measure of the Grassmannian of r-planes through the origin in n-space:
//   m(G_{r,n-r}) = O_{n-1} ... O_{n-r} / (O_{r-1} ... O_1 O_0),
// symmetric under r <-> n-r.
inline PiScalar grassmann_measure(int n, int r) {
    if (n < 2) throw std::domain_error("grassmann_measure: need n >= 2");
    if (r < 1 || r > n - 1) throw std::domain_error("grassmann_measure: need 1 <= r <= n-1");
    PiScalar out{Rational(1)};
    for (int m = n - r; m <= n - 1; ++m) out *= sphere_area(m);
    for (int m = 0; m <= r - 1; ++m) out = out / sphere_area(m);
    return out;
}

}  // namespace quermass
