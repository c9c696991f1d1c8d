#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace quermass {

// Neumaier-compensated accumulator. Quadrature and Monte Carlo reductions run
// in a fixed index order with compensation, so results do not depend on how
// the work was partitioned.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// All report numbers carry 17 significant digits.
inline std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace quermass
