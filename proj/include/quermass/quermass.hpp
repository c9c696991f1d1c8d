#pragma once

// Umbrella header: the exact pi-graded engine, the identity catalog, the
// support-function oracle, Grassmannian Monte Carlo, and the check registry.

#include "quermass/atom.hpp"
#include "quermass/exact.hpp"
#include "quermass/formula_poly.hpp"
#include "quermass/formulas.hpp"
#include "quermass/frame.hpp"
#include "quermass/geometry.hpp"
#include "quermass/grassmann.hpp"
#include "quermass/numeric.hpp"
#include "quermass/parallel.hpp"
#include "quermass/pi_scalar.hpp"
#include "quermass/quadrature.hpp"
#include "quermass/rational.hpp"
#include "quermass/report.hpp"
#include "quermass/rng.hpp"
#include "quermass/support_body.hpp"
#include "quermass/verify.hpp"
