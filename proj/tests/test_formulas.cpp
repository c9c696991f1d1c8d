#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "quermass/formulas.hpp"

using namespace quermass;
using namespace quermass::formulas;

namespace {

const double kPi = std::numbers::pi;

FormulaPoly av(const Atom& a) { return FormulaPoly::atom(a); }
PiScalar q(long long num, long long den = 1) { return PiScalar(Rational(num, den)); }
PiScalar qpi(int k, long long num = 1, long long den = 1) {
    return PiScalar::pi_power(k, Rational(num, den));
}

}  // namespace

TEST_CASE("steiner expansion of the parallel volume") {
    FormulaPoly p = steiner_volume(2);
    FormulaPoly expected = av(Atom::quermass(2, 0)) +
                           q(2) * (av(Atom::quermass(2, 1)) * av(Atom::rho())) +
                           av(Atom::quermass(2, 2)) * av(Atom::rho()) * av(Atom::rho());
    CHECK(p == expected);

    SECTION("ball of radius 1 in the plane") {
        std::map<Atom, double> b{{Atom::quermass(2, 0), kPi},
                                 {Atom::quermass(2, 1), kPi},
                                 {Atom::quermass(2, 2), kPi}};
        for (double rho : {0.0, 0.5, 2.0}) {
            b[Atom::rho()] = rho;
            CHECK(p.eval(b) == Catch::Approx(kPi * (1 + rho) * (1 + rho)).epsilon(1e-14));
        }
    }
    SECTION("flattened segment of length 2 gives the stadium area") {
        std::map<Atom, double> b{{Atom::quermass(2, 0), 0.0},
                                 {Atom::quermass(2, 1), 2.0},
                                 {Atom::quermass(2, 2), kPi}};
        for (double rho : {0.25, 1.0}) {
            b[Atom::rho()] = rho;
            CHECK(p.eval(b) == Catch::Approx(4 * rho + kPi * rho * rho).epsilon(1e-14));
        }
    }
}

TEST_CASE("steiner expansion of a parallel quermassintegral") {
    CHECK(steiner_quermass(2, 1) ==
          av(Atom::quermass(2, 1)) + av(Atom::quermass(2, 2)) * av(Atom::rho()));
    for (int n = 1; n <= 6; ++n) CHECK(steiner_quermass(n, n) == av(Atom::quermass(n, n)));

    SECTION("flattened unit disc in 3-space") {
        FormulaPoly p = steiner_quermass(3, 1);
        std::map<Atom, double> b{{Atom::quermass(3, 1), 2 * kPi / 3},
                                 {Atom::quermass(3, 2), kPi * kPi / 3},
                                 {Atom::quermass(3, 3), 4 * kPi / 3}};
        for (double rho : {0.0, 0.5, 1.0}) {
            b[Atom::rho()] = rho;
            double expected = 2 * kPi / 3 + (2 * kPi * kPi / 3) * rho + (4 * kPi / 3) * rho * rho;
            CHECK(p.eval(b) == Catch::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("mean curvature integrals against quermassintegrals") {
    CHECK(mci_from_quermass(3, 0) == q(3) * av(Atom::quermass(3, 1)));
    // top-index values are body-independent
    CHECK(mci_from_quermass(2, 1).eval({{Atom::quermass(2, 2), kPi}}) ==
          Catch::Approx(2 * kPi).epsilon(1e-15));
    CHECK(mci_from_quermass(3, 2).eval({{Atom::quermass(3, 3), 4 * kPi / 3}}) ==
          Catch::Approx(4 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(mci_from_quermass(3, 3), std::domain_error);
}

TEST_CASE("flattened-body rewrite") {
    CHECK(santalo_project(3, 2, 2) == q(2) * av(Atom::mci_proj(2, 1)));
    CHECK(santalo_project(3, 2, 0) == q(2) * av(Atom::vol_proj(2)));
    CHECK(santalo_project(5, 2, 1).is_zero());
    CHECK(santalo_project(3, 2, 1) ==
          qpi(1, 1, 1) * av(Atom::mci_proj(2, 0)) * q(1, 2));  // (1/2) pi M'(2,0)
    CHECK_THROWS_AS(santalo_project(3, 2, 3), std::domain_error);
    CHECK_THROWS_AS(santalo_project(3, 3, 0), std::domain_error);
}

TEST_CASE("constant-width reduction") {
    FormulaPoly p = constant_width_reduce(2, 0);
    FormulaPoly expected = av(Atom::quermass(2, 2)) * av(Atom::width()) * av(Atom::width()) -
                           q(2) * (av(Atom::quermass(2, 1)) * av(Atom::width())) +
                           av(Atom::quermass(2, 0));
    CHECK(p == expected);

    SECTION("ball substitution closes the identity") {
        // ball R: h = 2R, W0 = pi R^2, W1 = pi R, W2 = pi
        for (double R : {0.5, 1.0, 2.0}) {
            double got = p.eval({{Atom::quermass(2, 0), kPi * R * R},
                                 {Atom::quermass(2, 1), kPi * R},
                                 {Atom::quermass(2, 2), kPi},
                                 {Atom::width(), 2 * R}});
            CHECK(got == Catch::Approx(kPi * R * R).epsilon(1e-14));
        }
    }
    for (int n = 1; n <= 6; ++n) CHECK(constant_width_reduce(n, n) == av(Atom::quermass(n, n)));

    SECTION("planar case forces Barbier's relation") {
        CHECK(constant_width_reduce(2, 1) ==
              av(Atom::quermass(2, 2)) * av(Atom::width()) - av(Atom::quermass(2, 1)));
        // W1 = W2 h - W1 with W2 = pi forces W1 = pi h / 2, i.e. perimeter pi h
        double h = 2.0, w1 = kPi * h / 2;
        CHECK(constant_width_reduce(2, 1).eval(
                  {{Atom::quermass(2, 1), w1}, {Atom::quermass(2, 2), kPi}, {Atom::width(), h}}) ==
              Catch::Approx(w1).epsilon(1e-14));
    }
}

TEST_CASE("parallel body of a constant-width body") {
    FormulaPoly p = parallel_constwidth_quermass(2, 1);
    FormulaPoly expected = av(Atom::quermass(2, 2)) * av(Atom::width()) -
                           av(Atom::quermass(2, 1)) +
                           av(Atom::quermass(2, 2)) * av(Atom::rho());
    CHECK(p == expected);
    for (int n = 1; n <= 6; ++n)
        CHECK(parallel_constwidth_quermass(n, n) == av(Atom::quermass(n, n)));

    SECTION("parallel of a ball is a ball") {
        for (double R : {0.5, 1.0})
            for (double rho : {0.25, 1.0}) {
                double got = p.eval({{Atom::quermass(2, 1), kPi * R},
                                     {Atom::quermass(2, 2), kPi},
                                     {Atom::width(), 2 * R},
                                     {Atom::rho(), rho}});
                CHECK(got == Catch::Approx(kPi * (R + rho)).epsilon(1e-14));
            }
    }
}

TEST_CASE("pre-substitution expansion over flattened atoms") {
    CHECK(wc_expansion(2, 1, 0) ==
          av(Atom::mci_flat(2, 1)) * av(Atom::width()) - av(Atom::mci_flat(2, 0)) +
              av(Atom::mci_flat(2, 1)) * av(Atom::rho()));
    CHECK(wc_expansion(2, 1, 1) == av(Atom::mci_flat(2, 1)));
    CHECK(wc_expansion(3, 2, 2) == av(Atom::mci_flat(3, 2)));
    CHECK_THROWS_AS(wc_expansion(3, 2, 3), std::domain_error);
}

TEST_CASE("fixed-subspace evaluator instances") {
    CHECK(theorem1(2, 1, 1) == qpi(1) * av(Atom::mci_proj(1, 0)));
    CHECK(theorem1(2, 1, 1).eval({{Atom::mci_proj(1, 0), 2.0}}) ==
          Catch::Approx(2 * kPi).epsilon(1e-15));

    FormulaPoly case2 = theorem1(2, 1, 0);
    FormulaPoly expected = q(-2) * av(Atom::vol_proj(1)) +
                           qpi(1) * (av(Atom::mci_proj(1, 0)) * av(Atom::width())) +
                           qpi(1) * (av(Atom::mci_proj(1, 0)) * av(Atom::rho()));
    CHECK(case2 == expected);
    CHECK(case2.str() == "(-2)*V'_1 + (pi)*M'(1,0)*h + (pi)*M'(1,0)*rho");

    CHECK(theorem1(3, 2, 2) == q(2) * av(Atom::mci_proj(2, 1)));
    CHECK(theorem1(3, 2, 2).eval({{Atom::mci_proj(2, 1), 2 * kPi}}) ==
          Catch::Approx(4 * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(theorem1(3, 0, 0), std::domain_error);
    CHECK_THROWS_AS(theorem1(3, 2, 3), std::domain_error);
}

TEST_CASE("integrated evaluator instances") {
    CHECK(theorem2(2, 1, 1) == qpi(1) * av(Atom::mci_body(2, 1)));
    CHECK(theorem2(2, 1, 1).eval({{Atom::mci_body(2, 1), 2 * kPi}}) ==
          Catch::Approx(2 * kPi * kPi).epsilon(1e-15));

    CHECK(theorem2(3, 2, 2) == qpi(1, 2) * av(Atom::mci_body(3, 2)));
    CHECK(theorem2(3, 2, 2).eval({{Atom::mci_body(3, 2), 4 * kPi}}) ==
          Catch::Approx(8 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("grassmann transfer instances") {
    CHECK(grassmann_mci_transfer(3, 2, 0) == qpi(1) * av(Atom::mci_body(3, 1)));
    CHECK(grassmann_mci_transfer(3, 2, 0).eval({{Atom::mci_body(3, 1), 4 * kPi}}) ==
          Catch::Approx(4 * kPi * kPi).epsilon(1e-15));
    CHECK(grassmann_mci_transfer(2, 1, 0) == av(Atom::mci_body(2, 1)));
    CHECK(grassmann_mci_transfer(4, 3, 2) == qpi(1, 2) * av(Atom::mci_body(4, 3)));
    CHECK_THROWS_AS(grassmann_mci_transfer(3, 2, 2), std::domain_error);
}

TEST_CASE("projection volume integral instances") {
    CHECK(projection_volume_integral(3, 2) == qpi(1, 1, 2) * av(Atom::mci_body(3, 0)));
    CHECK(projection_volume_integral(3, 2).eval({{Atom::mci_body(3, 0), 4 * kPi}}) ==
          Catch::Approx(2 * kPi * kPi).epsilon(1e-15));
    CHECK(projection_volume_integral(2, 1) == av(Atom::mci_body(2, 0)));
    CHECK(projection_volume_integral(2, 1).eval({{Atom::mci_body(2, 0), 2 * kPi}}) ==
          Catch::Approx(2 * kPi).epsilon(1e-15));
    CHECK(projection_volume_integral(4, 1) == av(Atom::mci_body(4, 2)));
}

TEST_CASE("internal consistency: evaluator equals substituted expansion") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            auto bindings = santalo_bindings(n, r);
            for (int l = 0; l <= n - 1; ++l) {
                CAPTURE(n, r, l);
                FormulaPoly direct = theorem1(n, r, l);
                FormulaPoly derived = wc_expansion(n, r, l).substitute(bindings);
                REQUIRE(direct == derived);
            }
        }
}

TEST_CASE("transfer consistency: integrated evaluator equals transferred one") {
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n - 1; ++r) {
            auto bindings = transfer_bindings(n, r);
            for (int l = 0; l <= n - 1; ++l) {
                CAPTURE(n, r, l);
                FormulaPoly direct = theorem2(n, r, l);
                FormulaPoly transferred = theorem1(n, r, l).substitute(bindings);
                REQUIRE(direct == transferred);
            }
        }
}

TEST_CASE("case dispatch boundaries") {
    // the volume atom appears exactly in the two lower cases
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (int l = 0; l <= n - 1; ++l) {
                CAPTURE(n, r, l);
                bool has_vol = theorem1(n, r, l).atoms().count(Atom::vol_proj(r)) > 0;
                CHECK(has_vol == (l <= n - r - 1));
            }
}

TEST_CASE("ball substitution closes the width identities exactly") {
    // W_i(ball R) = O_{n-1}/n R^{n-i} and h = 2R, all as exact pi-scalars
    for (int n = 2; n <= 6; ++n) {
        PiScalar top = sphere_area(n - 1) * PiScalar(Rational(1, n));
        for (Rational R : {Rational(1, 2), Rational(1), Rational(2)}) {
            std::map<Atom, PiScalar> ball;
            PiScalar r_pow{Rational(1)};
            for (int i = n; i >= 0; --i) {
                ball[Atom::quermass(n, i)] = top * r_pow;
                r_pow *= PiScalar(R);
            }
            ball[Atom::width()] = PiScalar(2 * R);
            PiScalar want{Rational(1)};
            for (int s = n; s >= 0; --s) {
                CAPTURE(n, s);
                REQUIRE(constant_width_reduce(n, s).eval_exact(ball) == top * want);
                want *= PiScalar(R);
            }
            // the parallel body of a ball R at distance rho is the ball R+rho
            Rational rho(3, 4);
            ball[Atom::rho()] = PiScalar(rho);
            for (int l = 0; l <= n; ++l) {
                PiScalar expect = top;
                for (int k = 0; k < n - l; ++k) expect *= PiScalar(R + rho);
                CAPTURE(n, l);
                REQUIRE(parallel_constwidth_quermass(n, l).eval_exact(ball) == expect);
            }
        }
    }
}

TEST_CASE("steiner composition: two parallel steps compose exactly") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i <= n; ++i) {
            // distances rho and h used as two independent formal variables
            FormulaPoly composed;
            for (int j = 0; j <= n - i; ++j) {
                FormulaPoly term{PiScalar(binomial(n - i, j))};
                term *= steiner_quermass_at(n, i + j, width_poly());
                term *= var_power(Atom::rho(), j);
                composed += term;
            }
            FormulaPoly direct = steiner_quermass_at(n, i, rho_poly() + width_poly());
            CHECK(composed == direct);
        }
}

TEST_CASE("formula catalog dispatch") {
    CHECK(build_formula("eq-2.7", {{"n", 3}, {"i", 2}}).str() == "(3)*W(3,3)");
    CHECK(build_formula("thm-1.1", {{"n", 2}, {"r", 1}, {"l", 0}}) == theorem1(2, 1, 0));
    CHECK(build_formula("eq-3.9", {{"n", 4}, {"r", 2}}) == theorem2(4, 2, 1));
    CHECK(build_formula("thm-1.2-case2", {{"n", 4}, {"r", 2}}) == theorem2(4, 2, 1));
    CHECK_THROWS_AS(build_formula("no-such-id", {}), std::invalid_argument);
    CHECK_THROWS_WITH(build_formula("eq-2.6", {{"n", 3}}),
                      Catch::Matchers::ContainsSubstring("--i"));
}
