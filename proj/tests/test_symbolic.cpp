#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

#include "quermass/formula_poly.hpp"

using namespace quermass;

namespace {

const Atom kRho = Atom::rho();
const Atom kH = Atom::width();

FormulaPoly av(const Atom& a) { return FormulaPoly::atom(a); }

}  // namespace

TEST_CASE("atoms are structural and bounds-checked") {
    CHECK(Atom::mci_proj(2, 1) == Atom::mci_proj(2, 1));
    CHECK(Atom::mci_proj(2, 1) != Atom::mci_body(2, 1));
    CHECK(Atom::quermass(3, 3).str() == "W(3,3)");
    CHECK(Atom::mci_proj(1, 0).str() == "M'(1,0)");
    CHECK(Atom::vol_proj(1).str() == "V'_1");
    CHECK_THROWS_AS(Atom::mci_proj(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Atom::mci_flat(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(Atom::quermass(3, 4), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    FormulaPoly rho = av(kRho), h = av(kH);
    CHECK((rho + h) * (rho - h) == rho * rho - h * h);
    FormulaPoly p = rho * h + FormulaPoly{PiScalar::pi()};
    CHECK(p + FormulaPoly{} == p);
    FormulaPoly lhs = (PiScalar::pi_power(1, Rational(2)) * rho) * (PiScalar(Rational(3)) * h);
    CHECK(lhs == PiScalar::pi_power(1, Rational(6)) * (rho * h));
    CHECK((p - p).is_zero());
}

TEST_CASE("substitution") {
    SECTION("rewrites a flattened atom") {
        FormulaPoly p = PiScalar(Rational(2)) * av(Atom::mci_flat(3, 2));
        std::map<Atom, FormulaPoly> b{
            {Atom::mci_flat(3, 2), PiScalar(Rational(2)) * av(Atom::mci_proj(2, 1))}};
        CHECK(p.substitute(b) == PiScalar(Rational(4)) * av(Atom::mci_proj(2, 1)));
    }
    SECTION("identity binding leaves the polynomial unchanged") {
        FormulaPoly p = av(kRho) * av(kH) + PiScalar::pi() * av(kRho);
        CHECK(p.substitute({}) == p);
        CHECK(p.substitute({{kRho, av(kRho)}}) == p);
    }
    SECTION("annihilation") {
        FormulaPoly p = av(kRho) * av(kH);
        CHECK(p.substitute({{kRho, FormulaPoly{}}}).is_zero());
    }
    SECTION("cyclic bindings are rejected") {
        std::map<Atom, FormulaPoly> b{{kRho, av(kRho) + av(kH)}};
        CHECK_THROWS_AS(av(kRho).substitute(b), std::invalid_argument);
        std::map<Atom, FormulaPoly> b2{
            {kRho, av(kH)},
            {kH, av(kRho)}};
        CHECK_THROWS_AS(av(kRho).substitute(b2), std::invalid_argument);
    }
}

TEST_CASE("numeric evaluation") {
    const double pi = std::numbers::pi;
    SECTION("pi floats at the last step") {
        FormulaPoly p = PiScalar::pi() * av(kRho);
        CHECK(p.eval({{kRho, 2.0}}) == Catch::Approx(2 * pi).epsilon(1e-15));
        CHECK(FormulaPoly{PiScalar::pi_power(2, Rational(2))}.eval({}) ==
              Catch::Approx(2 * pi * pi).epsilon(1e-15));
    }
    SECTION("case-2 instance of the fixed-subspace evaluator") {
        Atom v = Atom::vol_proj(1), m = Atom::mci_proj(1, 0);
        FormulaPoly p = PiScalar(Rational(-2)) * av(v) + PiScalar::pi() * (av(m) * av(kH)) +
                        PiScalar::pi() * (av(m) * av(kRho));
        double got = p.eval({{v, 2.0}, {m, 2.0}, {kH, 2.0}, {kRho, 0.5}});
        CHECK(got == Catch::Approx(-4 + 4 * pi + pi).epsilon(1e-15));
    }
    SECTION("unbound atoms are named") {
        FormulaPoly p = av(Atom::mci_proj(2, 1));
        CHECK_THROWS_WITH(p.eval({}), Catch::Matchers::ContainsSubstring("M'(2,1)"));
    }
}

TEST_CASE("equality is normalized-term-map equality") {
    FormulaPoly rho = av(kRho), h = av(kH);
    FormulaPoly expanded = (rho + h) * (rho + h);
    FormulaPoly manual = rho * rho + PiScalar(Rational(2)) * (rho * h) + h * h;
    CHECK(expanded == manual);
    CHECK(rho != h);
}

TEST_CASE("canonical serialization") {
    Atom v = Atom::vol_proj(1), m = Atom::mci_proj(1, 0);
    FormulaPoly p = PiScalar(Rational(-2)) * av(v) + PiScalar::pi() * (av(m) * av(kH)) +
                    PiScalar::pi() * (av(m) * av(kRho));
    CHECK(p.str() == "(-2)*V'_1 + (pi)*M'(1,0)*h + (pi)*M'(1,0)*rho");
    CHECK(FormulaPoly{}.str() == "0");
    CHECK((PiScalar(Rational(3)) * av(Atom::quermass(3, 3))).str() == "(3)*W(3,3)");
    FormulaPoly sq = av(kRho) * av(kRho);
    CHECK(sq.str() == "(1)*rho^2");
}

namespace {

std::vector<Atom> atom_pool() {
    return {Atom::rho(),          Atom::width(),        Atom::mci_proj(2, 0),
            Atom::mci_proj(2, 1), Atom::mci_body(3, 1), Atom::mci_flat(3, 2),
            Atom::vol_proj(2),    Atom::quermass(3, 2), Atom::quermass_proj(2, 1)};
}

PiScalar random_coef(std::mt19937& rng) {
    std::uniform_int_distribution<int> numd(-6, 6), dend(1, 6), expd(0, 2);
    PiScalar c = PiScalar::pi_power(expd(rng), Rational(numd(rng), dend(rng)));
    if (c.is_zero()) c = PiScalar(Rational(1));
    return c;
}

FormulaPoly random_poly(std::mt19937& rng, const std::vector<Atom>& pool, int max_terms = 4) {
    std::uniform_int_distribution<int> ntermd(1, max_terms), natomd(0, 2), expd(1, 3);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    FormulaPoly p;
    int nt = ntermd(rng);
    for (int t = 0; t < nt; ++t) {
        Monomial m;
        int na = natomd(rng);
        for (int a = 0; a < na; ++a) m[pool[pick(rng)]] += expd(rng);
        p += FormulaPoly::monomial(m, random_coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("normalization is order-independent") {
    std::mt19937 rng(99);
    for (int it = 0; it < 200; ++it) {
        auto pool = atom_pool();
        std::vector<std::pair<Monomial, PiScalar>> terms;
        std::uniform_int_distribution<int> ntermd(1, 6), natomd(0, 3), expd(1, 3);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        int nt = ntermd(rng);
        for (int t = 0; t < nt; ++t) {
            Monomial m;
            int na = natomd(rng);
            for (int a = 0; a < na; ++a) m[pool[pick(rng)]] += expd(rng);
            terms.emplace_back(m, random_coef(rng));
        }
        FormulaPoly forward, shuffled;
        for (const auto& [m, c] : terms) forward += FormulaPoly::monomial(m, c);
        std::shuffle(terms.begin(), terms.end(), rng);
        for (const auto& [m, c] : terms) shuffled += FormulaPoly::monomial(m, c);
        REQUIRE(forward == shuffled);
        REQUIRE(forward.str() == shuffled.str());
    }
}

TEST_CASE("substitution respects the ring structure") {
    // p, q over one atom family; bindings replace those atoms with
    // polynomials over a disjoint family.
    std::mt19937 rng(2024);
    std::vector<Atom> src{Atom::mci_flat(3, 0), Atom::mci_flat(3, 1), Atom::mci_flat(3, 2)};
    std::vector<Atom> dst{Atom::mci_proj(2, 0), Atom::mci_proj(2, 1), Atom::vol_proj(2),
                          Atom::rho(), Atom::width()};
    for (int it = 0; it < 100; ++it) {
        FormulaPoly p = random_poly(rng, src), q = random_poly(rng, src);
        std::map<Atom, FormulaPoly> b;
        for (const auto& a : src) b.emplace(a, random_poly(rng, dst, 2));
        CHECK((p * q).substitute(b) == p.substitute(b) * q.substitute(b));
        CHECK((p + q).substitute(b) == p.substitute(b) + q.substitute(b));
    }
}

namespace {

// Sum of absolute term contributions: the natural scale for a cancellation-
// heavy evaluation.
double eval_abs(const FormulaPoly& p, const std::map<Atom, double>& b) {
    double s = 0;
    for (const auto& [m, c] : p.terms()) {
        double v = std::abs(c.to_double());
        for (const auto& [a, e] : m) v *= std::pow(std::abs(b.at(a)), e);
        s += v;
    }
    return s;
}

}  // namespace

TEST_CASE("eval composed with substitute equals eval with composed bindings") {
    std::mt19937 rng(512);
    std::vector<Atom> src{Atom::mci_flat(3, 0), Atom::mci_flat(3, 1), Atom::mci_flat(3, 2)};
    std::vector<Atom> dst{Atom::mci_proj(2, 0), Atom::mci_proj(2, 1), Atom::vol_proj(2),
                          Atom::rho(), Atom::width()};
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    for (int it = 0; it < 100; ++it) {
        FormulaPoly p = random_poly(rng, src);
        std::map<Atom, FormulaPoly> b;
        for (const auto& a : src) b.emplace(a, random_poly(rng, dst, 2));
        std::map<Atom, double> numeric;
        for (const auto& a : dst) numeric.emplace(a, val(rng));
        std::map<Atom, double> composed = numeric;
        for (const auto& a : src) composed[a] = b.at(a).eval(numeric);
        FormulaPoly substituted = p.substitute(b);
        double direct = substituted.eval(numeric);
        double via = p.eval(composed);
        double scale = std::max(1.0, eval_abs(substituted, numeric));
        CHECK(std::abs(direct - via) <= 1e-12 * scale);
    }
}

TEST_CASE("exponent guard") {
    FormulaPoly rho = av(kRho);
    FormulaPoly p = rho.pow(32);
    CHECK_THROWS_AS(p * p * p, std::domain_error);
}
