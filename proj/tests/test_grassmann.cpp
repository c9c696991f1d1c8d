#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "quermass/grassmann.hpp"

using namespace quermass;

namespace {

const double kPi = std::numbers::pi;

SupportBody bumpy3d(double c = 0.08) {
    return SupportBody::odd_harmonic_3d(1.0, {{3, 2, c}});
}

double proj_area(const SupportBody& body, const SubspaceFrame& f) {
    static const QuadratureGrid grid = QuadratureGrid::circle(32);
    return volume(project(body, f), grid);
}

double proj_perimeter(const SupportBody& body, const SubspaceFrame& f) {
    static const QuadratureGrid grid = QuadratureGrid::circle(32);
    return mean_curvature_integral(project(body, f), 0, grid);
}

}  // namespace

TEST_CASE("sampled frames are orthonormal and deterministic") {
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (uint64_t i = 0; i < 20; ++i) {
                auto f = sample_subspace(n, r, 42, i);
                REQUIRE(f.ambient_dim() == n);
                REQUIRE(f.rank() == r);
                CHECK(f.gram_error() < 1e-12);
            }
    SECTION("fixed seed reproduces the frame sequence bit-for-bit") {
        for (uint64_t i = 0; i < 10; ++i) {
            auto a = sample_subspace(4, 2, 7, i);
            auto b = sample_subspace(4, 2, 7, i);
            CHECK(a.basis() == b.basis());
        }
        CHECK(sample_subspace(4, 2, 7, 0).basis() != sample_subspace(4, 2, 7, 1).basis());
        CHECK(sample_subspace(4, 2, 7, 0).basis() != sample_subspace(4, 2, 8, 0).basis());
    }
    CHECK_THROWS_AS(sample_subspace(3, 3, 1), std::domain_error);
}

TEST_CASE("line statistics are rotation invariant") {
    // squared projection of a fixed unit vector onto a random line has mean 1/n
    for (int n : {3, 4}) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
        a[0] = 0.6;
        a[n - 1] = 0.8;
        auto fn = [&](const SubspaceFrame& f) {
            double d = f.basis().col(0).dot(a);
            return d * d;
        };
        McEstimate e = mc_frame_mean(fn, n, 1, 100000, 2024);
        CHECK(std::abs(e.mean - 1.0 / n) <= 4 * e.standard_error);
        CHECK(e.standard_error > 0);
    }
}

TEST_CASE("constant integrands integrate to the grassmannian measure") {
    auto one = [](const SubspaceFrame&) { return 1.0; };
    McEstimate e = mc_grassmann_integral(one, 3, 2, 1000, 5);
    CHECK_THAT(e.mean, Catch::Matchers::WithinRel(2 * kPi, 1e-13));
    CHECK(e.standard_error < 1e-13);
}

TEST_CASE("ball projection integrals hit closed forms") {
    auto ball = SupportBody::ball(1.0, 3);
    SECTION("area integrand: every projection is a unit disc") {
        auto fn = [&](const SubspaceFrame& f) { return proj_area(ball, f); };
        McEstimate e = mc_grassmann_integral(fn, 3, 2, 20000, 11);
        double expected = 2 * kPi * kPi;
        CHECK(std::abs(e.mean - expected) <= 4 * e.standard_error + 1e-9 * expected);
    }
    SECTION("transfer instance: perimeter integral equals pi M_1") {
        auto fn = [&](const SubspaceFrame& f) { return proj_perimeter(ball, f); };
        McEstimate e = mc_grassmann_integral(fn, 3, 2, 20000, 12);
        double rhs = kPi * mean_curvature_integral(ball, 1);
        CHECK_THAT(rhs, Catch::Matchers::WithinRel(4 * kPi * kPi, 1e-10));
        CHECK(std::abs(e.mean - rhs) <= 4 * e.standard_error + 1e-9 * rhs);
    }
}

TEST_CASE("barbier makes constant-width perimeters a constant integrand") {
    auto body = bumpy3d(0.05);
    auto fn = [&](const SubspaceFrame& f) { return proj_perimeter(body, f); };
    McEstimate e = mc_grassmann_integral(fn, 3, 2, 5000, 21);
    double expected = 2 * kPi * grassmann_measure(3, 2).to_double();  // width 2
    CHECK(std::abs(e.mean - expected) <= 4 * e.standard_error + 1e-8 * expected);
}

TEST_CASE("projection volume integral against the curvature route") {
    auto body = bumpy3d();
    auto fn = [&](const SubspaceFrame& f) { return proj_area(body, f); };
    McEstimate e = mc_grassmann_integral(fn, 3, 2, 100000, 31);
    double rhs = (kPi / 2) * mean_curvature_integral(body, 0);
    CHECK(e.standard_error > 0);
    CHECK(std::abs(e.mean - rhs) <= 4 * e.standard_error + 1e-9 * rhs);
}

TEST_CASE("projection volume transfer holds from 4-space") {
    // every line projection of the unit 4-ball is a segment of length 2, so
    // the integral is 2 m(G_{1,3}) = 2 pi^2; the transfer coefficient route
    // gives M(4,2) of the boundary, which is O_3 = 2 pi^2 exactly
    auto ball4 = SupportBody::ball(1.0, 4);
    auto fn = [&](const SubspaceFrame& f) { return volume(project(ball4, f)); };
    McEstimate e = mc_grassmann_integral(fn, 4, 1, 2000, 3);
    double expected = sphere_area(3).to_double();
    CHECK(std::abs(e.mean - expected) <= 4 * e.standard_error + 1e-9 * expected);
}

TEST_CASE("kubota cross-check fixtures") {
    SECTION("unit ball in 3-space, both projection ranks") {
        auto ball = SupportBody::ball(1.0, 3);
        for (int r : {1, 2}) {
            auto rep = kubota_check(ball, r, 20000, 42);
            INFO(to_jsonl(rep));
            CHECK(rep.verdict == "pass");
        }
    }
    SECTION("unit disc: W_1 = pi") {
        auto rep = kubota_check(SupportBody::ball(1.0, 2), 1, 20000, 43);
        CHECK(rep.verdict == "pass");
        CHECK(std::stod(rep.rhs) == Catch::Approx(kPi).epsilon(1e-10));
    }
    SECTION("planar constant-width body: W_1 = pi by Barbier") {
        auto body = SupportBody::odd_harmonic_2d(1.0, {{3, 0.1, 0.0}});
        auto rep = kubota_check(body, 1, 20000, 44);
        CHECK(rep.verdict == "pass");
        CHECK(std::stod(rep.rhs) == Catch::Approx(kPi).epsilon(1e-10));
    }
    CHECK_THROWS_AS(kubota_check(SupportBody::ball(1.0, 3), 3, 100, 1), std::domain_error);
}

TEST_CASE("standard error scales as one over sqrt samples") {
    auto body = bumpy3d();
    auto fn = [&](const SubspaceFrame& f) { return proj_area(body, f); };
    std::vector<double> logn, logse;
    for (uint64_t n : {1000u, 10000u, 100000u}) {
        McEstimate e = mc_grassmann_integral(fn, 3, 2, n, 77);
        REQUIRE(e.standard_error > 0);
        logn.push_back(std::log10(static_cast<double>(n)));
        logse.push_back(std::log10(e.standard_error));
    }
    // least-squares slope over the three decades
    double mx = (logn[0] + logn[1] + logn[2]) / 3, my = (logse[0] + logse[1] + logse[2]) / 3;
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
        num += (logn[i] - mx) * (logse[i] - my);
        den += (logn[i] - mx) * (logn[i] - mx);
    }
    double slope = num / den;
    CHECK(slope == Catch::Approx(-0.5).margin(0.05));
}

TEST_CASE("estimates are invariant under a fixed rotation of the body") {
    auto body = bumpy3d();
    Eigen::MatrixXd q(3, 3);
    q << 0, 1, 0, 0, 0, 1, 1, 0, 0;  // coordinate rotation
    auto rotated = project(body, SubspaceFrame::checked(q));
    auto fn_a = [&](const SubspaceFrame& f) { return proj_area(body, f); };
    auto fn_b = [&](const SubspaceFrame& f) { return proj_area(rotated, f); };
    McEstimate ea = mc_grassmann_integral(fn_a, 3, 2, 30000, 123);
    McEstimate eb = mc_grassmann_integral(fn_b, 3, 2, 30000, 456);
    double band = 4 * std::hypot(ea.standard_error, eb.standard_error) + 1e-9 * std::abs(ea.mean);
    CHECK(std::abs(ea.mean - eb.mean) <= band);
}

TEST_CASE("estimates are identical for any worker count") {
    auto body = bumpy3d();
    auto fn = [&](const SubspaceFrame& f) { return proj_area(body, f); };
    McEstimate e1 = mc_grassmann_integral(fn, 3, 2, 5000, 7, 1);
    McEstimate e2 = mc_grassmann_integral(fn, 3, 2, 5000, 7, 2);
    McEstimate e8 = mc_grassmann_integral(fn, 3, 2, 5000, 7, 8);
    CHECK(e1.mean == e2.mean);
    CHECK(e1.mean == e8.mean);
    CHECK(e1.standard_error == e2.standard_error);
    CHECK(e1.standard_error == e8.standard_error);
}

TEST_CASE("non-finite integrands abort with the frame echoed") {
    auto fn = [](const SubspaceFrame&) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_WITH((mc_frame_mean(fn, 3, 2, 10, 1)),
                      Catch::Matchers::ContainsSubstring("frame"));
}
