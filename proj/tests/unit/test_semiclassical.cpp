#include <gtest/gtest.h>

#include <cmath>

#include "xps/semiclassical.hpp"

using namespace xps;

namespace {

// odd, and flat near the origin so the reconstruction constant vanishes
FluctuationDensity wiggle(double A, double w, double s = 20.0) {
    FluctuationDensity d;
    d.n_fl = [=](double E) { return A * std::sin(w * E) * (1.0 - std::exp(-std::pow(E / s, 4))); };
    return d;
}

std::vector<double> grid(double a, double b, double h) {
    std::vector<double> g;
    for (double E = a; E <= b + 1e-12; E += h) g.push_back(E);
    return g;
}

}  // namespace

TEST(Counting, BerryKeating) {
    EXPECT_NEAR(count_bk(kTwoPi), 0.0, 1e-14);
    EXPECT_NEAR(count_bk(2 * kTwoPi), 2.0 * (std::log(2.0) - 1.0) + 1.0, 1e-14);
    EXPECT_NEAR(count_bk(100.0), 29.1279, 1e-3);
    EXPECT_NEAR(count_bk(100.0), count_smooth(100.0), 0.2);
    EXPECT_THROW(count_bk(0.0), std::domain_error);
}

TEST(Counting, SmoothCount) {
    EXPECT_NEAR(count_smooth(1e-9), 1.0, 1e-8);
    EXPECT_NEAR(count_smooth(100.0), 29.0026, 1e-3);
    // first smooth zero sits where theta/pi + 3/2 passes 1
    EXPECT_NEAR(count_smooth(14.517919628262234, 1.5), 1.0, 1e-10);
    EXPECT_THROW(count_smooth(-1.0), std::domain_error);
}

TEST(Counting, BkMinusSmoothShrinks) {
    for (double E = 100.0; E <= 400.0; E += 25.0)
        EXPECT_LE(std::abs(count_bk(E) - count_smooth(E) - 0.125), 0.05) << E;
    for (double E = 20.0; E <= 400.0; E += 5.0)
        EXPECT_LE(std::abs(count_bk(E) - count_smooth(E)), 0.2) << E;
}

TEST(Counting, Connes) {
    EXPECT_NEAR(count_connes(kTwoPi, std::exp(1.0)), 3.0, 1e-12);
    EXPECT_NEAR(count_connes(kTwoPi, 1.0), 1.0, 1e-12);
    EXPECT_NEAR(count_connes(2 * kTwoPi, 10.0), 4 * std::log(10.0) - 2 * (std::log(2.0) - 1), 1e-12);
    EXPECT_THROW(count_connes(1.0, 0.0), std::domain_error);
}

TEST(PrimeSum, Basics) {
    EXPECT_EQ(nfl_prime_sum(0.0, 100, 3), 0.0);
    EXPECT_NEAR(nfl_prime_sum(7.3, 2, 1), -std::sin(7.3 * std::log(2.0)) / (kPi * std::sqrt(2.0)),
                1e-15);
    EXPECT_EQ(primes_up_to(30), (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
    EXPECT_THROW(nfl_prime_sum(1.0, 1, 1), std::invalid_argument);
}

TEST(Intersections, ConstantBoundaries) {
    const auto bk = bk_boundary();
    const auto ip = solve_intersections(bk, 2 * kTwoPi);
    EXPECT_NEAR(ip.x_M, 2.0, 1e-12);
    EXPECT_NEAR(ip.p_M, 4 * kPi, 1e-12);
    EXPECT_NEAR(ip.x_I, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(ip.x_I / bk.l_x, ip.p_I / bk.l_p, 1e-12);
    EXPECT_FALSE(ip.multivalued);

    PhaseBoundary sc = bk;
    const double c = 1.3;
    sc.p_cl = [&](double) { return c * kTwoPi; };
    sc.x_cl = [&](double) { return c * 1.0; };
    EXPECT_NEAR(solve_intersections(sc, 30.0).x_M, 30.0 / (c * kTwoPi), 1e-12);
    EXPECT_THROW(solve_intersections(sc, 7.0), no_intersection);
}

TEST(Intersections, PerturbedResiduals) {
    PhaseBoundary b = bk_boundary();
    b.p_cl = [](double x) { return kTwoPi * (1.0 + 0.05 * std::sin(3.0 * (x - 1.0))); };
    b.x_cl = [](double p) { return 1.0 + 0.04 * std::sin(0.5 * (p - kTwoPi)); };
    for (double E : {9.0, 20.0, 41.0}) {
        const auto ip = solve_intersections(b, E);
        EXPECT_LE(std::abs(ip.x_M * b.p_cl(ip.x_M) - E), 1e-9 * E);
        EXPECT_LE(std::abs(b.x_cl(ip.p_M) * ip.p_M - E), 1e-9 * E);
        EXPECT_LE(std::abs(ip.x_I * ip.p_I - E), 1e-9 * E);
    }
}

TEST(Intersections, MultivaluedFlagged) {
    PhaseBoundary b = bk_boundary();
    b.p_cl = [](double x) { return kTwoPi * (1.0 + 0.9 * std::sin(4.0 * (x - 1.0))); };
    EXPECT_TRUE(solve_intersections(b, 12.0).multivalued);
}

TEST(Intersections, RejectsBadScales) {
    PhaseBoundary b = bk_boundary(1.0, 6.0);
    EXPECT_THROW(solve_intersections(b, 30.0), std::invalid_argument);
}

TEST(Fluctuation, ConstantBoundaries) {
    for (double E : {7.0, 30.0, 95.0}) EXPECT_NEAR(nfl_semiclassical(bk_boundary(), E), 0.0, 1e-10);
    PhaseBoundary sc = bk_boundary();
    const double c = 1.2;
    sc.p_cl = [&](double) { return c * kTwoPi; };
    sc.x_cl = [&](double) { return c; };
    for (double E : {10.0, 40.0}) EXPECT_NEAR(nfl_semiclassical(sc, E), -E / kPi * std::log(c), 1e-9);
}

TEST(Fluctuation, DerivativeIdentity) {
    PhaseBoundary b = bk_boundary();
    b.p_cl = [](double x) { return kTwoPi * (1.0 + 0.05 * std::sin(3.0 * (x - 1.0))); };
    b.x_cl = [](double p) { return 1.0 + 0.04 * std::sin(0.5 * (p - kTwoPi)); };
    const double h = 1e-4;
    for (double E : {10.0, 22.0, 37.0}) {
        const double fd = (nfl_semiclassical(b, E + h) - nfl_semiclassical(b, E - h)) / (2 * h);
        EXPECT_NEAR(fd, nfl_semiclassical_prime(b, E), 1e-4) << E;
    }
}

TEST(Reconstruction, ZeroDensityGivesBk) {
    FluctuationDensity d;
    d.n_fl = [](double) { return 0.0; };
    const auto b = boundary_from_nfl(d, 1.0, kTwoPi, grid(1.0, 45.0, 0.25));
    for (double x : {0.5, 1.0, 3.0, 6.0}) EXPECT_NEAR(b.p_cl(x), kTwoPi, 1e-12);
    EXPECT_NEAR(nfl_semiclassical(b, 20.0), 0.0, 1e-10);
}

TEST(Reconstruction, LinearDensity) {
    const double eps = 0.01;
    FluctuationDensity d;
    d.n_fl = [=](double E) { return eps * E; };
    d.n_fl_prime = [=](double) { return eps; };
    const auto b = boundary_from_nfl(d, 1.0, kTwoPi, grid(1.0, 45.0, 0.25));
    EXPECT_NEAR(b.p_cl(3.0), kTwoPi * std::exp(-kPi * eps), 1e-12);
    const auto ip = solve_intersections(b, 30.0);
    EXPECT_NEAR(ip.x_M, 30.0 / kTwoPi * std::exp(kPi * eps), 1e-9);
}

TEST(Reconstruction, RoundTripAndSymmetry) {
    const auto g = grid(1.0, 45.0, 0.05);
    for (auto [A, w] : {std::pair{0.02, 0.3}, {0.01, 0.5}, {0.03, 0.2}}) {
        const auto d = wiggle(A, w);
        const auto b = boundary_from_nfl(d, 1.0, kTwoPi, g);
        for (double E = 10.0; E <= 40.0; E += 0.5) {
            EXPECT_NEAR(nfl_semiclassical(b, E), d.n_fl(E), 1e-3) << A << " " << E;
            const auto ip = solve_intersections(b, E);
            EXPECT_NEAR(b.p_cl(ip.x_M) / b.l_p, b.x_cl(ip.p_M) / b.l_x, 1e-9);
        }
    }
}

TEST(Reconstruction, MonotonicityViolationNamesInterval) {
    FluctuationDensity d;
    d.n_fl = [](double E) { return 0.3 * std::sin(E); };
    try {
        boundary_from_nfl(d, 1.0, kTwoPi, grid(1.0, 45.0, 0.25));
        FAIL() << "expected a monotonicity violation";
    } catch (const monotonicity_violation& e) {
        EXPECT_LT(e.E_lo, e.E_hi);
        EXPECT_NE(std::string(e.what()).find('['), std::string::npos);
    }
}
