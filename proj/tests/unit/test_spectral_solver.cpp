#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gaussian_pair.hpp"
#include "oracle_values.hpp"
#include "xps/spectral_solver.hpp"

using namespace xps;

namespace {

const double kSqrt2 = std::sqrt(2.0);

BoundarySpectrum gaussian_spectrum(const testsupport::Gaussian& a, const testsupport::Gaussian& b) {
    return make_custom([a](double E) { return a.hat(E); }, [b](double E) { return b.hat(E); });
}

}  // namespace

TEST(SIntegral, ConstantProductGivesHalf) {
    auto f = [](double) { return cplx(1.7); };
    for (double E : {-4.0, 0.0, 9.0}) EXPECT_LT(std::abs(s_integral(f, f, E) - 0.5 * 1.7 * 1.7), 1e-12);
}

TEST(SIntegral, TrapEntries) {
    const auto bs = make_trap(0.8, 1.1, 0.7, 0.2);
    for (double E : {-3.0, 0.5, 11.0}) {
        const auto s = s_matrix(bs, E);
        EXPECT_LT(std::abs(s.s_ab - 0.88 * std::exp(cplx(0, 0.5 * E))), 1e-14);
        EXPECT_EQ(s.s_ba, cplx(0.0));
        EXPECT_NEAR(s.s_aa.real(), 0.32, 1e-14);
        EXPECT_NEAR(s.s_bb.real(), 0.605, 1e-14);
    }
}

TEST(SIntegral, TrapShortcutMatchesRotatedQuadrature) {
    const double a0 = 0.8, b0 = 1.1, q = 0.5;
    auto a = [=](double E) { return a0 * std::exp(cplx(0, E * 0.7)); };
    auto b = [=](double E) { return b0 * std::exp(cplx(0, E * 0.2)); };
    HilbertOptions up;
    up.tail = TailModel::rotate;
    up.half_plane = +1;
    up.extension = [=](cplx z) { return a0 * b0 * std::exp(cplx(0, 1) * z * q); };
    HilbertOptions down = up;
    down.half_plane = -1;
    down.extension = [=](cplx z) { return a0 * b0 * std::exp(-cplx(0, 1) * z * q); };
    for (double E : {-2.0, 1.0, 6.5}) {
        EXPECT_LT(std::abs(s_integral(a, b, E, up) - a0 * b0 * std::exp(cplx(0, E * q))), 1e-8);
        EXPECT_LT(std::abs(s_integral(b, a, E, down)), 1e-8);
    }
}

TEST(SIntegral, BkSmoothClosedFormMatchesQuadrature) {
    const auto bs = make_bk_smooth(kSqrt2, kSqrt2);
    HilbertOptions up;
    up.tail = TailModel::rotate;
    up.half_plane = +1;
    up.extension = [](cplx z) { return 2.0 * phase_factor(z); };
    for (double E : {3.0, 14.0, 27.0}) {
        const cplx q = s_integral(bs.a_hat, bs.b_hat, E, up);
        EXPECT_LT(std::abs(q - s_matrix(bs, E).s_ab), 1e-6) << E;
    }
}

TEST(SIntegral, GaussianAgainstDoubleQuadrature) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 2; ++k) {
        const auto [a, b] = testsupport::random_pair(rng);
        const auto bs = gaussian_spectrum(a, b);
        for (double E : {-2.3, 0.4, 3.1}) {
            EXPECT_LT(std::abs(s_integral(bs.a_hat, bs.b_hat, E) - testsupport::s_direct(a, b, E)), 1e-7);
            const cplx shuffle = s_integral(bs.a_hat, bs.b_hat, E) + s_integral(bs.b_hat, bs.a_hat, -E) -
                                 bs.a_hat(E) * bs.b_hat(-E);
            EXPECT_LT(std::abs(shuffle), 1e-8);
        }
    }
}

TEST(SIntegral, SlowTailRaises) {
    auto f = [](double t) { return cplx(std::tanh(t)); };
    auto one = [](double) { return cplx(1.0); };
    EXPECT_THROW(s_integral(f, one, 0.0), tail_divergence);
}

TEST(Jost, TrapClosedForm) {
    const double a0 = 0.9, b0 = 1.3, q = 1.4;
    const auto bs = make_trap(a0, b0, q, 0.0);
    for (double E : {0.0, 2.2, 7.9}) {
        const cplx expect = 1.0 + std::pow(a0 * b0 / 2, 2) + a0 * b0 * std::exp(cplx(0, E * q));
        EXPECT_LT(std::abs(jost_F(bs, E) - expect), 1e-13);
    }
    const auto tm = make_trap(kSqrt2, -kSqrt2, 1.0, 0.0);
    EXPECT_LT(std::abs(jost_F(tm, 1.0) - 2.0 * (1.0 - std::exp(cplx(0, 1.0)))), 1e-13);
}

TEST(Jost, BkSmoothOmegaForm) {
    const double a0 = 1.2, b0 = 0.7, ab = a0 * b0;
    const auto bs = make_bk_smooth(a0, b0);
    for (double E : {1.0, 12.0, 40.0}) {
        const cplx op = omega_plus(E), om = omega_minus(-E);
        const cplx expect = 1.0 + ab * (op - om) + ab * ab / 4 - ab * ab * op * om;
        EXPECT_LT(std::abs(jost_F(bs, E) - expect), 1e-12);
    }
}

TEST(Jost, SymmetryAndUnimodularity) {
    std::mt19937_64 rng(11);
    const auto [ga, gb] = testsupport::random_pair(rng);
    const std::vector<BoundarySpectrum> pairs = {make_trap(0.8, 1.1, 0.7, 0.2),
                                                 make_bk_smooth(kSqrt2, kSqrt2),
                                                 make_bk_smooth(0.6, 1.9, 2.0, kPi),
                                                 gaussian_spectrum(ga, gb)};
    for (const auto& bs : pairs) {
        for (double E = -9.0; E <= 9.0; E += 1.7) {
            const auto j = jost(bs, E);
            EXPECT_LT(std::abs(std::conj(j.F) - j.F_neg), 1e-9);
            if (std::abs(j.F) > 1e-6) {
                EXPECT_NEAR(std::abs(j.C0 / j.C_inf), 1.0, 1e-9);
                EXPECT_LT(std::abs(j.C0 / j.C_inf - j.F / j.F_neg), 1e-12);
            }
        }
    }
}

TEST(Jost, ShuffleSolvesLinearSystem) {
    // with the scattering constants, (1+S_ab)A - S_aa B = C0 a^ and S_bb A + (1-S_ba) B = C0 b^
    const auto bs = make_bk_smooth(1.2, 0.7);
    for (double E : {3.0, 17.0}) {
        const auto j = jost(bs, E);
        const cplx a = bs.a_hat(E), b = bs.b_hat(E);
        EXPECT_LT(std::abs((1.0 + j.s.s_ab) * j.A - j.s.s_aa * j.B - j.C0 * a), 1e-12);
        EXPECT_LT(std::abs(j.s.s_bb * j.A + (1.0 - j.s.s_ba) * j.B - j.C0 * b), 1e-12);
    }
}

TEST(Jost, BoundStateConstants) {
    const auto tm = make_trap(kSqrt2, -kSqrt2, 1.0, 0.0);
    const auto j = jost(tm, kTwoPi);
    EXPECT_TRUE(j.bound);
    EXPECT_EQ(j.C0, cplx(0.0));
    EXPECT_LT(std::abs(j.A - j.s.s_aa), 1e-15);
    EXPECT_LT(std::abs(j.B - (1.0 + j.s.s_ab)), 1e-15);
    // the overlap constants solve the homogeneous system
    EXPECT_LT(std::abs((1.0 + j.s.s_ab) * j.A - j.s.s_aa * j.B), 1e-12);

    const auto sm = make_bk_smooth(kSqrt2, kSqrt2, 1.0, kTwoPi, Parity::plus, true);
    const auto js = jost(sm, oracle::smooth_zeros[1]);
    EXPECT_TRUE(js.bound);
    EXPECT_EQ(js.A, cplx(-1.0));
    EXPECT_EQ(js.B, cplx(1.0));
}

TEST(BoundStates, TrapSpectrum) {
    const auto minus = make_trap(kSqrt2, -kSqrt2, 1.0, 0.0);
    const auto z = find_bound_states(minus, 1.0, 20.0, 0.05);
    ASSERT_EQ(z.size(), 3u);
    for (int n = 1; n <= 3; ++n) EXPECT_NEAR(z[n - 1].E, kTwoPi * n, 1e-8);

    const auto plus = make_trap(kSqrt2, kSqrt2, 1.0, 0.0);
    const auto zp = find_bound_states(plus, 1.0, 20.0, 0.05);
    ASSERT_EQ(zp.size(), 3u);
    for (int n = 0; n < 3; ++n) EXPECT_NEAR(zp[n].E, kTwoPi * (n + 0.5), 1e-8);
}

TEST(BoundStates, GenericCouplingHasNone) {
    EXPECT_TRUE(find_bound_states(make_trap(0.7, 1.0, 1.0, 0.0), 1.0, 20.0, 0.05).empty());
    EXPECT_TRUE(find_bound_states(make_trap(0.0, 1.0, 1.0, 0.0), 1.0, 20.0, 0.05).empty());
}

TEST(BoundStates, SmoothZerosIdealised) {
    const auto sm = make_bk_smooth(kSqrt2, kSqrt2, 1.0, kTwoPi, Parity::plus, true);
    // (10, 30) also holds a fourth zero at 29.7385
    const auto z = find_bound_states(sm, 10.0, 30.0, 0.0, 1e-8, 2);
    ASSERT_EQ(z.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(z[k].E, oracle::smooth_zeros[k], 1e-8);
}

TEST(BoundStates, OmegaJostHasNearZerosBelowAxis) {
    // the full Omega form only touches zero up to O(1/E); its minima are
    // resonances slightly below the real axis
    const auto sm = make_bk_smooth(kSqrt2, kSqrt2);
    EXPECT_TRUE(find_bound_states(sm, 10.0, 30.0).empty());
    const auto z = find_bound_states(sm, 10.0, 30.0, 0.0, 1e-3);
    ASSERT_GE(z.size(), 3u);
    const double expect[] = {14.8908, 20.8291, 25.6092};
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(z[k].E, expect[k], 1e-3);
}

TEST(BoundStates, NoZerosInUpperHalfPlane) {
    const std::vector<BoundarySpectrum> pairs = {make_trap(kSqrt2, -kSqrt2, 1.0, 0.0),
                                                 make_trap(0.6, 1.3, 2.0, 0.5),
                                                 make_bk_smooth(kSqrt2, kSqrt2),
                                                 make_bk_smooth(kSqrt2, kSqrt2, 1.0, kTwoPi, Parity::plus, true)};
    for (const auto& bs : pairs)
        for (double re0 = 2.0; re0 < 40.0; re0 += 9.5)
            EXPECT_EQ(winding_number(bs, re0, re0 + 9.5, 0.05, 5.0), 0) << re0;
}

TEST(ScatteringPhase, Basics) {
    const auto tr = make_trap(0.8, 1.1, 1.0, 0.0);
    EXPECT_NEAR(scattering_phase(tr, kTwoPi), 0.0, 1e-12);
    EXPECT_NEAR(scattering_phase(make_bk_smooth(1.2, 0.7), 0.0), 0.0, 1e-14);
    EXPECT_THROW(scattering_phase(make_trap(kSqrt2, -kSqrt2, 1.0, 0.0), kTwoPi), bound_state_energy);

    // F ~ 2(1 + e^{2i theta}) = 4 cos(theta) e^{i theta}, so F/F(-E) ~ e^{2i theta}
    const auto sm = make_bk_smooth(kSqrt2, kSqrt2);
    const double d = std::remainder(scattering_phase(sm, 30.0) - 2.0 * theta(30.0), kTwoPi);
    EXPECT_LT(std::abs(d), 4.0 / 30.0 + 0.01);
}

TEST(ScatteringPhase, CurveIsContinuous) {
    const auto tr = make_trap(0.5, 1.0, 1.0, 0.0);
    std::vector<double> g;
    for (double E = 0.0; E <= 30.0; E += 0.05) g.push_back(E);
    const auto ph = scattering_phase_curve(tr, g);
    for (std::size_t i = 1; i < ph.size(); ++i) EXPECT_LT(std::abs(ph[i] - ph[i - 1]), 0.5);
}

TEST(Trap, WaveFunction) {
    const double qa = 1.0, qb = 0.0, E = kTwoPi;
    EXPECT_NEAR(std::abs(trap_wavefunction(kSqrt2, -kSqrt2, qa, qb, E, 1.7)), 1.0 / std::sqrt(1.7), 1e-14);
    EXPECT_EQ(trap_wavefunction(kSqrt2, -kSqrt2, qa, qb, E, 0.5), cplx(0.0));
    EXPECT_EQ(trap_wavefunction(kSqrt2, -kSqrt2, qa, qb, E, 3.0), cplx(0.0));
    const double Eoff = 4.0;
    const cplx F = 2.0 * (1.0 - std::exp(cplx(0, Eoff)));
    EXPECT_NEAR(std::abs(trap_wavefunction(kSqrt2, -kSqrt2, qa, qb, Eoff, 0.5)), std::abs(F) / std::sqrt(0.5),
                1e-13);
}

TEST(Spectrum, RealityDefect) {
    std::vector<double> g;
    for (double E = -20.0; E <= 20.0; E += 0.7) g.push_back(E);
    EXPECT_LT(reality_defect(make_bk_smooth(1.0, 1.0), g), 1e-10);
    EXPECT_LT(reality_defect(make_trap(1.0, 1.0, 0.3, -0.2), g), 1e-10);
}
