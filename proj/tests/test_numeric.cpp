#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lerchq/divisor_table.hpp"
#include "lerchq/errors.hpp"
#include "lerchq/lerch_coeffs.hpp"
#include "lerchq/numeric.hpp"
#include "lerchq/qseries.hpp"

using namespace lerchq;

TEST_CASE("theta3 point values and the theta4 shift identity")
{
    CHECK(std::abs(theta3_num(cd(0, 0), cd(0, 0)) - 1.0) == 0.0);
    CHECK(std::abs(theta3_num(cd(0, 0), cd(0.1, 0)) - 1.200200002) < 1e-9);
    CHECK(std::abs(theta4_num(cd(kPi / 2, 0), cd(0.3, 0)) - theta3_num(cd(0, 0), cd(0.3, 0))) < 1e-14);
    CHECK_THROWS_AS(theta3_num(cd(0, 0), cd(1.0, 0.2)), NomeOutsideDisk);
}

TEST_CASE("theta3 periodicity in v")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cd q(0.2, 0.1);
    for (int i = 0; i < 10; ++i) {
        cd v(u(rng), 0.4 * u(rng));
        CHECK(std::abs(theta3_num(v + kPi, q) - theta3_num(v, q)) < 1e-13);
    }
}

TEST_CASE("eta product value against the independent log-sum route")
{
    cd eta = eta_num(cd(0.1, 0.0), 1e-15);
    CHECK(std::abs(eta - cd(0.890010099998999, 0.0)) < 1e-13);

    double logsum = 0.0;
    for (int n = 1; n < 300; ++n) logsum += std::log(1.0 - std::pow(0.1, n));
    CHECK(std::abs(std::real(eta) - std::exp(logsum)) < 1e-14);
}

TEST_CASE("Dedekind eta functional equation, fixed point and seeded grid")
{
    cd i(0.0, 1.0);
    CHECK(std::abs(eta_dedekind_num(-1.0 / i) - std::sqrt(-i * i) * eta_dedekind_num(i)) < 1e-14);

    std::mt19937_64 rng(20260808u);
    std::uniform_real_distribution<double> ux(-0.45, 0.45), uy(0.5, 2.0);
    for (int k = 0; k < 10; ++k) {
        cd z(ux(rng), uy(rng));
        cd lhs = eta_dedekind_num(-1.0 / z);
        cd rhs = std::sqrt(-i * z) * eta_dedekind_num(z);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);
    }
}

TEST_CASE("E and beta point values; the reduction and the quadrature agree")
{
    CHECK(erf_e(0.0) == 0.0);
    CHECK(beta_num(0.0) == 1.0);
    CHECK(std::abs(beta_num(0.0, BetaRoute::Quadrature) - 1.0) < 1e-13);
    // frozen from the quadrature oracle; equals erfc(sqrt(pi))
    CHECK(std::abs(beta_num(1.0, BetaRoute::Quadrature) - 0.012188882184803) < 1e-12);
    for (double x : {0.0, 0.25, 1.0, 4.0}) {
        CHECK(std::abs(beta_num(x, BetaRoute::Quadrature) - (1.0 - erf_e(std::sqrt(x)))) < 1e-12);
        CHECK(std::abs(beta_num(x, BetaRoute::Reduction) - (1.0 - erf_e(std::sqrt(x)))) < 1e-14);
    }
}

TEST_CASE("complex erf agrees with the real path on the axis and is odd")
{
    for (double x : {0.1, 0.9, 2.2, 4.0}) {
        CHECK(std::abs(erf_e(cd(x, 0.0)) - erf_e(x)) < 1e-12);
        CHECK(std::abs(erf_e(cd(-x, 0.0)) + erf_e(x)) < 1e-12);
    }
}

TEST_CASE("Poisson summation against theta3 at w = i")
{
    // sum_n exp(-i (t + 2 pi n)^2 / (8 pi w)) = sqrt(-2 i w) theta3(t/2, e(w))
    cd w(0.0, 1.0);
    for (double t : {0.0, 1.0, 2.5}) {
        cd lhs(0.0, 0.0);
        for (long n = -40; n <= 40; ++n) {
            double s = t + kTwoPi * static_cast<double>(n);
            lhs += std::exp(-cd(0.0, 1.0) * (s * s) / (8.0 * kPi * w));
        }
        cd rhs = std::sqrt(-2.0 * cd(0.0, 1.0) * w) * theta3_num(cd(t / 2.0, 0.0), e_of(w));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("Zwegers theta is odd in v")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    cd tau(0.1, 1.1);
    for (int k = 0; k < 8; ++k) {
        cd v(u(rng), u(rng));
        CHECK(std::abs(theta_zw_num(v, tau) + theta_zw_num(-v, tau)) < 1e-12);
    }
}

TEST_CASE("R truncation stability at doubled term counts")
{
    cd tau(0.0, 1.0), z(0.0, 0.3);
    Certified c1 = r_zw_certified(z, tau, 1e-13);
    Certified c2 = r_zw_certified(z, tau, 1e-13, 2 * c1.terms);
    CHECK(std::abs(c1.value - c2.value) < 1e-12);
}

TEST_CASE("R_f is real on the imaginary axis and both conventions are consistent")
{
    cd z(0.0, 1.0);
    cd v = r_f_num(z);
    CHECK(std::abs(std::imag(v)) < 1e-14);
    // positive-only convention differs by the negative branch only
    cd vp = r_f_num(z, 1e-13, RfConvention::PositiveOnly);
    CHECK(std::abs(std::imag(vp)) < 1e-14);
}

TEST_CASE("mu: completion pieces evaluate and guards fire")
{
    ZwegersParams p{cd(0.12, 0.30), cd(-0.08, 0.22), cd(0.05, 1.0)};
    cd m = m_num(p);
    CHECK(std::isfinite(std::real(m)));
    CHECK(std::isfinite(std::imag(m)));

    // theta(v;tau) vanishes at the lattice point v = 0
    ZwegersParams bad{cd(0.1, 0.4), cd(0.0, 0.0), cd(0.0, 1.0)};
    CHECK_THROWS_AS(mu_num(bad), ThetaZero);

    // 1 - a q^n = 0 at u = 0, n = 0
    ZwegersParams pole{cd(0.0, 0.0), cd(-0.08, 0.22), cd(0.05, 1.0)};
    CHECK_THROWS_AS(mu_num(pole), PoleHit);
}

TEST_CASE("S family: n = 0 term dominates as q -> 0")
{
    LerchParams p;
    p.a = 1.0;
    p.b = 1.0;
    cd z(0.0, 6.0);  // |q| = e^{-12 pi}
    cd s = lerch_num(LerchFamily::S, p, z);
    CHECK(std::abs(s - 0.5) < 1e-15);
}

TEST_CASE("fc at z = 0.8i matches the exact series evaluated at the nome")
{
    DivisorTable table(120);
    cd z(0.0, 0.8);
    LerchParams p;
    p.a = 3.0;
    p.b = 1.0;
    p.c = 2.0;
    cd numeric = lerch_num(LerchFamily::Fc, p, z, 1e-14);
    cd series = fc_series(3, 1, 2, 120, table).eval_nome(z);
    CHECK(std::abs(numeric - series) < 1e-10);

    cd fs_numeric = lerch_num(LerchFamily::Fs, p, z, 1e-14);
    cd fs_exact = fs_series(3, 1, 2, 120, table).eval_nome(z);
    CHECK(std::abs(fs_numeric - fs_exact) < 1e-10);
}

TEST_CASE("the general family specializes to fc")
{
    cd z(0.05, 0.9);
    LerchParams pc;
    pc.a = 2.0;
    pc.b = 1.0;
    pc.c = 2.0;
    LerchParams pg = pc;
    pg.A = 1.0;
    pg.B = 0.0;
    pg.w = 2.0 * z;
    cd lhs = lerch_num(LerchFamily::Fc, pc, z);
    cd rhs = lerch_num(LerchFamily::General, pg, z, 1e-13, /*alternating=*/true);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("eta(q) f(q) equals the bilateral Watson sum at q = 0.1")
{
    cd q(0.1, 0.0);
    cd lhs = eta_num(q) * mock_num(MockName::F, q);
    cd rhs(0.0, 0.0);
    for (long n = -60; n <= 60; ++n) {
        double nn = static_cast<double>(n);
        cd t = std::pow(q, 1.5 * nn * nn + 0.5 * nn) / (1.0 + std::pow(q, nn));
        rhs += (n % 2 != 0) ? -t : t;
    }
    rhs *= 2.0;
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("mock f at e^{-2 pi}, on the unit circle, and beyond it")
{
    cd q = std::exp(cd(-kTwoPi, 0.0));
    CHECK(std::abs(mock_num(MockName::F, q) - 1.00186050) < 1e-7);
    CHECK_THROWS_AS(mock_num(MockName::F, cd(0.6, 0.8)), NomeOnUnitCircle);

    // f(1/q) for q = 0.2: direct summation at 5 against the reciprocal-nome series at 0.2
    cd outside = mock_num(MockName::F, cd(5.0, 0.0));
    cd via_series = f_recip_series(60).eval(cd(0.2, 0.0));
    CHECK(std::abs(outside - via_series) < 1e-12);

    CHECK_THROWS_AS(mock_num(MockName::Phi, cd(2.0, 0.0)), NomeOutsideDisk);
}

TEST_CASE("phi and psi direct sums against their exact series")
{
    cd q(0.25, 0.0);
    CHECK(std::abs(mock_num(MockName::Phi, q) - phi_series(90).eval(q)) < 1e-12);
    CHECK(std::abs(mock_num(MockName::Psi, q) - psi_series(90).eval(q)) < 1e-12);
}

TEST_CASE("certified truncation: doubling terms moves the value less than the bound")
{
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> ua(0.5, 3.0), uy(0.6, 1.4), ux(-0.3, 0.3);
    for (int i = 0; i < 20; ++i) {
        cd z(ux(rng), uy(rng));
        cd q = e_of(z);
        cd v(ux(rng), 0.3 * ux(rng));
        int which = i % 10;
        Certified c1, c2;
        switch (which) {
            case 0:
                c1 = theta3_certified(v, q, 1e-12);
                c2 = theta3_certified(v, q, 1e-12, 2 * c1.terms);
                break;
            case 1:
                c1 = theta4_certified(v, q, 1e-12);
                c2 = theta4_certified(v, q, 1e-12, 2 * c1.terms);
                break;
            case 2:
                c1 = eta_certified(q, 1e-12);
                c2 = eta_certified(q, 1e-12, 2 * c1.terms);
                break;
            case 3: {
                LerchParams p;
                p.a = ua(rng);
                p.b = 1.0;
                p.c = 2.0;
                c1 = lerch_certified(LerchFamily::Fc, p, z, 1e-11);
                c2 = lerch_certified(LerchFamily::Fc, p, z, 1e-11, false, 2 * c1.terms);
                break;
            }
            case 4: {
                LerchParams p;
                p.a = ua(rng);
                p.b = 0.5;
                c1 = lerch_certified(LerchFamily::S, p, z, 1e-11);
                c2 = lerch_certified(LerchFamily::S, p, z, 1e-11, false, 2 * c1.terms);
                break;
            }
            case 5: {
                cd q5(0.3 * uy(rng), 0.1);
                c1 = mock_certified(MockName::F, q5, 1e-12);
                c2 = mock_certified(MockName::F, q5, 1e-12, 2 * c1.terms);
                break;
            }
            case 6:
                c1 = theta_zw_certified(v, z, 1e-12);
                c2 = theta_zw_certified(v, z, 1e-12, 2 * c1.terms);
                break;
            case 7:
                c1 = r_zw_certified(v, z, 1e-11);
                c2 = r_zw_certified(v, z, 1e-11, 2 * c1.terms);
                break;
            case 8: {
                ZwegersParams p{cd(0.11, 0.21), v, z};
                c1 = mu_certified(p, 1e-11);
                c2 = mu_certified(p, 1e-11, 2 * c1.terms);
                break;
            }
            case 9:
                c1 = r_f_certified(z, 1e-11);
                c2 = r_f_certified(z, 1e-11, RfConvention::Bilateral, 2 * c1.terms);
                break;
        }
        CHECK(std::abs(c2.value - c1.value) <= c1.bound + 1e-15);
    }
}
