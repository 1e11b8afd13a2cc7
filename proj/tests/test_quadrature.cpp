#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lerchq/errors.hpp"
#include "lerchq/numeric.hpp"
#include "lerchq/quadrature.hpp"

using namespace lerchq;

TEST_CASE("Gaussian normalization on the real ray")
{
    ContourSpec spec;
    spec.direction = cd(1.0, 0.0);
    spec.truncation = 7.0;
    spec.tolerance = 1e-13;
    auto f = [](const cd& h) { return std::exp(-kPi * h * h); };
    QuadResult r = integrate_ray(f, spec);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    CHECK(r.error < 1e-12);
}

TEST_CASE("theta3 against the termwise sech transform")
{
    // int theta3(h, q) sech(h) dh = sum_n q^{n^2} int e^{2inh} sech(h) dh
    //                             = pi sum_n q^{n^2} sech(pi n)
    cd q(0.1, 0.0);
    ContourSpec spec;
    spec.truncation = 40.0;
    spec.tolerance = 1e-12;
    auto f = [&](const cd& h) { return theta3_num(h, q) * sech_stable(h); };
    QuadResult r = integrate_ray(f, spec);
    cd oracle(0.0, 0.0);
    for (long n = -8; n <= 8; ++n)
        oracle += std::pow(q, double(n * n)) / std::cosh(kPi * double(n));
    oracle *= kPi;
    CHECK(std::abs(r.value - oracle) < 1e-10);
}

TEST_CASE("rotating the ray inside the decay sector leaves the value unchanged")
{
    auto f = [](const cd& h) { return std::exp(-h * h); };
    ContourSpec real_ray;
    real_ray.truncation = 8.0;
    real_ray.tolerance = 1e-13;
    ContourSpec tilted;
    tilted.direction = std::polar(1.0, 0.35);
    tilted.truncation = 8.0;
    tilted.tolerance = 1e-13;
    QuadResult a = integrate_ray(f, real_ray);
    QuadResult b = integrate_ray(f, tilted);
    CHECK(std::abs(a.value - b.value) < 1e-11);
}

TEST_CASE("decay certificate refuses a real sec direction")
{
    // sec(h/(2w)) along the real ray with real w has no decay
    double rate = sec_ray_rate(cd(1.0, 0.0), cd(2.0, 0.0));
    CHECK(rate == 0.0);
    auto f = [](const cd&) { return cd(1.0, 0.0); };
    CHECK_THROWS_AS(choose_truncation(f, cd(1.0, 0.0), rate, 1e-9, 5.0), DecayCertificateFailed);
}

TEST_CASE("pole clearance check")
{
    // sec((h + shift)/scale) with scale = 2w places poles at 2w(pi/2 + k pi) - shift;
    // a real w and zero shift puts them on the real contour
    CHECK_THROWS_AS(check_sec_poles(cd(1.0, 0.0), cd(0.0, 0.0), cd(2.0, 0.0), 30.0), PoleNearContour);
    // well-separated poles pass
    CHECK_NOTHROW(check_sec_poles(cd(1.0, 0.0), cd(0.0, 0.0), cd(0.0, 2.0), 30.0));
}

TEST_CASE("budget exhaustion raises")
{
    auto f = [](double t) { return cd(std::cos(50.0 * t) / (1e-6 + t * t), 0.0); };
    CHECK_THROWS_AS(integrate_segment(f, -1.0, 1.0, 1e-15, 120), BudgetExceeded);
}

TEST_CASE("choose_truncation finds a tail cut for an exponentially decaying kernel")
{
    auto f = [](const cd& h) { return sech_stable(0.5 * h); };
    double T = choose_truncation(f, cd(1.0, 0.0), 0.5, 1e-10, 5.0);
    CHECK(T > 5.0);
    CHECK(std::abs(f(cd(T, 0.0))) * 4.0 < 1e-9);
}
