#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lerchq/divisor_table.hpp"
#include "lerchq/lerch_coeffs.hpp"
#include "lerchq/qseries.hpp"

using namespace lerchq;

TEST_CASE("eps and eps0 casework")
{
    CHECK(eps(1, 1) == 1);
    CHECK(eps(-2, -3) == -1);
    CHECK(eps(1, 0) == 0);
    CHECK(eps(0, 5) == 0);
    CHECK(eps(2, -7) == 0);
    CHECK(eps0(-2, 3) == 0);
    CHECK(eps0(2, 3) == 1);
    CHECK(eps0(-2, -3) == 1);
    CHECK(eps0(0, 3) == 0);
}

TEST_CASE("hand-checked C coefficients for (a,b,c) = (3,1;2)")
{
    DivisorTable table(200);
    // Cs = C1(3, 1; 4; n)
    CHECK(coeff_Cs(3, 1, 2, 4, table) == 0);
    CHECK(coeff_Cs(3, 1, 2, 6, table) == 2);
    // Cc = C2(3,3;4;n) + C2(3,1;4;n)
    CHECK(coeff_Cc(3, 1, 2, 4, table) == 0);
    CHECK(coeff_Cc(3, 1, 2, 6, table) == 0);
    CHECK(coeff_Cc(3, 1, 2, 8, table) == 2);
}

TEST_CASE("C1 vanishes when no divisor satisfies the congruence")
{
    DivisorTable table(50);
    CHECK(coeff_C1(4, 0, 9, 5, table) == 0);
}

TEST_CASE("fs brute force lowest terms for (3,1;2)")
{
    FormalSeries fs = fs_bruteforce(3, 1, 2, 8);
    CHECK(fs.coeff_at(Rational(4)) == -2);
    CHECK(fs.coeff_at(Rational(6)) == 2);
    CHECK(fs.coeff_at(Rational(1)) == 0);
    CHECK(fs.coeff_at(Rational(0)) == 0);
}

TEST_CASE("fc brute force for (3,1;2) equals eta(q^2) phi(q^2)")
{
    const long N = 200;
    FormalSeries fc = fc_bruteforce(3, 1, 2, N);
    CHECK(fc.coeff_at(Rational(0)) == 1);
    CHECK(fc.coeff_at(Rational(4)) == -2);
    CHECK(fc.coeff_at(Rational(6)) == -2);
    CHECK(fc.coeff_at(Rational(8)) == 2);

    FormalSeries eta2 = pochhammer_series(Rational(2), Rational(2), std::nullopt, +1, N);
    FormalSeries phi = phi_series(N / 2);
    std::vector<Rational> c(N + 1, Rational(0));
    for (long k = 0; k <= N / 2; ++k) c[2 * k] = phi.coeff_index(k);
    FormalSeries phi2(Rational(0), 1, N, std::move(c));
    CHECK(FormalSeries::agree_through(fc, eta2 * phi2, Rational(N)));
}

TEST_CASE("b = 0 kills the sinh family")
{
    FormalSeries fs = fs_bruteforce(2, 0, 1, 40);
    CHECK(fs.is_zero());
}

TEST_CASE("parity in b")
{
    for (long a : {1L, 3L}) {
        for (long c : {1L, 2L}) {
            FormalSeries plus = fs_bruteforce(a, 2, c, 60);
            FormalSeries minus = fs_bruteforce(a, -2, c, 60);
            CHECK(FormalSeries::agree_through(minus, -plus, Rational(60)));
            FormalSeries cplus = fc_bruteforce(a, 3, c, 60);
            FormalSeries cminus = fc_bruteforce(a, -3, c, 60);
            CHECK(FormalSeries::agree_through(cplus, cminus, Rational(60)));
        }
    }
}

TEST_CASE("divisor-sum expansions equal the brute-force oracles on the full grid")
{
    const long N = 120;
    DivisorTable table(N);
    for (long a = 1; a <= 4; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c) {
                FormalSeries s1 = fs_series(a, b, c, N, table);
                FormalSeries o1 = fs_bruteforce(a, b, c, N);
                auto m1 = FormalSeries::first_disagreement(s1, o1, Rational(N));
                if (m1) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(to_string(m1->exponent));
                }
                CHECK_FALSE(m1.has_value());

                FormalSeries s2 = fc_series(a, b, c, N, table);
                FormalSeries o2 = fc_bruteforce(a, b, c, N);
                auto m2 = FormalSeries::first_disagreement(s2, o2, Rational(N));
                if (m2) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(to_string(m2->exponent));
                }
                CHECK_FALSE(m2.has_value());
            }
}

TEST_CASE("the full reconstruction: Cs part plus theta remainder equals brute force")
{
    const long N = 120;
    DivisorTable table(N);
    FormalSeries fs = fs_bruteforce(3, 1, 2, N);
    std::vector<Rational> c(N + 1, Rational(0));
    for (long n = 1; n <= N; ++n) c[n] = coeff_Cs(3, 1, 2, n, table);
    for (long n = 1; 3 * n * n + n <= N; ++n) c[3 * n * n + n] += (n % 2 != 0) ? -2 : 2;
    FormalSeries assembled(Rational(0), 1, N, std::move(c));
    CHECK(FormalSeries::agree_through(assembled, fs, Rational(N)));
}

TEST_CASE("C coefficients are integers by construction and match series extraction")
{
    const long N = 60;
    DivisorTable table(N);
    FormalSeries fc = fc_bruteforce(2, 1, 3, N);
    // strip the explicit theta remainders and the constant; what is left must be the Cc part
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = 1;
    for (long n = 1; n <= N; ++n) c[n] = coeff_Cc(2, 1, 3, n, table);
    for (int pick = 0; pick < 2; ++pick) {
        long beta = pick == 0 ? 3 - 1 : 3 + 1;
        for (long n = 1; 2 * n * n + beta * n <= N; ++n)
            c[2 * n * n + beta * n] += (n % 2 != 0) ? -2 : 2;
    }
    FormalSeries assembled(Rational(0), 1, N, std::move(c));
    CHECK(FormalSeries::agree_through(assembled, fc, Rational(N)));
}

TEST_CASE("Chebyshev expansion against the c = 1 sinh family")
{
    const long N = 100;
    SUBCASE("b = 1 is the plain alternating theta series")
    {
        FormalSeries ch = chebyshev_fs(2, 1, N);
        for (long n = 1; 2 * n * n <= N; ++n)
            CHECK(ch.coeff_at(Rational(2 * n * n)) == ((n % 2 != 0) ? -1 : 1));
        CHECK(ch.coeff_at(Rational(3)) == 0);
    }
    SUBCASE("b = 2 and b = 3 match half the brute-force expansion")
    {
        for (long a : {1L, 2L, 3L}) {
            for (long b : {2L, 3L}) {
                FormalSeries ch = chebyshev_fs(a, b, N);
                FormalSeries fs = fs_bruteforce(a, b, 1, N).scaled(make_rational(1, 2));
                CHECK(FormalSeries::agree_through(ch, fs, Rational(N)));
            }
        }
    }
}

TEST_CASE("eq-104 style reconstruction at order 200")
{
    const long N = 200;
    DivisorTable table(N);
    FormalSeries fc = fc_series(3, 1, 2, N, table);

    FormalSeries eta2 = pochhammer_series(Rational(2), Rational(2), std::nullopt, +1, N);
    FormalSeries phi = phi_series(N / 2);
    std::vector<Rational> c(N + 1, Rational(0));
    for (long k = 0; k <= N / 2; ++k) c[2 * k] = phi.coeff_index(k);
    FormalSeries phi2(Rational(0), 1, N, std::move(c));
    CHECK(FormalSeries::agree_through(fc, eta2 * phi2, Rational(N)));
}
