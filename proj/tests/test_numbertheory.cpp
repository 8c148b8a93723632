#include "oracles.hpp"

#include "zetakit/numbertheory.hpp"
#include "zetakit/special.hpp"

#include <gtest/gtest.h>

using namespace zetakit;

TEST(Bernoulli, ClassicalValues)
{
   EXPECT_EQ(bernoulli_exact(0), Rational(1));
   EXPECT_EQ(bernoulli_exact(1), Rational(-1, 2));
   EXPECT_EQ(bernoulli_exact(12), Rational(-691, 2730));
   EXPECT_EQ(to_string(bernoulli_exact(12)), "-691/2730");
   EXPECT_EQ(to_string(bernoulli_exact(0)), "1");
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
   for (int n = 0; n <= 80; ++n)
      EXPECT_EQ(bernoulli_exact(n), oracle::bernoulli(n)) << n;
}

TEST(Bernoulli, OddIndicesVanish)
{
   for (int n = 3; n <= 101; n += 2)
      EXPECT_EQ(bernoulli_exact(n), 0) << n;
}

TEST(Bernoulli, CapAndDomain)
{
   EXPECT_NO_THROW(bernoulli_exact(table_cap));
   EXPECT_THROW(bernoulli_exact(table_cap + 1), cap_error);
   EXPECT_THROW(bernoulli_exact(-1), domain_error);
}

TEST(Bernoulli, EvenRecursionReproducesTable)
{
   EXPECT_EQ(bernoulli_even_recursive(0), Rational(1, 6));
   EXPECT_EQ(bernoulli_even_recursive(1), Rational(-1, 30));
   for (int N = 0; N <= 10; ++N)
      EXPECT_EQ(bernoulli_even_recursive(N), oracle::bernoulli(2 * N + 2)) << N;
}

TEST(Euler, ClassicalValues)
{
   EXPECT_EQ(euler_number(0), 1);
   EXPECT_EQ(euler_number(2), -1);
   EXPECT_EQ(euler_number(4), 5);
   EXPECT_EQ(euler_number(6), -61);
}

TEST(Euler, MatchesSechRecurrence)
{
   const auto e = oracle::euler_numbers(80);
   for (int n = 0; n <= 80; ++n)
      EXPECT_EQ(euler_number(n), e[n]) << n;
}

TEST(Euler, BernoulliFromEulerInversion)
{
   EXPECT_EQ(bernoulli_from_euler(3), Rational(1, 42));
   for (int n = 1; n <= 10; ++n)
      EXPECT_EQ(bernoulli_from_euler(n), oracle::bernoulli(2 * n)) << n;
}

TEST(Euler, BinomialSumVanishes)
{
   EXPECT_EQ(euler_binomial_sum(0), 1);
   for (int m = 1; m <= 20; ++m)
      EXPECT_EQ(euler_binomial_sum(m), 0) << m;
}

TEST(Euler, HarmonicRecursion)
{
   EXPECT_EQ(euler_number_via_harmonic_recursion(1), -1);
   EXPECT_EQ(euler_number_via_harmonic_recursion(2), 5);
   const auto e = oracle::euler_numbers(16);
   for (int m = 1; m <= 8; ++m)
      EXPECT_EQ(euler_number_via_harmonic_recursion(m), e[2 * m]) << m;
   EXPECT_THROW(euler_number_via_harmonic_recursion(0), domain_error);
}

TEST(EulerPolynomial, HalfArgumentGivesEulerNumbers)
{
   for (int n = 0; n <= 12; ++n)
      EXPECT_EQ(euler_polynomial(n, Rational(1, 2)) * oracle::pow2(n), euler_number(n)) << n;
}

TEST(EulerPolynomial, DegreeZeroIsOne)
{
   for (const Rational& z : {Rational(0), Rational(7, 3), Rational(-5)})
      EXPECT_EQ(euler_polynomial(0, z), 1);
   EXPECT_EQ(euler_polynomial(0, 2.5), 1.0);
}

TEST(EulerPolynomial, MatchesShiftedExpansion)
{
   EXPECT_EQ(euler_polynomial(3, Rational(1, 4)), oracle::euler_polynomial(3, Rational(1, 4)));
   EXPECT_EQ(euler_polynomial_reversed(3, Rational(1, 4)), oracle::euler_polynomial(3, Rational(1, 4)));
   for (int n = 0; n <= 14; ++n)
      for (const Rational& z : {Rational(0), Rational(1, 3), Rational(-7, 5), Rational(3)})
      {
         const Rational want = oracle::euler_polynomial(n, z);
         EXPECT_EQ(euler_polynomial(n, z), want) << n;
         EXPECT_EQ(euler_polynomial_reversed(n, z), want) << n;
         EXPECT_NEAR(euler_polynomial(n, to_double(z)), to_double(want), 1e-12 * std::max(1.0, std::fabs(to_double(want))));
      }
}

TEST(EulerPolynomial, VanishesAtZeroForEvenDegree)
{
   for (int m = 1; m <= 10; ++m)
      EXPECT_EQ(euler_polynomial(2 * m, Rational(0)), 0) << m;
}

TEST(Harmonic, Values)
{
   EXPECT_EQ(harmonic(1), 1);
   EXPECT_EQ(harmonic(2), Rational(3, 2));
   EXPECT_EQ(harmonic(20), Rational(55835135, 15519504));
   for (int n = 1; n <= 60; ++n)
   {
      EXPECT_EQ(harmonic(n), oracle::harmonic(n));
      EXPECT_NEAR(to_double(harmonic(n)), digamma(n + 1.0) + euler_gamma, 1e-12) << n;
   }
   EXPECT_THROW(harmonic(0), domain_error);
}

TEST(Euler, BetaApproximation)
{
   const double e10 = to_double(euler_number(10));
   EXPECT_LT(std::fabs(euler_number_beta_approx(10, 0) / e10 - 1), 2e-5);
   EXPECT_LT(std::fabs(euler_number_beta_approx(10, 200) / e10 - 1), 1e-12);
   EXPECT_GT(euler_number_beta_approx(2, 0) * to_double(euler_number(2)), 0.0);
   double prev = 1.0;
   for (int N = 0; N <= 4; ++N)
   {
      const double err = std::fabs(euler_number_beta_approx(10, N) / e10 - 1);
      EXPECT_LT(err, prev) << N;
      prev = err;
   }
   prev = 1.0;
   for (int n = 2; n <= 24; n += 2)
   {
      const double err = std::fabs(euler_number_beta_approx(n, 0) / to_double(euler_number(n)) - 1);
      EXPECT_LT(err, prev) << n;
      prev = err;
   }
   EXPECT_THROW(euler_number_beta_approx(3, 0), domain_error);
}

TEST(Identities, HarmonicEulerSumBernoulliForm)
{
   for (int m = 1; m <= 15; ++m)
      EXPECT_EQ(harmonic_euler_sum(m), bernoulli_harmonic_sum(m)) << m;
}

TEST(Identities, HarmonicEulerSumDirect)
{
   for (int m = 1; m <= 10; ++m)
   {
      const auto e = oracle::euler_numbers(2 * m);
      Rational s = 0;
      for (int j = 0; j < m; ++j)
         s += e[2 * j] * oracle::harmonic(2 * m - 2 * j) / (oracle::factorial(2 * m - 2 * j) * oracle::factorial(2 * j));
      EXPECT_EQ(harmonic_euler_sum(m), s) << m;
   }
}

TEST(Identities, DigammaWeightedSumIsGammaFree)
{
   for (int m = 1; m <= 10; ++m)
   {
      const auto g = euler_digamma_sum(m);
      EXPECT_EQ(g.gamma_coefficient, 0) << m;
      EXPECT_EQ(g.constant, bernoulli_digamma_sum(m)) << m;
      EXPECT_EQ(g.constant, harmonic_euler_sum(m)) << m;
   }
}

TEST(Identities, GammaWeightedEulerSum)
{
   for (double s : {0.3, 1.7, -2.2})
      for (int n = 1; n <= 3; ++n)
      {
         const double rhs = bernoulli_gamma_sum(s, n);
         EXPECT_NEAR(euler_gamma_sum(s, n), rhs, 1e-11 * std::max(1.0, std::fabs(rhs))) << s << " " << n;
      }
}
