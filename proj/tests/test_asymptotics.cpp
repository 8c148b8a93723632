#include "oracles.hpp"

#include "zetakit/asymptotics.hpp"
#include "zetakit/numbertheory.hpp"
#include "zetakit/special.hpp"

#include <gtest/gtest.h>

using namespace zetakit;

namespace {

// sum_k (-1)^k / (k + a) = int_0^1 x^{a-1} / (1 + x) dx
double alternating_hurwitz(double a)
{
   return static_cast<double>(oracle::integrate(
      [a](long double x) { return std::pow(x, static_cast<long double>(a) - 1) / (1 + x); }, 0.0L, 1.0L));
}

double zeta_oracle(double s)
{
   return static_cast<double>(oracle::zeta(s).real());
}

double si_oracle(double x)
{
   return static_cast<double>(oracle::sine_integral(x));
}

} // namespace

TEST(HurwitzHalf, ExactValues)
{
   EXPECT_NEAR(eta_hurwitz_half_exact(1.0), ln2, 1e-15);
   for (double t : {3.0, 7.5, 40.0})
      EXPECT_NEAR(eta_hurwitz_half_exact(t), alternating_hurwitz((t + 1) / 2), 1e-12) << t;
   EXPECT_THROW(eta_hurwitz_half_exact(0.0), domain_error);
}

TEST(HurwitzHalf, AsymptoticLeadingTerm)
{
   const auto a = eta_hurwitz_half_asymptotic(40.0, 0);
   ASSERT_EQ(a.partial_sums.size(), 1u);
   EXPECT_EQ(a.partial_sums[0], 1 / 40.0);
   EXPECT_LT(std::fabs(a.partial_sums[0] - a.exact_value), std::pow(40.0, -3));
}

TEST(HurwitzHalf, PartialSumsUseEulerNumbers)
{
   const double t = 6.0;
   const auto a = eta_hurwitz_half_asymptotic(t, 5);
   const auto e = oracle::euler_numbers(10);
   double s = 0;
   for (int k = 0; k <= 5; ++k)
   {
      s += to_double(e[2 * k]) / std::pow(t, 2 * k + 1);
      EXPECT_NEAR(a.partial_sums[k], s, 1e-15 * std::max(1.0, std::fabs(s))) << k;
   }
}

TEST(HurwitzHalf, ErrorAtTenOrderTwo)
{
   const auto a = eta_hurwitz_half_asymptotic(10.0, 2);
   EXPECT_LE(a.error(2), 100 * 1e-7);
   EXPECT_LE(asymptotic_error_slope(2, {10.0, 20.0, 40.0}), -6.5);
}

TEST(HurwitzHalf, ErrorSlopes)
{
   for (int K = 0; K <= 2; ++K)
      EXPECT_LE(asymptotic_error_slope(K, {10.0, 20.0, 40.0}), -(2 * K + 2.5)) << K;
}

TEST(HurwitzHalf, DivergentSweepHasInteriorMinimum)
{
   const auto a = eta_hurwitz_half_asymptotic(4.0, 12);
   EXPECT_GT(a.optimal_index, 0);
   EXPECT_LT(a.optimal_index, 12);
   for (int k = 0; k <= 12; ++k)
      EXPECT_GE(a.error(k), a.error(a.optimal_index));
   EXPECT_GT(a.error(12), a.error(a.optimal_index) * 100);
   EXPECT_THROW(eta_hurwitz_half_asymptotic(1.5, 2), domain_error);
   EXPECT_THROW(eta_hurwitz_half_asymptotic(4.0, 101), domain_error);
}

TEST(DoubleIntegral, OddZeta)
{
   for (int m = 1; m <= 2; ++m)
      EXPECT_NEAR(zeta_odd_via_double_integral(m), zeta_oracle(2 * m + 1), 1e-8) << m;
}

TEST(DoubleIntegral, OrderSwap)
{
   for (int m = 1; m <= 2; ++m)
      EXPECT_NEAR(odd_zeta_double_integral(m, IntegrationOrder::t_outer),
                  odd_zeta_double_integral(m, IntegrationOrder::x_outer), 1e-9)
         << m;
}

TEST(DoubleIntegral, DigammaEulerValue)
{
   for (int m = 1; m <= 4; ++m)
      EXPECT_NEAR(euler_digamma_value(m), to_double(harmonic_euler_sum(m)), 1e-15) << m;
}

TEST(MellinBarnes, OddZeta)
{
   for (int m = 1; m <= 2; ++m)
   {
      const auto r = mellin_barnes_zeta_odd(m);
      EXPECT_NEAR(r.zeta().real(), zeta_oracle(2 * m + 1), 1e-7) << m;
      EXPECT_LE(std::fabs(r.scaled.imag()), 1e-9) << m;
      EXPECT_GT(r.cutoff, 0.0);
   }
   EXPECT_THROW(mellin_barnes_zeta_odd(0), domain_error);
}

TEST(SiPair, TheoremGrid)
{
   for (int p = 1; p <= 4; ++p)
      for (int k = 0; k <= 5; ++k)
         EXPECT_LE(even_order_pair_si_identity(k, p).diff(), 1e-9) << p << " " << k;
}

TEST(SiPair, BothSidesAgainstOracles)
{
   for (auto [p, k] : {std::pair{1, 0}, std::pair{3, 2}, std::pair{2, 5}})
   {
      const long double kappa = oracle::pi * (k + 0.5L);
      const oracle::cld pair = oracle::expint_imaginary(2.0L * p, kappa, -1) + oracle::expint_imaginary(2.0L * p, kappa, 1);
      const double lhs =
         static_cast<double>((p % 2 ? -1 : 1) * std::tgamma(2.0L * p) * pair.real() / std::pow(kappa, 2 * p - 1));
      long double sum = 0;
      for (int j = 1; j < p; ++j)
         sum += (j % 2 ? -1 : 1) * std::tgamma(2.0L * j) / std::pow(kappa, 2 * j);
      const double rhs = static_cast<double>(2 * (k % 2 ? -1 : 1) * sum - 2 * (oracle::sine_integral(kappa) - oracle::pi / 2));
      const auto r = even_order_pair_si_identity(k, p);
      EXPECT_NEAR(r.lhs, lhs, 1e-12) << p << " " << k;
      EXPECT_NEAR(r.rhs, rhs, 1e-12) << p << " " << k;
   }
}

TEST(Hypergeometric, SeriesEngineAgainstSineIntegral)
{
   for (double x : {pi / 2, 1.0, 7.0})
      EXPECT_NEAR(hyp1f2(0.5, 1.5, 1.5, -x * x / 4), si_oracle(x) / x, 1e-14) << x;
}

TEST(Hypergeometric, Corollary)
{
   EXPECT_LE(hypergeometric_1f2_identity(0, 2).diff(), 1e-9);
   EXPECT_LE(hypergeometric_1f2_identity(1, 3).diff(), 1e-9);
   EXPECT_LE(hypergeometric_1f2_identity(4, 4).diff(), 1e-9);
   EXPECT_THROW(hypergeometric_1f2_identity(0, 1), domain_error);
}

TEST(Regularized3F0, UnitOrder)
{
   const double want = -pi * pi * 0.25 * (si_oracle(pi / 2) - pi / 2);
   EXPECT_NEAR(regularized_3F0_unit(0), want, 1e-13);
   for (int k = 0; k <= 5; ++k)
      EXPECT_NEAR(regularized_3F0(1, k), regularized_3F0_unit(k), 1e-12) << k;
}

TEST(Regularized3F0, PairIdentity)
{
   EXPECT_LE(regularized_3F0_pair_identity(2, 1).diff(), 1e-9);
   for (int p = 1; p <= 4; ++p)
      for (int k = 0; k <= 3; ++k)
         EXPECT_LE(regularized_3F0_pair_identity(p, k).diff(), 1e-9) << p << " " << k;
}

TEST(Regularized3F0, SplitIdentity)
{
   for (int p = 2; p <= 3; ++p)
      for (int k = 0; k <= 3; ++k)
         EXPECT_LE(regularized_3F0_split_identity(p, k).diff(), 1e-9) << p << " " << k;
}

TEST(DigammaSine, SeriesIdentity)
{
   const auto r = digamma_sine_series_identity(3);
   EXPECT_LE(r.diff(), 1e-9);
   EXPECT_NEAR(r.rhs, si_oracle(pi * 3.5), 1e-12); // -(-1)^3 Si
}

TEST(SiSplit, TailsAndExactSum)
{
   const auto r = si_split_identity(2);
   ASSERT_EQ(r.tails.size(), 6u);
   for (std::size_t j = 0; j < r.tails.size(); ++j)
   {
      EXPECT_LE(r.tails[j].diff(), 1e-10) << j;
      EXPECT_NEAR(r.tails[j].rhs, pi / 2 - si_oracle(pi * (j + 0.5)), 1e-12) << j;
   }
   EXPECT_TRUE(r.exact());
   EXPECT_EQ(r.gamma_coefficient, 0);
   EXPECT_NEAR(digamma(5.0), 0.25 + 1.0 / 3 + 0.5 + 1.0 - euler_gamma, 1e-15);
}
