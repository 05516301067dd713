#include <qcontig/classical.hpp>
#include <qcontig/series.hpp>

#include <gtest/gtest.h>

#include <array>
#include <numbers>
#include <random>

using namespace qcontig;

namespace {

double rel(cplx x, cplx y) { return std::abs(x - y) / std::abs(y); }

}  // namespace

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer<cplx>(0.37, 0), cplx(1));
  EXPECT_EQ(pochhammer<cplx>(3.0, 4), cplx(360));
  EXPECT_THROW(pochhammer<cplx>(1.0, -2), SingularFactor);
}

TEST(Pochhammer, NegativeOrder) {
  // (x)_{-2} = 1 / ((x-1)(x-2))
  EXPECT_LT(rel(pochhammer<cplx>(4.5, -2), 1.0 / (3.5 * 2.5)), 1e-15);
}

TEST(Gamma, Examples) {
  EXPECT_NEAR(std::abs(qcontig::gamma(1.0).value - 1.0), 0.0, 1e-14);
  EXPECT_LT(rel(qcontig::gamma(5.0).value, 24.0), 1e-14);
  EXPECT_LT(rel(qcontig::gamma(0.5).value, std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_THROW(qcontig::gamma(0.0), Pole);
  EXPECT_THROW(qcontig::gamma(-3.0), Pole);
}

TEST(Gamma, ReflectionAndComplexArguments) {
  // Gamma(-1/2) = -2 sqrt(pi); |Gamma(i)|^2 = pi / sinh(pi)
  EXPECT_LT(rel(qcontig::gamma(-0.5).value, -2 * std::sqrt(std::numbers::pi)), 1e-13);
  EXPECT_NEAR(std::norm(qcontig::gamma(cplx(0, 1)).value), std::numbers::pi / std::sinh(std::numbers::pi),
              1e-13);
}

TEST(Gamma, LowAccuracyFlagOutsideTheBox) {
  EXPECT_FALSE(qcontig::gamma(cplx(10, 5)).low_accuracy);
  EXPECT_TRUE(qcontig::gamma(cplx(60, 0)).low_accuracy);
  EXPECT_TRUE(qcontig::gamma(cplx(1, 25)).low_accuracy);
}

TEST(GammaRatio, IdenticalListsGiveOne) {
  const std::array<cplx, 2> x{cplx(2.3, 0.4), cplx(-1.7, 0)};
  EXPECT_LT(std::abs(gamma_ratio(x, x) - 1.0), 1e-14);
}

TEST(GammaRatio, PoleInList) {
  const std::array<cplx, 2> num{1.5, 0.0};
  const std::array<cplx, 1> den{2.0};
  EXPECT_THROW(gamma_ratio(num, den), Pole);
}

TEST(GammaRatio, LargeArgumentsDoNotOverflow) {
  // Gamma(180) / Gamma(178) = 179 * 178, while Gamma(180) alone overflows binary64
  const std::array<cplx, 1> num{180.0}, den{178.0};
  EXPECT_LT(rel(gamma_ratio(num, den), 179.0 * 178.0), 1e-11);
}

// Gauss: 2F1(c, e; d; 1) = Gamma(d) Gamma(d-c-e) / (Gamma(d-c) Gamma(d-e)).
// The form with Gamma(d-c-e+1) is (d-c-e) times that, which is checked too.
TEST(GammaRatio, GaussSummation) {
  const cplx d = 3.2, c = 0.4, e = 0.7;
  const auto f = eval_F(make_F<cplx>({c, e}, {d}, 1.0), PrecisionPolicy::standard(1e-12, 2000000));
  ASSERT_TRUE(f.converged);
  const std::array<cplx, 2> num{d, d - c - e}, den{d - c, d - e};
  EXPECT_LT(rel(gamma_ratio(num, den), f.value), 1e-10);
  const std::array<cplx, 2> num1{d, d - c - e + 1.0};
  EXPECT_LT(rel(gamma_ratio(num1, den), (d - c - e) * f.value), 1e-10);
}

TEST(GammaProperties, Recurrence) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-49, 49), im(-19, 19);
  int checked = 0;
  while (checked < 1000) {
    const cplx z(re(rng), im(rng));
    if (std::abs(z.imag()) < 0.5 && z.real() < 0.5) continue;  // keep away from the poles
    const cplx lhs = qcontig::gamma(z + 1.0).value, rhs = z * qcontig::gamma(z).value;
    if (!std::isfinite(std::abs(lhs)) || std::abs(lhs) == 0) continue;
    EXPECT_LT(rel(lhs, rhs), 1e-12) << z;
    ++checked;
  }
}

TEST(GammaProperties, PochhammerIsGammaQuotient) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> x(0.1, 12);
  std::uniform_int_distribution<long> n(-5, 15);
  for (int i = 0; i < 1000; ++i) {
    const cplx v = x(rng);
    const long k = n(rng);
    try {
      const std::array<cplx, 1> num{v + static_cast<double>(k)}, den{v};
      EXPECT_LT(rel(pochhammer(v, k), gamma_ratio(num, den)), 1e-10) << v << " " << k;
    } catch (const Error&) {
    }
  }
}
