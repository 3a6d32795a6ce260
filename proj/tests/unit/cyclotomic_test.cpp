#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dfinv/cyclotomic.hpp"
#include "generators.hpp"

namespace dfinv {
namespace {

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (UPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (UPoly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (UPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (UPoly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (UPoly{1, 0, -1, 0, 1}));
  for (unsigned long m = 1; m <= 30; ++m) EXPECT_EQ(cyclotomic_polynomial(m).size() - 1, euler_phi(m));
}

TEST(Cyclotomic, RootsOfUnity) {
  FieldPtr f = cyclotomic_field(6);
  CyclotomicNumber z = CyclotomicNumber::root_power(f, 1);
  CyclotomicNumber p(1);
  for (int i = 0; i < 6; ++i) p *= z;
  EXPECT_EQ(p, CyclotomicNumber(1));
  EXPECT_EQ(CyclotomicNumber::root_power(f, 3), CyclotomicNumber(-1));
  EXPECT_EQ(CyclotomicNumber::root_power(f, -1) * z, CyclotomicNumber(1));
  // 1 + ζ3 + ζ3² = 0, read inside Q(ζ6).
  CyclotomicNumber w = CyclotomicNumber::root_power(f, 2);
  EXPECT_TRUE((CyclotomicNumber(1) + w + w * w).is_zero());
}

TEST(Cyclotomic, MixedOrdersLiftToTheLcm) {
  CyclotomicNumber a = CyclotomicNumber::root_power(cyclotomic_field(4), 1);  // i
  CyclotomicNumber b = CyclotomicNumber::root_power(cyclotomic_field(3), 1);
  CyclotomicNumber c = a * b;
  EXPECT_EQ(c.order() % 12, 0u);
  EXPECT_EQ(c, CyclotomicNumber::root_power(cyclotomic_field(12), 7));
  EXPECT_EQ(c / b, a);
}

TEST(Cyclotomic, InverseAndRationality) {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    unsigned long m = rng.integer(1, 12);
    FieldPtr f = cyclotomic_field(m);
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < f->degree(); ++k) coeffs.push_back(rng.integer(-3, 3));
    CyclotomicNumber x(f, coeffs);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), CyclotomicNumber(1));
  }
  EXPECT_TRUE(CyclotomicNumber(Rational(2, 3)).is_rational());
}

TEST(Cyclotomic, ZeroTestAgreesWithComplexValue) {
  testing::Rng rng(4);
  int zeros = 0;
  for (int i = 0; i < 300; ++i) {
    unsigned long m = rng.integer(1, 12);
    FieldPtr f = cyclotomic_field(m);
    // Random sums of roots of unity, with a planted cancellation half the time.
    CyclotomicNumber x(0);
    for (int k = 0; k < 4; ++k) x += CyclotomicNumber::root_power(f, rng.integer(0, m - 1)) * Rational(rng.integer(-2, 2));
    if (rng.coin()) x -= x;
    std::complex<double> direct = 0;
    CyclotomicNumber lifted = x.lift(f);
    const auto& c = lifted.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
      direct += c[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * double(k) / double(m));
    EXPECT_EQ(x.is_zero(), std::abs(direct) < 1e-9);
    EXPECT_NEAR(std::abs(direct - x.to_complex()), 0.0, 1e-9);
    zeros += x.is_zero();
  }
  EXPECT_GT(zeros, 0);
}

TEST(Cyclotomic, Printing) {
  EXPECT_EQ(to_string(CyclotomicNumber(Rational(3, 2))), "3/2");
  EXPECT_EQ(to_string(CyclotomicNumber::root_power(cyclotomic_field(3), 1)), "[m=3](z)");
}

}  // namespace
}  // namespace dfinv
