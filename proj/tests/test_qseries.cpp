#include "gtlab/errors.hpp"
#include "gtlab/qseries.hpp"

#include <gtest/gtest.h>

using namespace gtlab;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, so the caller flips it.
Rat akiyama_tanigawa(int n) {
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    a[static_cast<std::size_t>(m)] = Rat(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto uj = static_cast<std::size_t>(j);
      a[uj - 1] = j * (a[uj - 1] - a[uj]);
      a[uj - 1].canonicalize();
    }
  }
  return n == 1 ? -a[0] : a[0];
}

UniSeries exp_minus_x_minus_1(int n) {
  UniSeries e = series_exp(-1, n);
  e[0] -= 1;
  return e;
}

}  // namespace

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rat(-1, 2));
  EXPECT_EQ(bernoulli(2), Rat(1, 6));
  EXPECT_EQ(bernoulli(4), Rat(-1, 30));
}

TEST(Bernoulli, MatchesIndependentAlgorithm) {
  auto table = bernoulli_table(30);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(table[static_cast<std::size_t>(n)], akiyama_tanigawa(n)) << n;
    EXPECT_EQ(bernoulli(n), table[static_cast<std::size_t>(n)]);
  }
}

TEST(Bernoulli, OddVanish) {
  for (int n = 3; n <= 31; n += 2) EXPECT_EQ(bernoulli(n), 0) << n;
}

TEST(SeriesS, LeadingCoefficients) {
  EXPECT_EQ(series_s(0).coeffs(), std::vector<Rat>{Rat(-1, 2)});
  std::vector<Rat> want{Rat(-1, 2), Rat(-1, 12), 0, Rat(1, 720)};
  EXPECT_EQ(series_s(3).coeffs(), want);
  EXPECT_EQ(series_s(5)[5], Rat(-1, 30240));
  EXPECT_EQ(series_s(5)[4], 0);
}

TEST(SeriesS, DefiningIdentity) {
  for (int n = 0; n <= 24; ++n) {
    UniSeries em1 = exp_minus_x_minus_1(n + 1);
    UniSeries rhs(n);
    rhs[0] = 1;
    for (int k = 0; k <= n; ++k) rhs[k] += em1[k + 1];
    EXPECT_EQ((series_s(n) * em1.truncated(n)), rhs) << n;
  }
}

TEST(SeriesS, Parity) {
  for (int n = 0; n <= 24; ++n) {
    UniSeries s = series_s(n);
    UniSeries sum = s + s.reflected();
    UniSeries want(n);
    want[0] = -1;
    EXPECT_EQ(sum, want);
  }
}

TEST(Phi, ExampleWithQ3) {
  AssocCoeffs c;
  c.q[2] = 0;
  c.q[3] = Rat(1, 1440);
  std::vector<Rat> want{0, Rat(1, 24), 0, Rat(-1, 1440)};
  EXPECT_EQ(series_phi(c, 3).coeffs(), want);
}

TEST(Phi, OnlyLinearTerm) {
  AssocCoeffs c;
  std::vector<Rat> want{0, Rat(1, 24)};
  EXPECT_EQ(series_phi(c, 1).coeffs(), want);
}

TEST(Phi, MissingCoefficient) {
  AssocCoeffs c;
  c.q[2] = 0;
  try {
    series_phi(c, 3);
    FAIL() << "expected MissingCoefficient";
  } catch (const MissingCoefficient& e) {
    EXPECT_EQ(e.index(), 3);
  }
}

TEST(Phi, EvenModeMatchesPhiEven) {
  AssocCoeffs c;
  c.even_mode = true;
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(series_phi(c, n), phi_even(n)) << n;
}

TEST(PhiEven, Examples) {
  EXPECT_EQ(phi_even(0).coeffs(), std::vector<Rat>{0});
  EXPECT_EQ(phi_even(1).coeffs(), (std::vector<Rat>{0, Rat(1, 24)}));
  EXPECT_EQ(phi_even(3)[3], Rat(-1, 1440));
}

TEST(Validate, Q3AndQ5) {
  AssocCoeffs c;
  c.q[3] = Rat(1, 1440);
  c.q[5] = Rat(-1, 60480);
  CoeffReport r = validate_assoc_coeffs(c, 2);
  EXPECT_TRUE(r.ok());
  c.q[3] = 0;
  r = validate_assoc_coeffs(c, 2);
  EXPECT_FALSE(r.ok());
  bool saw_fail = false;
  for (const auto& e : r.entries)
    if (e.index == 3) saw_fail = !e.pass;
  EXPECT_TRUE(saw_fail);
}

TEST(Validate, EvenEntriesInformational) {
  AssocCoeffs c = AssocCoeffs::bernoulli_valid(9, Rat(5, 7));
  CoeffReport r = validate_assoc_coeffs(c, 4);
  EXPECT_TRUE(r.ok());
  for (const auto& e : r.entries)
    if (e.index % 2 == 0) EXPECT_TRUE(e.informational);
}

TEST(Validate, ConstraintValues) {
  EXPECT_EQ(bernoulli_constraint(1), Rat(1, 1440));
  EXPECT_EQ(bernoulli_constraint(2), Rat(-1, 60480));
}

TEST(Phi, RelationHoldsExactlyWhenValid) {
  for (Rat even : {Rat(0), Rat(3, 11)}) {
    AssocCoeffs c = AssocCoeffs::bernoulli_valid(17, even);
    ASSERT_TRUE(validate_assoc_coeffs(c, 8).ok());
    UniSeries phi = series_phi(c, 17);
    UniSeries lhs = phi.reflected() - phi;
    lhs[0] -= Rat(1, 2);
    EXPECT_EQ(lhs, series_s(17));
  }
  AssocCoeffs bad = AssocCoeffs::bernoulli_valid(7);
  bad.q[5] += 1;
  UniSeries phi = series_phi(bad, 7);
  UniSeries lhs = phi.reflected() - phi;
  lhs[0] -= Rat(1, 2);
  EXPECT_NE(lhs, series_s(7));
}

TEST(GammaZeta, Examples) {
  AssocCoeffs c;
  c.q[2] = Rat(2, 3);
  auto z = gamma_zeta(c, 1, 3);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[1], Rat(-2, 3));
  z = gamma_zeta(c, -1, 3);
  EXPECT_EQ(z[1], Rat(2, 3));
  AssocCoeffs zero;
  zero.q[2] = 0;
  zero.q[3] = 0;
  z = gamma_zeta(zero, 5, 4);
  EXPECT_EQ(z[1], 0);
  EXPECT_EQ(z[2], 0);
  // zeta(2) comes from the even-index formula, not from any q_i
  EXPECT_EQ(z[0], Rat(-25, 24));
  EXPECT_THROW(gamma_zeta(c, 0, 3), ZeroParameter);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-4"), Rat(-4));
  EXPECT_EQ(format_rat(Rat(-1, 12)), "-1/12");
  EXPECT_EQ(format_rat(Rat(3)), "3/1");
  EXPECT_EQ(format_rat(Rat(0)), "0/1");
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("x"), ParseError);
}

TEST(GammaZeta, EvenValuesAgreeWithBernoulli) {
  AssocCoeffs c = AssocCoeffs::bernoulli_valid(11, Rat(1, 5));
  Rat lambda(3, 2);
  auto z = gamma_zeta(c, lambda, 12);
  for (int n = 2; n <= 12; n += 2) {
    Rat lp = 1;
    for (int k = 0; k < n; ++k) lp *= lambda;
    EXPECT_EQ(z[static_cast<std::size_t>(n - 2)], -lp * bernoulli(n) / (2 * factorial(n))) << n;
  }
}
