#include "gtlab/expansion.hpp"
#include "gtlab/formal_ops.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gtlab;
using gtlab::testing::random_gword;

TEST(SolveSpecial, OnePunctureIsTrivial) {
  Expansion e = solve_special(1, 8);
  ASSERT_EQ(e.u.size(), 1u);
  EXPECT_TRUE(e.u[0].is_zero());
}

TEST(SolveSpecial, TwoPuncturesDegreeOne) {
  Expansion e = solve_special(2, 6);
  LieElem half_z2;
  half_z2.add(make_word({2}), Rat(1, 2));
  LieElem deg1;
  for (const auto& [w, c] : e.u[0].coords)
    if (w.size() == 1) deg1.add(w, c);
  EXPECT_EQ(deg1, half_z2);
  for (const auto& [w, c] : e.u[1].coords) EXPECT_GT(w.size(), 1u);
}

TEST(SolveSpecial, BoundaryIsSumOfGenerators) {
  for (int p = 1; p <= 3; ++p) {
    Expansion e = solve_special(p, 6);
    EXPECT_TRUE(boundary_defect(e).is_zero()) << p;
  }
  Expansion s = solve_special(3, 6, 99);
  EXPECT_TRUE(boundary_defect(s).is_zero());
  EXPECT_NE(s, solve_special(3, 6));
  EXPECT_EQ(s, solve_special(3, 6, 99));
}

TEST(SolveSpecial, BadArguments) {
  EXPECT_THROW(solve_special(0, 4), DomainError);
  EXPECT_THROW(solve_special(2, 0), DomainError);
}

TEST(Theta, GroupLikeAndMultiplicative) {
  Expansion e = solve_special(2, 5, 5);
  Theta th(e);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    GWord a = random_gword(rng, 2, 3), b = random_gword(rng, 2, 3);
    TSeries ta = th.eval(a);
    EXPECT_EQ(th.eval(a * b), ta * th.eval(b));
    EXPECT_EQ(coproduct(ta), tensor(ta, ta));
    EXPECT_EQ(ta * th.eval(a.inverse()), t_unit(2, 5));
  }
}

TEST(Theta, InvertRecoversMagnus) {
  Expansion e = solve_special(2, 5, 11);
  Theta th(e);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    GWord a = random_gword(rng, 2, 4);
    EXPECT_EQ(th.invert(th.eval(a)), magnus(a, 2, 5));
    TSeries t = gtlab::testing::random_tseries(rng, 2, 5, 4, 4);
    EXPECT_EQ(th.eval(th.invert(t)), t);
  }
}

TEST(Theta, FramedWinding) {
  Expansion e = solve_special(2, 4);
  Theta th(e);
  FSeries f = th.eval_framed(FGWord{GWord{}, 2});
  FSeries expect = tensor_c(t_unit(2, 4), series_exp(Rat(1), 4));
  EXPECT_EQ(f, expect);
}

TEST(Genus1, NaiveChoiceFailsInDegreeThree) {
  Genus1Expansion naive;
  naive.trunc_deg = 3;
  TSeries a = t_letter(2, 3, 1), b = t_letter(2, 3, 2);
  TSeries defect = genus1_boundary_log(naive) + (a * b - b * a);
  EXPECT_FALSE(defect.homogeneous(3).is_zero());
  EXPECT_EQ(defect.min_degree(), 3);
}

TEST(Genus1, SolvedBoundary) {
  Genus1Expansion g = solve_symplectic_genus1(6);
  TSeries a = t_letter(2, 6, 1), b = t_letter(2, 6, 2);
  EXPECT_EQ(genus1_boundary_log(g), b * a - a * b);
}

TEST(SymplecticTheta, EmbedsThetaAndBoundary) {
  Expansion e = solve_special(2, 4);
  Genus1Expansion g = solve_symplectic_genus1(8);
  SymplecticTheta st(e, g);
  EXPECT_EQ(st.trunc_deg(), 8);
  EXPECT_FALSE(st.truncation_loss());
  Theta th(e);
  for (int i = 1; i <= 2; ++i) {
    TSeries img = embed_I(th.generator(i, 1), 8).value;
    EXPECT_TRUE(equal_through(st.iota_zeta(i), img, 8)) << i;
  }
  EXPECT_EQ(st.boundary(), t_exp(-omega_element(2, 8)));
}
