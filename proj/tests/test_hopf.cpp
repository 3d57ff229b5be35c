#include "gtlab/hopf.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gtlab;
using gtlab::testing::random_fseries;
using gtlab::testing::random_tseries;

namespace {

TSeries z(int p, int n, int i) { return t_letter(p, n, i); }

// (Delta (x) id) Delta and (id (x) Delta) Delta as maps of word triples.
using Triple = std::map<std::tuple<Word, Word, Word>, Rat>;

Triple coassoc_left(const TSeries& a) {
  Triple t;
  TSeries2 d = coproduct(a);
  for (const auto& [k, c] : d.terms()) {
    TSeries2 d1 = coproduct(t_word(a.p(), a.trunc_deg(), k.first));
    for (const auto& [k1, c1] : d1.terms()) t[{k1.first, k1.second, k.second}] += c * c1;
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

Triple coassoc_right(const TSeries& a) {
  Triple t;
  TSeries2 d = coproduct(a);
  for (const auto& [k, c] : d.terms()) {
    TSeries2 d2 = coproduct(t_word(a.p(), a.trunc_deg(), k.second));
    for (const auto& [k2, c2] : d2.terms()) t[{k.first, k2.first, k2.second}] += c * c2;
  }
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
  return t;
}

TSeries2 fproject2(const FSeries2& x) {
  TSeries2 r(x.p(), x.trunc_deg());
  for (const auto& [k, c] : x.terms())
    if (k.first.cpow == 0 && k.second.cpow == 0) r.add({k.first.word, k.second.word}, c);
  return r;
}

}  // namespace

TEST(TMul, Examples) {
  const int p = 2, n = 4;
  EXPECT_EQ(z(p, n, 1) * z(p, n, 2), t_word(p, n, make_word({1, 2})));
  std::mt19937_64 rng(3);
  TSeries a = random_tseries(rng, p, n, 5, 4);
  EXPECT_EQ(t_unit(p, n) * a, a);
  TSeries lhs = (z(p, n, 1) + t_unit(p, n)) * (z(p, n, 1) - t_unit(p, n));
  EXPECT_EQ(lhs, t_word(p, n, make_word({1, 1})) - t_unit(p, n));
}

TEST(TMul, MismatchedContext) {
  EXPECT_THROW(z(2, 3, 1) * z(3, 3, 1), MismatchedContext);
  TSeries r = z(2, 3, 1) * z(2, 5, 2);
  EXPECT_EQ(r.trunc_deg(), 3);
}

TEST(Coproduct, Examples) {
  const int p = 2, n = 4;
  TSeries2 d = coproduct(z(p, n, 1));
  TSeries2 want(p, n);
  want.add({Word{1}, Word{}}, 1);
  want.add({Word{}, Word{1}}, 1);
  EXPECT_EQ(d, want);

  d = coproduct(t_word(p, n, make_word({1, 2})));
  want = TSeries2(p, n);
  want.add({make_word({1, 2}), Word{}}, 1);
  want.add({Word{1}, Word{2}}, 1);
  want.add({Word{2}, Word{1}}, 1);
  want.add({Word{}, make_word({1, 2})}, 1);
  EXPECT_EQ(d, want);

  want = TSeries2(p, n);
  want.add({Word{}, Word{}}, 1);
  EXPECT_EQ(coproduct(t_unit(p, n)), want);
}

TEST(Antipode, Examples) {
  const int p = 3, n = 4;
  EXPECT_EQ(antipode(t_word(p, n, make_word({1, 2}))), t_word(p, n, make_word({2, 1})));
  EXPECT_EQ(antipode(t_word(p, n, make_word({1, 2, 3}))), t_word(p, n, make_word({3, 2, 1}), -1));
  EXPECT_EQ(antipode(t_exp(z(p, n, 1))), t_exp(-z(p, n, 1)));
}

TEST(ExpLog, Examples) {
  const int p = 2, n = 3;
  TSeries want = t_unit(p, n) + z(p, n, 1) + t_word(p, n, make_word({1, 1}), Rat(1, 2)) +
                 t_word(p, n, make_word({1, 1, 1}), Rat(1, 6));
  EXPECT_EQ(t_exp(z(p, n, 1)), want);
  EXPECT_TRUE(t_log(t_unit(p, n)).is_zero());
  TSeries s = z(p, 6, 1) + z(p, 6, 2);
  EXPECT_EQ(t_log(t_exp(s)), s);
  EXPECT_THROW(t_exp(t_unit(p, n)), DomainError);
  EXPECT_THROW(t_log(z(p, n, 1)), DomainError);
}

TEST(EvalUni, Examples) {
  TSeries r = eval_uni(series_s(1), -z(1, 1, 1));
  TSeries want = Rat(-1, 2) * t_unit(1, 1) + Rat(1, 12) * z(1, 1, 1);
  EXPECT_EQ(r, want);
  UniSeries x(4);
  x[1] = 1;
  TSeries h = z(2, 4, 1) + z(2, 4, 2);
  EXPECT_EQ(eval_uni(x, h), h);
  UniSeries c(4);
  c[0] = Rat(2, 3);
  EXPECT_EQ(eval_uni(c, h), Rat(2, 3) * t_unit(2, 4));
  EXPECT_THROW(eval_uni(c, t_unit(2, 4)), DomainError);
}

TEST(Cyclic, Examples) {
  const int p = 2, n = 4;
  TSeries comm = t_word(p, n, make_word({1, 2})) - t_word(p, n, make_word({2, 1}));
  EXPECT_TRUE(cyclic_project(comm).is_zero());
  CycSeries c = cyclic_project(t_word(p, n, make_word({1, 2, 1})));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.terms().begin()->first.word(), make_word({1, 1, 2}));
  RedCycSeries r = reduce(cyclic_project(3 * t_unit(p, n) + z(p, n, 1)));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.terms().begin()->first.word(), Word{1});
}

TEST(FProject, Examples) {
  FSeries x(2, 4);
  x.add(FWord{Word{1}, 1}, 1);
  EXPECT_TRUE(fproject(x).is_zero());
  EXPECT_EQ(fproject(to_fseries(z(2, 4, 1))), z(2, 4, 1));
  FSeries e = tensor_c(t_unit(2, 4), series_exp(Rat(3, 2), 4));
  EXPECT_EQ(fproject(e), t_unit(2, 4));
}

TEST(HopfAxioms, RandomTSeries) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 1 + static_cast<int>(trial % 3);
    TSeries a = random_tseries(rng, p, 8, 6, 8);
    EXPECT_EQ(coassoc_left(a), coassoc_right(a));
    TSeries2 d = coproduct(a);
    TSeries left(p, 8), right(p, 8);
    for (const auto& [k, c] : d.terms()) {
      if (k.first.empty()) left.add(k.second, c);
      if (k.second.empty()) right.add(k.first, c);
    }
    EXPECT_EQ(left, a);
    EXPECT_EQ(right, a);
    EXPECT_EQ(multiply_legs(antipode_left(d)), counit(a) * t_unit(p, 8));
    EXPECT_EQ(multiply_legs(antipode_right(d)), counit(a) * t_unit(p, 8));
    EXPECT_EQ(antipode(antipode(a)), a);
  }
}

TEST(HopfAxioms, RandomFSeries) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    int p = 1 + static_cast<int>(trial % 3);
    FSeries a = random_fseries(rng, p, 8, 6, 8);
    FSeries2 d = coproduct(a);
    FSeries left(p, 8), conv(p, 8);
    for (const auto& [k, c] : d.terms()) {
      if (k.first == FWord{}) left.add(k.second, c);
      FSeries l(p, 8), r(p, 8);
      l.add(k.first, c);
      r.add(k.second, 1);
      conv += antipode(l) * r;
    }
    EXPECT_EQ(left, a);
    FSeries unit(p, 8);
    unit.add(FWord{}, counit(a));
    EXPECT_EQ(conv, unit);
    EXPECT_EQ(antipode(antipode(a)), a);
  }
}

TEST(HopfAxioms, ExpOfPrimitiveIsGroupLike) {
  const int p = 2, n = 7;
  TSeries u = z(p, n, 1) + Rat(1, 3) * (z(p, n, 1) * z(p, n, 2) - z(p, n, 2) * z(p, n, 1));
  TSeries g = t_exp(u);
  EXPECT_EQ(coproduct(g), tensor(g, g));
  TSeries l = t_log(g);
  EXPECT_EQ(l, u);
  TSeries2 prim = tensor(l, t_unit(p, n)) + tensor(t_unit(p, n), l);
  EXPECT_EQ(coproduct(l), prim);
}

TEST(Cyclic, KillsCommutators) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    TSeries a = random_tseries(rng, 3, 8, 4, 4), b = random_tseries(rng, 3, 8, 4, 4);
    EXPECT_TRUE(cyclic_project(a * b - b * a).is_zero());
  }
}

TEST(FProject, IsHopfMap) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    FSeries x = random_fseries(rng, 2, 7, 5, 6), y = random_fseries(rng, 2, 7, 5, 6);
    EXPECT_EQ(fproject(x * y), fproject(x) * fproject(y));
    EXPECT_EQ(fproject(antipode(x)), antipode(fproject(x)));
    EXPECT_EQ(fproject2(coproduct(x)), coproduct(fproject(x)));
  }
}
