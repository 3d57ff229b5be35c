#include "gtlab/galg_trunc.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace gtlab;
using gtlab::testing::random_gword;

TEST(Magnus, Generators) {
  GAlgTrunc g = magnus(GWord::generator(1, 1), 2, 4);
  TSeries expect = t_unit(2, 4) + t_letter(2, 4, 1);
  EXPECT_EQ(g.mono, expect);
  GAlgTrunc inv = magnus(GWord::generator(1, -1), 2, 4);
  TSeries geo(2, 4);
  for (int k = 0; k <= 4; ++k) geo.add(Word(static_cast<std::size_t>(k), 1), k % 2 ? -1 : 1);
  EXPECT_EQ(inv.mono, geo);
}

TEST(Magnus, MultiplicativeAndAugmented) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    GWord a = random_gword(rng, 3, 4), b = random_gword(rng, 3, 4);
    EXPECT_EQ(magnus(a * b, 3, 5), magnus(a, 3, 5) * magnus(b, 3, 5));
    EXPECT_EQ(augment(magnus(a, 3, 5)), 1);
    EXPECT_EQ(group_antipode(magnus(a, 3, 5)), magnus(a.inverse(), 3, 5));
  }
}

TEST(Magnus, GroupRingRoundTrip) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    GAlg x;
    for (int t = 0; t < 3; ++t) x.add(random_gword(rng, 2, 3), gtlab::testing::small_rat(rng));
    GAlgTrunc m = magnus(x, 2, 4);
    EXPECT_EQ(magnus(to_group_ring(m), 2, 4), m);
  }
}

TEST(Magnus, EqualThrough) {
  GAlgTrunc a = magnus(GWord::generator(1, 1), 1, 4);
  GAlgTrunc b = magnus(GWord::generator(1, -1), 1, 4);
  EXPECT_TRUE(equal_through(a, a, 4));
  EXPECT_TRUE(equal_through(a, b, 0));
  EXPECT_FALSE(equal_through(a, b, 1));
}
