#include <catch2/catch_amalgamated.hpp>

#include "codebounds/constructions.hpp"
#include "codebounds/transforms.hpp"
#include "test_util.hpp"

using namespace codebounds;

TEST_CASE("puncture") {
  const Code pair(2, 2, {Word{0, 0}, Word{1, 1}});
  const Code p = puncture(pair, 0);
  CHECK(p.n() == 1);
  CHECK(p.size() == 2);
  CHECK(p.words() == std::vector<Word>{Word{0}, Word{1}});

  // degenerate merge: both words collapse to the empty word
  const Code bit(2, 1, {Word{0}, Word{1}});
  const Code merged = puncture(bit, 0);
  CHECK(merged.n() == 0);
  CHECK(merged.size() == 1);

  CHECK_THROWS_AS(puncture(pair, 2), std::invalid_argument);
  CHECK_THROWS_AS(puncture(pair, -1), std::invalid_argument);
}

TEST_CASE("puncturing the (19,16,10) code drops the distance by at most 1") {
  const Code c = levenshtein_19_16_10();
  for (int i = 0; i < c.n(); ++i) {
    const Code p = puncture(c, i);
    REQUIRE(p.size() == c.size());
    const int d = minimum_distance(p);
    CHECK((d == 9 || d == 10));
  }
}

TEST_CASE("shorten at a systematic coordinate") {
  const SystematicCode full2(Code(2, 2, {Word{0, 0}, Word{0, 1}, Word{1, 0}, Word{1, 1}}), 2);
  const SystematicCode s = shorten_systematic(full2, 0);
  CHECK(s.k() == 1);
  CHECK(s.n() == 1);
  CHECK(s.code().words() == std::vector<Word>{Word{0}, Word{1}});
  CHECK(minimum_distance(s.code()) == 1);
  CHECK_THROWS_AS(shorten_systematic(full2, 2), std::invalid_argument);
}

TEST_CASE("shortening the 34-bit code keeps distance at least 18") {
  const SystematicCode c = systematic_counterexample_34();
  const SystematicCode s = shorten_systematic(c, 0);
  CHECK(s.n() == 33);
  CHECK(s.size() == 8);
  CHECK(s.k() == 3);
  CHECK(minimum_distance(s.code()) >= 18);
}

TEST_CASE("shorten property: length -1, dimension -1, distance non-decreasing") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const int n = std::uniform_int_distribution<int>(k + 1, 12)(rng);
    const SystematicCode c = testutil::random_systematic_code(rng, k, n);
    const int d = testutil::brute_force_min_distance(c.code().words());
    const int coord = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const SystematicCode s = shorten_systematic(c, coord);
    CHECK(s.n() == n - 1);
    CHECK(s.k() == k - 1);
    CHECK(s.size() == c.size() / 2);
    CHECK(check_systematic(s.code(), k - 1).ok);
    CHECK(testutil::brute_force_min_distance(s.code().words()) >= d);
  }
}

TEST_CASE("reduce_distance") {
  const SystematicCode c34 = systematic_counterexample_34();

  // target equal to the current distance: unchanged
  const SystematicCode same = reduce_distance(c34, 18);
  CHECK(same.code() == c34.code());

  // the 34-bit code reduced to distance 16
  const SystematicCode r16 = reduce_distance(c34, 16);
  CHECK(minimum_distance(r16.code()) == 16);
  CHECK(r16.k() == 4);
  CHECK(check_systematic(r16.code(), 4).ok);

  // a (3, 4, 2) systematic parity code reduced to d = 1 by one puncture
  const SystematicCode parity(
      Code(2, 3, {Word{0, 0, 0}, Word{0, 1, 1}, Word{1, 0, 1}, Word{1, 1, 0}}), 2);
  const SystematicCode r1 = reduce_distance(parity, 1);
  CHECK(r1.n() == 2);
  CHECK(r1.size() == 4);
  CHECK(minimum_distance(r1.code()) == 1);

  CHECK_THROWS_AS(reduce_distance(parity, 3), std::invalid_argument);
  CHECK_THROWS_AS(reduce_distance(parity, 0), std::invalid_argument);
}

TEST_CASE("reduce_distance reaches every target on random systematic codes") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n = std::uniform_int_distribution<int>(k + 1, 12)(rng);
    const SystematicCode c = testutil::random_systematic_code(rng, k, n);
    const int d = testutil::brute_force_min_distance(c.code().words());
    for (int target = 1; target <= d; ++target) {
      const SystematicCode r = reduce_distance(c, target);
      CHECK(minimum_distance(r.code()) == target);
      CHECK(r.size() == c.size());
      CHECK(r.n() >= r.k());
    }
  }
}

TEST_CASE("extend_parity") {
  const Code bit(2, 1, {Word{0}, Word{1}});
  const Code e = extend_parity(bit);
  CHECK(e.n() == 2);
  CHECK(e.words() == std::vector<Word>{Word{0, 0}, Word{1, 1}});
  CHECK(minimum_distance(e) == 2);
  CHECK_THROWS_AS(extend_parity(Code(3, 1, {Word{0}, Word{1}})), std::invalid_argument);
}

TEST_CASE("extend_parity property: odd distance gains 1, even stays") {
  std::mt19937 rng(31337);
  int odd_seen = 0, even_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const int m = std::uniform_int_distribution<int>(2, 12)(rng);
    const Code c = testutil::random_code(rng, 2, n, m);
    const int d = testutil::brute_force_min_distance(c.words());
    const Code e = extend_parity(c);
    const int de = testutil::brute_force_min_distance(e.words());
    if (d % 2 == 1) {
      CHECK(de == d + 1);
      ++odd_seen;
    } else {
      CHECK(de == d);
      ++even_seen;
    }
  }
  CHECK(odd_seen > 0);
  CHECK(even_seen > 0);
}

TEST_CASE("repeat") {
  const Code pair(2, 2, {Word{0, 0}, Word{1, 1}});
  CHECK(repeat(pair, 1) == pair);
  const Code r3 = repeat(pair, 3);
  CHECK(r3.n() == 6);
  CHECK(r3.size() == 2);
  CHECK(minimum_distance(r3) == 6);
  CHECK_THROWS_AS(repeat(pair, 0), std::invalid_argument);

  // (19,16,10) repeated twice: (38, 16, 20); also exercises the multi-limb path
  const Code lev2 = repeat(levenshtein_19_16_10(), 2);
  CHECK(lev2.n() == 38);
  CHECK(lev2.size() == 16);
  CHECK(minimum_distance(lev2) == 20);
}

TEST_CASE("repeat scales the distance exactly") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int m = std::uniform_int_distribution<int>(2, 10)(rng);
    const int t = std::uniform_int_distribution<int>(1, 4)(rng);
    const Code c = testutil::random_code(rng, 2, n, m);
    CHECK(minimum_distance(repeat(c, t)) == t * testutil::brute_force_min_distance(c.words()));
  }
}

TEST_CASE("concat_paired") {
  const Code a(2, 2, {Word{0, 0}, Word{1, 1}});
  const Code single_word(2, 3, {Word{1, 0, 1}});
  // a single-word partner just appends that word
  const Code app = concat_paired_lists(2, {Word{1, 1}}, single_word.words());
  CHECK(app.words() == std::vector<Word>{Word{1, 1, 1, 0, 1}});

  const Code b(2, 2, {Word{0, 1}, Word{1, 0}});
  const Code ab = concat_paired(a, b);
  CHECK(ab.n() == 4);
  CHECK(ab.size() == 2);

  CHECK_THROWS_AS(concat_paired(a, single_word), std::invalid_argument);       // size mismatch
  CHECK_THROWS_AS(concat_paired(a, b, {0, 0}), std::invalid_argument);         // not a permutation
  CHECK_THROWS_AS(concat_paired(a, Code(3, 1, {Word{0}, Word{1}})), std::invalid_argument);
}

TEST_CASE("concat distance is at least the sum of the distances") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    const int na = std::uniform_int_distribution<int>(2, 7)(rng);
    const int nb = std::uniform_int_distribution<int>(2, 7)(rng);
    const int cap = 1 << std::min(na, nb);
    const int m = std::uniform_int_distribution<int>(2, std::min(8, cap))(rng);
    const Code a = testutil::random_code(rng, 2, na, m);
    const Code b = testutil::random_code(rng, 2, nb, m);
    std::vector<std::size_t> pairing(static_cast<std::size_t>(m));
    std::iota(pairing.begin(), pairing.end(), std::size_t{0});
    std::shuffle(pairing.begin(), pairing.end(), rng);
    const Code ab = concat_paired(a, b, pairing);
    CHECK(testutil::brute_force_min_distance(ab.words()) >=
          testutil::brute_force_min_distance(a.words()) +
              testutil::brute_force_min_distance(b.words()));
  }
}
