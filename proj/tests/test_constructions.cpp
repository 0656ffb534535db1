#include <catch2/catch_amalgamated.hpp>

#include "codebounds/bounds.hpp"
#include "codebounds/constructions.hpp"

using namespace codebounds;

TEST_CASE("generator matrix") {
  const GeneratorMatrix g = simplex_15_4_8_generator();
  CHECK(g.k() == 4);
  CHECK(g.n() == 15);
  CHECK(g.encode(Word{1, 0, 0, 0}) == g.rows()[0]);
  CHECK(g.span().size() == 16);
  CHECK_THROWS_AS(GeneratorMatrix(3, {Word{1, 0, 1}, Word{1, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorMatrix(2, {Word{0, 0}}), std::invalid_argument);
}

TEST_CASE("the [15,4,8] simplex-parameter code") {
  const SystematicCode c = simplex_15_4_8();
  CHECK(c.n() == 15);
  CHECK(c.size() == 16);
  CHECK(minimum_distance(c.code()) == 8);
  const auto hist = weight_distribution(c.code());
  CHECK(hist.at(0) == 1);
  CHECK(hist.at(8) == 15);
  CHECK(c.n() == griesmer(2, 4, 8));  // meets the Griesmer value with equality
}

TEST_CASE("cyclic code from the degree-11 defining set") {
  const Code c = cyclic_code(15, {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
  CHECK(c.n() == 15);
  CHECK(c.size() == 16);  // dimension 15 - 11 = 4
  CHECK(minimum_distance(c) == 8);
}

TEST_CASE("cyclic code edge cases") {
  const Code full = cyclic_code(7, {});
  CHECK(full.size() == 128);
  CHECK(minimum_distance(full) == 1);

  const Code hamming = cyclic_code(7, {1, 2, 4});
  CHECK(hamming.n() == 7);
  CHECK(hamming.size() == 16);
  CHECK(minimum_distance(hamming) == 3);
}

TEST_CASE("cyclic codes are closed under shifts and addition") {
  for (const std::set<int>& defset :
       {std::set<int>{0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12}, std::set<int>{1, 2, 4, 8},
        std::set<int>{0, 5, 10}}) {
    const int n = 15;
    const Code c = cyclic_code(n, defset);
    for (const Word& w : c.words()) {
      CHECK(c.contains(rotate_left(w, 1)));
      Word sum = w;
      xor_into(sum, c.words()[c.size() / 2]);
      CHECK(c.contains(sum));
    }
  }
}

TEST_CASE("systematic form of the explicit generator is the identity transform") {
  const GeneratorMatrix g = simplex_15_4_8_generator();
  const SystematicFormResult res = systematic_form(g);
  for (int j = 0; j < 15; ++j) CHECK(res.column_permutation[j] == j);
  CHECK(res.matrix.rows() == g.rows());
  CHECK(res.code.code() == g.span());
}

TEST_CASE("systematic form of the cyclic code") {
  const Code c = cyclic_code(15, {0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
  const SystematicFormResult res = systematic_form(c);
  CHECK(res.code.k() == 4);
  CHECK(res.code.n() == 15);
  CHECK(res.code.size() == 16);
  CHECK(minimum_distance(res.code.code()) == 8);  // distance survives the column permutation
  CHECK(check_systematic(res.code.code(), 4).ok);

  // the permutation really is a permutation of 0..14
  std::vector<int> perm = res.column_permutation;
  std::sort(perm.begin(), perm.end());
  for (int j = 0; j < 15; ++j) CHECK(perm[j] == j);

  // and it maps the input onto the output code word-for-word
  std::vector<Word> permuted;
  for (const Word& w : c.words()) {
    Word v(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) v[j] = w[res.column_permutation[j]];
    permuted.push_back(std::move(v));
  }
  CHECK(Code(2, 15, permuted) == res.code.code());
}

TEST_CASE("systematic form of an identity matrix is unchanged") {
  std::vector<Word> rows = {Word{1, 0, 0}, Word{0, 1, 0}, Word{0, 0, 1}};
  const GeneratorMatrix g(3, rows);
  const SystematicFormResult res = systematic_form(g);
  CHECK(res.matrix.rows() == rows);
  for (int j = 0; j < 3; ++j) CHECK(res.column_permutation[j] == j);
}

TEST_CASE("systematic form rejects non-linear input") {
  CHECK_THROWS_AS(systematic_form(Code(2, 2, {Word{0, 0}, Word{0, 1}, Word{1, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(systematic_form(Code(2, 3, {Word{0, 1, 1}, Word{1, 0, 1}})),
                  std::invalid_argument);  // does not contain the zero word
  CHECK_THROWS_AS(systematic_form(Code(3, 2, {Word{0, 0}, Word{1, 1}, Word{2, 2}})),
                  std::invalid_argument);  // not binary
}

TEST_CASE("the (19,16,10) code matches its reference listing") {
  const Code c = levenshtein_19_16_10();
  CHECK(c.n() == 19);
  CHECK(c.size() == 16);
  CHECK(minimum_distance(c) == 10);
  const auto hist = weight_distribution(c);
  CHECK(hist.size() == 2);
  CHECK(hist.at(0) == 1);
  CHECK(hist.at(10) == 15);
  // golden set equality against the embedded listing
  std::vector<Word> listing;
  for (auto row : detail::kLevenshteinListing) listing.push_back(word_from_digits(std::string(row)));
  CHECK(c == Code(2, 19, listing));
  // shorter than the Griesmer value for 16 words at distance 10
  CHECK(c.n() < griesmer(2, 4, 10));
  // but not systematic on the first four coordinates
  CHECK(!check_systematic(c, 4).ok);
}

TEST_CASE("the (34,2^4,18) systematic code matches its reference listing") {
  const SystematicCode c = systematic_counterexample_34();
  CHECK(c.n() == 34);
  CHECK(c.k() == 4);
  CHECK(c.size() == 16);
  CHECK(minimum_distance(c.code()) == 18);
  CHECK(check_systematic(c.code(), 4).ok);
  std::vector<Word> listing;
  for (auto row : detail::kCounterexampleListing)
    listing.push_back(word_from_digits(std::string(row)));
  CHECK(c.code() == Code(2, 34, listing));
  CHECK(c.n() < griesmer(2, 4, 18));  // 34 < 35
}

TEST_CASE("row 2 of the 34-bit listing is simplex row 1 followed by the base word") {
  const GeneratorMatrix g = simplex_15_4_8_generator();
  Word expected = g.rows()[0];
  const Word base = word_from_digits(std::string(detail::kLevenshteinBase));
  expected.insert(expected.end(), base.begin(), base.end());
  CHECK(word_from_digits(std::string(detail::kCounterexampleListing[1])) == expected);
}

TEST_CASE("the 34-bit code is the paired concatenation of its two halves") {
  // rebuild through the generic transform using the listing pairing
  const SystematicCode counter = systematic_counterexample_34();
  const Code left = simplex_15_4_8().code();
  const Code right = levenshtein_19_16_10();
  // derive the pairing from the listing: for each left word (sorted order),
  // find the right word it is concatenated with
  std::vector<std::size_t> pairing;
  for (const Word& lw : left.words()) {
    for (const Word& cw : counter.code().words()) {
      if (std::equal(lw.begin(), lw.end(), cw.begin())) {
        const Word rw(cw.begin() + 15, cw.end());
        const auto it = std::lower_bound(right.words().begin(), right.words().end(), rw);
        pairing.push_back(static_cast<std::size_t>(it - right.words().begin()));
        break;
      }
    }
  }
  CHECK(concat_paired(left, right, pairing) == counter.code());
}

TEST_CASE("translating the 34-bit code by a codeword keeps it systematic") {
  const SystematicCode c = systematic_counterexample_34();
  for (std::size_t i : {std::size_t{1}, std::size_t{7}, std::size_t{15}}) {
    const Code t = translate_to_zero(c.code(), c.code().words()[i]);
    CHECK(check_systematic(t, 4).ok);
    CHECK(minimum_distance(t) == 18);
  }
}

TEST_CASE("conjecture targets") {
  const ConjectureTarget t4 = conjecture_targets(4);
  CHECK(t4.d == 18);
  CHECK(t4.k_max == 5);

  const ConjectureTarget t3 = conjecture_targets(3);
  CHECK(t3.d == 10);
  CHECK(t3.k_max == 4);
  // the length value a (k=4, d=10) counterexample must beat
  CHECK(t3.griesmer_by_k.at(3).first == 4);
  CHECK(t3.griesmer_by_k.at(3).second == 20);

  CHECK_THROWS_AS(conjecture_targets(2), std::invalid_argument);
}
