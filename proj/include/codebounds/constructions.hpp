#pragma once

// Explicit code constructions: binary cyclic codes built from a complete
// defining set, systematic form of a linear code by column-permuting
// Gaussian elimination, the classical (19,16,10) constant-distance code
// obtained from rotations of one word, and the (34,2^4,18) systematic code
// whose length beats the Griesmer value. The two explicit codes are rebuilt
// from their recipes and verified against embedded reference listings.

#include <array>
#include <numeric>
#include <string_view>

#include "codebounds/bounds.hpp"
#include "codebounds/code.hpp"
#include "codebounds/gf2x.hpp"
#include "codebounds/transforms.hpp"

namespace codebounds {

inline Word rotate_left(const Word& w, int by) {
  const int n = static_cast<int>(w.size());
  if (n == 0) return w;
  Word v(w.size());
  for (int i = 0; i < n; ++i) v[i] = w[(i + by % n + n) % n];
  return v;
}

inline void xor_into(Word& target, const Word& source) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= source[i];
}

inline int gf2_rank(std::vector<Word> rows) {
  int rank = 0;
  const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != rank && rows[i][col]) xor_into(rows[i], rows[rank]);
    ++rank;
  }
  return rank;
}

// Binary generator matrix with linearly independent rows.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int n, std::vector<Word> rows) : n_(n), rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("GeneratorMatrix: no rows");
    if (n_ < 1 || static_cast<int>(rows_.size()) > n_)
      throw std::invalid_argument("GeneratorMatrix: need 1 <= k <= n");
    for (const Word& r : rows_) {
      if (static_cast<int>(r.size()) != n_)
        throw std::invalid_argument("GeneratorMatrix: row length != n");
      for (auto s : r)
        if (s > 1) throw std::invalid_argument("GeneratorMatrix: entries must be bits");
    }
    if (gf2_rank(rows_) != static_cast<int>(rows_.size()))
      throw std::invalid_argument("GeneratorMatrix: rows are linearly dependent");
  }

  int k() const { return static_cast<int>(rows_.size()); }
  int n() const { return n_; }
  const std::vector<Word>& rows() const { return rows_; }

  Word encode(const Word& message) const {
    if (message.size() != rows_.size())
      throw std::invalid_argument("GeneratorMatrix::encode: message length != k");
    Word out(static_cast<std::size_t>(n_), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (message[i]) xor_into(out, rows_[i]);
    return out;
  }

  // All 2^k codewords, messages enumerated in lexicographic order.
  std::vector<Word> all_codewords() const {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << rows_.size());
    Word msg(rows_.size(), 0);
    do {
      out.push_back(encode(msg));
    } while (next_tuple(msg, 2));
    return out;
  }

  Code span() const { return Code(2, n_, all_codewords()); }

 private:
  int n_;
  std::vector<Word> rows_;
};

struct SystematicFormResult {
  SystematicCode code;
  GeneratorMatrix matrix;               // reduced generator [I_k | P] of the permuted code
  std::vector<int> column_permutation;  // result column j came from input column perm[j]
};

// Gaussian elimination with leftmost-pivot column swaps. The returned code is
// equivalent to the input (coordinates permuted) and systematic on its first
// k coordinates; feeding a matrix already of the form [I_k | P] returns it
// unchanged with the identity permutation.
inline SystematicFormResult systematic_form(const GeneratorMatrix& g) {
  const int k = g.k();
  const int n = g.n();
  std::vector<Word> rows = g.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  for (int r = 0; r < k; ++r) {
    int pivot_col = -1, pivot_row = -1;
    for (int c = r; c < n && pivot_col < 0; ++c)
      for (int i = r; i < k; ++i)
        if (rows[i][c]) {
          pivot_col = c;
          pivot_row = i;
          break;
        }
    if (pivot_col < 0) throw std::invalid_argument("systematic_form: rank-deficient input");
    if (pivot_col != r) {
      for (Word& row : rows) std::swap(row[r], row[pivot_col]);
      std::swap(perm[r], perm[pivot_col]);
    }
    if (pivot_row != r) std::swap(rows[pivot_row], rows[r]);
    for (int i = 0; i < k; ++i)
      if (i != r && rows[i][r]) xor_into(rows[i], rows[r]);
  }

  GeneratorMatrix reduced(n, std::move(rows));
  Code span = reduced.span();
  return {SystematicCode(std::move(span), k), std::move(reduced), std::move(perm)};
}

// Same, starting from an explicit linear code: extracts a basis, verifies
// closure under addition, and hands the basis to the matrix overload.
inline SystematicFormResult systematic_form(const Code& linear_code) {
  if (linear_code.q() != 2)
    throw std::invalid_argument("systematic_form: binary codes only");

  std::vector<Word> basis;
  std::vector<std::pair<int, Word>> echelon;  // (pivot column, reduced row)
  for (const Word& w : linear_code.words()) {
    Word v = w;
    for (const auto& [pivot, row] : echelon)
      if (v[pivot]) xor_into(v, row);
    int pivot = -1;
    for (int i = 0; i < linear_code.n(); ++i)
      if (v[i]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    echelon.emplace_back(pivot, v);
    basis.push_back(w);
  }
  if (basis.empty()) throw std::invalid_argument("systematic_form: zero code has no basis");
  if (basis.size() > 62 || (std::size_t{1} << basis.size()) != linear_code.size())
    throw std::invalid_argument("systematic_form: |C| != 2^rank, input is not linear");
  GeneratorMatrix g(linear_code.n(), std::move(basis));
  if (g.span() != linear_code)
    throw std::invalid_argument("systematic_form: input is not closed under addition");
  return systematic_form(g);
}

// Binary cyclic code of odd length n with the given complete defining set:
// all multiples m(x)*g(x) of the generator polynomial, deg m < n - deg g.
inline Code cyclic_code(int n, const std::set<int>& defining_set) {
  const Gf2Poly generator = generator_from_defining_set(n, defining_set);
  const int k = n - generator.degree();
  if (k > 20)
    throw std::invalid_argument("cyclic_code: dimension " + std::to_string(k) +
                                " is too large to enumerate");
  std::vector<Word> words;
  words.reserve(std::size_t{1} << k);
  for (std::uint64_t mbits = 0; mbits < (std::uint64_t{1} << k); ++mbits) {
    const Gf2Poly c = poly_mul(Gf2Poly::from_bits(mbits), generator);
    Word w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) w[i] = c.coeff(i) ? 1 : 0;
    words.push_back(std::move(w));
  }
  return Code(2, n, std::move(words));
}

namespace detail {

inline constexpr std::string_view kLevenshteinBase = "1100111101010000110";

// Reference listing: the zero word, then the base word rotated left by
// 0..14 positions.
inline constexpr std::array<std::string_view, 16> kLevenshteinListing = {
    "0000000000000000000",
    "1100111101010000110",
    "1001111010100001101",
    "0011110101000011011",
    "0111101010000110110",
    "1111010100001101100",
    "1110101000011011001",
    "1101010000110110011",
    "1010100001101100111",
    "0101000011011001111",
    "1010000110110011110",
    "0100001101100111101",
    "1000011011001111010",
    "0000110110011110101",
    "0001101100111101010",
    "0011011001111010100",
};

inline constexpr std::array<std::string_view, 4> kSimplexGeneratorRows = {
    "100011101001011",
    "010011011010101",
    "001010111100110",
    "000101111111000",
};

// Messages of the 34-bit listing in its original row order.
inline constexpr std::array<std::string_view, 16> kCounterexampleMessages = {
    "0000", "1000", "1100", "0100", "0110", "1110", "1010", "0010",
    "0011", "1011", "1111", "0111", "0101", "1101", "1001", "0001",
};

// Reference listing of the (34,2^4,18) systematic code: row i is the
// encoding of kCounterexampleMessages[i] by the simplex generator,
// concatenated with row i of the (19,16,10) listing.
inline constexpr std::array<std::string_view, 16> kCounterexampleListing = {
    "0000000000000000000000000000000000",
    "1000111010010111100111101010000110",
    "1100001100111101001111010100001101",
    "0100110110101010011110101000011011",
    "0110011001100110111101010000110110",
    "1110100011110001111010100001101100",
    "1010010101011011110101000011011001",
    "0010101111001101101010000110110011",
    "0011110000111101010100001101100111",
    "1011001010101010101000011011001111",
    "1111111100000001010000110110011110",
    "0111000110010110100001101100111101",
    "0101101001011011000011011001111010",
    "1101010011001100000110110011110101",
    "1001100101100110001101100111101010",
    "0001011111110000011011001111010100",
};

// Ordered rows of the (19,16,10) code, self-checked against the listing.
inline std::vector<Word> levenshtein_rows() {
  const Word base = word_from_digits(std::string(kLevenshteinBase));
  std::vector<Word> rows;
  rows.reserve(16);
  rows.emplace_back(19, 0);
  for (int j = 0; j < 15; ++j) rows.push_back(rotate_left(base, j));
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] != word_from_digits(std::string(kLevenshteinListing[i])))
      throw std::logic_error("levenshtein_19_16_10: row " + std::to_string(i + 1) +
                             " does not match the reference listing");
  return rows;
}

}  // namespace detail

// The systematic [15,4,8] code given by an explicit [I_4 | P] generator.
inline GeneratorMatrix simplex_15_4_8_generator() {
  std::vector<Word> rows;
  for (auto row : detail::kSimplexGeneratorRows)
    rows.push_back(word_from_digits(std::string(row)));
  return GeneratorMatrix(15, std::move(rows));
}

inline SystematicCode simplex_15_4_8() {
  return SystematicCode(simplex_15_4_8_generator().span(), 4);
}

// The (19,16,10) binary code: the zero word plus 15 left rotations of one
// weight-10 word. Nonlinear, not systematic, and shorter than g_2(4,10)=20.
inline Code levenshtein_19_16_10() {
  return Code(2, 19, detail::levenshtein_rows());
}

// The (34,2^4,18) systematic code: each simplex codeword concatenated with a
// distinct word of the (19,16,10) code, in the pairing fixed by the
// reference listing. Length 34 < g_2(4,18) = 35.
inline SystematicCode systematic_counterexample_34() {
  const GeneratorMatrix generator = simplex_15_4_8_generator();
  const std::vector<Word> right = detail::levenshtein_rows();
  std::vector<Word> words;
  words.reserve(16);
  for (std::size_t i = 0; i < 16; ++i) {
    Word w = generator.encode(word_from_digits(std::string(detail::kCounterexampleMessages[i])));
    w.insert(w.end(), right[i].begin(), right[i].end());
    if (w != word_from_digits(std::string(detail::kCounterexampleListing[i])))
      throw std::logic_error("systematic_counterexample_34: row " + std::to_string(i + 1) +
                             " does not match the reference listing");
    words.push_back(std::move(w));
  }
  return SystematicCode(Code(2, 34, std::move(words)), 4);
}

// Search targets for the conjectured family of violations at d = 2^r + 2:
// only dimensions k <= r+1 need checking (k < 1 + log_2 d), and g_2(k,d) is
// the length value a counterexample must beat.
struct ConjectureTarget {
  int r = 3;
  long long d = 10;  // 2^r + 2
  int k_max = 4;     // r + 1
  std::vector<std::pair<int, long long>> griesmer_by_k;
};

inline ConjectureTarget conjecture_targets(int r) {
  if (r < 3) throw std::invalid_argument("conjecture_targets: r must be >= 3");
  if (r > 40) throw std::invalid_argument("conjecture_targets: r too large");
  ConjectureTarget t;
  t.r = r;
  t.d = (1LL << r) + 2;
  t.k_max = r + 1;
  for (int k = 1; k <= t.k_max; ++k) t.griesmer_by_k.emplace_back(k, griesmer(2, k, t.d));
  return t;
}

}  // namespace codebounds
