#pragma once

// Explicit block codes over an alphabet {0..q-1}: storage as a canonical
// (sorted, duplicate-free) word set, exact minimum distance, weight spectra,
// and the systematic property: the first k coordinates enumerate every
// message tuple exactly once.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace codebounds {

// One codeword symbol per byte; symbols take values in {0..q-1}.
using Word = std::vector<std::uint8_t>;

inline std::string word_to_string(const Word& w, int q = 2) {
  std::string s;
  if (q <= 10) {
    s.reserve(w.size());
    for (auto v : w) s += static_cast<char>('0' + v);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(static_cast<int>(w[i]));
    }
  }
  return s;
}

inline Word word_from_digits(const std::string& digits, int q = 2) {
  Word w;
  w.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch >= '0' + q)
      throw std::invalid_argument(std::string("word_from_digits: symbol '") + ch +
                                  "' out of range for q=" + std::to_string(q));
    w.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return w;
}

inline int hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("hamming_distance: length mismatch (" +
                                std::to_string(u.size()) + " vs " + std::to_string(v.size()) + ")");
  int dist = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dist += (u[i] != v[i]);
  return dist;
}

inline int hamming_weight(const Word& u) {
  int w = 0;
  for (auto s : u) w += (s != 0);
  return w;
}

// Binary-only distance through 64-bit packing and popcount.
inline int hamming_distance_packed(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("hamming_distance_packed: length mismatch");
  int dist = 0;
  std::size_t i = 0;
  while (i < u.size()) {
    std::uint64_t a = 0, b = 0;
    const std::size_t hi = std::min(u.size(), i + 64);
    for (std::size_t j = i; j < hi; ++j) {
      a |= static_cast<std::uint64_t>(u[j] & 1u) << (j - i);
      b |= static_cast<std::uint64_t>(v[j] & 1u) << (j - i);
    }
    dist += std::popcount(a ^ b);
    i = hi;
  }
  return dist;
}

// Immutable value type; every transformation builds a new code.
class Code {
 public:
  Code(int q, int n, std::vector<Word> words) : Code(q, n, std::move(words), false) {}

  // Same construction, but colliding words are merged instead of rejected
  // (puncturing may map two codewords to the same shorter word).
  static Code merging_duplicates(int q, int n, std::vector<Word> words) {
    return Code(q, n, std::move(words), true);
  }

  int q() const { return q_; }
  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }

  // Sorted lexicographically; this is the canonical order used everywhere.
  const std::vector<Word>& words() const { return words_; }

  bool contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
  }

  friend bool operator==(const Code& a, const Code& b) {
    return a.q_ == b.q_ && a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Code& a, const Code& b) { return !(a == b); }

 private:
  Code(int q, int n, std::vector<Word> words, bool merge)
      : q_(q), n_(n), words_(std::move(words)) {
    if (q_ < 2 || q_ > 255) throw std::invalid_argument("Code: q must be in 2..255");
    if (n_ < 0) throw std::invalid_argument("Code: negative length");
    if (words_.empty()) throw std::invalid_argument("Code: a code needs at least one word");
    for (const Word& w : words_) {
      if (static_cast<int>(w.size()) != n_)
        throw std::invalid_argument("Code: word " + word_to_string(w, q_) + " has length " +
                                    std::to_string(w.size()) + ", expected " + std::to_string(n_));
      for (auto s : w)
        if (s >= q_)
          throw std::invalid_argument("Code: symbol " + std::to_string(static_cast<int>(s)) +
                                      " out of range for q=" + std::to_string(q_));
    }
    std::sort(words_.begin(), words_.end());
    const auto dup = std::adjacent_find(words_.begin(), words_.end());
    if (dup != words_.end()) {
      if (!merge)
        throw std::invalid_argument("Code: duplicate word " + word_to_string(*dup, q_));
      words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    }
  }

  int q_;
  int n_;
  std::vector<Word> words_;
};

// Exact minimum over all unordered pairs. O(M^2); binary codes go through
// the packed popcount path.
inline int minimum_distance(const Code& c) {
  const auto& words = c.words();
  if (words.size() < 2)
    throw std::invalid_argument("minimum_distance: need at least 2 codewords, have " +
                                std::to_string(words.size()));
  const std::size_t m = words.size();
  int best = c.n();

  if (c.q() == 2) {
    const int limbs = (c.n() + 63) / 64;
    std::vector<std::uint64_t> packed(m * static_cast<std::size_t>(limbs), 0);
    for (std::size_t i = 0; i < m; ++i)
      for (int j = 0; j < c.n(); ++j)
        packed[i * limbs + j / 64] |= static_cast<std::uint64_t>(words[i][j] & 1u) << (j % 64);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        int dist = 0;
        for (int t = 0; t < limbs; ++t)
          dist += std::popcount(packed[i * limbs + t] ^ packed[j * limbs + t]);
        if (dist < best) {
          best = dist;
          if (best == 1) return 1;
        }
      }
    }
    return best;
  }

  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      int dist = 0;
      for (int t = 0; t < c.n() && dist < best; ++t) dist += (words[i][t] != words[j][t]);
      if (dist < best) {
        best = dist;
        if (best == 1) return 1;
      }
    }
  }
  return best;
}

inline std::map<int, long long> weight_distribution(const Code& c) {
  std::map<int, long long> hist;
  for (const Word& w : c.words()) ++hist[hamming_weight(w)];
  return hist;
}

// Lexicographic successor of a tuple with symbols in {0..q-1};
// returns false once the last tuple has been passed.
inline bool next_tuple(Word& t, int q) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i] + 1 < q) {
      ++t[i];
      std::fill(t.begin() + i + 1, t.end(), 0);
      return true;
    }
    t[i] = 0;
  }
  return false;
}

struct SystematicCheck {
  bool ok = false;
  // On failure exactly one of these is set: a message prefix shared by two
  // codewords, or a message tuple no codeword starts with.
  std::optional<Word> duplicate_message;
  std::optional<Word> missing_message;
  explicit operator bool() const { return ok; }
};

// True iff M = q^k and projecting onto coordinates 1..k hits every message
// exactly once.
inline SystematicCheck check_systematic(const Code& c, int k) {
  if (k < 0 || k > c.n())
    throw std::invalid_argument("check_systematic: k must be in 0.." + std::to_string(c.n()));
  SystematicCheck res;
  const auto& words = c.words();

  // words are sorted, so equal prefixes are adjacent
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    if (std::equal(words[i].begin(), words[i].begin() + k, words[i + 1].begin())) {
      res.duplicate_message = Word(words[i].begin(), words[i].begin() + k);
      return res;
    }
  }

  // prefixes are distinct and sorted; walk the message space alongside them
  Word msg(static_cast<std::size_t>(k), 0);
  std::size_t idx = 0;
  do {
    if (idx >= words.size() || !std::equal(msg.begin(), msg.end(), words[idx].begin())) {
      res.missing_message = msg;
      return res;
    }
    ++idx;
  } while (next_tuple(msg, c.q()));

  res.ok = true;
  return res;
}

inline bool is_prime(int v) {
  if (v < 2) return false;
  for (int p = 2; p * p <= v; ++p)
    if (v % p == 0) return false;
  return true;
}

// The code {u - w : u in c} with symbol-wise subtraction mod q; contains the
// zero word and has the same pairwise distance spectrum as c.
inline Code translate_to_zero(const Code& c, const Word& w) {
  if (!is_prime(c.q()))
    throw std::invalid_argument("translate_to_zero: q=" + std::to_string(c.q()) +
                                " is not prime, symbol-wise subtraction is undefined");
  if (!c.contains(w))
    throw std::invalid_argument("translate_to_zero: word " + word_to_string(w, c.q()) +
                                " is not in the code");
  std::vector<Word> out;
  out.reserve(c.size());
  for (const Word& u : c.words()) {
    Word v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      v[i] = static_cast<std::uint8_t>((u[i] + c.q() - w[i]) % c.q());
    out.push_back(std::move(v));
  }
  return Code(c.q(), c.n(), std::move(out));
}

// A code together with a verified systematic dimension k. The encoding map
// is implicit in the word set: the word for message x is the unique codeword
// whose first k symbols equal x.
class SystematicCode {
 public:
  SystematicCode(Code code, int k) : code_(std::move(code)), k_(k) {
    const SystematicCheck chk = check_systematic(code_, k_);
    if (!chk.ok) {
      std::string msg = "SystematicCode: coordinates 1.." + std::to_string(k_) +
                        " do not enumerate every message";
      if (chk.duplicate_message)
        msg += " (prefix " + word_to_string(*chk.duplicate_message, code_.q()) + " repeats)";
      else if (chk.missing_message)
        msg += " (message " + word_to_string(*chk.missing_message, code_.q()) + " is missing)";
      throw std::invalid_argument(msg);
    }
  }

  const Code& code() const { return code_; }
  int k() const { return k_; }
  int q() const { return code_.q(); }
  int n() const { return code_.n(); }
  std::size_t size() const { return code_.size(); }
  int redundancy() const { return code_.n() - k_; }

  const Word& word_for_message(const Word& message) const {
    if (static_cast<int>(message.size()) != k_)
      throw std::invalid_argument("word_for_message: message length must be k");
    const auto& words = code_.words();
    const auto it = std::lower_bound(
        words.begin(), words.end(), message, [this](const Word& w, const Word& m) {
          return std::lexicographical_compare(w.begin(), w.begin() + k_, m.begin(), m.end());
        });
    // the systematic check guarantees a match exists
    return *it;
  }

 private:
  Code code_;
  int k_;
};

// Coordinates (0-based) forming an information set: a k-subset on which the
// codewords take all q^k values. Searches subsets in lexicographic order;
// returns nullopt when M is not a power of q or no subset works.
inline std::optional<std::vector<int>> find_information_set(const Code& c) {
  long long m = static_cast<long long>(c.size());
  int k = 0;
  long long p = 1;
  while (p < m) {
    p *= c.q();
    ++k;
  }
  if (p != m || k > c.n()) return std::nullopt;
  if (k == 0) return std::vector<int>{};

  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = c.n();
  while (true) {
    std::vector<Word> proj;
    proj.reserve(c.size());
    for (const Word& w : c.words()) {
      Word t(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) t[i] = w[idx[i]];
      proj.push_back(std::move(t));
    }
    std::sort(proj.begin(), proj.end());
    if (std::adjacent_find(proj.begin(), proj.end()) == proj.end()) return idx;

    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct CodeParams {
  int q = 2;
  int n = 0;
  long long M = 0;
  std::optional<int> k;
  std::optional<int> d;
};

}  // namespace codebounds
