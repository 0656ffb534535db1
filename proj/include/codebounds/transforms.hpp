#pragma once

// Code surgeries: puncturing, shortening at a systematic coordinate,
// distance reduction by puncturing, parity extension, repetition, and
// pairwise concatenation. All coordinates are 0-based. Every operation
// returns a new code.

#include <numeric>

#include "codebounds/code.hpp"

namespace codebounds {

// Delete one coordinate from every word. Words that collide afterwards are
// merged, so the word count may drop; callers that care should compare sizes.
inline Code puncture(const Code& c, int coordinate) {
  if (coordinate < 0 || coordinate >= c.n())
    throw std::invalid_argument("puncture: coordinate " + std::to_string(coordinate) +
                                " out of range 0.." + std::to_string(c.n() - 1));
  std::vector<Word> out;
  out.reserve(c.size());
  for (const Word& w : c.words()) {
    Word v;
    v.reserve(w.size() - 1);
    for (int j = 0; j < c.n(); ++j)
      if (j != coordinate) v.push_back(w[j]);
    out.push_back(std::move(v));
  }
  return Code::merging_duplicates(c.q(), c.n() - 1, std::move(out));
}

// Keep the words with symbol 0 at a systematic coordinate, then delete that
// coordinate. The result is systematic of dimension k-1 with distance >= d.
inline SystematicCode shorten_systematic(const SystematicCode& c, int coordinate) {
  if (coordinate < 0 || coordinate >= c.k())
    throw std::invalid_argument("shorten_systematic: coordinate " + std::to_string(coordinate) +
                                " is not systematic (0-based, must be < k=" +
                                std::to_string(c.k()) + ")");
  std::vector<Word> kept;
  for (const Word& w : c.code().words()) {
    if (w[coordinate] != 0) continue;
    Word v;
    v.reserve(w.size() - 1);
    for (int j = 0; j < c.n(); ++j)
      if (j != coordinate) v.push_back(w[j]);
    kept.push_back(std::move(v));
  }
  return SystematicCode(Code(c.q(), c.n() - 1, std::move(kept)), c.k() - 1);
}

// Puncture non-systematic coordinates, rightmost first, until the measured
// minimum distance equals `target`. Each puncture lowers the distance by at
// most 1 and cannot merge words while the distance stays above 1, so every
// target in 1..d is reachable as long as n > k.
inline SystematicCode reduce_distance(const SystematicCode& c, int target) {
  if (target < 1) throw std::invalid_argument("reduce_distance: target must be >= 1");
  int d = minimum_distance(c.code());
  if (target > d)
    throw std::invalid_argument("reduce_distance: target " + std::to_string(target) +
                                " exceeds the current distance " + std::to_string(d));
  Code current = c.code();
  while (d > target) {
    if (current.n() <= c.k())
      throw std::logic_error("reduce_distance: no non-systematic coordinate left");
    Code next = puncture(current, current.n() - 1);
    if (next.size() != current.size())
      throw std::logic_error("reduce_distance: puncturing merged codewords");
    const int nd = minimum_distance(next);
    if (nd < target)
      throw std::logic_error("reduce_distance: distance skipped from " + std::to_string(d) +
                             " past the target " + std::to_string(target));
    current = std::move(next);
    d = nd;
  }
  return SystematicCode(std::move(current), c.k());
}

// Append the mod-2 sum of the symbols to each word. Raises an odd minimum
// distance by exactly 1 and leaves an even one unchanged.
inline Code extend_parity(const Code& c) {
  if (c.q() != 2) throw std::invalid_argument("extend_parity: binary codes only");
  std::vector<Word> out;
  out.reserve(c.size());
  for (const Word& w : c.words()) {
    Word v = w;
    std::uint8_t parity = 0;
    for (auto s : w) parity ^= s;
    v.push_back(parity);
    out.push_back(std::move(v));
  }
  return Code(c.q(), c.n() + 1, std::move(out));
}

// Concatenate each word with itself `times` times: (n, M, d) -> (t*n, M, t*d).
inline Code repeat(const Code& c, int times) {
  if (times < 1) throw std::invalid_argument("repeat: times must be >= 1");
  std::vector<Word> out;
  out.reserve(c.size());
  for (const Word& w : c.words()) {
    Word v;
    v.reserve(w.size() * static_cast<std::size_t>(times));
    for (int t = 0; t < times; ++t) v.insert(v.end(), w.begin(), w.end());
    out.push_back(std::move(v));
  }
  return Code(c.q(), c.n() * times, std::move(out));
}

// Elementwise concatenation of two equally long word lists over the same
// alphabet. With distinct left words and distinct right words the result has
// distance >= d(left) + d(right).
inline Code concat_paired_lists(int q, const std::vector<Word>& left,
                                const std::vector<Word>& right) {
  if (left.size() != right.size())
    throw std::invalid_argument("concat_paired: size mismatch (" + std::to_string(left.size()) +
                                " vs " + std::to_string(right.size()) + ")");
  if (left.empty()) throw std::invalid_argument("concat_paired: empty lists");
  std::vector<Word> out;
  out.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    Word v;
    v.reserve(left[i].size() + right[i].size());
    v.insert(v.end(), left[i].begin(), left[i].end());
    v.insert(v.end(), right[i].begin(), right[i].end());
    out.push_back(std::move(v));
  }
  return Code(q, static_cast<int>(left.front().size() + right.front().size()), std::move(out));
}

// Pair the i-th word of `a` (canonical sorted order) with the pairing[i]-th
// word of `b`. The pairing must be a permutation of 0..M-1.
inline Code concat_paired(const Code& a, const Code& b, const std::vector<std::size_t>& pairing) {
  if (a.q() != b.q())
    throw std::invalid_argument("concat_paired: alphabet mismatch");
  if (a.size() != b.size())
    throw std::invalid_argument("concat_paired: word counts differ (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  if (pairing.size() != a.size())
    throw std::invalid_argument("concat_paired: pairing has wrong size");
  std::vector<bool> used(pairing.size(), false);
  for (std::size_t idx : pairing) {
    if (idx >= pairing.size() || used[idx])
      throw std::invalid_argument("concat_paired: pairing is not a permutation");
    used[idx] = true;
  }
  std::vector<Word> right;
  right.reserve(pairing.size());
  for (std::size_t i = 0; i < pairing.size(); ++i) right.push_back(b.words()[pairing[i]]);
  return concat_paired_lists(a.q(), a.words(), right);
}

// Default pairing: sorted order on both sides.
inline Code concat_paired(const Code& a, const Code& b) {
  std::vector<std::size_t> identity(a.size());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  return concat_paired(a, b, identity);
}

}  // namespace codebounds
