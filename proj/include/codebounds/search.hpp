#pragma once

// Exact computation of S_q(k,d), the minimum length of a systematic code
// with dimension k and distance d, by exhaustive depth-first search.
//
// The search assigns the n-k non-systematic symbols of each message in
// lexicographic message order, pruning as soon as a pair of assigned words
// violates the distance constraint. Two reductions keep it exhaustive while
// shrinking the tree:
//   * translation invariance: the all-zero message maps to the all-zero word;
//   * for q=2, the non-systematic columns (read as bit vectors over the
//     message order) may be assumed lexicographically non-decreasing, since
//     permuting those columns preserves distance and systematicity.
// A witness found under these constraints is a genuine code, and exhausting
// the constrained tree proves nonexistence outright.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <optional>

#include "codebounds/bounds.hpp"
#include "codebounds/code.hpp"

namespace codebounds {

enum class ExistsStatus { WitnessFound, NoneExists, Timeout };

struct ExistsResult {
  ExistsStatus status = ExistsStatus::Timeout;
  std::optional<Code> witness;
  std::uint64_t nodes_explored = 0;
};

enum class SearchStatus { Exact, LowerBoundOnly, Timeout };

inline std::string search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact: return "exact";
    case SearchStatus::LowerBoundOnly: return "lower-bound-only";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

struct SearchOutcome {
  int q = 2;
  int k = 1;
  long long d = 1;
  SearchStatus status = SearchStatus::Timeout;
  long long value = 0;  // exact S, otherwise the best proven lower bound
  std::optional<long long> witness_length;
  std::optional<Code> witness;
  std::uint64_t nodes_explored = 0;
  double budget_used_seconds = 0.0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

// Binary search state. Words are packed with coordinate 0 at the highest
// used bit, so numeric order on packed words equals lexicographic order on
// symbol tuples, and ascending suffix enumeration yields the
// lexicographically least witness first.
struct BinaryDfs {
  int k = 1;
  int suffix_len = 0;
  long long d = 1;
  std::uint64_t suffix_count = 1;
  Clock::time_point deadline;
  const std::atomic<long long>* branch_cutoff = nullptr;  // parallel driver only
  long long branch_index = 0;
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::vector<std::uint64_t> rows;
  std::vector<std::uint8_t> columns_equal;  // adjacent suffix columns equal on all placed rows

  bool suffix_bit(std::uint64_t s, int column) const {
    return ((s >> (suffix_len - 1 - column)) & 1u) != 0;
  }

  bool column_order_ok(std::uint64_t s) const {
    for (int j = 0; j + 1 < suffix_len; ++j)
      if (columns_equal[j] && suffix_bit(s, j) && !suffix_bit(s, j + 1)) return false;
    return true;
  }

  bool place(int row) {
    if (row == (1 << k)) return true;
    const std::uint64_t prefix = static_cast<std::uint64_t>(row) << suffix_len;
    for (std::uint64_t s = 0; s < suffix_count; ++s) {
      if ((++nodes & 0xFFF) == 0) {
        if (Clock::now() > deadline) {
          timed_out = true;
          return false;
        }
        if (branch_cutoff && branch_cutoff->load(std::memory_order_relaxed) < branch_index)
          return false;  // a lexicographically smaller branch already holds a witness
      }
      if (!column_order_ok(s)) continue;
      const std::uint64_t w = prefix | s;
      bool ok = true;
      for (std::size_t j = 0; j < rows.size() && ok; ++j)
        ok = std::popcount(rows[j] ^ w) >= d;
      if (!ok) continue;

      rows.push_back(w);
      std::vector<std::uint8_t> saved = columns_equal;
      for (int j = 0; j + 1 < suffix_len; ++j)
        if (columns_equal[j] && suffix_bit(s, j) != suffix_bit(s, j + 1)) columns_equal[j] = 0;
      if (place(row + 1)) return true;
      columns_equal = std::move(saved);
      rows.pop_back();
      if (timed_out) return false;
    }
    return false;
  }
};

inline Code unpack_binary_rows(const std::vector<std::uint64_t>& rows, int n) {
  std::vector<Word> words;
  words.reserve(rows.size());
  for (std::uint64_t r : rows) {
    Word w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) w[j] = (r >> (n - 1 - j)) & 1u;
    words.push_back(std::move(w));
  }
  return Code(2, n, std::move(words));
}

inline ExistsResult exists_binary(int k, int n, long long d, double budget_seconds, int threads) {
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(budget_seconds));
  const int suffix_len = n - k;
  const std::uint64_t suffix_count = std::uint64_t{1} << suffix_len;

  auto make_dfs = [&]() {
    BinaryDfs dfs;
    dfs.k = k;
    dfs.suffix_len = suffix_len;
    dfs.d = d;
    dfs.suffix_count = suffix_count;
    dfs.deadline = deadline;
    dfs.rows = {0};  // message 0 is pinned to the all-zero word
    dfs.columns_equal.assign(suffix_len > 0 ? suffix_len - 1 : 0, 1);
    return dfs;
  };

  if (threads <= 1 || k < 1) {
    BinaryDfs dfs = make_dfs();
    const bool found = dfs.place(1);
    ExistsResult res;
    res.nodes_explored = dfs.nodes;
    if (found) {
      res.status = ExistsStatus::WitnessFound;
      res.witness = unpack_binary_rows(dfs.rows, n);
    } else {
      res.status = dfs.timed_out ? ExistsStatus::Timeout : ExistsStatus::NoneExists;
    }
    return res;
  }

  // Parallel driver: split on the suffix of message 1. All suffix columns
  // are still equal at that point, so only the n-k+1 non-decreasing suffixes
  // 0...01...1 can start a branch.
  std::vector<std::uint64_t> branch_suffixes;
  for (int ones = 0; ones <= suffix_len; ++ones)
    branch_suffixes.push_back((std::uint64_t{1} << ones) - 1);

  struct BranchResult {
    bool found = false;
    bool timed_out = false;
    std::vector<std::uint64_t> rows;
    std::uint64_t nodes = 0;
  };
  std::vector<BranchResult> results(branch_suffixes.size());
  std::atomic<long long> cutoff{std::numeric_limits<long long>::max()};

  auto run_branch = [&](std::size_t idx) {
    const std::uint64_t s1 = branch_suffixes[idx];
    BinaryDfs dfs = make_dfs();
    dfs.branch_cutoff = &cutoff;
    dfs.branch_index = static_cast<long long>(idx);
    const std::uint64_t w1 = (std::uint64_t{1} << suffix_len) | s1;  // message 1
    BranchResult& out = results[idx];
    if (std::popcount(dfs.rows[0] ^ w1) < d) return;  // prune the whole branch
    dfs.rows.push_back(w1);
    for (int j = 0; j + 1 < suffix_len; ++j)
      if (dfs.suffix_bit(s1, j) != dfs.suffix_bit(s1, j + 1)) dfs.columns_equal[j] = 0;
    out.found = k >= 1 && dfs.place(2);
    out.timed_out = dfs.timed_out;
    out.nodes = dfs.nodes;
    if (out.found) {
      out.rows = dfs.rows;
      long long expected = cutoff.load();
      while (expected > static_cast<long long>(idx) &&
             !cutoff.compare_exchange_weak(expected, static_cast<long long>(idx))) {
      }
    }
  };

  const int workers = std::min<int>(threads, static_cast<int>(branch_suffixes.size()));
  std::vector<std::future<void>> futures;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < workers; ++t)
    futures.push_back(std::async(std::launch::async, [&]() {
      for (std::size_t idx = next.fetch_add(1); idx < branch_suffixes.size();
           idx = next.fetch_add(1)) {
        if (cutoff.load(std::memory_order_relaxed) < static_cast<long long>(idx)) continue;
        run_branch(idx);
      }
    }));
  for (auto& f : futures) f.get();

  ExistsResult res;
  for (const BranchResult& b : results) res.nodes_explored += b.nodes;
  // resolve in branch order so the outcome is schedule-independent
  for (std::size_t idx = 0; idx < results.size(); ++idx) {
    if (results[idx].found) {
      res.status = ExistsStatus::WitnessFound;
      res.witness = unpack_binary_rows(results[idx].rows, n);
      return res;
    }
    if (results[idx].timed_out) {
      res.status = ExistsStatus::Timeout;
      return res;
    }
  }
  res.status = ExistsStatus::NoneExists;
  return res;
}

// General alphabet, used only for k <= 2. Plain row-wise DFS with suffixes
// enumerated as base-q odometers; no column reduction.
struct GeneralDfs {
  int q = 3, k = 1, n = 1;
  long long d = 1;
  Clock::time_point deadline;
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::vector<Word> rows;
  std::vector<Word> messages;

  bool place(std::size_t row) {
    if (row == messages.size()) return true;
    Word word(static_cast<std::size_t>(n), 0);
    std::copy(messages[row].begin(), messages[row].end(), word.begin());
    while (true) {
      if ((++nodes & 0xFFF) == 0 && Clock::now() > deadline) {
        timed_out = true;
        return false;
      }
      bool ok = true;
      for (std::size_t j = 0; j < rows.size() && ok; ++j)
        ok = hamming_distance(rows[j], word) >= d;
      if (ok) {
        rows.push_back(word);
        if (place(row + 1)) return true;
        rows.pop_back();
        if (timed_out) return false;
      }
      // next suffix in lexicographic order
      int i = n - 1;
      for (; i >= k; --i) {
        if (word[i] + 1 < q) {
          ++word[i];
          std::fill(word.begin() + i + 1, word.end(), 0);
          break;
        }
        word[i] = 0;
      }
      if (i < k) return false;
    }
  }
};

inline ExistsResult exists_general(int q, int k, int n, long long d, double budget_seconds) {
  GeneralDfs dfs;
  dfs.q = q;
  dfs.k = k;
  dfs.n = n;
  dfs.d = d;
  dfs.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(budget_seconds));
  Word msg(static_cast<std::size_t>(k), 0);
  do {
    dfs.messages.push_back(msg);
  } while (next_tuple(msg, q));
  dfs.rows.push_back(Word(static_cast<std::size_t>(n), 0));  // message 0 -> zero word

  ExistsResult res;
  const bool found = dfs.place(1);
  res.nodes_explored = dfs.nodes;
  if (found) {
    res.status = ExistsStatus::WitnessFound;
    res.witness = Code(q, n, dfs.rows);
  } else {
    res.status = dfs.timed_out ? ExistsStatus::Timeout : ExistsStatus::NoneExists;
  }
  return res;
}

}  // namespace detail

// Does an (n, q^k, >=d) systematic code exist? Exhaustive within the budget.
inline ExistsResult exists_systematic(int q, int k, long long d, int n, double budget_seconds,
                                      int threads = 1) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "exists_systematic: need q >= 2, k >= 1, d >= 1");
  require_arg(n >= k, "exists_systematic: need n >= k");
  require_arg(budget_seconds > 0, "exists_systematic: budget must be positive");
  if (q != 2) {
    require_arg(k <= 2, "exists_systematic: alphabets above 2 are supported only for k <= 2");
    require_arg(pow_ll(q, n) <= (1LL << 40), "exists_systematic: search space too large");
  } else {
    require_arg(n <= 56 && k <= 16, "exists_systematic: binary search supports n <= 56, k <= 16");
  }

  // Messages at Hamming distance 1 yield words at distance 1 when n = k.
  if (n == k && d >= 2) return {ExistsStatus::NoneExists, std::nullopt, 0};

  if (q == 2) return detail::exists_binary(k, n, d, budget_seconds, threads);
  return detail::exists_general(q, k, n, d, budget_seconds);
}

// S_q(k,d): ascending scan over n starting from the best applicable lower
// bound; the first n admitting a witness is exact.
inline SearchOutcome compute_S(int q, int k, long long d, double budget_seconds, int max_n = 0,
                               int threads = 1) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "compute_S: need q >= 2, k >= 1, d >= 1");
  require_arg(budget_seconds > 0, "compute_S: budget must be positive");
  const auto start = detail::Clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(detail::Clock::now() - start).count();
  };

  SearchOutcome out;
  out.q = q;
  out.k = k;
  out.d = d;

  const long long hard_cap = q == 2 ? 56 : 20;
  const long long horizon = (max_n > 0) ? std::min<long long>(max_n, hard_cap) : hard_cap;
  long long n = std::max<long long>(k, best_lower_bound(q, Setting::Systematic, k, d).value);
  out.value = n;  // proven lower bound so far
  out.status = SearchStatus::LowerBoundOnly;

  for (; n <= horizon; ++n) {
    const double remaining = budget_seconds - elapsed();
    if (remaining <= 0) {
      out.status = SearchStatus::Timeout;
      break;
    }
    const ExistsResult er = exists_systematic(q, k, d, static_cast<int>(n), remaining, threads);
    out.nodes_explored += er.nodes_explored;
    if (er.status == ExistsStatus::WitnessFound) {
      out.status = SearchStatus::Exact;
      out.value = n;
      out.witness_length = n;
      out.witness = er.witness;
      break;
    }
    if (er.status == ExistsStatus::Timeout) {
      out.status = SearchStatus::Timeout;
      break;
    }
    out.value = n + 1;  // length n exhausted, so S >= n + 1
  }
  out.budget_used_seconds = elapsed();
  return out;
}

// Checks S_q(k,d) >= g_q(k,d) for every k in the sufficient range
// k <= ceil(log_q d) (capped by k_max), using the exhaustive oracle.
struct FamilyCheckRow {
  int k = 1;
  SearchOutcome outcome;
  long long griesmer_value = 0;
  bool confirmed = false;  // exact and >= the Griesmer value
};

struct FamilyCheckReport {
  int q = 2;
  long long d = 1;
  int k_checked_max = 0;
  std::vector<FamilyCheckRow> rows;
  bool all_confirmed = false;
};

inline FamilyCheckReport verify_family_theorem(int q, long long d, int k_max,
                                               double budget_seconds, int threads = 1) {
  require_arg(q >= 2 && d >= 1 && k_max >= 1, "verify_family_theorem: bad parameters");
  const auto start = detail::Clock::now();
  auto elapsed = [&]() {
    return std::chrono::duration<double>(detail::Clock::now() - start).count();
  };

  FamilyCheckReport report;
  report.q = q;
  report.d = d;
  report.k_checked_max =
      static_cast<int>(std::min<long long>(k_max, std::max<long long>(1, ceil_log(q, d))));

  bool all_ok = true;
  for (int k = 1; k <= report.k_checked_max; ++k) {
    const double remaining = std::max(0.001, budget_seconds - elapsed());
    FamilyCheckRow row;
    row.k = k;
    row.griesmer_value = griesmer(q, k, d);
    row.outcome = compute_S(q, k, d, remaining, 0, threads);
    row.confirmed =
        row.outcome.status == SearchStatus::Exact && row.outcome.value >= row.griesmer_value;
    all_ok = all_ok && row.confirmed;
    report.rows.push_back(std::move(row));
  }
  report.all_confirmed = all_ok;
  return report;
}

}  // namespace codebounds
