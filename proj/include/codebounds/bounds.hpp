#pragma once

// Length lower bounds for block codes, all in exact integer arithmetic:
// the Griesmer sum g_q(k,d), the Singleton bound and its systematic
// improvement, the Plotkin bound, three weaker Griesmer-style bounds that
// hold for every code with enough words (A, B, C / weak Griesmer), plus a
// classifier that reports which family theorem, if any, proves the Griesmer
// bound for a given (q, k, d) in the systematic or fully nonlinear setting.

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace codebounds {

inline void require_arg(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

inline long long pow_ll(long long q, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    if (r > std::numeric_limits<long long>::max() / q)
      throw std::overflow_error("pow_ll: overflow computing " + std::to_string(q) + "^" +
                                std::to_string(e));
    r *= q;
  }
  return r;
}

// Largest e >= 0 with q^e <= v. Integer arithmetic only.
inline long long floor_log(long long q, long long v) {
  require_arg(q >= 2 && v >= 1, "floor_log: need q >= 2, v >= 1");
  long long e = 0, p = 1;
  while (p <= v / q) {
    p *= q;
    ++e;
  }
  return e;
}

// Smallest e >= 0 with q^e >= v.
inline long long ceil_log(long long q, long long v) {
  require_arg(q >= 2 && v >= 1, "ceil_log: need q >= 2, v >= 1");
  return v <= 1 ? 0 : floor_log(q, v - 1) + 1;
}

// Largest l >= 0 with q^l | d.
inline long long max_power_dividing(long long q, long long d) {
  require_arg(q >= 2 && d >= 1, "max_power_dividing: need q >= 2, d >= 1");
  long long l = 0;
  while (d % q == 0) {
    d /= q;
    ++l;
  }
  return l;
}

// g_q(k,d) = sum_{i=0}^{k-1} ceil(d / q^i).
inline long long griesmer(long long q, long long k, long long d) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "griesmer: need q >= 2, k >= 1, d >= 1");
  long long total = 0, p = 1;
  for (long long i = 0; i < k; ++i) {
    total += ceil_div_ll(d, p);
    if (p >= d) {
      total += k - 1 - i;  // every remaining term is 1
      break;
    }
    p *= q;
  }
  return total;
}

inline long long singleton(long long k, long long d) {
  require_arg(k >= 1 && d >= 1, "singleton: need k >= 1, d >= 1");
  return d + k - 1;
}

// Binary systematic improvement k + ceil(3d/2) - 2. The underlying argument
// punctures a systematic coordinate, so it needs k >= 2; for k = 1 the plain
// bound n >= d is returned instead.
inline long long singleton_improved_systematic(long long k, long long d) {
  require_arg(k >= 1 && d >= 1, "singleton_improved_systematic: need k >= 1, d >= 1");
  if (k == 1) return d;
  return k + ceil_div_ll(3 * d, 2) - 2;
}

// Largest M compatible with (n, d) under the Plotkin hypothesis n < qd/(q-1).
inline long long plotkin_max_M(long long q, long long n, long long d) {
  require_arg(q >= 2 && n >= 1 && d >= 1, "plotkin_max_M: need q >= 2, n >= 1, d >= 1");
  if ((q - 1) * n >= q * d)
    throw std::domain_error("plotkin_max_M: hypothesis violated, need n < q*d/(q-1) = " +
                            std::to_string(q * d) + "/" + std::to_string(q - 1));
  return (q * d) / (q * d - (q - 1) * n);
}

// Length bound n >= ceil(d * (1 - 1/M) / (1 - 1/q)); holds for every code.
inline long long plotkin_min_n(long long q, long long M, long long d) {
  require_arg(q >= 2 && M >= 2 && d >= 1, "plotkin_min_n: need q >= 2, M >= 2, d >= 1");
  const __int128 num = static_cast<__int128>(d) * (M - 1) * q;
  const __int128 den = static_cast<__int128>(M) * (q - 1);
  return static_cast<long long>((num + den - 1) / den);
}

// d + sum_{i=1}^{k-1} ceil(q^l r / q^i) with l = floor(log_q d), r = floor(d/q^l).
inline long long bound_A(long long q, long long k, long long d) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "bound_A: need q >= 2, k >= 1, d >= 1");
  const long long l = floor_log(q, d);
  const long long base = pow_ll(q, l) * (d / pow_ll(q, l));  // q^l * r
  long long total = d, p = 1;
  for (long long i = 1; i < k; ++i) {
    if (p > base / q) {  // q^i > base from here on: every term is 1
      total += k - i;
      break;
    }
    p *= q;
    total += ceil_div_ll(base, p);
  }
  return total;
}

// sum_{i=0}^{h} ceil(d / q^i) with k = floor(log_q M), h = min(k-1, v_q(d)).
inline long long bound_B(long long q, long long M, long long d) {
  require_arg(q >= 2 && M >= 2 && d >= 1, "bound_B: need q >= 2, M >= 2, d >= 1");
  const long long k = floor_log(q, M);
  const long long h = std::min(k - 1, max_power_dividing(q, d));
  long long total = 0, p = 1;
  for (long long i = 0; i <= h; ++i) {
    total += d / p;  // exact: q^i | d for i <= v_q(d)
    p *= q;
  }
  return total;
}

// ceil(d * (1 - q^-k) / (1 - 1/q)) = ceil(sum_{i=0}^{k-1} d/q^i), exact rationals.
inline long long weak_griesmer(long long q, long long k, long long d) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "weak_griesmer: need q >= 2, k >= 1, d >= 1");
  const long long qk = pow_ll(q, k);
  const __int128 num = static_cast<__int128>(d) * (qk - 1);
  const __int128 den = static_cast<__int128>(qk / q) * (q - 1);
  return static_cast<long long>((num + den - 1) / den);
}

// Same bound keyed by a word count: k = floor(log_q M).
inline long long bound_C(long long q, long long M, long long d) {
  require_arg(M >= 2, "bound_C: need M >= 2");
  return weak_griesmer(q, floor_log(q, M), d);
}

// g_2(k, d+1) - g_2(k, d) = min(k, l+1) where 2^l || d.
inline long long g2_increment(long long k, long long d) {
  require_arg(k >= 1 && d >= 1, "g2_increment: need k >= 1, d >= 1");
  return std::min(k, max_power_dividing(2, d) + 1);
}

// ---------------------------------------------------------------------------
// Family classification: which theorem, if any, proves n >= g_q(k,d)?

enum class Setting { Systematic, Nonlinear, Linear };

inline std::string setting_name(Setting s) {
  switch (s) {
    case Setting::Systematic: return "systematic";
    case Setting::Nonlinear: return "nonlinear";
    case Setting::Linear: return "linear";
  }
  return "?";
}

enum class Holds { Proven, Unknown, DisprovenByExample };

inline std::string holds_name(Holds h) {
  switch (h) {
    case Holds::Proven: return "proven";
    case Holds::Unknown: return "unknown";
    case Holds::DisprovenByExample: return "disproven-by-example";
  }
  return "?";
}

enum class Family {
  None,
  DistanceAtMost2Q,       // systematic: d <= 2q
  SmallFactorTimesPower,  // systematic: d = r*q^l, 1 <= r < q, l >= 1
  DifferenceOfTwoPowers,  // systematic, binary: d = 2^r - 2^s, r > s >= 1
  OddNearPowerOfTwo,      // systematic, binary: d = 2^r - 1 or 2^r - 2^s - 1
  DividesQPowKMinus1,     // nonlinear: q^(k-1) | d
  SmallKWithFactoredD,    // nonlinear: q^(k-1) <= d and d = r*q^l, 1 <= r < q
};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::None: return "none";
    case Family::DistanceAtMost2Q: return "d <= 2q";
    case Family::SmallFactorTimesPower: return "d = r*q^l (1 <= r < q, l >= 1)";
    case Family::DifferenceOfTwoPowers: return "d = 2^r - 2^s";
    case Family::OddNearPowerOfTwo: return "d = 2^r - 1 or d = 2^r - 2^s - 1";
    case Family::DividesQPowKMinus1: return "q^(k-1) divides d";
    case Family::SmallKWithFactoredD: return "q^(k-1) <= d and d = r*q^l (1 <= r < q)";
  }
  return "?";
}

// d = 2^r - 2^s with r > s >= 1, if such a decomposition exists.
inline std::optional<std::pair<long long, long long>> as_difference_of_two_powers(long long d) {
  if (d < 2 || d % 2 != 0) return std::nullopt;
  long long s = 0, t = d;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  if (!std::has_single_bit(static_cast<unsigned long long>(t) + 1)) return std::nullopt;
  const long long r = s + std::bit_width(static_cast<unsigned long long>(t));
  return std::make_pair(r, s);
}

struct FamilyVerdict {
  Setting setting = Setting::Systematic;
  Holds holds = Holds::Unknown;
  Family family = Family::None;
  std::string theorem;  // family_name(family) when proven, otherwise empty
  long long q = 2, k = 1, d = 1;
  std::optional<long long> l, r, s;
  std::vector<Family> all_matches;
  std::string condition;
};

// First matching family in a fixed precedence order. The systematic setting
// checks the four systematic families; the nonlinear setting checks the two
// word-count families. The two explicitly known violations, (q=2, M=16, d=10)
// nonlinear and (q=2, k=4, d=18) systematic, are reported as disproven.
inline FamilyVerdict classify_family(long long q, long long k, long long d, Setting setting) {
  require_arg(q >= 2 && k >= 1 && d >= 1, "classify_family: need q >= 2, k >= 1, d >= 1");
  require_arg(setting != Setting::Linear,
              "classify_family: the Griesmer bound needs no family theorem for linear codes");
  FamilyVerdict v;
  v.setting = setting;
  v.q = q;
  v.k = k;
  v.d = d;

  // sufficiency note: once the bound is settled for every k with q^(k-1) < d,
  // it holds for every k
  const long long k_sufficient = (d == 1) ? 0 : floor_log(q, d - 1) + 1;
  const std::string suffix =
      (setting == Setting::Systematic && k_sufficient > 0)
          ? "; for fixed q=" + std::to_string(q) + ", d=" + std::to_string(d) +
                " it suffices to verify all k <= " + std::to_string(k_sufficient) +
                " (k < 1 + log_q d)"
          : "";

  if (setting == Setting::Nonlinear && q == 2 && k == 4 && d == 10) {
    v.holds = Holds::DisprovenByExample;
    v.condition = "an explicit (19,16,10) binary code has length below g_2(4,10)=20";
    return v;
  }
  if (setting == Setting::Systematic && q == 2 && k == 4 && d == 18) {
    v.holds = Holds::DisprovenByExample;
    v.condition = "an explicit (34,2^4,18) binary systematic code has length below g_2(4,18)=35" +
                  suffix;
    return v;
  }

  struct Match {
    Family family;
    std::optional<long long> l, r, s;
    std::string detail;
  };
  std::vector<Match> matches;

  if (setting == Setting::Systematic) {
    if (d <= 2 * q)
      matches.push_back({Family::DistanceAtMost2Q, {}, {}, {},
                         "d=" + std::to_string(d) + " <= 2q=" + std::to_string(2 * q)});
    {
      const long long l = max_power_dividing(q, d);
      const long long r = d / pow_ll(q, l);
      if (l >= 1 && r < q)
        matches.push_back({Family::SmallFactorTimesPower, l, r, {},
                           "d=" + std::to_string(d) + "=" + std::to_string(r) + "*" +
                               std::to_string(q) + "^" + std::to_string(l)});
    }
    if (q == 2) {
      if (auto rs = as_difference_of_two_powers(d))
        matches.push_back({Family::DifferenceOfTwoPowers, {}, rs->first, rs->second,
                           "d=" + std::to_string(d) + "=2^" + std::to_string(rs->first) + "-2^" +
                               std::to_string(rs->second)});
      if (d % 2 == 1) {
        if (std::has_single_bit(static_cast<unsigned long long>(d) + 1)) {
          const long long r = std::bit_width(static_cast<unsigned long long>(d));
          matches.push_back({Family::OddNearPowerOfTwo, {}, r, {},
                             "d=" + std::to_string(d) + "=2^" + std::to_string(r) + "-1"});
        } else if (auto rs = as_difference_of_two_powers(d + 1)) {
          matches.push_back({Family::OddNearPowerOfTwo, {}, rs->first, rs->second,
                             "d=" + std::to_string(d) + "=2^" + std::to_string(rs->first) + "-2^" +
                                 std::to_string(rs->second) + "-1"});
        }
      }
    }
  } else {  // Nonlinear
    if (k - 1 <= floor_log(q, d) && d % pow_ll(q, k - 1) == 0) {
      const long long r = d / pow_ll(q, k - 1);
      matches.push_back({Family::DividesQPowKMinus1, k - 1, r, {},
                         "q^(k-1)=" + std::to_string(pow_ll(q, k - 1)) + " divides d=" +
                             std::to_string(d)});
    }
    {
      const long long l = max_power_dividing(q, d);
      const long long r = d / pow_ll(q, l);
      if (k - 1 <= floor_log(q, d) && pow_ll(q, k - 1) <= d && r < q)
        matches.push_back({Family::SmallKWithFactoredD, l, r, {},
                           "q^(k-1) <= d and d=" + std::to_string(r) + "*" + std::to_string(q) +
                               "^" + std::to_string(l)});
    }
  }

  for (const Match& m : matches) v.all_matches.push_back(m.family);

  if (!matches.empty()) {
    const Match& first = matches.front();
    v.holds = Holds::Proven;
    v.family = first.family;
    v.theorem = family_name(first.family);
    v.l = first.l;
    v.r = first.r;
    v.s = first.s;
    v.condition = "proven: " + first.detail;
    if (matches.size() > 1) {
      v.condition += "; also matches:";
      for (std::size_t i = 1; i < matches.size(); ++i)
        v.condition += std::string(i > 1 ? "," : "") + " " + family_name(matches[i].family);
    }
    v.condition += suffix;
    return v;
  }

  v.holds = Holds::Unknown;
  v.condition = "no covered family matches d=" + std::to_string(d);
  if (q == 2 && d >= 10 && std::has_single_bit(static_cast<unsigned long long>(d) - 2)) {
    const long long r = std::bit_width(static_cast<unsigned long long>(d) - 2) - 1;
    if (r >= 3)
      v.condition += "; d=2^" + std::to_string(r) +
                     "+2 belongs to the family conjectured to admit violations for every r >= 3";
  }
  v.condition += suffix;
  return v;
}

// ---------------------------------------------------------------------------
// Aggregation: every bound applicable to a parameter set, best first.

enum class BoundSource {
  Griesmer,
  BoundA,
  BoundB,
  BoundC,
  WeakGriesmer,
  SingletonImprovedSystematic,
  Plotkin,
  Singleton,
};

inline std::string bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::Griesmer: return "Griesmer";
    case BoundSource::BoundA: return "bound A";
    case BoundSource::BoundB: return "bound B";
    case BoundSource::BoundC: return "bound C";
    case BoundSource::WeakGriesmer: return "weak Griesmer";
    case BoundSource::SingletonImprovedSystematic: return "improved Singleton (systematic)";
    case BoundSource::Plotkin: return "Plotkin";
    case BoundSource::Singleton: return "Singleton";
  }
  return "?";
}

inline char bound_source_letter(BoundSource s) {
  switch (s) {
    case BoundSource::Griesmer: return 'G';
    case BoundSource::BoundA: return 'A';
    case BoundSource::BoundB: return 'B';
    case BoundSource::BoundC: return 'C';
    case BoundSource::WeakGriesmer: return 'W';
    case BoundSource::SingletonImprovedSystematic: return 'I';
    case BoundSource::Plotkin: return 'P';
    case BoundSource::Singleton: return 'S';
  }
  return '?';
}

struct BoundReport {
  long long value = 0;
  BoundSource source = BoundSource::Singleton;
  bool applicable = true;
  std::string condition;
};

struct BoundSet {
  long long q = 2, k = 1, M = 2, d = 1;
  Setting setting = Setting::Systematic;
  std::vector<BoundReport> reports;  // sorted by value descending, then source order
  std::optional<FamilyVerdict> verdict;

  const BoundReport& best() const {
    for (const BoundReport& r : reports)
      if (r.applicable) return r;
    throw std::logic_error("BoundSet: no applicable bound");
  }
};

// For the systematic and linear settings k_or_M is the dimension k; for the
// nonlinear setting it is the word count M (and k = floor(log_q M) is derived).
inline BoundSet lower_bounds(long long q, Setting setting, long long k_or_M, long long d) {
  require_arg(q >= 2 && d >= 1, "lower_bounds: need q >= 2, d >= 1");
  BoundSet out;
  out.q = q;
  out.d = d;
  out.setting = setting;

  if (setting == Setting::Nonlinear) {
    require_arg(k_or_M >= 2, "lower_bounds: nonlinear setting needs M >= 2");
    out.M = k_or_M;
    out.k = floor_log(q, out.M);
    require_arg(out.k >= 1, "lower_bounds: nonlinear setting needs M >= q");
  } else {
    require_arg(k_or_M >= 1, "lower_bounds: need k >= 1");
    out.k = k_or_M;
    out.M = pow_ll(q, out.k);
  }
  const long long k = out.k;
  const long long M = out.M;

  // Griesmer, with its applicability verdict
  {
    BoundReport r;
    r.value = griesmer(q, k, d);
    r.source = BoundSource::Griesmer;
    if (setting == Setting::Linear) {
      r.applicable = true;
      r.condition = "holds for every linear code";
    } else {
      out.verdict = classify_family(q, k, d, setting);
      r.applicable = out.verdict->holds == Holds::Proven;
      if (out.verdict->holds == Holds::Proven)
        r.condition = "applies via family: " + out.verdict->theorem;
      else if (out.verdict->holds == Holds::DisprovenByExample)
        r.condition = "does NOT apply (disproven by example)";
      else
        r.condition = "does NOT apply (no family theorem covers these parameters; status unknown)";
    }
    out.reports.push_back(std::move(r));
  }

  if (setting != Setting::Nonlinear) {
    out.reports.push_back({bound_A(q, k, d), BoundSource::BoundA, true,
                           "d + sum_{1<=i<k} ceil(q^l*r/q^i), l=floor(log_q d), r=floor(d/q^l)"});
    out.reports.push_back({weak_griesmer(q, k, d), BoundSource::WeakGriesmer, true,
                           "ceil(d*(1-q^-k)/(1-1/q))"});
    if (q == 2)
      out.reports.push_back({singleton_improved_systematic(k, d),
                             BoundSource::SingletonImprovedSystematic, true,
                             k >= 2 ? "k + ceil(3d/2) - 2 (binary, systematic)"
                                    : "k=1 case: reduces to n >= d"});
    out.reports.push_back(
        {singleton(k, d), BoundSource::Singleton, true, "n >= d + k - 1"});
  } else {
    out.reports.push_back({bound_C(q, M, d), BoundSource::BoundC, true,
                           "ceil(d*(1-q^-k)/(1-1/q)), k=floor(log_q M)=" + std::to_string(k)});
    out.reports.push_back({d + ceil_log(q, M) - 1, BoundSource::Singleton, true,
                           "n >= d + ceil(log_q M) - 1"});
  }

  out.reports.push_back({bound_B(q, M, d), BoundSource::BoundB, true,
                         "sum_{i<=h} ceil(d/q^i), h=min(k-1, v_q(d))"});
  out.reports.push_back({plotkin_min_n(q, M, d), BoundSource::Plotkin, true,
                         "ceil(d*(1-1/M)/(1-1/q)), M=" + std::to_string(M)});

  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const BoundReport& a, const BoundReport& b) {
                     if (a.value != b.value) return a.value > b.value;
                     return static_cast<int>(a.source) < static_cast<int>(b.source);
                   });
  return out;
}

inline BoundReport best_lower_bound(long long q, Setting setting, long long k_or_M, long long d) {
  return lower_bounds(q, setting, k_or_M, d).best();
}

}  // namespace codebounds
