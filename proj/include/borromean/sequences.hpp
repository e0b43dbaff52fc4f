#pragma once

// Borromean rays as eventually periodic sequences of blocks from
// {A, Ab, As, Abs}.  Two rays are equivalent exactly when their block
// sequences have matching tails after one of the four label involutions;
// a ray is achiral when its sequence matches its own bar or star.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "borromean/errors.hpp"
#include "borromean/groupoid.hpp"

namespace borromean {

using LabelWord = std::vector<BlockLabel>;

struct EventuallyPeriodicSeq {
  LabelWord preperiod;
  LabelWord period;

  friend bool operator==(const EventuallyPeriodicSeq&, const EventuallyPeriodicSeq&) = default;
};

inline void require_period(const EventuallyPeriodicSeq& s) {
  if (s.period.empty()) throw UsageError("the period of a sequence must be nonempty");
}

// 1-based.
inline BlockLabel value_at(const EventuallyPeriodicSeq& s, long long i) {
  require_period(s);
  if (i < 1) throw UsageError("sequence index must be positive, got " + std::to_string(i));
  const auto pre = static_cast<long long>(s.preperiod.size());
  if (i <= pre) return s.preperiod[static_cast<std::size_t>(i - 1)];
  const auto per = static_cast<long long>(s.period.size());
  return s.period[static_cast<std::size_t>((i - pre - 1) % per)];
}

enum class Involution { bar, star, barstar };

inline BlockLabel apply(Involution op, BlockLabel b) {
  switch (op) {
    case Involution::bar: return b.bar();
    case Involution::star: return b.star();
    case Involution::barstar: return b.bar().star();
  }
  return b;
}

inline EventuallyPeriodicSeq transform(const EventuallyPeriodicSeq& s, Involution op) {
  EventuallyPeriodicSeq out = s;
  for (auto& b : out.preperiod) b = apply(op, b);
  for (auto& b : out.period) b = apply(op, b);
  return out;
}

// Length of the shortest word whose power is w, from the prefix function.
inline std::size_t primitive_root_length(const LabelWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

// Same sequence with a primitive period and the shortest possible preperiod.
inline EventuallyPeriodicSeq canonical(const EventuallyPeriodicSeq& s) {
  require_period(s);
  EventuallyPeriodicSeq out = s;
  out.period.resize(primitive_root_length(s.period));
  while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
    out.preperiod.pop_back();
    std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
  }
  return out;
}

// Smallest r >= 0 with rotate_left(a, r) == b, if any.
inline std::optional<std::size_t> rotation_offset(const LabelWord& a, const LabelWord& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = a[(j + r) % n] == b[j];
    if (ok) return r;
  }
  return std::nullopt;
}

// s(i) == t(i + shift) for every i >= from.
struct TailWitness {
  long long shift = 0;
  long long from = 1;
};

// Tails agree iff the primitive periods are rotations of each other.  The
// reported shift has the smallest absolute value (nonnegative on ties) and
// `from` is the least index where agreement starts.
inline std::optional<TailWitness> tails_equal(const EventuallyPeriodicSeq& s, const EventuallyPeriodicSeq& t) {
  const auto cs = canonical(s);
  const auto ct = canonical(t);
  // t's period rotated left by r is s's period.
  const auto r = rotation_offset(ct.period, cs.period);
  if (!r) return std::nullopt;

  const auto p = static_cast<long long>(cs.period.size());
  const auto ps = static_cast<long long>(cs.preperiod.size());
  const auto pt = static_cast<long long>(ct.preperiod.size());
  // s(ps + 1 + j) = t(pt + 1 + j + r): shift = pt - ps + r (mod p).
  long long n = ((pt - ps + static_cast<long long>(*r)) % p + p) % p;
  if (n > p - n) n -= p;

  TailWitness w;
  w.shift = n;
  w.from = std::max({1LL, ps + 1, pt + 1 - n, 1 - n});
  while (w.from - 1 >= 1 && w.from - 1 + n >= 1 && value_at(s, w.from - 1) == value_at(t, w.from - 1 + n)) {
    --w.from;
  }
  return w;
}

struct ConditionResult {
  bool holds = false;
  std::optional<TailWitness> witness;
};

struct EquivalenceReport {
  ConditionResult cond1;  // same tails
  ConditionResult cond2;  // tails of s and barstar(t)
  ConditionResult cond3;  // tails of s and bar(t)
  ConditionResult cond4;  // tails of s and star(t)
  bool op_equivalent = false;
  bool or_equivalent = false;
  bool equivalent = false;
};

inline ConditionResult condition(const EventuallyPeriodicSeq& s, const EventuallyPeriodicSeq& t) {
  ConditionResult c;
  c.witness = tails_equal(s, t);
  c.holds = c.witness.has_value();
  return c;
}

inline EquivalenceReport equivalence(const EventuallyPeriodicSeq& s, const EventuallyPeriodicSeq& t) {
  EquivalenceReport r;
  r.cond1 = condition(s, t);
  r.cond2 = condition(s, transform(t, Involution::barstar));
  r.cond3 = condition(s, transform(t, Involution::bar));
  r.cond4 = condition(s, transform(t, Involution::star));
  r.op_equivalent = r.cond1.holds || r.cond2.holds;
  r.or_equivalent = r.cond3.holds || r.cond4.holds;
  r.equivalent = r.op_equivalent || r.or_equivalent;
  return r;
}

struct ChiralityReport {
  bool achiral = false;
  std::optional<Involution> via;  // bar or star
  std::optional<TailWitness> witness;
};

inline ChiralityReport achiral(const EventuallyPeriodicSeq& s) {
  ChiralityReport r;
  for (auto op : {Involution::bar, Involution::star}) {
    if (auto w = tails_equal(s, transform(s, op))) {
      r.achiral = true;
      r.via = op;
      r.witness = w;
      return r;
    }
  }
  return r;
}

// Some tail of s is (C bar(C))^inf or (C star(C))^inf for a finite word C.
// Returns C when one exists.
inline std::optional<std::pair<LabelWord, Involution>> periodic_form_achiral_word(
    const EventuallyPeriodicSeq& s) {
  const LabelWord q = canonical(s).period;
  const std::size_t p = q.size();
  for (std::size_t m = 1; m <= p; ++m) {
    if ((2 * m) % p != 0) continue;
    for (std::size_t r = 0; r < p; ++r) {
      LabelWord w;
      for (std::size_t k = 0; k < 2 * m; ++k) w.push_back(q[(r + k) % p]);
      for (auto op : {Involution::bar, Involution::star}) {
        bool ok = true;
        for (std::size_t k = 0; k < m && ok; ++k) ok = w[m + k] == apply(op, w[k]);
        if (ok) return std::pair{LabelWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m)), op};
      }
    }
  }
  return std::nullopt;
}

inline bool periodic_form_achiral(const EventuallyPeriodicSeq& s) {
  return periodic_form_achiral_word(s).has_value();
}

// "pre: Ab ; per: A As", with "pre:" optional.
inline EventuallyPeriodicSeq parse_sequence(const std::string& text) {
  auto labels = [](const std::string& part) {
    LabelWord w;
    std::istringstream is(part);
    std::string tok;
    while (is >> tok) {
      auto b = parse_block_label(tok);
      if (!b) throw UsageError("unknown block label '" + tok + "'; valid labels: A, Ab, As, Abs");
      w.push_back(*b);
    }
    return w;
  };
  auto strip = [](std::string x) {
    const auto a = x.find_first_not_of(" \t");
    const auto b = x.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : x.substr(a, b - a + 1);
  };

  EventuallyPeriodicSeq s;
  std::string rest = strip(text);
  const auto semi = rest.find(';');
  std::string pre_part, per_part;
  if (semi != std::string::npos) {
    pre_part = strip(rest.substr(0, semi));
    per_part = strip(rest.substr(semi + 1));
  } else {
    per_part = rest;
  }
  if (!pre_part.empty()) {
    if (pre_part.rfind("pre:", 0) != 0) throw UsageError("expected 'pre:' before ';' in '" + text + "'");
    s.preperiod = labels(pre_part.substr(4));
  }
  if (per_part.rfind("per:", 0) != 0) throw UsageError("expected 'per:' in '" + text + "'");
  s.period = labels(per_part.substr(4));
  if (s.period.empty()) throw UsageError("the period of '" + text + "' is empty");
  return s;
}

inline std::string word_string(const LabelWord& w) {
  std::string out;
  for (const auto& b : w) {
    if (!out.empty()) out += ' ';
    out += b.name();
  }
  return out;
}

inline std::string to_string(const EventuallyPeriodicSeq& s) {
  std::string out;
  if (!s.preperiod.empty()) out += "pre: " + word_string(s.preperiod) + " ; ";
  return out + "per: " + word_string(s.period);
}

}  // namespace borromean
