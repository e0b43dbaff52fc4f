#pragma once

// Wirtinger presentations of block complements, Tietze elimination, and
// abelian invariants.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "borromean/errors.hpp"
#include "borromean/tangle.hpp"

namespace borromean {

// A letter is +(g+1) for generator g and -(g+1) for its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline int generator_of(Letter l) { return std::abs(l) - 1; }
inline Letter letter(int generator, int exponent = 1) {
  return exponent > 0 ? generator + 1 : -(generator + 1);
}

inline Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline Word free_reduce(const Word& w) {
  Word r;
  for (Letter l : w) {
    if (!r.empty() && r.back() == -l) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

// Free reduction followed by cancellation of inverse letters at the two ends.
inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t total_length() const {
    std::size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
  }

  std::optional<int> generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) return std::nullopt;
    return static_cast<int>(it - generators.begin());
  }
};

// Plain-text form:
//   gens: a,b,c
//   a b a^-1 c^-1
inline std::string word_string(const FinitePresentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += ' ';
    s += p.generators.at(static_cast<std::size_t>(generator_of(l)));
    if (l < 0) s += "^-1";
  }
  return s;
}

inline std::string to_text(const FinitePresentation& p) {
  std::ostringstream os;
  os << "gens: ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ',';
    os << p.generators[i];
  }
  os << '\n';
  for (const auto& r : p.relators) os << word_string(p, r) << '\n';
  return os.str();
}

inline FinitePresentation make_presentation(std::vector<std::string> gens,
                                            const std::vector<std::vector<std::string>>& relators) {
  FinitePresentation p;
  p.generators = std::move(gens);
  for (const auto& rel : relators) {
    Word w;
    for (const auto& tok : rel) {
      std::string name = tok;
      int exp = 1;
      if (name.size() > 3 && name.substr(name.size() - 3) == "^-1") {
        name.resize(name.size() - 3);
        exp = -1;
      }
      auto g = p.generator_index(name);
      if (!g) throw UsageError("relator uses undeclared generator '" + name + "'");
      w.push_back(letter(*g, exp));
    }
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

namespace detail {

struct ArcTable {
  // arc_at[s][k] = generator index of the arc of strand s that contains passage k
  // (for an under-passage, the arc leading into it).
  std::vector<std::vector<int>> arc_at;
  std::vector<int> first_arc;  // per strand
  std::vector<int> last_arc;
};

}  // namespace detail

// One generator per arc, one relator per crossing, plus the inner vertex
// relation (and the outer one on request).  At a crossing of sign e with
// over-arc o and under-arcs in -> out the relation is out = o^e in o^-e.
inline FinitePresentation presentation(const AnnularDiagram& d, bool include_outer_vertex = false) {
  require_valid(d);
  FinitePresentation p;
  detail::ArcTable arcs;
  arcs.arc_at.resize(d.strands.size());
  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    int arc = 1;
    auto name = [&](int a) { return std::to_string(s + 1) + "_" + std::to_string(a); };
    p.generators.push_back(name(arc));
    arcs.first_arc.push_back(static_cast<int>(p.generators.size()) - 1);
    for (const auto& pass : d.strands[s]) {
      arcs.arc_at[s].push_back(static_cast<int>(p.generators.size()) - 1);
      if (pass.role == Role::under) {
        p.generators.push_back(name(++arc));
      }
    }
    arcs.last_arc.push_back(static_cast<int>(p.generators.size()) - 1);
  }

  struct Ends {
    int over = -1, in = -1, out = -1;
  };
  std::map<int, Ends> at;
  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    for (std::size_t k = 0; k < d.strands[s].size(); ++k) {
      const auto& pass = d.strands[s][k];
      const int arc = arcs.arc_at[s][k];
      if (pass.role == Role::over) {
        at[pass.crossing].over = arc;
      } else {
        at[pass.crossing].in = arc;
        at[pass.crossing].out = arc + 1;
      }
    }
  }
  for (const auto& [id, e] : at) {
    const int sign = d.signs.at(id);
    Word w = {letter(e.out, -1), letter(e.over, sign), letter(e.in), letter(e.over, -sign)};
    p.relators.push_back(free_reduce(w));
  }

  auto vertex = [&](const std::vector<int>& order, const std::vector<int>& which) {
    Word w;
    for (int s : order) w.push_back(letter(which[static_cast<std::size_t>(s - 1)]));
    return w;
  };
  p.relators.push_back(vertex(d.inner_order, arcs.first_arc));
  if (include_outer_vertex) p.relators.push_back(vertex(d.outer_order, arcs.last_arc));
  return p;
}

namespace detail {

inline Word substitute(const Word& w, int g, const Word& value) {
  Word out;
  const Word value_inv = inverse_word(value);
  for (Letter l : w) {
    if (generator_of(l) == g) {
      const Word& v = l > 0 ? value : value_inv;
      out.insert(out.end(), v.begin(), v.end());
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline int occurrences(const Word& w, int g) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [g](Letter l) { return generator_of(l) == g; }));
}

// Solve r = u g^e v = 1 for g, i.e. g^e = u^-1 v^-1.
inline Word solve_for(const Word& r, int g) {
  const auto pos = static_cast<std::size_t>(
      std::find_if(r.begin(), r.end(), [g](Letter l) { return generator_of(l) == g; }) - r.begin());
  Word value = inverse_word(Word(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos)));
  const Word vinv = inverse_word(Word(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end()));
  value.insert(value.end(), vinv.begin(), vinv.end());
  if (r[pos] < 0) value = inverse_word(value);
  return free_reduce(value);
}

inline std::vector<Word> eliminate(const std::vector<Word>& rels, std::size_t used, int g) {
  const Word value = solve_for(rels[used], g);
  std::vector<Word> next;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (i == used) continue;
    Word c = cyclic_reduce(substitute(rels[i], g, value));
    if (!c.empty()) next.push_back(std::move(c));
  }
  return next;
}

}  // namespace detail

// Repeatedly solve a relator for a generator occurring in it exactly once and
// substitute the solution everywhere.  Each round takes the elimination that
// leaves the smallest total relator length, ties broken by generator name.
inline FinitePresentation tietze_simplify(const FinitePresentation& input) {
  const std::vector<std::string>& names = input.generators;
  std::vector<char> alive(names.size(), 1);
  std::vector<Word> rels;
  for (const auto& r : input.relators) {
    Word c = cyclic_reduce(r);
    if (!c.empty()) rels.push_back(std::move(c));
  }
  auto total = [](const std::vector<Word>& ws) {
    std::size_t n = 0;
    for (const auto& w : ws) n += w.size();
    return n;
  };

  for (;;) {
    std::optional<std::vector<Word>> best;
    std::size_t best_len = 0;
    int best_gen = -1;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      for (std::size_t g = 0; g < names.size(); ++g) {
        if (!alive[g] || detail::occurrences(rels[ri], static_cast<int>(g)) != 1) continue;
        auto next = detail::eliminate(rels, ri, static_cast<int>(g));
        const std::size_t len = total(next);
        if (!best || len < best_len ||
            (len == best_len && names[g] < names[static_cast<std::size_t>(best_gen)])) {
          best = std::move(next);
          best_len = len;
          best_gen = static_cast<int>(g);
        }
      }
    }
    if (!best) break;
    alive[static_cast<std::size_t>(best_gen)] = 0;
    rels = std::move(*best);
  }

  FinitePresentation out;
  std::vector<int> remap(names.size(), -1);
  for (std::size_t g = 0; g < names.size(); ++g) {
    if (alive[g]) {
      remap[g] = static_cast<int>(out.generators.size());
      out.generators.push_back(names[g]);
    }
  }
  for (const auto& w : rels) {
    Word m;
    for (Letter l : w) m.push_back(letter(remap[static_cast<std::size_t>(generator_of(l))], l > 0 ? 1 : -1));
    out.relators.push_back(std::move(m));
  }
  return out;
}

struct AbelianInvariants {
  int rank = 0;
  std::vector<long long> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Diagonal of the Smith normal form of an integer matrix (nonzero entries
// only, each dividing the next).
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  std::vector<long long> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const long long q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          clean = false;
          std::swap(m[t], m[i]);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const long long q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          clean = false;
          for (auto& row : m) std::swap(row[t], row[j]);
        }
      }
      if (clean) {
        // The pivot must divide the rest of the block.
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
              break;
            }
          }
        }
      }
    }
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return diag;
}

inline AbelianInvariants abelianization(const FinitePresentation& p) {
  const std::size_t gens = p.generators.size();
  std::vector<std::vector<long long>> m;
  for (const auto& r : p.relators) {
    std::vector<long long> row(gens, 0);
    for (Letter l : r) row[static_cast<std::size_t>(generator_of(l))] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  AbelianInvariants out;
  const auto diag = gens ? smith_diagonal(std::move(m)) : std::vector<long long>{};
  out.rank = static_cast<int>(gens - diag.size());
  for (long long d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace borromean
