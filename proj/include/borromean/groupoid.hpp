#pragma once

// Diffeomorphism types between the four Borromean blocks A, Ab, As, Abs.
// A type is (domain, codomain, orientation character, boundary character,
// tangle permutation); there are 4 * 4 * 2 * 2 * 6 = 384 of them.  The
// realized types are the closure of a handful of explicit symmetries under
// inverse and composition; the excluded ones follow from the four
// "(B1, B2, +1, +1, Id) with B1 != B2" types being impossible.

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "borromean/errors.hpp"

namespace borromean {

// bit 0: barred, bit 1: starred
struct BlockLabel {
  bool barred = false;
  bool starred = false;

  constexpr int code() const { return (barred ? 1 : 0) | (starred ? 2 : 0); }
  static constexpr BlockLabel from_code(int c) { return {(c & 1) != 0, (c & 2) != 0}; }

  constexpr BlockLabel bar() const { return {!barred, starred}; }
  constexpr BlockLabel star() const { return {barred, !starred}; }

  std::string name() const {
    return std::string("A") + (barred ? "b" : "") + (starred ? "s" : "");
  }

  friend constexpr bool operator==(BlockLabel, BlockLabel) = default;
  friend constexpr auto operator<=>(BlockLabel a, BlockLabel b) { return a.code() <=> b.code(); }
};

namespace blocks {
inline constexpr BlockLabel A{false, false};
inline constexpr BlockLabel Ab{true, false};
inline constexpr BlockLabel As{false, true};
inline constexpr BlockLabel Abs{true, true};
inline constexpr std::array<BlockLabel, 4> all = {A, Ab, As, Abs};
}  // namespace blocks

inline std::optional<BlockLabel> parse_block_label(const std::string& s) {
  for (auto b : blocks::all) {
    if (b.name() == s) return b;
  }
  return std::nullopt;
}

// Permutation of {1,2,3} as images of 1,2,3 (stored 0-based).
using Perm3 = std::array<int, 3>;

inline constexpr Perm3 perm3_id{0, 1, 2};

// (a * b)(i) = a(b(i))
inline constexpr Perm3 perm3_compose(const Perm3& a, const Perm3& b) {
  return {a[static_cast<std::size_t>(b[0])], a[static_cast<std::size_t>(b[1])],
          a[static_cast<std::size_t>(b[2])]};
}

inline constexpr Perm3 perm3_inverse(const Perm3& p) {
  Perm3 r{};
  for (int i = 0; i < 3; ++i) r[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return r;
}

inline constexpr bool perm3_even(const Perm3& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

// Build from 1-based cycles, e.g. perm3_cycle({1, 2, 3}) = (1,2,3).
inline Perm3 perm3_cycle(std::initializer_list<int> cycle) {
  Perm3 p = perm3_id;
  std::vector<int> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) {
    p[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

inline std::string perm3_string(const Perm3& p) {
  std::string out;
  std::array<bool, 3> done{};
  for (int i = 0; i < 3; ++i) {
    if (done[static_cast<std::size_t>(i)] || p[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    for (int j = i; !done[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      done[static_cast<std::size_t>(j)] = true;
      if (out.back() != '(') out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "Id" : out;
}

inline const std::array<Perm3, 6>& all_perm3() {
  static const std::array<Perm3, 6> all = {Perm3{0, 1, 2}, Perm3{0, 2, 1}, Perm3{1, 0, 2},
                                           Perm3{1, 2, 0}, Perm3{2, 0, 1}, Perm3{2, 1, 0}};
  return all;
}

struct DiffeoType {
  BlockLabel domain;
  BlockLabel codomain;
  int orientation = 1;  // +1 preserves orientation of the thickened sphere
  int boundary = 1;     // +1 preserves the boundary spheres, -1 swaps them
  Perm3 perm = perm3_id;

  friend bool operator==(const DiffeoType&, const DiffeoType&) = default;
  friend auto operator<=>(const DiffeoType& a, const DiffeoType& b) {
    if (auto c = a.domain <=> b.domain; c != 0) return c;
    if (auto c = a.codomain <=> b.codomain; c != 0) return c;
    if (auto c = a.orientation <=> b.orientation; c != 0) return c;
    if (auto c = a.boundary <=> b.boundary; c != 0) return c;
    return a.perm <=> b.perm;
  }
};

inline std::string to_string(const DiffeoType& t) {
  std::ostringstream os;
  os << '(' << t.domain.name() << ',' << t.codomain.name() << ',' << (t.orientation > 0 ? "+1" : "-1")
     << ',' << (t.boundary > 0 ? "+1" : "-1") << ',' << perm3_string(t.perm) << ')';
  return os.str();
}

inline DiffeoType identity_type(BlockLabel b) { return {b, b, 1, 1, perm3_id}; }

inline DiffeoType type_inverse(const DiffeoType& t) {
  return {t.codomain, t.domain, t.orientation, t.boundary, perm3_inverse(t.perm)};
}

// beta o alpha, defined when alpha ends where beta starts.
inline std::optional<DiffeoType> type_compose(const DiffeoType& beta, const DiffeoType& alpha) {
  if (alpha.codomain != beta.domain) return std::nullopt;
  return DiffeoType{alpha.domain, beta.codomain, alpha.orientation * beta.orientation,
                    alpha.boundary * beta.boundary, perm3_compose(beta.perm, alpha.perm)};
}

using TypeSet = std::set<DiffeoType>;

inline TypeSet all_types() {
  TypeSet u;
  for (auto d : blocks::all) {
    for (auto c : blocks::all) {
      for (int e : {1, -1}) {
        for (int b : {1, -1}) {
          for (const auto& p : all_perm3()) u.insert({d, c, e, b, p});
        }
      }
    }
  }
  return u;
}

// Identity, rotation by 2pi/3 about the z-axis, reflection in the xy-plane,
// inversion in the middle sphere, and rotation by pi about the x-axis.
inline std::vector<DiffeoType> seed_types() {
  using namespace blocks;
  const Perm3 rot = perm3_cycle({1, 2, 3});
  const Perm3 swap23 = perm3_cycle({2, 3});
  std::vector<DiffeoType> seeds;
  for (auto b : all) seeds.push_back(identity_type(b));
  for (auto b : all) seeds.push_back({b, b, 1, 1, rot});
  seeds.push_back({A, Ab, -1, 1, perm3_id});
  seeds.push_back({As, Abs, -1, 1, perm3_id});
  seeds.push_back({A, As, -1, -1, perm3_id});
  seeds.push_back({Ab, Abs, -1, -1, perm3_id});
  seeds.push_back({A, Abs, 1, 1, swap23});
  seeds.push_back({Ab, As, 1, 1, swap23});
  return seeds;
}

inline TypeSet realized_closure() {
  const auto seeds = seed_types();
  TypeSet realized(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<DiffeoType> fresh;
    for (const auto& t : realized) {
      auto inv = type_inverse(t);
      if (!realized.count(inv)) fresh.push_back(inv);
      for (const auto& s : realized) {
        if (auto c = type_compose(s, t); c && !realized.count(*c)) fresh.push_back(*c);
      }
    }
    for (const auto& t : fresh) grew |= realized.insert(t).second;
  }
  return realized;
}

// Types ruled out: (B1, B2, +1, +1, Id) for B1 != B2, closed under inverse
// and under composition with realized types on either side.
inline TypeSet excluded_closure(const TypeSet& realized) {
  TypeSet excluded;
  for (auto b1 : blocks::all) {
    for (auto b2 : blocks::all) {
      if (b1 != b2) excluded.insert({b1, b2, 1, 1, perm3_id});
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<DiffeoType> fresh;
    for (const auto& f : excluded) {
      fresh.push_back(type_inverse(f));
      for (const auto& r : realized) {
        if (auto c = type_compose(r, f)) fresh.push_back(*c);
        if (auto c = type_compose(f, r)) fresh.push_back(*c);
      }
    }
    for (const auto& t : fresh) grew |= excluded.insert(t).second;
  }
  for (const auto& t : excluded) {
    if (realized.count(t)) {
      throw IntegrityError("type " + to_string(t) + " is both realized and excluded");
    }
  }
  return excluded;
}

enum class CellKind { empty, alternating, transpositions, other };

// Realized permutations for one (domain, codomain, orientation, boundary).
inline CellKind classify_cell(const TypeSet& realized, BlockLabel domain, BlockLabel codomain,
                              int orientation, int boundary) {
  std::vector<Perm3> perms;
  for (const auto& p : all_perm3()) {
    if (realized.count({domain, codomain, orientation, boundary, p})) perms.push_back(p);
  }
  if (perms.empty()) return CellKind::empty;
  if (perms.size() != 3) return CellKind::other;
  const bool all_even = std::all_of(perms.begin(), perms.end(), [](const Perm3& p) { return perm3_even(p); });
  const bool all_odd = std::none_of(perms.begin(), perms.end(), [](const Perm3& p) { return perm3_even(p); });
  if (all_even) return CellKind::alternating;
  if (all_odd) return CellKind::transpositions;
  return CellKind::other;
}

inline const char* cell_text(CellKind k) {
  switch (k) {
    case CellKind::empty: return "";
    case CellKind::alternating: return "A3";
    case CellKind::transpositions: return "C";
    case CellKind::other: return "?";
  }
  return "?";
}

// Columns: domain block and orientation character.  Rows: codomain block and
// boundary character.  A3 = <(1,2,3)>, C = (1,2)A3.
inline std::string render_type_table(const TypeSet& realized) {
  std::ostringstream os;
  auto cell = [](const std::string& s) {
    std::string c = s;
    c.resize(5, ' ');
    return c;
  };
  os << cell("") << cell("");
  for (auto d : blocks::all) os << '|' << cell(d.name()) << cell("");
  os << "|\n" << cell("") << cell("");
  for (std::size_t i = 0; i < blocks::all.size(); ++i) os << '|' << cell("+1") << cell("-1");
  os << "|\n";
  for (auto c : blocks::all) {
    for (int b : {1, -1}) {
      os << cell(b > 0 ? c.name() : "") << cell(b > 0 ? "+1" : "-1");
      for (auto d : blocks::all) {
        os << '|' << cell(cell_text(classify_cell(realized, d, c, 1, b)))
           << cell(cell_text(classify_cell(realized, d, c, -1, b)));
      }
      os << "|\n";
    }
  }
  return os.str();
}

}  // namespace borromean
