#pragma once

// Combinatorial model of a block: an n-strand tangle in a thickened sphere,
// recorded as an annular diagram.  Strands run from the inner boundary to
// the outer boundary; each strand is the ordered list of crossings it passes
// through, marked over or under.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "borromean/errors.hpp"

namespace borromean {

enum class Role { over, under };

inline Role toggled(Role r) { return r == Role::over ? Role::under : Role::over; }

struct Passage {
  int crossing = 0;
  Role role = Role::over;

  friend bool operator==(const Passage&, const Passage&) = default;
};

// Strands are numbered 1..n_strands; strands[i] holds strand i + 1.
// inner_order / outer_order list strand numbers counterclockwise.
struct AnnularDiagram {
  int n_strands = 0;
  std::vector<std::vector<Passage>> strands;
  std::map<int, int> signs;  // crossing id -> +1 / -1
  std::vector<int> inner_order;
  std::vector<int> outer_order;

  std::size_t crossing_count() const { return signs.size(); }

  const std::vector<Passage>& strand(int label) const { return strands.at(label - 1); }

  friend bool operator==(const AnnularDiagram&, const AnnularDiagram&) = default;
};

struct Violation {
  enum class Kind {
    strand_count,
    dangling_crossing,
    role_mismatch,
    missing_sign,
    bad_sign,
    duplicate_boundary,
    missing_boundary,
  };
  Kind kind;
  std::string detail;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::strand_count: return "strand-count";
    case Violation::Kind::dangling_crossing: return "dangling-crossing";
    case Violation::Kind::role_mismatch: return "role-mismatch";
    case Violation::Kind::missing_sign: return "missing-sign";
    case Violation::Kind::bad_sign: return "bad-sign";
    case Violation::Kind::duplicate_boundary: return "duplicate-boundary";
    case Violation::Kind::missing_boundary: return "missing-boundary";
  }
  return "unknown";
}

namespace detail {

inline void check_boundary(const AnnularDiagram& d, const std::vector<int>& order,
                           const char* which, std::vector<Violation>& out) {
  std::vector<int> seen(static_cast<std::size_t>(std::max(d.n_strands, 0)) + 1, 0);
  for (int s : order) {
    if (s < 1 || s > d.n_strands) {
      out.push_back({Violation::Kind::missing_boundary,
                     std::string(which) + " order names unknown strand " + std::to_string(s)});
      continue;
    }
    if (++seen[static_cast<std::size_t>(s)] == 2) {
      out.push_back({Violation::Kind::duplicate_boundary,
                     std::string(which) + " order lists strand " + std::to_string(s) + " twice"});
    }
  }
  for (int s = 1; s <= d.n_strands; ++s) {
    if (seen[static_cast<std::size_t>(s)] == 0) {
      out.push_back({Violation::Kind::missing_boundary,
                     std::string(which) + " order omits strand " + std::to_string(s)});
    }
  }
}

}  // namespace detail

// Empty iff every diagram invariant holds.
inline std::vector<Violation> validate(const AnnularDiagram& d) {
  std::vector<Violation> out;
  if (d.n_strands < 1 || static_cast<int>(d.strands.size()) != d.n_strands) {
    out.push_back({Violation::Kind::strand_count,
                   "n_strands = " + std::to_string(d.n_strands) + " but " +
                       std::to_string(d.strands.size()) + " strand lists"});
  }

  std::map<int, std::pair<int, int>> uses;  // id -> (#over, #under)
  for (const auto& strand : d.strands) {
    for (const auto& p : strand) {
      auto& u = uses[p.crossing];
      (p.role == Role::over ? u.first : u.second)++;
    }
  }
  for (const auto& [id, u] : uses) {
    const int total = u.first + u.second;
    if (total == 1) {
      out.push_back({Violation::Kind::dangling_crossing,
                     "crossing " + std::to_string(id) + " is referenced once"});
    } else if (total == 2 && (u.first != 1 || u.second != 1)) {
      out.push_back({Violation::Kind::role_mismatch,
                     "crossing " + std::to_string(id) + " needs one over and one under passage"});
    } else if (total > 2) {
      out.push_back({Violation::Kind::role_mismatch,
                     "crossing " + std::to_string(id) + " is referenced " +
                         std::to_string(total) + " times"});
    }
    auto it = d.signs.find(id);
    if (it == d.signs.end()) {
      out.push_back({Violation::Kind::missing_sign,
                     "crossing " + std::to_string(id) + " has no sign"});
    } else if (it->second != 1 && it->second != -1) {
      out.push_back({Violation::Kind::bad_sign,
                     "crossing " + std::to_string(id) + " has sign " + std::to_string(it->second)});
    }
  }
  for (const auto& [id, sign] : d.signs) {
    if (!uses.count(id)) {
      out.push_back({Violation::Kind::dangling_crossing,
                     "crossing " + std::to_string(id) + " has a sign but no passages"});
    }
  }

  detail::check_boundary(d, d.inner_order, "inner", out);
  detail::check_boundary(d, d.outer_order, "outer", out);
  return out;
}

inline void require_valid(const AnnularDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) {
    throw UsageError("invalid diagram: " + std::string(to_string(v.front().kind)) + ": " +
                     v.front().detail);
  }
}

// Relabel crossing ids 1, 2, ... in order of first appearance along strand 1,
// then strand 2, and so on.
inline AnnularDiagram normalize(const AnnularDiagram& d) {
  std::map<int, int> relabel;
  for (const auto& strand : d.strands) {
    for (const auto& p : strand) {
      relabel.emplace(p.crossing, static_cast<int>(relabel.size()) + 1);
    }
  }
  AnnularDiagram out = d;
  out.signs.clear();
  for (auto& strand : out.strands) {
    for (auto& p : strand) p.crossing = relabel.at(p.crossing);
  }
  for (const auto& [id, sign] : d.signs) {
    auto it = relabel.find(id);
    if (it != relabel.end()) out.signs[it->second] = sign;
  }
  return out;
}

inline bool same_up_to_relabel(const AnnularDiagram& a, const AnnularDiagram& b) {
  return normalize(a) == normalize(b);
}

// Mirror in the projection plane: every crossing switches.
inline AnnularDiagram bar(const AnnularDiagram& d) {
  AnnularDiagram out = d;
  for (auto& strand : out.strands) {
    for (auto& p : strand) p.role = toggled(p.role);
  }
  for (auto& [id, sign] : out.signs) sign = -sign;
  return out;
}

// Inversion through the middle level sphere: the boundaries trade places,
// strands are traversed in the opposite radial direction, and the planar
// orientation reverses.  Over/under is unchanged.
inline AnnularDiagram star(const AnnularDiagram& d) {
  AnnularDiagram out = d;
  std::swap(out.inner_order, out.outer_order);
  for (auto& strand : out.strands) std::reverse(strand.begin(), strand.end());
  for (auto& [id, sign] : out.signs) sign = -sign;
  return out;
}

// Glue the outer boundary of `inner` to the inner boundary of `outer`.
inline AnnularDiagram concat(const AnnularDiagram& inner, const AnnularDiagram& outer) {
  if (inner.n_strands != outer.n_strands) {
    throw UsageError("cannot concatenate blocks with " + std::to_string(inner.n_strands) +
                     " and " + std::to_string(outer.n_strands) + " strands");
  }
  if (inner.outer_order != outer.inner_order) {
    throw UsageError("cannot concatenate: boundary orders do not match");
  }
  int offset = 0;
  for (const auto& [id, sign] : inner.signs) offset = std::max(offset, id);
  for (const auto& strand : inner.strands) {
    for (const auto& p : strand) offset = std::max(offset, p.crossing);
  }

  AnnularDiagram out = inner;
  out.outer_order = outer.outer_order;
  for (std::size_t s = 0; s < out.strands.size(); ++s) {
    for (auto p : outer.strands[s]) {
      p.crossing += offset;
      out.strands[s].push_back(p);
    }
  }
  for (const auto& [id, sign] : outer.signs) out.signs[id + offset] = sign;
  return out;
}

// Delete strand k and every crossing it takes part in; strands above k shift
// down by one, so the cyclic order of the survivors is unchanged.
inline AnnularDiagram forget(const AnnularDiagram& d, int k) {
  if (d.n_strands < 2) throw UsageError("cannot forget a strand of a 1-strand block");
  if (k < 1 || k > d.n_strands) {
    throw UsageError("strand " + std::to_string(k) + " out of range 1.." +
                     std::to_string(d.n_strands));
  }
  std::set<int> dropped;
  for (const auto& p : d.strand(k)) dropped.insert(p.crossing);

  AnnularDiagram out;
  out.n_strands = d.n_strands - 1;
  for (int s = 1; s <= d.n_strands; ++s) {
    if (s == k) continue;
    std::vector<Passage> kept;
    for (const auto& p : d.strand(s)) {
      if (!dropped.count(p.crossing)) kept.push_back(p);
    }
    out.strands.push_back(std::move(kept));
  }
  for (const auto& [id, sign] : d.signs) {
    if (!dropped.count(id)) out.signs[id] = sign;
  }
  auto shrink = [k](const std::vector<int>& order) {
    std::vector<int> r;
    for (int s : order) {
      if (s != k) r.push_back(s > k ? s - 1 : s);
    }
    return r;
  };
  out.inner_order = shrink(d.inner_order);
  out.outer_order = shrink(d.outer_order);
  return out;
}

// n radial strands, no crossings.
inline AnnularDiagram trivial_block(int n) {
  if (n < 1) throw UsageError("a trivial block needs at least one strand");
  AnnularDiagram d;
  d.n_strands = n;
  d.strands.assign(static_cast<std::size_t>(n), {});
  for (int s = 1; s <= n; ++s) {
    d.inner_order.push_back(s);
    d.outer_order.push_back(s);
  }
  return d;
}

// Append a braid word to a diagram.  Generator +i (1-based) carries the strand
// at position i over the strand at position i + 1 with sign +1, swapping them;
// -i is the inverse crossing.  Positions refer to the outer order of `d`.
inline AnnularDiagram append_braid(const AnnularDiagram& d, const std::vector<int>& word) {
  AnnularDiagram out = d;
  int next = 1;
  for (const auto& [id, sign] : out.signs) next = std::max(next, id + 1);
  std::vector<int> position = out.outer_order;  // position -> strand label
  for (int g : word) {
    const int i = std::abs(g);
    if (i < 1 || i >= static_cast<int>(position.size())) {
      throw UsageError("braid generator " + std::to_string(g) + " out of range");
    }
    const int left = position[static_cast<std::size_t>(i - 1)];
    const int right = position[static_cast<std::size_t>(i)];
    const int over = g > 0 ? left : right;
    const int under = g > 0 ? right : left;
    out.strands[static_cast<std::size_t>(over - 1)].push_back({next, Role::over});
    out.strands[static_cast<std::size_t>(under - 1)].push_back({next, Role::under});
    out.signs[next] = g > 0 ? 1 : -1;
    ++next;
    std::swap(position[static_cast<std::size_t>(i - 1)], position[static_cast<std::size_t>(i)]);
  }
  out.outer_order = position;
  return out;
}

namespace detail {

// Block A.  Arcs of strand s are numbered 1, 2, 3 from the inner boundary,
// split at under-passages; the crossing relations read
//   c1: y2 over x1 -> x2     c2: x2 over y2 -> y3     c3: x2 over z1 -> z2
//   c4: z2 over x2 -> x3     c5: z2 over y1 -> y2     c6: y2 over z2 -> z3
// with x, y, z the strands 1, 2, 3.
inline AnnularDiagram block_a() {
  using R = Role;
  AnnularDiagram d;
  d.n_strands = 3;
  d.strands = {
      {{1, R::under}, {2, R::over}, {3, R::over}, {4, R::under}},
      {{5, R::under}, {6, R::over}, {1, R::over}, {2, R::under}},
      {{3, R::under}, {4, R::over}, {5, R::over}, {6, R::under}},
  };
  for (int c = 1; c <= 6; ++c) d.signs[c] = -1;
  d.inner_order = {1, 2, 3};
  d.outer_order = {1, 2, 3};
  return d;
}

}  // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"A",    "Ab",   "As",   "Abs",
                                                 "eps1", "eps2", "eps3", "dirac"};
  return names;
}

inline std::string builtin_names_joined() {
  std::string s;
  for (const auto& n : builtin_names()) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

inline AnnularDiagram builtin(const std::string& name) {
  if (name == "A") return detail::block_a();
  if (name == "Ab") return bar(detail::block_a());
  if (name == "As") return star(detail::block_a());
  if (name == "Abs") return bar(star(detail::block_a()));
  if (name == "eps1") return trivial_block(1);
  if (name == "eps2") return trivial_block(2);
  if (name == "eps3") return trivial_block(3);
  if (name == "dirac") {
    // One full twist: (s1 s2)^3.
    return append_braid(trivial_block(3), {1, 2, 1, 2, 1, 2});
  }
  throw UsageError("unknown block '" + name + "'; valid choices: " + builtin_names_joined());
}

}  // namespace borromean
