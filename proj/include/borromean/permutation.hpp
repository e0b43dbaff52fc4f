#pragma once

// Permutations of {0..n-1} stored as image arrays, and an indexed copy of
// Sym(n) with a full multiplication table for the homomorphism searches.
// Composition is right to left: (a * b)(i) = a(b(i)).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "borromean/errors.hpp"

namespace borromean {

using Permutation = std::vector<int>;

inline Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

// Cycle notation on 1-based points, e.g. "(1,2,3)" or "Id".
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "Id" : out;
}

// Cycle type as a sorted partition of n (descending).
inline std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> parts;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(p[j])) {
      done[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

class SymmetricGroup {
public:
  using Index = std::uint16_t;

  static constexpr int max_degree = 7;

  explicit SymmetricGroup(int n) : n_(n) {
    if (n < 1 || n > max_degree) {
      throw UsageError("symmetric group degree must be in 1.." + std::to_string(max_degree));
    }
    Permutation p = identity_perm(n);
    do {
      elements_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t order = elements_.size();

    // Lexicographic enumeration: the identity is index 0.
    mul_.resize(order * order);
    inv_.resize(order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        mul_[a * order + b] = index_of(compose(elements_[a], elements_[b]));
      }
      inv_[a] = index_of(inverse(elements_[a]));
    }
  }

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  static constexpr Index identity() { return 0; }

  const Permutation& element(Index i) const { return elements_[i]; }

  Index mul(Index a, Index b) const { return mul_[static_cast<std::size_t>(a) * order() + b]; }
  Index inv(Index a) const { return inv_[a]; }

  // pi^-1 * a * pi
  Index conjugate(Index a, Index pi) const { return mul(inv(pi), mul(a, pi)); }

  // Rank of p in lexicographic order.
  Index index_of(const Permutation& p) const {
    const int n = static_cast<int>(p.size());
    std::size_t rank = 0;
    std::size_t fact = 1;
    for (int i = 2; i < n; ++i) fact *= static_cast<std::size_t>(i);
    std::vector<char> used(p.size(), 0);
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int v = 0; v < p[static_cast<std::size_t>(i)]; ++v) smaller += used[static_cast<std::size_t>(v)] ? 0 : 1;
      rank += static_cast<std::size_t>(smaller) * fact;
      used[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = 1;
      if (n - 1 - i > 0) fact /= static_cast<std::size_t>(n - 1 - i);
    }
    return static_cast<Index>(rank);
  }

  // Adjacent transpositions (1 2), (2 3), ..., (n-1 n).
  std::vector<Index> adjacent_transpositions() const {
    std::vector<Index> out;
    for (int i = 0; i + 1 < n_; ++i) {
      Permutation t = identity_perm(n_);
      std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
      out.push_back(index_of(t));
    }
    return out;
  }

  std::vector<Index> centralizer(Index pi) const {
    std::vector<Index> out;
    for (std::size_t g = 0; g < order(); ++g) {
      const auto gi = static_cast<Index>(g);
      if (mul(gi, pi) == mul(pi, gi)) out.push_back(gi);
    }
    return out;
  }

  struct ConjugacyClass {
    Index representative;
    std::size_t size;
  };

  // One entry per cycle type; representative is the lexicographically first member.
  std::vector<ConjugacyClass> conjugacy_classes() const {
    std::vector<std::vector<int>> types;
    std::vector<ConjugacyClass> out;
    for (std::size_t g = 0; g < order(); ++g) {
      auto t = cycle_type(elements_[g]);
      auto it = std::find(types.begin(), types.end(), t);
      if (it == types.end()) {
        types.push_back(t);
        out.push_back({static_cast<Index>(g), 1});
      } else {
        out[static_cast<std::size_t>(it - types.begin())].size++;
      }
    }
    return out;
  }

private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
};

}  // namespace borromean
