#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "borromean/errors.hpp"
#include "borromean/tangle.hpp"
#include "borromean/wirtinger.hpp"

using namespace borromean;

namespace {

// Least rotation of w or of its inverse.
Word cyclic_canonical(const Word& w) {
  Word best;
  bool first = true;
  for (const Word& v : {w, inverse_word(w)}) {
    for (std::size_t r = 0; r < v.size() || (r == 0 && v.empty()); ++r) {
      Word rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
      if (first || rot < best) best = rot;
      first = false;
      if (v.empty()) break;
    }
  }
  return best;
}

std::multiset<Word> relator_set(const std::vector<Word>& rels) {
  std::multiset<Word> out;
  for (const auto& r : rels) out.insert(cyclic_canonical(cyclic_reduce(r)));
  return out;
}

// True if some renaming of the generators of q carries its relators onto
// those of p, each relator taken up to rotation and inversion.
bool isomorphic_up_to_renaming(const FinitePresentation& p, const FinitePresentation& q) {
  if (p.generators.size() != q.generators.size() || p.relators.size() != q.relators.size()) return false;
  const auto target = relator_set(p.relators);
  std::vector<int> perm(q.generators.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Word> mapped;
    for (const auto& r : q.relators) {
      Word w;
      for (auto l : r) w.push_back(letter(perm[static_cast<std::size_t>(generator_of(l))], l > 0 ? 1 : -1));
      mapped.push_back(w);
    }
    if (relator_set(mapped) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// The presentation drawn alongside block A: y2 x2 = x1 y2 and so on, as relators.
FinitePresentation displayed_presentation_of_a() {
  return make_presentation(
      {"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"},
      {{"y2", "x2", "y2^-1", "x1^-1"},
       {"x2", "y3", "x2^-1", "y2^-1"},
       {"x2", "z2", "x2^-1", "z1^-1"},
       {"z2", "x3", "z2^-1", "x2^-1"},
       {"z2", "y2", "z2^-1", "y1^-1"},
       {"y2", "z3", "y2^-1", "z2^-1"},
       {"x1", "y1", "z1"}});
}

}  // namespace

TEST(Wirtinger, WordHelpers) {
  EXPECT_EQ(free_reduce({1, -1, 2, 3, -3}), (Word{2}));
  EXPECT_EQ(cyclic_reduce({-2, 1, 3, 2}), (Word{1, 3}));
  EXPECT_EQ(inverse_word({1, -2}), (Word{2, -1}));
}

TEST(Wirtinger, TextFormat) {
  const auto p = make_presentation({"a", "b"}, {{"a", "b", "a^-1", "b^-1"}, {}});
  EXPECT_EQ(to_text(p), "gens: a,b\na b a^-1 b^-1\n1\n");
  EXPECT_THROW(make_presentation({"a"}, {{"c"}}), UsageError);
}

TEST(Wirtinger, PresentationOfAShape) {
  const auto p = presentation(builtin("A"));
  EXPECT_EQ(p.generators.size(), 9u);
  EXPECT_EQ(p.relators.size(), 7u);
  EXPECT_EQ(word_string(p, p.relators.back()), "1_1 2_1 3_1");
  EXPECT_EQ(presentation(builtin("A"), true).relators.size(), 8u);
}

TEST(Wirtinger, PresentationOfAMatchesDisplayedOne) {
  EXPECT_TRUE(isomorphic_up_to_renaming(displayed_presentation_of_a(), presentation(builtin("A"))));
}

TEST(Wirtinger, FidelityCheckDetectsChanges) {
  // A sign flip on one crossing yields a different relator set.
  auto d = builtin("A");
  d.signs[3] = 1;
  EXPECT_FALSE(isomorphic_up_to_renaming(displayed_presentation_of_a(), presentation(d)));
}

TEST(Wirtinger, TrivialBlockIsFree) {
  for (int n = 1; n <= 3; ++n) {
    const auto p = tietze_simplify(presentation(trivial_block(n)));
    EXPECT_EQ(p.generators.size(), static_cast<std::size_t>(n - 1));
    EXPECT_TRUE(p.relators.empty());
  }
}

TEST(Wirtinger, TietzeOnA) {
  const auto p = tietze_simplify(presentation(builtin("A")));
  EXPECT_EQ(p.generators.size(), 3u);
  EXPECT_EQ(p.relators.size(), 1u);
}

TEST(Wirtinger, TietzeIsDeterministic) {
  const auto p = presentation(concat(builtin("A"), builtin("Abs")));
  EXPECT_EQ(to_text(tietze_simplify(p)), to_text(tietze_simplify(p)));
}

TEST(Wirtinger, ForgetGivesInfiniteCyclic) {
  for (int k = 1; k <= 3; ++k) {
    const auto p = tietze_simplify(presentation(forget(builtin("A"), k)));
    EXPECT_EQ(p.generators.size(), 1u) << k;
    EXPECT_TRUE(p.relators.empty()) << k;
  }
}

TEST(Wirtinger, SmithDiagonal) {
  EXPECT_EQ(smith_diagonal({{2, 4}, {6, 8}}), (std::vector<long long>{2, 4}));
  EXPECT_EQ(smith_diagonal({{0, 0}, {0, 3}}), (std::vector<long long>{3}));
}

TEST(Wirtinger, Abelianization) {
  const auto z2xz = abelianization(make_presentation({"a", "b"}, {{"a", "a"}, {"a", "b", "a^-1", "b^-1"}}));
  EXPECT_EQ(z2xz.rank, 1);
  EXPECT_EQ(z2xz.torsion, (std::vector<long long>{2}));

  for (const char* name : {"A", "Ab", "As", "Abs", "eps3", "dirac"}) {
    const auto ab = abelianization(presentation(builtin(name)));
    EXPECT_EQ(ab.rank, 2) << name;
    EXPECT_TRUE(ab.torsion.empty()) << name;
  }
  EXPECT_EQ(abelianization(presentation(concat(builtin("A"), builtin("As")))).rank, 2);
}
