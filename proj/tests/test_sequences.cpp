#include <gtest/gtest.h>

#include "borromean/errors.hpp"
#include "borromean/sequences.hpp"

using namespace borromean;
using namespace borromean::blocks;

namespace {

EventuallyPeriodicSeq tau(int m) {
  EventuallyPeriodicSeq s;
  for (int i = 0; i < m; ++i) s.period.push_back(A);
  for (int i = 0; i < m; ++i) s.period.push_back(Ab);
  return s;
}

}  // namespace

TEST(Sequences, ValueAt) {
  const EventuallyPeriodicSeq s{{Ab}, {A, As}};
  EXPECT_EQ(value_at(s, 1), Ab);
  EXPECT_EQ(value_at(s, 2), A);
  EXPECT_EQ(value_at(s, 3), As);
  EXPECT_EQ(value_at(s, 4), A);
  EXPECT_THROW(value_at(s, 0), UsageError);
  EXPECT_THROW(value_at(EventuallyPeriodicSeq{{A}, {}}, 1), UsageError);
}

TEST(Sequences, PrimitiveRoot) {
  EXPECT_EQ(primitive_root_length({A, As, A, As}), 2u);
  EXPECT_EQ(primitive_root_length({A, As, A}), 3u);
  EXPECT_EQ(primitive_root_length({Ab}), 1u);
}

TEST(Sequences, CanonicalShortensPreperiod) {
  const EventuallyPeriodicSeq s{{Ab, As, A, As}, {A, As, A, As}};
  const auto c = canonical(s);
  EXPECT_EQ(c.preperiod, (LabelWord{Ab}));
  EXPECT_EQ(c.period, (LabelWord{As, A}));
  for (long long i = 1; i <= 20; ++i) EXPECT_EQ(value_at(c, i), value_at(s, i));
}

TEST(Sequences, TailsEqualWitness) {
  const EventuallyPeriodicSeq s{{Ab}, {A, As}};
  const EventuallyPeriodicSeq t{{}, {As, A}};
  const auto w = tails_equal(s, t);
  ASSERT_TRUE(w.has_value());
  for (long long i = w->from; i < w->from + 30; ++i) EXPECT_EQ(value_at(s, i), value_at(t, i + w->shift));
  EXPECT_FALSE(tails_equal(s, EventuallyPeriodicSeq{{}, {A}}).has_value());
}

TEST(Sequences, DebrunnerFoxRayIsAchiral) {
  const auto r = achiral(parse_sequence("per: A As"));
  EXPECT_TRUE(r.achiral);
  EXPECT_EQ(r.via, Involution::star);
  EXPECT_TRUE(periodic_form_achiral(parse_sequence("per: A As")));
}

TEST(Sequences, ConstantRayIsChiral) {
  EXPECT_FALSE(achiral(parse_sequence("per: A")).achiral);
  EXPECT_FALSE(periodic_form_achiral(parse_sequence("per: A")));
}

TEST(Sequences, AchiralFamily) {
  for (int m = 1; m <= 4; ++m) {
    const auto r = achiral(tau(m));
    EXPECT_TRUE(r.achiral) << m;
    EXPECT_EQ(r.via, Involution::bar) << m;
    const auto form = periodic_form_achiral_word(tau(m));
    ASSERT_TRUE(form.has_value());
    EXPECT_EQ(form->first, LabelWord(static_cast<std::size_t>(m), A));
    for (int k = m + 1; k <= 4; ++k) EXPECT_FALSE(equivalence(tau(m), tau(k)).equivalent) << m << " " << k;
  }
}

TEST(Sequences, EquivalenceConditions) {
  const auto s = parse_sequence("pre: Ab ; per: A As");
  const auto r = equivalence(s, parse_sequence("per: Ab Abs"));
  EXPECT_FALSE(r.cond1.holds);
  EXPECT_TRUE(r.cond2.holds);
  EXPECT_TRUE(r.cond3.holds);
  EXPECT_FALSE(r.cond4.holds);
  EXPECT_TRUE(r.op_equivalent);
  EXPECT_TRUE(r.or_equivalent);
  EXPECT_TRUE(r.equivalent);

  const auto q = equivalence(parse_sequence("per: A"), parse_sequence("pre: As As ; per: Abs"));
  EXPECT_TRUE(q.cond2.holds);
  EXPECT_TRUE(q.op_equivalent);
  EXPECT_FALSE(q.or_equivalent);
}

TEST(Sequences, ParseAndPrint) {
  const auto s = parse_sequence("  pre: Ab As ; per: A Abs ");
  EXPECT_EQ(s.preperiod, (LabelWord{Ab, As}));
  EXPECT_EQ(s.period, (LabelWord{A, Abs}));
  EXPECT_EQ(to_string(s), "pre: Ab As ; per: A Abs");
  EXPECT_EQ(parse_sequence("per: A"), (EventuallyPeriodicSeq{{}, {A}}));
  EXPECT_EQ(to_string(parse_sequence("per: A")), "per: A");
}

TEST(Sequences, ParseErrors) {
  EXPECT_THROW(parse_sequence("per: B"), UsageError);
  EXPECT_THROW(parse_sequence("per:"), UsageError);
  EXPECT_THROW(parse_sequence("A As"), UsageError);
  EXPECT_THROW(parse_sequence("pref: A ; per: A"), UsageError);
}
