#include <gtest/gtest.h>

#include <random>

#include "numevent/concrete_logic.hpp"
#include "numevent/embeddability.hpp"
#include "numevent/error.hpp"
#include "numevent/generators.hpp"
#include "numevent/tolerance.hpp"
#include "oracles.hpp"

using namespace numevent;
using oracle::mask_event;

namespace {

// bit k of the mask is state k
std::vector<Event> logic_from_masks(const StateSpacePtr& s, const std::vector<std::uint32_t>& masks) {
  std::vector<Event> out;
  for (auto m : masks) out.push_back(mask_event(s, m));
  return out;
}

// even-cardinality subsets of four states
ConcreteLogic even_logic() {
  const auto s = make_state_space(4);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < 16; ++m) {
    if (std::popcount(m) % 2 == 0) masks.push_back(m);
  }
  return ConcreteLogic(logic_from_masks(s, masks));
}

ConcreteLogic power_set(int states) {
  const auto s = make_state_space(states);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << states); ++m) masks.push_back(m);
  return ConcreteLogic(logic_from_masks(s, masks));
}

EventFamily family_of(const ConcreteLogic& logic, std::initializer_list<std::uint32_t> masks) {
  std::vector<Event> events;
  for (auto m : masks) events.push_back(mask_event(logic.space(), m));
  return EventFamily(std::move(events));
}

}  // namespace

TEST(ConcreteLogicCheck, Examples) {
  EXPECT_TRUE(is_concrete_logic(even_logic().members()).ok);
  EXPECT_TRUE(is_concrete_logic(power_set(3).members()).ok);

  const auto s = make_state_space(4);
  const auto missing = logic_from_masks(s, {0b0000, 0b1111, 0b0001});
  const auto check = is_concrete_logic(missing);
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(check.defect->axiom, "A2");
  EXPECT_EQ(check.defect->message, "A2 violated: complement (0, 1, 1, 1) of (1, 0, 0, 0) is missing");
  EXPECT_THROW(ConcreteLogic{missing}, Error);
}

TEST(ConcreteLogicCheck, EachAxiomIsDetected) {
  const auto s = make_state_space(3);
  auto no_zero = logic_from_masks(s, {0b111, 0b001, 0b110});
  EXPECT_EQ(is_concrete_logic(no_zero).defect->axiom, "A1");
  EXPECT_EQ(is_concrete_logic(std::vector<Event>{}).defect->axiom, "A1");

  // {1}, {2} present with complements but not {1,2}
  auto no_sum = logic_from_masks(s, {0b000, 0b111, 0b001, 0b110, 0b010, 0b101});
  const auto check = is_concrete_logic(no_sum);
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(check.defect->axiom, "A3");
  EXPECT_EQ(check.defect->offending.size(), 2u);

  auto fuzzy = logic_from_masks(s, {0b000, 0b111});
  fuzzy.push_back(Event(s, {0.5, 0.5, 0.5}));
  EXPECT_EQ(is_concrete_logic(fuzzy).defect->axiom, "two-valued");
}

TEST(CommuteWitness, EvenLogicExample) {
  const auto logic = even_logic();
  const auto s = logic.space();
  EXPECT_FALSE(commute_witness(logic.members(), mask_event(s, 0b0011), mask_event(s, 0b0101)).has_value());
  const auto same = commute_witness(logic.members(), mask_event(s, 0b0011), mask_event(s, 0b0011));
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(is_zero(same->a));
  EXPECT_THROW(commute_witness(logic.members(), mask_event(s, 0b0001), mask_event(s, 0b0011)), Error);
}

// The only a with a <= f <= a + g <= 1 on 0/1 values is f and not g.
TEST(CommuteWitness, TwoValuedTruthTable) {
  for (int f = 0; f <= 1; ++f) {
    for (int g = 0; g <= 1; ++g) {
      int solutions = 0, found = -1;
      for (int a = 0; a <= 1; ++a) {
        if (a <= f && f <= a + g && a + g <= 1) {
          ++solutions;
          found = a;
        }
      }
      EXPECT_EQ(solutions, 1) << f << g;
      EXPECT_EQ(found, f * (1 - g)) << f << g;
    }
  }
  // and the library agrees on the power set of two states, which has every pattern
  const auto logic = power_set(2);
  for (const auto& f : logic.members()) {
    for (const auto& g : logic.members()) {
      const auto w = commute_witness(logic.members(), f, g);
      ASSERT_TRUE(w.has_value());
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(w->a[k], f[k] * (1 - g[k]));
    }
  }
}

TEST(CommuteWitness, PropertiesOnGeneratedLogics) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto logic = random_concrete_logic(2 + seed % 4, 2 + seed % 3, seed);
    const auto& m = logic.members();
    for (const auto& f : m) {
      for (const auto& g : m) {
        const auto w = commute_witness(m, f, g);
        const auto wc = commute_witness(m, f, complement(g));
        EXPECT_EQ(w.has_value(), wc.has_value());
        if (w) {
          EXPECT_TRUE(approx_equal(w->a, pointwise_min(f, complement(g))));
          EXPECT_TRUE(is_commute_witness(w->a, f, g));
          EXPECT_TRUE(logic.contains(w->a));
        }
        if (leq(f, g)) {
          EXPECT_TRUE(w.has_value());
        }
        // brute force over all members gives the same answer
        bool any = false;
        for (const auto& a : m) any = any || is_commute_witness(a, f, g);
        EXPECT_EQ(any, w.has_value());
      }
    }
  }
}

TEST(CommuteWitness, SearchesGeneralFiniteSets) {
  const auto s = make_state_space(2);
  const Event f(s, {0.3, 0.6}), g(s, {0.5, 0.5}), a(s, {0.1, 0.2});
  const std::vector<Event> p{Event::zero(s), Event::one(s), f, g, a};
  const auto w = commute_witness(p, f, g);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(approx_equal(w->a, a));

  const Event f2(s, {0.7, 0.6}), g2(s, {0.6, 0.7});
  const std::vector<Event> q{Event::zero(s), Event::one(s), f2, g2};
  EXPECT_FALSE(commute_witness(q, f2, g2).has_value());
}

TEST(LexicographicSubsets, Order) {
  std::vector<std::string> got;
  for (const auto& i : lexicographic_subsets(3)) got.push_back(i.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"{1}", "{1,2}", "{1,2,3}", "{1,3}", "{2}", "{2,3}", "{3}"}));
}

TEST(BooleanByMinima, Examples) {
  const auto even = even_logic();
  const auto neg = boolean_by_minima(even, family_of(even, {0b0011, 0b0101}));
  EXPECT_FALSE(neg.boolean);
  ASSERT_TRUE(neg.missing_minimum.has_value());
  EXPECT_EQ(neg.missing_minimum->to_string(), "{1,2}");
  EXPECT_FALSE(neg.witnesses.has_value());

  const auto pos = boolean_by_minima(even, family_of(even, {0b0011, 0b1100}));
  EXPECT_TRUE(pos.boolean);
  EXPECT_FALSE(pos.missing_minimum.has_value());
  ASSERT_TRUE(pos.witnesses.has_value());
  EXPECT_EQ(pos.witnesses->witnesses.size(), 1u);

  const auto p3 = power_set(3);
  for (std::uint32_t a = 1; a < 7; ++a) {
    for (std::uint32_t b = a + 1; b < 7; ++b) {
      EXPECT_TRUE(boolean_by_minima(p3, family_of(p3, {a, b})).boolean);
    }
  }
}

TEST(BooleanByMinima, FourEventsGiveSixteenWitnesses) {
  const auto p4 = power_set(4);
  const auto v = boolean_by_minima(p4, family_of(p4, {0b0011, 0b0110, 0b1100, 0b1001}));
  ASSERT_TRUE(v.boolean);
  EXPECT_EQ(v.witnesses->witnesses.size(), 16u);
  for (const auto& rel : v.witnesses->relations) {
    const Event& a = v.witnesses->at(rel.witness);
    EXPECT_TRUE(is_commute_witness(a, v.minima->at(rel.f), v.minima->at(rel.g))) << rel.witness;
    EXPECT_TRUE(p4.contains(a));
  }
}

TEST(BooleanByMinima, Preconditions) {
  const auto even = even_logic();
  EXPECT_THROW(boolean_by_minima(even, family_of(even, {0b0011})), Error);
  EXPECT_THROW(boolean_by_minima(even, family_of(even, {0b0011, 0b0001})), Error);
  const auto p3 = power_set(3);
  EXPECT_THROW(boolean_by_minima(p3, family_of(p3, {1, 2, 3, 4, 5})), Error);
}

TEST(BooleanOracle, Examples) {
  const auto even = even_logic();
  EXPECT_FALSE(boolean_oracle(even, family_of(even, {0b0011, 0b0101})).boolean);
  const auto pos = boolean_oracle(even, family_of(even, {0b0011, 0b1100}));
  EXPECT_TRUE(pos.boolean);
  ASSERT_EQ(pos.atoms.size(), 2u);
  std::set<std::uint32_t> atoms;
  for (const auto& a : pos.atoms) atoms.insert(oracle::event_mask(a));
  EXPECT_EQ(atoms, (std::set<std::uint32_t>{0b0011, 0b1100}));

  const auto p3 = power_set(3);
  EXPECT_TRUE(boolean_oracle(p3, family_of(p3, {1, 3, 6})).boolean);
}

TEST(BooleanOracle, AtomsPartitionUnityAndGenerateTheFamily) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto logic = random_concrete_logic(3 + seed % 3, 3, seed);
    const auto& m = logic.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const EventFamily fam({m[i], m[j]});
        const auto r = boolean_oracle(logic, fam);
        if (!r.boolean) continue;
        std::uint32_t cover = 0;
        for (const auto& a : r.atoms) {
          const auto am = oracle::event_mask(a);
          EXPECT_NE(am, 0u);
          EXPECT_EQ(cover & am, 0u);
          EXPECT_TRUE(logic.contains(a));
          cover |= am;
        }
        EXPECT_EQ(cover, (1u << logic.space()->size()) - 1);
        for (const auto& p : fam.events()) {
          const auto pm = oracle::event_mask(p);
          std::uint32_t built = 0;
          for (const auto& a : r.atoms) {
            const auto am = oracle::event_mask(a);
            if ((am & pm) == am) built |= am;
          }
          EXPECT_EQ(built, pm);
        }
      }
    }
  }
}

TEST(BooleanOracle, BudgetIsEnforced) {
  const auto even = even_logic();
  EXPECT_THROW(boolean_oracle(even, family_of(even, {0b0011, 0b1100}), {.node_budget = 1}), BudgetExceeded);
  EXPECT_THROW(boolean_oracle(even, family_of(even, {0b0011, 0b1100}), {.max_members = 4}), BudgetExceeded);
}

TEST(BooleanOracle, AgreesWithMinimaCriterion) {
  int positives = 0, negatives = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto logic = random_concrete_logic(2 + seed % 4, 2 + seed % 3, seed);
    const auto& m = logic.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        const EventFamily fam({m[i], m[j]});
        const bool a = boolean_by_minima(logic, fam).boolean;
        EXPECT_EQ(a, boolean_oracle(logic, fam).boolean);
        (a ? positives : negatives)++;
      }
    }
  }
  EXPECT_GT(positives, 0);
  EXPECT_GT(negatives, 0);
}
