#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "numevent/bell.hpp"
#include "numevent/event.hpp"
#include "numevent/set_function.hpp"
#include "numevent/state_set.hpp"

namespace numevent {

/// Which requirement a candidate logic fails.
struct LogicDefect {
  /// "two-valued", "A1", "A2" or "A3".
  std::string axiom;
  std::string message;
  std::vector<Event> offending;
};

struct LogicCheck {
  bool ok = true;
  std::optional<LogicDefect> defect;
};

/// Two-valued, contains 0, closed under complement and orthogonal sums.
LogicCheck is_concrete_logic(std::span<const Event> members);

/// A validated concrete logic: a finite set of two-valued events containing
/// 0 and 1, closed under complement and under sums of orthogonal members.
class ConcreteLogic {
 public:
  /// Throws numevent::Error naming the violated axiom.
  explicit ConcreteLogic(std::vector<Event> members);

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Event>& members() const noexcept { return members_; }
  const Event& operator[](std::size_t i) const { return members_[i]; }
  const StateSpacePtr& space() const { return members_.front().space(); }
  const std::vector<StateSet>& sets() const noexcept { return sets_; }

  bool contains(const Event& p) const { return index_of(p).has_value(); }
  bool contains(const StateSet& s) const { return index_.contains(s); }
  std::optional<std::size_t> index_of(const Event& p) const;

 private:
  std::vector<Event> members_;
  std::vector<StateSet> sets_;
  std::unordered_map<StateSet, std::size_t, StateSetHash> index_;
};

/// The relation f C(a) g.
struct CommuteWitness {
  Event a;
  Event f;
  Event g;
};

/// Searches a with a <= f <= a + g <= 1 in P. For two-valued P the only
/// candidate is min(f, g'); otherwise every member is tried.
/// Throws when f or g is not a member of P.
std::optional<CommuteWitness> commute_witness(std::span<const Event> members, const Event& f,
                                              const Event& g);

struct BooleanVerdict {
  bool boolean = false;
  /// First subset (lexicographic on sorted members) whose minimum is absent.
  std::optional<SubsetIndex> missing_minimum;
  /// Witnesses built from the pointwise-minimum correlations when boolean.
  std::optional<WitnessSet> witnesses;
  std::optional<CorrelationTable> minima;
};

/// Decides whether the family sits in a Boolean subalgebra of the logic by
/// checking that every k-fold pointwise minimum is a member. 2 <= n <= 4.
BooleanVerdict boolean_by_minima(const ConcreteLogic& logic, const EventFamily& family);

/// Non-empty subsets of {1..n} ordered lexicographically by their sorted
/// member lists: {1}, {1,2}, {1,2,3}, {1,3}, {2}, ...
std::vector<SubsetIndex> lexicographic_subsets(int n);

struct OracleOptions {
  std::size_t node_budget = 1'000'000;
  std::size_t max_members = 4096;
};

struct OracleResult {
  bool boolean = false;
  /// Atoms of a Boolean subalgebra containing the family, when one exists.
  std::vector<Event> atoms;
  std::size_t nodes = 0;
};

/// Independent check by search: looks for pairwise-orthogonal non-zero
/// members summing to 1 such that every family member is a sum of some of
/// them. Throws BudgetExceeded instead of answering when the search runs out.
OracleResult boolean_oracle(const ConcreteLogic& logic, const EventFamily& family,
                            OracleOptions opts = {});

}  // namespace numevent
