#include "numevent/concrete_logic.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "numevent/error.hpp"

namespace numevent {

LogicCheck is_concrete_logic(std::span<const Event> members) {
  LogicCheck out;
  const auto fail = [&out](std::string axiom, std::string message, std::vector<Event> offending) {
    out.ok = false;
    out.defect = LogicDefect{std::move(axiom), std::move(message), std::move(offending)};
    return out;
  };
  if (members.empty()) return fail("A1", "A1 violated: the empty set does not contain 0", {});

  for (const auto& p : members) {
    require_same_space(members.front(), p);
    if (!is_two_valued(p)) {
      return fail("two-valued", "member " + to_string(p) + " is not two-valued", {p});
    }
  }

  std::vector<StateSet> sets;
  sets.reserve(members.size());
  std::unordered_set<StateSet, StateSetHash> present;
  for (const auto& p : members) {
    sets.push_back(StateSet::from_event(p));
    present.insert(sets.back());
  }
  const auto& space = members.front().space();

  if (!present.contains(StateSet(space->size()))) {
    return fail("A1", "A1 violated: 0 is not a member", {});
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const StateSet c = sets[i].complement();
    if (!present.contains(c)) {
      return fail("A2", "A2 violated: complement " + to_string(c.to_event(space)) + " of " +
                            to_string(members[i]) + " is missing",
                  {members[i]});
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets[i].disjoint(sets[j])) continue;
      const StateSet u = sets[i] | sets[j];
      if (!present.contains(u)) {
        return fail("A3", "A3 violated: orthogonal sum " + to_string(members[i]) + " + " +
                              to_string(members[j]) + " = " + to_string(u.to_event(space)) +
                              " is missing",
                    {members[i], members[j]});
      }
    }
  }
  return out;
}

ConcreteLogic::ConcreteLogic(std::vector<Event> members) : members_(std::move(members)) {
  const LogicCheck check = is_concrete_logic(members_);
  if (!check.ok) throw Error("not a concrete logic: " + check.defect->message);
  sets_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    sets_.push_back(StateSet::from_event(members_[i]));
    index_.emplace(sets_.back(), i);
  }
}

std::optional<std::size_t> ConcreteLogic::index_of(const Event& p) const {
  require_same_space(members_.front(), p);
  if (!is_two_valued(p)) return std::nullopt;
  const auto it = index_.find(StateSet::from_event(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CommuteWitness> commute_witness(std::span<const Event> members, const Event& f,
                                              const Event& g) {
  const auto member = [&](const Event& x) {
    return std::any_of(members.begin(), members.end(),
                       [&](const Event& m) { return approx_equal(m, x); });
  };
  if (!member(f)) throw Error("commute_witness: f = " + to_string(f) + " is not in P");
  if (!member(g)) throw Error("commute_witness: g = " + to_string(g) + " is not in P");

  const bool concrete = std::all_of(members.begin(), members.end(),
                                    [](const Event& m) { return is_two_valued(m); });
  if (concrete) {
    // In a concrete logic the witness is unique: min(f, g').
    Event candidate = pointwise_min(f, complement(g));
    if (!member(candidate)) return std::nullopt;
    return CommuteWitness{std::move(candidate), f, g};
  }
  for (const auto& a : members) {
    if (is_commute_witness(a, f, g)) return CommuteWitness{a, f, g};
  }
  return std::nullopt;
}

std::vector<SubsetIndex> lexicographic_subsets(int n) {
  std::vector<SubsetIndex> out;
  for (std::uint32_t b = 1; b < (std::uint32_t{1} << n); ++b) out.emplace_back(b, n);
  std::sort(out.begin(), out.end(), [](const SubsetIndex& a, const SubsetIndex& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  });
  return out;
}

BooleanVerdict boolean_by_minima(const ConcreteLogic& logic, const EventFamily& family) {
  const int n = static_cast<int>(family.size());
  if (n < 2 || n > 4) {
    throw Error("the minima criterion covers families of 2, 3 or 4 events, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!logic.contains(family[i])) {
      throw Error("family member '" + family.name(i) + "' = " + to_string(family[i]) +
                  " is not in the logic");
    }
  }

  BooleanVerdict verdict;
  for (const auto& subset : lexicographic_subsets(n)) {
    std::vector<Event> chosen;
    for (int m : subset.members()) chosen.push_back(family[static_cast<std::size_t>(m - 1)]);
    if (!logic.contains(pointwise_min(chosen))) {
      verdict.boolean = false;
      verdict.missing_minimum = subset;
      return verdict;
    }
  }
  verdict.boolean = true;
  verdict.minima = CorrelationTable::from_pointwise_minima(family);
  verdict.witnesses = witnesses_from_correlations(*verdict.minima);
  return verdict;
}

namespace {

// Decomposes each min-term cell of the family into disjoint logic members.
class AtomSearch {
 public:
  AtomSearch(const ConcreteLogic& logic, std::size_t budget) : logic_(logic), budget_(budget) {}

  /// Appends a partition of cell into non-empty members to atoms, or returns false.
  bool decompose(const StateSet& cell, std::vector<StateSet>& atoms) {
    std::vector<const StateSet*> candidates;
    for (const auto& m : logic_.sets()) {
      if (!m.none() && m.subset_of(cell)) candidates.push_back(&m);
    }
    // Larger blocks first: fewer atoms, shallower search.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const StateSet* a, const StateSet* b) { return a->count() > b->count(); });
    const std::size_t mark = atoms.size();
    if (search(cell, candidates, atoms)) return true;
    atoms.resize(mark);
    return false;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  bool search(const StateSet& remaining, const std::vector<const StateSet*>& candidates,
              std::vector<StateSet>& atoms) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("Boolean oracle exceeded its node budget of " + std::to_string(budget_));
    }
    if (remaining.none()) return true;
    const std::size_t pivot = remaining.first();
    for (const StateSet* c : candidates) {
      if (!c->test(pivot) || !c->subset_of(remaining)) continue;
      atoms.push_back(*c);
      if (search(remaining - *c, candidates, atoms)) return true;
      atoms.pop_back();
    }
    return false;
  }

  const ConcreteLogic& logic_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace

OracleResult boolean_oracle(const ConcreteLogic& logic, const EventFamily& family, OracleOptions opts) {
  if (logic.size() > opts.max_members) {
    throw BudgetExceeded("Boolean oracle limited to " + std::to_string(opts.max_members) +
                         " logic members, got " + std::to_string(logic.size()));
  }
  std::vector<StateSet> generators;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!logic.contains(family[i])) {
      throw Error("family member '" + family.name(i) + "' is not in the logic");
    }
    generators.push_back(StateSet::from_event(family[i]));
  }

  // Min-term cells: states grouped by their membership pattern in the family.
  const std::size_t states = logic.space()->size();
  std::map<std::vector<bool>, StateSet> cells;
  for (std::size_t s = 0; s < states; ++s) {
    std::vector<bool> pattern(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) pattern[i] = generators[i].test(s);
    auto [it, inserted] = cells.try_emplace(pattern, StateSet(states));
    it->second.set(s);
  }

  AtomSearch search(logic, opts.node_budget);
  std::vector<StateSet> atoms;
  OracleResult result;
  for (const auto& [pattern, cell] : cells) {
    if (!search.decompose(cell, atoms)) {
      result.boolean = false;
      result.nodes = search.nodes();
      return result;
    }
  }
  result.boolean = true;
  result.nodes = search.nodes();
  for (const auto& a : atoms) result.atoms.push_back(a.to_event(logic.space()));
  return result;
}

}  // namespace numevent
