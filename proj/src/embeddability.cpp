#include "numevent/embeddability.hpp"

#include <algorithm>
#include <unordered_set>

#include "numevent/error.hpp"

namespace numevent {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kEmbeddable: return "EMBEDDABLE";
    case Verdict::kNotEmbeddable: return "NOT_EMBEDDABLE";
    case Verdict::kUndecided: return "UNDECIDED";
  }
  return "?";
}

std::string to_string(const Container& c) {
  switch (c.kind) {
    case Container::Kind::kMO: return "MO_" + std::to_string(c.size);
    case Container::Kind::kBoolean8: return "BOOLEAN_8";
    case Container::Kind::kBoolean16: return "BOOLEAN_16";
    case Container::Kind::kGfeClosure: return "GFE_CLOSURE(" + std::to_string(c.size) + ")";
  }
  return "?";
}

ImproperEventError::ImproperEventError(std::string name, Event event)
    : Error("improper event '" + name + "' = " + to_string(event) +
            ": it is comparable to its own complement"),
      name_(std::move(name)),
      event_(std::move(event)) {}

ConcreteLogic gfe_closure(const EventFamily& family, StateSpacePtr space, ClosureOptions opts) {
  if (!space) space = family.space();
  if (!space) throw Error("closure of an empty family needs an explicit state space");
  const std::size_t states = space->size();

  std::vector<StateSet> members;
  std::unordered_set<StateSet, StateSetHash> seen;
  const auto add = [&](StateSet s) {
    if (!seen.insert(s).second) return;
    if (members.size() >= opts.max_size) {
      throw BudgetExceeded("closure exceeds " + std::to_string(opts.max_size) + " members");
    }
    members.push_back(std::move(s));
  };

  add(StateSet(states));
  add(StateSet(states).complement());
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_space(Event::zero(space), family[i]);
    if (!is_two_valued(family[i])) {
      throw Error("not two-valued: '" + family.name(i) + "' = " + to_string(family[i]));
    }
    add(StateSet::from_event(family[i]));
  }

  // Worklist: each new member is paired with everything discovered so far;
  // pairs with later members are handled when those are processed.
  for (std::size_t i = 0; i < members.size(); ++i) {
    add(members[i].complement());
    for (std::size_t j = 0; j < i; ++j) {
      if (members[i].disjoint(members[j])) add(members[i] | members[j]);
    }
  }

  std::vector<Event> events;
  events.reserve(members.size());
  for (const auto& s : members) events.push_back(s.to_event(space));
  return ConcreteLogic(std::move(events));
}

AntichainResult is_antichain(const EventFamily& family, bool include_complements) {
  AntichainResult out;
  const auto push = [&out](std::string label, Event e) {
    for (const auto& existing : out.elements) {
      if (approx_equal(existing.event, e)) return;
    }
    out.elements.push_back({std::move(label), std::move(e)});
  };
  for (std::size_t i = 0; i < family.size(); ++i) push(family.name(i), family[i]);
  if (include_complements) {
    for (std::size_t i = 0; i < family.size(); ++i) push(family.name(i) + "'", complement(family[i]));
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < out.elements.size(); ++j) {
      const auto& a = out.elements[i];
      const auto& b = out.elements[j];
      if (leq(a.event, b.event)) {
        out.antichain = false;
        out.comparable.emplace(a, b);
        return out;
      }
      if (leq(b.event, a.event)) {
        out.antichain = false;
        out.comparable.emplace(b, a);
        return out;
      }
    }
  }
  return out;
}

std::vector<Event> boolean8_container(const Event& p1, const Event& p2) {
  if (!is_proper(p1)) throw Error("boolean8_container: p1 = " + to_string(p1) + " is not proper");
  if (!is_proper(p2)) throw Error("boolean8_container: p2 = " + to_string(p2) + " is not proper");
  if (!leq(p1, p2)) throw Error("boolean8_container: p1 is not below p2");
  Event d = difference(p2, p1);
  if (!is_proper(d)) throw Error("boolean8_container: p2 - p1 = " + to_string(d) + " is not proper");
  const auto& space = p1.space();
  Event dc = complement(d);
  return {Event::zero(space), Event::one(space), p1, complement(p1), p2, complement(p2),
          std::move(d), std::move(dc)};
}

EmbeddingReport classify_embedding(const EventFamily& family) {
  if (family.empty()) throw Error("cannot classify an empty family");
  // 0 and 1 lie in every algebra; only the other members constrain the container
  std::vector<Event> core_events;
  std::vector<std::string> core_names;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (is_zero(family[i]) || is_one(family[i])) continue;
    if (!is_proper(family[i])) throw ImproperEventError(family.name(i), family[i]);
    core_events.push_back(family[i]);
    core_names.push_back(family.name(i));
  }
  const std::size_t n = core_events.size();
  const std::size_t states = family.space()->size();
  EmbeddingReport report;

  const bool two_valued = std::all_of(family.events().begin(), family.events().end(),
                                      [](const Event& p) { return is_two_valued(p); });
  const AntichainResult anti = n == 0 ? AntichainResult{}
                                      : is_antichain(EventFamily(core_events, core_names), true);

  if (two_valued) {
    const ConcreteLogic closure = gfe_closure(family);
    report.verdict = Verdict::kEmbeddable;
    report.container = Container{Container::Kind::kGfeClosure, closure.size()};
    report.reasons.push_back("all members are two-valued: the structure they generate under 0, 1, "
                             "complement and orthogonal sums is a concrete logic with " +
                             std::to_string(closure.size()) + " elements");
    if (n > 0 && anti.antichain) {
      report.reasons.push_back("the family and its complements also form an antichain (MO_" +
                               std::to_string(anti.elements.size() / 2) + " would contain it)");
    }
    return report;
  }

  if (anti.antichain) {
    const std::size_t k = anti.elements.size() / 2;
    report.verdict = Verdict::kEmbeddable;
    report.container = Container{Container::Kind::kMO, k};
    report.reasons.push_back("the family and its complements are pairwise incomparable: MO_" +
                             std::to_string(k) + " is the smallest algebra containing the family");
    if (n == 2) {
      report.reasons.push_back("the smallest Boolean algebra containing the pair as a suborder has 16 "
                               "elements (BOOLEAN_16)");
    }
    return report;
  }

  const auto& [low, high] = *anti.comparable;
  const std::string relation = low.label + " <= " + high.label;

  if (states == 2) {
    report.verdict = Verdict::kNotEmbeddable;
    report.reasons.push_back("two states and " + relation +
                             ": over two states a family embeds only if it and its complements form "
                             "an antichain");
    report.witnesses.push_back(low);
    report.witnesses.push_back(high);
    report.witnesses.push_back({high.label + " - " + low.label, difference(high.event, low.event)});
    return report;
  }

  if (n == 2) {
    Event d = difference(high.event, low.event);
    LabeledEvent diff{high.label + " - " + low.label, d};
    if (is_proper(d)) {
      report.verdict = Verdict::kEmbeddable;
      report.container = Container{Container::Kind::kBoolean8, 8};
      report.reasons.push_back(relation + " and the difference " + diff.label +
                               " is proper: an eight-element Boolean algebra is the smallest container");
      report.witnesses.push_back(std::move(diff));
    } else {
      report.verdict = Verdict::kNotEmbeddable;
      report.reasons.push_back(relation + " but the difference " + diff.label + " = " + to_string(d) +
                               " is improper, and every element other than 0 and 1 of an algebra "
                               "must be proper");
      report.witnesses.push_back(low);
      report.witnesses.push_back(high);
      report.witnesses.push_back(std::move(diff));
    }
    return report;
  }

  report.verdict = Verdict::kUndecided;
  report.reasons.push_back("members are not all two-valued, so the closure rule does not apply");
  report.reasons.push_back("not an antichain (" + relation + "), so the MO_n rule does not apply");
  report.reasons.push_back("more than two states, so the two-state criterion does not apply");
  report.reasons.push_back("n = " + std::to_string(n) + ", so the pair difference rule does not apply");
  return report;
}

}  // namespace numevent
