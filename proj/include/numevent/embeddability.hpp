#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numevent/concrete_logic.hpp"
#include "numevent/error.hpp"
#include "numevent/event.hpp"

namespace numevent {

enum class Verdict { kEmbeddable, kNotEmbeddable, kUndecided };

std::string to_string(Verdict v);

/// Smallest known container for an embeddable family.
struct Container {
  enum class Kind { kMO, kBoolean8, kBoolean16, kGfeClosure };
  Kind kind;
  /// n for MO_n, element count for the closure, 8 or 16 otherwise.
  std::size_t size;
};

std::string to_string(const Container& c);

struct LabeledEvent {
  std::string label;
  Event event;
};

struct EmbeddingReport {
  Verdict verdict = Verdict::kUndecided;
  std::optional<Container> container;
  std::vector<std::string> reasons;
  std::vector<LabeledEvent> witnesses;
};

/// Raised for a family member that is comparable to its own complement.
class ImproperEventError : public Error {
 public:
  ImproperEventError(std::string name, Event event);
  const std::string& name() const noexcept { return name_; }
  const Event& event() const noexcept { return event_; }

 private:
  std::string name_;
  Event event_;
};

struct ClosureOptions {
  std::size_t max_size = std::size_t{1} << 16;
};

/// Least set containing the family, 0 and 1 that is closed under complement
/// and orthogonal sums. Members must be two-valued. The empty family needs an
/// explicit state space and yields {0, 1}.
ConcreteLogic gfe_closure(const EventFamily& family, StateSpacePtr space = nullptr,
                          ClosureOptions opts = {});

struct AntichainResult {
  bool antichain = true;
  /// The first comparable pair found (first <= second), when not an antichain.
  std::optional<std::pair<LabeledEvent, LabeledEvent>> comparable;
  /// The elements that were compared; complements are labelled with a prime.
  std::vector<LabeledEvent> elements;
};

/// No two distinct members (of the family, or of the family together with
/// its complements) are comparable. Elements equal within eps count once.
AntichainResult is_antichain(const EventFamily& family, bool include_complements);

/// {0, 1, p1, p1', p2, p2', p2-p1, (p2-p1)'} for p1 <= p2 with p2-p1 proper.
std::vector<Event> boolean8_container(const Event& p1, const Event& p2);

/// Runs the decision procedure: two-valued closure, antichain (MO_n),
/// two-state comparability, the n = 2 difference rule, else undecided.
/// Throws ImproperEventError for an improper member.
EmbeddingReport classify_embedding(const EventFamily& family);

}  // namespace numevent
