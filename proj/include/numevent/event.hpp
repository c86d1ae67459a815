#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace numevent {

/// Ordered, finite set of system states. Labels are unique.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }

  bool operator==(const StateSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

using StateSpacePtr = std::shared_ptr<const StateSpace>;

/// Convenience: states named s1..sn.
StateSpacePtr make_state_space(std::size_t size);
StateSpacePtr make_state_space(std::vector<std::string> labels);

/// A numerical event: one probability per state of a shared StateSpace.
///
/// Construction applies the ingestion rule: values inside [-eps, 1+eps] are
/// clamped into [0,1], anything further out is rejected. After construction
/// every value lies in [0,1] exactly.
class Event {
 public:
  Event(StateSpacePtr space, std::vector<double> values);

  static Event zero(StateSpacePtr space);
  static Event one(StateSpacePtr space);

  const StateSpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  StateSpacePtr space_;
  std::vector<double> values_;
};

/// Throws numevent::Error when the two events live on different state spaces.
void require_same_space(const Event& p, const Event& q);

Event complement(const Event& p);
bool leq(const Event& p, const Event& q);
bool orthogonal(const Event& p, const Event& q);
/// Pointwise agreement within eps.
bool approx_equal(const Event& p, const Event& q);

/// p + q for orthogonal p, q. Throws "not orthogonal" otherwise.
Event ortho_sum(const Event& p, const Event& q);
/// q - p for p <= q. Throws "not comparable" otherwise.
Event difference(const Event& q, const Event& p);
/// Coordinatewise minimum of a non-empty sequence.
Event pointwise_min(std::span<const Event> events);
Event pointwise_min(const Event& p, const Event& q);

bool is_proper(const Event& p);
/// Every coordinate within eps of 0 or 1.
bool is_two_valued(const Event& p);
bool is_zero(const Event& p);
bool is_one(const Event& p);

/// a <= f <= a + g <= 1, the relation f C(a) g.
bool is_commute_witness(const Event& a, const Event& f, const Event& g);

std::string to_string(const Event& p);

/// The measured family P_n. Members share one state space and are pairwise
/// distinct within eps; input order is preserved.
class EventFamily {
 public:
  explicit EventFamily(std::vector<Event> events);
  EventFamily(std::vector<Event> events, std::vector<std::string> names);

  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }
  const std::vector<Event>& events() const noexcept { return events_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Shared state space, null for an empty family.
  StateSpacePtr space() const;

 private:
  std::vector<Event> events_;
  std::vector<std::string> names_;
};

}  // namespace numevent
