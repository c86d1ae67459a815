#include "numevent/event.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "numevent/error.hpp"
#include "numevent/format.hpp"
#include "numevent/tolerance.hpp"

namespace numevent {

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("state space must contain at least one state");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error("duplicate state label '" + l + "'");
  }
}

StateSpacePtr make_state_space(std::size_t size) {
  std::vector<std::string> labels;
  labels.reserve(size);
  for (std::size_t k = 0; k < size; ++k) labels.push_back("s" + std::to_string(k + 1));
  return std::make_shared<const StateSpace>(std::move(labels));
}

StateSpacePtr make_state_space(std::vector<std::string> labels) {
  return std::make_shared<const StateSpace>(std::move(labels));
}

Event::Event(StateSpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw Error("event requires a state space");
  if (values_.size() != space_->size()) {
    throw Error("event has " + std::to_string(values_.size()) + " values but the state space has " +
                std::to_string(space_->size()) + " states");
  }
  const double e = eps();
  for (std::size_t k = 0; k < values_.size(); ++k) {
    double& v = values_[k];
    if (!std::isfinite(v) || v < -e || v > 1.0 + e) {
      throw Error("value " + format_real(v) + " at state '" + space_->label(k) +
                  "' lies outside [0,1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
}

Event Event::zero(StateSpacePtr space) {
  const auto n = space ? space->size() : 0;
  return Event(std::move(space), std::vector<double>(n, 0.0));
}

Event Event::one(StateSpacePtr space) {
  const auto n = space ? space->size() : 0;
  return Event(std::move(space), std::vector<double>(n, 1.0));
}

void require_same_space(const Event& p, const Event& q) {
  if (p.space() == q.space()) return;
  if (*p.space() == *q.space()) return;
  throw Error("events reference different state spaces");
}

Event complement(const Event& p) {
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = 1.0 - p[k];
  return Event(p.space(), std::move(out));
}

bool leq(const Event& p, const Event& q) {
  require_same_space(p, q);
  const double e = eps();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > q[k] + e) return false;
  }
  return true;
}

bool orthogonal(const Event& p, const Event& q) {
  require_same_space(p, q);
  const double e = eps();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] + q[k] > 1.0 + e) return false;
  }
  return true;
}

bool approx_equal(const Event& p, const Event& q) {
  require_same_space(p, q);
  const double e = eps();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (std::abs(p[k] - q[k]) > e) return false;
  }
  return true;
}

Event ortho_sum(const Event& p, const Event& q) {
  if (!orthogonal(p, q)) throw Error("not orthogonal: " + to_string(p) + " + " + to_string(q));
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[k] + q[k];
  return Event(p.space(), std::move(out));
}

Event difference(const Event& q, const Event& p) {
  if (!leq(p, q)) throw Error("not comparable: " + to_string(p) + " is not below " + to_string(q));
  std::vector<double> out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = q[k] - p[k];
  return Event(q.space(), std::move(out));
}

Event pointwise_min(std::span<const Event> events) {
  if (events.empty()) throw Error("pointwise minimum of an empty sequence");
  std::vector<double> out(events.front().values().begin(), events.front().values().end());
  for (const auto& e : events.subspan(1)) {
    require_same_space(events.front(), e);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::min(out[k], e[k]);
  }
  return Event(events.front().space(), std::move(out));
}

Event pointwise_min(const Event& p, const Event& q) {
  const Event pair[] = {p, q};
  return pointwise_min(pair);
}

bool is_proper(const Event& p) {
  const Event c = complement(p);
  return !leq(p, c) && !leq(c, p);
}

bool is_two_valued(const Event& p) {
  const double e = eps();
  return std::all_of(p.values().begin(), p.values().end(),
                     [e](double v) { return v <= e || v >= 1.0 - e; });
}

bool is_zero(const Event& p) {
  const double e = eps();
  return std::all_of(p.values().begin(), p.values().end(), [e](double v) { return v <= e; });
}

bool is_one(const Event& p) {
  const double e = eps();
  return std::all_of(p.values().begin(), p.values().end(), [e](double v) { return v >= 1.0 - e; });
}

bool is_commute_witness(const Event& a, const Event& f, const Event& g) {
  require_same_space(a, f);
  require_same_space(a, g);
  const double e = eps();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double upper = a[k] + g[k];
    if (a[k] > f[k] + e || f[k] > upper + e || upper > 1.0 + e) return false;
  }
  return true;
}

std::string to_string(const Event& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ", ";
    os << format_real(p[k]);
  }
  os << ')';
  return os.str();
}

EventFamily::EventFamily(std::vector<Event> events) : EventFamily(events, {}) {}

EventFamily::EventFamily(std::vector<Event> events, std::vector<std::string> names)
    : events_(std::move(events)), names_(std::move(names)) {
  if (names_.empty()) {
    for (std::size_t i = 0; i < events_.size(); ++i) names_.push_back("p" + std::to_string(i + 1));
  }
  if (names_.size() != events_.size()) throw Error("event family: one name per event required");
  for (std::size_t i = 0; i < events_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (approx_equal(events_[i], events_[j])) {
        throw Error("event family: '" + names_[i] + "' duplicates '" + names_[j] + "'");
      }
    }
  }
}

StateSpacePtr EventFamily::space() const {
  return events_.empty() ? nullptr : events_.front().space();
}

}  // namespace numevent
