#include "numevent/state_set.hpp"

#include "numevent/error.hpp"
#include "numevent/tolerance.hpp"

namespace numevent {

StateSet StateSet::from_event(const Event& p) {
  if (!is_two_valued(p)) throw Error("not two-valued: " + to_string(p));
  StateSet s(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] >= 0.5) s.set(k);
  }
  return s;
}

Event StateSet::to_event(const StateSpacePtr& space) const {
  std::vector<double> v(num_states_);
  for (std::size_t k = 0; k < num_states_; ++k) v[k] = test(k) ? 1.0 : 0.0;
  return Event(space, std::move(v));
}

StateSet StateSet::complement() const {
  StateSet out(num_states_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (const auto tail = num_states_ % 64; tail != 0 && !out.words_.empty()) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

StateSet StateSet::operator|(const StateSet& o) const {
  StateSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= o.words_[i];
  return out;
}

StateSet StateSet::operator&(const StateSet& o) const {
  StateSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
  return out;
}

StateSet StateSet::operator-(const StateSet& o) const {
  StateSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~o.words_[i];
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = num_states_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace numevent
