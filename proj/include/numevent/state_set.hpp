#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "numevent/event.hpp"

namespace numevent {

/// Two-valued event as a set of states: bit k set iff the event is 1 at s_k.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t num_states)
      : num_states_(num_states), words_((num_states + 63) / 64, 0) {}

  /// Rounds a two-valued event (values within eps of 0 or 1). Throws
  /// "not two-valued" otherwise.
  static StateSet from_event(const Event& p);
  Event to_event(const StateSpacePtr& space) const;

  std::size_t num_states() const noexcept { return num_states_; }

  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1u; }
  void set(std::size_t k) { words_[k / 64] |= std::uint64_t{1} << (k % 64); }
  void reset(std::size_t k) { words_[k / 64] &= ~(std::uint64_t{1} << (k % 64)); }

  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// Index of the lowest set state, num_states() if empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return num_states_;
  }

  bool disjoint(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return false;
    }
    return true;
  }
  bool subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  StateSet complement() const;
  StateSet operator|(const StateSet& o) const;
  StateSet operator&(const StateSet& o) const;
  /// Set difference this \ o.
  StateSet operator-(const StateSet& o) const;

  bool operator==(const StateSet&) const = default;
  auto operator<=>(const StateSet&) const = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t num_states_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace numevent
