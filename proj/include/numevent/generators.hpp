#pragma once

// Fixture factories with known classical / non-classical status.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "numevent/bell.hpp"
#include "numevent/concrete_logic.hpp"
#include "numevent/event.hpp"

namespace numevent {

/// Classical event system: k atoms, one probability vector over the atoms per
/// state. The event of an atom set A is p_A(s) = sum of measure_s(atom), atom in A.
class BooleanMeasureAlgebra {
 public:
  /// measures[s][atom]; rows must be non-negative and sum to 1 within eps.
  BooleanMeasureAlgebra(StateSpacePtr space, std::vector<std::vector<double>> measures);

  int num_atoms() const noexcept { return num_atoms_; }
  const StateSpacePtr& space() const noexcept { return space_; }
  const std::vector<std::vector<double>>& measures() const noexcept { return measures_; }

  /// p_A for the atom set with bitmask atoms (bit a = atom a).
  Event event(std::uint32_t atoms) const;
  /// All 2^k events indexed by atom bitmask.
  std::vector<Event> events() const;

  /// p_I := p of the intersection of the generators' atom sets.
  CorrelationTable correlation_table(std::span<const std::uint32_t> generators) const;

 private:
  StateSpacePtr space_;
  std::vector<std::vector<double>> measures_;
  int num_atoms_;
};

/// Seed-deterministic random measures (flat Dirichlet rows). 1 <= k <= 10.
BooleanMeasureAlgebra gen_boolean_algebra(int k, std::size_t num_states, std::uint64_t seed);

/// Seed-deterministic generator masks for correlation tables: n non-empty
/// atom sets of a k-atom algebra.
std::vector<std::uint32_t> random_generators(int k, int n, std::uint64_t seed);

/// Real Hilbert-space logic fixture: symmetric idempotent matrices (row-major
/// dim x dim) and one unit vector per state.
struct HilbertFixture {
  int dim = 0;
  std::vector<std::vector<double>> projectors;
  std::vector<std::vector<double>> state_vectors;
  /// Optional; states s1..sm when null.
  StateSpacePtr space;
};

/// Raw <A v_s, v_s> per projector (rows) and state (columns).
std::vector<std::vector<double>> hilbert_values(const HilbertFixture& fx);
/// One event per projector. Validates the fixture within 1e-9.
EventFamily hilbert_events(const HilbertFixture& fx);

/// Random projectors of random rank and random unit state vectors.
HilbertFixture random_hilbert_fixture(int dim, std::size_t num_projectors, std::size_t num_states,
                                      std::uint64_t seed);

/// Closure-generated concrete logic from two-valued seeds.
ConcreteLogic gen_concrete_logic(const EventFamily& seed_events);

/// Closure of num_seeds random two-valued events over num_states states.
ConcreteLogic random_concrete_logic(std::size_t num_states, std::size_t num_seeds, std::uint64_t seed);

}  // namespace numevent
