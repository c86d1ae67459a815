#include "numevent/generators.hpp"

#include <cmath>
#include <random>
#include <set>

#include "numevent/embeddability.hpp"
#include "numevent/error.hpp"
#include "numevent/tolerance.hpp"

namespace numevent {

BooleanMeasureAlgebra::BooleanMeasureAlgebra(StateSpacePtr space,
                                             std::vector<std::vector<double>> measures)
    : space_(std::move(space)), measures_(std::move(measures)) {
  if (!space_) throw Error("measure algebra needs a state space");
  if (measures_.size() != space_->size()) throw Error("one measure row per state required");
  num_atoms_ = static_cast<int>(measures_.front().size());
  if (num_atoms_ < 1 || num_atoms_ > 10) throw Error("measure algebras support 1..10 atoms");
  const double e = eps();
  for (std::size_t s = 0; s < measures_.size(); ++s) {
    const auto& row = measures_[s];
    if (static_cast<int>(row.size()) != num_atoms_) throw Error("ragged measure rows");
    double total = 0.0;
    for (double w : row) {
      if (!(w >= 0.0)) throw Error("negative atom measure at state '" + space_->label(s) + "'");
      total += w;
    }
    if (std::abs(total - 1.0) > e) {
      throw Error("measure at state '" + space_->label(s) + "' sums to " + std::to_string(total));
    }
  }
}

Event BooleanMeasureAlgebra::event(std::uint32_t atoms) const {
  if (atoms >> num_atoms_) throw Error("atom mask out of range");
  std::vector<double> v(space_->size(), 0.0);
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (int a = 0; a < num_atoms_; ++a) {
      if ((atoms >> a) & 1u) v[s] += measures_[s][static_cast<std::size_t>(a)];
    }
  }
  return Event(space_, std::move(v));
}

std::vector<Event> BooleanMeasureAlgebra::events() const {
  std::vector<Event> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << num_atoms_); ++m) out.push_back(event(m));
  return out;
}

CorrelationTable BooleanMeasureAlgebra::correlation_table(std::span<const std::uint32_t> generators) const {
  const int n = static_cast<int>(generators.size());
  if (n < 1) throw Error("correlation table needs at least one generator");
  std::vector<std::pair<SubsetIndex, Event>> entries;
  for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
    std::uint32_t meet = (std::uint32_t{1} << num_atoms_) - 1;
    for (int i = 0; i < n; ++i) {
      if ((bits >> i) & 1u) meet &= generators[static_cast<std::size_t>(i)];
    }
    entries.emplace_back(SubsetIndex(bits, n), event(meet));
  }
  return CorrelationTable(n, std::move(entries));
}

BooleanMeasureAlgebra gen_boolean_algebra(int k, std::size_t num_states, std::uint64_t seed) {
  if (k < 1 || k > 10) throw Error("gen_boolean_algebra: k must lie in 1..10");
  if (num_states < 1) throw Error("gen_boolean_algebra: need at least one state");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<std::vector<double>> measures(num_states, std::vector<double>(static_cast<std::size_t>(k)));
  for (auto& row : measures) {
    double total = 0.0;
    for (auto& w : row) total += (w = draw(rng));
    for (auto& w : row) w /= total;
  }
  return BooleanMeasureAlgebra(make_state_space(num_states), std::move(measures));
}

std::vector<std::uint32_t> random_generators(int k, int n, std::uint64_t seed) {
  if (k < 1 || k > 10 || n < 1) throw Error("random_generators: bad arguments");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, (std::uint32_t{1} << k) - 1);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n));
  for (auto& g : out) g = pick(rng);
  return out;
}

namespace {

constexpr double kFixtureTol = 1e-9;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void validate(const HilbertFixture& fx) {
  const auto d = static_cast<std::size_t>(fx.dim);
  if (fx.dim < 1) throw Error("Hilbert fixture dimension must be positive");
  if (fx.state_vectors.empty()) throw Error("Hilbert fixture needs at least one state vector");
  for (std::size_t p = 0; p < fx.projectors.size(); ++p) {
    const auto& a = fx.projectors[p];
    if (a.size() != d * d) throw Error("projector " + std::to_string(p) + " has the wrong shape");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (std::abs(a[i * d + j] - a[j * d + i]) > kFixtureTol) {
          throw Error("projector " + std::to_string(p) + " is not symmetric");
        }
        double sq = 0.0;
        for (std::size_t k = 0; k < d; ++k) sq += a[i * d + k] * a[k * d + j];
        if (std::abs(sq - a[i * d + j]) > kFixtureTol) {
          throw Error("projector " + std::to_string(p) + " is not idempotent");
        }
      }
    }
  }
  for (std::size_t s = 0; s < fx.state_vectors.size(); ++s) {
    const auto& v = fx.state_vectors[s];
    if (v.size() != d) throw Error("state vector " + std::to_string(s) + " has the wrong length");
    if (std::abs(std::sqrt(dot(v, v)) - 1.0) > kFixtureTol) {
      throw Error("state vector " + std::to_string(s) + " is not a unit vector");
    }
  }
  if (fx.space && fx.space->size() != fx.state_vectors.size()) {
    throw Error("Hilbert fixture state space does not match its state vectors");
  }
}

}  // namespace

std::vector<std::vector<double>> hilbert_values(const HilbertFixture& fx) {
  validate(fx);
  const auto d = static_cast<std::size_t>(fx.dim);
  std::vector<std::vector<double>> out;
  std::vector<double> av(d);
  for (const auto& a : fx.projectors) {
    std::vector<double> row;
    for (const auto& v : fx.state_vectors) {
      for (std::size_t i = 0; i < d; ++i) {
        av[i] = dot(std::span<const double>(a).subspan(i * d, d), v);
      }
      row.push_back(dot(av, v));
    }
    out.push_back(std::move(row));
  }
  return out;
}

EventFamily hilbert_events(const HilbertFixture& fx) {
  auto values = hilbert_values(fx);
  const StateSpacePtr space = fx.space ? fx.space : make_state_space(fx.state_vectors.size());
  std::vector<Event> events;
  for (auto& row : values) events.emplace_back(space, std::move(row));
  return EventFamily(std::move(events));
}

HilbertFixture random_hilbert_fixture(int dim, std::size_t num_projectors, std::size_t num_states,
                                      std::uint64_t seed) {
  if (dim < 1) throw Error("random_hilbert_fixture: dim must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> rank_pick(0, dim);
  const auto d = static_cast<std::size_t>(dim);

  const auto random_unit = [&] {
    std::vector<double> v(d);
    double norm = 0.0;
    do {
      for (auto& x : v) x = normal(rng);
      norm = std::sqrt(dot(v, v));
    } while (norm < 1e-6);
    for (auto& x : v) x /= norm;
    return v;
  };

  HilbertFixture fx;
  fx.dim = dim;
  for (std::size_t p = 0; p < num_projectors; ++p) {
    // Gram-Schmidt on random vectors gives an orthonormal basis of a random subspace.
    const int rank = rank_pick(rng);
    std::vector<std::vector<double>> basis;
    while (static_cast<int>(basis.size()) < rank) {
      auto v = random_unit();
      for (const auto& b : basis) {
        const double c = dot(v, b);
        for (std::size_t i = 0; i < d; ++i) v[i] -= c * b[i];
      }
      const double norm = std::sqrt(dot(v, v));
      if (norm < 1e-6) continue;
      for (auto& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
    std::vector<double> a(d * d, 0.0);
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) a[i * d + j] += b[i] * b[j];
      }
    }
    fx.projectors.push_back(std::move(a));
  }
  for (std::size_t s = 0; s < num_states; ++s) fx.state_vectors.push_back(random_unit());
  return fx;
}

ConcreteLogic gen_concrete_logic(const EventFamily& seed_events) { return gfe_closure(seed_events); }

ConcreteLogic random_concrete_logic(std::size_t num_states, std::size_t num_seeds, std::uint64_t seed) {
  if (num_states < 1 || num_states > 16) throw Error("random_concrete_logic: 1..16 states");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const StateSpacePtr space = make_state_space(num_states);
  std::set<std::vector<double>> seen;
  std::vector<Event> seeds;
  for (std::size_t attempt = 0; seeds.size() < num_seeds && attempt < 64 * (num_seeds + 1); ++attempt) {
    std::vector<double> v(num_states);
    for (auto& x : v) x = coin(rng) ? 1.0 : 0.0;
    if (!seen.insert(v).second) continue;
    seeds.emplace_back(space, std::move(v));
  }
  return gfe_closure(EventFamily(std::move(seeds)), space);
}

}  // namespace numevent
