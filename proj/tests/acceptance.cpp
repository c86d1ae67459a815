// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli_cases.hpp"
#include "numevent/bell.hpp"
#include "numevent/concrete_logic.hpp"
#include "numevent/embeddability.hpp"
#include "numevent/error.hpp"
#include "numevent/generators.hpp"
#include "numevent/io.hpp"
#include "numevent/set_function.hpp"
#include "numevent/tolerance.hpp"

using namespace numevent;
namespace fs = std::filesystem;

namespace {

const fs::path kData = NUMEVENT_TEST_DATA;
const fs::path kGolden = NUMEVENT_GOLDEN;

// A criterion body returns an empty string on success or a failure detail,
// and may append notes (timings, counts) to the summary.
struct Check {
  std::string failure;
  std::string summary;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

Check valuation_counts() {
  Check c;
  const std::uint64_t want[] = {0, 0, 7, 127, 32767};
  const double limit[] = {0, 0, 1.0, 1.0, 10.0};
  for (int n = 2; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const auto all = enumerate_01_valuations(n);
    const double dt = seconds_since(t0);
    if (all.size() != want[n] || count_01_valuations(n) != want[n]) {
      c.failure = "n=" + std::to_string(n) + " gave " + std::to_string(all.size());
      return c;
    }
    if (dt >= limit[n]) {
      c.failure = "n=" + std::to_string(n) + " took " + fmt(dt) + " s";
      return c;
    }
    c.summary += " n=" + std::to_string(n) + ":" + std::to_string(all.size()) + " in " + fmt(dt) + "s";
  }
  return c;
}

Check transform_inversion() {
  Check c;
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(1000 + n);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int t = 0; t < 1000; ++t) {
      SetFunction h(n);
      for (std::uint32_t b = 1; b < (1u << n); ++b) h.set(b, u(rng));
      worst = std::max(worst, max_abs_diff(g_transform(f_transform(h)), h));
      worst = std::max(worst, max_abs_diff(f_transform(g_transform(h)), h));
    }
  }
  if (worst > 1e-9) c.failure = "max error " + fmt(worst);
  c.summary = " 3000 functions, max error " + fmt(worst);
  return c;
}

Check closed_forms() {
  Check c;
  // bitmask order {1},{2},{1,2},{3},{1,3},{2,3},{1,2,3}
  const std::vector<double> want{1, 1, -1, 1, -1, -1, 1};
  if (sum_all_elementary(3).values() != want) c.failure = "sum of elementary valuations for n=3";
  for (int n = 2; n <= 6 && c.failure.empty(); ++n) {
    SetFunction one_minus_delta(n);
    for (std::uint32_t b = 1; b + 1 < (1u << n); ++b) one_minus_delta.set(b, 1);
    const SetFunction f = complement_of_full(n);
    if (!(f_transform(one_minus_delta) == f)) c.failure = "complement_of_full n=" + std::to_string(n);
    if (f[SubsetIndex::full(n)] != -1.0 - std::pow(-1.0, n)) c.failure = "value at N, n=" + std::to_string(n);
  }
  return c;
}

Check example_one() {
  Check c;
  SetFunction f(3);
  f.set(SubsetIndex::of({1}, 3), 1);
  f.set(SubsetIndex::of({2, 3}, 3), 1);
  f.set(SubsetIndex::of({1, 2}, 3), -1);
  f.set(SubsetIndex::of({1, 3}, 3), -1);
  const SetFunction g = g_transform(f);
  for (std::uint32_t b = 1; b < 8; ++b) {
    const double want = (b == 0b001 || b == 0b110) ? 1.0 : 0.0;
    if (g.at(b) != want) c.failure = "g at " + SubsetIndex(b, 3).to_string();
  }
  if (!is_bell_valuation(f)) c.failure = "not accepted as a Bell valuation";
  return c;
}

Check criterion_vs_oracle() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t instances = 0, positives = 0, negatives = 0;
  const auto compare = [&](const ConcreteLogic& logic, const EventFamily& fam) {
    const bool a = boolean_by_minima(logic, fam).boolean;
    const bool b = boolean_oracle(logic, fam).boolean;
    ++instances;
    (a ? positives : negatives)++;
    return a == b;
  };

  // mandatory negative: even-cardinality subsets of four states
  const auto s4 = make_state_space(4);
  std::vector<Event> even;
  for (std::uint32_t m = 0; m < 16; ++m) {
    if (std::popcount(m) % 2) continue;
    std::vector<double> v(4);
    for (int k = 0; k < 4; ++k) v[k] = (m >> k) & 1u;
    even.emplace_back(s4, v);
  }
  const ConcreteLogic even_logic(even);
  const EventFamily neg({Event(s4, {1, 1, 0, 0}), Event(s4, {1, 0, 1, 0})});
  if (boolean_by_minima(even_logic, neg).boolean || boolean_oracle(even_logic, neg).boolean) {
    c.failure = "even-cardinality pair reported Boolean";
    return c;
  }

  std::size_t logics = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto logic = random_concrete_logic(1 + seed % 5, 2 + seed % 3, seed);
    ++logics;
    const auto& m = logic.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!compare(logic, EventFamily({m[i], m[j]}))) {
          c.failure = "disagreement at seed " + std::to_string(seed);
          return c;
        }
        for (std::size_t k = j + 1; k < m.size(); ++k) {
          if (!compare(logic, EventFamily({m[i], m[j], m[k]}))) {
            c.failure = "disagreement at seed " + std::to_string(seed);
            return c;
          }
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 60) c.failure = "took " + fmt(dt) + " s";
  if (positives == 0 || negatives == 0) c.failure = "instances were all of one kind";
  c.summary = " " + std::to_string(logics) + " logics, " + std::to_string(instances) + " families (" +
              std::to_string(negatives) + " not Boolean) in " + fmt(dt) + "s";
  return c;
}

Check classical_soundness() {
  Check c;
  std::vector<std::vector<SetFunction>> all(4);
  for (int n = 2; n <= 3; ++n) all[n] = enumerate_01_valuations(n);
  std::size_t tables = 0, evaluations = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int k = 1 + static_cast<int>(seed % 6);
    const auto alg = gen_boolean_algebra(k, 1 + seed % 5, seed);
    for (int n = 2; n <= 4; ++n) {
      const auto table = alg.correlation_table(random_generators(k, n, seed * 7 + n));
      ++tables;
      auto results = check_bell_like(table);
      if (n <= 3) {
        auto more = evaluate_inequalities(all[n], table);
        results.insert(results.end(), more.begin(), more.end());
      }
      evaluations += results.size();
      for (const auto& r : results) {
        if (r.violated) {
          c.failure = "seed " + std::to_string(seed) + " n=" + std::to_string(n) + " violates " + r.label;
          return c;
        }
      }
    }
  }
  c.summary = " " + std::to_string(tables) + " tables, " + std::to_string(evaluations) + " inequalities";
  return c;
}

Check violation_detection() {
  Check c;
  const auto s = make_state_space(2);
  std::vector<std::pair<SubsetIndex, Event>> entries;
  for (std::uint32_t b = 1; b < 8; ++b) {
    const double v = std::popcount(b) == 1 ? 0.5 : 0.0;
    entries.emplace_back(SubsetIndex(b, 3), Event(s, {v, v}));
  }
  const CorrelationTable t(3, std::move(entries));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      const auto r = evaluate_inequality(pair_inequality(SubsetIndex::of({i}, 3), SubsetIndex::of({j}, 3)), t);
      if (r.violated || r.min_value != 1.0 || r.max_value != 1.0) c.failure = "pair row " + r.label;
    }
  }
  const auto all = evaluate_inequality(sum_all_elementary(3), t);
  if (!all.violated || all.max_value != 1.5) c.failure = "sum of elementary valuations gave " + fmt(all.max_value);
  clitest::InDir cd(kData);
  const auto r = clitest::run({"bell", "chsh3.csv", "--all-valuations"});
  if (r.code != 2) c.failure = "bell --all-valuations exit " + std::to_string(r.code);
  c.summary = " pairs at 1, sum-of-all at " + fmt(all.max_value) + ", CLI exit " + std::to_string(r.code);
  return c;
}

Check embeddability() {
  Check c;
  const auto s2 = make_state_space(2);
  for (double delta : {0.1, 0.3, 0.7}) {
    const auto rep = classify_embedding(EventFamily({Event(s2, {delta, 1 - delta}), Event(s2, {0.6, 0.4})}));
    if (rep.verdict != Verdict::kEmbeddable || !rep.container || rep.container->kind != Container::Kind::kMO ||
        rep.container->size != 2) {
      c.failure = "polarizer delta " + fmt(delta);
      return c;
    }
  }
  {
    clitest::InDir cd(kData);
    for (const char* file : {"polarizer.csv", "polarizer_deltas.csv"}) {
      const auto r = clitest::run({"classify", file});
      if (r.code != 0 || r.out.find("container: MO_2") == std::string::npos) c.failure = file;
    }
    const auto r = clitest::run({"classify", "comparable.csv"});
    if (r.code != 2 || r.out.find("verdict: NOT_EMBEDDABLE") == std::string::npos) c.failure = "comparable.csv";
  }
  const auto cmp = classify_embedding(EventFamily({Event(s2, {0.2, 0.6}), Event(s2, {0.3, 0.8})}));
  if (cmp.verdict != Verdict::kNotEmbeddable) c.failure = "comparable pair";

  std::mt19937_64 rng(8);
  int families = 0;
  for (int t = 0; t < 300 && c.failure.empty(); ++t) {
    const std::size_t states = 1 + rng() % 6;
    const auto s = make_state_space(states);
    const std::size_t n = 1 + rng() % 4;
    std::vector<Event> events;
    std::set<std::vector<double>> seen;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> v(states);
      for (auto& x : v) x = static_cast<double>(rng() % 2);
      if (seen.insert(v).second) events.emplace_back(s, v);
    }
    ++families;
    if (classify_embedding(EventFamily(events)).verdict != Verdict::kEmbeddable) {
      c.failure = "two-valued family " + std::to_string(t);
    }
  }
  c.summary = " 3 polarizer pairs, 2 fixture files, comparable pair, " + std::to_string(families) +
              " two-valued families";
  return c;
}

Check witness_validity() {
  Check c;
  std::size_t tables = 0, relations = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int k = 1 + static_cast<int>(seed % 6);
    const auto alg = gen_boolean_algebra(k, 1 + seed % 5, seed);
    for (int n = 2; n <= 4; ++n) {
      const auto t = alg.correlation_table(random_generators(k, n, seed * 13 + n));
      const auto w = witnesses_from_correlations(t);
      const std::size_t want = n == 2 ? 1 : n == 3 ? 4 : 16;
      if (w.witnesses.size() != want) {
        c.failure = "n=" + std::to_string(n) + " produced " + std::to_string(w.witnesses.size()) + " witnesses";
        return c;
      }
      ++tables;
      for (const auto& rel : w.relations) {
        ++relations;
        const Event& a = w.at(rel.witness);
        const Event& f = t.at(rel.f);
        const Event& g = t.at(rel.g);
        for (std::size_t s = 0; s < a.size(); ++s) {
          if (a[s] > f[s] + eps() || f[s] > a[s] + g[s] + eps() || a[s] + g[s] > 1 + eps() || a[s] < -eps()) {
            c.failure = "seed " + std::to_string(seed) + " witness " + rel.witness;
            return c;
          }
        }
      }
    }
  }
  c.summary = " " + std::to_string(tables) + " tables, " + std::to_string(relations) + " relations";
  return c;
}

Check determinism() {
  Check c;
  clitest::InDir cd(kData);
  std::size_t goldens = 0;
  for (const auto& gc : clitest::golden_cases()) {
    const auto a = clitest::run(gc.args);
    const auto b = clitest::run(gc.args);
    if (a.out != b.out || a.err != b.err || a.code != b.code) {
      c.failure = gc.name + " differs between runs";
      return c;
    }
    const fs::path path = kGolden / gc.name;
    if (!fs::exists(path) || clitest::read_file(path) != clitest::transcript(gc, a)) {
      c.failure = gc.name + " differs from its golden file";
      return c;
    }
    ++goldens;
  }
  for (const auto& rc : clitest::report_cases()) {
    auto json_args = rc.args;
    json_args.insert(json_args.begin(), {"--format", "json"});
    const std::string why = clitest::disagreement(clitest::run(rc.args), clitest::run(json_args));
    if (!why.empty()) {
      c.failure = rc.stem + ": " + why;
      return c;
    }
  }
  c.summary = " " + std::to_string(goldens) + " golden transcripts, " + std::to_string(clitest::report_cases().size()) +
              " text/json pairs";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"valuation counts", valuation_counts},
      {"transform inversion", transform_inversion},
      {"closed forms", closed_forms},
      {"worked n=3 valuation", example_one},
      {"minima criterion agrees with search oracle", criterion_vs_oracle},
      {"no violations on classical tables", classical_soundness},
      {"violation detection", violation_detection},
      {"embeddability fixtures", embeddability},
      {"witness chains", witness_validity},
      {"deterministic CLI output", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.failure = std::string("exception: ") + e.what();
    }
    const bool ok = c.failure.empty();
    failures += ok ? 0 : 1;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " " << criteria[i].first;
    if (ok) {
      if (!c.summary.empty()) std::cout << " -" << c.summary;
    } else {
      std::cout << " - " << c.failure;
    }
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
