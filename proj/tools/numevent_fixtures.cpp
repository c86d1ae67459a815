// Writes the fixture files used by the CLI tests and the README examples.
//
//   numevent_fixtures <output-dir>

#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "numevent/bell.hpp"
#include "numevent/generators.hpp"
#include "numevent/io.hpp"

namespace fs = std::filesystem;
using namespace numevent;

namespace {

std::ofstream open(const fs::path& dir, const std::string& name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  return out;
}

EventFamily family(std::size_t states, std::initializer_list<std::vector<double>> rows) {
  const auto space = make_state_space(states);
  std::vector<Event> events;
  for (const auto& r : rows) events.emplace_back(space, r);
  return EventFamily(std::move(events));
}

void write_events(const fs::path& dir, const std::string& name, const EventFamily& f) {
  auto out = open(dir, name);
  write_events_csv(out, f);
}

std::vector<Event> even_logic() {
  const auto space = make_state_space(4);
  std::vector<Event> out;
  for (unsigned m = 0; m < 16; ++m) {
    if (std::popcount(m) % 2) continue;
    std::vector<double> v(4);
    for (unsigned k = 0; k < 4; ++k) v[k] = (m >> (3 - k)) & 1u;
    out.emplace_back(space, v);
  }
  return out;
}

std::size_t find(const std::vector<Event>& logic, std::vector<double> v) {
  const Event e(logic.front().space(), std::move(v));
  for (std::size_t i = 0; i < logic.size(); ++i) {
    if (approx_equal(logic[i], e)) return i;
  }
  throw std::runtime_error("member not found");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: numevent_fixtures <output-dir>\n";
    return 1;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  write_events(dir, "polarizer.csv", family(2, {{0.3, 0.7}, {0.6, 0.4}}));
  write_events(dir, "polarizer_deltas.csv", family(2, {{0.1, 0.9}, {0.3, 0.7}, {0.7, 0.3}}));
  write_events(dir, "comparable.csv", family(2, {{0.2, 0.6}, {0.3, 0.8}}));
  write_events(dir, "two_valued.csv", family(4, {{1, 1, 0, 0}, {1, 0, 1, 0}}));
  write_events(dir, "boolean8.csv", family(3, {{0.1, 0.6, 0.2}, {0.7, 0.7, 0.3}}));
  write_events(dir, "improper_difference.csv", family(3, {{0.2, 0.7, 0.1}, {0.6, 0.9, 0.3}}));
  write_events(dir, "undecided.csv", family(3, {{0.1, 0.6, 0.2}, {0.7, 0.7, 0.3}, {0.8, 0.1, 0.6}}));
  write_events(dir, "improper_member.csv", family(2, {{0.2, 0.4}, {0.3, 0.7}}));
  {
    auto out = open(dir, "garbage.csv");
    out << "state,event,value\ns1,p1,0.5\ns2,p1,not-a-number\n";
  }

  {
    const auto logic = even_logic();
    auto out = open(dir, "even_logic.json");
    write_logic_json(out, logic, {find(logic, {1, 1, 0, 0}), find(logic, {1, 0, 1, 0})});
    auto out2 = open(dir, "even_logic_complementary.json");
    write_logic_json(out2, logic, {find(logic, {1, 1, 0, 0}), find(logic, {0, 0, 1, 1})});
  }
  {
    const auto space = make_state_space(3);
    std::vector<Event> logic;
    for (unsigned m = 0; m < 8; ++m) {
      logic.emplace_back(space, std::vector<double>{double(m & 1u), double((m >> 1) & 1u), double((m >> 2) & 1u)});
    }
    auto out = open(dir, "powerset3.json");
    write_logic_json(out, logic, {3, 5, 6});
  }
  {
    const auto space = make_state_space(4);
    std::vector<Event> logic{Event::zero(space), Event::one(space), Event(space, {1, 0, 0, 0})};
    auto out = open(dir, "missing_complement.json");
    write_logic_json(out, logic, {2});
  }

  {
    // p_i = 0.5, every pair and the triple 0.
    const auto space = make_state_space(2);
    std::vector<std::pair<SubsetIndex, Event>> entries;
    for (std::uint32_t b = 1; b < 8; ++b) {
      const double v = std::popcount(b) == 1 ? 0.5 : 0.0;
      entries.emplace_back(SubsetIndex(b, 3), Event(space, {v, v}));
    }
    auto out = open(dir, "chsh3.csv");
    write_correlation_csv(out, CorrelationTable(3, std::move(entries)));
  }
  {
    const auto space = make_state_space(2);
    std::vector<std::pair<SubsetIndex, Event>> entries{
        {SubsetIndex::of({1}, 2), Event(space, {0.6, 0.2})},
        {SubsetIndex::of({2}, 2), Event(space, {0.5, 0.3})},
        {SubsetIndex::of({1, 2}, 2), Event(space, {0.4, 0.1})}};
    auto out = open(dir, "pair2.csv");
    write_correlation_csv(out, CorrelationTable(2, std::move(entries)));
  }
  {
    const auto algebra = gen_boolean_algebra(5, 3, 20240601);
    const std::array<std::uint32_t, 4> gens{0b00111, 0b01101, 0b11010, 0b10011};
    auto out = open(dir, "classical4.csv");
    write_correlation_csv(out, algebra.correlation_table(gens));
    const std::array<std::uint32_t, 3> gens3{0b00111, 0b01101, 0b11010};
    auto out3 = open(dir, "classical3.csv");
    write_correlation_csv(out3, algebra.correlation_table(gens3));
  }
  {
    const auto space = make_state_space(2);
    std::vector<std::pair<SubsetIndex, Event>> entries{
        {SubsetIndex::of({1}, 3), Event(space, {0.5, 0.5})},
        {SubsetIndex::of({2}, 3), Event(space, {0.5, 0.5})},
        {SubsetIndex::of({3}, 3), Event(space, {0.5, 0.5})},
        {SubsetIndex::of({1, 2}, 3), Event(space, {0.0, 0.0})}};
    auto out = open(dir, "incomplete3.csv");
    write_correlation_csv(out, CorrelationTable(3, std::move(entries)));
  }
  return 0;
}
