#pragma once

// File formats shared by the CLI and the fixture exporters.
//
//   events CSV       header `state,event,value`, one row per (state, event)
//   correlation CSV  header `state,subset,value`, subset written `{1,3}`
//                    (sorted 1-based indices; commas inside braces do not
//                    split fields, the field may also be double-quoted)
//   logic JSON       {"states":[...], "logic":[[0,1,...],...], "family":[...]}
//                    where family holds 0-based indices into logic
//
// States and events are ordered by first appearance.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "numevent/bell.hpp"
#include "numevent/concrete_logic.hpp"
#include "numevent/event.hpp"

namespace numevent {

EventFamily read_events_csv(std::istream& in, const std::string& source = "<input>");
void write_events_csv(std::ostream& out, const EventFamily& family);

CorrelationTable read_correlation_csv(std::istream& in, const std::string& source = "<input>");
void write_correlation_csv(std::ostream& out, const CorrelationTable& table);

struct LogicInput {
  StateSpacePtr space;
  std::vector<Event> logic;
  std::vector<std::size_t> family;
};

LogicInput read_logic_json(std::istream& in, const std::string& source = "<input>");
void write_logic_json(std::ostream& out, const std::vector<Event>& logic,
                      const std::vector<std::size_t>& family);

/// Shortest decimal that reads back to the same double.
std::string format_exact(double value);

}  // namespace numevent
