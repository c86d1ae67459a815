#include "numevent/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "numevent/error.hpp"
#include "numevent/format.hpp"
#include "numevent/tolerance.hpp"

namespace numevent {
namespace {

struct Field {
  std::string text;
  int column;  // 1-based
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits one CSV line. Commas inside {...} or "..." do not separate fields.
std::vector<Field> split_line(const std::string& line, const std::string& source, int line_no) {
  std::vector<Field> fields;
  std::string current;
  int start = 1;
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == '{') {
      ++depth;
      current += c;
    } else if (c == '}') {
      if (depth == 0) throw ParseError(source, line_no, col, "unbalanced '}'");
      --depth;
      current += c;
    } else if (c == ',' && depth == 0) {
      fields.push_back({trim(current), start});
      current.clear();
      start = col + 1;
    } else {
      current += c;
    }
  }
  if (quoted) throw ParseError(source, line_no, static_cast<int>(line.size()), "unterminated quote");
  if (depth != 0) throw ParseError(source, line_no, static_cast<int>(line.size()), "unterminated '{'");
  fields.push_back({trim(current), start});
  return fields;
}

double parse_value(const Field& f, const std::string& source, int line_no) {
  double v = 0.0;
  const char* first = f.text.data();
  const char* last = first + f.text.size();
  if (!f.text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (f.text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(source, line_no, f.column, "expected a number, got '" + f.text + "'");
  }
  const double e = eps();
  if (!std::isfinite(v) || v < -e || v > 1.0 + e) {
    throw ParseError(source, line_no, f.column, "value " + f.text + " lies outside [0,1]");
  }
  return v;
}

std::vector<int> parse_subset(const Field& f, const std::string& source, int line_no) {
  const std::string& t = f.text;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
    throw ParseError(source, line_no, f.column, "expected a subset like {1,3}, got '" + t + "'");
  }
  std::vector<int> members;
  std::string_view body(t.data() + 1, t.size() - 2);
  int offset = 1;
  while (true) {
    const auto comma = body.find(',');
    const std::string item = trim(body.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || value < 1) {
      throw ParseError(source, line_no, f.column + offset,
                       "subset members must be positive integers, got '" + item + "'");
    }
    if (!members.empty() && value <= members.back()) {
      throw ParseError(source, line_no, f.column + offset,
                       "subset members must be listed in increasing order");
    }
    members.push_back(value);
    if (comma == std::string_view::npos) break;
    offset += static_cast<int>(comma) + 1;
    body.remove_prefix(comma + 1);
  }
  return members;
}

struct Row {
  std::string state;
  std::string key;
  double value;
  int line;
};

// Reads a long-form three-column CSV with the given header.
std::vector<Row> read_long_csv(std::istream& in, const std::string& source,
                               const std::vector<std::string>& header,
                               std::vector<std::vector<int>>* subsets) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto fields = split_line(line, source, line_no);
    if (!saw_header) {
      bool ok = fields.size() == header.size();
      for (std::size_t i = 0; ok && i < header.size(); ++i) ok = fields[i].text == header[i];
      if (!ok) {
        throw ParseError(source, line_no, 1,
                         "expected header '" + header[0] + "," + header[1] + "," + header[2] + "'");
      }
      saw_header = true;
      continue;
    }
    if (fields.size() != 3) {
      const int col = fields.size() > 3 ? fields[3].column : static_cast<int>(line.size()) + 1;
      throw ParseError(source, line_no, col,
                       "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].text.empty()) throw ParseError(source, line_no, fields[0].column, "empty state label");
    if (fields[1].text.empty()) {
      throw ParseError(source, line_no, fields[1].column, "empty " + header[1] + " field");
    }
    std::string key = fields[1].text;
    if (subsets) {
      // spacing inside the braces must not make a second subset
      subsets->push_back(parse_subset(fields[1], source, line_no));
      key = "{";
      for (int m : subsets->back()) key += (key.size() > 1 ? "," : "") + std::to_string(m);
      key += "}";
    }
    rows.push_back({fields[0].text, std::move(key), parse_value(fields[2], source, line_no), line_no});
  }
  if (!saw_header) throw ParseError(source, std::max(line_no, 1), 1, "missing header line");
  if (rows.empty()) throw ParseError(source, line_no + 1, 1, "no data rows");
  return rows;
}

// Pivots long rows into one value vector per key, checking completeness.
struct Pivot {
  std::vector<std::string> states;
  std::vector<std::string> keys;
  std::vector<std::vector<double>> values;  // [key][state]
};

Pivot pivot(const std::vector<Row>& rows, const std::string& source, const std::string& what) {
  Pivot p;
  std::map<std::string, std::size_t> state_pos, key_pos;
  std::map<std::string, int> key_line;
  for (const auto& r : rows) {
    if (state_pos.try_emplace(r.state, p.states.size()).second) p.states.push_back(r.state);
    if (key_pos.try_emplace(r.key, p.keys.size()).second) {
      p.keys.push_back(r.key);
      key_line[r.key] = r.line;
    }
  }
  std::vector<std::vector<std::optional<double>>> cells(p.keys.size(),
                                                        std::vector<std::optional<double>>(p.states.size()));
  for (const auto& r : rows) {
    auto& cell = cells[key_pos[r.key]][state_pos[r.state]];
    if (cell) {
      throw ParseError(source, r.line, 1,
                       "duplicate row for state '" + r.state + "' and " + what + " '" + r.key + "'");
    }
    cell = r.value;
  }
  for (std::size_t k = 0; k < p.keys.size(); ++k) {
    std::vector<double> v;
    for (std::size_t s = 0; s < p.states.size(); ++s) {
      if (!cells[k][s]) {
        throw ParseError(source, key_line[p.keys[k]], 1,
                         what + " '" + p.keys[k] + "' has no value for state '" + p.states[s] + "'");
      }
      v.push_back(*cells[k][s]);
    }
    p.values.push_back(std::move(v));
  }
  return p;
}

std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Quotes a label when the reader would otherwise split or trim it.
std::string csv_field(const std::string& text) {
  const bool plain = !text.empty() && text.find_first_of(",\"{}") == std::string::npos &&
                     trim(text) == text;
  if (plain) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_exact(double value) {
  if (value == 0.0) value = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

EventFamily read_events_csv(std::istream& in, const std::string& source) {
  const auto rows = read_long_csv(in, source, {"state", "event", "value"}, nullptr);
  const Pivot p = pivot(rows, source, "event");
  const StateSpacePtr space = make_state_space(p.states);
  std::vector<Event> events;
  for (const auto& v : p.values) events.emplace_back(space, v);
  return EventFamily(std::move(events), p.keys);
}

void write_events_csv(std::ostream& out, const EventFamily& family) {
  out << "state,event,value\n";
  if (family.empty()) return;
  const auto& space = *family.space();
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      out << csv_field(space.label(s)) << ',' << csv_field(family.name(i)) << ','
          << format_exact(family[i][s]) << '\n';
    }
  }
}

CorrelationTable read_correlation_csv(std::istream& in, const std::string& source) {
  std::vector<std::vector<int>> subsets;
  const auto rows = read_long_csv(in, source, {"state", "subset", "value"}, &subsets);
  int n = 0;
  for (const auto& s : subsets) n = std::max(n, s.back());
  std::map<std::string, std::vector<int>> members;
  for (std::size_t r = 0; r < rows.size(); ++r) members.emplace(rows[r].key, subsets[r]);

  const Pivot p = pivot(rows, source, "subset");
  const StateSpacePtr space = make_state_space(p.states);
  std::vector<std::pair<SubsetIndex, Event>> entries;
  for (std::size_t k = 0; k < p.keys.size(); ++k) {
    const auto& m = members.at(p.keys[k]);
    entries.emplace_back(SubsetIndex::of(std::span<const int>(m), n), Event(space, p.values[k]));
  }
  return CorrelationTable(n, std::move(entries));
}

void write_correlation_csv(std::ostream& out, const CorrelationTable& table) {
  out << "state,subset,value\n";
  const auto subsets = table.subsets();
  const auto& space = *table.space();
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (const auto& i : subsets) {
      out << csv_field(space.label(s)) << ',' << i.to_string() << ',' << format_exact(table.at(i)[s]) << '\n';
    }
  }
}

LogicInput read_logic_json(std::istream& in, const std::string& source) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(source, line, col, "malformed JSON");
  }
  const auto fail = [&](const std::string& what) { throw ParseError(source, 1, 1, what); };
  if (!doc.is_object()) fail("expected a JSON object");
  for (const char* key : {"states", "logic", "family"}) {
    if (!doc.contains(key) || !doc[key].is_array()) fail(std::string("missing array field '") + key + "'");
  }

  LogicInput out;
  std::vector<std::string> labels;
  for (const auto& s : doc["states"]) {
    if (!s.is_string()) fail("states must be strings");
    labels.push_back(s.get<std::string>());
  }
  if (labels.empty()) fail("states must not be empty");
  out.space = make_state_space(std::move(labels));

  std::size_t index = 0;
  for (const auto& row : doc["logic"]) {
    if (!row.is_array() || row.size() != out.space->size()) {
      fail("logic[" + std::to_string(index) + "] must list one value per state");
    }
    std::vector<double> v;
    for (const auto& x : row) {
      if (!x.is_number()) fail("logic[" + std::to_string(index) + "] holds a non-number");
      v.push_back(x.get<double>());
    }
    try {
      out.logic.emplace_back(out.space, std::move(v));
    } catch (const Error& e) {
      fail("logic[" + std::to_string(index) + "]: " + e.what());
    }
    ++index;
  }
  for (const auto& f : doc["family"]) {
    if (!f.is_number_unsigned() || f.get<std::size_t>() >= out.logic.size()) {
      fail("family entries must be 0-based indices into logic");
    }
    out.family.push_back(f.get<std::size_t>());
  }
  return out;
}

void write_logic_json(std::ostream& out, const std::vector<Event>& logic,
                      const std::vector<std::size_t>& family) {
  if (logic.empty()) throw Error("cannot export an empty logic");
  nlohmann::ordered_json doc;
  doc["states"] = logic.front().space()->labels();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : logic) {
    auto row = nlohmann::ordered_json::array();
    for (double v : e.values()) {
      if (v == 0.0 || v == 1.0) {
        row.push_back(static_cast<int>(v));
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  doc["logic"] = std::move(rows);
  doc["family"] = family;
  out << doc.dump() << '\n';
}

}  // namespace numevent
