#include "numevent/error.hpp"

namespace numevent {

ParseError::ParseError(std::string source, int line, int column, const std::string& what)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

}  // namespace numevent
