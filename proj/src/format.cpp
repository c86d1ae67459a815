#include "numevent/format.hpp"

#include <cstdio>

namespace numevent {

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

}  // namespace numevent
