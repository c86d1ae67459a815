#pragma once

#include <string>

namespace numevent {

/// Shortest stable decimal rendering used in every report (10 significant
/// digits, negative zero printed as 0).
std::string format_real(double value);

}  // namespace numevent
