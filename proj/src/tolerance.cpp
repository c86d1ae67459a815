#include "numevent/tolerance.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "numevent/error.hpp"

namespace numevent {
namespace {

std::atomic<double> g_eps{kDefaultEps};

}  // namespace

double eps() { return g_eps.load(std::memory_order_relaxed); }

void set_eps(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error("tolerance must be a positive finite number, got " + std::to_string(value));
  }
  g_eps.store(value, std::memory_order_relaxed);
}

ScopedEps::ScopedEps(double value) : saved_(eps()) { set_eps(value); }

ScopedEps::~ScopedEps() { g_eps.store(saved_, std::memory_order_relaxed); }

}  // namespace numevent
