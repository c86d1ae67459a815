#pragma once

namespace numevent {

inline constexpr double kDefaultEps = 1e-9;

/// Global comparison tolerance used by every pointwise comparison.
double eps();

/// Sets the global tolerance. Throws numevent::Error unless value > 0.
void set_eps(double value);

/// Restores the previous tolerance on scope exit.
class ScopedEps {
 public:
  explicit ScopedEps(double value);
  ~ScopedEps();
  ScopedEps(const ScopedEps&) = delete;
  ScopedEps& operator=(const ScopedEps&) = delete;

 private:
  double saved_;
};

}  // namespace numevent
