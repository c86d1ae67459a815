#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace numevent {

/// Largest ground-set size N = {1..n} accepted by set functions.
inline constexpr int kMaxSetFunctionN = 24;

/// Non-empty subset I of N = {1..n} as a bitmask; bit i-1 stands for i.
class SubsetIndex {
 public:
  SubsetIndex(std::uint32_t bits, int n);
  /// 1-based members, e.g. of({1, 3}, 3) is {1,3}.
  static SubsetIndex of(std::initializer_list<int> members, int n);
  static SubsetIndex of(std::span<const int> members, int n);
  static SubsetIndex full(int n);

  std::uint32_t bits() const noexcept { return bits_; }
  int n() const noexcept { return n_; }
  int size() const noexcept;
  bool contains(int member) const noexcept;
  bool subset_of(const SubsetIndex& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<int> members() const;

  SubsetIndex operator|(const SubsetIndex& other) const;

  /// "{1,3}"
  std::string to_string() const;
  /// Digits run together ("13") for n < 10, dot-separated ("1.13") otherwise.
  std::string compact() const;

  bool operator==(const SubsetIndex&) const = default;

 private:
  std::uint32_t bits_;
  int n_;
};

/// Real-valued function on the non-empty subsets of N.
///
/// Stored densely by bitmask (2^n slots); slot 0 stands for the empty set and
/// always holds 0.
class SetFunction {
 public:
  explicit SetFunction(int n);
  /// values[bits - 1] is the value at the subset with that bitmask.
  SetFunction(int n, std::span<const double> values);
  static SetFunction from_dense(int n, std::vector<double> dense);

  int n() const noexcept { return n_; }
  /// Number of non-empty subsets, 2^n - 1.
  std::size_t size() const noexcept { return dense_.size() - 1; }

  double operator[](const SubsetIndex& i) const { return dense_[i.bits()]; }
  double at(std::uint32_t bits) const;
  void set(const SubsetIndex& i, double v) { dense_[i.bits()] = v; }
  void set(std::uint32_t bits, double v);

  /// 2^n slots including the empty-set slot.
  std::span<const double> dense() const noexcept { return dense_; }
  /// Values over non-empty subsets in bitmask order.
  std::vector<double> values() const { return {dense_.begin() + 1, dense_.end()}; }

  bool is_zero() const;
  bool is_integral(double tol) const;

  bool operator==(const SetFunction&) const = default;

 private:
  int n_;
  std::vector<double> dense_;
};

/// Largest absolute difference between two set functions on the same N.
double max_abs_diff(const SetFunction& a, const SetFunction& b);

}  // namespace numevent
