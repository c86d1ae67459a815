#include "numevent/set_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "numevent/error.hpp"

namespace numevent {
namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxSetFunctionN) {
    throw Error("ground set size n=" + std::to_string(n) + " outside 1.." +
                std::to_string(kMaxSetFunctionN));
  }
}

}  // namespace

SubsetIndex::SubsetIndex(std::uint32_t bits, int n) : bits_(bits), n_(n) {
  check_n(n);
  if (bits == 0) throw Error("subset index must be non-empty");
  if (bits >> n) throw Error("subset index references an element beyond n=" + std::to_string(n));
}

SubsetIndex SubsetIndex::of(std::initializer_list<int> members, int n) {
  return of(std::span<const int>(members.begin(), members.size()), n);
}

SubsetIndex SubsetIndex::of(std::span<const int> members, int n) {
  check_n(n);
  std::uint32_t bits = 0;
  for (int m : members) {
    if (m < 1 || m > n) throw Error("subset member " + std::to_string(m) + " outside 1.." + std::to_string(n));
    bits |= std::uint32_t{1} << (m - 1);
  }
  return SubsetIndex(bits, n);
}

SubsetIndex SubsetIndex::full(int n) {
  check_n(n);
  return SubsetIndex(static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1), n);
}

int SubsetIndex::size() const noexcept { return std::popcount(bits_); }

bool SubsetIndex::contains(int member) const noexcept {
  return member >= 1 && member <= n_ && ((bits_ >> (member - 1)) & 1u);
}

std::vector<int> SubsetIndex::members() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

SubsetIndex SubsetIndex::operator|(const SubsetIndex& other) const {
  if (other.n_ != n_) throw Error("subset indices over different ground sets");
  return SubsetIndex(bits_ | other.bits_, n_);
}

std::string SubsetIndex::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

std::string SubsetIndex::compact() const {
  std::string s;
  for (int m : members()) {
    if (!s.empty() && n_ >= 10) s += '.';
    s += std::to_string(m);
  }
  return s;
}

SetFunction::SetFunction(int n) : n_(n) {
  check_n(n);
  dense_.assign(std::size_t{1} << n, 0.0);
}

SetFunction::SetFunction(int n, std::span<const double> values) : SetFunction(n) {
  if (values.size() != size()) {
    throw Error("set function on n=" + std::to_string(n) + " needs " + std::to_string(size()) +
                " values, got " + std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), dense_.begin() + 1);
}

SetFunction SetFunction::from_dense(int n, std::vector<double> dense) {
  SetFunction f(n);
  if (dense.size() != f.dense_.size()) throw Error("dense set function has the wrong length");
  dense[0] = 0.0;
  f.dense_ = std::move(dense);
  return f;
}

double SetFunction::at(std::uint32_t bits) const {
  if (bits == 0 || bits >= dense_.size()) throw Error("subset bitmask out of range");
  return dense_[bits];
}

void SetFunction::set(std::uint32_t bits, double v) {
  if (bits == 0 || bits >= dense_.size()) throw Error("subset bitmask out of range");
  dense_[bits] = v;
}

bool SetFunction::is_zero() const {
  return std::all_of(dense_.begin(), dense_.end(), [](double v) { return v == 0.0; });
}

bool SetFunction::is_integral(double tol) const {
  return std::all_of(dense_.begin(), dense_.end(),
                     [tol](double v) { return std::abs(v - std::round(v)) <= tol; });
}

double max_abs_diff(const SetFunction& a, const SetFunction& b) {
  if (a.n() != b.n()) throw Error("set functions over different ground sets");
  double worst = 0.0;
  for (std::size_t m = 1; m < a.dense().size(); ++m) {
    worst = std::max(worst, std::abs(a.dense()[m] - b.dense()[m]));
  }
  return worst;
}

}  // namespace numevent
