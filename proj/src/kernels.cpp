#include "numevent/kernels.hpp"

#include <cstdint>

#include "numevent/error.hpp"

namespace numevent::kernels {
namespace {

// Below this many elements the OpenMP fork costs more than the loop.
constexpr std::int64_t kParallelThreshold = 1 << 12;

void check_dense(std::span<const double> a, int n) {
  if (n < 0 || n > 30 || a.size() != (std::size_t{1} << n)) {
    throw Error("dense set function must have 2^n entries");
  }
}

}  // namespace

void zeta_serial(std::span<double> a, int n) {
  check_dense(a, n);
  const std::int64_t size = std::int64_t{1} << n;
  for (int b = 0; b < n; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
    for (std::int64_t m = 0; m < size; ++m) {
      if (m & bit) a[m] += a[m ^ bit];
    }
  }
}

void zeta_parallel(std::span<double> a, int n) {
  check_dense(a, n);
  const std::int64_t size = std::int64_t{1} << n;
  double* data = a.data();
  for (int b = 0; b < n; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
    // a[m ^ bit] has the bit clear, so it is never written in this layer.
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::int64_t m = 0; m < size; ++m) {
      if (m & bit) data[m] += data[m ^ bit];
    }
  }
}

void mobius_serial(std::span<double> a, int n) {
  check_dense(a, n);
  const std::int64_t size = std::int64_t{1} << n;
  for (int b = 0; b < n; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
    for (std::int64_t m = 0; m < size; ++m) {
      if (m & bit) a[m] -= a[m ^ bit];
    }
  }
}

void mobius_parallel(std::span<double> a, int n) {
  check_dense(a, n);
  const std::int64_t size = std::int64_t{1} << n;
  double* data = a.data();
  for (int b = 0; b < n; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::int64_t m = 0; m < size; ++m) {
      if (m & bit) data[m] -= data[m ^ bit];
    }
  }
}

namespace {

void check_weighted(std::span<const double> coeffs, std::span<const double> table,
                    std::size_t num_states, std::span<const double> out, std::size_t& rows,
                    std::size_t& terms) {
  if (num_states == 0 || table.size() % num_states != 0) throw Error("table shape mismatch");
  terms = table.size() / num_states;
  if (terms == 0 || coeffs.size() % terms != 0) throw Error("coefficient shape mismatch");
  rows = coeffs.size() / terms;
  if (out.size() != rows * num_states) throw Error("output shape mismatch");
}

inline void weighted_row(const double* coeff, const double* table, std::size_t terms,
                         std::size_t num_states, double* out) {
  for (std::size_t s = 0; s < num_states; ++s) out[s] = 0.0;
  for (std::size_t t = 0; t < terms; ++t) {
    const double c = coeff[t];
    if (c == 0.0) continue;
    const double* row = table + t * num_states;
    for (std::size_t s = 0; s < num_states; ++s) out[s] += c * row[s];
  }
}

}  // namespace

void weighted_sums_serial(std::span<const double> coeffs, std::span<const double> table,
                          std::size_t num_states, std::span<double> out) {
  std::size_t rows = 0, terms = 0;
  check_weighted(coeffs, table, num_states, out, rows, terms);
  for (std::size_t v = 0; v < rows; ++v) {
    weighted_row(coeffs.data() + v * terms, table.data(), terms, num_states,
                 out.data() + v * num_states);
  }
}

void weighted_sums_parallel(std::span<const double> coeffs, std::span<const double> table,
                            std::size_t num_states, std::span<double> out) {
  std::size_t rows = 0, terms = 0;
  check_weighted(coeffs, table, num_states, out, rows, terms);
  const auto count = static_cast<std::int64_t>(rows);
  const bool wide = count * static_cast<std::int64_t>(terms * num_states) >= kParallelThreshold;
  if (count > 1) {
#pragma omp parallel for schedule(static) if (wide)
    for (std::int64_t v = 0; v < count; ++v) {
      weighted_row(coeffs.data() + v * terms, table.data(), terms, num_states,
                   out.data() + v * num_states);
    }
    return;
  }
  // Single row: split over states instead.
  const auto states = static_cast<std::int64_t>(num_states);
  const double* c = coeffs.data();
  const double* tab = table.data();
  double* o = out.data();
#pragma omp parallel for schedule(static) if (wide)
  for (std::int64_t s = 0; s < states; ++s) {
    double acc = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
      if (c[t] == 0.0) continue;
      acc += c[t] * tab[t * num_states + s];
    }
    o[s] = acc;
  }
}

namespace {

inline void expand_code(std::uint64_t code, int n, double* row) {
  const std::size_t size = std::size_t{1} << n;
  row[0] = 0.0;
  for (std::size_t m = 1; m < size; ++m) row[m] = static_cast<double>((code >> (m - 1)) & 1u);
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t m = 0; m < size; ++m) {
      if (m & bit) row[m] -= row[m ^ bit];
    }
  }
}

void check_codes(std::span<const std::uint64_t> codes, int n, std::span<const double> out) {
  if (n < 1 || n > 6) throw Error("0/1 code expansion supports 1 <= n <= 6");
  if (out.size() != codes.size() * (std::size_t{1} << n)) throw Error("output shape mismatch");
}

}  // namespace

void expand_01_codes_serial(std::span<const std::uint64_t> codes, int n, std::span<double> out) {
  check_codes(codes, n, out);
  const std::size_t width = std::size_t{1} << n;
  for (std::size_t r = 0; r < codes.size(); ++r) expand_code(codes[r], n, out.data() + r * width);
}

void expand_01_codes_parallel(std::span<const std::uint64_t> codes, int n, std::span<double> out) {
  check_codes(codes, n, out);
  const std::size_t width = std::size_t{1} << n;
  const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(static) if (count * static_cast<std::int64_t>(width) >= kParallelThreshold)
  for (std::int64_t r = 0; r < count; ++r) expand_code(codes[r], n, out.data() + r * width);
}

}  // namespace numevent::kernels
