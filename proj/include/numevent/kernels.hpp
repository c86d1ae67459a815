#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version that
// the tests and the benchmark compare against; the library calls the
// *_parallel versions. Results are bitwise identical between the two: each
// output slot is written by exactly one iteration and per-slot arithmetic
// happens in the same order.

#include <cstddef>
#include <cstdint>
#include <span>

namespace numevent::kernels {

// Dense set-function arrays have length 2^n and are indexed by bitmask; slot 0
// is the empty set and must hold 0 for the non-empty-subset transforms.

/// a[I] <- sum over J subset of I of a[J]  (subset-sum / zeta transform).
void zeta_serial(std::span<double> a, int n);
void zeta_parallel(std::span<double> a, int n);

/// Inverse of zeta: a[I] <- sum over J subset of I of (-1)^|I\J| a[J].
void mobius_serial(std::span<double> a, int n);
void mobius_parallel(std::span<double> a, int n);

/// out[v*S + s] = sum_I coeffs[v*M + I] * table[I*S + s], skipping zero
/// coefficients. M = 2^n rows in the table, S = num_states.
void weighted_sums_serial(std::span<const double> coeffs, std::span<const double> table,
                          std::size_t num_states, std::span<double> out);
void weighted_sums_parallel(std::span<const double> coeffs, std::span<const double> table,
                            std::size_t num_states, std::span<double> out);

/// Expands 0/1 codes into dense Moebius-inverted valuations: for code c,
/// g(I) = bit (I-1) of c, and row r of out receives the Moebius transform of g.
/// out has codes.size() rows of 2^n entries.
void expand_01_codes_serial(std::span<const std::uint64_t> codes, int n, std::span<double> out);
void expand_01_codes_parallel(std::span<const std::uint64_t> codes, int n, std::span<double> out);

}  // namespace numevent::kernels
