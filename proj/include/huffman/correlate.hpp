#pragma once

#include <span>
#include <vector>

#include "huffman/families.hpp"
#include "huffman/numeric.hpp"

namespace huffman {

enum class CorrelationMode { aperiodic, periodic };

/// Aperiodic: shifts -(N-1)..(N-1), 2N-1 values. Periodic: shifts 0..N-1.
struct CorrelationProfile {
  CorrelationMode mode = CorrelationMode::aperiodic;
  int length = 0;  ///< N of the correlated sequence
  std::vector<Numeric> values;

  int min_shift() const noexcept { return mode == CorrelationMode::aperiodic ? -(length - 1) : 0; }
  int max_shift() const noexcept { return length - 1; }
  const Numeric& at(int shift) const;
  bool is_exact() const { return all_exact(values); }
};

struct CanonicalReport {
  bool is_canonical = false;
  Numeric peak;
  Numeric end_value;
  Numeric max_interior_abs;
  double tolerance_used = 0.0;
};

/// Ratios are Numeric::infinity() when every off-peak value is zero.
struct QualityMetrics {
  Numeric merit_factor;
  Numeric peak_ratio;
  double spectral_flatness = 0.0;
};

inline constexpr double kDefaultCanonicalTolerance = 1e-8;

/// value(d) = sum_i x_i x_{i+d} under zero padding, for d = -(N-1)..N-1.
template <typename Scalar>
std::vector<Scalar> aperiodic_autocorrelation(std::span<const Scalar> x) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  if (n == 0) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(2 * n - 1), Scalar(0));
  for (std::ptrdiff_t d = 0; d < n; ++d) {
    Scalar acc(0);
    for (std::ptrdiff_t i = 0; i + d < n; ++i) acc += x[i] * x[i + d];
    out[static_cast<std::size_t>(n - 1 + d)] = acc;
    out[static_cast<std::size_t>(n - 1 - d)] = acc;
  }
  return out;
}

/// value(d) = sum_i x_i x_{(i+d) mod N}, d = 0..N-1.
template <typename Scalar>
std::vector<Scalar> periodic_autocorrelation(std::span<const Scalar> x) {
  const std::size_t n = x.size();
  std::vector<Scalar> out(n, Scalar(0));
  for (std::size_t d = 0; d < n; ++d) {
    Scalar acc(0);
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[(i + d) % n];
    out[d] = acc;
  }
  return out;
}

/// Exact when every element is exact.
CorrelationProfile acorr_aperiodic(const HuffmanSequence& seq);
CorrelationProfile acorr_periodic(const HuffmanSequence& seq);

/// Products e_i e_{i+d} over the overlap window; they sum to the aperiodic
/// value at d. Throws out-of-range-shift for |d| >= N.
std::vector<Numeric> shifted_product(const HuffmanSequence& seq, int shift);

/// Canonical iff every shift 0 < |d| < N-1 has |value| <= rel_tol * |peak|
/// (literal zero for exact profiles when rel_tol == 0) and the two extreme
/// shifts agree. Periodic profiles throw wrong-mode.
CanonicalReport is_canonical(const CorrelationProfile& profile, double rel_tol);

/// 0 for exact profiles, kDefaultCanonicalTolerance otherwise.
double default_tolerance(const CorrelationProfile& profile);

/// 2 + s^2 F_{M+1}^2 + 4 F_M F_{M+2}, M = (N-3)/2.
Numeric peak_closed_form(int length, const Scale& s);

/// Merit factor, peak-to-off-peak ratio and spectral flatness.
/// Throws degenerate-input for N < 2 or an all-zero sequence.
QualityMetrics metrics(const HuffmanSequence& seq);

}  // namespace huffman
