#include "huffman/correlate.hpp"

#include <algorithm>

#include "huffman/error.hpp"
#include "huffman/fibpoly.hpp"
#include "huffman/spectral.hpp"

namespace huffman {

const Numeric& CorrelationProfile::at(int shift) const {
  if (shift < min_shift() || shift > max_shift()) {
    throw Error(Errc::out_of_range_shift, "shift " + std::to_string(shift) + " outside profile");
  }
  return values[static_cast<std::size_t>(shift - min_shift())];
}

CorrelationProfile acorr_aperiodic(const HuffmanSequence& seq) {
  CorrelationProfile profile;
  profile.mode = CorrelationMode::aperiodic;
  profile.length = static_cast<int>(seq.size());
  if (seq.is_exact()) {
    const auto x = seq.exact_elements();
    profile.values = to_numeric(aperiodic_autocorrelation<Rational>(x));
  } else {
    const auto x = approx_values(seq.elements);
    profile.values = to_numeric(aperiodic_autocorrelation<double>(x));
  }
  return profile;
}

CorrelationProfile acorr_periodic(const HuffmanSequence& seq) {
  CorrelationProfile profile;
  profile.mode = CorrelationMode::periodic;
  profile.length = static_cast<int>(seq.size());
  if (seq.is_exact()) {
    const auto x = seq.exact_elements();
    profile.values = to_numeric(periodic_autocorrelation<Rational>(x));
  } else {
    const auto x = approx_values(seq.elements);
    profile.values = to_numeric(periodic_autocorrelation<double>(x));
  }
  return profile;
}

std::vector<Numeric> shifted_product(const HuffmanSequence& seq, int shift) {
  const int n = static_cast<int>(seq.size());
  if (shift <= -n || shift >= n) {
    throw Error(Errc::out_of_range_shift, "|d| must be < N for shift " + std::to_string(shift));
  }
  std::vector<Numeric> out;
  const int first = std::max(0, -shift);
  const int last = std::min(n, n - shift);
  out.reserve(static_cast<std::size_t>(last - first));
  for (int i = first; i < last; ++i) out.push_back(seq.elements[i] * seq.elements[i + shift]);
  return out;
}

double default_tolerance(const CorrelationProfile& profile) {
  return profile.is_exact() ? 0.0 : kDefaultCanonicalTolerance;
}

CanonicalReport is_canonical(const CorrelationProfile& profile, double rel_tol) {
  if (profile.mode != CorrelationMode::aperiodic) {
    throw Error(Errc::wrong_mode, "canonical check needs an aperiodic profile");
  }
  if (profile.length == 0) throw Error(Errc::degenerate_input, "empty profile");
  const int n = profile.length;

  CanonicalReport report;
  report.tolerance_used = rel_tol;
  report.peak = profile.at(0);
  report.end_value = profile.at(n - 1);
  report.max_interior_abs = Numeric(0);
  for (int d = 1; d < n - 1; ++d) {
    for (int shift : {d, -d}) {
      const Numeric v = abs(profile.at(shift));
      if (report.max_interior_abs < v) report.max_interior_abs = v;
    }
  }

  const bool exact = profile.is_exact() && rel_tol == 0.0;
  const double bound = rel_tol * std::abs(report.peak.approx());
  const bool interior_ok = exact ? report.max_interior_abs.is_zero()
                                 : report.max_interior_abs.approx() <= bound;
  const Numeric& left_end = profile.at(-(n - 1));
  const bool ends_ok = exact ? left_end == report.end_value
                             : std::abs(left_end.approx() - report.end_value.approx()) <= bound;
  report.is_canonical = interior_ok && ends_ok;
  return report;
}

Numeric peak_closed_form(int length, const Scale& s) {
  if (length < 7 || length % 4 != 3) {
    throw Error(Errc::invalid_length, "closed-form peak needs N = 4n+3 >= 7");
  }
  const long m = (length - 3) / 2;
  const Numeric sn = s.is_exact() ? Numeric(s.rational()) : Numeric(s.value());
  const Numeric f_m = fib_poly(m, s);
  const Numeric f_m1 = fib_poly(m + 1, s);
  const Numeric f_m2 = fib_poly(m + 2, s);
  return Numeric(2) + sn * sn * f_m1 * f_m1 + Numeric(4) * f_m * f_m2;
}

QualityMetrics metrics(const HuffmanSequence& seq) {
  if (seq.size() < 2) throw Error(Errc::degenerate_input, "metrics need N >= 2");
  if (std::all_of(seq.elements.begin(), seq.elements.end(), [](const Numeric& v) { return v.is_zero(); })) {
    throw Error(Errc::degenerate_input, "all-zero sequence");
  }
  const CorrelationProfile profile = acorr_aperiodic(seq);
  const Numeric& peak = profile.at(0);

  Numeric off_peak_energy(0);
  Numeric off_peak_max(0);
  for (int d = profile.min_shift(); d <= profile.max_shift(); ++d) {
    if (d == 0) continue;
    const Numeric& v = profile.at(d);
    off_peak_energy += v * v;
    const Numeric a = abs(v);
    if (off_peak_max < a) off_peak_max = a;
  }

  QualityMetrics out;
  out.merit_factor = off_peak_energy.is_zero() ? Numeric::infinity() : peak * peak / off_peak_energy;
  out.peak_ratio = off_peak_max.is_zero() ? Numeric::infinity() : peak / off_peak_max;
  out.spectral_flatness = flatness(seq);
  return out;
}

}  // namespace huffman
