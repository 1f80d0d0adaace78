#include "huffman/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "huffman/correlate.hpp"
#include "huffman/error.hpp"
#include "huffman/fibpoly.hpp"

namespace huffman {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void require_fib_length(int length) {
  if (length < 7 || length % 4 != 3) throw Error(Errc::invalid_length, "need N = 4n+3 >= 7");
}

void require_bin(int length, int q) {
  if (q < 0 || q >= length) throw Error(Errc::invalid_argument, "bin index out of range");
}

void require_tangent(int spectrum_length, double s) {
  if (spectrum_length < 5 || spectrum_length % 4 != 1) {
    throw Error(Errc::invalid_length, "tangent spectrum needs L = 4n+1 >= 5, got " + std::to_string(spectrum_length));
  }
  if (std::abs(s) == 2.0) throw Error(Errc::pole_singularity, "|s| = 2 is a pole of (2+s)/(2-s)");
}

// F_{M+2}(s) + F_M(s): the element sum of build_fib(N, s).
double element_sum(int length, const Scale& s) {
  const long m = (length - 3) / 2;
  return (fib_poly(m + 2, s) + fib_poly(m, s)).approx();
}

}  // namespace

bool Spectrum::is_conjugate_symmetric(double rel_tol) const {
  const Eigen::Index len = bins.size();
  if (len == 0) return true;
  const double scale = bins.cwiseAbs().maxCoeff();
  for (Eigen::Index q = 1; q < len; ++q) {
    if (std::abs(bins(len - q) - std::conj(bins(q))) > rel_tol * scale) return false;
  }
  return std::abs(bins(0).imag()) <= rel_tol * scale;
}

Spectrum dft(const HuffmanSequence& seq) {
  Spectrum out;
  out.bins = dft(seq.to_vector());
  out.source_label = seq.label.empty() ? std::string(to_string(seq.family)) : seq.label;
  return out;
}

Eigen::VectorXcd idft(const Spectrum& spectrum) { return idft(spectrum.bins); }

double power_spectrum_closed(int length, const Scale& s, int q) {
  require_fib_length(length);
  require_bin(length, q);
  const double sum = element_sum(length, s);
  const double sine = std::sin(kPi * q / length);
  return sum * sum + 4.0 * sine * sine;
}

cd dft_closed_cyclic(int length, const Scale& s, int q) {
  require_fib_length(length);
  require_bin(length, q);
  const double sum = element_sum(length, s);
  if (q == 0) return {sum, 0.0};
  const double sv = s.value();
  const cd i(0.0, 1.0);
  const double sin2 = std::sin(2.0 * kPi * q / length);
  const cd phasor = -(2.0 * i * sin2 + sv) / (2.0 * i * sin2 - sv);
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  return phasor * (sum + 2.0 * i * sign * std::sin(kPi * q / length));
}

cd dft_closed(int length, const Scale& s, int q) {
  const int middle = (length - 1) / 2;
  const long phase_index = (static_cast<long>(middle) * q) % length;
  return std::polar(1.0, -2.0 * kPi * static_cast<double>(phase_index) / length) * dft_closed_cyclic(length, s, q);
}

double periodic_acorr_spectrum_closed(int length, const Scale& s, int q) {
  require_bin(length, q);
  return peak_closed_form(length, s).approx() - 2.0 * std::cos(2.0 * kPi * q / length);
}

cd tangent_spectrum(int spectrum_length, double s, int q) {
  require_tangent(spectrum_length, s);
  require_bin(spectrum_length, q);
  const long n = (spectrum_length - 1) / 4;
  const double ratio = (2.0 + s) / (2.0 - s);
  const double head = ipow(ratio, n) - ipow(ratio, -n);
  if (q == 0) return {head, 0.0};
  const cd i(0.0, 1.0);
  const double tangent = std::tan(2.0 * kPi * q / spectrum_length);
  const cd phasor = -(2.0 * i * tangent + s) / (2.0 * i * tangent - s);
  const double sign = (q % 2 == 0) ? 1.0 : -1.0;
  return phasor * (head + 2.0 * i * sign * std::sin(kPi * q / spectrum_length));
}

Spectrum tangent_spectrum(int spectrum_length, double s) {
  require_tangent(spectrum_length, s);
  Spectrum out;
  out.bins.resize(spectrum_length);
  for (int q = 0; q < spectrum_length; ++q) out.bins(q) = tangent_spectrum(spectrum_length, s, q);
  out.source_label = "tangent";
  return out;
}

double magnitude_series_approx(int length, const Scale& s, int q, int order) {
  require_fib_length(length);
  require_bin(length, q);
  if (order < 1 || order > 5) throw Error(Errc::invalid_argument, "series order must be 1..5");
  const double sum = std::abs(element_sum(length, s));
  if (sum == 0.0) throw Error(Errc::series_undefined, "element sum is zero (s = 0)");
  const double sq = std::sin(kPi * q / length);
  const double cq = std::cos(2.0 * kPi * q / length);
  const double sq2 = sq * sq;
  const double terms[] = {
      sum,
      (1.0 - cq) / sum,
      -2.0 * sq2 * sq2 / std::pow(sum, 3),
      4.0 * sq2 * sq2 * sq2 / std::pow(sum, 5),
      -10.0 * sq2 * sq2 * sq2 * sq2 / std::pow(sum, 7),
  };
  double total = 0.0;
  for (int k = 0; k < order; ++k) total += terms[k];
  return total;
}

double flatness(const Spectrum& spectrum) {
  if (spectrum.length() == 0) throw Error(Errc::degenerate_input, "empty spectrum");
  const Eigen::VectorXd magnitude = spectrum.bins.cwiseAbs();
  const double mean = magnitude.mean();
  if (mean == 0.0) throw Error(Errc::degenerate_input, "all-zero spectrum");
  return (magnitude.maxCoeff() - magnitude.minCoeff()) / mean;
}

// |g_q|^2 = A_0 + R_q with R_q = sum_{d>0} A_d cos(2 pi q d / N), A_d the
// periodic autocorrelation taken exactly over the stored values (a double is
// an exact rational). The spread of |g| then comes from R alone, which keeps
// flatness values far below machine epsilon measurable.
double flatness(const HuffmanSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) throw Error(Errc::degenerate_input, "empty sequence");
  std::vector<Rational> x;
  x.reserve(seq.size());
  for (const auto& e : seq.elements) x.push_back(e.is_exact() ? e.exact() : Rational(e.approx()));
  const std::vector<Rational> a = periodic_autocorrelation<Rational>(x);
  const double a0 = to_double(a[0]);
  if (a0 == 0.0) throw Error(Errc::degenerate_input, "all-zero sequence");

  const Eigen::VectorXcd w = detail::unit_roots(n, 1.0);
  std::vector<double> lag(a.size());
  for (int d = 1; d < n; ++d) lag[d] = to_double(a[d]);
  double r_min = std::numeric_limits<double>::infinity();
  double r_max = -r_min;
  double magnitude_sum = 0.0;
  for (int q = 0; q < n; ++q) {
    double r = 0.0;
    for (int d = 1; d < n; ++d)
      if (lag[d] != 0.0) r += lag[d] * w((static_cast<long>(q) * d) % n).real();
    r_min = std::min(r_min, r);
    r_max = std::max(r_max, r);
    magnitude_sum += std::sqrt(std::max(0.0, a0 + r));
  }
  const double mean = magnitude_sum / n;
  if (mean == 0.0) throw Error(Errc::degenerate_input, "all-zero spectrum");
  const double top = std::sqrt(std::max(0.0, a0 + r_max));
  const double bottom = std::sqrt(std::max(0.0, a0 + r_min));
  if (top + bottom == 0.0) return 0.0;
  return (r_max - r_min) / (top + bottom) / mean;
}

double flatness_bound(int length, const Scale& s) {
  require_fib_length(length);
  const double sum = element_sum(length, s);
  if (sum == 0.0) throw Error(Errc::bound_undefined, "element sum is zero (s = 0)");
  return 2.0 / (sum * sum);
}

namespace {

struct RotationChoice {
  int steps = -1;
  double interior_ratio = std::numeric_limits<double>::infinity();
};

// True end elements can sit far below the strip threshold (|r|^n dynamic
// range), so ends are only required to clear round-off.
constexpr double kEndFloor = 1e-13;

// Best canonical rotation of `y`, or steps == -1 when none qualifies.
RotationChoice best_rotation(const std::vector<double>& y, double end_floor) {
  RotationChoice best;
  const int n = static_cast<int>(y.size());
  std::vector<double> z(y.size());
  for (int r = 0; r < n; ++r) {
    std::rotate_copy(y.begin(), y.begin() + r, y.end(), z.begin());
    if (std::abs(z.front()) <= end_floor || std::abs(z.back()) <= end_floor) continue;
    const std::vector<double> a = aperiodic_autocorrelation<double>(z);
    const double peak = a[n - 1];
    double interior = 0.0;
    for (int d = 1; d < n - 1; ++d) interior = std::max(interior, std::abs(a[n - 1 + d]));
    const double ratio = interior / peak;
    if (ratio <= kDefaultCanonicalTolerance && ratio < best.interior_ratio) best = {r, ratio};
  }
  return best;
}

}  // namespace

HuffmanSequence synthesize(const Spectrum& spectrum) {
  const int len = static_cast<int>(spectrum.length());
  if (len < 2) throw Error(Errc::synthesis_failure, "spectrum too short");
  if (!spectrum.is_conjugate_symmetric(1e-6)) {
    throw Error(Errc::synthesis_failure, "spectrum is not conjugate-symmetric; inverse is not real");
  }
  const Eigen::VectorXd x = idft(spectrum).real();
  const double largest = x.cwiseAbs().maxCoeff();
  const double significant = kZeroStripThreshold * largest;
  if ((x.array().abs() > significant).count() < 2) {
    throw Error(Errc::synthesis_failure, "inverse has fewer than two significant elements");
  }

  // Candidate zero classes: indices r+1, r+3, ... (cyclic) all negligible.
  struct ZeroClass {
    int start;
    double residual;
  };
  std::vector<ZeroClass> classes;
  const int kept = (len + 1) / 2;
  for (int r = 0; r < len; ++r) {
    double residual = 0.0;
    for (int k = 0; k < len / 2; ++k) residual = std::max(residual, std::abs(x((r + 1 + 2 * k) % len)));
    if (residual > significant) continue;
    int live = 0;
    for (int k = 0; k < kept; ++k) live += std::abs(x((r + 2 * k) % len)) > significant;
    if (live >= 2) classes.push_back({r, residual});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ZeroClass& a, const ZeroClass& b) { return a.residual < b.residual; });

  std::vector<std::vector<double>> candidates;
  for (const ZeroClass& c : classes) {
    std::vector<int> idx;
    for (int k = 0; k < kept; ++k) idx.push_back((c.start + 2 * k) % len);
    std::sort(idx.begin(), idx.end());
    std::vector<double> y;
    for (int i : idx) y.push_back(x(i));
    candidates.push_back(std::move(y));
  }
  if (candidates.empty()) candidates.emplace_back(x.data(), x.data() + x.size());

  for (const auto& y : candidates) {
    const RotationChoice choice = best_rotation(y, kEndFloor * largest);
    if (choice.steps < 0) continue;
    std::vector<double> z(y.size());
    std::rotate_copy(y.begin(), y.begin() + choice.steps, y.end(), z.begin());
    if (z.front() < 0.0)
      for (double& v : z) v = -v;
    HuffmanSequence seq = make_sequence(z, spectrum.source_label);
    seq.rotation_offset = choice.steps;
    return seq;
  }
  throw Error(Errc::rotation_failure, "no rotation of the stripped inverse is canonical");
}

}  // namespace huffman
