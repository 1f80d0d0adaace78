#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "huffman/families.hpp"
#include "huffman/numeric.hpp"

namespace huffman {

/// Complex DFT bins q = 0..L-1.
struct Spectrum {
  Eigen::VectorXcd bins;
  std::string source_label;

  Eigen::Index length() const noexcept { return bins.size(); }

  /// bin(L-q) == conj(bin(q)) for 1 <= q < L, within rel_tol * max|bin|.
  bool is_conjugate_symmetric(double rel_tol = 1e-9) const;
};

namespace detail {

inline Eigen::VectorXcd unit_roots(Eigen::Index length, double sign) {
  Eigen::VectorXcd w(length);
  for (Eigen::Index k = 0; k < length; ++k) {
    w(k) = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(length));
  }
  return w;
}

}  // namespace detail

/// g_q = sum_n f_n exp(-2 pi i n q / L), no normalization. Direct O(L^2)
/// sum; phases use (n q mod L) so large products do not lose accuracy.
template <typename Derived>
Eigen::VectorXcd dft(const Eigen::MatrixBase<Derived>& f) {
  const Eigen::Index len = f.size();
  const Eigen::VectorXcd w = detail::unit_roots(len, -1.0);
  Eigen::VectorXcd g = Eigen::VectorXcd::Zero(len);
  for (Eigen::Index q = 0; q < len; ++q) {
    std::complex<double> acc(0.0, 0.0);
    for (Eigen::Index n = 0; n < len; ++n) acc += std::complex<double>(f(n)) * w((n * q) % len);
    g(q) = acc;
  }
  return g;
}

/// f_n = L^{-1} sum_q g_q exp(2 pi i q n / L).
template <typename Derived>
Eigen::VectorXcd idft(const Eigen::MatrixBase<Derived>& g) {
  const Eigen::Index len = g.size();
  const Eigen::VectorXcd w = detail::unit_roots(len, 1.0);
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(len);
  for (Eigen::Index n = 0; n < len; ++n) {
    std::complex<double> acc(0.0, 0.0);
    for (Eigen::Index q = 0; q < len; ++q) acc += std::complex<double>(g(q)) * w((n * q) % len);
    f(n) = acc / static_cast<double>(len);
  }
  return f;
}

Spectrum dft(const HuffmanSequence& seq);
Eigen::VectorXcd idft(const Spectrum& spectrum);

/// [F_{M+2}(s) + F_M(s)]^2 + 4 sin^2(pi q / N) for the Fibonacci family.
double power_spectrum_closed(int length, const Scale& s, int q);

/// Closed-form DFT of build_fib_cyclic(N, s); bin 0 is F_{M+2}(s) + F_M(s).
std::complex<double> dft_closed_cyclic(int length, const Scale& s, int q);

/// Closed-form DFT of build_fib(N, s): dft_closed_cyclic times the phase
/// ramp of the (N-1)/2 rotation.
std::complex<double> dft_closed(int length, const Scale& s, int q);

/// A_0 - 2 cos(2 pi q / N): transform of the periodic auto-correlation.
double periodic_acorr_spectrum_closed(int length, const Scale& s, int q);

/// Tangent-phasor spectrum of length L = 4n+1:
///   -(2i tan(2 pi q/L) + s) / (2i tan(2 pi q/L) - s)
///     * [r^n - r^{-n} + 2i (-1)^q sin(pi q/L)],   r = (2+s)/(2-s).
/// Bin 0 is the real value r^n - r^{-n}.
std::complex<double> tangent_spectrum(int spectrum_length, double s, int q);
Spectrum tangent_spectrum(int spectrum_length, double s);

/// Partial sums (order 1..5) of the expansion of sqrt(S^2 + 4 sin^2(pi q/N))
/// in powers of 1/|S|, S = F_{M+2}(s) + F_M(s).
double magnitude_series_approx(int length, const Scale& s, int q, int order);

/// (max |F_q| - min |F_q|) / mean |F_q|.
double flatness(const Spectrum& spectrum);
double flatness(const HuffmanSequence& seq);

/// 2 / [F_{M+2}(s) + F_M(s)]^2. Throws bound-undefined at s = 0.
double flatness_bound(int length, const Scale& s);

inline constexpr double kZeroStripThreshold = 1e-6;

/// Spectrum -> canonical sequence: inverse transform, remove the
/// every-second-element class of redundant zeros, then pick the rotation with
/// a canonical aperiodic auto-correlation. If no such zero class exists the
/// inverse is used unstripped. The result is sign-normalized so the first
/// element is positive.
/// Throws synthesis-failure (non-real spectrum, or fewer than two
/// significant elements) and rotation-failure (no canonical rotation).
HuffmanSequence synthesize(const Spectrum& spectrum);

}  // namespace huffman
