#include <doctest.h>

#include <cmath>
#include <numbers>

#include "huffman/correlate.hpp"
#include "huffman/error.hpp"
#include "huffman/families.hpp"
#include "huffman/spectral.hpp"
#include "oracle.hpp"

using namespace huffman;
using cd = std::complex<double>;

namespace {

double sin2(int q, int n) {
  const double v = std::sin(std::numbers::pi * q / n);
  return v * v;
}

template <typename E>
void expect_code(Errc code, E&& fn) {
  try {
    fn();
    FAIL("expected ", to_string(code));
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("dft / idft examples") {
  const auto d = dft(make_sequence(std::vector<double>{1, 0, 0}));
  for (int q = 0; q < 3; ++q) CHECK(std::abs(d.bins(q) - cd(1, 0)) < 1e-15);
  CHECK(std::abs(dft(build_fib(7, Scale(1))).bins(0) - cd(4, 0)) < 1e-12);
  Eigen::VectorXd x(4);
  x << 3, -1, 2, 5;
  const Eigen::VectorXcd back = idft(dft(x));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(back(i) - x(i)) < 1e-13);
}

TEST_CASE("dft agrees with the long-double oracle") {
  oracle::Gen gen(4);
  for (int t = 0; t < 30; ++t) {
    const long n = gen.integer(1, 64);
    std::vector<double> x;
    for (long k = 0; k < n; ++k) x.push_back(gen.real(-10, 10));
    const auto got = dft(make_sequence(x));
    const auto want = oracle::dft(x);
    double scale = 0.0;
    for (double v : x) scale += std::abs(v);
    for (long q = 0; q < n; ++q) CHECK(std::abs(got.bins(q) - want[q]) <= 1e-13 * scale);
    CHECK(got.is_conjugate_symmetric());
  }
}

TEST_CASE("power_spectrum_closed") {
  CHECK(power_spectrum_closed(7, Scale(1), 0) == doctest::Approx(16.0));
  CHECK(power_spectrum_closed(7, Scale(1), 1) == doctest::Approx(16 + 4 * sin2(1, 7)).epsilon(1e-14));
  CHECK(power_spectrum_closed(7, Scale(1), 1) == doctest::Approx(16.753).epsilon(1e-5));
  for (int q = 0; q < 11; ++q) CHECK(power_spectrum_closed(11, Scale(0), q) == doctest::Approx(4 * sin2(q, 11)));
  expect_code(Errc::invalid_length, [] { power_spectrum_closed(9, Scale(1), 0); });
}

TEST_CASE("dft_closed_cyclic") {
  CHECK(std::abs(dft_closed_cyclic(7, Scale(1), 0) - cd(4, 0)) < 1e-15);
  const auto want = oracle::dft({0, -2, 2, -1, 1, 2, 2});
  for (int q = 0; q < 7; ++q) CHECK(std::abs(dft_closed_cyclic(7, Scale(1), q) - want[q]) < 1e-12);
  oracle::Gen gen(6);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.fib_length(8);
    const double s = gen.real(-3, 3);
    const int q = static_cast<int>(gen.integer(0, n - 1));
    CHECK(oracle::rel_err(std::norm(dft_closed_cyclic(n, Scale(s), q)), power_spectrum_closed(n, Scale(s), q)) < 1e-12);
    const auto bins = oracle::dft(approx_values(build_fib(n, Scale(s)).elements));
    CHECK(std::abs(dft_closed(n, Scale(s), q) - bins[q]) <= 1e-10 * std::abs(bins[q]));
  }
}

TEST_CASE("periodic correlation spectrum") {
  for (int n : {7, 11, 19}) {
    const auto seq = build_fib(n, Scale(2));
    const auto per = oracle::dft(approx_values(acorr_periodic(seq).values));
    for (int q = 0; q < n; ++q) CHECK(oracle::rel_err(per[q].real(), periodic_acorr_spectrum_closed(n, Scale(2), q)) < 1e-12);
  }
}

TEST_CASE("tangent_spectrum") {
  CHECK(std::abs(tangent_spectrum(9, 1.0, 0) - cd(80.0 / 9.0, 0)) < 1e-12);
  // At s = 0 the phase prefactor is -1.
  for (int q = 1; q < 9; ++q) {
    const cd want(0.0, -2.0 * (q % 2 ? -1.0 : 1.0) * std::sin(std::numbers::pi * q / 9));
    CHECK(std::abs(tangent_spectrum(9, 0.0, q) - want) < 1e-12);
    CHECK(std::abs(tangent_spectrum(9, 0.0, q)) == doctest::Approx(2 * std::abs(std::sin(std::numbers::pi * q / 9))));
  }
  expect_code(Errc::pole_singularity, [] { tangent_spectrum(9, 2.0, 1); });
  expect_code(Errc::pole_singularity, [] { tangent_spectrum(9, -2.0); });
  expect_code(Errc::invalid_length, [] { tangent_spectrum(7, 1.0); });

  // One cyclic stride-2 class of the inverse vanishes.
  const Eigen::VectorXd x = idft(tangent_spectrum(9, 1.0)).real();
  int zero_classes = 0;
  for (int r = 0; r < 9; ++r) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(x((r + 1 + 2 * k) % 9)));
    zero_classes += worst < 1e-12 * x.cwiseAbs().maxCoeff();
  }
  CHECK(zero_classes >= 1);
}

TEST_CASE("magnitude_series_approx") {
  CHECK(magnitude_series_approx(7, Scale(1), 0, 1) == doctest::Approx(4.0));
  const double exact = std::sqrt(16 + 4 * sin2(1, 7));
  CHECK(std::abs(magnitude_series_approx(7, Scale(1), 1, 5) - exact) < 0.05);
  for (int q = 0; q < 15; ++q) CHECK(magnitude_series_approx(15, Scale(2), q, 1) == doctest::Approx(478.0));
  // Higher orders converge when |S_N| is large.
  double prev = 1e300;
  for (int order = 1; order <= 5; ++order) {
    const double err = std::abs(magnitude_series_approx(15, Scale(2), 3, order) - std::sqrt(power_spectrum_closed(15, Scale(2), 3)));
    CHECK(err <= prev);
    prev = err;
  }
  expect_code(Errc::series_undefined, [] { magnitude_series_approx(7, Scale(0), 1, 2); });
  CHECK_THROWS_AS(magnitude_series_approx(7, Scale(1), 1, 6), Error);
}

TEST_CASE("flatness and its bound") {
  CHECK(flatness(build_fib(15, Scale(2))) < 2.0 / (478.0 * 478.0));
  CHECK(flatness(build_fib(7, Scale(1))) < 0.125);
  CHECK(flatness_bound(7, Scale(1)) == doctest::Approx(0.125));
  CHECK(flatness(make_sequence(std::vector<double>{1, 0, 0, 0})) == 0.0);
  Spectrum flat{Eigen::VectorXcd::Constant(4, cd(2.5, 0)), "flat"};
  CHECK(flatness(flat) == 0.0);
  expect_code(Errc::bound_undefined, [] { flatness_bound(7, Scale(0)); });
  expect_code(Errc::degenerate_input, [] { flatness(make_sequence(std::vector<double>{0, 0})); });
}

TEST_CASE("synthesize") {
  const auto t = synthesize(tangent_spectrum(9, 1.0));
  REQUIRE(t.size() == 5);
  const auto three = approx_values(build_three(5).elements);
  const double ratio = t.elements[0].approx() / three[0];
  for (int i = 0; i < 5; ++i) CHECK(std::abs(t.elements[i].approx() / ratio - three[i]) < 1e-9 * std::abs(three[i]));

  // Round trip of the cyclic form: some rotation of build_fib(7, 1).
  const auto rt = synthesize(dft(build_fib_cyclic(7, Scale(1))));
  REQUIRE(rt.size() == 7);
  const auto ref = approx_values(build_fib(7, Scale(1)).elements);
  bool matched = false;
  for (int r = 0; r < 7 && !matched; ++r) {
    bool all = true;
    for (int i = 0; i < 7; ++i) all = all && std::abs(rt.elements[i].approx() - ref[(i + r) % 7]) < 1e-12;
    matched = all;
  }
  CHECK(matched);

  Spectrum constant{Eigen::VectorXcd::Constant(5, cd(3, 0)), "delta"};
  expect_code(Errc::synthesis_failure, [&] { synthesize(constant); });
}

TEST_CASE("property: tangent synthesis is canonical over the sweep grid") {
  for (int len = 5; len <= 45; len += 4) {
    for (int s = -10; s <= 10; ++s) {
      if (s == -2 || s == 0 || s == 2) continue;
      const auto seq = build_tangent(len, s);
      CHECK(static_cast<int>(seq.size()) == (len + 1) / 2);
      const auto a = oracle::acorr(approx_values(seq.elements));
      const std::size_t mid = a.size() / 2;
      double worst = 0.0;
      for (std::size_t d = 1; d + 1 < a.size(); ++d)
        if (d != mid) worst = std::max(worst, std::abs(a[d]));
      CHECK_MESSAGE(worst <= 1e-8 * a[mid], "L=", len, " s=", s);
    }
  }
}

TEST_CASE("flatness stays accurate below machine epsilon") {
  // Reference from |g_q|^2 = S^2 + 4 sin^2(pi q/N): the spread is
  // 4 (sin^2_max - sin^2_min) / (|g|_max + |g|_min), free of cancellation.
  for (int n : {15, 27, 43}) {
    for (double s : {-3.0, 0.5, 2.0, 3.0}) {
      const long m = (n - 3) / 2;
      const double sum = oracle::fib_double(m + 2, s) + oracle::fib_double(m, s);
      double lo = 1e300, hi = -1e300, mean = 0.0;
      for (int q = 0; q < n; ++q) {
        lo = std::min(lo, sin2(q, n));
        hi = std::max(hi, sin2(q, n));
        mean += std::sqrt(sum * sum + 4 * sin2(q, n)) / n;
      }
      const double spread = 4 * (hi - lo) / (std::sqrt(sum * sum + 4 * hi) + std::sqrt(sum * sum + 4 * lo));
      CHECK_MESSAGE(oracle::rel_err(flatness(build_fib(n, Scale(s))), spread / mean) < 1e-9, "N=", n, " s=", s);
    }
  }
}
