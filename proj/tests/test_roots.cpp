#include <doctest.h>

#include <cmath>
#include <numbers>

#include "huffman/error.hpp"
#include "huffman/families.hpp"
#include "huffman/roots.hpp"
#include "huffman/spectral.hpp"
#include "oracle.hpp"

using namespace huffman;
using cd = std::complex<double>;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

bool near_one_of(double r, std::initializer_list<double> targets, double tol) {
  for (double t : targets)
    if (std::abs(r - t) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("z_zeros examples") {
  const auto lin = z_zeros(make_sequence(std::vector<double>{1, -3}));
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - cd(3, 0)) < 1e-14);

  const auto f11 = z_zeros(build_fib(11, Scale(1)));
  CHECK(f11.size() == 10);
  for (const auto& z : f11) CHECK(near_one_of(std::abs(z), {kPhi, 1 / kPhi}, 1e-6));

  const auto t5 = z_zeros(build_three(5));
  CHECK(t5.size() == 4);
  for (const auto& z : t5) CHECK(near_one_of(std::abs(z), {3.0, 1.0 / 3.0}, 1e-6));

  try {
    z_zeros(make_sequence(std::vector<double>{1, 0, 0}));
    FAIL("expected degenerate-polynomial");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_polynomial);
  }
  CHECK_THROWS_AS(z_zeros(make_sequence(std::vector<double>{0, 1, 2})), Error);
  CHECK_THROWS_AS(z_zeros(make_sequence(std::vector<double>{4})), Error);
}

TEST_CASE("roots satisfy the polynomial (oracle evaluation)") {
  oracle::Gen gen(12);
  for (int t = 0; t < 40; ++t) {
    const long n = gen.integer(2, 30);
    std::vector<double> c;
    for (long k = 0; k < n; ++k) c.push_back(gen.real(-4, 4));
    const auto roots = z_zeros(make_sequence(c));
    CHECK(static_cast<long>(roots.size()) == n - 1);
    for (const auto& z : roots) {
      double scale = 0.0;
      for (long k = 0; k < n; ++k) scale += std::abs(c[k]) * std::pow(std::abs(z), static_cast<double>(n - 1 - k));
      CHECK(std::abs(oracle::horner(c, z)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("roots of a product of known factors") {
  // (z - 2)(z + 0.5)(z^2 + 1)
  Eigen::VectorXd c(5);
  c << 1, -1.5, 0, -1.5, -1;
  const Eigen::VectorXcd r = polynomial_roots(c);
  for (cd want : {cd(2, 0), cd(-0.5, 0), cd(0, 1), cd(0, -1)}) {
    double best = 1e9;
    for (Eigen::Index i = 0; i < r.size(); ++i) best = std::min(best, std::abs(r(i) - want));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("circle_fit") {
  const auto rep = circle_fit(z_zeros(build_fib(11, Scale(1))));
  REQUIRE(rep.radii_clusters.size() == 2);
  CHECK(rep.radii_clusters[0].radius == doctest::Approx(0.618034).epsilon(1e-6));
  CHECK(rep.radii_clusters[1].radius == doctest::Approx(1.618034).epsilon(1e-6));
  CHECK(rep.equi_angular);
  CHECK(rep.reciprocal_pair);

  std::vector<cd> unit{cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  const auto u = circle_fit(unit);
  REQUIRE(u.radii_clusters.size() == 1);
  CHECK(u.radii_clusters[0].radius == doctest::Approx(1.0));
  CHECK(u.radii_clusters[0].count == 4);
  REQUIRE(u.angle_gaps.size() == 1);
  for (double g : u.angle_gaps[0]) CHECK(g == doctest::Approx(std::numbers::pi / 2));
  CHECK(u.equi_angular);

  // Irregular spacing is flagged.
  std::vector<cd> skew{cd(1, 0), std::polar(1.0, 1.0), cd(-1, 0), std::polar(1.0, 4.0)};
  CHECK_FALSE(circle_fit(skew).equi_angular);
}

TEST_CASE("tangent zeros sit on reciprocal circles") {
  for (double s : {-5.0, -1.0, 1.0, 3.0}) {
    const auto rep = circle_fit(z_zeros(build_tangent(17, s)));
    REQUIRE(rep.radii_clusters.size() == 2);
    CHECK(rep.reciprocal_pair);
    CHECK(rep.equi_angular);
  }
  // Radius moves with s.
  const auto a = circle_fit(z_zeros(build_tangent(13, 1.0)));
  const auto b = circle_fit(z_zeros(build_tangent(13, 3.0)));
  CHECK(std::abs(a.radii_clusters[1].radius - b.radii_clusters[1].radius) > 0.1);
}

TEST_CASE("property: build_fib zeros lie on two reciprocal circles") {
  oracle::Gen gen(14);
  for (int t = 0; t < 25; ++t) {
    const int n = gen.fib_length(7);
    double s = gen.real(0.3, 3);
    if (gen.integer(0, 1)) s = -s;
    const auto rep = circle_fit(z_zeros(build_fib(n, Scale(s))));
    CHECK_MESSAGE(rep.radii_clusters.size() == 2, "N=", n, " s=", s);
    CHECK(rep.reciprocal_pair);
    CHECK(rep.equi_angular);
  }
}
