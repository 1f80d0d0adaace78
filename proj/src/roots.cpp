#include "huffman/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "huffman/error.hpp"

namespace huffman {

namespace {

using cd = std::complex<double>;

// Diagonal similarity scaling (Parlett-Reinsch) in powers of two.
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double c = a.col(i).cwiseAbs().sum() - std::abs(a(i, i));
      const double r = a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      double cc = c;
      while (cc < g) {
        f *= radix;
        cc *= radix * radix;
      }
      g = r * radix;
      while (cc > g) {
        f /= radix;
        cc /= radix * radix;
      }
      if ((cc + r / f) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

// p(z) and p'(z) by Horner.
std::pair<cd, cd> horner(const Eigen::Ref<const Eigen::VectorXd>& c, cd z) {
  cd p(c(0), 0.0);
  cd dp(0.0, 0.0);
  for (Eigen::Index k = 1; k < c.size(); ++k) {
    dp = dp * z + p;
    p = p * z + c(k);
  }
  return {p, dp};
}

cd polish(const Eigen::Ref<const Eigen::VectorXd>& c, cd z) {
  double best = root_residual(c, z);
  for (int iter = 0; iter < 8 && best > 0.0; ++iter) {
    auto [p, dp] = horner(c, z);
    if (dp == cd(0.0, 0.0)) break;
    const cd next = z - p / dp;
    const double res = root_residual(c, next);
    if (!(res < best)) break;
    z = next;
    best = res;
  }
  return z;
}

}  // namespace

double root_residual(const Eigen::Ref<const Eigen::VectorXd>& c, cd z) {
  const double modulus = std::abs(z);
  double scale = 0.0;
  for (Eigen::Index k = 0; k < c.size(); ++k) scale = scale * modulus + std::abs(c(k));
  if (scale == 0.0) return 0.0;
  return std::abs(horner(c, z).first) / scale;
}

Eigen::VectorXcd polynomial_roots(const Eigen::Ref<const Eigen::VectorXd>& coeffs) {
  const Eigen::Index degree = coeffs.size() - 1;
  if (degree < 1 || coeffs(0) == 0.0) {
    throw Error(Errc::degenerate_polynomial, "need degree >= 1 and a nonzero leading coefficient");
  }
  if (degree == 1) {
    Eigen::VectorXcd one(1);
    one(0) = cd(-coeffs(1) / coeffs(0), 0.0);
    return one;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (Eigen::Index k = 0; k < degree; ++k) companion(0, k) = -coeffs(k + 1) / coeffs(0);
  companion.diagonal(-1).setOnes();
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(Errc::degenerate_polynomial, "eigenvalue iteration failed");
  Eigen::VectorXcd roots = solver.eigenvalues();
  for (Eigen::Index k = 0; k < roots.size(); ++k) roots(k) = polish(coeffs, roots(k));
  return roots;
}

std::vector<cd> z_zeros(const HuffmanSequence& seq) {
  if (seq.size() < 2) throw Error(Errc::degenerate_polynomial, "need N >= 2");
  if (seq.elements.front().is_zero() || seq.elements.back().is_zero()) {
    throw Error(Errc::degenerate_polynomial, "first and last elements must be nonzero");
  }
  const Eigen::VectorXcd r = polynomial_roots(seq.to_vector());
  return {r.data(), r.data() + r.size()};
}

namespace {

// Cyclic gaps of sorted arguments.
std::vector<double> cyclic_gaps(std::vector<double> angles) {
  std::sort(angles.begin(), angles.end());
  std::vector<double> gaps;
  if (angles.size() < 2) return gaps;
  for (std::size_t k = 0; k + 1 < angles.size(); ++k) gaps.push_back(angles[k + 1] - angles[k]);
  gaps.push_back(2.0 * std::numbers::pi - (angles.back() - angles.front()));
  return gaps;
}

double spread(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

ZeroReport circle_fit(std::span<const cd> roots, double radius_tol, double angle_tol) {
  ZeroReport report;
  report.roots.assign(roots.begin(), roots.end());
  if (roots.empty()) return report;

  std::vector<cd> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end(), [](cd a, cd b) { return std::abs(a) < std::abs(b); });

  std::vector<std::vector<cd>> clusters;
  double running_sum = 0.0;
  for (const cd& z : sorted) {
    const double r = std::abs(z);
    if (!clusters.empty()) {
      const double mean = running_sum / static_cast<double>(clusters.back().size());
      if (std::abs(r - mean) <= radius_tol * std::max(mean, 1e-300)) {
        clusters.back().push_back(z);
        running_sum += r;
        continue;
      }
    }
    clusters.push_back({z});
    running_sum = r;
  }

  // Each circle holds a subset of the N-1 equally spaced phases, so its gaps
  // are whole multiples of the union spacing rather than equal to each other.
  const double base = 2.0 * std::numbers::pi / static_cast<double>(roots.size());
  std::vector<double> all_angles;
  for (const auto& cluster : clusters) {
    double sum = 0.0;
    std::vector<double> angles;
    for (const cd& z : cluster) {
      sum += std::abs(z);
      angles.push_back(std::arg(z));
      all_angles.push_back(std::arg(z));
    }
    const double radius = sum / static_cast<double>(cluster.size());
    for (const cd& z : cluster) report.max_radius_dev = std::max(report.max_radius_dev, std::abs(std::abs(z) - radius));

    const std::vector<double> gaps = cyclic_gaps(angles);
    for (double g : gaps) {
      const double steps = std::max(1.0, std::round(g / base));
      report.max_angle_dev = std::max(report.max_angle_dev, std::abs(g - steps * base));
    }
    report.radii_clusters.push_back({radius, static_cast<int>(cluster.size())});
    report.angle_gaps.push_back(std::move(gaps));
  }
  report.union_angle_dev = spread(cyclic_gaps(all_angles));
  report.equi_angular = report.max_angle_dev <= angle_tol && report.union_angle_dev <= angle_tol;
  if (report.radii_clusters.size() == 2) {
    const double product = report.radii_clusters[0].radius * report.radii_clusters[1].radius;
    report.reciprocal_pair = std::abs(product - 1.0) <= radius_tol;
  }
  return report;
}

}  // namespace huffman
