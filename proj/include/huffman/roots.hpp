#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "huffman/families.hpp"

namespace huffman {

struct RadiusCluster {
  double radius = 0.0;  ///< mean modulus
  int count = 0;
};

struct ZeroReport {
  std::vector<std::complex<double>> roots;
  std::vector<RadiusCluster> radii_clusters;  ///< ascending radius
  /// Per cluster: cyclic gaps between consecutive arguments.
  std::vector<std::vector<double>> angle_gaps;
  double max_radius_dev = 0.0;     ///< max | |z| - cluster radius |
  double max_angle_dev = 0.0;      ///< max distance of a cluster gap from a multiple of 2pi/(#roots)
  double union_angle_dev = 0.0;    ///< spread of the cyclic gaps of all roots
  bool equi_angular = false;       ///< both deviations within angle_tol
  bool reciprocal_pair = false;    ///< two clusters with radius product 1
};

/// Roots of p(z) = sum_k c_k z^{n-k} (c_0 leading) from the eigenvalues of
/// the balanced companion matrix, each refined by Newton steps.
Eigen::VectorXcd polynomial_roots(const Eigen::Ref<const Eigen::VectorXd>& coeffs);

/// |p(z)| / sum_k |c_k| |z|^{n-k}: backward-error style residual.
double root_residual(const Eigen::Ref<const Eigen::VectorXd>& coeffs, std::complex<double> z);

/// Zeros of sum_i e_{i+1} z^{N-1-i}. Requires N >= 2 and nonzero end
/// elements (degenerate-polynomial).
std::vector<std::complex<double>> z_zeros(const HuffmanSequence& seq);

/// Groups roots into circles by modulus (relative radius_tol) and measures
/// angular spacing within each circle.
ZeroReport circle_fit(std::span<const std::complex<double>> roots, double radius_tol = 1e-4,
                      double angle_tol = 1e-6);

}  // namespace huffman
