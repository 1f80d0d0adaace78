#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "huffman/numeric.hpp"

namespace huffman {

enum class Family {
  FibHuffman,        ///< Fibonacci-polynomial canonical sequence, length 4n+3
  FibHuffmanCyclic,  ///< same, rotated so the middle term comes first
  Tangent,           ///< synthesized from the tangent-phasor spectrum
  Three,             ///< powers-of-three family
  Integer,           ///< [s, (s^2-1)s^0, ..., (s^2-1)s^{N-3}, -s^{N-2}]
  Fixture,           ///< stored example arrays
  Input,             ///< user-supplied values
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view name);

/// A finite real sequence plus how it was built. Immutable once constructed.
struct HuffmanSequence {
  Family family = Family::Input;
  std::optional<Scale> scale;
  std::vector<Numeric> elements;
  int rotation_offset = 0;
  std::string label;

  std::size_t size() const noexcept { return elements.size(); }
  bool is_exact() const { return all_exact(elements); }
  std::vector<Rational> exact_elements() const { return exact_values(elements); }
  Eigen::VectorXd to_vector() const;
};

HuffmanSequence make_sequence(std::vector<Numeric> elements, std::string label = {});
HuffmanSequence make_sequence(const std::vector<double>& elements, std::string label = {});

/// Scalar-generic element kernels; the Scale-taking constructors below
/// dispatch to Rational or double.
template <typename Scalar>
std::vector<Scalar> fib_huffman_elements(int length, const Scalar& s);
template <typename Scalar>
std::vector<Scalar> int_huffman_elements(int length, const Scalar& s);

/// [1, 2sF_1, ..., 2sF_M, sF_{M+1} - 2F_M, 2sF_{-M}, ..., 2sF_{-1}, -1], M = (N-3)/2.
/// Requires N = 4n+3, N >= 7 (invalid-length).
HuffmanSequence build_fib(int length, const Scale& s);

/// build_fib rotated left so its middle element comes first.
HuffmanSequence build_fib_cyclic(int length, const Scale& s);

/// Requires N >= 3 (invalid-length) and s != 0 (degenerate-scale).
HuffmanSequence build_int(int length, const Scale& s);

/// [3, 8, 24, ..., x, ..., 8/27, 8/9, -1/3] with middle term
/// x = 3^{(3-N)/2} - 3^{(N-3)/2}. Odd N >= 5 only.
HuffmanSequence build_three(int length);

/// Inverse transform of the tangent-phasor spectrum of length L = 4n+1,
/// stripped of its redundant zeros and rotated to canonical form.
/// Result length (L+1)/2. Float only; |s| = 2 is a pole.
HuffmanSequence build_tangent(int spectrum_length, double s);

/// H_non_11, H_non_9 (float), H_non_13.
std::vector<HuffmanSequence> fixtures();
std::optional<HuffmanSequence> fixture(std::string_view label);

/// Left rotation by `steps` (negative rotates right).
HuffmanSequence rotate(const HuffmanSequence& seq, int steps);

}  // namespace huffman
