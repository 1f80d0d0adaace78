#include "huffman/families.hpp"

#include <algorithm>
#include <cmath>

#include "huffman/error.hpp"
#include "huffman/fibpoly.hpp"
#include "huffman/spectral.hpp"

namespace huffman {

namespace {

void require_fib_length(int length) {
  if (length < 7 || length % 4 != 3) {
    throw Error(Errc::invalid_length, "Fibonacci family needs N = 4n+3 >= 7, got " + std::to_string(length));
  }
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::FibHuffman: return "fib";
    case Family::FibHuffmanCyclic: return "fib-cyclic";
    case Family::Tangent: return "tangent";
    case Family::Three: return "three";
    case Family::Integer: return "int";
    case Family::Fixture: return "fixture";
    case Family::Input: return "input";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::FibHuffman, Family::FibHuffmanCyclic, Family::Tangent, Family::Three,
                   Family::Integer, Family::Fixture, Family::Input}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Eigen::VectorXd HuffmanSequence::to_vector() const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) v(static_cast<Eigen::Index>(i)) = elements[i].approx();
  return v;
}

HuffmanSequence make_sequence(std::vector<Numeric> elements, std::string label) {
  HuffmanSequence seq;
  seq.family = Family::Input;
  seq.elements = std::move(elements);
  seq.label = std::move(label);
  return seq;
}

HuffmanSequence make_sequence(const std::vector<double>& elements, std::string label) {
  return make_sequence(to_numeric(elements), std::move(label));
}

template <typename Scalar>
std::vector<Scalar> fib_huffman_elements(int length, const Scalar& s) {
  require_fib_length(length);
  const long m = (length - 3) / 2;
  const std::vector<Scalar> fib = fib_poly_prefix(m + 1, s);
  const Scalar two_s = Scalar(2) * s;

  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(length));
  out.emplace_back(1);
  for (long i = 1; i <= m; ++i) out.push_back(Scalar(two_s * fib[i]));
  out.push_back(Scalar(s * fib[m + 1] - Scalar(2) * fib[m]));
  for (long i = m; i >= 1; --i) {
    // F_{-i} = (-1)^{i+1} F_i
    const Scalar v = two_s * fib[i];
    out.push_back(i % 2 == 0 ? Scalar(-v) : v);
  }
  out.emplace_back(-1);
  return out;
}

template <typename Scalar>
std::vector<Scalar> int_huffman_elements(int length, const Scalar& s) {
  if (length < 3) throw Error(Errc::invalid_length, "integer family needs N >= 3, got " + std::to_string(length));
  if (s == Scalar(0)) throw Error(Errc::degenerate_scale, "integer family needs s != 0");
  const Scalar factor = s * s - Scalar(1);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(length));
  out.push_back(s);
  Scalar power(1);
  for (int n = 0; n <= length - 3; ++n) {
    out.push_back(Scalar(factor * power));
    power *= s;
  }
  out.push_back(Scalar(-power));  // power == s^{N-2} here
  return out;
}

template std::vector<Rational> fib_huffman_elements(int, const Rational&);
template std::vector<double> fib_huffman_elements(int, const double&);
template std::vector<Rational> int_huffman_elements(int, const Rational&);
template std::vector<double> int_huffman_elements(int, const double&);

HuffmanSequence build_fib(int length, const Scale& s) {
  HuffmanSequence seq;
  seq.family = Family::FibHuffman;
  seq.scale = s;
  seq.elements = s.is_exact() ? to_numeric(fib_huffman_elements(length, s.rational()))
                              : to_numeric(fib_huffman_elements(length, s.value()));
  return seq;
}

HuffmanSequence build_fib_cyclic(int length, const Scale& s) {
  HuffmanSequence seq = rotate(build_fib(length, s), (length - 1) / 2);
  seq.family = Family::FibHuffmanCyclic;
  return seq;
}

HuffmanSequence build_int(int length, const Scale& s) {
  HuffmanSequence seq;
  seq.family = Family::Integer;
  seq.scale = s;
  seq.elements = s.is_exact() ? to_numeric(int_huffman_elements(length, s.rational()))
                              : to_numeric(int_huffman_elements(length, s.value()));
  return seq;
}

HuffmanSequence build_three(int length) {
  if (length < 5 || length % 2 == 0) {
    throw Error(Errc::invalid_length, "three family needs odd N >= 5, got " + std::to_string(length));
  }
  const long half = (length - 1) / 2;
  const Rational three(3);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(length));
  out.push_back(three);
  for (long j = 1; j < half; ++j) out.push_back(Rational(8 * ipow(three, j - 1)));
  out.push_back(Rational(ipow(three, (3 - length) / 2) - ipow(three, (length - 3) / 2)));
  for (long k = half - 1; k >= 1; --k) out.push_back(Rational(8 * ipow(three, -k - 1)));
  out.push_back(Rational(-1, 3));

  HuffmanSequence seq;
  seq.family = Family::Three;
  seq.elements = to_numeric(out);
  return seq;
}

HuffmanSequence build_tangent(int spectrum_length, double s) {
  HuffmanSequence seq = synthesize(tangent_spectrum(spectrum_length, s));
  seq.family = Family::Tangent;
  seq.scale = Scale(s);
  return seq;
}

std::vector<HuffmanSequence> fixtures() {
  std::vector<HuffmanSequence> out;

  auto exact = [](std::initializer_list<long> values, const char* label) {
    std::vector<Numeric> e;
    for (long v : values) e.emplace_back(v);
    HuffmanSequence seq = make_sequence(std::move(e), label);
    seq.family = Family::Fixture;
    return seq;
  };

  out.push_back(exact({1, 1, 3, 4, 2, 6, -7, -1, 2, 1, -1}, "H_non_11"));

  const double r = std::sqrt(10002.0);
  HuffmanSequence h9 = make_sequence(
      std::vector<double>{1.0, 200.0, 100.0 * (200.0 - 2.0 * r), 100.0 * (-2.0 - 400.0 * r), -4000000.0 * r,
                          100.0 * (-2.0 + 400.0 * r), 100.0 * (-200.0 - 2.0 * r), 200.0, -1.0},
      "H_non_9");
  h9.family = Family::Fixture;
  out.push_back(std::move(h9));

  out.push_back(exact({1, 4, 8, 14, 24, 20, -14, -20, 24, -14, 8, -4, 1}, "H_non_13"));
  return out;
}

std::optional<HuffmanSequence> fixture(std::string_view label) {
  for (auto& f : fixtures())
    if (f.label == label) return f;
  return std::nullopt;
}

HuffmanSequence rotate(const HuffmanSequence& seq, int steps) {
  HuffmanSequence out = seq;
  const int n = static_cast<int>(seq.size());
  if (n == 0) return out;
  const int k = ((steps % n) + n) % n;
  std::rotate(out.elements.begin(), out.elements.begin() + k, out.elements.end());
  out.rotation_offset = (seq.rotation_offset + k) % n;
  return out;
}

}  // namespace huffman
