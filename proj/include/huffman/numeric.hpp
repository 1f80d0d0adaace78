#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace huffman {

/// Arbitrary-precision rational; element values grow like s^M and overflow
/// 64-bit integers for lengths in the forties.
using Rational = mpq_class;

/// Round-to-nearest-even conversion (mpq_get_d truncates).
double to_double(const Rational& q);
inline double to_double(double x) { return x; }

/// Parses "p", "-p" or "p/q" (q != 0), canonicalized.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

/// Scaling parameter of a sequence family. Exact iff built from an integer
/// or rational literal.
class Scale {
public:
  explicit Scale(double value);
  explicit Scale(Rational value);
  template <std::integral I>
  explicit Scale(I value) : Scale(Rational(static_cast<long>(value))) {}

  static Scale ratio(long p, long q);

  /// Tokens with '/' or without a decimal point/exponent parse as exact;
  /// "phi" gives the golden ratio as a float.
  static Scale parse(std::string_view token);

  bool is_exact() const noexcept { return exact_.has_value(); }
  double value() const noexcept { return value_; }
  const Rational& rational() const;  ///< precondition: is_exact()

  std::string to_string() const;

  friend bool operator==(const Scale& a, const Scale& b);

private:
  std::optional<Rational> exact_;
  double value_;
};

/// A computed magnitude: exact rational when every input was exact,
/// otherwise a double. approx() is always populated.
class Numeric {
public:
  Numeric() : exact_(Rational(0)), approx_(0.0) {}
  explicit Numeric(double value) : approx_(value) {}
  explicit Numeric(Rational value);
  template <std::integral I>
  explicit Numeric(I value) : Numeric(Rational(static_cast<long>(value))) {}

  static Numeric infinity();

  bool is_exact() const noexcept { return exact_.has_value(); }
  bool is_infinite() const noexcept;
  bool is_zero() const;
  double approx() const noexcept { return approx_; }
  const Rational& exact() const;  ///< precondition: is_exact()

  /// "p/q" when exact, "inf" for the infinity marker, shortest decimal otherwise.
  std::string to_string() const;

  Numeric operator-() const;
  Numeric& operator+=(const Numeric& rhs);
  Numeric& operator-=(const Numeric& rhs);
  Numeric& operator*=(const Numeric& rhs);
  Numeric& operator/=(const Numeric& rhs);

  friend Numeric operator+(Numeric a, const Numeric& b) { return a += b; }
  friend Numeric operator-(Numeric a, const Numeric& b) { return a -= b; }
  friend Numeric operator*(Numeric a, const Numeric& b) { return a *= b; }
  friend Numeric operator/(Numeric a, const Numeric& b) { return a /= b; }

  /// Exact comparison when both sides are exact, float comparison otherwise.
  friend bool operator==(const Numeric& a, const Numeric& b);
  friend bool operator<(const Numeric& a, const Numeric& b);

private:
  std::optional<Rational> exact_;
  double approx_;
};

Numeric abs(const Numeric& x);

/// Parses a serialized value with the same exactness rule as Scale::parse.
Numeric parse_numeric(std::string_view token);

/// All elements exact?
bool all_exact(const std::vector<Numeric>& values);

std::vector<Rational> exact_values(const std::vector<Numeric>& values);
std::vector<double> approx_values(const std::vector<Numeric>& values);

template <typename Scalar>
std::vector<Numeric> to_numeric(const std::vector<Scalar>& values) {
  std::vector<Numeric> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

/// Integer power by repeated squaring; negative exponents invert.
template <typename Scalar>
Scalar ipow(Scalar base, long exponent) {
  const bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  if (invert) return Scalar(1) / result;
  return result;
}

}  // namespace huffman
