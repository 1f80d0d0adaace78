#include "huffman/numeric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "huffman/error.hpp"

namespace huffman {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_float(std::string_view s) {
  return s.find_first_of(".eEnN") != std::string_view::npos;
}

double parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error, "not a number: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

double to_double(const Rational& q) {
  const int sign = sgn(q);
  if (sign == 0) return 0.0;
  const mpz_class num = abs(q.get_num());
  const mpz_class& den = q.get_den();

  // Scale so the integer quotient has exactly 53 significant bits.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 53;
  mpz_class quotient, remainder, n2, d2;
  const mpz_class lo = mpz_class(1) << 52;
  const mpz_class hi = mpz_class(1) << 53;
  for (;;) {
    if (e >= 0) {
      n2 = num;
      d2 = den << static_cast<mp_bitcnt_t>(e);
    } else {
      n2 = num << static_cast<mp_bitcnt_t>(-e);
      d2 = den;
    }
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    if (quotient >= hi) {
      ++e;
    } else if (quotient < lo) {
      --e;
    } else {
      break;
    }
  }
  const int cmp_half = cmp(remainder * 2, d2);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;
  const double magnitude = std::ldexp(quotient.get_d(), static_cast<int>(e));
  return sign < 0 ? -magnitude : magnitude;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Rational q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) {
    throw Error(Errc::parse_error, "not a rational: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw Error(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------- Scale

Scale::Scale(double value) : value_(value) {
  if (!std::isfinite(value)) throw Error(Errc::invalid_argument, "scale must be finite");
}

Scale::Scale(Rational value) : exact_(std::move(value)), value_(to_double(*exact_)) {}

Scale Scale::ratio(long p, long q) {
  if (q == 0) throw Error(Errc::invalid_argument, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scale(r);
}

Scale Scale::parse(std::string_view token) {
  const std::string_view s = trim(token);
  if (s == "phi") return Scale(std::numbers::phi);
  if (s.find('/') == std::string_view::npos && looks_like_float(s)) return Scale(parse_double(s));
  return Scale(parse_rational(s));
}

const Rational& Scale::rational() const {
  if (!exact_) throw Error(Errc::invalid_argument, "scale is not exact");
  return *exact_;
}

std::string Scale::to_string() const {
  return exact_ ? huffman::to_string(*exact_) : format_double(value_);
}

bool operator==(const Scale& a, const Scale& b) {
  if (a.is_exact() && b.is_exact()) return *a.exact_ == *b.exact_;
  return a.value_ == b.value_;
}

// ---------------------------------------------------------------- Numeric

Numeric::Numeric(Rational value) : exact_(std::move(value)), approx_(to_double(*exact_)) {}

Numeric Numeric::infinity() { return Numeric(std::numeric_limits<double>::infinity()); }

bool Numeric::is_infinite() const noexcept { return !exact_ && std::isinf(approx_); }

bool Numeric::is_zero() const { return exact_ ? sgn(*exact_) == 0 : approx_ == 0.0; }

const Rational& Numeric::exact() const {
  if (!exact_) throw Error(Errc::invalid_argument, "value is not exact");
  return *exact_;
}

std::string Numeric::to_string() const {
  return exact_ ? huffman::to_string(*exact_) : format_double(approx_);
}

Numeric Numeric::operator-() const {
  if (exact_) return Numeric(Rational(-*exact_));
  return Numeric(-approx_);
}

Numeric& Numeric::operator+=(const Numeric& rhs) {
  if (exact_ && rhs.exact_) {
    *exact_ += *rhs.exact_;
    approx_ = to_double(*exact_);
  } else {
    exact_.reset();
    approx_ += rhs.approx_;
  }
  return *this;
}

Numeric& Numeric::operator-=(const Numeric& rhs) {
  if (exact_ && rhs.exact_) {
    *exact_ -= *rhs.exact_;
    approx_ = to_double(*exact_);
  } else {
    exact_.reset();
    approx_ -= rhs.approx_;
  }
  return *this;
}

Numeric& Numeric::operator*=(const Numeric& rhs) {
  if (exact_ && rhs.exact_) {
    *exact_ *= *rhs.exact_;
    approx_ = to_double(*exact_);
  } else {
    exact_.reset();
    approx_ *= rhs.approx_;
  }
  return *this;
}

Numeric& Numeric::operator/=(const Numeric& rhs) {
  if (exact_ && rhs.exact_) {
    if (sgn(*rhs.exact_) == 0) throw Error(Errc::invalid_argument, "exact division by zero");
    *exact_ /= *rhs.exact_;
    approx_ = to_double(*exact_);
  } else {
    exact_.reset();
    approx_ /= rhs.approx_;
  }
  return *this;
}

bool operator==(const Numeric& a, const Numeric& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return a.approx_ == b.approx_;
}

bool operator<(const Numeric& a, const Numeric& b) {
  if (a.exact_ && b.exact_) return *a.exact_ < *b.exact_;
  return a.approx_ < b.approx_;
}

Numeric abs(const Numeric& x) { return x < Numeric(0) ? -x : x; }

Numeric parse_numeric(std::string_view token) {
  const std::string_view s = trim(token);
  if (s == "inf" || s == "+inf") return Numeric::infinity();
  if (s.find('/') == std::string_view::npos && looks_like_float(s)) return Numeric(parse_double(s));
  return Numeric(parse_rational(s));
}

bool all_exact(const std::vector<Numeric>& values) {
  for (const auto& v : values)
    if (!v.is_exact()) return false;
  return true;
}

std::vector<Rational> exact_values(const std::vector<Numeric>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.exact());
  return out;
}

std::vector<double> approx_values(const std::vector<Numeric>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.approx());
  return out;
}

}  // namespace huffman
