#include "huffman/fibpoly.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "huffman/error.hpp"

namespace huffman {

namespace {

// Walks the three-term recursion forwards or backwards from (F_0, F_1)
// without the reflection rule.
template <typename Scalar>
Scalar walk_recursion(long n, const Scalar& s) {
  if (n >= 0) return fib_poly(n, s);
  Scalar lo(0);   // F_k
  Scalar hi(1);   // F_{k+1}
  for (long k = 0; k > n; --k) {
    Scalar below = hi - s * lo;  // F_{k-1} = F_{k+1} - s F_k
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

template <typename Scalar>
Scalar sign_power(long e) {
  return (e % 2 == 0) ? Scalar(1) : Scalar(-1);
}

template <typename Scalar>
std::pair<Scalar, Scalar> identity_sides(const IdentityCase& c, const Scalar& s) {
  auto F = [&s](long k) { return fib_poly(k, s); };
  switch (c.kind) {
    case IdentityKind::recursion:
      return {F(c.n + 2), Scalar(s * F(c.n + 1) + F(c.n))};
    case IdentityKind::catalan:
      return {Scalar(F(c.n - c.r) * F(c.n + c.r)),
              Scalar(F(c.n) * F(c.n) - sign_power<Scalar>(c.n - c.r) * F(c.r) * F(c.r))};
    case IdentityKind::johnson:
      return {Scalar(F(c.a) * F(c.b) - F(c.c) * F(c.d)),
              Scalar(sign_power<Scalar>(c.t) *
                     (F(c.a - c.t) * F(c.b - c.t) - F(c.c - c.t) * F(c.d - c.t)))};
    case IdentityKind::sum_squares: {
      Scalar sum(0);
      for (long i = 1; i <= c.n; ++i) {
        const Scalar f = F(i);
        sum += f * f;
      }
      return {sum, Scalar(F(c.n) * F(c.n + 1) / s)};
    }
    case IdentityKind::odd_index_sum: {
      Scalar sum(0);
      for (long i = 1; i <= c.n; ++i) sum += F(2 * i - 1);
      return {sum, Scalar(F(2 * c.n) / s)};
    }
    case IdentityKind::product:
      return {F(c.m + c.n + 1), Scalar(F(c.m + 1) * F(c.n + 1) + F(c.m) * F(c.n))};
    case IdentityKind::reflection:
      return {walk_recursion(-c.n, s), Scalar(sign_power<Scalar>(c.n + 1) * F(c.n))};
    case IdentityKind::binet_chebyshev:
      break;
  }
  throw Error(Errc::invalid_identity_case, "unhandled identity kind");
}

void validate(const IdentityCase& c) {
  switch (c.kind) {
    case IdentityKind::johnson:
      if (c.a + c.b != c.c + c.d) throw Error(Errc::invalid_identity_case, "johnson case needs a + b = c + d");
      break;
    case IdentityKind::sum_squares:
    case IdentityKind::odd_index_sum:
      if (c.n < 0) throw Error(Errc::invalid_identity_case, "summation bound must be non-negative");
      if (c.scale.value() == 0.0) throw Error(Errc::invalid_identity_case, "summation identity divides by s = 0");
      break;
    default:
      break;
  }
}

bool close(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= 1e-10 * scale;
}

}  // namespace

Numeric fib_poly(long n, const Scale& s) {
  if (s.is_exact()) return Numeric(fib_poly<Rational>(n, s.rational()));
  return Numeric(fib_poly<double>(n, s.value()));
}

std::vector<Numeric> fib_poly_prefix(long n_max, const Scale& s) {
  if (n_max < 0) throw Error(Errc::invalid_argument, "n_max must be non-negative");
  if (s.is_exact()) return to_numeric(fib_poly_prefix<Rational>(n_max, s.rational()));
  return to_numeric(fib_poly_prefix<double>(n_max, s.value()));
}

double binet_chebyshev(long n, double s) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const C theta = std::acos(C(0.0, s / 2.0));
  // i^{-n+1}, reduced modulo 4
  static const C kPowersOfI[] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
  const long k = ((1 - n) % 4 + 4) % 4;
  const C numerator = std::exp(-i * static_cast<double>(n) * theta) - std::exp(i * static_cast<double>(n) * theta);
  const C denominator = std::exp(-i * theta) - std::exp(i * theta);
  return (kPowersOfI[k] * numerator / denominator).real();
}

std::string_view to_string(IdentityKind kind) noexcept {
  switch (kind) {
    case IdentityKind::recursion: return "recursion";
    case IdentityKind::catalan: return "catalan";
    case IdentityKind::johnson: return "johnson";
    case IdentityKind::sum_squares: return "sum_squares";
    case IdentityKind::odd_index_sum: return "odd_index_sum";
    case IdentityKind::product: return "product";
    case IdentityKind::binet_chebyshev: return "binet_chebyshev";
    case IdentityKind::reflection: return "reflection";
  }
  return "unknown";
}

std::optional<IdentityKind> parse_identity_kind(std::string_view name) {
  for (IdentityKind kind : kAllIdentityKinds)
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

IdentityResult check_identity(const IdentityCase& c) {
  validate(c);
  if (c.kind == IdentityKind::binet_chebyshev) {
    const double lhs = fib_poly<double>(c.n, c.scale.value());
    const double rhs = binet_chebyshev(c.n, c.scale.value());
    return {close(lhs, rhs), Numeric(lhs), Numeric(rhs)};
  }
  if (c.scale.is_exact()) {
    auto [lhs, rhs] = identity_sides<Rational>(c, c.scale.rational());
    const bool holds = lhs == rhs;
    return {holds, Numeric(std::move(lhs)), Numeric(std::move(rhs))};
  }
  auto [lhs, rhs] = identity_sides<double>(c, c.scale.value());
  return {close(lhs, rhs), Numeric(lhs), Numeric(rhs)};
}

std::vector<IdentityCase> random_identity_cases(IdentityKind kind, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(kind) + 1)));
  std::uniform_int_distribution<long> index(-30, 30);
  std::uniform_int_distribution<long> bound(0, 30);
  std::uniform_int_distribution<long> numerator(-9, 9);
  std::uniform_int_distribution<long> nonzero_numerator(1, 9);
  std::uniform_int_distribution<long> denominator(1, 9);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> real_scale(-3.0, 3.0);
  std::uniform_int_distribution<long> binet_index(0, 20);

  std::vector<IdentityCase> cases;
  cases.reserve(count);
  while (cases.size() < count) {
    IdentityCase c;
    c.kind = kind;
    c.scale = Scale::ratio(numerator(rng), denominator(rng));
    switch (kind) {
      case IdentityKind::recursion:
      case IdentityKind::reflection:
        c.n = index(rng);
        break;
      case IdentityKind::catalan:
        c.n = index(rng);
        c.r = index(rng);
        break;
      case IdentityKind::johnson:
        c.a = index(rng);
        c.b = index(rng);
        c.c = index(rng);
        c.d = c.a + c.b - c.c;
        c.t = index(rng);
        if (c.d < -30 || c.d > 30) continue;
        break;
      case IdentityKind::sum_squares:
      case IdentityKind::odd_index_sum: {
        c.n = bound(rng);
        const long p = nonzero_numerator(rng) * (coin(rng) ? 1 : -1);
        c.scale = Scale::ratio(p, denominator(rng));
        break;
      }
      case IdentityKind::product:
        c.m = index(rng);
        c.n = index(rng);
        break;
      case IdentityKind::binet_chebyshev:
        c.n = binet_index(rng);
        c.scale = Scale(real_scale(rng));
        break;
    }
    cases.push_back(c);
  }
  return cases;
}

}  // namespace huffman
