#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "huffman/numeric.hpp"

namespace huffman {

/// Fibonacci polynomial F_n(s): F_0 = 0, F_1 = 1, F_{n+2} = s F_{n+1} + F_n.
/// Negative indices use F_{-j} = (-1)^{j+1} F_j.
template <typename Scalar>
Scalar fib_poly(long n, const Scalar& s) {
  if (n < 0) {
    const Scalar v = fib_poly(-n, s);
    return (-n) % 2 == 0 ? Scalar(-v) : v;
  }
  if (n == 0) return Scalar(0);
  Scalar prev(0);
  Scalar cur(1);
  for (long k = 1; k < n; ++k) {
    Scalar next = s * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// F_0(s) .. F_{n_max}(s) in one pass.
template <typename Scalar>
std::vector<Scalar> fib_poly_prefix(long n_max, const Scalar& s) {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.emplace_back(0);
  if (n_max >= 1) out.emplace_back(1);
  for (long k = 2; k <= n_max; ++k) out.push_back(Scalar(s * out[k - 1] + out[k - 2]));
  return out;
}

Numeric fib_poly(long n, const Scale& s);

/// Throws invalid-argument for n_max < 0.
std::vector<Numeric> fib_poly_prefix(long n_max, const Scale& s);

/// Binet form through Chebyshev polynomials of the second kind, evaluated in
/// complex double arithmetic on the principal branch of arccos(i s / 2).
double binet_chebyshev(long n, double s);

enum class IdentityKind {
  recursion,
  catalan,
  johnson,
  sum_squares,
  odd_index_sum,
  product,
  binet_chebyshev,
  reflection,
};

inline constexpr IdentityKind kAllIdentityKinds[] = {
    IdentityKind::recursion,   IdentityKind::catalan,       IdentityKind::johnson,
    IdentityKind::sum_squares, IdentityKind::odd_index_sum, IdentityKind::product,
    IdentityKind::binet_chebyshev, IdentityKind::reflection,
};

std::string_view to_string(IdentityKind kind) noexcept;
std::optional<IdentityKind> parse_identity_kind(std::string_view name);

/// One instance of a Fibonacci-polynomial identity. Index fields used per kind:
///   recursion      n           F_{n+2} = s F_{n+1} + F_n
///   catalan        n, r        F_{n-r} F_{n+r} = F_n^2 - (-1)^{n-r} F_r^2
///   johnson        a,b,c,d,t   F_a F_b - F_c F_d = (-1)^t (F_{a-t} F_{b-t} - F_{c-t} F_{d-t}),  a+b = c+d
///   sum_squares    n >= 0      sum_{i=1}^n F_i^2 = F_n F_{n+1} / s
///   odd_index_sum  n >= 0      sum_{i=1}^n F_{2i-1} = F_{2n} / s
///   product        m, n        F_{m+n+1} = F_{m+1} F_{n+1} + F_m F_n
///   binet_chebyshev n          recursion value against binet_chebyshev (float)
///   reflection     n           F_{-n} by the backward recursion = (-1)^{n+1} F_n
struct IdentityCase {
  IdentityKind kind = IdentityKind::recursion;
  long n = 0, r = 0, m = 0, a = 0, b = 0, c = 0, d = 0, t = 0;
  Scale scale = Scale(1);
};

struct IdentityResult {
  bool holds = false;
  Numeric lhs;
  Numeric rhs;
};

/// Exact comparison when both sides are exact; otherwise
/// |lhs - rhs| <= 1e-10 * max(1, |lhs|, |rhs|).
/// Throws invalid-identity-case for inconsistent indices.
IdentityResult check_identity(const IdentityCase& identity);

/// Randomized cases: indices in [-30, 30] (n in [0, 30] for the sums), exact
/// s = p/q with |p|, |q| <= 9 (p != 0 where the identity divides by s).
/// binet_chebyshev cases draw float s in [-3, 3] and n in [0, 20].
std::vector<IdentityCase> random_identity_cases(IdentityKind kind, std::size_t count, std::uint64_t seed);

}  // namespace huffman
