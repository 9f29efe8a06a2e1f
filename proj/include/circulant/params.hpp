#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace circulant {

/// Signed 64-bit arithmetic throughout. Supported graphs have n <= 2^31, so
/// the largest intermediate quantity, (s + 1) * n, stays below 2^62.
using Int = std::int64_t;

inline constexpr Int kMaxVertices = Int{1} << 31;

namespace detail {

constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

enum class Param { n, s };

/// Raised by validate_params when n or s falls outside the supported range.
class ParamOutOfRange : public std::out_of_range {
 public:
  ParamOutOfRange(Param which, Int value, const std::string& why)
      : std::out_of_range(why), which_(which), value_(value) {}

  Param which() const noexcept { return which_; }
  Int value() const noexcept { return value_; }

 private:
  Param which_;
  Int value_;
};

class VertexOutOfRange : public std::out_of_range {
 public:
  VertexOutOfRange(Int vertex, Int n)
      : std::out_of_range("vertex " + std::to_string(vertex) +
                          " is outside [0, " + std::to_string(n) + ")"),
        vertex_(vertex) {}

  Int vertex() const noexcept { return vertex_; }

 private:
  Int vertex_;
};

class CirculantParams;
CirculantParams validate_params(Int n, Int s);

/// The pair (n, s) of the 4-regular circulant C_n(1, s). Only obtainable
/// through validate_params, so every instance satisfies
/// n >= 5 and 2 <= s <= floor((n - 1) / 2).
class CirculantParams {
 public:
  Int n() const noexcept { return n_; }
  Int s() const noexcept { return s_; }

  void check_vertex(Int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRange(v, n_);
  }

  friend bool operator==(const CirculantParams&,
                         const CirculantParams&) = default;

 private:
  constexpr CirculantParams(Int n, Int s) : n_(n), s_(s) {}
  friend CirculantParams validate_params(Int n, Int s);

  Int n_;
  Int s_;
};

inline CirculantParams validate_params(Int n, Int s) {
  if (n < 5 || n > kMaxVertices) {
    throw ParamOutOfRange(Param::n, n,
                          "n = " + std::to_string(n) + " must lie in [5, 2^31]");
  }
  const Int s_max = (n - 1) / 2;
  if (s < 2 || s > s_max) {
    throw ParamOutOfRange(Param::s, s,
                          "s = " + std::to_string(s) + " must lie in [2, " +
                              std::to_string(s_max) + "] for n = " +
                              std::to_string(n));
  }
  return CirculantParams(n, s);
}

/// Auxiliary quantities of the lambda <= gamma closed form. Only meaningful
/// when gamma > 0 and 0 < b < gamma.
struct LambdaGammaTerms {
  Int p0 = 0;
  Int p1 = 0;
  Int p2 = 0;
  Int p3 = 0;
  Int e1 = 0;

  friend bool operator==(const LambdaGammaTerms&,
                         const LambdaGammaTerms&) = default;
};

/// n = lambda * s + gamma, and when gamma > 0 also s = a * gamma + b.
struct DecompositionContext {
  Int lambda = 0;
  Int gamma = 0;
  Int g = 1;  // gcd(n, s)
  std::optional<Int> a;
  std::optional<Int> b;
  std::optional<LambdaGammaTerms> terms;

  friend bool operator==(const DecompositionContext&,
                         const DecompositionContext&) = default;
};

inline DecompositionContext decompose(const CirculantParams& p) {
  const Int n = p.n();
  const Int s = p.s();
  DecompositionContext ctx;
  ctx.lambda = n / s;
  ctx.gamma = n % s;
  ctx.g = std::gcd(n, s);
  if (ctx.gamma == 0) return ctx;

  const Int a = s / ctx.gamma;
  const Int b = s % ctx.gamma;
  ctx.a = a;
  ctx.b = b;
  if (b == 0) return ctx;

  const Int lambda = ctx.lambda;
  const Int gamma = ctx.gamma;
  LambdaGammaTerms t;
  t.p0 = (lambda + gamma) / 2;
  t.p1 = (gamma - b + (a + 1) * lambda + 1) / 2;
  t.p2 = (gamma + b + (a - 1) * lambda + 1) / 2;
  t.p3 = (b + a * lambda + 1) / 2;
  t.e1 = std::min(std::max(t.p1, t.p3), std::max(t.p0, t.p2));
  ctx.terms = t;
  return ctx;
}

}  // namespace circulant
