#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

#include "circulant/params.hpp"

namespace circulant {

/// Which closed form governs (n, s). The four parity cases require
/// lambda > gamma > 0; LambdaLeGamma requires lambda <= gamma, 0 < b < gamma
/// and b <= a*lambda + 1.
enum class FormulaCase {
  gamma_zero,
  even_odd,
  even_even,
  odd_odd,
  odd_even,
  lambda_le_gamma,
  uncovered,
};

/// Stable labels used in CSV and JSON output.
inline constexpr std::string_view case_label(FormulaCase c) {
  switch (c) {
    case FormulaCase::gamma_zero: return "gamma_zero";
    case FormulaCase::even_odd: return "even_odd";
    case FormulaCase::even_even: return "even_even";
    case FormulaCase::odd_odd: return "odd_odd";
    case FormulaCase::odd_even: return "odd_even";
    case FormulaCase::lambda_le_gamma: return "lambda_le_gamma";
    case FormulaCase::uncovered: return "uncovered";
  }
  return "uncovered";
}

inline std::optional<FormulaCase> parse_case_label(std::string_view s) {
  for (auto c : {FormulaCase::gamma_zero, FormulaCase::even_odd,
                 FormulaCase::even_even, FormulaCase::odd_odd,
                 FormulaCase::odd_even, FormulaCase::lambda_le_gamma,
                 FormulaCase::uncovered}) {
    if (case_label(c) == s) return c;
  }
  return std::nullopt;
}

inline constexpr bool is_parity_case(FormulaCase c) {
  return c == FormulaCase::even_odd || c == FormulaCase::even_even ||
         c == FormulaCase::odd_odd || c == FormulaCase::odd_even;
}

inline FormulaCase classify_case(const DecompositionContext& ctx,
                                 const CirculantParams& p) {
  if (ctx.gamma == 0) return FormulaCase::gamma_zero;
  const bool n_even = p.n() % 2 == 0;
  const bool s_even = p.s() % 2 == 0;
  if (ctx.lambda > ctx.gamma) {
    if (n_even) return s_even ? FormulaCase::even_even : FormulaCase::even_odd;
    return s_even ? FormulaCase::odd_even : FormulaCase::odd_odd;
  }
  const Int b = ctx.b.value_or(0);
  const Int a = ctx.a.value_or(0);
  if (b > 0 && b < ctx.gamma && b <= a * ctx.lambda + 1)
    return FormulaCase::lambda_le_gamma;
  return FormulaCase::uncovered;
}

inline FormulaCase classify_case(const CirculantParams& p) {
  return classify_case(decompose(p), p);
}

struct FormulaResult {
  Int value = 0;
  FormulaCase formula_case = FormulaCase::uncovered;
  std::string_view subcase;  // which branch of a piecewise formula fired
};

/// Closed-form diameter, or nullopt when no case covers (n, s).
inline std::optional<FormulaResult> diameter_formula(const CirculantParams& p) {
  using detail::ceil_div;
  const auto ctx = decompose(p);
  const Int s = p.s();
  const Int lam = ctx.lambda;
  const Int gam = ctx.gamma;
  const FormulaCase fc = classify_case(ctx, p);

  auto result = [fc](Int v, std::string_view sub) {
    return FormulaResult{v, fc, sub};
  };

  switch (fc) {
    case FormulaCase::gamma_zero:
      return result((lam + s - 1) / 2, "floor((lambda+s-1)/2)");

    case FormulaCase::even_odd: {
      const Int lo = ceil_div(gam, 2);
      const Int hi = ceil_div(s - gam + 1, 2);
      return result(ceil_div(lam, 2) + (s - 1) / 2 - (std::min(lo, hi) - 1),
                    lo <= hi ? "min=ceil(gamma/2)" : "min=ceil((s-gamma+1)/2)");
    }

    case FormulaCase::even_even:
      if (gam <= 2 * ceil_div(s - 2, 4))
        return result(ceil_div(lam, 2) + (s - gam) / 2,
                      "gamma<=2ceil((s-2)/4)");
      return result(lam / 2 + gam / 2, "otherwise");

    case FormulaCase::odd_odd: {
      const Int lo = ceil_div(gam + 1, 2);
      const Int hi = ceil_div(s - gam + 2, 2);
      return result(ceil_div(lam, 2) + (s - 1) / 2 - (std::min(lo, hi) - 1),
                    lo <= hi ? "min=ceil((gamma+1)/2)"
                             : "min=ceil((s-gamma+2)/2)");
    }

    case FormulaCase::odd_even:
      // Branches overlap for small s; first match wins.
      if (gam == 1 || gam == s - 1)
        return result(ceil_div(lam, 2) + (s - 2) / 2, "gamma in {1,s-1}");
      if (gam >= 3 && gam <= 2 * ceil_div(s, 4) - 1)
        return result(lam / 2 + (s - gam + 1) / 2, "3<=gamma<=2ceil(s/4)-1");
      return result(ceil_div(lam, 2) + (gam - 1) / 2, "otherwise");

    case FormulaCase::lambda_le_gamma: {
      const auto& t = *ctx.terms;
      const Int b = *ctx.b;
      const Int a = *ctx.a;
      const Int parity = ((gam + b) % 2) * ((a * lam - lam + 1) % 2);
      if (t.p1 == t.p2 && parity == 1) return result(t.p1 - 1, "p1-1");
      return result(t.e1, "e1");
    }

    case FormulaCase::uncovered:
      break;
  }
  return std::nullopt;
}

/// A peripheral vertex built by the explicit constructions for the four
/// lambda > gamma > 0 parity cases, tagged with the branch that produced it.
struct WitnessConstruction {
  Int vertex = 0;
  std::string_view branch;
};

inline std::optional<WitnessConstruction> witness_construction(
    const CirculantParams& p) {
  using detail::ceil_div;
  const auto ctx = decompose(p);
  const FormulaCase fc = classify_case(ctx, p);
  if (!is_parity_case(fc)) return std::nullopt;

  const Int n = p.n();
  const Int s = p.s();
  const Int lam = ctx.lambda;
  const Int gam = ctx.gamma;
  auto make = [n](Int v, std::string_view branch) {
    return WitnessConstruction{detail::mod(v, n), branch};
  };

  switch (fc) {
    case FormulaCase::even_odd: {
      // gamma odd forces lambda odd, gamma even forces lambda even.
      if (gam % 2 == 1) {
        if (gam <= 2 * ((s + 3) / 4) - 1) {
          if (gam == 1)
            return make((lam - 1) / 2 * s + (s + 1) / 2, "R1 gamma=1");
          if (s == 5) return make(((lam + 1) / 2 + 1) * s, "R1 s=5");
          return make((lam + 1) / 2 * s + (gam + 1) / 2 + (s + 1) / 2, "R1");
        }
        return make(((lam + 1) / 2 - (s - gam + 2) / 2) * s + (s + 1) / 2,
                    "R3");
      }
      if (gam <= 2 * ((s + 3) / 4)) {
        if (2 * gam == s + 3) return make(lam / 2 * s + gam / 2, "R2 gamma=(s+3)/2");
        if (s == 3) return make((lam / 2 + 1) * s, "R2 s=3");
        return make(lam / 2 * s + (s + 1) / 2 + gam / 2, "R2");
      }
      return make((lam / 2 - (s - gam + 1) / 2 + 1) * s + (s - 1) / 2, "R4");
    }

    case FormulaCase::even_even: {
      if (gam <= 2 * ceil_div(s - 2, 4)) {
        if (lam % 2 == 0)
          return make((lam / 2 - gam / 2) * s + s / 2, "low gamma, lambda even");
        if (gam == 2)
          return make((lam - 1) / 2 * s + s / 2 + 1, "low gamma, lambda odd, gamma=2");
        return make((lam + 1) / 2 * s + gam / 2 + s / 2 + 1,
                    "low gamma, lambda odd, gamma>=4");
      }
      if (lam % 2 == 0) return make(n / 2, "high gamma, lambda even");
      return make((lam - 1) / 2 * s + gam / 2, "high gamma, lambda odd");
    }

    case FormulaCase::odd_odd: {
      // gamma odd forces lambda even, gamma even forces lambda odd.
      if (gam % 2 == 1) {
        if (gam <= 2 * ((s + 3) / 4) - 1)
          return make((lam / 2 - 1) * s + (s - 1) / 2 + (gam + 1) / 2, "R1");
        return make((lam / 2 - (s - gam + 2) / 2) * s + (s + 1) / 2, "R3");
      }
      if (gam <= 2 * ceil_div(s + 5, 4) - 2) {
        if (2 * gam == s + 3)
          return make((lam + 1) / 2 * s + (s - 1) / 4, "R2 gamma=(s+3)/2");
        if (s == 3) return make((lam + 1) / 2 * s, "R2 s=3");
        return make((lam - 1) / 2 * s + (s - 1) / 2 + (gam + 2) / 2, "R2");
      }
      // The ring offset is (s+1)/2: this is the vertex where the first two
      // family lengths coincide at the claimed diameter.
      return make(((lam + 1) / 2 - (s - gam + 3) / 2) * s + (s + 1) / 2, "R4");
    }

    case FormulaCase::odd_even: {
      // n odd with s even forces gamma odd.
      if (gam == 1 || gam == s - 1)
        return make((ceil_div(lam, 2) - 1) * s + s / 2, "gamma in {1,s-1}");
      if (gam >= 3 && gam <= 2 * ceil_div(s, 4) - 1) {
        if (lam % 2 == 0)
          return make((lam / 2 - (gam - 1) / 2) * s + s / 2 + 1,
                      "middle gamma, lambda even");
        return make((lam - 1) / 2 * s + (gam - 1) / 2 + s / 2 + 1,
                    "middle gamma, lambda odd");
      }
      return make(ceil_div(lam, 2) * s + (gam - 1) / 2, "high gamma");
    }

    default:
      break;
  }
  return std::nullopt;
}

inline std::optional<Int> formula_witness(const CirculantParams& p) {
  if (auto w = witness_construction(p)) return w->vertex;
  return std::nullopt;
}

}  // namespace circulant
