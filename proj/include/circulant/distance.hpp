#pragma once

#include <tuple>
#include <vector>

#include "circulant/params.hpp"
#include "circulant/path_classes.hpp"

namespace circulant {

struct DistanceResult {
  Int value = 0;
  PathClass argmin_class;
  std::vector<Int> realized;
};

namespace detail {

struct ClassKey {
  Int length;
  Family family;
  Int t;  // 0 for P1 / P2

  friend constexpr auto operator<=>(const ClassKey& a, const ClassKey& b) {
    return std::tie(a.length, a.family, a.t) <=> std::tie(b.length, b.family, b.t);
  }
  friend constexpr bool operator==(const ClassKey&, const ClassKey&) = default;
};

enum class Ties { any, canonical };

// Minimum over the canonical classes of i (1 <= i < n) without materializing
// them. t*n + i and t*n - i are advanced by n = lambda*s + gamma, so the
// quotients and remainders update without division. q_t and qbar_t never
// decrease, and every t-indexed length is at least min(q_t, qbar_t), which
// bounds everything left in the scan. Ties::canonical keeps scanning through
// equal lengths so the (length, family, t) tie-break is honored.
inline ClassKey scan_minimum(const CirculantParams& p, Int i, Ties ties) {
  const Int n = p.n();
  const Int s = p.s();
  const Int lambda = n / s;
  const Int gamma = n % s;
  const Int wraps = max_wraps(p);

  const Int q = i / s;
  const Int r = i % s;
  ClassKey best{r + q, Family::p1, 0};
  if (ClassKey c{1 + s - r + q, Family::p2, 0}; c < best) best = c;

  Int qf = (n + i) / s, rf = (n + i) % s;  // t*n + i
  Int qb = (n - i) / s, rb = (n - i) % s;  // t*n - i
  for (Int t = 1; t <= wraps; ++t) {
    const Int floor_len = std::min(qf, qb);
    if (ties == Ties::any ? floor_len >= best.length : floor_len > best.length)
      break;
    const ClassKey cands[4] = {
        {rf + qf, Family::p1t, t},
        {1 + s - rf + qf, Family::p2t, t},
        {rb + qb, Family::p3t, t},
        {1 + s - rb + qb, Family::p4t, t},
    };
    for (const ClassKey& c : cands) {
      if (c < best) best = c;
    }
    qf += lambda;
    rf += gamma;
    if (rf >= s) {
      rf -= s;
      ++qf;
    }
    qb += lambda;
    rb += gamma;
    if (rb >= s) {
      rb -= s;
      ++qb;
    }
  }
  return best;
}

inline PathClass class_from_key(const CirculantParams& p, Int i,
                                const ClassKey& key) {
  const Int n = p.n();
  const Int s = p.s();
  const Int fwd = key.t * n + i;
  const Int bwd = key.t * n - i;
  switch (key.family) {
    case Family::p1:
      return {forward_shape(i / s, i % s), key.family, std::nullopt};
    case Family::p2:
      return {forward_overshoot_shape(i / s, i % s, s), key.family,
              std::nullopt};
    case Family::p1t:
      return {forward_shape(fwd / s, fwd % s), key.family, key.t};
    case Family::p2t:
      return {forward_overshoot_shape(fwd / s, fwd % s, s), key.family, key.t};
    case Family::p3t:
      return {backward_shape(bwd / s, bwd % s), key.family, key.t};
    case Family::p4t:
      return {backward_overshoot_shape(bwd / s, bwd % s, s), key.family, key.t};
  }
  return {};
}

}  // namespace detail

/// d(0, i) only. This is the hot path of diameter_exact.
inline Int distance_value(const CirculantParams& p, Int i) {
  p.check_vertex(i);
  if (i == 0) return 0;
  if (i == 1 || i == p.n() - 1) return 1;
  return detail::scan_minimum(p, i, detail::Ties::any).length;
}

/// d(0, i) with the minimizing class (ties: shortest, then family order, then
/// smallest t) and its vertex sequence.
inline DistanceResult distance_from_zero(const CirculantParams& p, Int i) {
  p.check_vertex(i);
  DistanceResult out;
  if (i == 0) {
    out.value = 0;
    out.argmin_class = {PathShape{}, Family::p1, std::nullopt};
    out.realized = {0};
    return out;
  }
  const auto key = detail::scan_minimum(p, i, detail::Ties::canonical);
  out.value = key.length;
  out.argmin_class = detail::class_from_key(p, i, key);
  out.realized = realize_path(p, out.argmin_class, i).vertices;
  return out;
}

inline DistanceResult distance(const CirculantParams& p, Int i, Int j) {
  return distance_from_zero(p, translate_endpoints(p, i, j));
}

}  // namespace circulant
