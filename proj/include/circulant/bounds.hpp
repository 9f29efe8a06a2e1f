#pragma once

#include <algorithm>

#include "circulant/params.hpp"

namespace circulant {

/// Upper bounds on the diameter of C_n(1, s).
struct BoundsReport {
  Int du = 0;            // Du et al.
  Int gobel_neutel = 0;  // diam C_n(1, 2)
  Int new_bound = 0;     // floor(floor(n/2)/s) + ceil(s/2)
  Int combined = 0;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

inline BoundsReport bounds_report(const CirculantParams& p) {
  const Int n = p.n();
  const Int s = p.s();
  const Int k = n / s;
  BoundsReport out;
  // The second and third terms may be negative; the first is always >= 3.
  out.du = std::max({k + 1, n - k * s - 2, (k + 1) * s - n - 1});
  out.gobel_neutel = (n + 2) / 4;
  out.new_bound = (n / 2) / s + detail::ceil_div(s, 2);
  out.combined = std::min({out.du, out.gobel_neutel, out.new_bound});
  return out;
}

}  // namespace circulant
