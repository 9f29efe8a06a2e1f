#pragma once

#include <algorithm>
#include <thread>
#include <utility>
#include <vector>

#include "circulant/diameter_result.hpp"
#include "circulant/distance.hpp"
#include "circulant/params.hpp"

namespace circulant {

namespace detail {

struct BlockMax {
  Int value = -1;
  std::vector<Int> witnesses;
};

inline BlockMax scan_block(const CirculantParams& p, Int first, Int last) {
  BlockMax out;
  for (Int i = first; i <= last; ++i) {
    const Int d = distance_value(p, i);
    if (d > out.value) {
      out.value = d;
      out.witnesses.clear();
    }
    if (d == out.value) out.witnesses.push_back(i);
  }
  return out;
}

}  // namespace detail

/// Exact diameter as the maximum of d(i) over 2 <= i <= floor(n/2). With
/// jobs > 1 the index range is split into contiguous blocks scanned on
/// separate threads; the merged result does not depend on scheduling.
inline DiameterResult diameter_exact(const CirculantParams& p,
                                     unsigned jobs = 1) {
  const Int first = 2;
  const Int last = p.n() / 2;
  const Int count = last - first + 1;
  jobs = std::max(1u, jobs);
  if (static_cast<Int>(jobs) > count) jobs = static_cast<unsigned>(count);

  std::vector<detail::BlockMax> blocks(jobs);
  if (jobs == 1) {
    blocks[0] = detail::scan_block(p, first, last);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned k = 0; k < jobs; ++k) {
      const Int lo = first + count * k / jobs;
      const Int hi = first + count * (k + 1) / jobs - 1;
      workers.emplace_back(
          [&p, &blocks, k, lo, hi] { blocks[k] = detail::scan_block(p, lo, hi); });
    }
  }

  DiameterResult out;
  out.method = DiameterMethod::algorithm;
  out.value = -1;
  for (const auto& b : blocks) out.value = std::max(out.value, b.value);
  for (auto& b : blocks) {
    if (b.value != out.value) continue;
    out.witnesses.insert(out.witnesses.end(), b.witnesses.begin(),
                         b.witnesses.end());
  }
  return out;
}

struct ProfileEntry {
  Int vertex = 0;
  Int distance = 0;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// (i, d(i)) for i = 0 .. floor(n/2).
inline std::vector<ProfileEntry> eccentricity_profile(const CirculantParams& p) {
  std::vector<ProfileEntry> out;
  out.reserve(static_cast<std::size_t>(p.n() / 2 + 1));
  for (Int i = 0; i <= p.n() / 2; ++i) out.push_back({i, distance_value(p, i)});
  return out;
}

}  // namespace circulant
