#pragma once

#include <string_view>
#include <vector>

#include "circulant/params.hpp"

namespace circulant {

enum class DiameterMethod { algorithm, formula, oracle };

inline constexpr std::string_view method_name(DiameterMethod m) {
  switch (m) {
    case DiameterMethod::algorithm: return "algorithm";
    case DiameterMethod::formula: return "formula";
    case DiameterMethod::oracle: return "oracle";
  }
  return "?";
}

/// Witnesses are the maximizing vertices in [2, floor(n/2)], ascending; the
/// mirror vertices n - w are implied.
struct DiameterResult {
  Int value = 0;
  std::vector<Int> witnesses;
  DiameterMethod method = DiameterMethod::algorithm;
};

}  // namespace circulant
