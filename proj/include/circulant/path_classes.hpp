#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/params.hpp"

namespace circulant {

enum class Direction : std::uint8_t { clockwise, counterclockwise };

inline constexpr char sign_char(Direction d) {
  return d == Direction::clockwise ? '+' : '-';
}

inline constexpr Int sign_of(Direction d) {
  return d == Direction::clockwise ? 1 : -1;
}

/// The six canonical families. Declaration order is the tie-break order used
/// when several families reach the same length.
enum class Family : std::uint8_t { p1, p2, p1t, p2t, p3t, p4t };

inline constexpr bool is_t_indexed(Family f) {
  return f != Family::p1 && f != Family::p2;
}

inline constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::p1: return "P1";
    case Family::p2: return "P2";
    case Family::p1t: return "P1t";
    case Family::p2t: return "P2t";
    case Family::p3t: return "P3t";
    case Family::p4t: return "P4t";
  }
  return "?";
}

/// A couple (alpha a^+-, beta c^+-): alpha unit steps along the ring followed
/// by beta chord steps. A zero-count segment always carries the clockwise
/// direction so that equal shapes compare equal.
class PathShape {
 public:
  constexpr PathShape() = default;
  constexpr PathShape(Int outer_count, Direction outer_dir, Int inner_count,
                      Direction inner_dir)
      : outer_count_(outer_count),
        outer_dir_(outer_count == 0 ? Direction::clockwise : outer_dir),
        inner_count_(inner_count),
        inner_dir_(inner_count == 0 ? Direction::clockwise : inner_dir) {}

  constexpr Int outer_count() const noexcept { return outer_count_; }
  constexpr Direction outer_dir() const noexcept { return outer_dir_; }
  constexpr Int inner_count() const noexcept { return inner_count_; }
  constexpr Direction inner_dir() const noexcept { return inner_dir_; }
  constexpr Int length() const noexcept { return outer_count_ + inner_count_; }

  /// Net displacement along Z (before reduction mod n).
  constexpr Int displacement(Int s) const noexcept {
    return sign_of(outer_dir_) * outer_count_ +
           sign_of(inner_dir_) * inner_count_ * s;
  }

  friend constexpr bool operator==(const PathShape&,
                                   const PathShape&) = default;

 private:
  Int outer_count_ = 0;
  Direction outer_dir_ = Direction::clockwise;
  Int inner_count_ = 0;
  Direction inner_dir_ = Direction::clockwise;
};

/// "(2a+, 1c+)", "(0, 1c-)".
inline std::string to_string(const PathShape& shape) {
  auto segment = [](Int count, char letter, Direction d) {
    if (count == 0) return std::string("0");
    return std::to_string(count) + letter + sign_char(d);
  };
  return "(" + segment(shape.outer_count(), 'a', shape.outer_dir()) + ", " +
         segment(shape.inner_count(), 'c', shape.inner_dir()) + ")";
}

/// One member of the canonical class family for a vertex: the shape plus the
/// family tag and, for the t-indexed families, the wrap count t.
struct PathClass {
  PathShape shape;
  Family family = Family::p1;
  std::optional<Int> t;

  constexpr Int length() const noexcept { return shape.length(); }

  friend constexpr bool operator==(const PathClass&,
                                   const PathClass&) = default;
};

/// Quotients and remainders of i, t*n + i and t*n - i by s.
struct ResidueDecomposition {
  Int q = 0, r = 0;
  Int q_t = 0, r_t = 0;
  Int qbar_t = 0, rbar_t = 0;
};

inline ResidueDecomposition residues(const CirculantParams& p, Int i, Int t) {
  p.check_vertex(i);
  const Int n = p.n();
  const Int s = p.s();
  ResidueDecomposition rd;
  rd.q = i / s;
  rd.r = i % s;
  rd.q_t = (t * n + i) / s;
  rd.r_t = (t * n + i) % s;
  rd.qbar_t = (t * n - i) / s;
  rd.rbar_t = (t * n - i) % s;
  return rd;
}

/// Largest wrap count t worth considering: s / gcd(n, s).
inline Int max_wraps(const CirculantParams& p) {
  return p.s() / std::gcd(p.n(), p.s());
}

namespace detail {

// Shapes of the six families in terms of the relevant quotient/remainder.
constexpr PathShape forward_shape(Int quot, Int rem) {
  return {rem, Direction::clockwise, quot, Direction::clockwise};
}
constexpr PathShape forward_overshoot_shape(Int quot, Int rem, Int s) {
  return {s - rem, Direction::counterclockwise, quot + 1, Direction::clockwise};
}
constexpr PathShape backward_shape(Int quot, Int rem) {
  return {rem, Direction::counterclockwise, quot, Direction::counterclockwise};
}
constexpr PathShape backward_overshoot_shape(Int quot, Int rem, Int s) {
  return {s - rem, Direction::clockwise, quot + 1, Direction::counterclockwise};
}

}  // namespace detail

/// All canonical classes of vertex i: P1, P2, then P1t, P2t, P3t, P4t for
/// t = 1 .. s / gcd(n, s), grouped by family. Size is 2 + 4 * (s / gcd).
inline std::vector<PathClass> canonical_classes(const CirculantParams& p,
                                                Int i) {
  p.check_vertex(i);
  const Int n = p.n();
  const Int s = p.s();
  const Int wraps = max_wraps(p);

  std::vector<PathClass> out;
  out.reserve(static_cast<std::size_t>(2 + 4 * wraps));
  const Int q = i / s;
  const Int r = i % s;
  out.push_back({detail::forward_shape(q, r), Family::p1, std::nullopt});
  out.push_back(
      {detail::forward_overshoot_shape(q, r, s), Family::p2, std::nullopt});

  for (Family f : {Family::p1t, Family::p2t, Family::p3t, Family::p4t}) {
    for (Int t = 1; t <= wraps; ++t) {
      const Int fwd = t * n + i;
      const Int bwd = t * n - i;
      PathShape shape;
      switch (f) {
        case Family::p1t:
          shape = detail::forward_shape(fwd / s, fwd % s);
          break;
        case Family::p2t:
          shape = detail::forward_overshoot_shape(fwd / s, fwd % s, s);
          break;
        case Family::p3t:
          shape = detail::backward_shape(bwd / s, bwd % s);
          break;
        case Family::p4t:
          shape = detail::backward_overshoot_shape(bwd / s, bwd % s, s);
          break;
        default:
          break;
      }
      out.push_back({shape, f, t});
    }
  }
  return out;
}

class InconsistentClass : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RealizedPath {
  std::vector<Int> vertices;
  bool is_genuine_path = true;  // false when a vertex repeats (a walk)
};

/// Walks the shape from 0, all outer steps first, and checks it lands on i.
inline RealizedPath realize_path(const CirculantParams& p,
                                 const PathShape& shape, Int i) {
  p.check_vertex(i);
  const Int n = p.n();
  const Int s = p.s();
  if (detail::mod(shape.displacement(s), n) != i) {
    throw InconsistentClass("class " + to_string(shape) +
                            " does not end at vertex " + std::to_string(i));
  }

  RealizedPath out;
  out.vertices.reserve(static_cast<std::size_t>(shape.length() + 1));
  Int v = 0;
  out.vertices.push_back(v);
  const Int outer_step = detail::mod(sign_of(shape.outer_dir()), n);
  const Int inner_step = detail::mod(sign_of(shape.inner_dir()) * s, n);
  for (Int k = 0; k < shape.outer_count(); ++k) {
    v = (v + outer_step) % n;
    out.vertices.push_back(v);
  }
  for (Int k = 0; k < shape.inner_count(); ++k) {
    v = (v + inner_step) % n;
    out.vertices.push_back(v);
  }

  if (shape.length() >= n) {
    out.is_genuine_path = false;
  } else {
    std::vector<Int> sorted = out.vertices;
    std::sort(sorted.begin(), sorted.end());
    out.is_genuine_path =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  return out;
}

inline RealizedPath realize_path(const CirculantParams& p,
                                 const PathClass& pc, Int i) {
  return realize_path(p, pc.shape, i);
}

/// "0 ->a+ 1 ->a+ 2 ->c+ 6". `vertices` must be the realization of `shape`.
inline std::string render_path(const PathShape& shape,
                               std::span<const Int> vertices) {
  std::string out;
  if (vertices.empty()) return out;
  out += std::to_string(vertices.front());
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const bool outer = static_cast<Int>(k) <= shape.outer_count();
    out += outer ? " ->a" : " ->c";
    out += sign_char(outer ? shape.outer_dir() : shape.inner_dir());
    out += ' ';
    out += std::to_string(vertices[k]);
  }
  return out;
}

/// Step counts of an arbitrary walk from 0.
struct WalkSpec {
  Int plus_outer = 0;
  Int minus_outer = 0;
  Int plus_inner = 0;
  Int minus_inner = 0;

  constexpr Int length() const noexcept {
    return plus_outer + minus_outer + plus_inner + minus_inner;
  }
};

/// Cancels opposite steps of each kind; the result reaches the same vertex
/// and is never longer than the walk.
inline constexpr PathShape reduce_walk(const WalkSpec& w) {
  const Int outer = w.plus_outer - w.minus_outer;
  const Int inner = w.plus_inner - w.minus_inner;
  return {outer < 0 ? -outer : outer,
          outer < 0 ? Direction::counterclockwise : Direction::clockwise,
          inner < 0 ? -inner : inner,
          inner < 0 ? Direction::counterclockwise : Direction::clockwise};
}

/// k with P(i, j) ~ P(0, k), i.e. (j - i) mod n.
inline Int translate_endpoints(const CirculantParams& p, Int i, Int j) {
  p.check_vertex(i);
  p.check_vertex(j);
  return detail::mod(j - i, p.n());
}

/// A shape anchored between two concrete vertices.
struct AnchoredPath {
  PathShape shape;
  Int from = 0;
  Int to = 0;
};

/// Equivalence of paths: same translated endpoints, same outer and inner edge
/// counts (hence same length), and same directions.
inline bool classes_equivalent(const CirculantParams& p, const AnchoredPath& x,
                               const AnchoredPath& y) {
  return translate_endpoints(p, x.from, x.to) ==
             translate_endpoints(p, y.from, y.to) &&
         x.shape == y.shape;
}

}  // namespace circulant
