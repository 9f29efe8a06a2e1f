// Acceptance checks: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "circulant/circulant.hpp"

using namespace circulant;

namespace {

constexpr Int kGridMax = 400;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

template <typename F>
void for_grid(F&& f) {
  for (Int n = 5; n <= kGridMax; ++n)
    for (Int s = 2; s <= (n - 1) / 2; ++s) f(validate_params(n, s));
}

std::string cell(const CirculantParams& p) {
  return "n=" + std::to_string(p.n()) + " s=" + std::to_string(p.s());
}

Outcome oracle_equivalence() {
  Outcome o;
  long cells = 0;
  for_grid([&](const CirculantParams& p) {
    ++cells;
    const auto bfs = bfs_distances(build_adjacency(p), 0);
    for (Int i = 0; i < p.n(); ++i) {
      if (distance_from_zero(p, i).value != bfs[i]) {
        o.fail(cell(p) + " i=" + std::to_string(i));
        return;
      }
    }
    if (diameter_exact(p).value != oracle_diameter(p).value) o.fail(cell(p));
  });
  if (o.ok) o.detail = std::to_string(cells) + " cells, every vertex";
  return o;
}

Outcome formula_equivalence() {
  Outcome o;
  long cells = 0, uncovered = 0;
  for_grid([&](const CirculantParams& p) {
    ++cells;
    const auto f = diameter_formula(p);
    if (!f) {
      ++uncovered;
      return;
    }
    if (f->value != diameter_exact(p).value)
      o.fail(cell(p) + " case=" + std::string(case_label(f->formula_case)));
  });
  char buf[128];
  std::snprintf(buf, sizeof buf, "uncovered %ld/%ld = %.2f%%", uncovered, cells,
                100.0 * static_cast<double>(uncovered) / static_cast<double>(cells));
  o.detail = o.ok ? std::string(buf) : o.detail + "; " + buf;
  return o;
}

Outcome table_reproduction() {
  Outcome o;
  using D = Direction;
  const auto p = validate_params(10, 4);
  const auto cs = canonical_classes(p, 6);
  const struct {
    PathShape shape;
    std::vector<Int> vertices;
  } rows[] = {
      {PathShape(2, D::clockwise, 1, D::clockwise), {0, 1, 2, 6}},
      {PathShape(2, D::counterclockwise, 2, D::clockwise), {0, 9, 8, 2, 6}},
      {PathShape(0, D::clockwise, 4, D::clockwise), {0, 4, 8, 2, 6}},
      {PathShape(0, D::clockwise, 1, D::counterclockwise), {0, 6}},
  };
  for (const auto& row : rows) {
    const bool present = std::any_of(cs.begin(), cs.end(), [&](const PathClass& c) {
      return c.shape == row.shape;
    });
    if (!present) o.fail("missing " + to_string(row.shape));
    else if (realize_path(p, row.shape, 6).vertices != row.vertices)
      o.fail("realization of " + to_string(row.shape));
  }
  if (distance_from_zero(p, 6).value != 1) o.fail("d(6) != 1");
  if (o.ok) o.detail = "lengths 3, 4, 4, 1; d(6) = 1";
  return o;
}

Outcome witness_validity() {
  Outcome o;
  long checked = 0;
  for_grid([&](const CirculantParams& p) {
    const auto w = formula_witness(p);
    if (!w) return;
    ++checked;
    if (distance_value(p, *w) != diameter_exact(p).value)
      o.fail(cell(p) + " witness=" + std::to_string(*w) + " branch=" +
             std::string(witness_construction(p)->branch));
  });
  if (o.ok) o.detail = std::to_string(checked) + " witnesses";
  return o;
}

Outcome bound_domination() {
  Outcome o;
  for_grid([&](const CirculantParams& p) {
    const auto b = bounds_report(p);
    const Int d = diameter_exact(p).value;
    if (d > b.du || d > b.gobel_neutel || d > b.new_bound) o.fail(cell(p));
    if (b.combined != std::min({b.du, b.gobel_neutel, b.new_bound}))
      o.fail(cell(p) + " combined");
  });
  return o;
}

Outcome spot_values() {
  Outcome o;
  const struct {
    Int n, s, diam;
  } goldens[] = {{12, 3, 3}, {10, 4, 2}, {13, 5, 2}, {14, 5, 3},
                 {16, 5, 4}, {13, 4, 3}, {14, 4, 3}};
  for (const auto& g : goldens) {
    const Int d = diameter_exact(validate_params(g.n, g.s)).value;
    if (d != g.diam)
      o.fail("n=" + std::to_string(g.n) + " s=" + std::to_string(g.s) +
             " got " + std::to_string(d));
  }
  const auto f13 = diameter_formula(validate_params(13, 5));
  const auto f14 = diameter_formula(validate_params(14, 5));
  if (!f13 || f13->subcase != "p1-1") o.fail("C13(1,5) not on the p1-1 branch");
  if (!f14 || f14->subcase != "e1") o.fail("C14(1,5) not on the e1 branch");
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937_64 rng(20241019);
  for (int trial = 0; trial < 200 && o.ok; ++trial) {
    const Int n = std::uniform_int_distribution<Int>(5, kGridMax)(rng);
    const Int s = std::uniform_int_distribution<Int>(2, (n - 1) / 2)(rng);
    const Int i = std::uniform_int_distribution<Int>(0, n - 1)(rng);
    const auto p = validate_params(n, s);
    const std::string where = cell(p) + " i=" + std::to_string(i);

    if (distance_value(p, i) != distance_value(p, (n - i) % n))
      o.fail("symmetry " + where);
    const bool generator = i == 1 || i == n - 1 || i == s || i == n - s;
    if ((distance_value(p, i) == 1) != generator) o.fail("unit distance " + where);

    std::uniform_int_distribution<Int> count(0, 3 * s);
    const WalkSpec w{count(rng), count(rng), count(rng), count(rng)};
    const Int end = detail::mod(w.plus_outer - w.minus_outer +
                                    (w.plus_inner - w.minus_inner) * s, n);
    const auto reduced = reduce_walk(w);
    if (reduced.length() > w.length() ||
        detail::mod(reduced.displacement(s), n) != end)
      o.fail("reduce_walk " + where);

    for (const auto& c : canonical_classes(p, i)) {
      const auto r = realize_path(p, c, i);
      if (r.vertices.back() != i ||
          static_cast<Int>(r.vertices.size()) != c.length() + 1)
        o.fail("realize_path " + where);
    }
  }
  if (o.ok) o.detail = "200 random triples";
  return o;
}

Outcome performance() {
  Outcome o;
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto big = diameter_exact(validate_params(1'000'000, 997));
  const double big_s = std::chrono::duration<double>(clock::now() - t0).count();

  SweepOptions opt;
  opt.n_min = 5;
  opt.n_max = kGridMax;
  opt.verify_oracle = true;
  const auto t1 = clock::now();
  const auto report = run_sweep(opt);
  const double sweep_s = std::chrono::duration<double>(clock::now() - t1).count();

  if (big_s >= 5.0) o.fail("n=1e6 took too long");
  if (sweep_s >= 120.0) o.fail("sweep took too long");
  if (report.verification_failed()) o.fail("sweep verification mismatch");
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "n=1e6 s=997: diam %lld in %.3fs; sweep 5..400 with oracle in %.2fs",
                static_cast<long long>(big.value), big_s, sweep_s);
  o.detail = o.ok ? std::string(buf) : o.detail + "; " + buf;
  return o;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<Outcome()> check;
  } criteria[] = {
      {"1 oracle equivalence", oracle_equivalence},
      {"2 formula equivalence", formula_equivalence},
      {"3 table reproduction", table_reproduction},
      {"4 witness validity", witness_validity},
      {"5 bound domination", bound_domination},
      {"6 spot values", spot_values},
      {"7 property suites", properties},
      {"8 performance", performance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s", o.ok ? "PASS" : "FAIL", c.name);
    if (!o.detail.empty()) std::printf(" (%s)", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
