#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "circulant/bounds.hpp"
#include "circulant/diameter.hpp"
#include "circulant/formulas.hpp"
#include "circulant/oracle.hpp"
#include "circulant/params.hpp"

namespace circulant {

/// Above this n the oracle is skipped unless explicitly forced.
inline constexpr Int kOracleAutoLimit = 2000;

struct SweepOptions {
  Int n_min = 5;
  Int n_max = 5;
  std::optional<Int> s_only;  // nullopt = every valid s
  bool verify_oracle = false;
  bool force_oracle = false;
  unsigned jobs = 1;
};

struct SweepRow {
  Int n = 0;
  Int s = 0;
  Int diam_algorithm = 0;
  std::optional<Int> diam_formula;
  std::string formula_case;
  std::optional<Int> diam_oracle;
  Int bound_du = 0;
  Int bound_gn = 0;
  Int bound_new = 0;
  Int bound_combined = 0;
  std::optional<bool> agree_formula;
  std::optional<bool> agree_oracle;
  Int witness_min = 0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;

  bool verification_failed() const {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) {
      return r.agree_formula == false || r.agree_oracle == false;
    });
  }
};

inline SweepRow evaluate_cell(const CirculantParams& p, bool with_oracle) {
  SweepRow row;
  row.n = p.n();
  row.s = p.s();
  const auto exact = diameter_exact(p);
  row.diam_algorithm = exact.value;
  row.witness_min = exact.witnesses.front();

  const auto formula = diameter_formula(p);
  row.formula_case = std::string(case_label(classify_case(p)));
  if (formula) {
    row.diam_formula = formula->value;
    row.agree_formula = formula->value == exact.value;
  }
  if (with_oracle) {
    row.diam_oracle = oracle_diameter(p).value;
    row.agree_oracle = *row.diam_oracle == exact.value;
  }

  const auto b = bounds_report(p);
  row.bound_du = b.du;
  row.bound_gn = b.gobel_neutel;
  row.bound_new = b.new_bound;
  row.bound_combined = b.combined;
  return row;
}

/// One row per valid (n, s) in range, ordered by n then s. The grid is split
/// across `jobs` threads but rows land in fixed slots, so the output is the
/// same for every job count.
inline SweepReport run_sweep(const SweepOptions& opt) {
  std::vector<CirculantParams> cells;
  for (Int n = std::max<Int>(opt.n_min, 5); n <= opt.n_max; ++n) {
    const Int s_max = (n - 1) / 2;
    if (opt.s_only) {
      if (*opt.s_only >= 2 && *opt.s_only <= s_max)
        cells.push_back(validate_params(n, *opt.s_only));
      continue;
    }
    for (Int s = 2; s <= s_max; ++s) cells.push_back(validate_params(n, s));
  }

  SweepReport report;
  bool skipped = false;
  auto oracle_for = [&](Int n) {
    if (!opt.verify_oracle) return false;
    if (n > kOracleAutoLimit && !opt.force_oracle) {
      skipped = true;
      return false;
    }
    return true;
  };
  std::vector<char> with_oracle(cells.size());
  for (std::size_t k = 0; k < cells.size(); ++k)
    with_oracle[k] = oracle_for(cells[k].n());
  if (skipped) {
    report.warnings.push_back(
        "oracle verification skipped for n > " +
        std::to_string(kOracleAutoLimit) + " (pass --force-oracle to run it)");
  }

  report.rows.resize(cells.size());
  const unsigned jobs = std::max(1u, opt.jobs);
  auto work = [&](unsigned worker) {
    for (std::size_t k = worker; k < cells.size(); k += jobs)
      report.rows[k] = evaluate_cell(cells[k], with_oracle[k] != 0);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  return report;
}

inline constexpr const char* kSweepCsvHeader =
    "n,s,diam_algorithm,diam_formula,formula_case,diam_oracle,bound_du,"
    "bound_gn,bound_new,bound_combined,agree_formula,agree_oracle,witness_min";

namespace detail {

inline std::string csv_field(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : std::string();
}

inline std::string csv_field(const std::optional<bool>& v) {
  if (!v) return {};
  return *v ? "true" : "false";
}

template <typename T>
nlohmann::ordered_json json_field(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

/// Header row plus one LF-terminated line per row; absent values are empty.
inline void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.s << ',' << r.diam_algorithm << ','
        << detail::csv_field(r.diam_formula) << ',' << r.formula_case << ','
        << detail::csv_field(r.diam_oracle) << ',' << r.bound_du << ','
        << r.bound_gn << ',' << r.bound_new << ',' << r.bound_combined << ','
        << detail::csv_field(r.agree_formula) << ','
        << detail::csv_field(r.agree_oracle) << ',' << r.witness_min << '\n';
  }
}

inline nlohmann::ordered_json to_json(const SweepRow& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["s"] = r.s;
  j["diam_algorithm"] = r.diam_algorithm;
  j["diam_formula"] = detail::json_field(r.diam_formula);
  j["formula_case"] = r.formula_case;
  j["diam_oracle"] = detail::json_field(r.diam_oracle);
  j["bound_du"] = r.bound_du;
  j["bound_gn"] = r.bound_gn;
  j["bound_new"] = r.bound_new;
  j["bound_combined"] = r.bound_combined;
  j["agree_formula"] = detail::json_field(r.agree_formula);
  j["agree_oracle"] = detail::json_field(r.agree_oracle);
  j["witness_min"] = r.witness_min;
  return j;
}

inline SweepRow row_from_json(const nlohmann::ordered_json& j) {
  auto opt_int = [&](const char* key) -> std::optional<Int> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<Int>();
  };
  auto opt_bool = [&](const char* key) -> std::optional<bool> {
    if (j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<bool>();
  };
  SweepRow r;
  r.n = j.at("n").get<Int>();
  r.s = j.at("s").get<Int>();
  r.diam_algorithm = j.at("diam_algorithm").get<Int>();
  r.diam_formula = opt_int("diam_formula");
  r.formula_case = j.at("formula_case").get<std::string>();
  r.diam_oracle = opt_int("diam_oracle");
  r.bound_du = j.at("bound_du").get<Int>();
  r.bound_gn = j.at("bound_gn").get<Int>();
  r.bound_new = j.at("bound_new").get<Int>();
  r.bound_combined = j.at("bound_combined").get<Int>();
  r.agree_formula = opt_bool("agree_formula");
  r.agree_oracle = opt_bool("agree_oracle");
  r.witness_min = j.at("witness_min").get<Int>();
  return r;
}

/// A single JSON array document.
inline void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) doc.push_back(to_json(r));
  out << doc.dump(2) << '\n';
}

inline void write_ndjson(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) out << to_json(r).dump() << '\n';
}

}  // namespace circulant
