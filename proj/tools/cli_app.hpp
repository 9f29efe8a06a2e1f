#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "circulant/circulant.hpp"

namespace circulant::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationMismatch = 2 };

namespace detail {

using json = nlohmann::ordered_json;

inline std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(v[k]);
  }
  return out;
}

struct CommonArgs {
  Int n = 0;
  Int s = 0;
  std::string format = "text";
};

inline void add_graph_options(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--n", a.n, "Number of vertices")->required();
  cmd->add_option("--s", a.s, "Chord length")->required();
}

inline int run_distance(const CommonArgs& a, Int from, Int to, bool witness,
                        std::ostream& out) {
  const auto p = validate_params(a.n, a.s);
  const auto r = distance(p, from, to);
  std::vector<Int> shifted;
  shifted.reserve(r.realized.size());
  for (Int v : r.realized) shifted.push_back((v + from) % p.n());
  const std::string rendered = render_path(r.argmin_class.shape, shifted);
  const std::string family(family_name(r.argmin_class.family));

  if (a.format == "json") {
    json j;
    j["n"] = p.n();
    j["s"] = p.s();
    j["from"] = from;
    j["to"] = to;
    j["distance"] = r.value;
    j["class"] = {{"family", family},
                  {"t", r.argmin_class.t ? json(*r.argmin_class.t) : json(nullptr)},
                  {"shape", to_string(r.argmin_class.shape)}};
    if (witness) {
      j["path"] = shifted;
      j["rendered"] = rendered;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << r.value << '\n';
  if (witness) {
    out << "class: " << family;
    if (r.argmin_class.t) out << " t=" << *r.argmin_class.t;
    out << ' ' << to_string(r.argmin_class.shape) << '\n';
    out << "path: " << rendered << '\n';
  }
  return kOk;
}

inline int run_diameter(const CommonArgs& a, const std::string& method,
                        bool witness, unsigned jobs, std::ostream& out) {
  const auto p = validate_params(a.n, a.s);
  const bool as_json = a.format == "json";
  json j;
  j["n"] = p.n();
  j["s"] = p.s();
  j["method"] = method;

  if (method == "formula") {
    const auto f = diameter_formula(p);
    const std::string label(case_label(classify_case(p)));
    if (!f) {
      if (as_json) {
        j["value"] = nullptr;
        j["case"] = label;
        j["message"] = "no closed form";
        out << j.dump() << '\n';
      } else {
        out << "no closed form (case " << label << ")\n";
      }
      return kOk;
    }
    const auto w = formula_witness(p);
    if (as_json) {
      j["value"] = f->value;
      j["case"] = label;
      j["subcase"] = std::string(f->subcase);
      if (witness) j["witness"] = w ? json(*w) : json(nullptr);
      out << j.dump() << '\n';
    } else {
      out << f->value << '\n';
      out << "case: " << label << " (" << f->subcase << ")\n";
      if (witness)
        out << "witness: " << (w ? std::to_string(*w) : std::string("none"))
            << '\n';
    }
    return kOk;
  }

  const auto r = method == "oracle" ? oracle_diameter(p) : diameter_exact(p, jobs);
  if (as_json) {
    j["value"] = r.value;
    if (witness) j["witnesses"] = r.witnesses;
    out << j.dump() << '\n';
    return kOk;
  }
  out << r.value << '\n';
  if (witness) {
    out << "witnesses: " << join(r.witnesses) << '\n';
    if (method == "algorithm") {
      const auto d = distance_from_zero(p, r.witnesses.front());
      out << "path: " << render_path(d.argmin_class.shape, d.realized) << '\n';
    }
  }
  return kOk;
}

inline int run_bounds(const CommonArgs& a, std::ostream& out) {
  const auto p = validate_params(a.n, a.s);
  const auto b = bounds_report(p);
  const Int diam = diameter_exact(p).value;
  if (a.format == "json") {
    json j;
    j["n"] = p.n();
    j["s"] = p.s();
    j["du"] = b.du;
    j["gn"] = b.gobel_neutel;
    j["new"] = b.new_bound;
    j["combined"] = b.combined;
    j["diam"] = diam;
    j["slack"] = b.combined - diam;
    out << j.dump() << '\n';
    return kOk;
  }
  out << "du=" << b.du << " gn=" << b.gobel_neutel << " new=" << b.new_bound
      << " combined=" << b.combined << " diam=" << diam
      << " slack=" << b.combined - diam << '\n';
  return kOk;
}

inline int run_sweep_command(const SweepOptions& opt, const std::string& format,
                             const std::string& out_path, std::ostream& out,
                             std::ostream& err) {
  const auto report = run_sweep(opt);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
    sink = &file;
  }
  if (format == "json") {
    write_json(*sink, report.rows);
  } else if (format == "ndjson") {
    write_ndjson(*sink, report.rows);
  } else {
    write_csv(*sink, report.rows);
  }
  sink->flush();

  if (report.verification_failed()) {
    err << "error: verification mismatch\n";
    return kVerificationMismatch;
  }
  return kOk;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact distances and diameters of circulant graphs C_n(1,s)",
               "circulant"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  if (const char* env = std::getenv("CIRC_JOBS")) {
    try {
      jobs = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      err << "warning: ignoring invalid CIRC_JOBS=" << env << '\n';
    }
  }

  detail::CommonArgs dist_args;
  Int from = 0, to = 0;
  bool dist_witness = false;
  auto* dist_cmd = app.add_subcommand("distance", "Distance between two vertices");
  detail::add_graph_options(dist_cmd, dist_args);
  dist_cmd->add_option("--from", from, "Source vertex")->required();
  dist_cmd->add_option("--to", to, "Target vertex")->required();
  dist_cmd->add_flag("--witness", dist_witness, "Print the minimizing path");
  dist_cmd->add_option("--format", dist_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  detail::CommonArgs diam_args;
  std::string method = "algorithm";
  bool diam_witness = false;
  auto* diam_cmd = app.add_subcommand("diameter", "Diameter of C_n(1,s)");
  detail::add_graph_options(diam_cmd, diam_args);
  diam_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"algorithm", "formula", "oracle"}));
  diam_cmd->add_flag("--witness", diam_witness, "Print peripheral vertices");
  diam_cmd->add_option("--format", diam_args.format)
      ->check(CLI::IsMember({"text", "json"}));
  diam_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  detail::CommonArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bounds", "Upper bounds and their slack");
  detail::add_graph_options(bound_cmd, bound_args);
  bound_cmd->add_option("--format", bound_args.format)
      ->check(CLI::IsMember({"text", "json"}));

  SweepOptions sweep;
  std::string s_choice = "all";
  std::string sweep_format = "csv";
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a grid of (n, s)");
  sweep_cmd->add_option("--n-min", sweep.n_min)->required();
  sweep_cmd->add_option("--n-max", sweep.n_max)->required();
  sweep_cmd->add_option("--s", s_choice, "'all' or a single chord length");
  sweep_cmd->add_flag("--verify-oracle", sweep.verify_oracle,
                      "Cross-check every cell against breadth-first search");
  sweep_cmd->add_flag("--force-oracle", sweep.force_oracle,
                      "Run the oracle even above n = 2000");
  sweep_cmd->add_option("--out", out_path, "Write rows to a file");
  sweep_cmd->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"csv", "json", "ndjson"}));
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*dist_cmd)
      return detail::run_distance(dist_args, from, to, dist_witness, out);
    if (*diam_cmd)
      return detail::run_diameter(diam_args, method, diam_witness, jobs, out);
    if (*bound_cmd) return detail::run_bounds(bound_args, out);
    if (*sweep_cmd) {
      if (s_choice != "all") {
        try {
          std::size_t used = 0;
          sweep.s_only = std::stoll(s_choice, &used);
          if (used != s_choice.size()) throw std::invalid_argument(s_choice);
        } catch (const std::exception&) {
          err << "error: --s expects 'all' or an integer, got '" << s_choice
              << "'\n";
          return kUsage;
        }
      }
      sweep.jobs = jobs;
      return detail::run_sweep_command(sweep, sweep_format, out_path, out, err);
    }
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run_cli(std::move(args), out, err);
}

}  // namespace circulant::cli
