// turan: evaluate recurrence polynomials, check positivity criteria for their
// Turán determinants, and scan Δₙ(x) over a grid.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "turan/report.hpp"

namespace {

struct Options {
  std::string family;
  std::vector<std::string> params;
  std::string spec;
  std::size_t n_max = 0;
  std::string region;
  double tol = 0.0;
  std::string format = "text";
  std::string out;
  std::vector<double> xs;
  bool raw = false;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--family", o.family,
                 "Built-in family: ultraspherical, legendre, chebyshev, "
                 "q_ultraspherical, pollaczek, laguerre, sec6_example");
  sub.add_option("--param", o.params, "Family parameter k=v (repeatable)");
  sub.add_option("--spec", o.spec, "Family spec JSON file, or inline JSON");
  sub.add_option("--n-max", o.n_max, "Largest degree or horizon");
  sub.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub.add_option("--out", o.out, "Write output to this path");
  sub.add_flag("--raw", o.raw,
               "Use auxiliary recurrences as given, without normalizing at 1");
}

turan::RunConfig to_config(const CLI::App& sub, const Options& o) {
  turan::RunConfig config;
  if (sub.count("--family") > 0) config.family = o.family;
  if (sub.count("--spec") > 0) config.spec = o.spec;
  for (const auto& p : o.params) {
    config.params.insert(turan::parse_param(p));
  }
  if (sub.count("--n-max") > 0) config.n_max = o.n_max;
  if (sub.get_option_no_throw("--tol") && sub.count("--tol") > 0) {
    config.tol = o.tol;
  }
  if (sub.get_option_no_throw("--region") && sub.count("--region") > 0) {
    config.region = turan::parse_region(o.region, 1, o.n_max > 0 ? o.n_max : 1);
  }
  config.format = *turan::format_from_string(o.format);
  if (!o.out.empty()) config.out = o.out;
  config.xs = o.xs;
  config.raw = o.raw;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turán determinants of three-term recurrence polynomials"};
  app.require_subcommand(1);

  Options eval_opts, check_opts, scan_opts;
  CLI::App* eval = app.add_subcommand("eval", "Print p_0(x) ... p_N(x)");
  add_common(*eval, eval_opts);
  eval->add_option("--x", eval_opts.xs, "Abscissas (repeatable or comma list)")
      ->delimiter(',');

  CLI::App* check =
      app.add_subcommand("check", "Run every applicable positivity criterion");
  add_common(*check, check_opts);

  CLI::App* scan = app.add_subcommand("scan", "Grid scan of Turán determinants");
  add_common(*scan, scan_opts);
  scan->add_option("--region", scan_opts.region, "lo,hi,points");
  scan->add_option("--tol", scan_opts.tol, "Violation tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : turan::kExitInputError;
  }

  CLI::App* active = eval->parsed() ? eval : check->parsed() ? check : scan;
  const Options& opts =
      active == eval ? eval_opts : active == check ? check_opts : scan_opts;

  turan::RunConfig config;
  try {
    config = to_config(*active, opts);
  } catch (const turan::Error& e) {
    std::cerr << "turan " << active->get_name() << ": " << e.what() << '\n';
    return turan::kExitInputError;
  }

  std::ostringstream buffer;
  std::ostream& out = config.out ? buffer : std::cout;
  int code = 0;
  if (active == eval) {
    code = turan::cmd_eval(config, out, std::cerr);
  } else if (active == check) {
    code = turan::cmd_check(config, out, std::cerr);
  } else {
    code = turan::cmd_scan(config, out, std::cerr);
  }

  if (config.out) {
    std::ofstream file(*config.out);
    file << buffer.str();
    if (!file) {
      std::cerr << "turan: cannot write " << *config.out << '\n';
      return turan::kExitInputError;
    }
  }
  return code;
}
