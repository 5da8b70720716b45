#include "turan/report.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <utility>

namespace turan {
namespace {

using nlohmann::json;

std::string describe_position(const std::string& source,
                              std::optional<std::size_t> line,
                              std::optional<std::size_t> column,
                              const std::string& field) {
  std::string where = source;
  if (line) {
    where += ":" + std::to_string(*line);
    if (column) {
      where += ":" + std::to_string(*column);
    }
  }
  if (!field.empty()) {
    where += ": field '" + field + "'";
  }
  return where;
}

[[noreturn]] void field_error(const std::string& source,
                              const std::string& field,
                              const std::string& what) {
  throw SpecError(source, std::nullopt, std::nullopt, field, what);
}

double number_field(const json& j, const std::string& source,
                    const std::string& field) {
  if (!j.is_number()) {
    field_error(source, field, "expected a number");
  }
  return j.get<double>();
}

std::vector<double> number_list(const json& spec, const std::string& source,
                                const std::string& field) {
  const json& j = spec.at(field);
  if (!j.is_array()) {
    field_error(source, field, "expected an array of numbers");
  }
  std::vector<double> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    values.push_back(
        number_field(j[i], source, field + "[" + std::to_string(i) + "]"));
  }
  return values;
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw SpecError("command line", std::nullopt, std::nullopt,
                    std::string(what),
                    "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

std::string family_label(const PolynomialFamily& family) {
  std::string label(to_string(family.name));
  for (const auto& [key, value] : family.params) {
    std::ostringstream os;
    os << ' ' << key << '=' << value;
    label += os.str();
  }
  return label;
}

json failure_to_json(const std::optional<Failure>& failure) {
  if (!failure) {
    return nullptr;
  }
  return {{"n", failure->n},
          {"condition", failure->condition},
          {"margin", failure->margin}};
}

json init_to_json(const InitCheck& init) {
  return {{"holds", init.holds},
          {"margin", init.margin},
          {"relative_margin", init.relative_margin},
          {"factor_at_minus_one", init.factor_at_minus_one},
          {"factor_at_plus_one", init.factor_at_plus_one},
          {"consistent_with_delta1", init.consistent_with_delta1}};
}

bool positivity_criterion(Criterion c) { return c != Criterion::Prop2_sigma; }

std::ostream& text_numbers(std::ostream& out) {
  out << std::setprecision(6);
  return out;
}

std::size_t count_endpoint_failures(const TuranReport& report) {
  std::size_t failures = 0;
  for (const auto& e : report.endpoint_zero_checks) {
    failures += e.magnitude > kEndpointZeroTolerance ? 1 : 0;
  }
  return failures;
}

}  // namespace

SpecError::SpecError(const std::string& source,
                     std::optional<std::size_t> line_,
                     std::optional<std::size_t> column_, std::string field_,
                     const std::string& what)
    : Error(describe_position(source, line_, column_, field_) + ": " + what),
      line(line_),
      column(column_),
      field(std::move(field_)) {}

std::optional<OutputFormat> format_from_string(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  return std::nullopt;
}

PolynomialFamily family_from_json(const json& spec, const std::string& source) {
  if (!spec.is_object()) {
    field_error(source, "", "a family spec must be a JSON object");
  }
  if (!spec.contains("family") || !spec["family"].is_string()) {
    field_error(source, "family", "expected a family name string");
  }
  const std::string name = spec["family"].get<std::string>();

  if (name != "custom") {
    for (const auto& [key, value] : spec.items()) {
      if (key != "family" && key != "params") {
        field_error(source, key, "unexpected member for a built-in family");
      }
    }
    std::map<std::string, double> params;
    if (spec.contains("params")) {
      const json& p = spec["params"];
      if (!p.is_object()) {
        field_error(source, "params", "expected an object of numbers");
      }
      for (const auto& [key, value] : p.items()) {
        params[key] = number_field(value, source, "params." + key);
      }
    }
    try {
      return make_family(name, params);
    } catch (const DomainError& e) {
      field_error(source, spec.contains("params") ? "params" : "family",
                  e.what());
    }
  }

  for (const auto& [key, value] : spec.items()) {
    if (key != "family" && key != "alpha" && key != "beta" && key != "gamma" &&
        key != "limits" && key != "symmetric" && key != "form") {
      field_error(source, key, "unexpected member for a custom family");
    }
  }
  for (const char* required : {"alpha", "gamma"}) {
    if (!spec.contains(required)) {
      field_error(source, required, "missing");
    }
  }
  std::vector<double> alpha = number_list(spec, source, "alpha");
  std::vector<double> gamma = number_list(spec, source, "gamma");
  std::vector<double> beta;
  if (spec.contains("beta")) {
    beta = number_list(spec, source, "beta");
  }
  if (alpha.empty() || alpha.size() != gamma.size()) {
    field_error(source, "gamma", "alpha and gamma need the same nonzero length");
  }
  if (!beta.empty() && beta.size() != alpha.size()) {
    field_error(source, "beta", "length differs from alpha");
  }
  std::optional<DeclaredLimits> limits;
  if (spec.contains("limits")) {
    const auto l = number_list(spec, source, "limits");
    if (l.size() != 2) {
      field_error(source, "limits", "expected [alpha_limit, gamma_limit]");
    }
    limits = DeclaredLimits{l[0], l[1]};
  }
  bool symmetric = false;
  if (spec.contains("symmetric")) {
    if (!spec["symmetric"].is_boolean()) {
      field_error(source, "symmetric", "expected true or false");
    }
    symmetric = spec["symmetric"].get<bool>();
  }
  RecurrenceForm form = RecurrenceForm::interval;
  if (spec.contains("form")) {
    const json& f = spec["form"];
    if (f == "half_line") {
      form = RecurrenceForm::half_line;
    } else if (f != "interval") {
      field_error(source, "form", "expected \"interval\" or \"half_line\"");
    }
  }
  const std::size_t size = alpha.size();
  try {
    PolynomialFamily family =
        make_custom(std::move(alpha), std::move(beta), std::move(gamma),
                    limits, symmetric, form);
    validate_sequence(family.sequence, size - 1);
    return family;
  } catch (const InvalidSequence& e) {
    field_error(source, "alpha/beta/gamma[" + std::to_string(e.index) + "]",
                e.what());
  }
}

PolynomialFamily parse_family_spec(std::string_view text,
                                   const std::string& source) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(
        e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SpecError(source, line, column, "", "malformed JSON");
  }
  return family_from_json(spec, source);
}

PolynomialFamily load_family(const RunConfig& config) {
  if (config.family.has_value() == config.spec.has_value()) {
    throw SpecError("command line", std::nullopt, std::nullopt, "family",
                    "give exactly one of --family and --spec");
  }
  if (config.family) {
    try {
      return make_family(*config.family, config.params);
    } catch (const DomainError& e) {
      throw SpecError("command line", std::nullopt, std::nullopt, "family",
                      e.what());
    }
  }
  if (!config.params.empty()) {
    throw SpecError("command line", std::nullopt, std::nullopt, "param",
                    "--param only applies together with --family");
  }
  const std::string& spec = *config.spec;
  if (!spec.empty() && spec.front() == '{') {
    return parse_family_spec(spec, "inline spec");
  }
  std::ifstream in(spec);
  if (!in) {
    throw SpecError(spec, std::nullopt, std::nullopt, "",
                    "cannot open spec file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_family_spec(text.str(), spec);
}

ScanRegion parse_region(std::string_view text, std::size_t n_min,
                        std::size_t n_max) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw SpecError("command line", std::nullopt, std::nullopt, "region",
                    "expected lo,hi,points");
  }
  ScanRegion region;
  region.lo = parse_double(parts[0], "region.lo");
  region.hi = parse_double(parts[1], "region.hi");
  const double points = parse_double(parts[2], "region.points");
  if (!(points >= 2.0) || points != std::floor(points)) {
    throw SpecError("command line", std::nullopt, std::nullopt,
                    "region.points", "expected an integer >= 2");
  }
  region.points = static_cast<std::size_t>(points);
  region.n_min = n_min;
  region.n_max = n_max;
  try {
    validate_region(region);
  } catch (const PreconditionError& e) {
    throw SpecError("command line", std::nullopt, std::nullopt, "region",
                    e.what());
  }
  return region;
}

std::pair<std::string, double> parse_param(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw SpecError("command line", std::nullopt, std::nullopt, "param",
                    "expected k=v, got '" + std::string(text) + "'");
  }
  const std::string key(text.substr(0, eq));
  return {key, parse_double(text.substr(eq + 1), "param." + key)};
}

json to_json(const ScanRegion& region) {
  return {{"lo", region.lo},
          {"hi", region.hi},
          {"points", region.points},
          {"n_min", region.n_min},
          {"n_max", region.n_max}};
}

ScanRegion region_from_json(const json& j) {
  ScanRegion region;
  region.lo = j.at("lo").get<double>();
  region.hi = j.at("hi").get<double>();
  region.points = j.at("points").get<std::size_t>();
  region.n_min = j.at("n_min").get<std::size_t>();
  region.n_max = j.at("n_max").get<std::size_t>();
  return region;
}

json to_json(const TuranReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"n", v.n}, {"x", v.x}, {"delta", v.delta}});
  }
  json endpoints = json::array();
  for (const auto& e : report.endpoint_zero_checks) {
    endpoints.push_back({{"n", e.n}, {"x", e.x}, {"magnitude", e.magnitude}});
  }
  return {{"region", to_json(report.region)},
          {"tol", report.tol},
          {"min_value", report.min_value},
          {"min_n", report.min_n},
          {"min_x", report.min_x},
          {"max_value", report.max_value},
          {"violations", violations},
          {"endpoint_zero_checks", endpoints},
          {"cross_residual_max", report.cross_residual_max},
          {"cross_checked_nodes", report.cross_checked_nodes},
          {"values", report.values}};
}

TuranReport report_from_json(const json& j) {
  TuranReport report;
  report.region = region_from_json(j.at("region"));
  report.tol = j.at("tol").get<double>();
  report.min_value = j.at("min_value").get<double>();
  report.min_n = j.at("min_n").get<std::size_t>();
  report.min_x = j.at("min_x").get<double>();
  report.max_value = j.at("max_value").get<double>();
  for (const auto& v : j.at("violations")) {
    report.violations.push_back({v.at("n").get<std::size_t>(),
                                 v.at("x").get<double>(),
                                 v.at("delta").get<double>()});
  }
  for (const auto& e : j.at("endpoint_zero_checks")) {
    report.endpoint_zero_checks.push_back({e.at("n").get<std::size_t>(),
                                           e.at("x").get<double>(),
                                           e.at("magnitude").get<double>()});
  }
  report.cross_residual_max = j.at("cross_residual_max").get<double>();
  report.cross_checked_nodes = j.at("cross_checked_nodes").get<std::size_t>();
  report.values = j.at("values").get<std::vector<double>>();
  return report;
}

json to_json(const CriterionVerdict& verdict) {
  return {{"criterion", std::string(to_string(verdict.criterion))},
          {"holds", verdict.holds},
          {"verified_to", verdict.verified_to},
          {"first_failure", failure_to_json(verdict.first_failure)},
          {"first_index", verdict.first_index},
          {"per_n_margins", verdict.per_n_margins},
          {"note", verdict.note}};
}

CriterionVerdict verdict_from_json(const json& j) {
  CriterionVerdict verdict;
  const std::string name = j.at("criterion").get<std::string>();
  const auto criterion = criterion_from_string(name);
  if (!criterion) {
    throw SpecError("report", std::nullopt, std::nullopt, "criterion",
                    "unknown criterion '" + name + "'");
  }
  verdict.criterion = *criterion;
  verdict.holds = j.at("holds").get<bool>();
  verdict.verified_to = j.at("verified_to").get<std::size_t>();
  if (const json& f = j.at("first_failure"); !f.is_null()) {
    verdict.first_failure = Failure{f.at("n").get<std::size_t>(),
                                    f.at("condition").get<std::string>(),
                                    f.at("margin").get<double>()};
  }
  verdict.first_index = j.at("first_index").get<std::size_t>();
  verdict.per_n_margins = j.at("per_n_margins").get<std::vector<double>>();
  verdict.note = j.at("note").get<std::string>();
  return verdict;
}

json to_json(const NegativeWindow& w) {
  json j = {{"applicable", w.applicable},
            {"a", w.a},
            {"r", w.r},
            {"confirmed", w.confirmed},
            {"sign_change_at_r", w.sign_change_at_r},
            {"sqrt_r", w.sqrt_r},
            {"negative_below_sqrt_r", w.negative_below_sqrt_r},
            {"sign_change_at_sqrt_r", w.sign_change_at_sqrt_r},
            {"negative_nodes", w.negative_nodes},
            {"window_nodes", w.window_nodes},
            {"factor_residual", w.factor_residual},
            {"quartic_at_sqrt_r", w.quartic_at_sqrt_r}};
  j["first_nonnegative_x"] =
      w.first_nonnegative_x ? json(*w.first_nonnegative_x) : json(nullptr);
  return j;
}

void write_csv(std::ostream& out, const TuranReport& report) {
  auto number = [](double v) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, v);
    return std::string(buffer, result.ptr);
  };
  out << "n,x,delta,flag\n";
  if (!report.values.empty()) {
    for (std::size_t i = 0; i < report.region.points; ++i) {
      const double x = report.region.node(i);
      for (std::size_t n = report.region.n_min; n <= report.region.n_max;
           ++n) {
        const double delta = report.value(i, n);
        out << n << ',' << number(x) << ',' << number(delta) << ','
            << (delta < -report.tol ? "violation" : "ok") << '\n';
      }
    }
  } else {
    for (const auto& v : report.violations) {
      out << v.n << ',' << number(v.x) << ',' << number(v.delta)
          << ",violation\n";
    }
  }
  for (const auto& e : report.endpoint_zero_checks) {
    out << e.n << ',' << number(e.x) << ',' << number(e.magnitude) << ','
        << (e.magnitude > kEndpointZeroTolerance ? "endpoint_nonzero"
                                                 : "endpoint")
        << '\n';
  }
}

CheckOutcome run_checks(const PolynomialFamily& family, std::size_t N) {
  CheckOutcome outcome;
  outcome.family = family_label(family);
  outcome.n_max = N;
  const CoefficientSequence& seq = family.sequence;

  auto record = [&](const CriterionVerdict& v) {
    outcome.verdicts.push_back(v);
    if (v.holds && positivity_criterion(v.criterion)) {
      outcome.applies.push_back(v.criterion);
    }
  };
  auto attempt = [&](std::string_view label, auto&& run) {
    try {
      run();
    } catch (const Error& e) {
      outcome.notes.push_back(std::string(label) + " not applicable: " +
                              e.what());
    }
  };

  if (seq.form() == RecurrenceForm::half_line) {
    attempt("Thm5", [&] {
      const auto r = check_thm5(seq, N);
      record(r.part_i);
      record(r.part_ii);
    });
    attempt("Prop3", [&] {
      const auto r = check_prop3_hypothesis(seq, N);
      record(r.verdict);
      if (r.verdict.holds) {
        outcome.notes.push_back(
            std::string("Prop3: alpha_n nondecreasing: ") +
            (r.alpha_nondecreasing ? "yes" : "no"));
      }
    });
    return outcome;
  }

  if (seq.symmetric()) {
    if (seq.limits().has_value()) {
      attempt("Cor1", [&] {
        const auto r = check_cor1(seq, N);
        record(r.sub_i);
        record(r.sub_ii);
      });
    }
    if (family.auxiliary) {
      attempt("Thm1 after normalization at 1", [&] {
        const auto normalized = normalize_at_one(seq, N);
        auto r = check_thm1(normalized.sequence, N);
        r.part_i.note = "coefficients normalized at x=1";
        r.part_ii.note = "coefficients normalized at x=1";
        record(r.part_i);
        record(r.part_ii);
      });
    } else {
      attempt("Thm1", [&] {
        const auto r = check_thm1(seq, N);
        record(r.part_i);
        record(r.part_ii);
      });
    }
  }

  if (seq.row_sum() && approx_eq(*seq.row_sum(), 1.0)) {
    attempt("Thm4", [&] {
      const auto r = check_thm4(seq, N);
      outcome.thm4_init = r.init;
      record(r.verdict);
    });
  } else if (!seq.symmetric()) {
    outcome.notes.push_back(
        "Thm4 not applicable: row sums are not identically 1");
  }
  outcome.notes.push_back(
      "Prop2_sigma needs renormalization constants; use the library API");
  return outcome;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PolynomialFamily family = load_family(config);
    if (config.xs.empty()) {
      throw SpecError("command line", std::nullopt, std::nullopt, "x",
                      "eval needs at least one --x");
    }
    std::size_t N = config.n_max.value_or(10);
    if (const auto horizon = family.sequence.horizon(); horizon) {
      N = std::min(N, *horizon + 1);
    }
    const CoefficientSequence seq =
        config.raw ? family.sequence : target_sequence(family, N + 1);
    std::vector<EvaluationTable> tables;
    for (double x : config.xs) {
      tables.push_back(eval_polynomials(seq, x, N));
    }
    switch (config.format) {
      case OutputFormat::json: {
        json rows = json::array();
        for (const auto& t : tables) {
          rows.push_back({{"x", t.x}, {"values", t.values}});
        }
        out << json{{"family", family_label(family)},
                    {"normalized", family.auxiliary && !config.raw},
                    {"n_max", N},
                    {"rows", rows}}
                   .dump(2)
            << '\n';
        break;
      }
      case OutputFormat::csv: {
        out << "n,x,value\n";
        for (const auto& t : tables) {
          for (std::size_t n = 0; n <= N; ++n) {
            char xb[64];
            char vb[64];
            const auto xe = std::to_chars(xb, xb + sizeof xb, t.x).ptr;
            const auto ve = std::to_chars(vb, vb + sizeof vb, t[n]).ptr;
            out << n << ',' << std::string_view(xb, xe - xb) << ','
                << std::string_view(vb, ve - vb) << '\n';
          }
        }
        break;
      }
      case OutputFormat::text: {
        text_numbers(out) << "family " << family_label(family) << '\n';
        for (const auto& t : tables) {
          out << "x = " << t.x << '\n';
          for (std::size_t n = 0; n <= N; ++n) {
            out << "  p_" << n << " = " << t[n] << '\n';
          }
        }
        break;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "turan eval: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PolynomialFamily family = load_family(config);
    const std::size_t N = config.n_max.value_or(kDefaultHorizon);
    const CheckOutcome outcome = run_checks(family, N);
    switch (config.format) {
      case OutputFormat::json: {
        json verdicts = json::array();
        for (const auto& v : outcome.verdicts) {
          verdicts.push_back(to_json(v));
        }
        json applies = json::array();
        for (Criterion c : outcome.applies) {
          applies.push_back(std::string(to_string(c)));
        }
        json j = {{"family", outcome.family},
                  {"n_max", outcome.n_max},
                  {"verdicts", verdicts},
                  {"applies", applies},
                  {"notes", outcome.notes}};
        if (outcome.thm4_init) {
          j["thm4_init"] = init_to_json(*outcome.thm4_init);
        }
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv: {
        out << "criterion,holds,verified_to,first_failure_n,condition,margin\n";
        for (const auto& v : outcome.verdicts) {
          out << to_string(v.criterion) << ',' << (v.holds ? "true" : "false")
              << ',' << v.verified_to << ',';
          if (v.first_failure) {
            char mb[64];
            const auto me = std::to_chars(mb, mb + sizeof mb,
                                          v.first_failure->margin)
                                .ptr;
            out << v.first_failure->n << ",\"" << v.first_failure->condition
                << "\"," << std::string_view(mb, me - mb);
          } else {
            out << ",,";
          }
          out << '\n';
        }
        break;
      }
      case OutputFormat::text: {
        text_numbers(out) << "family " << outcome.family << ", N = "
                          << outcome.n_max << '\n';
        if (outcome.thm4_init) {
          out << "  Thm4 init condition: "
              << (outcome.thm4_init->holds ? "holds" : "fails")
              << " (margin " << outcome.thm4_init->margin << ")\n";
        }
        for (const auto& v : outcome.verdicts) {
          out << "  " << std::left << std::setw(18) << to_string(v.criterion)
              << (v.holds ? "holds" : "fails") << "  verified_to="
              << v.verified_to;
          if (v.first_failure) {
            out << "  first failure n=" << v.first_failure->n << ": "
                << v.first_failure->condition << " (margin "
                << v.first_failure->margin << ")";
          }
          if (!v.note.empty()) {
            out << "  [" << v.note << "]";
          }
          out << '\n';
        }
        for (const auto& note : outcome.notes) {
          out << "  note: " << note << '\n';
        }
        out << "applies:";
        if (outcome.applies.empty()) {
          out << " none";
        }
        for (Criterion c : outcome.applies) {
          out << ' ' << to_string(c);
        }
        out << '\n';
        break;
      }
    }
    return outcome.applies.empty() ? kExitCriterionFailure : kExitOk;
  } catch (const Error& e) {
    err << "turan check: " << e.what() << '\n';
    return kExitInputError;
  }
}

int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const PolynomialFamily family = load_family(config);
    const std::size_t N = config.n_max.value_or(50);
    ScanRegion region;
    if (config.region) {
      region = *config.region;
      region.n_min = 1;
      region.n_max = N;
    } else {
      const Interval window = default_window(family);
      region.lo = window.lo;
      region.hi = window.hi;
      region.n_max = N;
    }
    if (const auto horizon = family.sequence.horizon(); horizon) {
      region.n_max = std::min(region.n_max, *horizon);
    }
    validate_region(region);
    const CoefficientSequence seq =
        config.raw ? family.sequence
                   : target_sequence(family, region.n_max + 1);

    ScanOptions options;
    options.tol = config.tol.value_or(kDefaultScanTolerance);
    options.threads = config.threads;
    options.keep_values = config.format == OutputFormat::csv;
    TuranReport report = scan_sign(seq, region, options);
    if (const auto a = natural_endpoint(seq)) {
      report.endpoint_zero_checks = endpoint_equality(seq, *a, region.n_max);
    }
    std::optional<NegativeWindow> window;
    if (seq.symmetric() && seq.form() == RecurrenceForm::interval &&
        seq.row_sum()) {
      if (NegativeWindow w = remark_window(seq); w.applicable) {
        window = w;
      }
    }
    const std::size_t endpoint_failures = count_endpoint_failures(report);

    switch (config.format) {
      case OutputFormat::json: {
        json j = {{"family", family_label(family)},
                  {"normalized", family.auxiliary && !config.raw},
                  {"report", to_json(report)},
                  {"endpoint_failures", endpoint_failures}};
        if (window) {
          j["remark_window"] = to_json(*window);
        }
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::csv:
        write_csv(out, report);
        break;
      case OutputFormat::text: {
        text_numbers(out) << "family " << family_label(family) << '\n'
                          << "  region [" << region.lo << ", " << region.hi
                          << "] x " << region.points << " points, n = "
                          << region.n_min << ".." << region.n_max << '\n'
                          << "  min delta " << report.min_value << " at n="
                          << report.min_n << ", x=" << report.min_x << '\n'
                          << "  max delta " << report.max_value << '\n'
                          << "  violations below -" << report.tol << ": "
                          << report.violations.size() << '\n';
        const std::size_t shown =
            std::min<std::size_t>(report.violations.size(), 10);
        for (std::size_t k = 0; k < shown; ++k) {
          const auto& v = report.violations[k];
          out << "    n=" << v.n << " x=" << v.x << " delta=" << v.delta
              << '\n';
        }
        if (shown < report.violations.size()) {
          out << "    ... " << report.violations.size() - shown << " more\n";
        }
        out << "  identity cross-check residual " << report.cross_residual_max
            << " over " << report.cross_checked_nodes << " nodes\n";
        if (!report.endpoint_zero_checks.empty()) {
          double worst = 0.0;
          for (const auto& e : report.endpoint_zero_checks) {
            worst = std::max(worst, e.magnitude);
          }
          out << "  endpoint |delta| max " << worst << " ("
              << endpoint_failures << " above " << kEndpointZeroTolerance
              << ")\n";
        }
        if (window) {
          out << "  delta_2 window: r=" << window->r
              << " negative on (a, r): "
              << (window->confirmed ? "yes" : "no") << ", on (a, sqrt r): "
              << (window->negative_below_sqrt_r ? "yes" : "no") << '\n';
        }
        break;
      }
    }
    return report.violations.empty() && endpoint_failures == 0
               ? kExitOk
               : kExitScanViolation;
  } catch (const Error& e) {
    err << "turan scan: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace turan
