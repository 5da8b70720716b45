// Acceptance run: one PASS/FAIL line per criterion, diagnostics indented
// below it. Exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/criteria.hpp"
#include "turan/determinants.hpp"
#include "turan/errors.hpp"
#include "turan/families.hpp"
#include "turan/report.hpp"
#include "turan/scanner.hpp"

using namespace turan;
using nlohmann::json;

namespace {

const double kLambdas[] = {-0.45, -0.25, 0.0, 0.5, 1.0, 3.0};
const double kBetas[] = {-0.9, -0.5, 0.0, 0.25, 0.5, 0.9};
const double kQs[] = {0.1, 0.3, 0.5, 0.7, 0.9};
const double kPollaczek[] = {0.5, 1.0, 2.0};
const double kLaguerre[] = {-0.9, -0.5, 0.0, 1.0, 2.5};

class Outcome {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (failures_ < 8) note("failed: " + what);
      ++failures_;
    }
  }
  void note(const std::string& line) { notes_.push_back(line); }
  bool pass() const { return pass_; }
  int failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

ScanRegion region(double lo, double hi, std::size_t points,
                  std::size_t n_max) {
  ScanRegion r;
  r.lo = lo;
  r.hi = hi;
  r.points = points;
  r.n_max = n_max;
  return r;
}

std::string label(const PolynomialFamily& f) {
  std::string s(to_string(f.name));
  for (const auto& [k, v] : f.params) s += " " + k + "=" + fmt(v);
  return s;
}

std::vector<PolynomialFamily> lattice() {
  std::vector<PolynomialFamily> out;
  for (double l : kLambdas) out.push_back(make_ultraspherical(l));
  out.push_back(make_chebyshev());
  for (double b : kBetas)
    for (double q : kQs) out.push_back(make_q_ultraspherical(b, q));
  for (double l : kPollaczek)
    for (double a : kPollaczek) out.push_back(make_pollaczek(l, a));
  for (double a : kLaguerre) out.push_back(make_laguerre(a));
  out.push_back(make_sec6_example());
  return out;
}

Outcome identity_agreement() {
  Outcome o;
  constexpr std::size_t N = 100;
  double worst = 0.0;
  std::size_t families = 0;
  for (const auto& f : lattice()) {
    const auto seq = target_sequence(f, N + 1);
    const Interval w = default_window(f);
    const ScanRegion grid = region(w.lo, w.hi, 401, N);
    ++families;
    for (std::size_t i = 0; i < grid.points; ++i) {
      const auto t = eval_polynomials(seq, grid.node(i), N + 1);
      for (const auto& s : determinant_samples(t, seq, 1, N)) {
        const bool all = s.delta_id1 && s.delta_id2 && s.delta_id3;
        o.require(all, label(f) + ": identity unavailable at n=" +
                           std::to_string(s.n));
        if (!all) continue;
        const double scale = std::max(1.0, std::abs(s.delta_direct));
        for (double v : {*s.delta_id1, *s.delta_id2, *s.delta_id3}) {
          const double rel = std::abs(v - s.delta_direct) / scale;
          worst = std::max(worst, rel);
          o.require(rel <= 1e-10, label(f) + " n=" + std::to_string(s.n) +
                                      " x=" + fmt(s.x) + " rel=" + fmt(rel));
        }
      }
    }
  }
  o.note(std::to_string(families) + " families, worst relative gap " +
         fmt(worst));
  return o;
}

Outcome ultraspherical_sign() {
  Outcome o;
  for (double l : kLambdas) {
    const auto seq = make_ultraspherical(l).sequence;
    const auto inside = scan_sign(seq, region(-1, 1, 401, 50));
    o.require(inside.min_value >= -1e-9,
              "lambda=" + fmt(l) + " min " + fmt(inside.min_value));
    double endpoint = 0.0;
    for (const auto& e : endpoint_equality(seq, 1.0, 50)) {
      endpoint = std::max(endpoint, e.magnitude);
    }
    o.require(endpoint <= 1e-10,
              "lambda=" + fmt(l) + " |delta(+-1)| " + fmt(endpoint));
    std::string outside_note;
    if (l >= 0.0) {
      // pₙ² and pₙ₋₁pₙ₊₁ reach 1e22 here; the recursive identity sums terms
      // of one sign instead of cancelling them.
      double outside_max = -INFINITY;
      double direct_max = -INFINITY;
      for (const auto& r :
           {region(1.05, 2, 191, 20), region(-2, -1.05, 191, 20)}) {
        direct_max = std::max(direct_max, scan_sign(seq, r).max_value);
        for (std::size_t i = 0; i < r.points; ++i) {
          const auto t = eval_polynomials(seq, r.node(i), 21);
          for (const auto& s : determinant_samples(t, seq, 1, 20)) {
            outside_max = std::max(outside_max, *s.delta_id2);
          }
        }
      }
      o.require(outside_max < 0.0,
                "lambda=" + fmt(l) + " outside max " + fmt(outside_max));
      outside_note = ", max for 1.05 <= |x| <= 2 " + fmt(outside_max) +
                     " (direct form " + fmt(direct_max) + ")";
    }
    o.note("lambda=" + fmt(l) + ": min on [-1,1] " + fmt(inside.min_value) +
           ", max endpoint " + fmt(endpoint) + outside_note);
  }
  return o;
}

Outcome chebyshev_oracle() {
  Outcome o;
  const auto seq = make_ultraspherical(0.0).sequence;
  const ScanRegion grid = region(-1, 1, 401, 50);
  double worst = 0.0;
  double worst_trig = 0.0;
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.node(i);
    const double theta = std::acos(x);
    const auto trig = [&](std::size_t n) {
      return std::cos(static_cast<double>(n) * theta);
    };
    const auto t = eval_polynomials(seq, x, 51);
    for (std::size_t n = 1; n <= 50; ++n) {
      const double expected = 1.0 - x * x;
      const double from_trig = trig(n) * trig(n) - trig(n - 1) * trig(n + 1);
      worst = std::max(worst, std::abs(turan_direct(t, n) - expected));
      worst_trig = std::max(worst_trig, std::abs(from_trig - expected));
    }
  }
  o.require(worst <= 1e-10, "recurrence gap " + fmt(worst));
  o.require(worst_trig <= 1e-10, "trig oracle gap " + fmt(worst_trig));
  o.note("max |delta - (1 - x^2)|: recurrence " + fmt(worst) +
         ", cos(n acos x) " + fmt(worst_trig));
  return o;
}

double max_endpoint(const CoefficientSequence& seq, std::size_t n_max) {
  double m = 0.0;
  for (const auto& e : endpoint_equality(seq, 1.0, n_max)) {
    m = std::max(m, e.magnitude);
  }
  return m;
}

Outcome q_ultraspherical() {
  Outcome o;
  std::size_t count = 0;
  for (double b : kBetas) {
    for (double q : kQs) {
      const auto f = make_q_ultraspherical(b, q);
      const std::string name = label(f);
      const auto cor = check_cor1(f.sequence, 500);
      o.require(cor.fired() != nullptr, name + ": neither limit sub-case holds");
      const auto seq = target_sequence(f, 500);
      const auto thm = check_thm1(seq, 500);
      o.require(thm.part_i.holds && thm.part_i.verified_to >= 500,
                name + ": normalized criterion (i) verified_to " +
                    std::to_string(thm.part_i.verified_to));
      const auto rep = scan_sign(seq, region(-1, 1, 401, 50));
      o.require(rep.min_value >= -1e-9, name + ": min " + fmt(rep.min_value));
      const double endpoint = max_endpoint(seq, 50);
      o.require(endpoint <= 1e-10, name + ": endpoint " + fmt(endpoint));
      ++count;
    }
  }
  o.note(std::to_string(count) + " (beta, q) pairs");
  return o;
}

Outcome pollaczek() {
  Outcome o;
  constexpr std::size_t N = 500;
  for (double l : kPollaczek) {
    for (double a : kPollaczek) {
      const auto f = make_pollaczek(l, a);
      const std::string name = label(f);
      const auto cor = check_cor1(f.sequence, N);
      const auto normalized = normalize_at_one(f.sequence, N);
      const auto thm = check_thm1(normalized.sequence, N);
      o.require(thm.part_i.holds && thm.part_i.verified_to >= N,
                name + ": normalized criterion (i)");
      const auto rep = scan_sign(normalized.sequence, region(-1, 1, 401, 50));
      o.require(rep.min_value >= -1e-9, name + ": min " + fmt(rep.min_value));
      const double endpoint = max_endpoint(normalized.sequence, 50);
      o.require(endpoint <= 1e-10, name + ": endpoint " + fmt(endpoint));

      const bool expect_i = l >= a;
      const bool expect_ii = l <= a;
      const bool matches =
          (expect_i && cor.sub_i.holds) || (expect_ii && cor.sub_ii.holds);
      o.require(matches, name + ": sub-case for sign(lambda - a) not reported");

      const double ratio = normalized.ledger.ratios.at(N - 1);
      const double target = 1.0 / cor.a;
      o.require(std::abs(ratio - target) <= 1e-6,
                name + ": ratio " + fmt(ratio) + " vs 1/a = " + fmt(target));
      o.note(name + ": pipeline " +
             (thm.part_i.holds && rep.clean() && endpoint <= 1e-10 ? "passes"
                                                                   : "fails") +
             ", sub_i " + (cor.sub_i.holds ? "holds" : "fails") +
             ", sub_ii " + (cor.sub_ii.holds ? "holds" : "fails") +
             ", p_{N-1}(1)/p_N(1) at N=500 " + fmt(ratio) + ", 1/a " +
             fmt(target));
    }
  }
  return o;
}

Outcome nonsymmetric_example() {
  Outcome o;
  const auto seq = make_sec6_example().sequence;
  const auto init = check_thm4_init(seq);
  o.require(init.holds, "init condition");
  std::size_t iii_count = 0;
  std::size_t i_count = 0;
  double ratio_gap = 0.0;
  for (std::size_t n = 2; n <= 1000; ++n) {
    const auto w = check_thm4_condition(seq, n);
    if (w.satisfied[2]) ++iii_count;
    if (w.satisfied[0]) ++i_count;
    o.require(w.satisfied[2], "condition (iii) at n=" + std::to_string(n));
    if (w.increment_ratio) {
      ratio_gap = std::max(ratio_gap, std::abs(*w.increment_ratio - 2.0));
    } else {
      o.require(false, "no increment ratio at n=" + std::to_string(n));
    }
  }
  o.require(ratio_gap <= 1e-12, "ratio gap " + fmt(ratio_gap));
  const auto rep = scan_sign(seq, region(-1, 1, 401, 50));
  o.require(rep.clean(), "scan min " + fmt(rep.min_value));
  o.require(support_left_heuristic(seq, 200).holds, "sign pattern at -1");
  o.note("condition (iii) at " + std::to_string(iii_count) +
         " of 999 indices, condition (i) at " + std::to_string(i_count));
  o.note("max |ratio - 2| " + fmt(ratio_gap) + ", scan min " +
         fmt(rep.min_value));
  return o;
}

Outcome laguerre() {
  Outcome o;
  const ScanRegion grid = region(-10, 50, 301, 50);
  for (double a : kLaguerre) {
    const auto seq = make_laguerre(a).sequence;
    double worst = 0.0;
    double min_delta = INFINITY;
    double min_away = INFINITY;
    for (std::size_t i = 0; i < grid.points; ++i) {
      const double x = grid.node(i);
      const auto t = eval_polynomials(seq, x, 51);
      for (std::size_t n = 1; n <= 50; ++n) {
        const double direct = turan_direct(t, n);
        const double rel = std::abs(prop3_sum(seq, x, n) - direct) /
                           std::max(1.0, std::abs(direct));
        worst = std::max(worst, rel);
        min_delta = std::min(min_delta, direct);
        if (std::abs(x) >= 0.1) min_away = std::min(min_away, direct);
      }
    }
    const auto at_zero = eval_polynomials(seq, 0.0, 51);
    double zero = 0.0;
    for (std::size_t n = 1; n <= 50; ++n) {
      zero = std::max(zero, std::abs(turan_direct(at_zero, n)));
    }
    const std::string name = "alpha=" + fmt(a);
    o.require(worst <= 1e-9, name + ": sum formula gap " + fmt(worst));
    o.require(min_delta >= -1e-9, name + ": min " + fmt(min_delta));
    o.require(zero <= 1e-12, name + ": |delta(0)| " + fmt(zero));
    o.require(min_away > 0.0, name + ": min at |x| >= 0.1 " + fmt(min_away));
    o.note(name + ": sum gap " + fmt(worst) + ", |delta(0)| " + fmt(zero) +
           ", min at |x| >= 0.1 " + fmt(min_away));
  }
  return o;
}

Outcome decreasing_alpha() {
  Outcome o;
  const auto seq =
      make_custom({0, 0.7, 0.6, 0.55, 0.55, 0.55, 0.55, 0.55}, {},
                  {1, 0.3, 0.4, 0.45, 0.45, 0.45, 0.45, 0.45}, std::nullopt,
                  true)
          .sequence;
  const auto w = remark_window(seq);
  o.require(w.applicable, "window not applicable");
  o.require(std::abs(w.r - 1.96) <= 1e-12, "r = " + fmt(w.r));
  o.require(w.confirmed, "delta_2 < 0 on all of (1, r): " +
                             std::to_string(w.negative_nodes) + " of " +
                             std::to_string(w.window_nodes) +
                             " interior nodes negative");
  o.require(w.factor_residual <= 1e-12,
            "factored form residual " + fmt(w.factor_residual));
  o.note("r " + fmt(w.r) + ", factored form residual " +
         fmt(w.factor_residual));
  o.note("sqrt(r) " + fmt(w.sqrt_r) + ": negative on (1, sqrt r) " +
         (w.negative_below_sqrt_r ? "yes" : "no") + ", sign change at sqrt r " +
         (w.sign_change_at_sqrt_r ? "yes" : "no") + ", sign change at r " +
         (w.sign_change_at_r ? "yes" : "no"));
  if (w.first_nonnegative_x) {
    o.note("first node of (1, r) with delta_2 >= 0: " +
           fmt(*w.first_nonnegative_x));
  }
  return o;
}

Outcome sigma_transfer() {
  Outcome o;
  const auto seq = make_ultraspherical(0.5).sequence;
  struct Case {
    std::string name;
    std::function<double(std::size_t)> sigma;
    bool log_concave;
    std::size_t n_max;
  };
  const std::vector<Case> cases = {
      {"0.5^n", [](std::size_t n) { return std::pow(0.5, n); }, true, 50},
      {"1/n!", [](std::size_t n) { return 1.0 / std::tgamma(n + 1.0); }, true,
       50},
      {"2^(n^2)",
       [](std::size_t n) {
         return std::exp2(static_cast<double>(n) * static_cast<double>(n));
       },
       false, 20},
  };
  for (const auto& c : cases) {
    const SigmaSequence sigma(c.sigma);
    const auto t = eval_polynomials(seq, 1.0, c.n_max + 1);
    double worst = 0.0;
    for (std::size_t n = 1; n <= c.n_max; ++n) {
      const double s = sigma(n);
      const double expected = s * s - sigma(n - 1) * sigma(n + 1);
      const double got = renormalized_determinant(t, sigma, n);
      worst = std::max(worst, std::abs(got - expected) /
                                  std::max(1.0, std::abs(s * s)));
    }
    o.require(worst <= 1e-12, c.name + ": gap at x=1 " + fmt(worst));
    o.require(check_sigma_transfer(sigma, c.n_max).holds == c.log_concave,
              c.name + ": log-concavity verdict");
    const auto rep =
        scan_sign(renormalize(seq, sigma), region(-1, 1, 401, c.n_max));
    if (c.log_concave) {
      o.require(rep.clean(), c.name + ": scan min " + fmt(rep.min_value));
    } else {
      const bool at_one =
          std::any_of(rep.violations.begin(), rep.violations.end(),
                      [](const Violation& v) { return v.x == 1.0; });
      o.require(at_one, c.name + ": no violation at x=1");
    }
    o.note(c.name + ": gap at x=1 " + fmt(worst) + ", scan min " +
           fmt(rep.min_value) + ", violations " +
           std::to_string(rep.violations.size()));
  }
  return o;
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_contract() {
  Outcome o;
  const auto seq = make_ultraspherical(0.5).sequence;
  ScanOptions options;
  options.keep_values = true;
  auto rep = scan_sign(seq, region(-1.2, 1.2, 97, 12), options);
  rep.endpoint_zero_checks = endpoint_equality(seq, 1.0, 12);
  const auto back = report_from_json(json::parse(to_json(rep).dump()));
  o.require(back == rep, "scan report round trip");
  const auto verdict = check_thm1(seq, 200).part_i;
  o.require(verdict_from_json(json::parse(to_json(verdict).dump())) == verdict,
            "verdict round trip");

  const std::string cli = TURAN_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path() / "turan_acceptance";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "scan.json").string();
  const int pass = shell(cli + " scan --family legendre --n-max 30 " +
                         "--format json --out " + out);
  o.require(pass == kExitOk, "pass run exit " + std::to_string(pass));
  std::ifstream in(out);
  const auto file_report = report_from_json(json::parse(in).at("report"));
  o.require(file_report.clean(), "written report lists violations");

  const auto spec = (dir / "fails.json").string();
  std::ofstream(spec) << R"({"family":"custom","alpha":[0,0.05,0.5,0.2],
      "beta":[0,0.75,0,0.3],"gamma":[1,0.2,0.5,0.5]})";
  const int fail = shell(cli + " check --spec " + spec + " > /dev/null");
  o.require(fail == kExitCriterionFailure,
            "criterion-fail run exit " + std::to_string(fail));
  const int violation = shell(
      cli + " scan --family legendre --region 1.05,2,50 --n-max 5 > /dev/null");
  o.require(violation == kExitScanViolation,
            "scan-violation run exit " + std::to_string(violation));
  std::filesystem::remove_all(dir);
  o.note("exit codes: pass " + std::to_string(pass) + ", criterion-fail " +
         std::to_string(fail) + ", scan-violation " +
         std::to_string(violation));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria =
      {
          {"identity agreement on the family lattice", identity_agreement},
          {"ultraspherical sign pattern", ultraspherical_sign},
          {"chebyshev trigonometric oracle", chebyshev_oracle},
          {"q-ultraspherical normalization pipeline", q_ultraspherical},
          {"pollaczek normalization pipeline", pollaczek},
          {"nonsymmetric row-sum-1 example", nonsymmetric_example},
          {"laguerre sum formula and sign", laguerre},
          {"decreasing-alpha counterexample window", decreasing_alpha},
          {"renormalization by sigma", sigma_transfer},
          {"command-line contract", cli_contract},
      };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (o.pass() ? "PASS" : "FAIL")
              << "  " << criteria[k].first << '\n';
    for (const auto& line : o.notes()) std::cout << "    " << line << '\n';
    if (o.failures() > 8) {
      std::cout << "    (" << o.failures() - 8 << " more failures)\n";
    }
    if (!o.pass()) ++failed;
  }
  std::cout << criteria.size() - failed << " of " << criteria.size()
            << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
