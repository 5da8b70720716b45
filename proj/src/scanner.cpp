#include "turan/scanner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <string_view>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "turan/determinants.hpp"
#include "turan/errors.hpp"

namespace turan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct NodeResult {
  double min = kInf;
  std::size_t min_n = 0;
  double max = -kInf;
  std::vector<Violation> violations;
  double residual = 0.0;
  bool checked = false;
  std::vector<double> values;
  std::exception_ptr error;
};

std::vector<char> subsample_mask(std::size_t points, double fraction,
                                 std::uint64_t seed) {
  std::vector<char> mask(points, 0);
  if (fraction <= 0.0) {
    return mask;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool any = false;
  for (auto& m : mask) {
    m = unit(rng) < fraction ? 1 : 0;
    any = any || m;
  }
  if (!any) {
    mask[points / 2] = 1;
  }
  return mask;
}

NodeResult scan_node(const CoefficientSequence& seq, const ScanRegion& region,
                     const ScanOptions& options, std::size_t i, bool check) {
  NodeResult out;
  try {
    const double x = region.node(i);
    const EvaluationTable table = eval_polynomials(seq, x, region.n_max + 1);
    const auto& p = table.values;
    if (options.keep_values) {
      out.values.reserve(region.n_max - region.n_min + 1);
    }
    for (std::size_t n = region.n_min; n <= region.n_max; ++n) {
      const double delta = p[n] * p[n] - p[n - 1] * p[n + 1];
      if (delta < out.min) {
        out.min = delta;
        out.min_n = n;
      }
      out.max = std::max(out.max, delta);
      if (delta < -options.tol) {
        out.violations.push_back({n, x, delta});
      }
      if (options.keep_values) {
        out.values.push_back(delta);
      }
    }
    if (check) {
      out.checked = true;
      for (const auto& s :
           determinant_samples(table, seq, region.n_min, region.n_max)) {
        out.residual = std::max(out.residual, s.max_cross_residual);
      }
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

// Ordered reduction over nodes, so the report does not depend on how the
// nodes were scheduled.
TuranReport reduce(const ScanRegion& region, const ScanOptions& options,
                   std::vector<NodeResult>& nodes) {
  for (auto& node : nodes) {
    if (node.error) {
      std::rethrow_exception(node.error);
    }
  }
  TuranReport report;
  report.region = region;
  report.tol = options.tol;
  report.min_value = kInf;
  report.max_value = -kInf;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    NodeResult& node = nodes[i];
    if (node.min < report.min_value) {
      report.min_value = node.min;
      report.min_n = node.min_n;
      report.min_x = region.node(i);
    }
    report.max_value = std::max(report.max_value, node.max);
    report.violations.insert(report.violations.end(), node.violations.begin(),
                             node.violations.end());
    if (node.checked) {
      ++report.cross_checked_nodes;
      report.cross_residual_max =
          std::max(report.cross_residual_max, node.residual);
    }
    if (options.keep_values) {
      report.values.insert(report.values.end(), node.values.begin(),
                           node.values.end());
    }
  }
  std::stable_sort(
      report.violations.begin(), report.violations.end(),
      [](const Violation& a, const Violation& b) { return a.n < b.n; });
  return report;
}

double delta_two(const CoefficientSequence& seq, double x) {
  return turan_direct(eval_polynomials(seq, x, 3), 2);
}

}  // namespace

double ScanRegion::node(std::size_t i) const {
  if (i + 1 >= points) {
    return hi;
  }
  return lo + ((hi - lo) * static_cast<double>(i)) /
                  static_cast<double>(points - 1);
}

void validate_region(const ScanRegion& region) {
  if (!(std::isfinite(region.lo) && std::isfinite(region.hi) &&
        region.lo < region.hi)) {
    throw PreconditionError("scan region needs finite lo < hi");
  }
  if (region.points < 2) {
    throw PreconditionError("scan region needs at least 2 points");
  }
  if (region.n_min < 1 || region.n_min > region.n_max) {
    throw PreconditionError("scan region needs 1 <= n_min <= n_max");
  }
}

double TuranReport::value(std::size_t node, std::size_t n) const {
  const std::size_t width = region.n_max - region.n_min + 1;
  return values.at(node * width + (n - region.n_min));
}

int threads_from_env() {
  if (const char* env = std::getenv("TURAN_THREADS")) {
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) {
      return value;
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

TuranReport scan_sign(const CoefficientSequence& seq, const ScanRegion& region,
                      const ScanOptions& options) {
  validate_region(region);
  const auto mask =
      subsample_mask(region.points, options.subsample_fraction, options.seed);
  std::vector<NodeResult> nodes(region.points);
  const int threads = options.threads > 0 ? options.threads : threads_from_env();
  const auto count = static_cast<std::ptrdiff_t>(region.points);
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto node = static_cast<std::size_t>(i);
    nodes[node] = scan_node(seq, region, options, node, mask[node] != 0);
  }
  (void)threads;
  return reduce(region, options, nodes);
}

TuranReport scan_sign_reference(const CoefficientSequence& seq,
                                const ScanRegion& region,
                                const ScanOptions& options) {
  validate_region(region);
  const auto mask =
      subsample_mask(region.points, options.subsample_fraction, options.seed);
  std::vector<NodeResult> nodes(region.points);
  for (std::size_t i = 0; i < region.points; ++i) {
    nodes[i] = scan_node(seq, region, options, i, mask[i] != 0);
  }
  return reduce(region, options, nodes);
}

std::vector<EndpointCheck> endpoint_equality(const CoefficientSequence& seq,
                                             double a, std::size_t n_max) {
  std::vector<double> abscissas{a};
  if (seq.symmetric() && a != 0.0) {
    abscissas.insert(abscissas.begin(), -a);
  }
  std::vector<EndpointCheck> checks;
  for (double x : abscissas) {
    const EvaluationTable table = eval_polynomials(seq, x, n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      checks.push_back({n, x, std::abs(turan_direct(table, n))});
    }
  }
  return checks;
}

std::optional<double> natural_endpoint(const CoefficientSequence& seq) {
  if (seq.form() == RecurrenceForm::half_line) {
    return 0.0;
  }
  const auto sum = seq.row_sum();
  if (!sum) {
    return std::nullopt;
  }
  if (seq.symmetric()) {
    return *sum;
  }
  if (approx_eq(*sum, 1.0)) {
    return 1.0;
  }
  return std::nullopt;
}

NegativeWindow remark_window(const CoefficientSequence& seq) {
  NegativeWindow w;
  if (!seq.symmetric() || seq.form() != RecurrenceForm::interval) {
    return w;
  }
  const double a = seq.gamma(0);
  const double alpha1 = seq.alpha(1);
  const double gamma1 = seq.gamma(1);
  const double gamma2 = seq.gamma(2);
  if (!(gamma2 > gamma1)) {
    return w;
  }
  w.applicable = true;
  w.a = a;
  w.r = alpha1 * alpha1 * gamma2 / (gamma2 - gamma1);
  w.sqrt_r = std::sqrt(w.r);

  auto quartic = [&](double x) {
    return (x * x - a * a) *
           ((gamma2 - gamma1) * x * x - alpha1 * alpha1 * gamma2);
  };
  auto factored = [&](double x) {
    return quartic(x) / (a * a * gamma1 * gamma1 * gamma2);
  };
  w.quartic_at_sqrt_r = quartic(w.sqrt_r);

  constexpr std::size_t kInterior = 200;
  auto all_negative = [&](double right, bool record) {
    if (!(right > a)) {
      return false;
    }
    bool negative = true;
    for (std::size_t k = 1; k <= kInterior; ++k) {
      const double x = a + (right - a) * static_cast<double>(k) /
                               static_cast<double>(kInterior + 1);
      const double d = delta_two(seq, x);
      if (record) {
        ++w.window_nodes;
        w.factor_residual =
            std::max(w.factor_residual,
                     std::abs(d - factored(x)) / std::max(1.0, std::abs(d)));
        if (d < 0.0) {
          ++w.negative_nodes;
        } else if (!w.first_nonnegative_x) {
          w.first_nonnegative_x = x;
        }
      }
      negative = negative && d < 0.0;
    }
    return negative;
  };
  auto changes_sign = [&](double root) {
    constexpr double kStep = 1e-6;
    return delta_two(seq, root * (1.0 - kStep)) < 0.0 &&
           delta_two(seq, root * (1.0 + kStep)) > 0.0;
  };

  const bool negative_on_r = all_negative(w.r, true);
  w.sign_change_at_r = changes_sign(w.r);
  w.confirmed = negative_on_r && w.sign_change_at_r;
  w.negative_below_sqrt_r = all_negative(w.sqrt_r, false);
  w.sign_change_at_sqrt_r = changes_sign(w.sqrt_r);
  return w;
}

SupportHeuristic support_left_heuristic(const CoefficientSequence& seq,
                                        std::size_t n_max) {
  SupportHeuristic h;
  const EvaluationTable table = eval_polynomials(seq, -1.0, n_max);
  h.c.resize(n_max + 1);
  h.holds = true;
  h.nondecreasing = true;
  for (std::size_t n = 0; n <= n_max; ++n) {
    h.c[n] = (n % 2 == 0 ? 1.0 : -1.0) * table[n];
    h.holds = h.holds && h.c[n] > 0.0;
    if (n > 0) {
      h.nondecreasing = h.nondecreasing && approx_ge(h.c[n], h.c[n - 1]);
    }
  }
  return h;
}

}  // namespace turan
