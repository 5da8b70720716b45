#include "turan/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "turan/errors.hpp"

namespace turan {
namespace {

void require_index(const EvaluationTable& table, std::size_t n) {
  if (n < 1 || n + 1 > table.degree()) {
    throw PreconditionError("determinant index " + std::to_string(n) +
                            " outside [1, " +
                            std::to_string(table.degree() > 0
                                               ? table.degree() - 1
                                               : 0) +
                            "]");
  }
}

// Coefficients in interval form; half-line sequences are read through
// qₙ(y) = pₙ(1 − y), whose Turán determinants coincide with those of pₙ.
struct IntervalView {
  const CoefficientSequence& seq;
  bool half_line;

  Coefficients at(std::size_t n) const {
    Coefficients c = seq.at(n);
    if (half_line) {
      c.beta = 1.0 - c.alpha - c.gamma;
    }
    return c;
  }
  double abscissa(double x) const { return half_line ? 1.0 - x : x; }
};

IntervalView view_of(const CoefficientSequence& seq) {
  return {seq, seq.form() == RecurrenceForm::half_line};
}

double quadratic_form(const IntervalView& v, const std::vector<double>& p,
                      double y, std::size_t n) {
  const Coefficients c = v.at(n);
  return (c.gamma * p[n] * p[n] + c.alpha * p[n - 1] * p[n - 1] -
          (y - c.beta) * p[n - 1] * p[n]) /
         c.gamma;
}

double endpoint_form(const IntervalView& v, const std::vector<double>& p,
                     double y, std::size_t n) {
  const Coefficients c = v.at(n);
  return ((p[n] - p[n - 1]) * (c.gamma * p[n] - c.alpha * p[n - 1]) +
          (1.0 - y) * p[n - 1] * p[n]) /
         c.gamma;
}

// One step of the recursive identity: Δₙ from Δₙ₋₁.
double recursive_step(const IntervalView& v, const std::vector<double>& p,
                      std::size_t n, double previous) {
  const Coefficients c = v.at(n);
  const Coefficients before = v.at(n - 1);
  const Steps s = v.seq.steps(n);
  return ((p[n - 1] - p[n]) * (-s.gamma * p[n] + s.alpha * p[n - 1]) +
          before.alpha * previous) /
         c.gamma;
}

}  // namespace

double turan_direct(const EvaluationTable& table, std::size_t n) {
  require_index(table, n);
  const auto& p = table.values;
  return p[n] * p[n] - p[n - 1] * p[n + 1];
}

bool identity_applies(const CoefficientSequence& seq, TuranIdentity which) {
  if (seq.form() == RecurrenceForm::half_line) {
    return true;
  }
  switch (which) {
    case TuranIdentity::quadratic:
      return true;
    case TuranIdentity::recursive:
      return seq.row_sum().has_value();
    case TuranIdentity::endpoint:
      return seq.row_sum().has_value() && approx_eq(*seq.row_sum(), 1.0);
  }
  return false;
}

double turan_identity(const EvaluationTable& table,
                      const CoefficientSequence& seq, std::size_t n,
                      TuranIdentity which) {
  require_index(table, n);
  if (!identity_applies(seq, which)) {
    throw PreconditionError(
        which == TuranIdentity::recursive
            ? "recursive identity needs a constant row sum"
            : "endpoint identity needs row sums equal to 1");
  }
  const IntervalView v = view_of(seq);
  const double y = v.abscissa(table.x);
  switch (which) {
    case TuranIdentity::quadratic:
      return quadratic_form(v, table.values, y, n);
    case TuranIdentity::endpoint:
      return endpoint_form(v, table.values, y, n);
    case TuranIdentity::recursive: {
      double delta = 1.0;
      for (std::size_t k = 1; k <= n; ++k) {
        delta = recursive_step(v, table.values, k, delta);
      }
      return delta;
    }
  }
  return 0.0;
}

std::vector<DeterminantSample> determinant_samples(
    const EvaluationTable& table, const CoefficientSequence& seq,
    std::size_t n_min, std::size_t n_max) {
  if (n_min < 1 || n_min > n_max) {
    throw PreconditionError("determinant range must satisfy 1 <= n_min <= n_max");
  }
  require_index(table, n_max);
  const IntervalView v = view_of(seq);
  const double y = v.abscissa(table.x);
  const auto& p = table.values;
  const bool with_recursive = identity_applies(seq, TuranIdentity::recursive);
  const bool with_endpoint = identity_applies(seq, TuranIdentity::endpoint);

  std::vector<DeterminantSample> samples;
  samples.reserve(n_max - n_min + 1);
  double recursive = 1.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (with_recursive) {
      recursive = recursive_step(v, p, n, recursive);
    }
    if (n < n_min) {
      continue;
    }
    DeterminantSample s;
    s.n = n;
    s.x = table.x;
    s.delta_direct = p[n] * p[n] - p[n - 1] * p[n + 1];
    s.delta_id1 = quadratic_form(v, p, y, n);
    if (with_recursive) {
      s.delta_id2 = recursive;
    }
    if (with_endpoint) {
      s.delta_id3 = endpoint_form(v, p, y, n);
    }
    double lo = s.delta_direct;
    double hi = s.delta_direct;
    for (const auto& value : {s.delta_id1, s.delta_id2, s.delta_id3}) {
      if (value) {
        lo = std::min(lo, *value);
        hi = std::max(hi, *value);
      }
    }
    s.max_cross_residual = (hi - lo) / std::max(1.0, std::abs(s.delta_direct));
    samples.push_back(s);
  }
  return samples;
}

void require_equal_increments(const CoefficientSequence& seq_half,
                              std::size_t horizon) {
  for (std::size_t n = 1; n <= horizon; ++n) {
    const Steps s = seq_half.steps(n);
    if (!approx_eq(s.alpha, s.gamma)) {
      throw PreconditionError(
          "alpha_n - alpha_{n-1} != gamma_n - gamma_{n-1} first at n=" +
          std::to_string(n));
    }
  }
}

double prop3_sum(const CoefficientSequence& seq_half, double x,
                 std::size_t n) {
  if (seq_half.form() != RecurrenceForm::half_line) {
    throw PreconditionError("prop3_sum expects a half-line sequence");
  }
  if (n < 1) {
    throw PreconditionError("prop3_sum needs n >= 1");
  }
  if (seq_half.alpha(0) != 0.0) {
    throw PreconditionError("invalid half-line normalization: alpha_0 != 0");
  }
  require_equal_increments(seq_half, n);
  const EvaluationTable table = eval_polynomials(seq_half, x, n);
  const auto& p = table.values;

  // weight(k) = (αₖ⋯αₙ₋₁)/(γₖ⋯γₙ), built from k = n downwards. Linear
  // coefficient growth (Laguerre) under- or overflows the plain products
  // for long sums, so those are carried as logarithms.
  const bool log_space = n > 60;
  double weight = 1.0 / seq_half.gamma(n);
  double log_weight = -std::log(seq_half.gamma(n));
  double sum = 0.0;
  for (std::size_t k = n; k >= 1; --k) {
    if (k < n) {
      const Coefficients c = seq_half.at(k);
      if (log_space) {
        log_weight += std::log(c.alpha) - std::log(c.gamma);
      } else {
        weight *= c.alpha / c.gamma;
      }
    }
    const double w = log_space ? std::exp(log_weight) : weight;
    const double diff = p[k] - p[k - 1];
    sum += seq_half.steps(k).alpha * w * diff * diff;
  }
  return sum;
}

}  // namespace turan
