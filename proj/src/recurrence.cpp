#include "turan/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "turan/errors.hpp"

namespace turan {

CoefficientSequence::CoefficientSequence(Provider provider,
                                         SequenceTraits traits,
                                         StepProvider steps)
    : provider_(std::move(provider)),
      steps_(std::move(steps)),
      traits_(std::move(traits)) {
  if (!provider_) {
    throw PreconditionError("coefficient provider is empty");
  }
}

CoefficientSequence CoefficientSequence::from_table(std::vector<double> alpha,
                                                    std::vector<double> beta,
                                                    std::vector<double> gamma,
                                                    SequenceTraits traits) {
  if (alpha.empty() || alpha.size() != gamma.size()) {
    throw PreconditionError(
        "coefficient table: alpha and gamma must be non-empty and of equal "
        "length");
  }
  if (beta.empty()) {
    beta.assign(alpha.size(), 0.0);
  }
  if (beta.size() != alpha.size()) {
    throw PreconditionError(
        "coefficient table: beta must be empty or match alpha in length");
  }
  if (traits.symmetric) {
    for (std::size_t n = 0; n < beta.size(); ++n) {
      if (beta[n] != 0.0) {
        throw InvalidSequence(n, "symmetric sequence with nonzero beta");
      }
    }
  }
  traits.horizon = alpha.size() - 1;
  auto table = std::make_shared<const std::vector<Coefficients>>([&] {
    std::vector<Coefficients> rows(alpha.size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
      rows[n] = {alpha[n], beta[n], gamma[n]};
    }
    return rows;
  }());
  return CoefficientSequence(
      [table](std::size_t n) { return (*table)[n]; }, std::move(traits));
}

Coefficients CoefficientSequence::at(std::size_t n) const {
  if (traits_.horizon && n > *traits_.horizon) {
    throw HorizonError(n, *traits_.horizon);
  }
  return provider_(n);
}

Steps CoefficientSequence::steps(std::size_t n) const {
  if (n == 0) {
    throw PreconditionError("steps are defined for n >= 1 only");
  }
  if (traits_.horizon && n > *traits_.horizon) {
    throw HorizonError(n, *traits_.horizon);
  }
  if (steps_) {
    return steps_(n);
  }
  const Coefficients cur = at(n);
  const Coefficients prev = at(n - 1);
  return {cur.alpha - prev.alpha, cur.gamma - prev.gamma};
}

std::size_t CoefficientSequence::clamp_to_horizon(std::size_t wanted) const {
  return traits_.horizon ? std::min(wanted, *traits_.horizon) : wanted;
}

void validate_sequence(const CoefficientSequence& seq, std::size_t N) {
  for (std::size_t n = 0; n <= N; ++n) {
    const Coefficients c = seq.at(n);
    if (!std::isfinite(c.alpha) || !std::isfinite(c.beta) ||
        !std::isfinite(c.gamma)) {
      throw InvalidSequence(n, "non-finite coefficient");
    }
    if (n == 0 && c.alpha != 0.0) {
      throw InvalidSequence(n, "alpha_0 must be 0");
    }
    if (n > 0 && !(c.alpha > 0.0)) {
      throw InvalidSequence(n, "alpha_n must be positive for n >= 1");
    }
    if (!(c.gamma > 0.0)) {
      throw InvalidSequence(n, "gamma_n must be positive");
    }
    if (seq.symmetric() && c.beta != 0.0) {
      throw InvalidSequence(n, "symmetric sequence with nonzero beta");
    }
  }
}

EvaluationTable eval_polynomials(const CoefficientSequence& seq, double x,
                                 std::size_t N, std::size_t max_degree) {
  if (N > max_degree) {
    throw PreconditionError("requested degree " + std::to_string(N) +
                            " exceeds the cap " + std::to_string(max_degree));
  }
  EvaluationTable table;
  table.x = x;
  table.values.resize(N + 1);
  table.values[0] = 1.0;
  double prev = 0.0;
  double cur = 1.0;
  const bool half_line = seq.form() == RecurrenceForm::half_line;
  for (std::size_t n = 0; n < N; ++n) {
    const Coefficients c = seq.at(n);
    if (!(c.gamma > 0.0)) {
      throw InvalidSequence(n, "gamma_n must be positive");
    }
    const double diag = half_line ? (c.alpha + c.gamma - x) : (x - c.beta);
    const double next = (diag * cur - c.alpha * prev) / c.gamma;
    if (!std::isfinite(next)) {
      throw EvaluationOverflow(n + 1, x);
    }
    table.values[n + 1] = next;
    prev = cur;
    cur = next;
  }
  return table;
}

double max_recurrence_residual(const EvaluationTable& table,
                               const CoefficientSequence& seq) {
  const auto& p = table.values;
  const double x = table.x;
  const bool half_line = seq.form() == RecurrenceForm::half_line;
  double worst = 0.0;
  for (std::size_t n = 1; n + 1 < p.size(); ++n) {
    const Coefficients c = seq.at(n);
    double upper = c.gamma * p[n + 1];
    double middle = c.beta * p[n];
    double lower = c.alpha * p[n - 1];
    if (half_line) {
      upper = -upper;
      middle = (c.alpha + c.gamma) * p[n];
      lower = -lower;
    }
    const double residual = std::abs(x * p[n] - upper - middle - lower);
    const double scale = std::max(
        {std::abs(upper), std::abs(middle), std::abs(lower), 1.0});
    worst = std::max(worst, residual / scale);
  }
  return worst;
}

NormalizationCheck check_normalization(const CoefficientSequence& seq,
                                       std::size_t N, double tol) {
  NormalizationCheck result;
  for (std::size_t n = 0; n <= N; ++n) {
    const Coefficients c = seq.at(n);
    const double dev = std::abs(c.alpha + c.beta + c.gamma - 1.0);
    if (dev > result.max_deviation) {
      result.max_deviation = dev;
      result.worst_n = n;
    }
  }
  result.normalized = result.max_deviation <= tol;
  return result;
}

bool NormalizationLedger::ratios_nondecreasing() const {
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    if (!approx_ge(ratios[i], ratios[i - 1])) {
      return false;
    }
  }
  return true;
}

NormalizedSequence normalize_at_one(const CoefficientSequence& seq,
                                    std::size_t N) {
  if (seq.form() != RecurrenceForm::interval) {
    throw PreconditionError(
        "normalize_at_one expects an interval-form sequence");
  }
  // growth[n] = pₙ(1)/pₙ₋₁(1) for n = 1…N+1, from the recurrence at x = 1.
  std::vector<double> growth(N + 2, 0.0);
  for (std::size_t n = 0; n <= N; ++n) {
    const Coefficients c = seq.at(n);
    if (!(c.gamma > 0.0)) {
      throw InvalidSequence(n, "gamma_n must be positive");
    }
    const double lower = n == 0 ? 0.0 : c.alpha / growth[n];
    const double next = ((1.0 - c.beta) - lower) / c.gamma;
    if (!std::isfinite(next) || !(next > 0.0)) {
      throw NormalizationError(
          n + 1, "p_n(1) vanishes or changes sign; the orthogonality "
                 "interval does not end at 1");
    }
    growth[n + 1] = next;
  }

  NormalizationLedger ledger;
  ledger.endpoint_values.resize(N + 2);
  ledger.endpoint_values[0] = 1.0;
  for (std::size_t n = 1; n <= N + 1; ++n) {
    ledger.endpoint_values[n] = ledger.endpoint_values[n - 1] * growth[n];
    ledger.ratios.push_back(1.0 / growth[n]);
  }
  const auto& p1 = ledger.endpoint_values;
  for (std::size_t n = 1; n <= N; ++n) {
    ledger.c.push_back(p1[n] * p1[n] - p1[n - 1] * p1[n + 1]);
  }

  std::vector<double> alpha(N + 1), beta(N + 1), gamma(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const Coefficients c = seq.at(n);
    alpha[n] = n == 0 ? 0.0 : c.alpha / growth[n];
    gamma[n] = c.gamma * growth[n + 1];
    beta[n] = seq.symmetric() ? 0.0 : 1.0 - alpha[n] - gamma[n];
  }

  SequenceTraits traits;
  traits.symmetric = seq.symmetric();
  traits.row_sum = 1.0;
  if (seq.limits()) {
    traits.limits = DeclaredLimits{0.5, 0.5};
  }
  return {CoefficientSequence::from_table(std::move(alpha), std::move(beta),
                                          std::move(gamma), traits),
          std::move(ledger)};
}

CoefficientSequence half_line_transform(const CoefficientSequence& seq_half) {
  if (seq_half.form() != RecurrenceForm::half_line) {
    throw PreconditionError("half_line_transform expects a half-line sequence");
  }
  const Coefficients first = seq_half.at(0);
  if (first.alpha != 0.0) {
    throw PreconditionError(
        "invalid half-line normalization: alpha_0 must be 0");
  }
  if (!(first.gamma > 0.0)) {
    throw PreconditionError(
        "invalid half-line normalization: gamma_0 must be positive");
  }
  SequenceTraits traits;
  traits.form = RecurrenceForm::interval;
  traits.row_sum = 1.0;
  traits.horizon = seq_half.horizon();
  CoefficientSequence::StepProvider steps;
  if (seq_half.has_exact_steps()) {
    steps = [seq_half](std::size_t n) { return seq_half.steps(n); };
  }
  return CoefficientSequence(
      [seq_half](std::size_t n) {
        const Coefficients c = seq_half.at(n);
        return Coefficients{c.alpha, 1.0 - c.alpha - c.gamma, c.gamma};
      },
      traits, std::move(steps));
}

}  // namespace turan
