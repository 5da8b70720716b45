#include "turan/criteria.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "turan/errors.hpp"

namespace turan {
namespace {

constexpr std::array<std::pair<Criterion, std::string_view>, 9> kNames{{
    {Criterion::Thm1_i, "Thm1_i"},
    {Criterion::Thm1_ii, "Thm1_ii"},
    {Criterion::Cor1_i, "Cor1_i"},
    {Criterion::Cor1_ii, "Cor1_ii"},
    {Criterion::Thm4, "Thm4"},
    {Criterion::Thm5_i, "Thm5_i"},
    {Criterion::Thm5_ii, "Thm5_ii"},
    {Criterion::Prop3_hypothesis, "Prop3_hypothesis"},
    {Criterion::Prop2_sigma, "Prop2_sigma"},
}};

// Slack of a ≤ b relative to max(1, |a|, |b|); the inequality counts as
// satisfied when the slack is ≥ −kComparisonSlack, matching approx_le.
double slack_le(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) {
    return a <= b ? 1.0 : -1.0;
  }
  return (b - a) / comparison_scale(a, b);
}

double slack_ge(double a, double b) { return slack_le(b, a); }

bool satisfied(double slack) { return slack >= -kComparisonSlack; }

// Accumulates per-index margins and the first failing inequality.
class VerdictBuilder {
 public:
  VerdictBuilder(Criterion criterion, std::size_t first_index,
                 std::size_t verified_to) {
    verdict_.criterion = criterion;
    verdict_.first_index = first_index;
    verdict_.verified_to = verified_to;
  }

  void begin(std::size_t n) {
    current_ = n;
    verdict_.per_n_margins.push_back(std::numeric_limits<double>::infinity());
  }

  void require(std::string_view condition, double slack) {
    double& margin = verdict_.per_n_margins.back();
    margin = std::min(margin, slack);
    if (!satisfied(slack) && !verdict_.first_failure) {
      verdict_.first_failure = Failure{current_, std::string(condition), slack};
    }
  }

  CriterionVerdict finish(std::string note = {}) {
    for (double& m : verdict_.per_n_margins) {
      if (std::isinf(m)) {
        m = 0.0;
      }
    }
    verdict_.holds = !verdict_.first_failure.has_value();
    verdict_.note = std::move(note);
    return std::move(verdict_);
  }

 private:
  CriterionVerdict verdict_;
  std::size_t current_ = 0;
};

void require_row_sum_one(const CoefficientSequence& seq, std::size_t n) {
  const Coefficients c = seq.at(n);
  if (!approx_eq(c.alpha + c.beta + c.gamma, 1.0)) {
    throw PreconditionError("row sum alpha+beta+gamma != 1 at n=" +
                            std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(Criterion c) {
  for (const auto& [value, name] : kNames) {
    if (value == c) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Criterion> criterion_from_string(std::string_view name) {
  for (const auto& [value, label] : kNames) {
    if (label == name) {
      return value;
    }
  }
  return std::nullopt;
}

SymmetricReport check_thm1(const CoefficientSequence& seq, std::size_t N) {
  if (seq.form() != RecurrenceForm::interval || !seq.symmetric()) {
    throw PreconditionError("Thm1 criteria apply to symmetric sequences only");
  }
  N = seq.clamp_to_horizon(N);
  const double a = seq.alpha(0) + seq.gamma(0);
  for (std::size_t n = 0; n <= N; ++n) {
    const Coefficients c = seq.at(n);
    if (!approx_eq(c.alpha + c.gamma, a)) {
      throw PreconditionError("alpha_n + gamma_n is not constant (n=" +
                              std::to_string(n) + ")");
    }
  }

  VerdictBuilder part_i(Criterion::Thm1_i, 1, N);
  VerdictBuilder part_ii(Criterion::Thm1_ii, 1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double alpha = seq.alpha(n);
    part_i.begin(n);
    part_ii.begin(n);
    part_i.require("alpha_n <= a/2", slack_le(alpha, a / 2));
    part_ii.require("alpha_n >= a/2", slack_ge(alpha, a / 2));
    if (n >= 2) {
      const double step = seq.steps(n).alpha;
      part_i.require("alpha_n nondecreasing", slack_ge(step, 0.0));
      part_ii.require("alpha_n nonincreasing", slack_le(step, 0.0));
    }
  }
  return {a, part_i.finish(), part_ii.finish()};
}

const CriterionVerdict* LimitReport::fired() const {
  if (sub_i.holds) {
    return &sub_i;
  }
  if (sub_ii.holds) {
    return &sub_ii;
  }
  return nullptr;
}

LimitReport check_cor1(const CoefficientSequence& seq, std::size_t N) {
  if (seq.form() != RecurrenceForm::interval || !seq.symmetric()) {
    throw PreconditionError("Cor1 criteria apply to symmetric sequences only");
  }
  const auto limits = seq.limits();
  if (!limits) {
    throw PreconditionError(
        "Cor1 criteria need declared limits of alpha_n and gamma_n");
  }
  const double a = 2.0 * limits->alpha;
  if (!(a > 0.0) || !approx_le(a, 1.0)) {
    throw PreconditionError("declared limit of alpha_n must lie in (0, 1/2]");
  }
  if (!approx_eq(limits->gamma, 0.5 / a)) {
    throw PreconditionError(
        "declared limits must be a/2 and 1/(2a) for the same a");
  }
  N = seq.clamp_to_horizon(N);
  const std::size_t tail_start = N - N / 10;

  LimitReport report;
  report.a = a;
  report.boundary_case = approx_eq(a, 1.0);

  VerdictBuilder sub_i(Criterion::Cor1_i, 0, N);
  VerdictBuilder sub_ii(Criterion::Cor1_ii, 0, N);
  const auto both = [&](std::string_view condition, double slack) {
    sub_i.require(condition, slack);
    sub_ii.require(condition, slack);
  };

  sub_i.begin(0);
  sub_ii.begin(0);
  sub_ii.require("gamma_0 >= 1", slack_ge(seq.gamma(0), 1.0));
  for (std::size_t n = 1; n <= N; ++n) {
    sub_i.begin(n);
    sub_ii.begin(n);
    const Steps s = seq.steps(n);
    both("alpha_n nondecreasing", slack_ge(s.alpha, 0.0));
    both("alpha_n + gamma_n nondecreasing", slack_ge(s.alpha + s.gamma, 0.0));
    if (n > tail_start) {
      const Coefficients cur = seq.at(n);
      const Coefficients prev = seq.at(n - 1);
      both("alpha_n approaches the declared limit",
           slack_le(std::abs(cur.alpha - limits->alpha),
                    std::abs(prev.alpha - limits->alpha)));
      both("gamma_n approaches the declared limit",
           slack_le(std::abs(cur.gamma - limits->gamma),
                    std::abs(prev.gamma - limits->gamma)));
    }
    sub_i.require("gamma_n nondecreasing", slack_ge(s.gamma, 0.0));
  }
  const std::string note = report.boundary_case ? "boundary case a = 1" : "";
  report.sub_i = sub_i.finish(note);
  report.sub_ii = sub_ii.finish(note);
  return report;
}

InitCheck check_thm4_init(const CoefficientSequence& seq) {
  require_row_sum_one(seq, 0);
  require_row_sum_one(seq, 1);
  const Coefficients c0 = seq.at(0);
  const Coefficients c1 = seq.at(1);
  const double d = c0.gamma - c1.gamma;
  const double lhs = std::abs(d);
  const double rhs = c1.alpha * c0.gamma - d * (1.0 - c0.gamma);

  InitCheck check;
  check.holds = approx_le(lhs, rhs);
  check.margin = rhs - lhs;
  check.relative_margin = slack_le(lhs, rhs);
  const auto factor = [&](double x) {
    return d * (x - c0.beta) + c1.alpha * c0.gamma;
  };
  check.factor_at_minus_one = factor(-1.0);
  check.factor_at_plus_one = factor(1.0);
  const bool factor_nonnegative = approx_ge(check.factor_at_minus_one, 0.0) &&
                                  approx_ge(check.factor_at_plus_one, 0.0);
  check.consistent_with_delta1 = factor_nonnegative == check.holds;
  return check;
}

std::string_view to_string(RowSumCondition c) {
  switch (c) {
    case RowSumCondition::none:
      return "none";
    case RowSumCondition::i:
      return "i";
    case RowSumCondition::ii:
      return "ii";
    case RowSumCondition::iii:
      return "iii";
    case RowSumCondition::iv:
      return "iv";
  }
  return "none";
}

std::optional<QuadraticRoots> b_roots(const Coefficients& c, double x) {
  const double u = c.beta - x;
  const double disc = u * u - 4.0 * c.alpha * c.gamma;
  if (disc < 0.0) {
    return std::nullopt;
  }
  const double root = std::sqrt(disc);
  return QuadraticRoots{(u - root) / (2.0 * c.gamma),
                        (u + root) / (2.0 * c.gamma)};
}

namespace {

struct ConditionEval {
  double margin = -1.0;
  std::string branch;
};

// Condition margins: min over conjunctions, max over alternatives.
ConditionEval eval_condition_i(const Coefficients& c, const Steps& s,
                               double disc,
                               const std::optional<QuadraticRoots>& roots) {
  double m = std::min({slack_ge(s.alpha, 0.0), slack_le(c.alpha, c.gamma),
                       slack_le(s.gamma, 0.0)});
  // r⁽²⁾(−1) ≤ (αₙ − αₙ₋₁)/(γₙ₋₁ − γₙ), multiplied through by γₙ₋₁ − γₙ ≥ 0.
  const double root_slack =
      roots ? slack_le(roots->larger * -s.gamma, s.alpha) : -1.0;
  const double disc_slack = disc < 0.0 ? 1.0 : -1.0;
  ConditionEval e;
  e.branch = root_slack >= disc_slack ? "root" : "negative discriminant";
  e.margin = std::min(m, std::max(root_slack, disc_slack));
  return e;
}

ConditionEval eval_condition_ii(const Coefficients& c, const Steps& s,
                                double disc,
                                const std::optional<QuadraticRoots>& roots) {
  double m = std::min({slack_le(s.alpha, 0.0), slack_ge(c.alpha, c.gamma),
                       slack_ge(s.gamma, 0.0)});
  // r⁽¹⁾(−1) ≥ (αₙ₋₁ − αₙ)/(γₙ − γₙ₋₁), multiplied through by γₙ − γₙ₋₁ ≥ 0.
  const double root_slack =
      roots ? slack_ge(roots->smaller * s.gamma, -s.alpha) : -1.0;
  const double disc_slack = disc < 0.0 ? 1.0 : -1.0;
  ConditionEval e;
  e.branch = root_slack >= disc_slack ? "root" : "negative discriminant";
  e.margin = std::min(m, std::max(root_slack, disc_slack));
  return e;
}

ConditionEval eval_condition_iii(const Coefficients& c, const Steps& s) {
  const double m =
      std::min({slack_le(s.alpha, 0.0), slack_ge(c.alpha, 0.5),
                slack_le(s.gamma, 0.0), slack_ge(c.gamma, 0.5)});
  ConditionEval e;
  if (s.alpha == 0.0 && s.gamma == 0.0) {
    // A(t) vanishes identically; it is never negative.
    e.branch = "constant coefficients";
    e.margin = m;
    return e;
  }
  // γₙ − γₙ₋₁ → 0⁻ with αₙ − αₙ₋₁ < 0 sends the ratio to +∞.
  const double ratio = s.gamma == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : s.alpha / s.gamma;
  const double q = c.alpha / c.gamma;
  const double below = std::min(slack_le(ratio, q), slack_le(q, 1.0));
  const double above = std::min(slack_ge(ratio, q), slack_ge(q, 1.0));
  e.branch = below >= above ? "ratio below" : "ratio above";
  e.margin = std::min(m, std::max(below, above));
  return e;
}

ConditionEval eval_condition_iv(const Coefficients& c, const Steps& s) {
  const double m = std::min(slack_ge(s.alpha, 0.0), slack_ge(s.gamma, 0.0));
  const double first =
      std::min(slack_le(c.alpha, c.gamma), slack_ge(s.alpha, s.gamma));
  const double second =
      std::min(slack_ge(c.alpha, c.gamma), slack_le(s.alpha, s.gamma));
  ConditionEval e;
  e.branch = first >= second ? "alpha <= gamma" : "alpha >= gamma";
  e.margin = std::min(m, std::max(first, second));
  return e;
}

}  // namespace

RowSumWitness check_thm4_condition(const CoefficientSequence& seq,
                                    std::size_t n) {
  if (n < 2) {
    throw PreconditionError("Thm4 conditions are stated for n >= 2");
  }
  require_row_sum_one(seq, n);
  const Coefficients c = seq.at(n);
  const Steps s = seq.steps(n);

  RowSumWitness w;
  w.n = n;
  w.discriminant = (c.beta + 1.0) * (c.beta + 1.0) - 4.0 * c.alpha * c.gamma;
  w.roots_at_minus_one = b_roots(c, -1.0);
  w.roots_at_plus_one = b_roots(c, 1.0);
  if (s.gamma != 0.0) {
    w.increment_ratio = s.alpha / -s.gamma;
  }

  const std::array<ConditionEval, 4> evals{
      eval_condition_i(c, s, w.discriminant, w.roots_at_minus_one),
      eval_condition_ii(c, s, w.discriminant, w.roots_at_minus_one),
      eval_condition_iii(c, s),
      eval_condition_iv(c, s),
  };
  constexpr std::array<RowSumCondition, 4> labels{
      RowSumCondition::i, RowSumCondition::ii, RowSumCondition::iii,
      RowSumCondition::iv};
  for (std::size_t k = 0; k < evals.size(); ++k) {
    w.satisfied[k] = satisfied(evals[k].margin);
    if (w.satisfied[k] && w.condition_used == RowSumCondition::none) {
      w.condition_used = labels[k];
      w.branch = evals[k].branch;
    }
  }
  return w;
}

namespace {

double best_condition_margin(const CoefficientSequence& seq, std::size_t n) {
  const Coefficients c = seq.at(n);
  const Steps s = seq.steps(n);
  const double disc =
      (c.beta + 1.0) * (c.beta + 1.0) - 4.0 * c.alpha * c.gamma;
  const auto roots = b_roots(c, -1.0);
  return std::max({eval_condition_i(c, s, disc, roots).margin,
                   eval_condition_ii(c, s, disc, roots).margin,
                   eval_condition_iii(c, s).margin,
                   eval_condition_iv(c, s).margin});
}

}  // namespace

RowSumReport check_thm4(const CoefficientSequence& seq, std::size_t N) {
  N = seq.clamp_to_horizon(N);
  if (N < 1) {
    throw PreconditionError("Thm4 needs a horizon of at least 1");
  }
  RowSumReport report;
  report.init = check_thm4_init(seq);

  VerdictBuilder builder(Criterion::Thm4, 1, N);
  builder.begin(1);
  builder.require("init condition", report.init.relative_margin);
  for (std::size_t n = 2; n <= N; ++n) {
    builder.begin(n);
    report.witnesses.push_back(check_thm4_condition(seq, n));
    builder.require("one of conditions (i)-(iv)",
                    best_condition_margin(seq, n));
  }
  report.verdict = builder.finish();
  return report;
}

HalfLineReport check_thm5(const CoefficientSequence& seq_half,
                             std::size_t N) {
  if (seq_half.form() != RecurrenceForm::half_line) {
    throw PreconditionError("Thm5 criteria apply to half-line sequences only");
  }
  N = seq_half.clamp_to_horizon(N);
  VerdictBuilder part_i(Criterion::Thm5_i, 1, N);
  VerdictBuilder part_ii(Criterion::Thm5_ii, 1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const Coefficients c = seq_half.at(n);
    const Steps s = seq_half.steps(n);
    part_i.begin(n);
    part_ii.begin(n);
    for (VerdictBuilder* b : {&part_i, &part_ii}) {
      b->require("alpha_n nondecreasing", slack_ge(s.alpha, 0.0));
      b->require("gamma_n nondecreasing", slack_ge(s.gamma, 0.0));
    }
    part_i.require("alpha_n <= gamma_n", slack_le(c.alpha, c.gamma));
    part_i.require("alpha_n - alpha_{n-1} >= gamma_n - gamma_{n-1}",
                   slack_ge(s.alpha, s.gamma));
    part_ii.require("alpha_n >= gamma_n", slack_ge(c.alpha, c.gamma));
    part_ii.require("alpha_n - alpha_{n-1} <= gamma_n - gamma_{n-1}",
                    slack_le(s.alpha, s.gamma));
  }
  return {part_i.finish(), part_ii.finish()};
}

SumFormulaReport check_prop3_hypothesis(const CoefficientSequence& seq_half,
                                       std::size_t N) {
  if (seq_half.form() != RecurrenceForm::half_line) {
    throw PreconditionError(
        "the equal-increment hypothesis is stated for half-line sequences");
  }
  N = seq_half.clamp_to_horizon(N);
  SumFormulaReport report;
  report.alpha_nondecreasing = true;
  VerdictBuilder builder(Criterion::Prop3_hypothesis, 1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const Steps s = seq_half.steps(n);
    builder.begin(n);
    builder.require("alpha_n - alpha_{n-1} = gamma_n - gamma_{n-1}",
                    -std::abs(s.alpha - s.gamma) /
                        comparison_scale(s.alpha, s.gamma));
    if (!approx_ge(s.alpha, 0.0)) {
      report.alpha_nondecreasing = false;
    }
  }
  report.verdict = builder.finish(
      report.alpha_nondecreasing ? "alpha_n nondecreasing" : "");
  return report;
}

SigmaSequence::SigmaSequence(std::function<double(std::size_t)> sigma)
    : sigma_(std::move(sigma)) {
  if (!sigma_) {
    throw PreconditionError("sigma provider is empty");
  }
}

double SigmaSequence::operator()(std::size_t n) const {
  const double value = sigma_(n);
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw PreconditionError("sigma_n must be positive and finite (n=" +
                            std::to_string(n) + ")");
  }
  return value;
}

CriterionVerdict check_sigma_transfer(const SigmaSequence& sigma,
                                      std::size_t N) {
  VerdictBuilder builder(Criterion::Prop2_sigma, 1, N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double mid = sigma(n);
    const double ratio = (sigma(n - 1) / mid) * (sigma(n + 1) / mid);
    builder.begin(n);
    builder.require("sigma_n^2 >= sigma_{n-1} sigma_{n+1}", 1.0 - ratio);
  }
  return builder.finish();
}

CoefficientSequence renormalize(const CoefficientSequence& seq,
                                const SigmaSequence& sigma) {
  if (seq.form() != RecurrenceForm::interval) {
    throw PreconditionError("renormalize expects an interval-form sequence");
  }
  SequenceTraits traits;
  traits.symmetric = seq.symmetric();
  traits.horizon = seq.horizon();
  return CoefficientSequence(
      [seq, sigma](std::size_t n) {
        const Coefficients c = seq.at(n);
        const double s = sigma(n);
        return Coefficients{n == 0 ? 0.0 : c.alpha * s / sigma(n - 1), c.beta,
                            c.gamma * s / sigma(n + 1)};
      },
      traits);
}

double renormalized_determinant(const EvaluationTable& table,
                                const SigmaSequence& sigma, std::size_t n) {
  if (n < 1 || n + 1 > table.degree()) {
    throw PreconditionError("determinant index out of range");
  }
  const auto& p = table.values;
  const double mid = sigma(n) * p[n];
  return mid * mid - (sigma(n - 1) * p[n - 1]) * (sigma(n + 1) * p[n + 1]);
}

}  // namespace turan
