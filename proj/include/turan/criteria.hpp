#pragma once

/// \file
/// Sufficient conditions for nonnegative Turán determinants, each evaluated
/// as a finite predicate over coefficient indices. Every verdict records the
/// horizon it was verified to: a "for all n" hypothesis can only ever be
/// confirmed up to some N.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan {

enum class Criterion {
  Thm1_i,
  Thm1_ii,
  Cor1_i,
  Cor1_ii,
  Thm4,
  Thm5_i,
  Thm5_ii,
  Prop3_hypothesis,
  Prop2_sigma,
};

std::string_view to_string(Criterion c);
std::optional<Criterion> criterion_from_string(std::string_view name);

struct Failure {
  std::size_t n = 0;
  std::string condition;
  double margin = 0.0;

  bool operator==(const Failure&) const = default;
};

struct CriterionVerdict {
  Criterion criterion = Criterion::Thm1_i;
  bool holds = false;
  std::size_t verified_to = 0;
  std::optional<Failure> first_failure;
  /// Smallest slack over the inequalities checked at each n (negative means
  /// violated). Entry i corresponds to n = first_index + i.
  std::vector<double> per_n_margins;
  std::size_t first_index = 1;
  /// Free-form remark (boundary cases, which sub-condition fired).
  std::string note;

  bool operator==(const CriterionVerdict&) const = default;
};

/// Symmetric sequences with αₙ + γₙ ≡ a: (i) αₙ nondecreasing and ≤ a/2,
/// (ii) αₙ nonincreasing and ≥ a/2, both for 1 ≤ n ≤ N.
struct SymmetricReport {
  double a = 0.0;
  CriterionVerdict part_i;
  CriterionVerdict part_ii;
};

SymmetricReport check_thm1(const CoefficientSequence& seq, std::size_t N);

/// Hypotheses for symmetric recurrences that are not normalized at 1 but
/// whose coefficients have declared limits a/2 and 1/(2a).
struct LimitReport {
  double a = 0.0;
  /// a = 1 sits on the closed end of the admissible range (0, 1].
  bool boundary_case = false;
  CriterionVerdict sub_i;   // γₙ nondecreasing
  CriterionVerdict sub_ii;  // γ₀ ≥ 1

  /// The sub-case that holds, preferring (i); null when neither does.
  const CriterionVerdict* fired() const;
};

LimitReport check_cor1(const CoefficientSequence& seq, std::size_t N);

struct InitCheck {
  bool holds = false;
  /// RHS − LHS of |γ₀ − γ₁| ≤ α₁γ₀ − (γ₀ − γ₁)(1 − γ₀).
  double margin = 0.0;
  /// margin / max(1, |LHS|, |RHS|).
  double relative_margin = 0.0;
  /// The linear factor (γ₀ − γ₁)(x − β₀) + α₁γ₀ at x = −1 and x = 1; Δ₁ ≥ 0
  /// on [−1, 1] exactly when both are ≥ 0.
  double factor_at_minus_one = 0.0;
  double factor_at_plus_one = 0.0;
  /// holds agrees with the sign of the linear factor at both endpoints.
  bool consistent_with_delta1 = false;
};

InitCheck check_thm4_init(const CoefficientSequence& seq);

struct QuadraticRoots {
  double smaller = 0.0;
  double larger = 0.0;
};

enum class RowSumCondition { none, i, ii, iii, iv };

std::string_view to_string(RowSumCondition c);

struct RowSumWitness {
  std::size_t n = 0;
  RowSumCondition condition_used = RowSumCondition::none;
  /// Which alternative of the condition fired, e.g. "root" or
  /// "negative discriminant".
  std::string branch;
  /// (βₙ + 1)² − 4αₙγₙ.
  double discriminant = 0.0;
  /// Roots of B(x; t) = γₙt² − (βₙ − x)t + αₙ at x = −1 and x = +1.
  std::optional<QuadraticRoots> roots_at_minus_one;
  std::optional<QuadraticRoots> roots_at_plus_one;
  /// (αₙ − αₙ₋₁)/(γₙ₋₁ − γₙ), when the denominator is nonzero.
  std::optional<double> increment_ratio;
  bool satisfied[4] = {false, false, false, false};

  bool holds() const { return condition_used != RowSumCondition::none; }
};

/// Roots of γt² − (β − x)t + α, or nullopt for a negative discriminant.
std::optional<QuadraticRoots> b_roots(const Coefficients& c, double x);

/// Evaluates conditions (i)–(iv) at index n ≥ 2 independently; the witness
/// names the first one that holds.
RowSumWitness check_thm4_condition(const CoefficientSequence& seq,
                                    std::size_t n);

struct RowSumReport {
  InitCheck init;
  CriterionVerdict verdict;
  std::vector<RowSumWitness> witnesses;  // n = 2…N
};

/// init condition plus one of (i)–(iv) for every 2 ≤ n ≤ N. Different
/// indices may use different conditions.
RowSumReport check_thm4(const CoefficientSequence& seq, std::size_t N);

/// Half-line sequences with αₙ, γₙ nondecreasing:
/// (i) αₙ ≤ γₙ and αₙ − αₙ₋₁ ≥ γₙ − γₙ₋₁,
/// (ii) αₙ ≥ γₙ and αₙ − αₙ₋₁ ≤ γₙ − γₙ₋₁.
struct HalfLineReport {
  CriterionVerdict part_i;
  CriterionVerdict part_ii;
};

HalfLineReport check_thm5(const CoefficientSequence& seq_half,
                             std::size_t N);

struct SumFormulaReport {
  CriterionVerdict verdict;
  /// αₙ nondecreasing as well, so the sum formula is termwise ≥ 0.
  bool alpha_nondecreasing = false;
};

SumFormulaReport check_prop3_hypothesis(const CoefficientSequence& seq_half,
                                       std::size_t N);

/// Positive renormalization constants n ↦ σₙ.
class SigmaSequence {
 public:
  explicit SigmaSequence(std::function<double(std::size_t)> sigma);
  double operator()(std::size_t n) const;

 private:
  std::function<double(std::size_t)> sigma_;
};

/// σₙ² ≥ σₙ₋₁σₙ₊₁ for 1 ≤ n ≤ N. Margins are 1 − σₙ₋₁σₙ₊₁/σₙ².
CriterionVerdict check_sigma_transfer(const SigmaSequence& sigma,
                                      std::size_t N);

/// Sequence of σₙpₙ / σ₀ (scaled so the first polynomial stays 1):
/// α'ₙ = αₙσₙ/σₙ₋₁, γ'ₙ = γₙσₙ/σₙ₊₁, β' = β.
CoefficientSequence renormalize(const CoefficientSequence& seq,
                                const SigmaSequence& sigma);

/// (σₙpₙ)² − σₙ₋₁pₙ₋₁ σₙ₊₁pₙ₊₁ from an unscaled evaluation table.
double renormalized_determinant(const EvaluationTable& table,
                                const SigmaSequence& sigma, std::size_t n);

}  // namespace turan
