#pragma once

/// \file
/// Coefficient sequences for three-term recurrences and forward evaluation of
/// the polynomials they generate.
///
/// Two recurrence shapes are supported. The interval form
///
///   x pₙ = γₙ pₙ₊₁ + βₙ pₙ + αₙ pₙ₋₁,   p₋₁ = 0, p₀ = 1,
///
/// covers polynomials orthogonal on a bounded interval (row sums
/// αₙ + βₙ + γₙ = 1 mean pₙ(1) = 1). The half-line form
///
///   x pₙ = −γₙ pₙ₊₁ + (αₙ + γₙ) pₙ − αₙ pₙ₋₁
///
/// covers polynomials orthogonal on [0, ∞) normalized by pₙ(0) = 1. For
/// half-line sequences the β slot is unused and reads as zero.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "turan/tolerance.hpp"

namespace turan {

struct Coefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// First differences αₙ − αₙ₋₁ and γₙ − γₙ₋₁ for n ≥ 1.
struct Steps {
  double alpha = 0.0;
  double gamma = 0.0;
};

enum class RecurrenceForm { interval, half_line };

/// Analytically known limits of αₙ and γₙ.
struct DeclaredLimits {
  double alpha = 0.0;
  double gamma = 0.0;
};

struct SequenceTraits {
  RecurrenceForm form = RecurrenceForm::interval;
  bool symmetric = false;
  /// Constant value of αₙ + βₙ + γₙ when it does not depend on n.
  std::optional<double> row_sum;
  std::optional<DeclaredLimits> limits;
  /// Last valid index for finite sequences.
  std::optional<std::size_t> horizon;
};

/// Immutable provider n ↦ (αₙ, βₙ, γₙ) with structural metadata.
///
/// Closed-form families may also supply exact first differences. Those are
/// used by every monotonicity test; subtracting two nearly equal doubles
/// loses most significant digits once the increments shrink like 1/n².
class CoefficientSequence {
 public:
  using Provider = std::function<Coefficients(std::size_t)>;
  using StepProvider = std::function<Steps(std::size_t)>;

  CoefficientSequence(Provider provider, SequenceTraits traits,
                      StepProvider steps = {});

  /// Finite sequence; horizon = size − 1. Symmetric tables must have β ≡ 0.
  static CoefficientSequence from_table(std::vector<double> alpha,
                                        std::vector<double> beta,
                                        std::vector<double> gamma,
                                        SequenceTraits traits);

  Coefficients at(std::size_t n) const;
  double alpha(std::size_t n) const { return at(n).alpha; }
  double beta(std::size_t n) const { return at(n).beta; }
  double gamma(std::size_t n) const { return at(n).gamma; }

  /// αₙ − αₙ₋₁ and γₙ − γₙ₋₁; requires n ≥ 1.
  Steps steps(std::size_t n) const;
  bool has_exact_steps() const { return static_cast<bool>(steps_); }

  const SequenceTraits& traits() const { return traits_; }
  RecurrenceForm form() const { return traits_.form; }
  bool symmetric() const { return traits_.symmetric; }
  std::optional<double> row_sum() const { return traits_.row_sum; }
  std::optional<DeclaredLimits> limits() const { return traits_.limits; }
  std::optional<std::size_t> horizon() const { return traits_.horizon; }

  /// Largest index usable for a request that needs indices ≤ wanted.
  std::size_t clamp_to_horizon(std::size_t wanted) const;

 private:
  Provider provider_;
  StepProvider steps_;
  SequenceTraits traits_;
};

/// Checks α₀ = 0, αₙ > 0 (n ≥ 1), γₙ > 0, finiteness and the declared
/// symmetry for 0 ≤ n ≤ N. Throws InvalidSequence naming the first bad index.
void validate_sequence(const CoefficientSequence& seq, std::size_t N);

/// Values p₀(x) … p_N(x) at one abscissa.
struct EvaluationTable {
  double x = 0.0;
  std::vector<double> values;

  std::size_t degree() const { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t n) const { return values[n]; }
};

/// Forward recurrence up to degree N (N ≤ max_degree). Throws
/// InvalidSequence when γₙ ≤ 0 and EvaluationOverflow on the first
/// non-finite value.
EvaluationTable eval_polynomials(const CoefficientSequence& seq, double x,
                                 std::size_t N,
                                 std::size_t max_degree = kDefaultMaxDegree);

/// Largest relative residual |x pₙ − γₙpₙ₊₁ − βₙpₙ − αₙpₙ₋₁| divided by
/// max(|γₙpₙ₊₁|, |βₙpₙ|, |αₙpₙ₋₁|, 1) over 1 ≤ n < N.
double max_recurrence_residual(const EvaluationTable& table,
                               const CoefficientSequence& seq);

struct NormalizationCheck {
  bool normalized = true;
  double max_deviation = 0.0;
  std::size_t worst_n = 0;
};

NormalizationCheck check_normalization(const CoefficientSequence& seq,
                                       std::size_t N, double tol);

/// Endpoint data produced while renormalizing at x = 1.
struct NormalizationLedger {
  /// pₙ(1) for n = 0…N+1; may under- or overflow for long horizons, the
  /// transformed coefficients only depend on the ratios.
  std::vector<double> endpoint_values;
  /// pₙ₋₁(1)/pₙ(1) for n = 1…N+1 (index 0 holds n = 1).
  std::vector<double> ratios;
  /// cₙ = pₙ²(1) − pₙ₋₁(1)pₙ₊₁(1) for n = 1…N.
  std::vector<double> c;

  /// True when the ratios pₙ₋₁(1)/pₙ(1) never decrease (up to slack).
  bool ratios_nondecreasing() const;
};

struct NormalizedSequence {
  CoefficientSequence sequence;
  NormalizationLedger ledger;
};

/// Coefficients of p̃ₙ = pₙ / pₙ(1) for n ≤ N:
/// α̃ₙ = αₙ pₙ₋₁(1)/pₙ(1), γ̃ₙ = γₙ pₙ₊₁(1)/pₙ(1). Symmetric inputs keep
/// β̃ ≡ 0; otherwise β̃ₙ = 1 − α̃ₙ − γ̃ₙ. Throws NormalizationError when some
/// pₙ(1) with n ≤ N+1 is zero or has the wrong sign.
NormalizedSequence normalize_at_one(const CoefficientSequence& seq,
                                    std::size_t N);

/// Maps a half-line sequence to the interval form satisfied by
/// qₙ(x) = pₙ(1 − x): same αₙ, γₙ and βₙ = 1 − αₙ − γₙ.
CoefficientSequence half_line_transform(const CoefficientSequence& seq_half);

}  // namespace turan
