#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan {

/// Δₙ(x) computed directly and through each algebraic identity. Identities
/// that do not apply to the sequence (see identity_applies) are absent.
struct DeterminantSample {
  std::size_t n = 0;
  double x = 0.0;
  double delta_direct = 0.0;
  std::optional<double> delta_id1;
  std::optional<double> delta_id2;
  std::optional<double> delta_id3;
  /// (max − min) over the available values, divided by max(1, |direct|).
  double max_cross_residual = 0.0;
};

enum class TuranIdentity {
  /// γₙΔₙ = γₙpₙ² + αₙpₙ₋₁² − (x − βₙ)pₙ₋₁pₙ
  quadratic = 1,
  /// γₙΔₙ = (pₙ₋₁ − pₙ)[(γₙ₋₁ − γₙ)pₙ + (αₙ − αₙ₋₁)pₙ₋₁] + αₙ₋₁Δₙ₋₁
  recursive = 2,
  /// γₙΔₙ = (pₙ − pₙ₋₁)(γₙpₙ − αₙpₙ₋₁) + (1 − x)pₙ₋₁pₙ
  endpoint = 3,
};

/// pₙ² − pₙ₋₁pₙ₊₁ for 1 ≤ n ≤ N−1.
double turan_direct(const EvaluationTable& table, std::size_t n);

/// The quadratic identity holds for any recurrence, the recursive one needs a
/// constant row sum and the endpoint one needs row sums equal to 1. Half-line
/// sequences qualify for all three through qₙ(y) = pₙ(1 − y).
bool identity_applies(const CoefficientSequence& seq, TuranIdentity which);

/// Δₙ(x) through the chosen identity, divided back by γₙ. The recursive form
/// is accumulated forward from Δ₀ = 1.
double turan_identity(const EvaluationTable& table,
                      const CoefficientSequence& seq, std::size_t n,
                      TuranIdentity which);

/// All samples n_min…n_max at the table's abscissa in one pass.
std::vector<DeterminantSample> determinant_samples(
    const EvaluationTable& table, const CoefficientSequence& seq,
    std::size_t n_min, std::size_t n_max);

/// Throws PreconditionError naming the first n ≤ horizon where
/// αₙ − αₙ₋₁ ≠ γₙ − γₙ₋₁.
void require_equal_increments(const CoefficientSequence& seq_half,
                              std::size_t horizon);

/// Δₙ(x) for a half-line sequence with equal increments, as the weighted sum
///   Σₖ (αₖ − αₖ₋₁) (αₖ⋯αₙ₋₁)/(γₖ⋯γₙ) (pₖ(x) − pₖ₋₁(x))².
double prop3_sum(const CoefficientSequence& seq_half, double x, std::size_t n);

}  // namespace turan
