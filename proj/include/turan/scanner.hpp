#pragma once

/// \file
/// Grid scans of Turán determinants: sign reports over a region, endpoint
/// zeros, the negative window of Δ₂ for decreasing αₙ, and the sign pattern of
/// pₙ(−1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan {

inline constexpr std::size_t kDefaultGridPoints = 401;
inline constexpr double kDefaultScanTolerance = 1e-9;
inline constexpr double kEndpointZeroTolerance = 1e-10;

struct ScanRegion {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t points = kDefaultGridPoints;
  std::size_t n_min = 1;
  std::size_t n_max = 50;

  /// Grid node i of points, lo and hi included exactly.
  double node(std::size_t i) const;
  bool operator==(const ScanRegion&) const = default;
};

/// Throws PreconditionError unless lo < hi, points ≥ 2, 1 ≤ n_min ≤ n_max.
void validate_region(const ScanRegion& region);

struct Violation {
  std::size_t n = 0;
  double x = 0.0;
  double delta = 0.0;
  bool operator==(const Violation&) const = default;
};

struct EndpointCheck {
  std::size_t n = 0;
  double x = 0.0;
  double magnitude = 0.0;
  bool operator==(const EndpointCheck&) const = default;
};

struct ScanOptions {
  double tol = kDefaultScanTolerance;
  /// 0 selects threads_from_env().
  int threads = 0;
  /// Fraction of grid nodes that also get the identity cross-check.
  double subsample_fraction = 0.05;
  std::uint64_t seed = 20240613;
  /// Keep every Δₙ(xᵢ) in TuranReport::values.
  bool keep_values = false;
};

struct TuranReport {
  ScanRegion region;
  double tol = kDefaultScanTolerance;
  double min_value = 0.0;
  std::size_t min_n = 0;
  double min_x = 0.0;
  double max_value = 0.0;
  /// Ordered by n, then x.
  std::vector<Violation> violations;
  std::vector<EndpointCheck> endpoint_zero_checks;
  double cross_residual_max = 0.0;
  std::size_t cross_checked_nodes = 0;
  /// Row-major Δₙ(xᵢ), row i = node i, column n − n_min; empty unless kept.
  std::vector<double> values;

  double value(std::size_t node, std::size_t n) const;
  bool clean() const { return violations.empty(); }
  bool operator==(const TuranReport&) const = default;
};

/// TURAN_THREADS when set to a positive integer, else the OpenMP default.
int threads_from_env();

/// Direct Δₙ(x) at every node and degree of the region, parallel over nodes.
/// Bit-identical to scan_sign_reference for the same inputs. Evaluation
/// overflow at the lowest failing node is rethrown after the sweep.
TuranReport scan_sign(const CoefficientSequence& seq, const ScanRegion& region,
                      const ScanOptions& options = {});

/// Single-threaded version of scan_sign.
TuranReport scan_sign_reference(const CoefficientSequence& seq,
                                const ScanRegion& region,
                                const ScanOptions& options = {});

/// |Δₙ(±a)| for 1 ≤ n ≤ n_max. Symmetric sequences report both signs,
/// nonsymmetric ones +a only.
std::vector<EndpointCheck> endpoint_equality(const CoefficientSequence& seq,
                                             double a, std::size_t n_max);

/// The endpoint a implied by the sequence: the row sum for symmetric
/// sequences with a constant one, 1 for row-sum-1 sequences, 0 for half-line
/// sequences. Empty when none applies.
std::optional<double> natural_endpoint(const CoefficientSequence& seq);

/// Negative window of Δ₂ just right of x = a for symmetric sequences with
/// γ₂ > γ₁, where a²γ₁²γ₂Δ₂(x) = (x² − a²)[(γ₂ − γ₁)x² − α₁²γ₂] and
/// r = α₁²γ₂/(γ₂ − γ₁).
struct NegativeWindow {
  bool applicable = false;
  double a = 0.0;
  double r = 0.0;
  /// Δ₂ < 0 at all 200 interior nodes of (a, r).
  bool confirmed = false;
  /// Δ₂ changes sign across r.
  bool sign_change_at_r = false;
  /// Where the quartic factor actually vanishes.
  double sqrt_r = 0.0;
  /// Δ₂ < 0 at all 200 interior nodes of (a, √r).
  bool negative_below_sqrt_r = false;
  /// Δ₂ changes sign across √r.
  bool sign_change_at_sqrt_r = false;
  std::size_t negative_nodes = 0;
  std::size_t window_nodes = 0;
  /// First node of (a, r) where Δ₂ ≥ 0.
  std::optional<double> first_nonnegative_x;
  /// max |Δ₂ − factored form| / max(1, |Δ₂|) over the window nodes.
  double factor_residual = 0.0;
  /// The factored quartic (x² − a²)[(γ₂ − γ₁)x² − α₁²γ₂] at x = √r.
  double quartic_at_sqrt_r = 0.0;
};

NegativeWindow remark_window(const CoefficientSequence& seq);

/// (−1)ⁿpₙ(−1) > 0 for every n ≤ n_max.
struct SupportHeuristic {
  bool holds = false;
  bool nondecreasing = false;
  std::vector<double> c;  // n = 0…n_max
};

SupportHeuristic support_left_heuristic(const CoefficientSequence& seq,
                                        std::size_t n_max);

}  // namespace turan
