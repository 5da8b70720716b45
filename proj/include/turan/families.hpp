#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/recurrence.hpp"

namespace turan {

enum class FamilyName {
  ultraspherical,
  q_ultraspherical_pos,
  q_ultraspherical_nonpos,
  pollaczek,
  laguerre,
  sec6_example,
  chebyshev,
  custom,
};

std::string_view to_string(FamilyName name);
std::optional<FamilyName> family_from_string(std::string_view name);

/// A named family with its parameters and coefficient sequence.
///
/// `auxiliary` marks sequences that are not normalized at x = 1 (the
/// q-ultraspherical and Pollaczek recurrences); their Turán determinants are
/// meant to be taken after normalize_at_one.
struct PolynomialFamily {
  FamilyName name = FamilyName::custom;
  std::map<std::string, double> params;
  CoefficientSequence sequence;
  bool auxiliary = false;
};

/// Normalized at 1: γₙ = (n+2λ)/(2n+2λ), αₙ = n/(2n+2λ), λ > −1/2. λ = 0 is
/// the Chebyshev limit (γ₀ = 1, αₙ = γₙ = 1/2 for n ≥ 1).
PolynomialFamily make_ultraspherical(double lambda);
PolynomialFamily make_chebyshev();

/// Auxiliary q-ultraspherical recurrence, 0 < q < 1, |β| < 1.
/// For 0 < β < 1:  αₙ = β^{1/2}(1−qⁿ)/(2(1−βqⁿ)),
///                 γₙ = β^{−1/2}(1−β²qⁿ)/(2(1−βqⁿ)),
/// with αₙ + γₙ ≡ (β^{1/2} + β^{−1/2})/2 and limits (β^{1/2}/2, β^{−1/2}/2).
/// For −1 < β ≤ 0: αₙ = (1−qⁿ)/(2(1−βqⁿ)), γₙ = (1−β²qⁿ)/(2(1−βqⁿ)),
/// limits (1/2, 1/2).
PolynomialFamily make_q_ultraspherical(double beta, double q);

/// Auxiliary Pollaczek recurrence, λ > 0, a > 0:
/// γₙ = (n+2λ)/(2(n+λ+a)), αₙ = n/(2(n+λ+a)), limits (1/2, 1/2).
PolynomialFamily make_pollaczek(double lambda, double a);

/// Half-line Laguerre recurrence normalized at 0: αₙ = n, γₙ = n + α + 1.
PolynomialFamily make_laguerre(double alpha);

/// Nonsymmetric example normalized at 1:
/// αₙ = 1/2 − 1/(n+2), βₙ = 1/(2(n+2)), γₙ = 1/2 + 1/(2(n+2)).
PolynomialFamily make_sec6_example();

/// Finite user-supplied coefficients.
PolynomialFamily make_custom(std::vector<double> alpha, std::vector<double> beta,
                             std::vector<double> gamma,
                             std::optional<DeclaredLimits> limits,
                             bool symmetric,
                             RecurrenceForm form = RecurrenceForm::interval);

/// Built-in family by name; q-ultraspherical accepts either variant name and
/// the alias "q_ultraspherical", "legendre" is ultraspherical with λ = 1/2.
PolynomialFamily make_family(std::string_view name,
                             const std::map<std::string, double>& params);

/// Independent closed-form value of pₙ(x) for families that have one:
/// Chebyshev (trigonometric), Legendre (Bonnet recurrence), Laguerre
/// (terminating series normalized at 0).
std::optional<double> oracle_value(const PolynomialFamily& family,
                                   std::size_t n, double x);

/// The sequence whose Turán determinants the family is about: auxiliary
/// sequences are normalized at 1 through index N, the rest pass through.
CoefficientSequence target_sequence(const PolynomialFamily& family,
                                    std::size_t N);

/// Default scan window: [−1, 1] for interval families, [0, 50] for
/// half-line ones.
struct Interval {
  double lo = -1.0;
  double hi = 1.0;
};

Interval default_window(const PolynomialFamily& family);

}  // namespace turan
