#include "turan/families.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "turan/errors.hpp"

namespace turan {
namespace {

std::string format_param(std::string_view key, double value) {
  return std::string(key) + "=" + std::to_string(value);
}

void require(bool ok, std::string_view family, std::string_view condition) {
  if (!ok) {
    throw DomainError(std::string(family) + ": requires " +
                      std::string(condition));
  }
}

double required_param(const std::map<std::string, double>& params,
                      std::string_view family, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw DomainError(std::string(family) + ": missing parameter '" + key +
                      "'");
  }
  return it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::string_view family,
                    std::initializer_list<std::string_view> known) {
  const std::set<std::string_view> allowed(known);
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key)) {
      throw DomainError(std::string(family) + ": unknown parameter '" + key +
                        "'");
    }
  }
}

double chebyshev_t(std::size_t n, double x) {
  const double nd = static_cast<double>(n);
  if (std::abs(x) <= 1.0) {
    return std::cos(nd * std::acos(x));
  }
  const double magnitude = std::cosh(nd * std::acosh(std::abs(x)));
  return (x < 0.0 && n % 2 == 1) ? -magnitude : magnitude;
}

double legendre_bonnet(std::size_t n, double x) {
  double prev = 1.0;
  if (n == 0) {
    return prev;
  }
  double cur = x;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0) * x * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Lₙ^α(x)/Lₙ^α(0) from (k+1)Lₖ₊₁ = (2k+1+α−x)Lₖ − (k+α)Lₖ₋₁.
double laguerre_ratio(std::size_t n, double alpha, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  double at_zero = 1.0 + alpha;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next =
        ((2.0 * kd + 1.0 + alpha - x) * cur - (kd + alpha) * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
    at_zero *= (alpha + kd + 1.0) / (kd + 1.0);
  }
  return cur / at_zero;
}

}  // namespace

std::string_view to_string(FamilyName name) {
  switch (name) {
    case FamilyName::ultraspherical:
      return "ultraspherical";
    case FamilyName::q_ultraspherical_pos:
      return "q_ultraspherical_pos";
    case FamilyName::q_ultraspherical_nonpos:
      return "q_ultraspherical_nonpos";
    case FamilyName::pollaczek:
      return "pollaczek";
    case FamilyName::laguerre:
      return "laguerre";
    case FamilyName::sec6_example:
      return "sec6_example";
    case FamilyName::chebyshev:
      return "chebyshev";
    case FamilyName::custom:
      return "custom";
  }
  return "custom";
}

std::optional<FamilyName> family_from_string(std::string_view name) {
  for (FamilyName f :
       {FamilyName::ultraspherical, FamilyName::q_ultraspherical_pos,
        FamilyName::q_ultraspherical_nonpos, FamilyName::pollaczek,
        FamilyName::laguerre, FamilyName::sec6_example, FamilyName::chebyshev,
        FamilyName::custom}) {
    if (to_string(f) == name) {
      return f;
    }
  }
  return std::nullopt;
}

PolynomialFamily make_ultraspherical(double lambda) {
  require(std::isfinite(lambda) && lambda > -0.5, "ultraspherical",
          "lambda > -1/2, got " + format_param("lambda", lambda));
  SequenceTraits traits;
  traits.symmetric = true;
  traits.row_sum = 1.0;
  auto coefficients = [lambda](std::size_t n) -> Coefficients {
    if (n == 0) {
      return {0.0, 0.0, 1.0};
    }
    const double nd = static_cast<double>(n);
    const double denom = 2.0 * nd + 2.0 * lambda;
    return {nd / denom, 0.0, (nd + 2.0 * lambda) / denom};
  };
  auto steps = [lambda](std::size_t n) -> Steps {
    double da = 0.0;
    if (n == 1) {
      da = 1.0 / (2.0 + 2.0 * lambda);
    } else {
      const double nd = static_cast<double>(n);
      da = 2.0 * lambda /
           ((2.0 * nd + 2.0 * lambda) * (2.0 * nd - 2.0 + 2.0 * lambda));
    }
    return {da, -da};
  };
  return {FamilyName::ultraspherical,
          {{"lambda", lambda}},
          CoefficientSequence(coefficients, traits, steps),
          false};
}

PolynomialFamily make_chebyshev() {
  PolynomialFamily family = make_ultraspherical(0.0);
  family.name = FamilyName::chebyshev;
  family.params.clear();
  return family;
}

PolynomialFamily make_q_ultraspherical(double beta, double q) {
  require(std::isfinite(q) && q > 0.0 && q < 1.0, "q_ultraspherical",
          "0 < q < 1, got " + format_param("q", q));
  require(std::isfinite(beta) && std::abs(beta) < 1.0, "q_ultraspherical",
          "|beta| < 1, got " + format_param("beta", beta));
  const bool positive = beta > 0.0;
  // Case β > 0 carries the factors β^{±1/2}; case β ≤ 0 has both limits 1/2.
  const double s = positive ? std::sqrt(beta) : 1.0;
  SequenceTraits traits;
  traits.symmetric = true;
  traits.limits = DeclaredLimits{s / 2.0, 1.0 / (2.0 * s)};
  if (positive) {
    traits.row_sum = (s + 1.0 / s) / 2.0;
  }
  auto coefficients = [beta, q, s](std::size_t n) -> Coefficients {
    const double qn = std::pow(q, static_cast<double>(n));
    const double denom = 2.0 * (1.0 - beta * qn);
    return {s * (1.0 - qn) / denom, 0.0,
            (1.0 - beta * beta * qn) / (s * denom)};
  };
  auto steps = [beta, q, s](std::size_t n) -> Steps {
    const double qn = std::pow(q, static_cast<double>(n));
    const double qm = std::pow(q, static_cast<double>(n - 1));
    const double d = 2.0 * (1.0 - beta * qn) * (1.0 - beta * qm);
    const double common = qm * (1.0 - q) * (1.0 - beta) / d;
    return {s * common, -beta * common / s};
  };
  return {positive ? FamilyName::q_ultraspherical_pos
                   : FamilyName::q_ultraspherical_nonpos,
          {{"beta", beta}, {"q", q}},
          CoefficientSequence(coefficients, traits, steps),
          true};
}

PolynomialFamily make_pollaczek(double lambda, double a) {
  require(std::isfinite(lambda) && lambda > 0.0, "pollaczek",
          "lambda > 0, got " + format_param("lambda", lambda));
  require(std::isfinite(a) && a > 0.0, "pollaczek",
          "a > 0, got " + format_param("a", a));
  const double c = lambda + a;
  SequenceTraits traits;
  traits.symmetric = true;
  traits.limits = DeclaredLimits{0.5, 0.5};
  auto coefficients = [lambda, c](std::size_t n) -> Coefficients {
    const double nd = static_cast<double>(n);
    const double denom = 2.0 * (nd + c);
    return {nd / denom, 0.0, (nd + 2.0 * lambda) / denom};
  };
  auto steps = [lambda, a, c](std::size_t n) -> Steps {
    const double nd = static_cast<double>(n);
    const double d = 2.0 * (nd + c) * (nd - 1.0 + c);
    return {c / d, (a - lambda) / d};
  };
  return {FamilyName::pollaczek,
          {{"a", a}, {"lambda", lambda}},
          CoefficientSequence(coefficients, traits, steps),
          true};
}

PolynomialFamily make_laguerre(double alpha) {
  require(std::isfinite(alpha) && alpha > -1.0, "laguerre",
          "alpha > -1, got " + format_param("alpha", alpha));
  SequenceTraits traits;
  traits.form = RecurrenceForm::half_line;
  auto coefficients = [alpha](std::size_t n) -> Coefficients {
    const double nd = static_cast<double>(n);
    return {nd, 0.0, nd + alpha + 1.0};
  };
  auto steps = [](std::size_t) -> Steps { return {1.0, 1.0}; };
  return {FamilyName::laguerre,
          {{"alpha", alpha}},
          CoefficientSequence(coefficients, traits, steps),
          false};
}

PolynomialFamily make_sec6_example() {
  SequenceTraits traits;
  traits.row_sum = 1.0;
  auto coefficients = [](std::size_t n) -> Coefficients {
    const double m = static_cast<double>(n) + 2.0;
    return {0.5 - 1.0 / m, 1.0 / (2.0 * m), 0.5 + 1.0 / (2.0 * m)};
  };
  auto steps = [](std::size_t n) -> Steps {
    const double nd = static_cast<double>(n);
    const double d = (nd + 1.0) * (nd + 2.0);
    return {1.0 / d, -0.5 / d};
  };
  return {FamilyName::sec6_example, {},
          CoefficientSequence(coefficients, traits, steps), false};
}

PolynomialFamily make_custom(std::vector<double> alpha,
                             std::vector<double> beta,
                             std::vector<double> gamma,
                             std::optional<DeclaredLimits> limits,
                             bool symmetric, RecurrenceForm form) {
  SequenceTraits traits;
  traits.form = form;
  traits.symmetric = symmetric;
  traits.limits = limits;
  if (form == RecurrenceForm::interval && !alpha.empty() &&
      alpha.size() == gamma.size() &&
      (beta.empty() || beta.size() == alpha.size())) {
    auto row = [&](std::size_t n) {
      return alpha[n] + (beta.empty() ? 0.0 : beta[n]) + gamma[n];
    };
    const double first = row(0);
    bool constant = true;
    for (std::size_t n = 1; n < alpha.size() && constant; ++n) {
      constant = approx_eq(row(n), first);
    }
    if (constant) {
      traits.row_sum = first;
    }
  }
  auto sequence = CoefficientSequence::from_table(
      std::move(alpha), std::move(beta), std::move(gamma), traits);
  return {FamilyName::custom, {}, std::move(sequence), false};
}

PolynomialFamily make_family(std::string_view name,
                             const std::map<std::string, double>& params) {
  if (name == "ultraspherical" || name == "gegenbauer") {
    reject_unknown(params, name, {"lambda"});
    return make_ultraspherical(required_param(params, name, "lambda"));
  }
  if (name == "legendre") {
    reject_unknown(params, name, {});
    return make_ultraspherical(0.5);
  }
  if (name == "chebyshev") {
    reject_unknown(params, name, {});
    return make_chebyshev();
  }
  if (name == "q_ultraspherical" || name == "q_ultraspherical_pos" ||
      name == "q_ultraspherical_nonpos") {
    reject_unknown(params, name, {"beta", "q"});
    const double beta = required_param(params, name, "beta");
    if (name == "q_ultraspherical_pos") {
      require(beta > 0.0, name, "beta > 0");
    } else if (name == "q_ultraspherical_nonpos") {
      require(beta <= 0.0, name, "beta <= 0");
    }
    return make_q_ultraspherical(beta, required_param(params, name, "q"));
  }
  if (name == "pollaczek") {
    reject_unknown(params, name, {"lambda", "a"});
    return make_pollaczek(required_param(params, name, "lambda"),
                          required_param(params, name, "a"));
  }
  if (name == "laguerre") {
    reject_unknown(params, name, {"alpha"});
    return make_laguerre(required_param(params, name, "alpha"));
  }
  if (name == "sec6_example") {
    reject_unknown(params, name, {});
    return make_sec6_example();
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::optional<double> oracle_value(const PolynomialFamily& family,
                                   std::size_t n, double x) {
  switch (family.name) {
    case FamilyName::chebyshev:
      return chebyshev_t(n, x);
    case FamilyName::ultraspherical: {
      const double lambda = family.params.at("lambda");
      if (lambda == 0.0) {
        return chebyshev_t(n, x);
      }
      if (lambda == 0.5) {
        return legendre_bonnet(n, x);
      }
      return std::nullopt;
    }
    case FamilyName::laguerre:
      return laguerre_ratio(n, family.params.at("alpha"), x);
    default:
      return std::nullopt;
  }
}

CoefficientSequence target_sequence(const PolynomialFamily& family,
                                    std::size_t N) {
  if (family.auxiliary) {
    return normalize_at_one(family.sequence, N).sequence;
  }
  return family.sequence;
}

Interval default_window(const PolynomialFamily& family) {
  if (family.sequence.form() == RecurrenceForm::half_line) {
    return {0.0, 50.0};
  }
  return {-1.0, 1.0};
}

}  // namespace turan
