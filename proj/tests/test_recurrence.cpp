#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "turan/errors.hpp"
#include "turan/families.hpp"
#include "turan/recurrence.hpp"

using namespace turan;

namespace {

CoefficientSequence table(std::vector<double> a, std::vector<double> b,
                          std::vector<double> g, bool symmetric = false) {
  SequenceTraits t;
  t.symmetric = symmetric;
  return CoefficientSequence::from_table(std::move(a), std::move(b),
                                         std::move(g), t);
}

CoefficientSequence constant_symmetric(double alpha, double gamma,
                                       double gamma0) {
  SequenceTraits t;
  t.symmetric = true;
  return CoefficientSequence(
      [=](std::size_t n) -> Coefficients {
        return n == 0 ? Coefficients{0.0, 0.0, gamma0}
                      : Coefficients{alpha, 0.0, gamma};
      },
      t);
}

}  // namespace

TEST_CASE("degree zero is the constant one") {
  const auto seq = make_ultraspherical(1.0).sequence;
  for (double x : {-3.0, 0.0, 0.7}) {
    const auto t = eval_polynomials(seq, x, 0);
    REQUIRE(t.values.size() == 1);
    CHECK(t[0] == 1.0);
  }
}

TEST_CASE("first degree is (x - beta0)/gamma0") {
  const auto seq = table({0.0, 0.5}, {0.0, 0.0}, {1.0, 0.5});
  const auto t = eval_polynomials(seq, 0.3, 1);
  CHECK(t[1] == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("chebyshev coefficients give 2x^2 - 1") {
  const auto seq = constant_symmetric(0.5, 0.5, 1.0);
  const auto t = eval_polynomials(seq, 0.5, 2);
  CHECK(t[2] == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("row sums") {
  SUBCASE("legendre is normalized with zero deviation") {
    const auto r = check_normalization(make_ultraspherical(0.5).sequence,
                                       2000, 1e-12);
    CHECK(r.normalized);
    CHECK(r.max_deviation <= 2.3e-16);
  }
  SUBCASE("constant 0.9 is not") {
    const auto r =
        check_normalization(constant_symmetric(0.45, 0.45, 0.9), 50, 1e-12);
    CHECK_FALSE(r.normalized);
    CHECK(r.max_deviation == doctest::Approx(0.1));
  }
  SUBCASE("nonsymmetric example telescopes to one") {
    const auto seq = make_sec6_example().sequence;
    CHECK(check_normalization(seq, 1000, 1e-12).normalized);
    const auto c = seq.at(3);
    CHECK(c.alpha + c.beta + c.gamma == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("normalize_at_one") {
  SUBCASE("already normalized input is unchanged") {
    const auto seq = make_ultraspherical(0.5).sequence;
    const auto n = normalize_at_one(seq, 100);
    for (double r : n.ledger.ratios) {
      CHECK(r == doctest::Approx(1.0).epsilon(1e-14));
    }
    for (std::size_t k = 0; k <= 100; ++k) {
      CHECK(n.sequence.alpha(k) == doctest::Approx(seq.alpha(k)).epsilon(1e-14));
      CHECK(n.sequence.gamma(k) == doctest::Approx(seq.gamma(k)).epsilon(1e-14));
      CHECK(n.sequence.beta(k) == 0.0);
    }
  }
  SUBCASE("q-ultraspherical beta=0.25 q=0.5 gets row sums 1") {
    const auto aux = make_q_ultraspherical(0.25, 0.5).sequence;
    CHECK(*aux.row_sum() == doctest::Approx(1.25).epsilon(1e-15));
    const auto n = normalize_at_one(aux, 500);
    for (std::size_t k = 0; k <= 500; ++k) {
      CHECK(std::abs(n.sequence.alpha(k) + n.sequence.gamma(k) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("pollaczek lambda=1 a=2 ratios are nondecreasing") {
    const auto n = normalize_at_one(make_pollaczek(1.0, 2.0).sequence, 50);
    CHECK(n.ledger.ratios_nondecreasing());
    CHECK(n.ledger.ratios.size() == 51);
    CHECK(n.ledger.c.size() == 50);
    for (double c : n.ledger.c) {
      CHECK(c > 0.0);
    }
    for (double v : n.ledger.endpoint_values) {
      CHECK(v > 0.0);
    }
  }
  SUBCASE("idempotent") {
    const auto once = normalize_at_one(make_pollaczek(0.5, 2.0).sequence, 200);
    const auto twice = normalize_at_one(once.sequence, 200);
    for (std::size_t k = 0; k <= 200; ++k) {
      CHECK(twice.sequence.alpha(k) ==
            doctest::Approx(once.sequence.alpha(k)).epsilon(1e-13));
      CHECK(twice.sequence.gamma(k) ==
            doctest::Approx(once.sequence.gamma(k)).epsilon(1e-13));
    }
  }
  SUBCASE("interval reaching past 1 cannot be normalized") {
    // αₙ = γₙ = 1 has support [−2, 2]; pₙ(1) changes sign at n = 2.
    const auto seq = constant_symmetric(1.0, 1.0, 1.0);
    CHECK_THROWS_AS(normalize_at_one(seq, 10), NormalizationError);
  }
  SUBCASE("half-line input is rejected") {
    CHECK_THROWS_AS(normalize_at_one(make_laguerre(0.0).sequence, 10),
                    PreconditionError);
  }
}

TEST_CASE("half_line_transform") {
  SUBCASE("laguerre alpha=0") {
    const auto q = half_line_transform(make_laguerre(0.0).sequence);
    CHECK(q.form() == RecurrenceForm::interval);
    CHECK(q.beta(0) == 0.0);
    CHECK(q.gamma(0) == 1.0);
    CHECK(q.alpha(5) == 5.0);
    CHECK(q.gamma(5) == 6.0);
    CHECK(q.beta(5) == -10.0);
    const auto t = eval_polynomials(q, 1.0, 30);
    for (double v : t.values) {
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("laguerre alpha=1: q1(0) = p1(1) = 1/2") {
    const auto half = make_laguerre(1.0).sequence;
    const auto q = half_line_transform(half);
    CHECK(eval_polynomials(q, 0.0, 1)[1] == doctest::Approx(0.5));
    CHECK(eval_polynomials(half, 1.0, 1)[1] == doctest::Approx(0.5));
  }
  SUBCASE("q_n(x) = p_n(1 - x)") {
    const auto half = make_laguerre(2.5).sequence;
    const auto q = half_line_transform(half);
    for (double x : {-3.0, 0.2, 4.0}) {
      const auto a = eval_polynomials(q, x, 25);
      const auto b = eval_polynomials(half, 1.0 - x, 25);
      for (std::size_t n = 0; n <= 25; ++n) {
        CHECK(a[n] == doctest::Approx(b[n]).epsilon(1e-10));
      }
    }
  }
  SUBCASE("alpha0 != 0 is rejected") {
    SequenceTraits t;
    t.form = RecurrenceForm::half_line;
    const auto bad = CoefficientSequence::from_table({0.5, 1.0}, {}, {1.0, 2.0}, t);
    CHECK_THROWS_AS(half_line_transform(bad), PreconditionError);
  }
  SUBCASE("interval input is rejected") {
    CHECK_THROWS_AS(half_line_transform(make_sec6_example().sequence),
                    PreconditionError);
  }
}

TEST_CASE("evaluation errors") {
  SUBCASE("nonpositive gamma") {
    const auto seq = table({0.0, 0.5, 0.5}, {}, {1.0, 0.0, 0.5});
    CHECK_THROWS_AS(eval_polynomials(seq, 0.2, 2), InvalidSequence);
  }
  SUBCASE("overflow carries the degree") {
    const auto seq = constant_symmetric(1e-3, 1e-3, 1.0);
    try {
      eval_polynomials(seq, 1e3, 2000);
      FAIL("expected overflow");
    } catch (const EvaluationOverflow& e) {
      CHECK(e.degree > 1);
      CHECK(e.x == 1e3);
    }
  }
  SUBCASE("past the table horizon") {
    const auto seq = table({0.0, 0.5}, {}, {1.0, 0.5});
    CHECK(seq.horizon() == std::size_t{1});
    CHECK_THROWS_AS(eval_polynomials(seq, 0.1, 3), HorizonError);
    CHECK_NOTHROW(eval_polynomials(seq, 0.1, 2));
  }
  SUBCASE("degree cap") {
    CHECK_THROWS(eval_polynomials(make_ultraspherical(0.5).sequence, 0.0, 2001));
  }
}

TEST_CASE("validate_sequence") {
  CHECK_NOTHROW(validate_sequence(make_ultraspherical(0.5).sequence, 2000));
  try {
    validate_sequence(table({0.1, 0.5}, {}, {1.0, 0.5}), 1);
    FAIL("expected invalid sequence");
  } catch (const InvalidSequence& e) {
    CHECK(e.index == 0);
  }
  try {
    validate_sequence(table({0.0, 0.5, -0.5}, {}, {1.0, 0.5, 1.5}), 2);
    FAIL("expected invalid sequence");
  } catch (const InvalidSequence& e) {
    CHECK(e.index == 2);
  }
  CHECK_THROWS_AS(table({0.0, 0.5}, {0.0, 0.1}, {1.0, 0.4}, true),
                  InvalidSequence);
}

TEST_CASE("recurrence residual stays at rounding level") {
  for (const auto& f :
       {make_ultraspherical(-0.45), make_ultraspherical(3.0),
        make_sec6_example(), make_q_ultraspherical(0.5, 0.7),
        make_pollaczek(2.0, 0.5)}) {
    for (double x : {-1.0, -0.3, 0.0, 0.61, 1.0}) {
      const auto t = eval_polynomials(f.sequence, x, 500);
      CHECK(max_recurrence_residual(t, f.sequence) <= 1e-12);
    }
  }
}

TEST_CASE("symmetric sequences are even or odd") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  const auto seq = make_ultraspherical(1.0).sequence;
  for (int k = 0; k < 50; ++k) {
    const double x = u(rng);
    const auto a = eval_polynomials(seq, x, 100);
    const auto b = eval_polynomials(seq, -x, 100);
    for (std::size_t n = 0; n <= 100; ++n) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(std::abs(b[n] - sign * a[n]) <=
            1e-12 * std::max(1.0, std::abs(a[n])));
    }
  }
}

TEST_CASE("row-sum-1 sequences take the value 1 at x = 1") {
  for (const auto& f : {make_ultraspherical(0.5), make_ultraspherical(-0.25),
                        make_sec6_example(), make_chebyshev()}) {
    const auto t = eval_polynomials(f.sequence, 1.0, 200);
    for (double v : t.values) {
      CHECK(std::abs(v - 1.0) <= 1e-10);
    }
  }
}
