#include <doctest.h>

#include "helpers.hpp"
#include "padic_moments/errors.hpp"
#include "padic_moments/qt_series.hpp"

using namespace padic;
using namespace padic::testing;

namespace {

QTSeries geometric(const PrecisionProfile& pr) {
  QTSeries s(pr);
  for (int k = 0; k < pr.tmax; ++k) s.set(0, k, 1);
  return s;
}

// Restriction of s to t-degrees in [lo, hi).
QTSeries core(const QTSeries& s, int lo, int hi) {
  QTSeries out(s.profile());
  s.for_each_nonzero([&](int i, int j, const Rational& c) {
    if (lo <= j && j < hi) out.set(i, j, c);
  });
  return out;
}

}  // namespace

TEST_CASE("profile validation") {
  CHECK_NOTHROW(make_profile(3, 4, 1, -16, 1).validate());
  CHECK_THROWS_AS(make_profile(4, 4, 1, -16, 1).validate(), ConfigError);
  CHECK_THROWS_AS(make_profile(3, 0, 1, -16, 1).validate(), ConfigError);
  CHECK_THROWS_AS(make_profile(3, 4, 1, 1, 4).validate(), ConfigError);
}

TEST_CASE("basic ring examples") {
  const auto pr = make_profile(3, 4, 3, -8, 6);
  std::mt19937 rng(1);
  const QTSeries s = random_series(rng, pr, 12, -8, 5);
  CHECK(QTSeries::constant(pr, 1) * s == s);
  CHECK(QTSeries::monomial(pr, 0, -1) * QTSeries::monomial(pr, 0, 1) == QTSeries::constant(pr, 1));
  const QTSeries one_minus_t = QTSeries::constant(pr, 1) - QTSeries::monomial(pr, 0, 1);
  CHECK(one_minus_t * geometric(pr) == QTSeries::constant(pr, 1));
  CHECK(QTSeries(pr).is_zero());
  CHECK(QTSeries(pr) * s == QTSeries(pr));
  CHECK(s.coeff(0, 100) == 0);
  QTSeries dropped(pr);
  dropped.set(0, 6, 5);
  dropped.set(3, 0, 5);
  CHECK(dropped.is_zero());
}

TEST_CASE("profile mismatch") {
  const auto a = make_profile(3, 4, 2, -8, 6);
  const auto b = make_profile(3, 4, 2, -9, 6);
  CHECK_THROWS_AS(QTSeries(a) + QTSeries(b), ProfileMismatchError);
  CHECK_THROWS_AS(QTSeries(a) * QTSeries(b), ProfileMismatchError);
}

TEST_CASE("ring axioms on random inputs") {
  // Supports in [-3, 3] stay inside a [-20, 20) window for triple products.
  const auto pr = make_profile(5, 4, 3, -20, 20);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const QTSeries a = random_series(rng, pr, 6, -3, 3);
    const QTSeries b = random_series(rng, pr, 6, -3, 3);
    const QTSeries c = random_series(rng, pr, 6, -3, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == QTSeries(pr));
    CHECK(-a + a == QTSeries(pr));
  }
}

TEST_CASE("row support and shifts") {
  const auto pr = make_profile(3, 4, 2, -8, 6);
  QTSeries s(pr);
  s.set(1, -3, 2);
  s.set(1, 2, 1);
  CHECK(s.row_support(0).first == s.row_support(0).second);
  CHECK(s.row_support(1) == std::make_pair(-3, 3));
  CHECK(s.shifted_t(1).coeff(1, 3) == 1);
  CHECK(s.shifted_t(4).coeff(1, 6) == 0);
  CHECK(s.t_derivative().coeff(1, -4) == -6);
  CHECK(s.t_derivative().coeff(1, 1) == 2);
  CHECK(s.q_power_substituted(2).is_zero());
  CHECK(QTSeries::monomial(pr, 0, 1, Rational(9, 2)).min_valuation() == 2);
  CHECK(QTSeries(pr).min_valuation() == kInfiniteValuation);
}

TEST_CASE("invert examples") {
  const auto pr = make_profile(3, 4, 4, -10, 8);
  const QTSeries one = QTSeries::constant(pr, 1);
  const QTSeries t = QTSeries::monomial(pr, 0, 1);
  CHECK(invert(one - t) == geometric(pr));
  CHECK(invert(t) == QTSeries::monomial(pr, 0, -1));
  const QTSeries one_minus_q = one - QTSeries::monomial(pr, 1, 0);
  CHECK(invert(one_minus_q) * one_minus_q == one);
  CHECK_THROWS_AS(invert(QTSeries::monomial(pr, 1, 0)), DomainError);
  // higher row below the leading t-degree
  CHECK_THROWS_AS(invert(t + QTSeries::monomial(pr, 1, 0)), DomainError);
}

TEST_CASE("invert is exact on random units") {
  const auto pr = make_profile(2, 6, 3, -12, 7);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    // For d < 0 the top d coefficients of the inverse fall outside the window.
    const int d = static_cast<int>(rng() % 3);
    QTSeries a = random_series(rng, pr, 5, d + 1, 6);
    a.set(0, d, 1 + static_cast<long>(rng() % 4));
    for (int j = pr.tmin; j < d; ++j)
      for (int i = 0; i < pr.q_order; ++i) a.set(i, j, 0);
    CHECK(a * invert(a) == QTSeries::constant(pr, 1));
  }
}

TEST_CASE("log1p and exp0 examples") {
  const auto pr = make_profile(3, 4, 4, -6, 7);
  const QTSeries zero(pr);
  CHECK(log1p(zero).is_zero());
  CHECK(exp0(zero) == QTSeries::constant(pr, 1));
  QTSeries want(pr);
  for (int k = 1; k < pr.tmax; ++k) want.set(0, k, Rational(-1) / k);
  CHECK(log1p(-QTSeries::monomial(pr, 0, 1)) == want);
  const QTSeries q = QTSeries::monomial(pr, 1, 0);
  CHECK(exp0(log1p(q)) == QTSeries::constant(pr, 1) + q);
  CHECK_THROWS_AS(log1p(QTSeries::constant(pr, 1)), DomainError);
  CHECK_THROWS_AS(exp0(QTSeries::monomial(pr, 0, -1)), DomainError);
}

TEST_CASE("exp0 and log1p are inverse on 100 random inputs") {
  const auto pr = make_profile(3, 4, 4, -6, 7);
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    QTSeries s = random_series(rng, pr, 6, 0, 6);
    for (int j = pr.tmin; j <= 0; ++j) s.set(0, j, 0);
    CHECK(exp0(log1p(s)) == QTSeries::constant(pr, 1) + s);
    CHECK(log1p(exp0(s) - QTSeries::constant(pr, 1)) == s);
  }
}

TEST_CASE("zeta coefficients") {
  CHECK(zeta_coefficients(2) == std::vector<Integer>{1, -1});
  CHECK(zeta_coefficients(3) == std::vector<Integer>{0, 1, -1});
  // (t^-1 - 1)^p = t^-p - 1 + p zeta, checked as polynomials in u = t^-1.
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const auto z = zeta_coefficients(p);
    for (unsigned long i = 0; i <= p; ++i) {
      Integer lhs = binomial(p, i) * ((p - i) % 2 == 0 ? 1 : -1);
      Integer rhs = (i == p ? 1 : 0) - (i == 0 ? 1 : 0) + (i < p ? Integer(p) * z[i] : Integer(0));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("frobenius examples") {
  const auto pr = make_profile(3, 4, 7, -16, 5);
  CHECK(frobenius(QTSeries::monomial(pr, 1, 0)) == QTSeries::monomial(pr, 3, 0));
  CHECK(frobenius(QTSeries::monomial(pr, 3, 0)).is_zero());
  const QTSeries t = QTSeries::monomial(pr, 0, 1), one = QTSeries::constant(pr, 1);
  CHECK(frobenius(t) == one - (one - t) * (one - t) * (one - t));
  CHECK(frobenius(one) == one);

  const auto p2 = make_profile(2, 5, 1, -20, 3);
  const QTSeries ti = QTSeries::monomial(p2, 0, -1), o2 = QTSeries::constant(p2, 1);
  QTSeries want(p2), zk = o2;
  for (int k = 0; k < 5; ++k) {
    want += zk * Rational(1 << k);
    zk *= o2 - ti;
  }
  want *= QTSeries::monomial(p2, 0, -2);
  CHECK(frobenius(ti) == want);
}

TEST_CASE("frobenius tail soundness") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (int N : {2, 4, 6}) {
      const auto pr = make_profile(p, N, 1, -60, 2);
      auto next = pr;
      next.precision = N + 1;
      for (int m = 1; m <= 5; ++m) {
        const QTSeries dropped = frobenius_t_power(next, -m).restricted(pr) - frobenius_t_power(pr, -m);
        CHECK(dropped.min_valuation() >= N);
      }
    }
  }
}

TEST_CASE("frobenius(t^-1) frobenius(t) = 1 mod p^N") {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const int N = 5;
    const auto pr = make_profile(p, N, 1, -40, 10);
    const QTSeries prod = frobenius_t_power(pr, -1) * frobenius(QTSeries::monomial(pr, 0, 1));
    const int lo = pr.tmin + static_cast<int>(p);
    CHECK(congruent(core(prod, lo, pr.tmax), core(QTSeries::constant(pr, 1), lo, pr.tmax), N));
  }
}

TEST_CASE("frobenius is a ring homomorphism mod p^N") {
  std::mt19937 rng(5);
  for (unsigned long p : {2ul, 3ul}) {
    const int N = 4, span = 2;
    // No truncation at the top; the bottom loses at most p * 2 * span degrees.
    const auto pr = make_profile(p, N, 4, -48, static_cast<int>(p) * 2 * span + 1);
    const int lo = pr.tmin + static_cast<int>(p) * 2 * span;
    for (int trial = 0; trial < 10; ++trial) {
      const QTSeries a = random_series(rng, pr, 5, -span, span, p);
      const QTSeries b = random_series(rng, pr, 5, -span, span, p);
      CHECK(congruent(core(frobenius(a * b), lo, pr.tmax), core(frobenius(a) * frobenius(b), lo, pr.tmax), N));
      CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
    }
  }
}

TEST_CASE("minus log(1 - t)") {
  const auto pr = make_profile(3, 4, 2, -4, 6);
  const QTSeries y = minus_log_one_minus_t(pr);
  for (int k = 1; k < 6; ++k) CHECK(y.coeff(0, k) == Rational(1) / k);
  CHECK(y.coeff(0, 0) == 0);
  CHECK(y.row_is_zero(1));
}
