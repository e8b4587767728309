#pragma once

#include <random>

#include "padic_moments/qt_series.hpp"

namespace padic::testing {

inline PrecisionProfile make_profile(unsigned long p, int N, int Q, int tmin, int tmax, int nmax = 8) {
  PrecisionProfile pr;
  pr.p = p;
  pr.precision = N;
  pr.q_order = Q;
  pr.tmin = tmin;
  pr.tmax = tmax;
  pr.nmax = nmax;
  return pr;
}

// Small random rational; p-integral when p_integral_for != 0.
inline Rational random_rational(std::mt19937& rng, unsigned long p_integral_for = 0) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long d = den(rng);
  while (p_integral_for != 0 && d % static_cast<long>(p_integral_for) == 0) d = den(rng);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

// Random series with the given number of terms, t-degrees in [tlo, thi].
inline QTSeries random_series(std::mt19937& rng, const PrecisionProfile& pr, int terms, int tlo, int thi,
                              unsigned long p_integral_for = 0) {
  QTSeries s(pr);
  std::uniform_int_distribution<int> qd(0, pr.q_order - 1), td(tlo, thi);
  for (int k = 0; k < terms; ++k) s.add_to(qd(rng), td(rng), random_rational(rng, p_integral_for));
  return s;
}

// Every coefficient of a - b has valuation >= N.
inline bool congruent(const QTSeries& a, const QTSeries& b, int N) {
  const QTSeries d = a - b;
  return d.min_valuation() >= N;
}

}  // namespace padic::testing
