#pragma once

#include <string>
#include <vector>

#include "padic_moments/congruence.hpp"

namespace padic {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Coefficients where a and b differ, as "q^i t^j: a vs b" (at most limit).
std::vector<std::string> series_differences(const QTSeries& a, const QTSeries& b, std::size_t limit = 5);

// Closed form against generating function, entrywise and exactly.  For
// Todd# the pole variant is compared with genfn(Todd#) - genfn(Todd).
CheckResult check_route_equivalence(OrientationKind kind, const Rational& c,
                                    const PrecisionProfile& profile);

// log w - log s(w) = sum_{3 <= n < wmax} g_n w^n / n!.
CheckResult check_sigma_eisenstein(const PrecisionProfile& profile, int wmax);

// Taylor shift against substitution for exp(x + y).
CheckResult check_sharp_dual(OrientationKind base, const PrecisionProfile& profile, int order);

// Todd law a + b - ab, unitality and commutativity of the Witten law.
CheckResult check_fgl(const PrecisionProfile& profile);

// exp# against xi gamma / (xi +_F gamma).
CheckResult check_coordinate_identity(OrientationKind base, const PrecisionProfile& profile, int order);

// valuation(M_{(p-1)p^j} - M_0) for Todd moments, j = 0..jmax.
std::vector<long> m0_limit_valuations(unsigned long p, const Rational& c, int precision, int jmax);
CheckResult check_m0_limit(unsigned long p, const Rational& c, int precision, int jmax);

CheckResult check_odd_witten_vanishing(const Rational& c, const PrecisionProfile& profile);

std::vector<CheckResult> run_selfcheck(const Rational& c, const PrecisionProfile& profile);

}  // namespace padic
