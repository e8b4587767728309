#include "padic_moments/checks.hpp"

#include <sstream>

namespace padic {

std::vector<std::string> series_differences(const QTSeries& a, const QTSeries& b, std::size_t limit) {
  std::vector<std::string> out;
  if (!(a.profile() == b.profile())) {
    out.push_back("profiles differ");
    return out;
  }
  const auto& pr = a.profile();
  for (int i = 0; i < pr.q_order && out.size() < limit; ++i)
    for (int j = pr.tmin; j < pr.tmax && out.size() < limit; ++j)
      if (a.coeff(i, j) != b.coeff(i, j))
        out.push_back("q^" + std::to_string(i) + " t^" + std::to_string(j) + ": " +
                      to_string(a.coeff(i, j)) + " vs " + to_string(b.coeff(i, j)));
  return out;
}

namespace {

CheckResult compare_sequences(const std::string& name, const std::vector<QTSeries>& a,
                              const std::vector<QTSeries>& b, int from, int to) {
  CheckResult r{name, true, ""};
  for (int n = from; n <= to; ++n) {
    const auto diff = series_differences(a.at(n), b.at(n));
    if (diff.empty()) continue;
    r.passed = false;
    r.detail = "M_" + std::to_string(n) + " differs at " + diff.front();
    return r;
  }
  r.detail = "n = " + std::to_string(from) + ".." + std::to_string(to) + " identical";
  return r;
}

template <class F>
CheckResult guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

CheckResult check_route_equivalence(OrientationKind kind, const Rational& c,
                                    const PrecisionProfile& profile) {
  const std::string name = "route equivalence " + to_string(kind) + " p=" + std::to_string(profile.p);
  return guarded(name, [&] {
    const MomentSequence gen = moments_generating_function(kind, c, profile);
    if (kind == OrientationKind::todd_sharp) {
      const MomentSequence closed = moments_closed_form(kind, c, profile, ToddSharpVariant::pole_part);
      const MomentSequence bern = moments_generating_function(OrientationKind::todd, c, profile);
      std::vector<QTSeries> pole(gen.entries.size(), QTSeries(profile));
      for (std::size_t n = 1; n < gen.entries.size(); ++n) pole[n] = gen.entries[n] - bern.entries[n];
      return compare_sequences(name, closed.entries, pole, 1, profile.nmax);
    }
    const MomentSequence closed = moments_closed_form(kind, c, profile);
    return compare_sequences(name, closed.entries, gen.entries, 1, profile.nmax);
  });
}

CheckResult check_sigma_eisenstein(const PrecisionProfile& profile, int wmax) {
  const std::string name = "sigma/Eisenstein identity to w^" + std::to_string(wmax - 1);
  return guarded(name, [&] {
    const WSeries L = sigma_log(profile, wmax);
    for (int k = 0; k < wmax; ++k) {
      const QTSeries& got = L.coeff(k);
      QTSeries want(got.profile());
      if (k >= 3) want = eisenstein_g(k, profile).restricted(got.profile()) * Rational(-1, 1) *
                         (Rational(1) / Rational(factorial(k)));
      const auto diff = series_differences(got, want);
      if (!diff.empty()) return CheckResult{name, false, "w^" + std::to_string(k) + " " + diff.front()};
    }
    return CheckResult{name, true, "Q = " + std::to_string(profile.q_order)};
  });
}

CheckResult check_sharp_dual(OrientationKind base, const PrecisionProfile& profile, int order) {
  const std::string name = "sharp dual computation " + to_string(base);
  return guarded(name, [&] {
    const XSeries e = exponential(base, profile, order + profile.tmax);
    const XSeries generic = xcompose_shift(e, minus_log_one_minus_t(profile), order);
    const XSeries special = shifted_exponential(base, profile, order);
    for (int n = 0; n < order; ++n) {
      const auto diff = series_differences(generic[n], special[n]);
      if (!diff.empty()) return CheckResult{name, false, "x^" + std::to_string(n) + " " + diff.front()};
    }
    return CheckResult{name, true, "exp(x+y) agrees to x^" + std::to_string(order - 1)};
  });
}

CheckResult check_fgl(const PrecisionProfile& profile) {
  const std::string name = "formal group law identities";
  return guarded(name, [&] {
    const PrecisionProfile& pr = profile;
    QTSeries a = QTSeries::monomial(pr, 0, 1) - QTSeries::monomial(pr, 0, 2, 3) +
                 QTSeries::monomial(pr, 1, 0) + QTSeries::monomial(pr, 1, 1);
    QTSeries b = QTSeries::monomial(pr, 0, 1, 2) + QTSeries::monomial(pr, 0, 3, Rational(1, 5)) +
                 QTSeries::monomial(pr, 2, 1);
    const int order = pr.tmax + pr.q_order + 2;
    const XSeries todd = exponential(OrientationKind::todd, pr, order);
    const QTSeries todd_sum = fgl_add(todd, a, b);
    auto diff = series_differences(todd_sum, a + b - a * b);
    if (!diff.empty()) return CheckResult{name, false, "Todd law " + diff.front()};
    diff = series_differences(fgl_add(todd, a, QTSeries(pr)), a);
    if (!diff.empty()) return CheckResult{name, false, "Todd unitality " + diff.front()};
    const XSeries wit = exponential(OrientationKind::witten, pr, order);
    const QTSeries ab = fgl_add(wit, a, b);
    diff = series_differences(ab, fgl_add(wit, b, a));
    if (!diff.empty()) return CheckResult{name, false, "Witten commutativity " + diff.front()};
    diff = series_differences(fgl_add(wit, a, QTSeries(pr)), a);
    if (!diff.empty()) return CheckResult{name, false, "Witten unitality " + diff.front()};
    return CheckResult{name, true, "Todd law a+b-ab, unitality, commutativity"};
  });
}

CheckResult check_coordinate_identity(OrientationKind base, const PrecisionProfile& profile, int order) {
  const std::string name = "sharp coordinate identity " + to_string(base);
  return guarded(name, [&] {
    const XSeries direct = sharp(base, profile, order);
    const XSeries e = exponential(base, profile, order + profile.tmax + 1);
    const XSeries coords = sharp_by_coordinates(e, order);
    for (int n = 0; n < order; ++n) {
      const auto diff = series_differences(direct[n], coords[n]);
      if (!diff.empty()) return CheckResult{name, false, "x^" + std::to_string(n) + " " + diff.front()};
    }
    return CheckResult{name, true, "to x^" + std::to_string(order - 1)};
  });
}

std::vector<long> m0_limit_valuations(unsigned long p, const Rational& c, int precision, int jmax) {
  PrecisionProfile pr;
  pr.p = p;
  pr.precision = precision;
  pr.q_order = 1;
  pr.tmin = 0;
  pr.tmax = 1;
  pr.nmax = static_cast<int>((p - 1) * power(Integer(p), jmax).get_ui());
  const MomentSequence todd = moments_closed_form(OrientationKind::todd, c, pr);
  std::vector<long> out;
  for (int j = 0; j <= jmax; ++j) {
    const int n = static_cast<int>((p - 1) * power(Integer(p), j).get_ui());
    out.push_back(valuation(todd.at(n).coeff(0, 0) - todd.at(0).coeff(0, 0), p));
  }
  return out;
}

CheckResult check_m0_limit(unsigned long p, const Rational& c, int precision, int jmax) {
  const std::string name = "M_0 limit p=" + std::to_string(p) + " c=" + c.get_str();
  return guarded(name, [&] {
    const auto v = m0_limit_valuations(p, c, precision, jmax);
    std::ostringstream detail;
    detail << "valuations";
    bool ok = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      detail << ' ' << v[k];
      if (k > 0 && !(v[k] > v[k - 1])) ok = false;
    }
    return CheckResult{name, ok, detail.str()};
  });
}

CheckResult check_odd_witten_vanishing(const Rational& c, const PrecisionProfile& profile) {
  const std::string name = "odd Witten moments vanish";
  return guarded(name, [&] {
    const MomentSequence gen = moments_generating_function(OrientationKind::witten, c, profile);
    const MomentSequence closed = moments_closed_form(OrientationKind::witten, c, profile);
    for (int n = 1; n <= profile.nmax; n += 2)
      if (!gen.at(n).is_zero() || !closed.at(n).is_zero())
        return CheckResult{name, false, "M_" + std::to_string(n) + " is nonzero"};
    return CheckResult{name, true, "n odd <= " + std::to_string(profile.nmax)};
  });
}

std::vector<CheckResult> run_selfcheck(const Rational& c, const PrecisionProfile& profile) {
  std::vector<CheckResult> out;
  out.push_back(check_route_equivalence(OrientationKind::todd_sharp, c, profile));
  PrecisionProfile wit = profile;
  wit.nmax = std::min(profile.nmax, 6);
  out.push_back(check_route_equivalence(OrientationKind::witten_sharp, c, wit));
  PrecisionProfile q_only = profile;
  q_only.tmin = 0;
  q_only.tmax = 1;
  out.push_back(check_sigma_eisenstein(q_only, 11));
  const int order = std::min(profile.nmax, 6) + 2;
  out.push_back(check_sharp_dual(OrientationKind::todd, profile, order));
  out.push_back(check_sharp_dual(OrientationKind::witten, profile, order));
  PrecisionProfile small = profile.with_window(std::max(profile.tmin, -8), std::min(profile.tmax, 6));
  small.q_order = std::min(profile.q_order, 3);
  out.push_back(check_fgl(small));
  out.push_back(check_coordinate_identity(OrientationKind::todd, small, 5));
  out.push_back(check_coordinate_identity(OrientationKind::witten, small, 5));
  out.push_back(check_m0_limit(3, 4, 4, 2));
  out.push_back(check_odd_witten_vanishing(c, profile));
  return out;
}

}  // namespace padic
