#include "padic_moments/orientations.hpp"

#include <algorithm>

#include "padic_moments/parallel.hpp"

namespace padic {

std::string to_string(OrientationKind kind) {
  switch (kind) {
    case OrientationKind::todd: return "todd";
    case OrientationKind::witten: return "witten";
    case OrientationKind::todd_sharp: return "todd-sharp";
    case OrientationKind::witten_sharp: return "witten-sharp";
  }
  return "?";
}

std::string to_string(Route route) {
  return route == Route::closed_form ? "closed" : "genfn";
}

std::string to_string(ToddSharpVariant variant) {
  return variant == ToddSharpVariant::full ? "full" : "pole";
}

OrientationKind parse_orientation_kind(const std::string& text) {
  for (auto k : {OrientationKind::todd, OrientationKind::witten, OrientationKind::todd_sharp,
                 OrientationKind::witten_sharp})
    if (to_string(k) == text) return k;
  throw ConfigError("unknown orientation kind: " + text);
}

Route parse_route(const std::string& text) {
  if (text == "closed") return Route::closed_form;
  if (text == "genfn") return Route::generating_function;
  throw ConfigError("unknown route: " + text);
}

ToddSharpVariant parse_variant(const std::string& text) {
  if (text == "full") return ToddSharpVariant::full;
  if (text == "pole") return ToddSharpVariant::pole_part;
  throw ConfigError("unknown Todd# variant: " + text);
}

bool is_sharp(OrientationKind kind) {
  return kind == OrientationKind::todd_sharp || kind == OrientationKind::witten_sharp;
}

OrientationKind base_kind(OrientationKind kind) {
  if (kind == OrientationKind::todd_sharp) return OrientationKind::todd;
  if (kind == OrientationKind::witten_sharp) return OrientationKind::witten;
  return kind;
}

namespace {

// e^(sign x) scaled by the QTSeries factor.
XSeries scaled_exp(const PrecisionProfile& pr, int order, int sign, const QTSeries& factor) {
  XSeries out(pr, order);
  for (int k = 0; k < order; ++k) {
    Rational c = Rational(1) / Rational(factorial(k));
    if (sign < 0 && k % 2 == 1) c = -c;
    out[k] = factor * c;
  }
  return out;
}

// 1 - u e^-x times the Witten factors, with e^-x -> u e^-x and
// e^x -> v e^x.
XSeries product_exponential(OrientationKind base, const PrecisionProfile& pr, int order,
                            const QTSeries& u, const QTSeries& v) {
  const QTSeries one = QTSeries::constant(pr, 1);
  XSeries out = scaled_exp(pr, order, -1, -u);
  out[0] += one;
  if (base == OrientationKind::todd) return out;
  if (base != OrientationKind::witten) throw DomainError("exponential: base kind must be todd or witten");
  for (int j = 1; j < pr.q_order; ++j) {
    const QTSeries qj = QTSeries::monomial(pr, j, 0);
    XSeries minus = scaled_exp(pr, order, -1, -(qj * u));
    XSeries plus = scaled_exp(pr, order, +1, -(qj * v));
    minus[0] += one;
    plus[0] += one;
    out = xmul(xmul(out, minus), plus);
    const QTSeries d = one - qj;
    out *= invert(d * d);
  }
  return out;
}

void require_exponential(const XSeries& e) {
  if (e.order() < 2 || !e[0].is_zero() || e[1] != QTSeries::constant(e.profile(), 1))
    throw DomainError("not an exponential: need zero constant term and linear term 1");
}

Rational one_minus_c_pow(const Rational& c, int n) { return 1 - power(c, n); }

Rational p_pow(unsigned long p, int e) { return Rational(power(Integer(p), e)); }

}  // namespace

XSeries exponential(OrientationKind base, const PrecisionProfile& profile, int order) {
  const QTSeries one = QTSeries::constant(profile, 1);
  return product_exponential(base, profile, order, one, one);
}

XSeries shifted_exponential(OrientationKind base, const PrecisionProfile& profile, int order) {
  const QTSeries u = QTSeries::constant(profile, 1) - QTSeries::monomial(profile, 0, 1);
  return product_exponential(base, profile, order, u, invert(u));
}

XSeries sharp(const XSeries& e, int order) {
  require_exponential(e);
  const QTSeries y = minus_log_one_minus_t(e.profile());
  const XSeries shifted = xcompose_shift(e, y, order);
  XSeries out = xmul(e.truncated(order), xinverse(shifted));
  out *= shifted[0];
  return out;
}

XSeries sharp(OrientationKind base, const PrecisionProfile& profile, int order) {
  // y^k leaves the window once k >= tmax.
  const XSeries e = exponential(base, profile, order + std::max(profile.tmax, 1));
  const QTSeries y = minus_log_one_minus_t(profile);
  const XSeries generic = xcompose_shift(e, y, order);
  const XSeries specialized = shifted_exponential(base, profile, order);
  if (!(generic == specialized))
    throw RouteMismatchError("sharp: Taylor shift and substitution disagree for " + to_string(base));
  XSeries out = xmul(e.truncated(order), xinverse(specialized));
  out *= specialized[0];
  return out;
}

std::vector<QTSeries> nepers(const XSeries& e, int nmax) {
  require_exponential(e);
  if (e.order() < nmax + 2) throw DomainError("nepers: exponential too short for nmax");
  const XSeries lg = xlog(e.truncated(nmax + 2));
  std::vector<QTSeries> out(nmax + 1, QTSeries(e.profile()));
  for (int n = 1; n <= nmax; ++n) out[n] = lg[n] * Rational(-factorial(n));
  return out;
}

Integer finite_difference(unsigned n, unsigned m) {
  Integer total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    Integer term = binomial(m, j) * power(Integer(j), n);
    if ((m - j) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

QTSeries fgl_add(const XSeries& e, const QTSeries& a, const QTSeries& b) {
  const XSeries log_e = xreverse(e);
  return xevaluate(e, xevaluate(log_e, a) + xevaluate(log_e, b));
}

XSeries sharp_by_coordinates(const XSeries& e, int order) {
  require_exponential(e);
  const QTSeries y = minus_log_one_minus_t(e.profile());
  const QTSeries gamma = xevaluate(e, y);
  const QTSeries log_gamma = xevaluate(xreverse(e), gamma);
  // xi +_F gamma = e(log_e xi + log_e gamma) = e(x + log_e gamma)
  const XSeries sum = xcompose_shift(e, log_gamma, order);
  XSeries out = xmul(e.truncated(order), xinverse(sum));
  out *= gamma;
  return out;
}

const QTSeries& MomentSequence::at(int n) const {
  if (n < 0 || n >= static_cast<int>(entries.size()))
    throw DomainError("moment index " + std::to_string(n) + " out of range");
  return entries[n];
}

void MomentSequence::require_integral() const {
  for (std::size_t n = 0; n < entries.size(); ++n) {
    entries[n].for_each_nonzero([&](int i, int j, const Rational& c) {
      if (valuation(c, profile.p) < 0)
        throw NonIntegralError(to_string(kind) + " M_" + std::to_string(n) + " coefficient at q^" +
                               std::to_string(i) + " t^" + std::to_string(j) + " is " +
                               to_string(c) + ", not " + std::to_string(profile.p) + "-integral");
    });
  }
}

bool MomentSequence::operator==(const MomentSequence& other) const {
  return kind == other.kind && c == other.c && profile == other.profile && route == other.route &&
         variant == other.variant && entries == other.entries;
}

void require_moment_unit(const Rational& c, unsigned long p, int precision) {
  if (valuation(c, p) != 0) throw ConfigError("c = " + to_string(c) + " is not a p-adic unit");
  const PadicInteger r = reduce(c, p, precision);
  const Integer modulus = power(Integer(p), precision);
  if (r.residue == 1 || r.residue == modulus - 1)
    throw ConfigError("c = " + to_string(c) + " is congruent to +-1 mod p^N");
}

Rational moment_zero(const Rational& c, unsigned long p, int precision) {
  return padic_log(power(c, static_cast<long>(p) - 1), p, precision + 12) / Rational(p);
}

namespace {

MomentSequence empty_sequence(OrientationKind kind, Route route, const Rational& c,
                              const PrecisionProfile& profile, ToddSharpVariant variant) {
  profile.validate();
  require_moment_unit(c, profile.p, profile.precision);
  MomentSequence seq;
  seq.kind = kind;
  seq.c = c;
  seq.profile = profile;
  seq.route = route;
  seq.variant = variant;
  seq.entries.assign(profile.nmax + 1, QTSeries(profile));
  seq.entries[0] = QTSeries::constant(profile, moment_zero(c, profile.p, profile.precision));
  return seq;
}

// (1 - c^n)(N - p^(n-1) Psi)
QTSeries twist(const Rational& c, unsigned long p, int n, const QTSeries& value,
               const QTSeries& psi_value) {
  return (value - psi_value * p_pow(p, n - 1)) * one_minus_c_pow(c, n);
}

}  // namespace

MomentSequence moments_from_nepers(OrientationKind kind, const std::vector<QTSeries>& nep,
                                   const Rational& c, const PrecisionProfile& profile) {
  MomentSequence seq = empty_sequence(kind, Route::generating_function, c, profile, ToddSharpVariant::full);
  const int top = std::min(profile.nmax, static_cast<int>(nep.size()) - 1);
  parallel_for(top, [&](int k) {
    const int n = k + 1;
    const QTSeries N = nep[n].restricted(profile);
    seq.entries[n] = twist(c, profile.p, n, N, frobenius(N));
  });
  seq.require_integral();
  return seq;
}

MomentSequence moments_generating_function(OrientationKind kind, const Rational& c,
                                           const PrecisionProfile& profile, int extra_slack) {
  profile.validate();
  const int order = profile.nmax + 2;
  if (!is_sharp(kind)) {
    const XSeries e = exponential(kind, profile, order);
    return moments_from_nepers(kind, nepers(e, profile.nmax), c, profile);
  }
  // Negative shifts in inverses and logs lose exactness at the top of the
  // window; work in a wider one and cut back.
  const int span = profile.nmax + 2;
  const PrecisionProfile wide = profile.with_window(std::min(profile.tmin, -2 * span) - extra_slack,
                                                    profile.tmax + 3 * span + 4 + extra_slack);
  const XSeries e = sharp(base_kind(kind), wide, order);
  return moments_from_nepers(kind, nepers(e, profile.nmax), c, profile);
}

namespace {

void fill_todd(MomentSequence& seq) {
  const auto& pr = seq.profile;
  for (int n = 1; n <= pr.nmax; ++n) {
    const Rational v = one_minus_c_pow(seq.c, n) * (1 - p_pow(pr.p, n - 1)) * (-bernoulli(n) / Rational(n));
    seq.entries[n] = QTSeries::constant(pr, v);
  }
}

void fill_witten(MomentSequence& seq) {
  const auto& pr = seq.profile;
  const auto p = static_cast<int>(pr.p);
  for (int n = 1; n <= pr.nmax; ++n) {
    QTSeries h(pr);
    if (n == 1) {
      h = QTSeries::constant(pr, -bernoulli(1));
    } else {
      h = eisenstein_g(n, pr);
    }
    seq.entries[n] = twist(seq.c, pr.p, n, h, h.q_power_substituted(p));
  }
}

// Delta^m [r^n](0) weighted by (-1)^(m+1)/m, times t^-m - p^(n-1) psi(t^-m).
void add_todd_sharp_poles(MomentSequence& seq) {
  const auto& pr = seq.profile;
  parallel_for(pr.nmax, [&](int k) {
    const int n = k + 1;
    QTSeries acc(pr);
    for (int m = 1; m <= n && m <= -pr.tmin; ++m) {
      Rational w = Rational(finite_difference(n, m)) / Rational(m);
      if (m % 2 == 0) w = -w;
      if (w == 0) continue;
      const QTSeries pole = QTSeries::monomial(pr, 0, -m) - frobenius_t_power(pr, -m) * p_pow(pr.p, n - 1);
      acc += pole * w;
    }
    seq.entries[n] += acc * one_minus_c_pow(seq.c, n);
  });
}

void fill_witten_sharp(MomentSequence& seq, int extra_slack) {
  const auto& pr = seq.profile;
  const auto p = static_cast<int>(pr.p);
  const PrecisionProfile wide = pr.with_window(std::min(pr.tmin, -(pr.nmax + 2)) - extra_slack,
                                               pr.tmax + pr.nmax + 8 + extra_slack);
  const auto family = weierstrass_P_family(std::max(pr.nmax - 2, -1), wide, wide.tmax);
  const QTSeries y = minus_log_one_minus_t(wide);
  const QTSeries g2 = eisenstein_g(2, wide);
  const MinusLogComposer composer(wide, pr.nmax);
  parallel_for(pr.nmax, [&](int k) {
    const int n = k + 1;
    const WSeries& P = family.at(n - 1);  // P^(n-2)
    QTSeries value = -composer.compose(P, 1);
    QTSeries psi_value = -composer.compose_frobenius(P);
    if (n == 1) {
      value -= g2 * y;
      psi_value -= g2.q_power_substituted(p) * y * Rational(p);
    } else if (n >= 3) {
      const QTSeries g = eisenstein_g(n, wide);
      value += g;
      psi_value += g.q_power_substituted(p);
    }
    seq.entries[n] = twist(seq.c, pr.p, n, value, psi_value).restricted(pr);
  });
}

}  // namespace

MomentSequence moments_closed_form(OrientationKind kind, const Rational& c,
                                   const PrecisionProfile& profile, ToddSharpVariant variant,
                                   int extra_slack) {
  MomentSequence seq = empty_sequence(kind, Route::closed_form, c, profile, variant);
  switch (kind) {
    case OrientationKind::todd: fill_todd(seq); break;
    case OrientationKind::witten: fill_witten(seq); break;
    case OrientationKind::todd_sharp:
      if (variant == ToddSharpVariant::full) fill_todd(seq);
      add_todd_sharp_poles(seq);
      break;
    case OrientationKind::witten_sharp: fill_witten_sharp(seq, extra_slack); break;
  }
  seq.require_integral();
  return seq;
}

MomentSequence compute_moments(OrientationKind kind, Route route, const Rational& c,
                               const PrecisionProfile& profile, ToddSharpVariant variant) {
  if (route == Route::closed_form) return moments_closed_form(kind, c, profile, variant);
  if (kind == OrientationKind::todd_sharp && variant == ToddSharpVariant::pole_part)
    throw ConfigError("the generating-function route yields the full Todd# sequence only");
  return moments_generating_function(kind, c, profile);
}

}  // namespace padic
