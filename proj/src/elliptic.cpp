#include "padic_moments/elliptic.hpp"

namespace padic {

namespace {

// Elliptic coefficients are pure q-series; keep them in a one-column
// window and embed when composing.
PrecisionProfile q_only(const PrecisionProfile& profile) { return profile.with_window(0, 1); }

std::vector<QTSeries> powers_of(const QTSeries& base, int count) {
  std::vector<QTSeries> out{QTSeries::constant(base.profile(), 1)};
  for (int k = 1; k < count; ++k) out.push_back(out.back() * base);
  return out;
}

int highest_pole(const WSeries& ws) {
  for (int k = -ws.pole_order(); k < 0; ++k)
    if (!ws.coeff(k).is_zero()) return -k;
  return 0;
}

}  // namespace

Integer divisor_sigma(unsigned k, unsigned long j) {
  if (j == 0) throw DomainError("divisor_sigma: j must be positive");
  Integer total = 0;
  for (unsigned long d = 1; d * d <= j; ++d) {
    if (j % d != 0) continue;
    total += power(Integer(d), k);
    const unsigned long e = j / d;
    if (e != d) total += power(Integer(e), k);
  }
  return total;
}

QTSeries eisenstein_g(int k, const PrecisionProfile& profile) {
  if (k < 2) throw DomainError("eisenstein_g: k must be >= 2");
  QTSeries out(profile);
  if (k % 2 == 1) return out;
  out.set(0, 0, -bernoulli(k) / Rational(k));
  for (int j = 1; j < profile.q_order; ++j)
    out.set(j, 0, Rational(2 * divisor_sigma(k - 1, j)));
  return out;
}

WSeries::WSeries(const PrecisionProfile& profile, int pole_order, int wmax)
    : profile_(profile),
      pole_order_(pole_order),
      wmax_(wmax),
      coeffs_(static_cast<std::size_t>(pole_order + wmax), QTSeries(q_only(profile))) {
  if (pole_order < 0 || wmax < 0) throw DomainError("WSeries: negative size");
}

const QTSeries& WSeries::coeff(int k) const { return coeffs_.at(k + pole_order_); }

void WSeries::set(int k, const QTSeries& c) { coeffs_.at(k + pole_order_) = c.restricted(q_only(profile_)); }

XSeries WSeries::regular_part() const {
  XSeries out(q_only(profile_), wmax_);
  for (int k = 0; k < wmax_; ++k) out[k] = coeff(k);
  return out;
}

WSeries WSeries::from_regular(const PrecisionProfile& profile, const XSeries& f) {
  WSeries out(profile, 0, f.order());
  for (int k = 0; k < f.order(); ++k) out.set(k, f[k]);
  return out;
}

WSeries WSeries::derivative() const {
  const int new_pole = pole_order_ == 0 ? 0 : pole_order_ + 1;
  WSeries out(profile_, new_pole, std::max(wmax_ - 1, 0));
  for (int k = -pole_order_; k < wmax_; ++k) {
    if (k == 0) continue;
    const int target = k - 1;
    if (target >= out.wmax_ || target < -new_pole) continue;
    out.coeffs_.at(target + new_pole) = coeff(k) * Rational(k);
  }
  return out;
}

WSeries WSeries::q_power_substituted(int k) const {
  WSeries out = *this;
  for (auto& c : out.coeffs_) c = c.q_power_substituted(k);
  return out;
}

bool WSeries::operator==(const WSeries& other) const {
  return profile_ == other.profile_ && pole_order_ == other.pole_order_ &&
         wmax_ == other.wmax_ && coeffs_ == other.coeffs_;
}

WSeries sigma_log(const PrecisionProfile& profile, int wmax) {
  if (wmax < 3) throw DomainError("sigma_log: wmax must be >= 3");
  const PrecisionProfile qp = q_only(profile);
  // (1 - e^-w)/w
  std::vector<Rational> b(wmax);
  for (int k = 0; k < wmax; ++k)
    b[k] = Rational(k % 2 == 0 ? 1 : -1) / Rational(factorial(k + 1));
  XSeries product = XSeries::from_scalars(qp, b);
  for (int j = 1; j < profile.q_order; ++j) {
    XSeries minus(qp, wmax), plus(qp, wmax);
    for (int k = 0; k < wmax; ++k) {
      const Rational inv_fact = Rational(1) / Rational(factorial(k));
      minus[k].set(j, 0, (k % 2 == 0 ? -inv_fact : inv_fact));  // -q^j e^-w
      plus[k].set(j, 0, -inv_fact);                              // -q^j e^w
    }
    minus[0].add_to(0, 0, 1);
    plus[0].add_to(0, 0, 1);
    product = xmul(xmul(product, minus), plus);
    QTSeries denom = QTSeries::constant(qp, 1) - QTSeries::monomial(qp, j, 0);
    product *= invert(denom * denom);
  }
  XSeries log_part = xlog_unit(product);
  log_part[1].add_to(0, 0, Rational(1, 2));
  if (wmax > 2) log_part[2] += eisenstein_g(2, qp) * Rational(1, 2);
  return WSeries::from_regular(profile, log_part);
}

namespace {

// From the regular part of log s - log w, differentiated d + 2 times.
WSeries p_from_log_derivative(int d, const PrecisionProfile& profile, const XSeries& reg, int wmax) {
  const int pole = d + 2;
  WSeries out(profile, pole, wmax);
  // (d/dw)^(d+2) applied to -log w gives (-1)^d (d+1)! / w^(d+2); at
  // d = -1 this is -1/w.
  Rational lead = Rational(factorial(d + 1));
  if (d % 2 != 0) lead = -lead;
  out.set(-pole, QTSeries::constant(profile, lead));
  for (int k = 0; k < wmax; ++k) out.set(k, -reg[k]);
  return out;
}

}  // namespace

WSeries weierstrass_P(int d, const PrecisionProfile& profile, int wmax) {
  if (d < -1) throw DomainError("weierstrass_P: d must be >= -1");
  if (wmax < 1) throw DomainError("weierstrass_P: wmax must be >= 1");
  XSeries reg = sigma_log(profile, std::max(wmax + d + 2, 3)).regular_part();
  for (int k = 0; k < d + 2; ++k) reg = reg.derivative();
  return p_from_log_derivative(d, profile, reg, wmax);
}

std::vector<WSeries> weierstrass_P_family(int dmax, const PrecisionProfile& profile, int wmax) {
  if (dmax < -1) throw DomainError("weierstrass_P_family: dmax must be >= -1");
  if (wmax < 1) throw DomainError("weierstrass_P_family: wmax must be >= 1");
  XSeries reg = sigma_log(profile, std::max(wmax + dmax + 2, 3)).regular_part();
  reg = reg.derivative();
  std::vector<WSeries> out;
  for (int d = -1; d <= dmax; ++d) {
    out.push_back(p_from_log_derivative(d, profile, reg.truncated(wmax), wmax));
    reg = reg.derivative();
  }
  return out;
}

MinusLogComposer::MinusLogComposer(const PrecisionProfile& profile, int max_pole, std::vector<int> scales)
    : profile_(profile), wide_(profile.with_window(profile.tmin, profile.tmax + max_pole + 1)), max_pole_(max_pole) {
  if (max_pole < 0) throw DomainError("MinusLogComposer: negative pole order");
  if (profile.tmin > -max_pole) throw DomainError("compose_at_minus_log: window overflow (pole below tmin)");
  const auto p = static_cast<int>(profile.p);
  if (scales.empty()) scales = {1, p};
  for (int scale : scales) {
    if (scale < 1) throw DomainError("compose_at_minus_log: scale must be positive");
    if (tables_.count(scale)) continue;
    Powers pw;
    pw.pos = powers_of(minus_log_one_minus_t(profile_) * Rational(scale), profile_.tmax);
    // y^-1 from invert() is exact one degree short of the top, and y^-k
    // needs k - 1 more; hence the wider window.
    if (max_pole > 0) {
      pw.neg = powers_of(invert(minus_log_one_minus_t(wide_) * Rational(scale)), max_pole + 1);
      for (auto& x : pw.neg) x = x.restricted(profile_);
    }
    tables_.emplace(scale, std::move(pw));
  }
  if (tables_.count(1) && tables_.count(p) && max_pole > 0) {
    // psi of a pole term: the zeta expansion minus the Laurent expansion of psi(t)^-m.
    const auto laurent = powers_of(invert(frobenius_t_power(wide_, 1)), max_pole + 1);
    pole_fix_.push_back(QTSeries(profile_));
    for (int m = 1; m <= max_pole; ++m)
      pole_fix_.push_back(frobenius_t_power(profile_, -m) - laurent[m].restricted(profile_));
  }
}

QTSeries MinusLogComposer::compose(const WSeries& ws, int scale) const {
  const auto it = tables_.find(scale);
  if (it == tables_.end()) throw DomainError("compose_at_minus_log: scale not prepared");
  if (!(ws.profile() == profile_)) throw ProfileMismatchError("compose_at_minus_log: profile differs");
  const int pole = highest_pole(ws);
  if (pole > max_pole_ || profile_.tmin > -pole)
    throw DomainError("compose_at_minus_log: window overflow (pole below tmin)");
  if (ws.wmax() < profile_.tmax) throw DomainError("compose_at_minus_log: w-series shorter than the t-window");
  const Powers& pw = it->second;
  QTSeries out(profile_);
  for (int k = 0; k < profile_.tmax; ++k)
    if (!ws.coeff(k).is_zero()) out += ws.coeff(k).restricted(profile_) * pw.pos[k];
  for (int k = 1; k <= pole; ++k)
    if (!ws.coeff(-k).is_zero()) out += ws.coeff(-k).restricted(profile_) * pw.neg[k];
  return out;
}

QTSeries MinusLogComposer::compose_frobenius(const WSeries& ws) const {
  const auto p = static_cast<int>(profile_.p);
  QTSeries out = compose(ws.q_power_substituted(p), p);
  const int pole = highest_pole(ws);
  if (pole == 0) return out;
  if (pole_fix_.empty()) throw DomainError("compose_at_minus_log_frobenius: scales 1 and p not prepared");
  const QTSeries base = compose(ws, 1);
  for (int m = 1; m <= pole; ++m) {
    QTSeries pole_col(profile_);
    bool any = false;
    for (int i = 0; i * p < profile_.q_order; ++i) {
      const Rational& c = base.coeff(i, -m);
      if (c == 0) continue;
      pole_col.set(i * p, 0, c);
      any = true;
    }
    if (any) out += pole_col * pole_fix_[m];
  }
  return out;
}

QTSeries compose_at_minus_log(const WSeries& ws, int scale) {
  if (scale < 1) throw DomainError("compose_at_minus_log: scale must be positive");
  return MinusLogComposer(ws.profile(), highest_pole(ws), {scale}).compose(ws, scale);
}

QTSeries compose_at_minus_log_frobenius(const WSeries& ws) {
  return MinusLogComposer(ws.profile(), highest_pole(ws)).compose_frobenius(ws);
}

}  // namespace padic
