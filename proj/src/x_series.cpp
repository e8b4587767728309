#include "padic_moments/x_series.hpp"

#include <algorithm>

namespace padic {

namespace {

void require_positive_q0_valuation(const QTSeries& y, const char* who) {
  const auto [lo, hi] = y.row_support(0);
  if (lo < hi && lo <= 0)
    throw DomainError(std::string(who) + ": q^0 part must have positive t-valuation");
}

}  // namespace

XSeries::XSeries(const PrecisionProfile& profile, int order)
    : profile_(profile), coeffs_(static_cast<std::size_t>(std::max(order, 0)), QTSeries(profile)) {}

XSeries XSeries::from_scalars(const PrecisionProfile& profile, const std::vector<Rational>& c) {
  XSeries out(profile, static_cast<int>(c.size()));
  for (std::size_t n = 0; n < c.size(); ++n) out.coeffs_[n].set(0, 0, c[n]);
  return out;
}

XSeries& XSeries::operator+=(const XSeries& other) {
  const int n = std::min(order(), other.order());
  coeffs_.resize(n, QTSeries(profile_));
  for (int k = 0; k < n; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& other) {
  const int n = std::min(order(), other.order());
  coeffs_.resize(n, QTSeries(profile_));
  for (int k = 0; k < n; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

XSeries& XSeries::operator*=(const QTSeries& c) {
  for (auto& x : coeffs_)
    if (!x.is_zero()) x = x * c;
  return *this;
}

XSeries& XSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool XSeries::operator==(const XSeries& other) const {
  return profile_ == other.profile_ && coeffs_ == other.coeffs_;
}

XSeries XSeries::truncated(int new_order) const {
  XSeries out(profile_, new_order);
  for (int n = 0; n < std::min(new_order, order()); ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

XSeries XSeries::divided_by_x() const {
  if (order() == 0) return *this;
  if (!coeffs_[0].is_zero()) throw DomainError("divided_by_x: constant term is nonzero");
  XSeries out(profile_, order() - 1);
  for (int n = 1; n < order(); ++n) out.coeffs_[n - 1] = coeffs_[n];
  return out;
}

XSeries XSeries::derivative() const {
  XSeries out(profile_, std::max(order() - 1, 0));
  for (int n = 1; n < order(); ++n) out.coeffs_[n - 1] = coeffs_[n] * Rational(n);
  return out;
}

XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }

XSeries xmul(const XSeries& a, const XSeries& b) {
  if (!(a.profile() == b.profile())) throw ProfileMismatchError("XSeries profiles differ");
  const int n = std::min(a.order(), b.order());
  XSeries out(a.profile(), n);
  std::vector<bool> za(n), zb(n);
  for (int k = 0; k < n; ++k) {
    za[k] = a[k].is_zero();
    zb[k] = b[k].is_zero();
  }
  for (int i = 0; i < n; ++i) {
    if (za[i]) continue;
    for (int j = 0; i + j < n; ++j) {
      if (zb[j]) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

XSeries xinverse(const XSeries& f) {
  const int n = f.order();
  XSeries out(f.profile(), n);
  if (n == 0) return out;
  const QTSeries b0 = invert(f[0]);
  out[0] = b0;
  for (int m = 1; m < n; ++m) {
    QTSeries acc(f.profile());
    for (int k = 1; k <= m; ++k)
      if (!f[k].is_zero() && !out[m - k].is_zero()) acc += f[k] * out[m - k];
    out[m] = -(b0 * acc);
  }
  return out;
}

XSeries xlog_unit(const XSeries& f) {
  const int n = f.order();
  XSeries out(f.profile(), n);
  if (n == 0) return out;
  if (f[0] != QTSeries::constant(f.profile(), 1))
    throw DomainError("xlog_unit: constant term must be 1");
  // f' = f L'  =>  L_m = f_m - (1/m) sum_{k<m} k L_k f_{m-k}.
  for (int m = 1; m < n; ++m) {
    QTSeries acc(f.profile());
    for (int k = 1; k < m; ++k)
      if (!out[k].is_zero() && !f[m - k].is_zero()) acc += (out[k] * f[m - k]) * Rational(k);
    out[m] = f[m] - acc * Rational(1, m);
  }
  return out;
}

XSeries xlog(const XSeries& f) {
  const XSeries g = f.divided_by_x();
  if (g.order() == 0) return g;
  const QTSeries one = QTSeries::constant(f.profile(), 1);
  if (g[0] == one) return xlog_unit(g);
  XSeries normalized = g;
  normalized *= invert(g[0]);
  XSeries out = xlog_unit(normalized);
  out[0] = log1p(g[0] - one);
  return out;
}

XSeries xexp(const XSeries& f) {
  const int n = f.order();
  XSeries out(f.profile(), n);
  if (n == 0) return out;
  out[0] = QTSeries::constant(f.profile(), 1);
  // E' = f' E  =>  E_m = (1/m) sum_{k=1}^m k f_k E_{m-k}.
  for (int m = 1; m < n; ++m) {
    QTSeries acc(f.profile());
    for (int k = 1; k <= m; ++k)
      if (!f[k].is_zero() && !out[m - k].is_zero()) acc += (f[k] * out[m - k]) * Rational(k);
    out[m] = acc * Rational(1, m);
  }
  if (!f[0].is_zero()) out *= exp0(f[0]);
  return out;
}

XSeries xcompose_shift(const XSeries& f, const QTSeries& y, int out_order) {
  require_positive_q0_valuation(y, "xcompose_shift");
  const int K = f.order();
  if (out_order > K) throw DomainError("xcompose_shift: output order exceeds input order");
  XSeries out(f.profile(), out_order);
  if (out_order <= 0) return out;
  // Powers y^0 .. y^(K - out_order + 1); the last must vanish or the
  // omitted terms of f would still contribute.
  const int need = K - out_order + 1;
  std::vector<QTSeries> pw{QTSeries::constant(f.profile(), 1)};
  while (static_cast<int>(pw.size()) <= need && !pw.back().is_zero())
    pw.push_back(pw.back() * y);
  if (static_cast<int>(pw.size()) > need && !pw[need].is_zero())
    throw DomainError("xcompose_shift: exponential too short for this t-window");
  for (int m = 0; m < out_order; ++m) {
    for (int k = m; k < K; ++k) {
      const int e = k - m;
      if (e >= static_cast<int>(pw.size())) break;
      if (f[k].is_zero() || pw[e].is_zero()) continue;
      out[m] += (f[k] * pw[e]) * Rational(binomial(k, m));
    }
  }
  return out;
}

XSeries xcompose(const XSeries& f, const XSeries& g) {
  if (g.order() > 0 && !g[0].is_zero()) throw DomainError("xcompose: inner series needs g(0) = 0");
  const int n = std::min(f.order(), g.order());
  XSeries out(f.profile(), n);
  if (n == 0) return out;
  XSeries pw(f.profile(), n);
  pw[0] = QTSeries::constant(f.profile(), 1);
  const XSeries gt = g.truncated(n);
  for (int k = 0; k < n; ++k) {
    if (!f[k].is_zero()) {
      XSeries term = pw;
      term *= f[k];
      out += term;
    }
    pw = xmul(pw, gt);
  }
  return out;
}

XSeries xreverse(const XSeries& f) {
  const int n = f.order();
  XSeries out(f.profile(), n);
  if (n < 2) return out;
  if (!f[0].is_zero()) throw DomainError("xreverse: f(0) must be 0");
  const auto [lo, hi] = f[1].row_support(0);
  if (lo == hi || lo != 0) throw DomainError("xreverse: linear term is not a unit");
  const QTSeries inv1 = invert(f[1]);
  // powers[k] = f^k
  std::vector<XSeries> powers{XSeries(f.profile(), n), f};
  powers[0][0] = QTSeries::constant(f.profile(), 1);
  for (int k = 2; k < n; ++k) powers.push_back(xmul(powers.back(), f));
  std::vector<QTSeries> inv_pow{QTSeries::constant(f.profile(), 1), inv1};
  for (int k = 2; k < n; ++k) inv_pow.push_back(inv_pow.back() * inv1);
  out[1] = inv1;
  for (int m = 2; m < n; ++m) {
    QTSeries acc(f.profile());
    for (int k = 1; k < m; ++k)
      if (!out[k].is_zero() && !powers[k][m].is_zero()) acc += out[k] * powers[k][m];
    out[m] = -(acc * inv_pow[m]);
  }
  return out;
}

QTSeries xevaluate(const XSeries& f, const QTSeries& a) {
  require_positive_q0_valuation(a, "xevaluate");
  QTSeries out(a.profile());
  QTSeries pw = QTSeries::constant(a.profile(), 1);
  for (int k = 0;; ++k) {
    if (pw.is_zero()) break;
    if (k >= f.order()) throw DomainError("xevaluate: series too short for this window");
    if (!f[k].is_zero()) out += f[k] * pw;
    pw = pw * a;
  }
  return out;
}

}  // namespace padic
