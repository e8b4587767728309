#pragma once

#include <vector>

#include "padic_moments/qt_series.hpp"

namespace padic {

// sum_n c_n x^n for n < order, with QTSeries coefficients (no n! scaling).
// The same type carries series in the elliptic variable w.
class XSeries {
 public:
  XSeries(const PrecisionProfile& profile, int order);

  // Coefficients given as scalars (constant QTSeries).
  static XSeries from_scalars(const PrecisionProfile& profile, const std::vector<Rational>& c);

  const PrecisionProfile& profile() const { return profile_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  const QTSeries& operator[](int n) const { return coeffs_.at(n); }
  QTSeries& operator[](int n) { return coeffs_.at(n); }

  XSeries& operator+=(const XSeries& other);
  XSeries& operator-=(const XSeries& other);
  XSeries& operator*=(const QTSeries& c);
  XSeries& operator*=(const Rational& c);
  bool operator==(const XSeries& other) const;

  XSeries truncated(int new_order) const;
  // f / x; requires a zero constant term.
  XSeries divided_by_x() const;
  XSeries derivative() const;

 private:
  PrecisionProfile profile_;
  std::vector<QTSeries> coeffs_;
};

XSeries operator+(XSeries a, const XSeries& b);
XSeries operator-(XSeries a, const XSeries& b);

// Product truncated at the smaller of the two orders.
XSeries xmul(const XSeries& a, const XSeries& b);
// 1/f for f with invertible constant term.
XSeries xinverse(const XSeries& f);
// log(f) for f with constant term 1.
XSeries xlog_unit(const XSeries& f);
// log(f / x) for f = x * (unit).  The constant term of the unit must be 1
// or a rational c with log defined through log1p(c - 1).
XSeries xlog(const XSeries& f);
// exp(f) for f with zero constant term (and nilpotent coefficients).
XSeries xexp(const XSeries& f);

// f(x + y) as a series of order out_order by Taylor re-expansion.  The
// q^0 part of y must have positive t-valuation and f must be long enough
// for the omitted terms to vanish in the window.
XSeries xcompose_shift(const XSeries& f, const QTSeries& y, int out_order);

// f(g(x)) with g(0) = 0.
XSeries xcompose(const XSeries& f, const XSeries& g);
// Compositional inverse of f = x + O(x^2) (or unit linear term).
XSeries xreverse(const XSeries& f);
// f(a) for a QTSeries a whose powers leave the window before f runs out.
QTSeries xevaluate(const XSeries& f, const QTSeries& a);

}  // namespace padic
