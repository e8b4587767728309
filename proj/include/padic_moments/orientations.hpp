#pragma once

#include <string>
#include <vector>

#include "padic_moments/elliptic.hpp"

namespace padic {

enum class OrientationKind { todd, witten, todd_sharp, witten_sharp };
enum class Route { closed_form, generating_function };
// Todd# closed form: the pole part alone, or plus the Bernoulli moments.
enum class ToddSharpVariant { full, pole_part };

std::string to_string(OrientationKind kind);
std::string to_string(Route route);
std::string to_string(ToddSharpVariant variant);
OrientationKind parse_orientation_kind(const std::string& text);
Route parse_route(const std::string& text);
ToddSharpVariant parse_variant(const std::string& text);

bool is_sharp(OrientationKind kind);
OrientationKind base_kind(OrientationKind kind);

// exp_Td(x) = 1 - e^-x and the Witten product truncated at q^Q, to x^(order-1).
XSeries exponential(OrientationKind base, const PrecisionProfile& profile, int order);

// exp(x + y) with y = -log(1 - t), by substituting e^-x -> (1-t) e^-x and
// e^x -> e^x / (1-t) in the defining product.
XSeries shifted_exponential(OrientationKind base, const PrecisionProfile& profile, int order);

// exp(x) exp(y) / exp(x + y) with exp(x + y) from the Taylor shift.  The
// exponential must reach x-degree order + tmax.
XSeries sharp(const XSeries& e, int order);

// Same, for Todd/Witten, computing exp(x + y) both ways; throws
// RouteMismatchError when they differ.
XSeries sharp(OrientationKind base, const PrecisionProfile& profile, int order);

// Entry n holds N_n (entry 0 is zero), from log(x / e(x)) = sum N_n x^n / n!.
std::vector<QTSeries> nepers(const XSeries& e, int nmax);

// Delta^m [r^n] (0) = sum_j (-1)^(m-j) C(m, j) j^n.
Integer finite_difference(unsigned n, unsigned m);

// a +_F b = e(log_e(a) + log_e(b)).
QTSeries fgl_add(const XSeries& e, const QTSeries& a, const QTSeries& b);

// xi * gamma / (xi +_F gamma) with xi = e(x), gamma = e(y).
XSeries sharp_by_coordinates(const XSeries& e, int order);

struct MomentSequence {
  OrientationKind kind = OrientationKind::todd;
  Rational c;
  PrecisionProfile profile;
  Route route = Route::closed_form;
  ToddSharpVariant variant = ToddSharpVariant::full;
  // entries[n] = M_n for n = 0..nmax; M_0 is the constant p^-1 log c^(p-1).
  std::vector<QTSeries> entries;

  const QTSeries& at(int n) const;
  int nmax() const { return static_cast<int>(entries.size()) - 1; }
  // Throws NonIntegralError naming the first offending coefficient.
  void require_integral() const;
  bool operator==(const MomentSequence& other) const;
};

// valuation(c) = 0 and c is not +-1 modulo p^N.
void require_moment_unit(const Rational& c, unsigned long p, int precision);

// p^-1 log(c^(p-1)), accurate well beyond p^N.
Rational moment_zero(const Rational& c, unsigned long p, int precision);

// M_n = (1 - c^n)(N_n - p^(n-1) psi(N_n)), after restricting each N_n to
// the profile's window.
MomentSequence moments_from_nepers(OrientationKind kind, const std::vector<QTSeries>& nepers,
                                   const Rational& c, const PrecisionProfile& profile);

// Computes the nepers from the (sharped) exponential in a widened window.
// extra_slack widens it further (used to check window independence).
MomentSequence moments_generating_function(OrientationKind kind, const Rational& c,
                                           const PrecisionProfile& profile, int extra_slack = 0);

MomentSequence moments_closed_form(OrientationKind kind, const Rational& c,
                                   const PrecisionProfile& profile,
                                   ToddSharpVariant variant = ToddSharpVariant::full,
                                   int extra_slack = 0);

MomentSequence compute_moments(OrientationKind kind, Route route, const Rational& c,
                               const PrecisionProfile& profile,
                               ToddSharpVariant variant = ToddSharpVariant::full);

}  // namespace padic
