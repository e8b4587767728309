#pragma once

#include <map>
#include <vector>

#include "padic_moments/x_series.hpp"

namespace padic {

// sum_{d | j} d^k
Integer divisor_sigma(unsigned k, unsigned long j);

// g_k = -B_k/k + 2 sum_j sigma_{k-1}(j) q^j for even k, 0 for odd k >= 3.
QTSeries eisenstein_g(int k, const PrecisionProfile& profile);

// Laurent series in w with pure q-series coefficients, w^k for
// -pole_order <= k < wmax.
class WSeries {
 public:
  WSeries(const PrecisionProfile& profile, int pole_order, int wmax);

  const PrecisionProfile& profile() const { return profile_; }
  int pole_order() const { return pole_order_; }
  int wmax() const { return wmax_; }
  const QTSeries& coeff(int k) const;
  void set(int k, const QTSeries& c);

  // The part with k >= 0 as a power series.
  XSeries regular_part() const;
  static WSeries from_regular(const PrecisionProfile& profile, const XSeries& f);

  WSeries derivative() const;
  WSeries q_power_substituted(int k) const;
  bool operator==(const WSeries& other) const;

 private:
  PrecisionProfile profile_;
  int pole_order_;
  int wmax_;
  std::vector<QTSeries> coeffs_;
};

// log s(w) - log w from the product formula for s.
WSeries sigma_log(const PrecisionProfile& profile, int wmax);

// P = -(d/dw)^2 log s, P^(d) = (d/dw)^d P, P^(-1) = -(d/dw) log s.
WSeries weierstrass_P(int d, const PrecisionProfile& profile, int wmax);
// P^(d) for d = -1 .. dmax, sharing one sigma_log expansion; element k
// holds d = k - 1.
std::vector<WSeries> weierstrass_P_family(int dmax, const PrecisionProfile& profile, int wmax);

// Powers of -log(1 - t) (and their inverses) for repeated substitution
// into WSeries with poles of order <= max_pole.  Immutable once built.
class MinusLogComposer {
 public:
  // scales defaults to {1, p}, which compose_frobenius needs.
  MinusLogComposer(const PrecisionProfile& profile, int max_pole, std::vector<int> scales = {});
  const PrecisionProfile& profile() const { return profile_; }
  QTSeries compose(const WSeries& ws, int scale) const;
  QTSeries compose_frobenius(const WSeries& ws) const;

 private:
  struct Powers {
    std::vector<QTSeries> pos;
    std::vector<QTSeries> neg;
  };
  PrecisionProfile profile_;
  PrecisionProfile wide_;
  int max_pole_;
  std::map<int, Powers> tables_;
  std::vector<QTSeries> pole_fix_;
};

// Substitute w = scale * (-log(1 - t)).
QTSeries compose_at_minus_log(const WSeries& ws, int scale);

// psi applied to compose_at_minus_log(ws, 1): the regular part composes
// at scale p (with q -> q^p), the pole part takes the truncated zeta
// expansion.  Equals frobenius(compose_at_minus_log(ws, 1)) in the window.
QTSeries compose_at_minus_log_frobenius(const WSeries& ws);

}  // namespace padic
