#pragma once

#include <utility>
#include <vector>

#include "padic_moments/scalars.hpp"

namespace padic {

// Truncation data shared by every series in a computation.  Coefficients
// live at q^i t^j with 0 <= i < q_order and tmin <= j < tmax.
struct PrecisionProfile {
  unsigned long p = 3;
  int precision = 4;  // N: results are meaningful modulo p^N
  int q_order = 1;    // Q
  int tmin = -16;
  int tmax = 1;
  int nmax = 8;

  void validate() const;
  int width() const { return tmax - tmin; }
  PrecisionProfile with_window(int new_tmin, int new_tmax) const;
  bool operator==(const PrecisionProfile& other) const = default;
};

class QTSeries {
 public:
  explicit QTSeries(const PrecisionProfile& profile);

  static QTSeries constant(const PrecisionProfile& profile, const Rational& c);
  static QTSeries monomial(const PrecisionProfile& profile, int q_deg, int t_deg,
                           const Rational& c = 1);

  const PrecisionProfile& profile() const { return profile_; }
  bool in_window(int q_deg, int t_deg) const;

  // Zero outside the window.
  const Rational& coeff(int q_deg, int t_deg) const;
  // Writes outside the window are dropped.
  void set(int q_deg, int t_deg, const Rational& c);
  void add_to(int q_deg, int t_deg, const Rational& c);

  bool is_zero() const;
  bool row_is_zero(int q_deg) const;
  // Half-open range [lo, hi) of t-degrees holding the nonzero entries of a
  // row; lo == hi for a zero row.
  std::pair<int, int> row_support(int q_deg) const;

  QTSeries& operator+=(const QTSeries& other);
  QTSeries& operator-=(const QTSeries& other);
  QTSeries& operator*=(const Rational& c);
  QTSeries& operator*=(const QTSeries& other);
  QTSeries operator-() const;
  bool operator==(const QTSeries& other) const;
  bool operator!=(const QTSeries& other) const { return !(*this == other); }

  // Copy into another window; coefficients outside it are dropped.
  QTSeries restricted(const PrecisionProfile& target) const;
  // Multiply by t^d.
  QTSeries shifted_t(int d) const;
  // q -> q^k, dropping q-degrees >= Q.
  QTSeries q_power_substituted(int k) const;
  // d/dt.
  QTSeries t_derivative() const;

  // Smallest p-adic valuation among the coefficients (kInfiniteValuation
  // for the zero series).
  long min_valuation() const;

  template <class F>
  void for_each_nonzero(F&& f) const {
    for (int i = 0; i < profile_.q_order; ++i) {
      for (int j = profile_.tmin; j < profile_.tmax; ++j) {
        const Rational& c = data_[index(i, j)];
        if (c != 0) f(i, j, c);
      }
    }
  }

 private:
  std::size_t index(int q_deg, int t_deg) const {
    return static_cast<std::size_t>(q_deg) * profile_.width() + (t_deg - profile_.tmin);
  }
  void require_same_profile(const QTSeries& other) const;

  PrecisionProfile profile_;
  std::vector<Rational> data_;
};

QTSeries operator+(QTSeries a, const QTSeries& b);
QTSeries operator-(QTSeries a, const QTSeries& b);
QTSeries operator*(const QTSeries& a, const QTSeries& b);
QTSeries operator*(QTSeries a, const Rational& c);
QTSeries operator*(const Rational& c, QTSeries a);

QTSeries invert(const QTSeries& a);
QTSeries log1p(const QTSeries& s);
QTSeries exp0(const QTSeries& s);

// zeta with (t^-1 - 1)^p = t^-p - 1 + p zeta, as integer coefficients of
// t^0, t^-1, ..., t^-(p-1).
std::vector<Integer> zeta_coefficients(unsigned long p);

// psi(t^e) in the profile's window: a polynomial in t for e >= 0 and the
// N-term zeta expansion for e < 0.
QTSeries frobenius_t_power(const PrecisionProfile& profile, int e);

// q -> q^p, t -> 1 - (1 - t)^p; exact modulo p^N inside the window.
QTSeries frobenius(const QTSeries& a);

// -log(1 - t).
QTSeries minus_log_one_minus_t(const PrecisionProfile& profile);

}  // namespace padic
