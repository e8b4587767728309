#include "padic_moments/qt_series.hpp"

#include <algorithm>
#include <map>

namespace padic {

void PrecisionProfile::validate() const {
  if (!is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (precision < 1) throw ConfigError("precision N must be >= 1");
  if (q_order < 1) throw ConfigError("Q must be >= 1");
  if (!(tmin <= 0 && 0 < tmax)) throw ConfigError("t-window must satisfy tmin <= 0 < tmax");
  if (nmax < 1) throw ConfigError("nmax must be >= 1");
}

PrecisionProfile PrecisionProfile::with_window(int new_tmin, int new_tmax) const {
  PrecisionProfile out = *this;
  out.tmin = new_tmin;
  out.tmax = new_tmax;
  return out;
}

namespace {

const Rational& zero_rational() {
  static const Rational z(0);
  return z;
}

// Truncated product of two power series in t stored from degree 0.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t len) {
  std::vector<Rational> out(len);
  Rational tmp;
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (b[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      mpq_add(out[i + j].get_mpq_t(), out[i + j].get_mpq_t(), tmp.get_mpq_t());
    }
  }
  return out;
}

// Inverse of a power series in t with nonzero constant term.
std::vector<Rational> series_inverse(const std::vector<Rational>& u, std::size_t len) {
  std::vector<Rational> w(len);
  if (len == 0) return w;
  const Rational inv0 = 1 / u[0];
  w[0] = inv0;
  Rational acc, tmp;
  for (std::size_t n = 1; n < len; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= n && k < u.size(); ++k) {
      if (u[k] == 0 || w[n - k] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), u[k].get_mpq_t(), w[n - k].get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    w[n] = -acc * inv0;
  }
  return w;
}

// log1p and exp0 need the q^0 row to have positive t-valuation; the
// higher rows are nilpotent through q, which makes the power sums finite.
void require_nilpotent(const QTSeries& s, const char* who) {
  const auto [lo, hi] = s.row_support(0);
  if (lo < hi && lo <= 0)
    throw DomainError(std::string(who) +
                      ": q^0 part must have positive t-valuation (series does not terminate)");
}

}  // namespace

QTSeries::QTSeries(const PrecisionProfile& profile)
    : profile_(profile),
      data_(static_cast<std::size_t>(std::max(profile.q_order, 0)) *
            std::max(profile.width(), 0)) {}

QTSeries QTSeries::constant(const PrecisionProfile& profile, const Rational& c) {
  QTSeries s(profile);
  s.set(0, 0, c);
  return s;
}

QTSeries QTSeries::monomial(const PrecisionProfile& profile, int q_deg, int t_deg,
                            const Rational& c) {
  QTSeries s(profile);
  s.set(q_deg, t_deg, c);
  return s;
}

bool QTSeries::in_window(int q_deg, int t_deg) const {
  return q_deg >= 0 && q_deg < profile_.q_order && t_deg >= profile_.tmin && t_deg < profile_.tmax;
}

const Rational& QTSeries::coeff(int q_deg, int t_deg) const {
  if (!in_window(q_deg, t_deg)) return zero_rational();
  return data_[index(q_deg, t_deg)];
}

void QTSeries::set(int q_deg, int t_deg, const Rational& c) {
  if (in_window(q_deg, t_deg)) data_[index(q_deg, t_deg)] = c;
}

void QTSeries::add_to(int q_deg, int t_deg, const Rational& c) {
  if (in_window(q_deg, t_deg)) data_[index(q_deg, t_deg)] += c;
}

bool QTSeries::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& c) { return c == 0; });
}

bool QTSeries::row_is_zero(int q_deg) const {
  const auto [lo, hi] = row_support(q_deg);
  return lo == hi;
}

std::pair<int, int> QTSeries::row_support(int q_deg) const {
  int lo = profile_.tmax, hi = profile_.tmin;
  for (int j = profile_.tmin; j < profile_.tmax; ++j) {
    if (data_[index(q_deg, j)] != 0) {
      lo = std::min(lo, j);
      hi = j + 1;
    }
  }
  if (lo >= hi) return {0, 0};
  return {lo, hi};
}

void QTSeries::require_same_profile(const QTSeries& other) const {
  if (!(profile_ == other.profile_)) throw ProfileMismatchError("QTSeries profiles differ");
}

QTSeries& QTSeries::operator+=(const QTSeries& other) {
  require_same_profile(other);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (other.data_[k] != 0) data_[k] += other.data_[k];
  return *this;
}

QTSeries& QTSeries::operator-=(const QTSeries& other) {
  require_same_profile(other);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (other.data_[k] != 0) data_[k] -= other.data_[k];
  return *this;
}

QTSeries& QTSeries::operator*=(const Rational& c) {
  for (auto& x : data_)
    if (x != 0) x *= c;
  return *this;
}

QTSeries& QTSeries::operator*=(const QTSeries& other) {
  *this = *this * other;
  return *this;
}

QTSeries QTSeries::operator-() const {
  QTSeries out = *this;
  for (auto& x : out.data_)
    if (x != 0) x = -x;
  return out;
}

bool QTSeries::operator==(const QTSeries& other) const {
  return profile_ == other.profile_ && data_ == other.data_;
}

QTSeries QTSeries::restricted(const PrecisionProfile& target) const {
  QTSeries out(target);
  const int qmax = std::min(profile_.q_order, target.q_order);
  const int lo = std::max(profile_.tmin, target.tmin);
  const int hi = std::min(profile_.tmax, target.tmax);
  for (int i = 0; i < qmax; ++i)
    for (int j = lo; j < hi; ++j) out.data_[out.index(i, j)] = data_[index(i, j)];
  return out;
}

QTSeries QTSeries::shifted_t(int d) const {
  QTSeries out(profile_);
  for_each_nonzero([&](int i, int j, const Rational& c) { out.set(i, j + d, c); });
  return out;
}

QTSeries QTSeries::q_power_substituted(int k) const {
  if (k < 1) throw DomainError("q-power substitution needs k >= 1");
  QTSeries out(profile_);
  for_each_nonzero([&](int i, int j, const Rational& c) { out.set(i * k, j, c); });
  return out;
}

QTSeries QTSeries::t_derivative() const {
  QTSeries out(profile_);
  for_each_nonzero([&](int i, int j, const Rational& c) {
    if (j != 0) out.set(i, j - 1, c * j);
  });
  return out;
}

long QTSeries::min_valuation() const {
  long best = kInfiniteValuation;
  for (const auto& c : data_)
    if (c != 0) best = std::min(best, valuation(c, profile_.p));
  return best;
}

QTSeries operator+(QTSeries a, const QTSeries& b) { return a += b; }
QTSeries operator-(QTSeries a, const QTSeries& b) { return a -= b; }
QTSeries operator*(QTSeries a, const Rational& c) { return a *= c; }
QTSeries operator*(const Rational& c, QTSeries a) { return a *= c; }

QTSeries operator*(const QTSeries& a, const QTSeries& b) {
  if (!(a.profile() == b.profile())) throw ProfileMismatchError("QTSeries profiles differ");
  const PrecisionProfile& pr = a.profile();
  QTSeries out(pr);
  const int Q = pr.q_order;
  std::vector<std::pair<int, int>> sa(Q), sb(Q);
  for (int i = 0; i < Q; ++i) {
    sa[i] = a.row_support(i);
    sb[i] = b.row_support(i);
  }
  std::vector<Rational> acc(pr.width());
  Rational tmp;
  for (int k = 0; k < Q; ++k) {
    bool touched = false;
    for (auto& x : acc) x = 0;
    for (int i = 0; i <= k; ++i) {
      const auto [la, ha] = sa[i];
      const auto [lb, hb] = sb[k - i];
      if (la == ha || lb == hb) continue;
      for (int ja = la; ja < ha; ++ja) {
        const Rational& ca = a.coeff(i, ja);
        if (ca == 0) continue;
        const int jb_lo = std::max(lb, pr.tmin - ja);
        const int jb_hi = std::min(hb, pr.tmax - ja);
        for (int jb = jb_lo; jb < jb_hi; ++jb) {
          const Rational& cb = b.coeff(k - i, jb);
          if (cb == 0) continue;
          mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
          Rational& dst = acc[ja + jb - pr.tmin];
          mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp.get_mpq_t());
          touched = true;
        }
      }
    }
    if (!touched) continue;
    for (int j = pr.tmin; j < pr.tmax; ++j)
      if (acc[j - pr.tmin] != 0) out.set(k, j, acc[j - pr.tmin]);
  }
  return out;
}

QTSeries invert(const QTSeries& a) {
  const PrecisionProfile& pr = a.profile();
  const auto [lo0, hi0] = a.row_support(0);
  if (lo0 == hi0) throw DomainError("invert: q^0 part is zero");
  const int d = lo0;
  for (int i = 1; i < pr.q_order; ++i) {
    const auto [lo, hi] = a.row_support(i);
    if (lo < hi && lo < d)
      throw DomainError("invert: higher q-rows reach below the leading t-degree");
  }
  QTSeries out(pr);
  // a = t^d u; the window of 1/a needs u up to degree tmax + d - 1.
  const int len = pr.tmax + d;
  if (len <= 0) return out;
  const auto L = static_cast<std::size_t>(len);
  std::vector<std::vector<Rational>> U(pr.q_order, std::vector<Rational>(L));
  for (int i = 0; i < pr.q_order; ++i)
    for (int k = 0; k < len; ++k) U[i][k] = a.coeff(i, k + d);
  std::vector<std::vector<Rational>> W(pr.q_order);
  W[0] = series_inverse(U[0], L);
  for (int i = 1; i < pr.q_order; ++i) {
    std::vector<Rational> acc(L);
    for (int k = 1; k <= i; ++k) {
      const auto prod = series_mul(U[k], W[i - k], L);
      for (std::size_t n = 0; n < L; ++n)
        if (prod[n] != 0) acc[n] += prod[n];
    }
    W[i] = series_mul(W[0], acc, L);
    for (auto& x : W[i]) x = -x;
  }
  for (int i = 0; i < pr.q_order; ++i)
    for (int k = 0; k < len; ++k)
      if (W[i][k] != 0) out.set(i, k - d, W[i][k]);
  return out;
}

QTSeries log1p(const QTSeries& s) {
  require_nilpotent(s, "log1p");
  QTSeries out(s.profile());
  QTSeries pw = s;
  for (long k = 1; !pw.is_zero(); ++k) {
    out += pw * Rational(k % 2 == 1 ? 1 : -1, k);
    pw = pw * s;
  }
  return out;
}

QTSeries exp0(const QTSeries& s) {
  require_nilpotent(s, "exp0");
  QTSeries out = QTSeries::constant(s.profile(), 1);
  QTSeries term = out;
  for (long k = 1;; ++k) {
    term = term * s;
    if (term.is_zero()) break;
    term *= Rational(1, k);
    out += term;
  }
  return out;
}

std::vector<Integer> zeta_coefficients(unsigned long p) {
  // (s - 1)^p - s^p + 1 with s = t^-1, divided by p.
  std::vector<Integer> z(p);
  for (unsigned long i = 0; i < p; ++i) {
    Integer c = binomial(p, i);
    if ((p - i) % 2 == 1) c = -c;
    if (i == 0) c += 1;
    z[i] = c / Integer(p);
  }
  return z;
}

QTSeries frobenius_t_power(const PrecisionProfile& pr, int e) {
  QTSeries out(pr);
  if (e >= 0) {
    if (e >= pr.tmax) return out;
    const auto len = static_cast<std::size_t>(pr.tmax);
    std::vector<Rational> base(len), acc(len);
    for (unsigned long i = 1; i <= pr.p && i < len; ++i) {
      Integer c = binomial(pr.p, i);
      if (i % 2 == 0) c = -c;
      base[i] = Rational(c);
    }
    acc[0] = 1;
    for (int k = 0; k < e; ++k) acc = series_mul(acc, base, len);
    for (std::size_t j = 0; j < len; ++j)
      if (acc[j] != 0) out.set(0, static_cast<int>(j), acc[j]);
    return out;
  }
  const unsigned long m = static_cast<unsigned long>(-e);
  const std::vector<Integer> z = zeta_coefficients(pr.p);
  // Polynomial in s = t^-1: sum_{k<N} C(m+k-1, k) p^k zeta^k.
  std::vector<Integer> zk{Integer(1)};
  std::vector<Integer> total((pr.p - 1) * (pr.precision - 1) + 1);
  Integer pk = 1;
  for (int k = 0; k < pr.precision; ++k) {
    const Integer w = binomial(m + k - 1, k) * pk;
    for (std::size_t i = 0; i < zk.size(); ++i) total[i] += w * zk[i];
    std::vector<Integer> next(zk.size() + pr.p - 1);
    for (std::size_t i = 0; i < zk.size(); ++i)
      for (std::size_t r = 0; r < z.size(); ++r) next[i + r] += zk[i] * z[r];
    zk = std::move(next);
    pk *= pr.p;
  }
  const long top = -static_cast<long>(pr.p * m);
  for (std::size_t i = 0; i < total.size(); ++i)
    if (total[i] != 0) {
      const long deg = top - static_cast<long>(i);
      if (deg >= pr.tmin) out.set(0, static_cast<int>(deg), Rational(total[i]));
    }
  return out;
}

QTSeries frobenius(const QTSeries& a) {
  const PrecisionProfile& pr = a.profile();
  QTSeries out(pr);
  std::map<int, QTSeries> images;
  const auto p = static_cast<int>(pr.p);
  for (int i = 0; i * p < pr.q_order; ++i) {
    const auto [lo, hi] = a.row_support(i);
    for (int j = lo; j < hi; ++j) {
      const Rational& c = a.coeff(i, j);
      if (c == 0) continue;
      auto it = images.find(j);
      if (it == images.end()) it = images.emplace(j, frobenius_t_power(pr, j)).first;
      const auto [ilo, ihi] = it->second.row_support(0);
      for (int k = ilo; k < ihi; ++k) {
        const Rational& v = it->second.coeff(0, k);
        if (v != 0) out.add_to(i * p, k, c * v);
      }
    }
  }
  return out;
}

QTSeries minus_log_one_minus_t(const PrecisionProfile& pr) {
  QTSeries out(pr);
  for (int k = 1; k < pr.tmax; ++k) out.set(0, k, Rational(1, k));
  return out;
}

}  // namespace padic
