#include "padic_moments/scalars.hpp"

#include <mutex>

namespace padic {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return power(Rational(1 / base), -exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  Rational out(power(Integer(base.get_num()), e), power(Integer(base.get_den()), e));
  out.canonicalize();
  return out;
}

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= n) {
    // sum_{j <= m} C(m+1, j) B_j = 0 solved for B_m.
    const unsigned long m = cache.size();
    Rational acc = 0;
    for (unsigned long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    acc /= -Rational(static_cast<long>(m + 1));
    cache.push_back(acc);
  }
  return cache[n];
}

std::vector<unsigned long> PadicInteger::digits() const {
  std::vector<unsigned long> out;
  out.reserve(precision);
  Integer rest = residue;
  for (int k = 0; k < precision; ++k) {
    out.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
  }
  return out;
}

std::string PadicInteger::digit_string() const {
  const auto d = digits();
  std::string s;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (p <= 10) {
      s += static_cast<char>('0' + *it);
    } else {
      // Large primes: bracket multi-character digits.
      s += "[" + std::to_string(*it) + "]";
    }
  }
  return s;
}

std::string subscript(unsigned long n) {
  static const char* glyphs[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string dec = std::to_string(n);
  std::string out;
  for (char ch : dec) out += glyphs[ch - '0'];
  return out;
}

std::string PadicInteger::to_string() const { return digit_string() + subscript(p); }

PadicInteger reduce(const Rational& r, unsigned long p, int precision) {
  if (!is_prime(p)) throw ConfigError("reduce: p must be prime");
  if (precision < 1) throw ConfigError("reduce: precision must be positive");
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p))
    throw NonIntegralError("reduce: denominator of " + to_string(r) + " is divisible by " +
                           std::to_string(p));
  const Integer modulus = power(Integer(p), precision);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), modulus.get_mpz_t());
  Integer res = r.get_num() * inv;
  mpz_mod(res.get_mpz_t(), res.get_mpz_t(), modulus.get_mpz_t());
  return PadicInteger{p, precision, res};
}

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) return kInfiniteValuation;
  Integer rest;
  const Integer prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const Rational& r, unsigned long p) {
  if (r == 0) return kInfiniteValuation;
  return valuation(Integer(r.get_num()), p) - valuation(Integer(r.get_den()), p);
}

Rational padic_log(const Rational& c, unsigned long p, int precision) {
  if (!is_prime(p)) throw ConfigError("padic_log: p must be prime");
  const Rational x = c - 1;
  if (x == 0) return 0;
  const long v = valuation(x, p);
  if (v < 1) throw DomainError("padic_log: c must be congruent to 1 mod p");
  Rational sum = 0;
  Rational xk = 1;
  for (long k = 1;; ++k) {
    // Terms from k on have valuation >= k*v - floor(log_p k); that bound
    // is nondecreasing in k, so the first one reaching N ends the sum.
    long log_k = 0;
    for (long m = k; m >= static_cast<long>(p); m /= static_cast<long>(p)) ++log_k;
    if (k * v - log_k >= precision) break;
    xk *= x;
    Rational term = xk / Rational(k);
    if (k % 2 == 0) term = -term;
    sum += term;
  }
  return sum;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  std::string body = text;
  if (!body.empty() && body.front() == '+') body.erase(body.begin());
  if (out.set_str(body, 10) != 0) throw ConfigError("not a rational number: " + text);
  if (out.get_den() == 0) throw ConfigError("zero denominator: " + text);
  out.canonicalize();
  return out;
}

}  // namespace padic
