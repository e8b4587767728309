#pragma once

#include <map>
#include <string>
#include <vector>

#include "padic_moments/orientations.hpp"

namespace padic {

struct TestPolynomial {
  std::map<int, Rational> coefficients;  // r^k -> a_k, zero entries omitted
  std::string label;

  Rational evaluate(const Rational& r) const;
  int degree() const;
  TestPolynomial operator+(const TestPolynomial& other) const;
};

// r^s f(r)
TestPolynomial shifted(const TestPolynomial& f, int s);

// f(u) p-integral for every u in [1, p^precision) prime to p.  Only a
// necessary condition for integer-valuedness on units.
bool screen_integer_valued(const TestPolynomial& f, unsigned long p, int precision);

// The captions' families: p^-i (r^((p-1) p^i) - 1) for odd p,
// 2^-(i+2) (r^(2^i) - 1) for p = 2 (i >= 1).  i = -1 gives (r^p - r)/p.
// sharpened = true divides the odd-p family by one more p.
TestPolynomial canonical_family(unsigned long p, int i, bool sharpened = false);

// sum_n a_n M_n, including a_0 M_0.
QTSeries pair(const TestPolynomial& f, const MomentSequence& M);

struct Offender {
  int q_degree;
  int t_degree;
  long valuation;
};

struct CongruenceReport {
  std::string label;
  std::string sequence;  // kind of the moment sequence
  long min_valuation = kInfiniteValuation;
  std::vector<Offender> offenders;
  bool screened = false;  // outcome of the necessary-condition screen
  int screen_precision = 0;

  bool passed() const { return min_valuation >= 0 && offenders.empty(); }
};

CongruenceReport verify(const TestPolynomial& f, const MomentSequence& M);

// Base-p digit cells for a block of coefficients.
struct DigitTable {
  unsigned long p = 3;
  int digits = 4;
  std::vector<std::string> row_labels;
  std::vector<std::string> column_labels;
  std::vector<std::vector<PadicInteger>> cells;

  std::string cell(std::size_t row, std::size_t column) const;
};

// Rows M_n for n in [n_first, n_last], columns t^j for j in t_columns, at
// a fixed q-degree (0 reproduces the Todd figures).
DigitTable digit_table(const MomentSequence& M, int n_first, int n_last,
                       const std::vector<int>& t_columns, int digits, int q_degree = 0);

// One moment M_n, rows q^i for i in [q_first, q_last] (the Witten layout).
DigitTable digit_table_q_rows(const MomentSequence& M, int n, int q_first, int q_last,
                              const std::vector<int>& t_columns, int digits);

// Digit digit_index (0 = least significant) repeats down every column with
// the given row period.
bool periodicity_check(const DigitTable& table, int digit_index, int period);

// (p-1) p^i for odd p; for p = 2, 2 for i <= 2 and 2^(i-1) above.
int caption_period(unsigned long p, int digit_index);

std::string render_text(const DigitTable& table);
std::string render_csv(const DigitTable& table);

}  // namespace padic
