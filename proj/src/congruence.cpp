#include "padic_moments/congruence.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

Rational TestPolynomial::evaluate(const Rational& r) const {
  Rational total = 0;
  for (const auto& [k, a] : coefficients) total += a * power(r, k);
  return total;
}

int TestPolynomial::degree() const {
  return coefficients.empty() ? -1 : coefficients.rbegin()->first;
}

TestPolynomial TestPolynomial::operator+(const TestPolynomial& other) const {
  TestPolynomial out = *this;
  for (const auto& [k, a] : other.coefficients) {
    out.coefficients[k] += a;
    if (out.coefficients[k] == 0) out.coefficients.erase(k);
  }
  out.label = "(" + label + ") + (" + other.label + ")";
  return out;
}

TestPolynomial shifted(const TestPolynomial& f, int s) {
  if (s < 0) throw DomainError("shifted: s must be >= 0");
  TestPolynomial out;
  for (const auto& [k, a] : f.coefficients) out.coefficients[k + s] = a;
  out.label = s == 0 ? f.label : "r^" + std::to_string(s) + " " + f.label;
  return out;
}

bool screen_integer_valued(const TestPolynomial& f, unsigned long p, int precision) {
  // f = g / D with g integral; f(u) is p-integral iff p^v(D) divides g(u).
  Integer D = 1;
  for (const auto& [k, a] : f.coefficients) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), a.get_den().get_mpz_t());
  const long v = valuation(D, p);
  if (v == 0) return true;
  const Integer modulus = power(Integer(p), static_cast<unsigned long>(v));
  std::vector<std::pair<unsigned long, Integer>> g;
  for (const auto& [k, a] : f.coefficients) {
    Integer c = a.get_num() * (D / a.get_den());
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    g.emplace_back(static_cast<unsigned long>(k), c);
  }
  const Integer bound = power(Integer(p), precision);
  Integer term, total;
  for (Integer u = 1; u < bound; ++u) {
    if (mpz_divisible_ui_p(u.get_mpz_t(), p)) continue;
    total = 0;
    for (const auto& [k, c] : g) {
      mpz_powm_ui(term.get_mpz_t(), u.get_mpz_t(), k, modulus.get_mpz_t());
      total += term * c;
    }
    if (!mpz_divisible_p(total.get_mpz_t(), modulus.get_mpz_t())) return false;
  }
  return true;
}

TestPolynomial canonical_family(unsigned long p, int i, bool sharpened) {
  if (!is_prime(p)) throw ConfigError("canonical_family: p must be prime");
  const std::string ps = std::to_string(p);
  TestPolynomial f;
  if (i == -1) {
    const Rational inv = Rational(1, p);
    f.coefficients[static_cast<int>(p)] = inv;
    f.coefficients[1] = -inv;
    f.label = "(r^" + ps + " - r)/" + ps;
    return f;
  }
  if (i < 0) throw DomainError("canonical_family: i must be >= -1");
  int exponent;
  int scale_power;
  if (p == 2) {
    if (i < 1) throw DomainError("canonical_family: the p = 2 family starts at i = 1");
    exponent = 1 << i;
    scale_power = i + 2;
  } else {
    exponent = static_cast<int>((p - 1) * power(Integer(p), i).get_ui());
    scale_power = sharpened ? i + 1 : i;
  }
  const Rational scale = Rational(1) / Rational(power(Integer(p), scale_power));
  f.coefficients[exponent] = scale;
  f.coefficients[0] = -scale;
  f.label = ps + "^-" + std::to_string(scale_power) + " (r^" + std::to_string(exponent) + " - 1)";
  return f;
}

QTSeries pair(const TestPolynomial& f, const MomentSequence& M) {
  QTSeries out(M.profile);
  for (const auto& [k, a] : f.coefficients) {
    if (k < 0 || k > M.nmax())
      throw DomainError("pair: support overflow, r^" + std::to_string(k) + " beyond nmax = " +
                        std::to_string(M.nmax()));
    out += M.at(k) * a;
  }
  return out;
}

CongruenceReport verify(const TestPolynomial& f, const MomentSequence& M) {
  CongruenceReport report;
  report.label = f.label;
  report.sequence = to_string(M.kind);
  report.screen_precision = M.profile.precision + 2;
  report.screened = screen_integer_valued(f, M.profile.p, report.screen_precision);
  const QTSeries value = pair(f, M);
  value.for_each_nonzero([&](int i, int j, const Rational& c) {
    const long v = valuation(c, M.profile.p);
    report.min_valuation = std::min(report.min_valuation, v);
    if (v < 0) report.offenders.push_back({i, j, v});
  });
  return report;
}

std::string DigitTable::cell(std::size_t row, std::size_t column) const {
  return cells.at(row).at(column).to_string();
}

namespace {

std::vector<std::string> t_labels(const std::vector<int>& cols) {
  std::vector<std::string> out;
  for (int j : cols) out.push_back("t^" + std::to_string(j));
  return out;
}

}  // namespace

DigitTable digit_table(const MomentSequence& M, int n_first, int n_last,
                       const std::vector<int>& t_columns, int digits, int q_degree) {
  DigitTable table;
  table.p = M.profile.p;
  table.digits = digits;
  table.column_labels = t_labels(t_columns);
  for (int n = n_first; n <= n_last; ++n) {
    table.row_labels.push_back("M_" + std::to_string(n));
    std::vector<PadicInteger> row;
    for (int j : t_columns) row.push_back(reduce(M.at(n).coeff(q_degree, j), table.p, digits));
    table.cells.push_back(std::move(row));
  }
  return table;
}

DigitTable digit_table_q_rows(const MomentSequence& M, int n, int q_first, int q_last,
                              const std::vector<int>& t_columns, int digits) {
  DigitTable table;
  table.p = M.profile.p;
  table.digits = digits;
  table.column_labels = t_labels(t_columns);
  const QTSeries& m = M.at(n);
  for (int i = q_first; i <= q_last; ++i) {
    table.row_labels.push_back("q^" + std::to_string(i));
    std::vector<PadicInteger> row;
    for (int j : t_columns) row.push_back(reduce(m.coeff(i, j), table.p, digits));
    table.cells.push_back(std::move(row));
  }
  return table;
}

bool periodicity_check(const DigitTable& table, int digit_index, int period) {
  if (digit_index < 0 || digit_index >= table.digits)
    throw DomainError("periodicity_check: digit index out of range");
  if (period < 1) throw DomainError("periodicity_check: period must be positive");
  const std::size_t rows = table.cells.size();
  for (std::size_t r = 0; r + period < rows; ++r) {
    for (std::size_t col = 0; col < table.cells[r].size(); ++col) {
      const auto a = table.cells[r][col].digits();
      const auto b = table.cells[r + period][col].digits();
      if (a[digit_index] != b[digit_index]) return false;
    }
  }
  return true;
}

int caption_period(unsigned long p, int digit_index) {
  if (p == 2) return digit_index <= 2 ? 2 : 1 << (digit_index - 1);
  return static_cast<int>((p - 1) * power(Integer(p), digit_index).get_ui());
}

std::string render_text(const DigitTable& table) {
  std::size_t label_width = 0;
  for (const auto& l : table.row_labels) label_width = std::max(label_width, l.size());
  // Cells are digits plus a subscript; count display columns, not bytes.
  const std::size_t cell_width =
      static_cast<std::size_t>(table.digits) * (table.p <= 10 ? 1 : 3) + std::to_string(table.p).size();
  std::size_t width = cell_width;
  for (const auto& l : table.column_labels) width = std::max(width, l.size());
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (const auto& l : table.column_labels) out << "  " << std::string(width - l.size(), ' ') << l;
  out << '\n';
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    out << table.row_labels[r] << std::string(label_width - table.row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < table.cells[r].size(); ++c)
      out << "  " << std::string(width - cell_width, ' ') << table.cell(r, c);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const DigitTable& table) {
  std::ostringstream out;
  out << "row";
  for (const auto& l : table.column_labels) out << ',' << csv_field(l);
  out << "\r\n";
  for (std::size_t r = 0; r < table.cells.size(); ++r) {
    out << csv_field(table.row_labels[r]);
    for (std::size_t c = 0; c < table.cells[r].size(); ++c) out << ',' << csv_field(table.cell(r, c));
    out << "\r\n";
  }
  return out.str();
}

}  // namespace padic
