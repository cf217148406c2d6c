#include "hlroots/qpoly.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace hlroots {

namespace {

template <class R>
std::string render(const Polynomial<R>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = p.degree(); e >= 0; --e) {
    R c = p[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << var;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, const std::string& var) {
  return render(p, var);
}
std::string to_string(const RatPolynomial& p, const std::string& var) {
  return render(p, var);
}

bool is_integral(const RatPolynomial& p) {
  for (const auto& c : p.coefficients())
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

IntPolynomial to_integral(const RatPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("non-integral coefficient " + c.str());
    out.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial parse_polynomial(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  IntPolynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    BigInt coeff = 1;
    bool have_coeff = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coeff = BigInt(s.substr(i, j - i));
      have_coeff = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int exponent = 0;
    if (s.compare(i, var.size(), var) == 0) {
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing exponent in '" + text + "'");
        exponent = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("cannot parse polynomial '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("unexpected character in '" + text + "'");
    out.add_term(coeff * sign, exponent);
  }
  return out;
}

IntPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
  IntPolynomial acc(1);
  for (int i = 1; i <= n; ++i)
    acc *= IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(i), BigInt(1)));
  return acc;
}

IntPolynomial q_binomial(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("q_binomial with a negative argument");
  // row[j] holds [i; j] for the current i = j + (i - j); Pascal:
  // [n; j] = [n-1; j-1] + q^j [n-1; j]
  const int n = a + b;
  const int kk = std::min(a, b);
  std::vector<IntPolynomial> row(static_cast<std::size_t>(kk) + 1);
  row[0] = IntPolynomial(1);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, kk); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
  }
  return row[static_cast<std::size_t>(kk)];
}

IntPolynomial cyclotomic_polynomial(int k) {
  if (k < 1) throw std::invalid_argument("cyclotomic order must be positive");
  IntPolynomial acc = IntPolynomial::monomial(1, k) - IntPolynomial(1);
  for (int d = 1; d < k; ++d)
    if (k % d == 0) acc = acc.exact_div(cyclotomic_polynomial(d));
  return acc;
}

std::string to_string(const Cyclotomic<BigInt>& v) { return render(v.residue(), "z"); }
std::string to_string(const Cyclotomic<Rational>& v) { return render(v.residue(), "z"); }

}  // namespace hlroots
