#include <doctest.h>

#include <stdexcept>

#include "hlroots/qpoly.hpp"
#include "oracles.hpp"

using namespace hlroots;

TEST_CASE("polynomial arithmetic") {
  const auto q = IntPolynomial::q();
  const IntPolynomial a = q * q + IntPolynomial(2) * q + IntPolynomial(1);
  CHECK(to_string(a) == "q^2+2*q+1");
  CHECK(a.degree() == 2);
  CHECK(to_string(a - a) == "0");
  CHECK((a - a).degree() == -1);
  CHECK(a.exact_div(q + IntPolynomial(1)) == q + IntPolynomial(1));
  CHECK_THROWS_AS((void)a.exact_div(q), std::domain_error);
  CHECK(a.reversed(3) == q * q * q + IntPolynomial(2) * q * q + q);
  CHECK_THROWS_AS((void)a.reversed(1), std::invalid_argument);
  CHECK(a.shifted(2).valuation() == 2);
  CHECK(a.substitute_power(3) == q.substitute_power(6) + IntPolynomial(2) * q.substitute_power(3) +
                                     IntPolynomial(1));
  CHECK(a.evaluate(BigInt(2)) == 9);
  IntPolynomial b;
  b.add_term(BigInt(-1), 4);
  b.add_term(BigInt(1), 0);
  CHECK(to_string(b) == "-q^4+1");
}

TEST_CASE("text round trip") {
  for (const char* s : {"3*q^5+17*q^4+33*q^3+31*q^2+18*q+5", "q+1", "0", "-q^3+q-2", "q^2"})
    CHECK(to_string(parse_polynomial(s)) == std::string(s));
  CHECK(parse_polynomial("q + q") == parse_polynomial("2*q"));
  CHECK_THROWS(parse_polynomial("q^"));
}

TEST_CASE("q-binomials against division and q = 1") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const auto g = q_binomial(a, b);
      CHECK(g == q_factorial(a + b).exact_div(q_factorial(a) * q_factorial(b)));
      CHECK(g.evaluate(BigInt(1)) == oracle::binomial(a + b, a));
      CHECK(g == q_binomial(b, a));
      CHECK(g.reversed(a * b) == g);
    }
  CHECK_THROWS_AS(q_binomial(-1, 2), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials multiply to q^k - 1") {
  for (int k = 1; k <= 12; ++k) {
    IntPolynomial prod(1);
    for (int d = 1; d <= k; ++d)
      if (k % d == 0) prod *= cyclotomic_polynomial(d);
    IntPolynomial want = IntPolynomial::monomial(BigInt(1), k);
    want.add_term(BigInt(-1), 0);
    CHECK(prod == want);
  }
  CHECK(to_string(cyclotomic_polynomial(6)) == "q^2-q+1");
}

TEST_CASE("q-binomials vanish at primitive roots") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(eval_at_primitive_root(q_binomial(0, k), k) == CyclotomicValue(k, IntPolynomial(1)));
    CHECK(eval_at_primitive_root(q_binomial(k, 0), k) == CyclotomicValue(k, IntPolynomial(1)));
    for (int a = 1; a < k; ++a) CHECK(eval_at_primitive_root(q_binomial(a, k - a), k).is_zero());
  }
}

TEST_CASE("cyclotomic arithmetic") {
  using Z = CyclotomicValue;
  for (int k = 1; k <= 9; ++k) {
    const auto z = Z::root_power(k, 1);
    Z acc(k, IntPolynomial(1));
    for (int i = 0; i < k; ++i) acc = acc * z;
    CHECK(acc == Z(k, IntPolynomial(1)));
    // powers below k are distinct
    for (int i = 1; i < k; ++i) CHECK_FALSE(Z::root_power(k, i) == Z(k, IntPolynomial(1)));
  }
  const auto w = Z::root_power(3, 1);
  CHECK(to_string(w * w) == "-z-1");
  CHECK((w * w + w + Z(3, IntPolynomial(1))).is_zero());
  CHECK(Z::root_power(2, 1) == Z(2, IntPolynomial(-1)));
  CHECK_THROWS_AS(Z::root_power(3, 1) + Z::root_power(4, 1), std::invalid_argument);
  // sign identity for rectangles: zeta^{(k-1)nk/2} = (-1)^{(k-1)n}
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 5; ++k) {
      const int eta = n * k * (k - 1) / 2;
      const int sign = ((k - 1) * n) % 2 == 0 ? 1 : -1;
      CHECK(Z::root_power(k, eta) == Z(k, IntPolynomial(sign)));
    }
}

TEST_CASE("rational polynomials") {
  const RatPolynomial half(Rational(1, 2));
  CHECK(to_string(half * RatPolynomial::q()) == "1/2*q");
  CHECK_FALSE(is_integral(half));
  CHECK_THROWS_AS(to_integral(half), std::domain_error);
  CHECK(to_integral(half + half) == IntPolynomial(1));
  const Cyclotomic<Rational> r(4, RatPolynomial::q() * RatPolynomial::q());
  CHECK(r.is_integer());
  CHECK(r.constant() == -1);
}
