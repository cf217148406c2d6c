#include <doctest.h>

#include <stdexcept>

#include "hlroots/symfunc.hpp"
#include "oracles.hpp"

using namespace hlroots;

namespace {

const BasisTables& tables() {
  static const BasisTables t(8);
  return t;
}

RatPolynomial poly(const std::string& s) { return RatPolynomial(parse_polynomial(s)); }

}  // namespace

TEST_CASE("basis tags") {
  for (auto b : {Basis::monomial, Basis::complete, Basis::elementary, Basis::power, Basis::schur})
    CHECK(parse_basis(std::string(1, basis_tag(b))) == b);
  CHECK_THROWS_AS(parse_basis("x"), std::invalid_argument);
}

TEST_CASE("transition matrices agree with polynomial expansions") {
  for (int n = 1; n <= 6; ++n) {
    const auto& parts = tables().partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& lambda = parts[i];
      const auto h = oracle::product(lambda, n, oracle::h_r);
      const auto e = oracle::product(lambda, n, oracle::e_r);
      const auto p = oracle::product(lambda, n, oracle::p_r);
      const auto s = oracle::schur(lambda, n);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto& mu = parts[j];
        CHECK(tables().to_monomial(Basis::complete, n)[i][j] == Rational(oracle::coefficient(h, mu, n)));
        CHECK(tables().to_monomial(Basis::elementary, n)[i][j] == Rational(oracle::coefficient(e, mu, n)));
        CHECK(tables().to_monomial(Basis::power, n)[i][j] == Rational(oracle::coefficient(p, mu, n)));
        CHECK(tables().to_monomial(Basis::schur, n)[i][j] == Rational(oracle::coefficient(s, mu, n)));
      }
    }
  }
}

TEST_CASE("basis round trips are identities") {
  for (int n = 0; n <= 8; ++n)
    for (auto b : {Basis::monomial, Basis::complete, Basis::elementary, Basis::power, Basis::schur}) {
      const auto& to = tables().to_monomial(b, n);
      const auto& from = tables().from_monomial(b, n);
      const std::size_t size = to.size();
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          Rational acc = 0;
          for (std::size_t l = 0; l < size; ++l) acc += to[i][l] * from[l][j];
          CHECK(acc == Rational(i == j ? 1 : 0));
        }
      for (const auto& lambda : tables().partitions(n)) {
        const auto f = basis_element(b, lambda);
        for (auto other : {Basis::monomial, Basis::complete, Basis::power, Basis::schur})
          CHECK(basis_convert(basis_convert(f, other, tables()), b, tables()) == f);
      }
    }
}

TEST_CASE("kostka matrix is unitriangular") {
  const auto kostka = kostka_matrix(6);
  const auto parts = partitions_of(6);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const int v = kostka.at({parts[i], parts[j]});
      if (i == j) CHECK(v == 1);
      if (j < i) CHECK(v == 0);
    }
  CHECK(kostka.at({Partition{3, 2, 1}, Partition{1, 1, 1, 1, 1, 1}}) == 16);
}

TEST_CASE("matrix inversion") {
  const RationalMatrix m{{2, 1}, {1, 1}};
  const auto inv = invert(m);
  CHECK(inv == RationalMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(invert(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST_CASE("budget is enforced") {
  const BasisTables small(3);
  CHECK_NOTHROW((void)small.partitions(3));
  CHECK_THROWS_AS((void)small.partitions(4), std::out_of_range);
  CHECK_THROWS_AS(to_schur(hl_monomial_expansion(Partition{2, 2}), small), std::out_of_range);
  CHECK_THROWS_AS(BasisTables(-1), std::invalid_argument);
}

TEST_CASE("plethysm by power sums") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto f = plethysm_pk(basis_element(Basis::power, lambda), 2, tables());
      QSymFunction want{Basis::power, 2 * n, {}};
      want.terms.emplace(scale(lambda, 2), RatPolynomial(1));
      CHECK(f == want);
    }
  const auto p2e2 = basis_convert(plethysm_pk(basis_element(Basis::elementary, Partition{2}), 2, tables()),
                                  Basis::monomial, tables());
  CHECK(to_string(p2e2) == "m(2,2)");
  const auto p3h2 = plethysm_pk(basis_element(Basis::complete, Partition{2}), 3, tables());
  CHECK(to_string(basis_convert(p3h2, Basis::power, tables())) == "1/2*p(6)+1/2*p(3,3)");
  CHECK_THROWS_AS(plethysm_pk(basis_element(Basis::power, Partition{1}), 0, tables()),
                  std::invalid_argument);
}

TEST_CASE("the three routes agree") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto inv = hl_monomial_expansion(lambda, HlRoute::inversion);
      CHECK(inv == hl_monomial_expansion(lambda, HlRoute::cospin));
      CHECK(inv == hl_monomial_expansion(lambda, HlRoute::fermionic));
      CHECK(inv == hl_monomial_expansion(lambda));
    }
  CHECK_THROWS_AS(hl_monomial_expansion(Partition{}), std::invalid_argument);
}

TEST_CASE("at q = 1 the function is h_lambda") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto f = hl_monomial_expansion(lambda);
      const auto h = basis_convert(basis_element(Basis::complete, lambda), Basis::monomial, tables());
      for (const auto& mu : partitions_of(n))
        CHECK(f.coefficient(mu, {}).evaluate(Rational(1)) == h.coefficient(mu, {}).evaluate(Rational(1)));
    }
}

TEST_CASE("Schur coefficients are non-negative and unitriangular up to a power of q") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto s = to_schur(hl_monomial_expansion(lambda), tables());
      CHECK(s.coefficient(lambda, {}) == RatPolynomial::monomial(Rational(1), eta(lambda)));
      CHECK(s.coefficient(Partition{n}, {}) == RatPolynomial(1));
      for (const auto& [mu, c] : s.terms) {
        CHECK(mu >= lambda);
        CHECK(is_integral(c));
        for (const auto& x : c.coefficients()) CHECK(x >= 0);
      }
    }
}

TEST_CASE("printed coefficients of (2,1,1)") {
  const std::vector<std::pair<Partition, std::string>> printed = {
      {{1, 1, 1, 1}, "q^3+3*q^2+5*q+3"}, {{2, 1, 1}, "q^3+2*q^2+3*q+1"}, {{2, 2}, "q^3+q^2+2*q"},
      {{3, 1}, "q^3+q^2+q"},             {{4}, "q^3"}};
  const auto qp = hl_q_prime(Partition{2, 1, 1});
  const auto qt = hl_monomial_expansion(Partition{2, 1, 1});
  CHECK(eta(Partition{2, 1, 1}) == 3);
  CHECK(qp.terms.size() == 5);
  for (const auto& [mu, text] : printed) {
    CHECK(qp.coefficient(mu, {}) == poly(text));
    CHECK(qt.coefficient(mu, {}) == poly(text).reversed(3));
  }
  CHECK(to_string(qt.coefficient(Partition{4}, {})) == "1");
}

TEST_CASE("Schur expansion of (2,2,2)") {
  const auto s = to_schur(hl_monomial_expansion(Partition{2, 2, 2}), tables());
  CHECK(s.terms.size() == 7);
  CHECK(s.coefficient(Partition{2, 2, 2}, {}) == poly("q^6"));
  CHECK(s.coefficient(Partition{3, 2, 1}, {}) == poly("q^5+q^4"));
  CHECK(s.coefficient(Partition{3, 3}, {}) == poly("q^3"));
  CHECK(s.coefficient(Partition{4, 1, 1}, {}) == poly("q^3"));
  CHECK(s.coefficient(Partition{4, 2}, {}) == poly("q^4+q^3+q^2"));
  CHECK(s.coefficient(Partition{5, 1}, {}) == poly("q^2+q"));
  CHECK(s.coefficient(Partition{6}, {}) == poly("1"));
  const auto at3 = specialize(s, 3);
  CHECK(to_string(at3) == "s(6)-s(5,1)+s(4,1,1)+s(3,3)-s(3,2,1)+s(2,2,2)");
  const auto p3h2 = plethysm_pk(basis_element(Basis::complete, Partition{2}), 3, tables());
  CHECK(specialize(basis_convert(p3h2, Basis::schur, tables()), 3) == at3);
}

TEST_CASE("rectangles at roots of unity") {
  for (int k = 2; k <= 8; ++k)
    for (int n = 1; n * k <= 8; ++n) {
      const auto r = verify_rectangular_theorem(n, k, tables());
      CHECK(r.tilde_ok);
      CHECK(r.sign_ok);
      CHECK(r.eta_sign_ok);
      CHECK(r.dichotomy_ok);
      for (const auto& t : r.terms) CHECK(t.ok);
      const auto mono = specialize(hl_monomial_expansion(Partition(std::vector<int>(
                                       static_cast<std::size_t>(k), n))),
                                   k);
      for (const auto& mu : partitions_of(n * k)) {
        bool divisible = true;
        for (int x : mu.parts()) divisible = divisible && x % k == 0;
        const auto c = mono.coefficient(mu, Cyclotomic<Rational>(k));
        CHECK(c == Cyclotomic<Rational>(k, RatPolynomial(divisible ? 1 : 0)));
      }
    }
}

TEST_CASE("columns at roots of unity") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}}) {
    const auto r = verify_column_case(n, k, tables());
    CHECK(r.ok);
    for (const auto& t : r.terms) CHECK(t.ok);
  }
}

TEST_CASE("rendering") {
  QSymFunction f{Basis::schur, 2, {}};
  f.terms.emplace(Partition{2}, RatPolynomial(1));
  f.terms.emplace(Partition{1, 1}, -RatPolynomial::q() - RatPolynomial(1));
  CHECK(to_string(f) == "s(2)+(-q-1)*s(1,1)");
  CHECK(to_string(QSymFunction{Basis::monomial, 0, {}}) == "0");
  QSymFunction g{Basis::monomial, 1, {}};
  g.terms.emplace(Partition{1}, RatPolynomial(-1));
  CHECK(to_string(g) == "-m(1)");
}
