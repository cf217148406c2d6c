#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"

namespace hlroots {

enum class Basis { monomial, complete, elementary, power, schur };

/// One-letter tag: m, h, e, p, s.
char basis_tag(Basis b);
/// Parses m/h/e/p/s; std::invalid_argument otherwise.
Basis parse_basis(const std::string& tag);

/// Homogeneous symmetric function of fixed degree in one basis. Terms are
/// kept in reverse lexicographic order of their partitions.
template <class C>
struct SymFunction {
  Basis basis = Basis::monomial;
  int degree = 0;
  std::map<Partition, C, std::greater<>> terms;

  [[nodiscard]] C coefficient(const Partition& lambda, const C& zero) const {
    const auto it = terms.find(lambda);
    return it == terms.end() ? zero : it->second;
  }

  friend bool operator==(const SymFunction&, const SymFunction&) = default;
};

using QSymFunction = SymFunction<RatPolynomial>;
using RootSymFunction = SymFunction<Cyclotomic<Rational>>;

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Transition matrices between the five bases, for every degree up to a
/// budget fixed at construction. Row lambda of to_monomial(b, n) expands
/// b_lambda in monomials; rows and columns follow partitions_of(n).
class BasisTables {
 public:
  explicit BasisTables(int budget = 8);

  [[nodiscard]] int budget() const noexcept { return budget_; }
  /// Partitions of n in reverse lexicographic order.
  [[nodiscard]] const std::vector<Partition>& partitions(int n) const;
  [[nodiscard]] std::size_t index(const Partition& lambda) const;
  [[nodiscard]] const RationalMatrix& to_monomial(Basis b, int n) const;
  [[nodiscard]] const RationalMatrix& from_monomial(Basis b, int n) const;

 private:
  void check(int n) const;

  int budget_;
  std::vector<std::vector<Partition>> partitions_;
  std::vector<std::map<Partition, std::size_t>> index_;
  // [basis][degree]
  std::vector<std::vector<RationalMatrix>> to_m_;
  std::vector<std::vector<RationalMatrix>> from_m_;
};

/// Kostka numbers K_{lambda, mu} (tableaux of shape lambda, weight mu).
std::map<std::pair<Partition, Partition>, int> kostka_matrix(int n);

/// Exact inverse; std::domain_error when singular.
RationalMatrix invert(RationalMatrix m);

template <class C>
C zero_like(const C& c) {
  return c * Rational(0);
}

/// Change of basis at fixed degree.
template <class C>
SymFunction<C> basis_convert(const SymFunction<C>& f, Basis target, const BasisTables& tables) {
  if (f.basis == target) return f;
  SymFunction<C> out{target, f.degree, {}};
  if (f.terms.empty()) return out;
  const auto& parts = tables.partitions(f.degree);
  const C zero = zero_like(f.terms.begin()->second);
  std::vector<C> mono(parts.size(), zero);
  const auto& forward = tables.to_monomial(f.basis, f.degree);
  for (const auto& [lambda, c] : f.terms) {
    const auto& row = forward[tables.index(lambda)];
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (row[j] != 0) mono[j] = mono[j] + c * row[j];
  }
  const auto& back = tables.from_monomial(target, f.degree);
  std::vector<C> result(parts.size(), zero);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (mono[i] == zero) continue;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (back[i][j] != 0) result[j] = result[j] + mono[i] * back[i][j];
  }
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!(result[j] == zero)) out.terms.emplace(parts[j], std::move(result[j]));
  return out;
}

/// p_k composed with f: p_lambda -> p_{k lambda}, result in f's basis.
template <class C>
SymFunction<C> plethysm_pk(const SymFunction<C>& f, int k, const BasisTables& tables) {
  if (k < 1) throw std::invalid_argument("plethysm needs k >= 1");
  const auto in_p = basis_convert(f, Basis::power, tables);
  SymFunction<C> scaled{Basis::power, f.degree * k, {}};
  for (const auto& [lambda, c] : in_p.terms) scaled.terms.emplace(scale(lambda, k), c);
  return basis_convert(scaled, f.basis, tables);
}

/// Single basis element b_lambda with coefficient 1.
QSymFunction basis_element(Basis b, const Partition& lambda);

/// Monomial expansion of the modified Hall-Littlewood function: the
/// coefficient of m_mu is the inversion polynomial of the tuple of rows
/// ((lambda_l), ..., (lambda_1)) with weight mu.
QSymFunction hl_monomial_expansion(const Partition& lambda);

/// Same coefficients computed independently.
enum class HlRoute { inversion, cospin, fermionic };
QSymFunction hl_monomial_expansion(const Partition& lambda, HlRoute route);

/// eta(lambda) = sum (i - 1) lambda_i.
int eta(const Partition& lambda);

/// Unmodified version: coefficients q^eta * c(1/q).
QSymFunction hl_q_prime(const Partition& lambda);

QSymFunction to_schur(const QSymFunction& f, const BasisTables& tables);

/// Coefficient-wise evaluation at a primitive k-th root of unity.
RootSymFunction specialize(const QSymFunction& f, int k);

/// Per-partition comparison of two specialized functions in the same basis.
struct TermCheck {
  Partition mu;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct TheoremReport {
  int n = 0;
  int k = 0;
  bool tilde_ok = false;      // Q~'(zeta) = p_k o h_n
  bool sign_ok = false;       // Q'(zeta) = (-1)^{(k-1)n} p_k o h_n
  bool eta_sign_ok = false;   // zeta^eta = (-1)^{(k-1)n}
  bool dichotomy_ok = false;  // m_mu coefficients are 1 iff k | mu, else 0
  std::vector<TermCheck> terms;

  [[nodiscard]] bool ok() const { return tilde_ok && sign_ok && eta_sign_ok && dichotomy_ok; }
};

/// Checks the specialization of the function indexed by the k x n
/// rectangle (n^k) at a primitive k-th root of unity.
TheoremReport verify_rectangular_theorem(int n, int k, const BasisTables& tables);

struct ColumnReport {
  int n = 0;
  int k = 0;
  bool ok = false;
  std::vector<TermCheck> terms;
};

/// Builds sum_mu G~(k^{nk}, mu) m_mu from k-ribbon tableaux of the
/// nk x k rectangle and compares its value at a primitive k-th root with
/// p_k o e_n.
ColumnReport verify_column_case(int n, int k, const BasisTables& tables);

std::string to_string(const QSymFunction& f);
std::string to_string(const RootSymFunction& f);

}  // namespace hlroots
