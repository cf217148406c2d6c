#include "hlroots/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "hlroots/ribbon_tableau.hpp"
#include "hlroots/rigged_config.hpp"
#include "hlroots/tuple_tableau.hpp"

namespace hlroots {

char basis_tag(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::complete: return 'h';
    case Basis::elementary: return 'e';
    case Basis::power: return 'p';
    case Basis::schur: return 's';
  }
  return '?';
}

Basis parse_basis(const std::string& tag) {
  if (tag == "m") return Basis::monomial;
  if (tag == "h") return Basis::complete;
  if (tag == "e") return Basis::elementary;
  if (tag == "p") return Basis::power;
  if (tag == "s") return Basis::schur;
  throw std::invalid_argument("unknown basis '" + tag + "' (expected m, h, e, p or s)");
}

namespace {

constexpr int kBases = 5;

enum class Fill { nonnegative, zero_one, whole_row };

// Number of fillings of a matrix with row sums `rows` and column sums `cols`:
// nonnegative entries (h), 0/1 entries (e), or one nonzero entry per row (p).
long long count_fillings(const std::vector<int>& rows, std::vector<int>& cols, std::size_t r,
                         Fill mode) {
  if (r == rows.size())
    return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  long long total_count = 0;
  if (mode == Fill::whole_row) {
    for (auto& c : cols) {
      if (c < rows[r]) continue;
      c -= rows[r];
      total_count += count_fillings(rows, cols, r + 1, mode);
      c += rows[r];
    }
    return total_count;
  }
  const int cap = mode == Fill::zero_one ? 1 : rows[r];
  // spread rows[r] over the columns from `c` on
  auto spread = [&](auto&& self, std::size_t c, int left) -> void {
    if (left == 0) {
      total_count += count_fillings(rows, cols, r + 1, mode);
      return;
    }
    if (c == cols.size()) return;
    for (int x = std::min({cap, left, cols[c]}); x >= 0; --x) {
      cols[c] -= x;
      self(self, c + 1, left - x);
      cols[c] += x;
    }
  };
  spread(spread, 0, rows[r]);
  return total_count;
}

}  // namespace

std::map<std::pair<Partition, Partition>, int> kostka_matrix(int n) {
  std::map<std::pair<Partition, Partition>, int> out;
  const auto parts = partitions_of(n);
  for (const auto& lambda : parts)
    for (const auto& mu : parts)
      out[{lambda, mu}] =
          static_cast<int>(enumerate_ribbon_tableaux(lambda, mu.parts(), 1).size());
  return out;
}

RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular transition matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= factor * m[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

BasisTables::BasisTables(int budget) : budget_(budget) {
  if (budget < 0) throw std::invalid_argument("degree budget must be non-negative");
  to_m_.assign(kBases, {});
  from_m_.assign(kBases, {});
  for (int n = 0; n <= budget; ++n) {
    partitions_.push_back(partitions_of(n));
    const auto& parts = partitions_.back();
    std::map<Partition, std::size_t> idx;
    for (std::size_t i = 0; i < parts.size(); ++i) idx[parts[i]] = i;
    index_.push_back(std::move(idx));

    const std::size_t size = parts.size();
    const auto kostka = kostka_matrix(n);
    for (int b = 0; b < kBases; ++b) {
      RationalMatrix m(size, std::vector<Rational>(size, Rational(0)));
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
          std::vector<int> cols = parts[j].parts();
          const auto& rows = parts[i].parts();
          switch (static_cast<Basis>(b)) {
            case Basis::monomial: m[i][j] = i == j ? 1 : 0; break;
            case Basis::complete: m[i][j] = count_fillings(rows, cols, 0, Fill::nonnegative); break;
            case Basis::elementary: m[i][j] = count_fillings(rows, cols, 0, Fill::zero_one); break;
            case Basis::power: m[i][j] = count_fillings(rows, cols, 0, Fill::whole_row); break;
            case Basis::schur: m[i][j] = kostka.at({parts[i], parts[j]}); break;
          }
        }
      from_m_[static_cast<std::size_t>(b)].push_back(invert(m));
      to_m_[static_cast<std::size_t>(b)].push_back(std::move(m));
    }
  }
}

void BasisTables::check(int n) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > budget_)
    throw std::out_of_range("degree " + std::to_string(n) + " exceeds the basis budget " +
                            std::to_string(budget_));
}

const std::vector<Partition>& BasisTables::partitions(int n) const {
  check(n);
  return partitions_[static_cast<std::size_t>(n)];
}

std::size_t BasisTables::index(const Partition& lambda) const {
  check(lambda.weight());
  return index_[static_cast<std::size_t>(lambda.weight())].at(lambda);
}

const RationalMatrix& BasisTables::to_monomial(Basis b, int n) const {
  check(n);
  return to_m_[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)];
}

const RationalMatrix& BasisTables::from_monomial(Basis b, int n) const {
  check(n);
  return from_m_[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)];
}

QSymFunction basis_element(Basis b, const Partition& lambda) {
  QSymFunction f{b, lambda.weight(), {}};
  f.terms.emplace(lambda, RatPolynomial(1));
  return f;
}

QSymFunction hl_monomial_expansion(const Partition& lambda) {
  return hl_monomial_expansion(lambda, HlRoute::inversion);
}

QSymFunction hl_monomial_expansion(const Partition& lambda, HlRoute route) {
  if (lambda.empty()) throw std::invalid_argument("Hall-Littlewood index must be nonempty");
  const int n = lambda.weight();
  const int l = lambda.length();
  PartitionTuple rows;
  for (int i = l; i >= 1; --i) rows.push_back(Partition{lambda.part(i)});
  const Partition big = scale(lambda, l);

  QSymFunction f{Basis::monomial, n, {}};
  for (const auto& mu : partitions_of(n)) {
    IntPolynomial c;
    switch (route) {
      case HlRoute::inversion: c = inversion_polynomial(rows, mu.parts()); break;
      case HlRoute::cospin: c = cospin_polynomial(big, mu.parts(), l); break;
      case HlRoute::fermionic: c = fermionic_polynomial(mu, lambda); break;
    }
    if (!c.is_zero()) f.terms.emplace(mu, RatPolynomial(c));
  }
  return f;
}

int eta(const Partition& lambda) {
  int s = 0;
  for (int i = 1; i <= lambda.length(); ++i) s += (i - 1) * lambda.part(i);
  return s;
}

QSymFunction hl_q_prime(const Partition& lambda) {
  auto f = hl_monomial_expansion(lambda);
  const int e = eta(lambda);
  for (auto& [mu, c] : f.terms) c = c.reversed(e);
  return f;
}

QSymFunction to_schur(const QSymFunction& f, const BasisTables& tables) {
  return basis_convert(f, Basis::schur, tables);
}

RootSymFunction specialize(const QSymFunction& f, int k) {
  RootSymFunction out{f.basis, f.degree, {}};
  for (const auto& [lambda, c] : f.terms) {
    Cyclotomic<Rational> v(k, c);
    if (!v.is_zero()) out.terms.emplace(lambda, std::move(v));
  }
  return out;
}

namespace {

std::vector<TermCheck> compare_terms(const RootSymFunction& expected, const RootSymFunction& actual,
                                     int k, const std::vector<Partition>& index) {
  std::vector<TermCheck> out;
  const Cyclotomic<Rational> zero(k);
  for (const auto& mu : index) {
    const auto e = expected.coefficient(mu, zero);
    const auto a = actual.coefficient(mu, zero);
    out.push_back({mu, to_string(e), to_string(a), e == a});
  }
  return out;
}

bool all_ok(const std::vector<TermCheck>& terms) {
  return std::all_of(terms.begin(), terms.end(), [](const TermCheck& t) { return t.ok; });
}

}  // namespace

TheoremReport verify_rectangular_theorem(int n, int k, const BasisTables& tables) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  TheoremReport report;
  report.n = n;
  report.k = k;
  const Partition rect(std::vector<int>(static_cast<std::size_t>(k), n));
  const auto& index = tables.partitions(n * k);

  const auto rhs_h = plethysm_pk(basis_element(Basis::complete, Partition{n}), k, tables);
  const auto rhs = specialize(basis_convert(rhs_h, Basis::monomial, tables), k);

  const auto tilde = specialize(hl_monomial_expansion(rect), k);
  report.terms = compare_terms(rhs, tilde, k, index);
  report.tilde_ok = all_ok(report.terms);

  const int sign = ((k - 1) * n) % 2 == 0 ? 1 : -1;
  RootSymFunction signed_rhs{rhs.basis, rhs.degree, {}};
  for (const auto& [mu, c] : rhs.terms) signed_rhs.terms.emplace(mu, c * Rational(sign));
  report.sign_ok = all_ok(compare_terms(signed_rhs, specialize(hl_q_prime(rect), k), k, index));

  report.eta_sign_ok = Cyclotomic<Rational>::root_power(k, eta(rect)) ==
                       Cyclotomic<Rational>(k, RatPolynomial(sign));

  report.dichotomy_ok = true;
  const Cyclotomic<Rational> zero(k);
  for (const auto& mu : index) {
    const bool divisible = std::all_of(mu.parts().begin(), mu.parts().end(),
                                       [&](int x) { return x % k == 0; });
    const Cyclotomic<Rational> want(k, RatPolynomial(divisible ? 1 : 0));
    if (!(tilde.coefficient(mu, zero) == want)) report.dichotomy_ok = false;
  }
  return report;
}

ColumnReport verify_column_case(int n, int k, const BasisTables& tables) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  ColumnReport report;
  report.n = n;
  report.k = k;
  const Partition rect(std::vector<int>(static_cast<std::size_t>(n * k), k));
  const auto& index = tables.partitions(n * k);

  QSymFunction f{Basis::monomial, n * k, {}};
  for (const auto& mu : index) {
    const auto c = cospin_polynomial(rect, mu.parts(), k);
    if (!c.is_zero()) f.terms.emplace(mu, RatPolynomial(c));
  }
  const auto rhs_e = plethysm_pk(basis_element(Basis::elementary, Partition{n}), k, tables);
  const auto rhs = specialize(basis_convert(rhs_e, Basis::monomial, tables), k);
  report.terms = compare_terms(rhs, specialize(f, k), k, index);
  report.ok = all_ok(report.terms);
  return report;
}

namespace {

template <class C>
std::string render(const SymFunction<C>& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : f.terms) {
    std::string coeff = to_string(c);
    std::string term;
    if (coeff == "1") {
      term.clear();
    } else if (coeff == "-1") {
      term = "-";
    } else if (coeff.find_first_of("+-", 1) != std::string::npos) {
      term = "(" + coeff + ")*";
    } else {
      term = coeff + "*";
    }
    term += basis_tag(f.basis);
    term += to_string(lambda);
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace

std::string to_string(const QSymFunction& f) { return render(f); }
std::string to_string(const RootSymFunction& f) { return render(f); }

}  // namespace hlroots
