#include "hlroots/rigged_config.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlroots {

Configuration::Configuration(PartitionTuple shapes, Partition lambda, Partition mu)
    : shapes_(std::move(shapes)), lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (static_cast<int>(shapes_.size()) != p())
    throw std::invalid_argument("configuration needs l(lambda) shapes");
  if (shapes_.empty()) return;
  if (shapes_.back() != conjugate(mu_))
    throw std::invalid_argument("last configuration shape must be the conjugate of mu");
  int partial = 0;
  for (int a = 1; a <= p(); ++a) {
    partial += lambda_.part(a);
    if (a < p() && shape(a).weight() != partial)
      throw std::invalid_argument("configuration shape " + std::to_string(a) +
                                  " has the wrong weight");
    if (a < p() && !shape(a + 1).contains(shape(a)))
      throw std::invalid_argument("configuration shapes must increase");
  }
}

VacancyData vacancy(const Configuration& config) {
  VacancyData out;
  for (int a = 1; a < config.p(); ++a) {
    std::vector<int> vac;
    std::vector<int> mult;
    for (int i = 1; i <= config.heights(); ++i) {
      vac.push_back(config.shape(a + 1).part(i) - config.shape(a).part(i));
      mult.push_back(config.shape(a).part(i) - config.shape(a).part(i + 1));
    }
    out.vacancy.push_back(std::move(vac));
    out.multiplicity.push_back(std::move(mult));
  }
  return out;
}

RiggedConfiguration::RiggedConfiguration(Configuration config, Riggings riggings)
    : config_(std::move(config)), riggings_(std::move(riggings)) {
  const auto vac = vacancy(config_);
  const int p = config_.p();
  if (static_cast<int>(riggings_.size()) != std::max(p - 1, 0))
    throw std::invalid_argument("one rigging family per a < p");
  for (int a = 1; a < p; ++a) {
    auto& family = riggings_[static_cast<std::size_t>(a - 1)];
    if (static_cast<int>(family.size()) != config_.heights())
      throw std::invalid_argument("one rigging per column height");
    for (int i = 1; i <= config_.heights(); ++i) {
      auto& rig = family[static_cast<std::size_t>(i - 1)];
      if (static_cast<int>(rig.size()) != vac.m(a, i))
        throw std::invalid_argument("rigging size differs from the column multiplicity");
      for (int x : rig)
        if (x < 0 || x > vac.p(a, i))
          throw std::invalid_argument("quantum number outside [0, vacancy]");
      std::sort(rig.begin(), rig.end(), std::greater<>());
    }
  }
}

std::vector<Configuration> enumerate_configurations(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("configurations need |lambda| = |mu|");
  std::vector<Configuration> out;
  const int p = lambda.length();
  if (p == 0) {
    out.emplace_back(PartitionTuple{}, lambda, mu);
    return out;
  }
  std::vector<int> partial(static_cast<std::size_t>(p) + 1, 0);
  for (int a = 1; a <= p; ++a) partial[static_cast<std::size_t>(a)] = partial[static_cast<std::size_t>(a - 1)] + lambda.part(a);
  PartitionTuple chain(static_cast<std::size_t>(p));
  chain.back() = conjugate(mu);
  std::function<void(int)> rec = [&](int a) {
    if (a == 0) {
      out.emplace_back(chain, lambda, mu);
      return;
    }
    for (auto& nu : subpartitions(chain[static_cast<std::size_t>(a)], partial[static_cast<std::size_t>(a)])) {
      chain[static_cast<std::size_t>(a - 1)] = std::move(nu);
      rec(a - 1);
    }
  };
  rec(p - 1);
  return out;
}

int alpha(const Configuration& config) {
  int s = 0;
  for (int a = 1; a < config.p(); ++a)
    for (int i = 1; i <= config.heights(); ++i)
      s += config.shape(a).part(i + 1) * (config.shape(a + 1).part(i) - config.shape(a).part(i));
  return s;
}

namespace {

// Decreasing sequences of length `size` with entries in [0, bound].
std::vector<std::vector<int>> boxed_partitions(int size, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = top; x >= 0; --x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(bound);
  return out;
}

}  // namespace

std::vector<RiggedConfiguration> enumerate_riggings(const Configuration& config) {
  const auto vac = vacancy(config);
  const int p = config.p();
  const int h = config.heights();
  std::vector<RiggedConfiguration> out;
  Riggings current(static_cast<std::size_t>(std::max(p - 1, 0)),
                   std::vector<std::vector<int>>(static_cast<std::size_t>(h)));
  std::function<void(int, int)> rec = [&](int a, int i) {
    if (a >= p) {
      out.emplace_back(config, current);
      return;
    }
    if (i > h) {
      rec(a + 1, 1);
      return;
    }
    for (auto& choice : boxed_partitions(vac.m(a, i), vac.p(a, i))) {
      current[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)] = std::move(choice);
      rec(a, i + 1);
    }
  };
  rec(1, 1);
  return out;
}

int cocharge(const RiggedConfiguration& rc) {
  int s = alpha(rc.config());
  for (const auto& family : rc.riggings())
    for (const auto& rig : family)
      for (int x : rig) s += x;
  return s;
}

IntPolynomial fermionic_restricted(const Configuration& config) {
  const auto vac = vacancy(config);
  IntPolynomial out = IntPolynomial::monomial(1, alpha(config));
  for (int a = 1; a < config.p(); ++a)
    for (int i = 1; i <= config.heights(); ++i) {
      const int m = vac.m(a, i);
      const int v = vac.p(a, i);
      if (m < 0 || v < 0) throw std::domain_error("negative vacancy: invalid configuration");
      out *= q_binomial(m, v);
    }
  return out;
}

IntPolynomial fermionic_polynomial(const Partition& lambda, const Partition& mu) {
  IntPolynomial out;
  for (const auto& config : enumerate_configurations(lambda, mu)) out += fermionic_restricted(config);
  return out;
}

Partition row_lengths(const TupleTableau& t) {
  std::vector<int> sizes;
  for (const auto& comp : t.components()) sizes.push_back(comp.shape().weight());
  return Partition::from_unsorted(std::move(sizes));
}

RiggedConfiguration theta(const TupleTableau& t) {
  if (!t.is_single_row()) throw std::invalid_argument("theta needs single-row components");
  int previous = 0;
  for (const auto& comp : t.components()) {
    const int len = comp.shape().weight();
    if (len < previous) throw std::invalid_argument("theta needs weakly increasing row lengths");
    previous = len;
  }
  const Composition w = t.weight();
  if (!is_partition(w)) throw std::invalid_argument("theta needs a partition weight");
  const Partition mu(w);
  const Partition delta = row_lengths(t);
  const int p = mu.length();
  const int h = delta.part(1);

  // nu[a][i]: part i+1 of nu(a+1); rig[a][i]: numbers at height i+1
  std::vector<std::vector<int>> nu(static_cast<std::size_t>(p), std::vector<int>(static_cast<std::size_t>(h) + 1, 0));
  std::vector<std::vector<std::vector<int>>> rig(
      static_cast<std::size_t>(std::max(p - 1, 0)),
      std::vector<std::vector<int>>(static_cast<std::size_t>(h) + 1));
  auto vac = [&](int a, int height) {
    return nu[static_cast<std::size_t>(a)][static_cast<std::size_t>(height - 1)] -
           nu[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(height - 1)];
  };

  for (int comp = t.k(); comp >= 1; --comp) {
    const auto& rows = t.components()[static_cast<std::size_t>(comp - 1)].rows();
    if (rows.empty()) continue;
    const auto& row = rows.front();
    for (int j = 1; j <= static_cast<int>(row.size()); ++j) {
      const int x = row[static_cast<std::size_t>(j - 1)];
      for (int a = x; a <= p; ++a) ++nu[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(j - 1)];
      for (int a = x; a < p; ++a) {
        auto& family = rig[static_cast<std::size_t>(a - 1)];
        if (j > 1) {
          auto& below = family[static_cast<std::size_t>(j - 2)];
          const auto top = std::max_element(below.begin(), below.end());
          if (top == below.end() || *top != vac(a, j - 1))
            throw std::logic_error("no singular quantum number to remove");
          below.erase(top);
        }
        family[static_cast<std::size_t>(j - 1)].push_back(vac(a, j));
      }
    }
  }

  PartitionTuple shapes;
  for (auto& parts : nu) shapes.emplace_back(std::vector<int>(parts.begin(), parts.end() - 1));
  Configuration config(std::move(shapes), mu, delta);
  Riggings riggings(static_cast<std::size_t>(std::max(p - 1, 0)));
  for (int a = 1; a < p; ++a) {
    auto& family = riggings[static_cast<std::size_t>(a - 1)];
    for (int i = 1; i <= h; ++i) {
      std::vector<int> numbers;
      for (int x : rig[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)])
        numbers.push_back(vac(a, i) - x);
      family.push_back(std::move(numbers));
    }
  }
  return RiggedConfiguration(std::move(config), std::move(riggings));
}

IntMatrix diagonal_matrix(const DiagonalVector& d) {
  int labels = 0;
  for (const auto& entry : d.entries)
    for (int x : entry) labels = std::max(labels, x);
  IntMatrix m(d.entries.size(), std::vector<int>(static_cast<std::size_t>(labels), 0));
  for (std::size_t r = 0; r < d.entries.size(); ++r)
    for (int x : d.entries[r]) ++m[r][static_cast<std::size_t>(x - 1)];
  return m;
}

IntMatrix diagonal_matrix(const TupleTableau& t) { return diagonal_matrix(diagonal_vector(t)); }

IntMatrix a_e(const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& row : out)
    for (std::size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
  return out;
}

PartitionTuple shape_from_diagonal(const DiagonalVector& d) {
  const IntMatrix n = a_e(diagonal_matrix(d));
  const std::size_t cols = n.empty() ? 0 : n.front().size();
  PartitionTuple out;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<int> column;
    for (const auto& row : n) column.push_back(row[j]);
    out.push_back(Partition::from_unsorted(std::move(column)));
  }
  return out;
}

FiberReport fiber_report(const PartitionTuple& shape, const Partition& mu, const DiagonalVector& d) {
  FiberReport report;
  std::vector<TupleTableau> members;
  for_each_tuple(shape, mu.parts(), [&](const TupleTableau& t) {
    if (diagonal_vector(t) == d) members.push_back(t);
  });
  report.class_size = members.size();
  if (members.empty()) return report;
  report.inversion = restricted_inversion_polynomial(DiagonalClass{d, members});

  const Partition delta = row_lengths(members.front());
  const Configuration config(shape_from_diagonal(d), mu, delta);
  report.fermionic = fermionic_restricted(config);
  const auto fiber = enumerate_riggings(config);
  report.fiber_size = fiber.size();

  std::set<RiggedConfiguration> images;
  for (const auto& t : members) images.insert(theta(t));
  const std::set<RiggedConfiguration> expected(fiber.begin(), fiber.end());
  report.images_match = images.size() == members.size() && images == expected;
  return report;
}

bool fiber_check(const PartitionTuple& shape, const Partition& mu, const DiagonalVector& d) {
  return fiber_report(shape, mu, d).ok();
}

bool rectangular_shape_check(int n, int k, const Partition& mu) {
  if (n < 1 || k < 1) throw std::invalid_argument("n and k must be positive");
  if (mu.weight() != n * k) throw std::invalid_argument("mu must have weight n*k");
  for (int x : mu.parts())
    if (x % k != 0) throw std::invalid_argument("every part of mu must be divisible by k");
  const PartitionTuple shape(static_cast<std::size_t>(k), Partition{n});
  const TupleTableau* single = nullptr;
  const auto classes = diagonal_classes(shape, mu.parts());
  for (const auto& cls : classes) {
    if (cls.members.size() != 1) continue;
    if (single != nullptr) return false;
    single = &cls.members.front();
  }
  if (single == nullptr) return false;
  const auto rc = theta(*single);
  int partial = 0;
  for (int a = 1; a <= mu.length(); ++a) {
    partial += mu.part(a) / k;
    if (rc.config().shape(a) != Partition(std::vector<int>(static_cast<std::size_t>(partial), k)))
      return false;
  }
  return cocharge(rc) == 0;
}

std::string to_string(const RiggedConfiguration& rc) {
  const auto& config = rc.config();
  const auto vac = vacancy(config);
  std::ostringstream os;
  for (int a = 1; a <= config.p(); ++a) {
    os << "nu(" << a << ") = " << to_string(config.shape(a)) << '\n';
    if (a == config.p()) break;
    for (int i = 1; i <= config.heights(); ++i) {
      if (vac.m(a, i) == 0) continue;
      os << "  height " << i << ": riggings";
      for (int x : rc.riggings()[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(i - 1)])
        os << ' ' << x;
      os << "  vacancy " << vac.p(a, i) << '\n';
    }
  }
  os << "cocharge " << cocharge(rc) << '\n';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j > 0 ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

}  // namespace hlroots
