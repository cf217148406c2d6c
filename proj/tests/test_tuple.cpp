#include <doctest.h>

#include <functional>
#include <set>
#include <stdexcept>

#include "hlroots/json_io.hpp"
#include "hlroots/tuple_tableau.hpp"
#include "oracles.hpp"

using namespace hlroots;

namespace {

std::vector<std::vector<oracle::Rows>> as_rows(const std::vector<TupleTableau>& ts) {
  std::vector<std::vector<oracle::Rows>> out;
  for (const auto& t : ts) {
    std::vector<oracle::Rows> comps;
    for (const auto& c : t.components()) comps.push_back(c.rows());
    out.push_back(comps);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Tuple shapes with exactly k components and total size at most n.
std::vector<PartitionTuple> tuple_shapes(int n, int k) {
  std::vector<PartitionTuple> out;
  std::function<void(PartitionTuple&, int)> rec = [&](PartitionTuple& cur, int left) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int m = 0; m <= left; ++m)
      for (const auto& p : partitions_of(m)) {
        cur.push_back(p);
        rec(cur, left - m);
        cur.pop_back();
      }
  };
  PartitionTuple cur;
  rec(cur, n);
  return out;
}

int size_of(const PartitionTuple& s) {
  int n = 0;
  for (const auto& p : s) n += p.weight();
  return n;
}

PartitionTuple rows_of(std::vector<int> lengths) {
  PartitionTuple out;
  for (int x : lengths) out.push_back(Partition{x});
  return out;
}

}  // namespace

TEST_CASE("young tableau validation") {
  CHECK_NOTHROW(YoungTableau({{1, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(YoungTableau({{1, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungTableau({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungTableau({{1}, {2, 3}}), std::invalid_argument);
  const YoungTableau t({{1, 1, 2}, {2, 3}});
  CHECK(t.shape() == Partition{3, 2});
  CHECK(t.label(Cell{2, 2}) == 3);
  CHECK(t.label(Cell{3, 1}) == 0);
}

TEST_CASE("tuple enumeration agrees with brute-force fillings") {
  for (int k = 1; k <= 3; ++k)
    for (const auto& shape : tuple_shapes(6, k)) {
      for (const auto& mu : partitions_of(size_of(shape))) {
        const auto mine = enumerate_tuples(shape, mu.parts());
        auto want = oracle::tuple_fillings(shape, mu.parts());
        std::sort(want.begin(), want.end());
        CHECK(as_rows(mine) == want);
      }
    }
  // a composition weight
  const auto mine = enumerate_tuples({{2, 1}, {1}}, {0, 2, 2});
  auto want = oracle::tuple_fillings({{2, 1}, {1}}, {0, 2, 2});
  std::sort(want.begin(), want.end());
  CHECK(as_rows(mine) == want);
  CHECK_THROWS_AS(enumerate_tuples({{2}}, {1}), std::invalid_argument);
}

TEST_CASE("inversions agree with the definition") {
  for (int k = 2; k <= 3; ++k)
    for (const auto& shape : tuple_shapes(6, k))
      for (const auto& mu : partitions_of(size_of(shape))) {
        IntPolynomial g;
        for (const auto& t : enumerate_tuples(shape, mu.parts())) {
          std::vector<oracle::Rows> comps;
          for (const auto& c : t.components()) comps.push_back(c.rows());
          const int inv = inversions(t);
          CHECK(inv == oracle::inversions(comps));
          g.add_term(BigInt(1), inv);
        }
        CHECK(g == inversion_polynomial(shape, mu.parts()));
      }
}

TEST_CASE("golden inversion polynomial") {
  CHECK(to_string(inversion_polynomial({{2}, {3, 2}, {2}}, {3, 3, 2, 1})) ==
        "3*q^5+17*q^4+33*q^3+31*q^2+18*q+5");
}

TEST_CASE("tuple accessors") {
  const auto t = tuple_from_json(Json::parse("[[1,4],[1,2],[1,2,3,3]]"));
  CHECK(t.k() == 3);
  CHECK(t.is_single_row());
  CHECK(t.shape() == PartitionTuple{{2}, {2}, {4}});
  CHECK(t.weight() == Composition{3, 2, 2, 1});
  CHECK(t.label(3, Cell{1, 4}) == 3);
  CHECK(t.label(3, Cell{2, 1}) == 0);
  CHECK(t.cells().size() == 8);
  CHECK(to_string(t) == "([1,4], [1,2], [1,2,3,3])");
  CHECK(to_string(diagonal_vector(t)) == "({1,1,1},{2,2,4},{3},{3})");
}

TEST_CASE("diagonal classes partition the tableaux") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n * k <= 8; ++n) {
      const auto shape = rows_of(std::vector<int>(static_cast<std::size_t>(k), n));
      for (const auto& mu : partitions_of(n * k)) {
        const auto classes = diagonal_classes(shape, mu.parts());
        const auto all = enumerate_tuples(shape, mu.parts());
        std::set<TupleTableau> seen;
        IntPolynomial sum;
        bool singleton = false;
        for (const auto& cls : classes) {
          for (const auto& m : cls.members) {
            CHECK(diagonal_vector(m) == cls.vector);
            CHECK(seen.insert(m).second);
          }
          const auto restricted = restricted_inversion_polynomial(cls);
          sum += restricted;
          if (cls.members.size() == 1) {
            CHECK_FALSE(singleton);
            singleton = true;
            CHECK(restricted == IntPolynomial(1));
          } else {
            CHECK(eval_at_primitive_root(restricted, k).is_zero());
          }
        }
        CHECK(seen.size() == all.size());
        const auto full = inversion_polynomial(shape, mu.parts());
        CHECK(sum == full);
        bool divisible = true;
        for (int x : mu.parts()) divisible = divisible && x % k == 0;
        CHECK(singleton == divisible);
        const auto at_root = eval_at_primitive_root(full, k);
        CHECK(at_root == CyclotomicValue(k, IntPolynomial(divisible ? 1 : 0)));
      }
    }
}

TEST_CASE("general single-row classes sum to the full polynomial") {
  for (const auto& lengths : std::vector<std::vector<int>>{{1, 2, 3}, {2, 2, 4}, {1, 1, 2, 3}}) {
    const auto shape = rows_of(lengths);
    for (const auto& mu : partitions_of(size_of(shape))) {
      IntPolynomial sum;
      for (const auto& cls : diagonal_classes(shape, mu.parts()))
        sum += restricted_inversion_polynomial(cls);
      CHECK(sum == inversion_polynomial(shape, mu.parts()));
    }
  }
  CHECK_THROWS_AS(diagonal_classes({{2, 1}}, {2, 1}), std::invalid_argument);
}

TEST_CASE("content offsets shift diagonals") {
  const TupleTableau t({YoungTableau({{1, 2}}), YoungTableau(std::vector<std::vector<int>>{{1}})}, {0, -1});
  const auto d = diagonal_vector(t);
  CHECK(d.first == -1);
  CHECK(d.entries.size() == 3);
}
