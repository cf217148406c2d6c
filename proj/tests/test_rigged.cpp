#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "hlroots/json_io.hpp"
#include "hlroots/rigged_config.hpp"

using namespace hlroots;

namespace {

// Rows of R in weakly increasing order.
PartitionTuple increasing_rows(const Partition& r) {
  PartitionTuple out;
  for (int i = r.length(); i >= 1; --i) out.push_back(Partition{r.part(i)});
  return out;
}

std::vector<RiggedConfiguration> all_riggings(const Partition& weight, const Partition& rows) {
  std::vector<RiggedConfiguration> out;
  for (const auto& c : enumerate_configurations(weight, rows))
    for (auto& rc : enumerate_riggings(c)) out.push_back(std::move(rc));
  return out;
}

const Configuration& rigged_context() {
  static const Configuration c({{2, 1}, {3, 1}, {3, 2}, {3, 3, 1}}, Partition{3, 1, 1, 1},
                               Partition{3, 2, 2});
  return c;
}

}  // namespace

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration({{2, 1}, {3, 1}, {3, 2}, {3, 3}}, Partition{3, 1, 1, 1},
                                Partition{3, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Configuration({{2, 2}, {3, 1}, {3, 2}, {3, 3, 1}}, Partition{3, 1, 1, 1},
                                Partition{3, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Configuration({{2, 1}, {2}, {3, 2}, {3, 3, 1}}, Partition{3, 1, 1, 1},
                                Partition{3, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_configurations(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("rigged example") {
  const auto& c = rigged_context();
  CHECK(c.p() == 4);
  CHECK(alpha(c) == 1);
  const auto vac = vacancy(c);
  CHECK(vac.p(1, 1) == 1);
  CHECK(vac.p(1, 2) == 0);
  CHECK(vac.m(1, 1) == 1);
  CHECK(vac.m(1, 2) == 1);
  const RiggedConfiguration rc(c, {{{1}, {0}, {}}, {{0, 0}, {1}, {}}, {{0}, {0, 1}, {}}});
  CHECK(rc.riggings()[2][1] == std::vector<int>{1, 0});
  CHECK(cocharge(rc) == 4);
  CHECK_THROWS_AS(RiggedConfiguration(c, {{{2}, {0}, {}}, {{0, 0}, {1}, {}}, {{0}, {1, 0}, {}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RiggedConfiguration(c, {{{1}, {}, {}}, {{0, 0}, {1}, {}}, {{0}, {1, 0}, {}}}),
                  std::invalid_argument);
  CHECK(to_string(rc).find("cocharge 4") != std::string::npos);
}

TEST_CASE("vacancies are non-negative and riggings match the fermionic formula") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& weight : partitions_of(n))
      for (const auto& rows : partitions_of(n)) {
        IntPolynomial g;
        for (const auto& c : enumerate_configurations(weight, rows)) {
          const auto vac = vacancy(c);
          for (const auto& level : vac.vacancy)
            for (int x : level) CHECK(x >= 0);
          IntPolynomial restricted;
          for (const auto& rc : enumerate_riggings(c)) {
            restricted.add_term(BigInt(1), cocharge(rc));
            g.add_term(BigInt(1), cocharge(rc));
          }
          CHECK(restricted == fermionic_restricted(c));
        }
        CHECK(g == fermionic_polynomial(weight, rows));
      }
}

TEST_CASE("fermionic formula equals the inversion polynomial") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& weight : partitions_of(n))
      for (const auto& rows : partitions_of(n))
        CHECK(fermionic_polynomial(weight, rows) ==
              inversion_polynomial(increasing_rows(rows), weight.parts()));
}

TEST_CASE("theta is a cocharge-preserving bijection") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& weight : partitions_of(n))
      for (const auto& rows : partitions_of(n)) {
        const auto tuples = enumerate_tuples(increasing_rows(rows), weight.parts());
        std::set<RiggedConfiguration> images;
        for (const auto& t : tuples) {
          const auto rc = theta(t);
          CHECK(cocharge(rc) == inversions(t));
          CHECK(rc.config().lambda() == weight);
          CHECK(rc.config().mu() == rows);
          images.insert(rc);
        }
        CHECK(images.size() == tuples.size());
        const auto all = all_riggings(weight, rows);
        CHECK(std::set<RiggedConfiguration>(all.begin(), all.end()) == images);
      }
}

TEST_CASE("theta shapes are determined by the diagonal vector") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& weight : partitions_of(n))
      for (const auto& rows : partitions_of(n)) {
        std::map<PartitionTuple, DiagonalVector> seen;
        for (const auto& cls : diagonal_classes(increasing_rows(rows), weight.parts())) {
          const auto shape = shape_from_diagonal(cls.vector);
          for (const auto& m : cls.members) CHECK(theta(m).config().shapes() == shape);
          const auto [it, fresh] = seen.emplace(shape, cls.vector);
          CHECK(fresh);
        }
      }
}

TEST_CASE("class fibers on copies of one row") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n * k <= 8; ++n) {
      const PartitionTuple shape(static_cast<std::size_t>(k), Partition{n});
      for (const auto& mu : partitions_of(n * k))
        for (const auto& cls : diagonal_classes(shape, mu.parts())) {
          const auto r = fiber_report(shape, mu, cls.vector);
          CHECK(r.ok());
          CHECK(r.class_size == cls.members.size());
          CHECK(r.fiber_size == cls.members.size());
          if (cls.members.size() >= 2) CHECK(eval_at_primitive_root(r.fermionic, k).is_zero());
        }
    }
}

TEST_CASE("singleton classes map to rectangles") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n * k <= 8; ++n)
      for (const auto& s : partitions_of(n)) CHECK(rectangular_shape_check(n, k, scale(s, k)));
  CHECK_THROWS_AS(rectangular_shape_check(2, 2, Partition{3, 1}), std::invalid_argument);
}

TEST_CASE("diagonal recoding example") {
  const auto t = tuple_from_json(Json::parse("[[1,4],[1,2],[1,2,3,3]]"));
  const auto m = diagonal_matrix(t);
  CHECK(m == IntMatrix{{3, 0, 0, 0}, {0, 2, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 0}});
  CHECK(a_e(m) == IntMatrix{{3, 3, 3, 3}, {0, 2, 2, 3}, {0, 0, 1, 1}, {0, 0, 1, 1}});
  CHECK(diagonal_matrix(diagonal_vector(t)) == m);
  CHECK(to_string(m) == "3 0 0 0\n0 2 0 1\n0 0 1 0\n0 0 1 0\n");
  const auto rc = theta(t);
  CHECK(to_string(rc.config().shapes()) == "((3),(3,2),(3,2,1,1),(3,3,1,1))");
  CHECK(shape_from_diagonal(diagonal_vector(t)) == rc.config().shapes());
  CHECK(cocharge(rc) == inversions(t));
  CHECK(cocharge(rc) == 2);
  CHECK(row_lengths(t) == Partition{4, 2, 2});
}

TEST_CASE("classes of ((2),(2),(4)) with weight (3,2,2,1)") {
  const PartitionTuple shape{{2}, {2}, {4}};
  const Partition mu{3, 2, 2, 1};
  const auto classes = diagonal_classes(shape, mu.parts());
  const auto t = tuple_from_json(Json::parse("[[1,4],[1,2],[1,2,3,3]]"));
  bool found_big = false;
  for (const auto& cls : classes) {
    const auto r = fiber_report(shape, mu, cls.vector);
    CHECK(r.ok());
    if (cls.members.size() == 12) {
      found_big = true;
      CHECK(to_string(r.fermionic) == "q^5+3*q^4+4*q^3+3*q^2+q");
      CHECK(to_string(shape_from_diagonal(cls.vector)) == "((2,1),(3,2),(3,3,1),(3,3,1,1))");
    }
    if (cls.vector == diagonal_vector(t)) {
      CHECK(cls.members.size() == 2);
      CHECK(to_string(r.inversion) == "q^2+q");
    }
  }
  CHECK(found_big);
  CHECK(fermionic_polynomial(mu, Partition{4, 2, 2}) == inversion_polynomial(shape, mu.parts()));
}

TEST_CASE("theta rejects other tuples") {
  const TupleTableau bad({YoungTableau({{1, 1}, {2}})});
  CHECK_THROWS_AS(theta(bad), std::invalid_argument);
  const TupleTableau decreasing({YoungTableau({{1, 1}}), YoungTableau(std::vector<std::vector<int>>{{2}})});
  CHECK_THROWS_AS(theta(decreasing), std::invalid_argument);
}
