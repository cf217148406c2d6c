#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"
#include "hlroots/tuple_tableau.hpp"

namespace hlroots {

/// A (lambda, mu)-configuration: a chain nu(1) <= ... <= nu(p) = mu' with
/// |nu(a)| = lambda_1 + ... + lambda_a for a < p, p = l(lambda).
class Configuration {
 public:
  /// Throws std::invalid_argument unless the chain satisfies both conditions.
  Configuration(PartitionTuple shapes, Partition lambda, Partition mu);

  [[nodiscard]] const PartitionTuple& shapes() const noexcept { return shapes_; }
  /// nu(a), 1-based.
  [[nodiscard]] const Partition& shape(int a) const {
    return shapes_.at(static_cast<std::size_t>(a - 1));
  }
  [[nodiscard]] const Partition& lambda() const noexcept { return lambda_; }
  [[nodiscard]] const Partition& mu() const noexcept { return mu_; }
  [[nodiscard]] int p() const noexcept { return lambda_.length(); }
  /// Largest column height considered, mu_1.
  [[nodiscard]] int heights() const noexcept { return mu_.part(1); }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  PartitionTuple shapes_;
  Partition lambda_;
  Partition mu_;
};

/// vacancy p_i(a) = nu(a+1)_i - nu(a)_i and multiplicity m_i(a) =
/// nu(a)_i - nu(a)_{i+1} for 1 <= a < p and 1 <= i <= mu_1.
struct VacancyData {
  std::vector<std::vector<int>> vacancy;
  std::vector<std::vector<int>> multiplicity;

  [[nodiscard]] int p(int a, int i) const {
    return vacancy.at(static_cast<std::size_t>(a - 1)).at(static_cast<std::size_t>(i - 1));
  }
  [[nodiscard]] int m(int a, int i) const {
    return multiplicity.at(static_cast<std::size_t>(a - 1)).at(static_cast<std::size_t>(i - 1));
  }
};

VacancyData vacancy(const Configuration& config);

/// Riggings indexed [a-1][i-1]: the m_i(a) quantum numbers attached to the
/// columns of height i of nu(a), each in [0, p_i(a)], kept in decreasing
/// order.
using Riggings = std::vector<std::vector<std::vector<int>>>;

class RiggedConfiguration {
 public:
  /// Sorts each rigging and throws std::invalid_argument when a rigging has
  /// the wrong size or a quantum number leaves [0, p_i(a)].
  RiggedConfiguration(Configuration config, Riggings riggings);

  [[nodiscard]] const Configuration& config() const noexcept { return config_; }
  [[nodiscard]] const Riggings& riggings() const noexcept { return riggings_; }

  friend auto operator<=>(const RiggedConfiguration&, const RiggedConfiguration&) = default;

 private:
  Configuration config_;
  Riggings riggings_;
};

/// All (lambda, mu)-configurations; std::invalid_argument if |lambda| != |mu|.
std::vector<Configuration> enumerate_configurations(const Partition& lambda, const Partition& mu);

/// sum over a < p, i <= mu_1 of nu(a)_{i+1} (nu(a+1)_i - nu(a)_i).
int alpha(const Configuration& config);

std::vector<RiggedConfiguration> enumerate_riggings(const Configuration& config);

/// alpha plus the sum of all quantum numbers.
int cocharge(const RiggedConfiguration& rc);

/// q^alpha times the product of q_binomial(m_i(a), p_i(a)).
IntPolynomial fermionic_restricted(const Configuration& config);
/// Sum of fermionic_restricted over all (lambda, mu)-configurations.
IntPolynomial fermionic_polynomial(const Partition& lambda, const Partition& mu);

/// Component sizes of a single-row tuple in decreasing order.
Partition row_lengths(const TupleTableau& t);

/// Rigged configuration of a tuple of single rows of weakly increasing
/// lengths with partition weight mu. The result lives in
/// RC(mu, row_lengths(t)) and has cocharge equal to inversions(t).
/// Throws std::invalid_argument for other tuples.
RiggedConfiguration theta(const TupleTableau& t);

using IntMatrix = std::vector<std::vector<int>>;

/// Rows are diagonals (from the diagonal vector's first content), columns
/// labels 1..l(mu); entry = cells with that label on that diagonal.
IntMatrix diagonal_matrix(const TupleTableau& t);
IntMatrix diagonal_matrix(const DiagonalVector& d);
/// Row-wise prefix sums.
IntMatrix a_e(const IntMatrix& m);
/// Column j of a_e(diagonal_matrix(d)), sorted, as nu(j).
PartitionTuple shape_from_diagonal(const DiagonalVector& d);

struct FiberReport {
  std::size_t class_size = 0;
  std::size_t fiber_size = 0;
  bool images_match = false;
  IntPolynomial inversion;
  IntPolynomial fermionic;

  [[nodiscard]] bool ok() const { return images_match && inversion == fermionic; }
};

/// Compares theta of the diagonal class of d with the full rigging set of
/// the configuration shape_from_diagonal(d), and the two class polynomials.
FiberReport fiber_report(const PartitionTuple& shape, const Partition& mu,
                         const DiagonalVector& d);
bool fiber_check(const PartitionTuple& shape, const Partition& mu, const DiagonalVector& d);

/// For k rows of length n and mu = k*s: the unique one-element diagonal
/// class maps to the chain of rectangles (k^{s_1+...+s_a}).
bool rectangular_shape_check(int n, int k, const Partition& mu);

std::string to_string(const RiggedConfiguration& rc);
std::string to_string(const IntMatrix& m);

}  // namespace hlroots
