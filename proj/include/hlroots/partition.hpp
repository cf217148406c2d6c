#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hlroots {

/// A cell of a Young diagram, English convention: row 1 is the top (longest)
/// row, columns grow to the right. Both coordinates are 1-based.
struct Cell {
  int row = 1;
  int col = 1;

  /// Content of the cell, col - row.
  [[nodiscard]] constexpr int diag() const noexcept { return col - row; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition: strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are dropped. Throws std::invalid_argument on negative
  /// or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts the (non-negative) entries into a partition.
  static Partition from_unsorted(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept {
    return parts_;
  }
  [[nodiscard]] int length() const noexcept {
    return static_cast<int>(parts_.size());
  }
  [[nodiscard]] int weight() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// i-th part, 1-based; 0 for i > length().
  [[nodiscard]] int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)]
                                     : 0;
  }

  [[nodiscard]] bool contains(const Partition& inner) const noexcept;
  [[nodiscard]] bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
  }

  /// Cells in row-major order.
  [[nodiscard]] std::vector<Cell> cells() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// k-tuple of partitions (quotients, tuple-tableau shapes).
using PartitionTuple = std::vector<Partition>;

/// Weight of a tableau: multiplicity of each label 1, 2, ...; zero entries
/// are allowed.
using Composition = std::vector<int>;

Partition conjugate(const Partition& lambda);
Partition scale(const Partition& lambda, int k);

/// Beta numbers lambda_i - i + n for i = 1..n (n >= length).
std::vector<int> beta_numbers(const Partition& lambda, int n);
Partition from_beta_numbers(std::vector<int> beta);

Partition k_core(const Partition& lambda, int k);

/// Abacus quotient with runners 0..k-1 and a bead count that is a multiple
/// of k. With this convention the quotient of l*lambda (l = length) is
/// ((lambda_l), ..., (lambda_1)).
PartitionTuple k_quotient(const Partition& lambda, int k);

/// Bead excess of each runner over the balanced abacus. All zero iff the
/// k-core is empty; depends only on the core.
std::vector<int> k_charges(const Partition& lambda, int k);

/// Inverse of (k_core, k_quotient). Throws std::invalid_argument if `core`
/// is not a k-core or the tuple has the wrong size.
Partition from_core_quotient(const Partition& core,
                             const PartitionTuple& quotient, int k);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Partitions mu contained in `outer` with |mu| = weight, reverse-lex order.
std::vector<Partition> subpartitions(const Partition& outer, int weight);

bool is_partition(const Composition& c) noexcept;
int total(const Composition& c) noexcept;

/// "8,7,6,5,1", "(8,7,6,5,1)", "[8,7,6,5,1]"; empty string is the empty
/// partition.
std::vector<int> parse_int_list(std::string_view text);
Partition parse_partition(std::string_view text);

/// "(8,7,6,5,1)"; the empty partition renders as "()".
std::string to_string(const Partition& lambda);
std::string to_string(const PartitionTuple& tuple);

}  // namespace hlroots
