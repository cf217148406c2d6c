#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"

namespace hlroots {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase (row 1 on top). Labels are positive.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// Throws std::invalid_argument unless the rows form a semistandard
  /// filling of a partition shape.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  [[nodiscard]] const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  [[nodiscard]] Partition shape() const;
  /// Label of the cell, 0 if the cell is outside the shape.
  [[nodiscard]] int label(Cell c) const noexcept;

  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// One cell of a tuple tableau. `pos` is the 1-based component index and
/// `diag` the content col - row plus the component's content offset.
struct TupleCell {
  int pos = 1;
  int row = 1;
  int col = 1;
  int diag = 0;
  int label = 0;
};

/// k-tuple of semistandard tableaux.
///
/// Each component may carry a content offset added to col - row. Tuples
/// built directly have zero offsets. The Stanton-White image of a ribbon
/// tableau whose k-core is not empty carries the bead charges of that core,
/// which line the components up the way the ribbons line up in the big
/// shape.
class TupleTableau {
 public:
  TupleTableau() = default;
  explicit TupleTableau(std::vector<YoungTableau> components,
                        std::vector<int> content_offsets = {});

  [[nodiscard]] int k() const noexcept { return static_cast<int>(components_.size()); }
  [[nodiscard]] const std::vector<YoungTableau>& components() const noexcept {
    return components_;
  }
  [[nodiscard]] const std::vector<int>& content_offsets() const noexcept {
    return offsets_;
  }
  [[nodiscard]] PartitionTuple shape() const;
  /// Label multiplicities, length = largest label.
  [[nodiscard]] Composition weight() const;
  [[nodiscard]] std::vector<TupleCell> cells() const;
  /// Label at (pos, cell), 0 when absent.
  [[nodiscard]] int label(int pos, Cell c) const noexcept;
  /// Every component is empty or a single row.
  [[nodiscard]] bool is_single_row() const noexcept;

  friend auto operator<=>(const TupleTableau&, const TupleTableau&) = default;

 private:
  std::vector<YoungTableau> components_;
  std::vector<int> offsets_;
};

/// Visits every tuple of semistandard tableaux of the given shape and
/// weight. Throws std::invalid_argument when the sizes disagree.
void for_each_tuple(const PartitionTuple& shape, const Composition& weight,
                    const std::function<void(const TupleTableau&)>& visit,
                    const std::vector<int>& content_offsets = {});

std::vector<TupleTableau> enumerate_tuples(const PartitionTuple& shape,
                                           const Composition& weight,
                                           const std::vector<int>& content_offsets = {});

/// Number of ordered cell pairs (s, t) with
///   diag(s) = diag(t) and pos(s) < pos(t), or diag(s) = diag(t) - 1 and
///   pos(s) > pos(t);
///   row(s) <= row(t);
///   T(t) < T(s) < T(t'), t' the cell following t in its column
///   (infinity when absent).
int inversions(const TupleTableau& t);

/// Generating polynomial of inversions over all tuples of the shape/weight.
IntPolynomial inversion_polynomial(const PartitionTuple& shape, const Composition& weight);

/// Sorted label multisets per content value, starting at `first` (0 for
/// single-row tuples without offsets).
struct DiagonalVector {
  int first = 0;
  std::vector<std::vector<int>> entries;

  friend auto operator<=>(const DiagonalVector&, const DiagonalVector&) = default;
};

DiagonalVector diagonal_vector(const TupleTableau& t);

struct DiagonalClass {
  DiagonalVector vector;
  std::vector<TupleTableau> members;
};

/// Groups tuples by diagonal vector; classes sorted by vector.
std::vector<DiagonalClass> group_by_diagonals(std::vector<TupleTableau> tuples);

/// Diagonal classes of Tab(shape, weight). Only single-row shapes are
/// accepted (std::invalid_argument otherwise).
std::vector<DiagonalClass> diagonal_classes(const PartitionTuple& shape,
                                            const Composition& weight);

IntPolynomial restricted_inversion_polynomial(const DiagonalClass& cls);

std::string to_string(const TupleTableau& t);
std::string to_string(const DiagonalVector& d);

}  // namespace hlroots
