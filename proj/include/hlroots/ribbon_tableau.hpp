#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"
#include "hlroots/tuple_tableau.hpp"

namespace hlroots {

/// A labelled k-ribbon. Cells are ordered by increasing content, so the
/// first cell is the head (bottom-left end) and the last is the tail
/// (top-right end).
struct Ribbon {
  std::vector<Cell> cells;
  int label = 0;

  /// Sorts the cells and throws std::invalid_argument unless they form a
  /// connected skew strip without a 2x2 block.
  static Ribbon make(std::vector<Cell> cells, int label);

  [[nodiscard]] Cell head() const { return cells.front(); }
  [[nodiscard]] Cell tail() const { return cells.back(); }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(cells.size()); }
  /// Number of rows met.
  [[nodiscard]] int height() const;

  friend auto operator<=>(const Ribbon&, const Ribbon&) = default;
};

/// Twice the spin, so that half-integers stay exact.
struct SpinValue {
  int twice_spin = 0;

  [[nodiscard]] std::string to_string() const;
  friend auto operator<=>(const SpinValue&, const SpinValue&) = default;
};

/// Ribbon tableau of shape lambda: a tiling of lambda / core_k(lambda) by
/// labelled k-ribbons such that
///   1. the cell left of a head never carries a larger label, and
///   2. the cell above a tail never carries a label >= the ribbon's label.
class RibbonTableau {
 public:
  /// Validates the tiling and both rules; std::invalid_argument on failure.
  RibbonTableau(Partition shape, int k, std::vector<Ribbon> ribbons);

  [[nodiscard]] const Partition& shape() const noexcept { return shape_; }
  [[nodiscard]] const Partition& core() const noexcept { return core_; }
  [[nodiscard]] int k() const noexcept { return k_; }
  /// Sorted by (label, head).
  [[nodiscard]] const std::vector<Ribbon>& ribbons() const noexcept { return ribbons_; }
  /// Ribbons per label, length = largest label.
  [[nodiscard]] Composition weight() const;
  /// Shapes covered by the core and the ribbons labelled <= i, i = 0..max.
  [[nodiscard]] std::vector<Partition> shape_chain() const;
  /// Label of the ribbon covering the cell; 0 for core cells, -1 outside.
  [[nodiscard]] int label(Cell c) const;

  friend bool operator==(const RibbonTableau&, const RibbonTableau&) = default;
  friend auto operator<=>(const RibbonTableau& a, const RibbonTableau& b) {
    return std::tie(a.shape_, a.k_, a.ribbons_) <=> std::tie(b.shape_, b.k_, b.ribbons_);
  }

 private:
  Partition shape_;
  Partition core_;
  int k_ = 1;
  std::vector<Ribbon> ribbons_;
};

/// Reason the tiling is not a ribbon tableau, or nullopt if it is.
std::optional<std::string> ribbon_tableau_error(const Partition& shape, int k,
                                                const std::vector<Ribbon>& ribbons);

/// All ribbon tableaux of shape lambda and weight mu (ribbons per label).
/// Throws std::invalid_argument when k|mu| differs from |lambda| - |core|.
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& lambda,
                                                     const Composition& mu, int k);

/// Horizontal strips of label `label` filling outer / inner with k-ribbons.
/// A strip is horizontal when no cell directly above a tail lies in it.
std::vector<std::vector<Ribbon>> horizontal_ribbon_strips(const Partition& outer,
                                                          const Partition& inner, int k,
                                                          int label);

SpinValue spin(const RibbonTableau& t);
/// Largest spin over the class of (lambda, mu, k); nullopt when empty.
std::optional<SpinValue> max_spin(const Partition& lambda, const Composition& mu, int k);
/// Cospin relative to the class maximum; std::domain_error if the spins
/// differ by a half-integer or the maximum is below spin(t).
int cospin(const RibbonTableau& t, SpinValue class_max);
/// Cospin of every member of a class (all of one shape and weight).
/// std::domain_error on an empty class.
std::vector<int> cospins(std::span<const RibbonTableau> whole_class);
int cospin(const RibbonTableau& t);

/// Sum of q^cospin over the class; zero when the class is empty.
IntPolynomial cospin_polynomial(const Partition& lambda, const Composition& mu, int k);

/// Stanton-White correspondence: the chain of shapes is pushed through the
/// k-quotient. The tuple carries the bead charges of the core as content
/// offsets.
TupleTableau stanton_white(const RibbonTableau& t);
/// Inverse correspondence; std::invalid_argument when the tuple does not
/// come from a ribbon tableau with this core.
RibbonTableau stanton_white_inverse(const TupleTableau& t, const Partition& core, int k);

struct RibbonDiagonalClass {
  DiagonalVector vector;
  std::vector<RibbonTableau> members;
  IntPolynomial cospin_polynomial;
};

/// Ribbon tableaux grouped by the diagonal vector of their Stanton-White
/// image, with each group's cospin polynomial (cospins relative to the
/// whole class).
std::vector<RibbonDiagonalClass> ribbon_diagonal_classes(const Partition& lambda,
                                                         const Composition& mu, int k);

std::string to_string(const RibbonTableau& t);

}  // namespace hlroots
