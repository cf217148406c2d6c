#include "hlroots/tuple_tableau.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace hlroots {

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("empty row inside a tableau");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw std::invalid_argument("tableau rows must weakly decrease in length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw std::invalid_argument("tableau labels must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw std::invalid_argument("tableau rows must weakly increase");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

Partition YoungTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int YoungTableau::label(Cell c) const noexcept {
  if (c.row < 1 || c.row > static_cast<int>(rows_.size())) return 0;
  const auto& row = rows_[static_cast<std::size_t>(c.row - 1)];
  if (c.col < 1 || c.col > static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(c.col - 1)];
}

TupleTableau::TupleTableau(std::vector<YoungTableau> components,
                           std::vector<int> content_offsets)
    : components_(std::move(components)), offsets_(std::move(content_offsets)) {
  if (components_.empty()) throw std::invalid_argument("tuple must have k >= 1 components");
  if (offsets_.empty()) offsets_.assign(components_.size(), 0);
  if (offsets_.size() != components_.size())
    throw std::invalid_argument("one content offset per component");
}

PartitionTuple TupleTableau::shape() const {
  PartitionTuple out;
  for (const auto& c : components_) out.push_back(c.shape());
  return out;
}

Composition TupleTableau::weight() const {
  Composition w;
  for (const auto& comp : components_)
    for (const auto& row : comp.rows())
      for (int x : row) {
        if (static_cast<int>(w.size()) < x) w.resize(static_cast<std::size_t>(x), 0);
        ++w[static_cast<std::size_t>(x - 1)];
      }
  return w;
}

std::vector<TupleCell> TupleTableau::cells() const {
  std::vector<TupleCell> out;
  for (std::size_t p = 0; p < components_.size(); ++p) {
    const auto& rows = components_[p].rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        const int row = static_cast<int>(r) + 1;
        const int col = static_cast<int>(c) + 1;
        out.push_back({static_cast<int>(p) + 1, row, col, col - row + offsets_[p], rows[r][c]});
      }
  }
  return out;
}

int TupleTableau::label(int pos, Cell c) const noexcept {
  if (pos < 1 || pos > k()) return 0;
  return components_[static_cast<std::size_t>(pos - 1)].label(c);
}

bool TupleTableau::is_single_row() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](const YoungTableau& t) { return t.rows().size() <= 1; });
}

namespace {

// Shapes nu with current <= nu <= target and nu / current a horizontal strip
// of exactly `size` cells.
void horizontal_strips(const Partition& current, const Partition& target, int size,
                       std::vector<Partition>& out) {
  std::vector<int> nu(static_cast<std::size_t>(target.length()), 0);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row > target.length()) {
      if (left == 0) out.emplace_back(nu);
      return;
    }
    const int lo = current.part(row);
    int hi = target.part(row);
    if (row > 1) hi = std::min(hi, current.part(row - 1));
    for (int v = lo; v <= hi && v - lo <= left; ++v) {
      nu[static_cast<std::size_t>(row - 1)] = v;
      rec(row + 1, left - (v - lo));
    }
    nu[static_cast<std::size_t>(row - 1)] = 0;
  };
  if (size >= 0) rec(1, size);
}

}  // namespace

void for_each_tuple(const PartitionTuple& shape, const Composition& weight,
                    const std::function<void(const TupleTableau&)>& visit,
                    const std::vector<int>& content_offsets) {
  if (shape.empty()) throw std::invalid_argument("tuple shape must have k >= 1 components");
  int cells = 0;
  for (const auto& p : shape) cells += p.weight();
  if (std::any_of(weight.begin(), weight.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative weight entry");
  if (cells != total(weight))
    throw std::invalid_argument("weight mismatch: tuple shape has " + std::to_string(cells) +
                                " cells, weight sums to " + std::to_string(total(weight)));

  const std::size_t k = shape.size();
  const int labels = static_cast<int>(weight.size());
  std::vector<Partition> cur(k);
  std::vector<std::vector<std::vector<int>>> rows(k);
  for (std::size_t p = 0; p < k; ++p)
    rows[p].assign(static_cast<std::size_t>(shape[p].length()), {});

  // Place label `label` into components p.. with `left` cells still to go.
  std::function<void(int, std::size_t, int)> place = [&](int label, std::size_t p, int left) {
    if (label > labels) {
      std::vector<YoungTableau> comps;
      comps.reserve(k);
      for (std::size_t i = 0; i < k; ++i) comps.emplace_back(rows[i]);
      visit(TupleTableau(std::move(comps), content_offsets));
      return;
    }
    if (p == k) {
      if (left == 0)
        place(label + 1, 0,
              label < labels ? weight[static_cast<std::size_t>(label)] : 0);
      return;
    }
    // capacity of the remaining components bounds how much p must take
    int room_after = 0;
    for (std::size_t i = p + 1; i < k; ++i) room_after += shape[i].weight() - cur[i].weight();
    const int room_here = shape[p].weight() - cur[p].weight();
    for (int take = std::min(left, room_here); take >= 0; --take) {
      if (left - take > room_after) break;
      std::vector<Partition> strips;
      horizontal_strips(cur[p], shape[p], take, strips);
      for (const auto& nu : strips) {
        const Partition saved = cur[p];
        for (int r = 1; r <= nu.length(); ++r)
          for (int c = saved.part(r) + 1; c <= nu.part(r); ++c)
            rows[p][static_cast<std::size_t>(r - 1)].push_back(label);
        cur[p] = nu;
        place(label, p + 1, left - take);
        cur[p] = saved;
        for (int r = 1; r <= nu.length(); ++r)
          rows[p][static_cast<std::size_t>(r - 1)].resize(static_cast<std::size_t>(saved.part(r)));
      }
    }
  };
  place(1, 0, labels > 0 ? weight[0] : 0);
}

std::vector<TupleTableau> enumerate_tuples(const PartitionTuple& shape, const Composition& weight,
                                           const std::vector<int>& content_offsets) {
  std::vector<TupleTableau> out;
  for_each_tuple(shape, weight, [&](const TupleTableau& t) { out.push_back(t); }, content_offsets);
  return out;
}

int inversions(const TupleTableau& t) {
  const auto cells = t.cells();
  int count = 0;
  for (const auto& s : cells) {
    for (const auto& u : cells) {
      const bool diagonal_ok = (s.diag == u.diag && s.pos < u.pos) ||
                               (s.diag == u.diag - 1 && s.pos > u.pos);
      if (!diagonal_ok || s.row > u.row) continue;
      if (!(u.label < s.label)) continue;
      const int above = t.label(u.pos, {u.row + 1, u.col});
      if (above == 0 || s.label < above) ++count;
    }
  }
  return count;
}

IntPolynomial inversion_polynomial(const PartitionTuple& shape, const Composition& weight) {
  std::vector<BigInt> counts;
  for_each_tuple(shape, weight, [&](const TupleTableau& t) {
    const auto inv = static_cast<std::size_t>(inversions(t));
    if (counts.size() <= inv) counts.resize(inv + 1, 0);
    ++counts[inv];
  });
  return IntPolynomial(std::move(counts));
}

DiagonalVector diagonal_vector(const TupleTableau& t) {
  std::map<int, std::vector<int>> by_diag;
  for (const auto& c : t.cells()) by_diag[c.diag].push_back(c.label);
  DiagonalVector d;
  if (by_diag.empty()) return d;
  d.first = std::min(0, by_diag.begin()->first);
  const int last = by_diag.rbegin()->first;
  d.entries.resize(static_cast<std::size_t>(last - d.first + 1));
  for (auto& [diag, labels] : by_diag) {
    std::sort(labels.begin(), labels.end());
    d.entries[static_cast<std::size_t>(diag - d.first)] = std::move(labels);
  }
  return d;
}

std::vector<DiagonalClass> group_by_diagonals(std::vector<TupleTableau> tuples) {
  std::map<DiagonalVector, std::vector<TupleTableau>> groups;
  for (auto& t : tuples) {
    auto d = diagonal_vector(t);
    groups[std::move(d)].push_back(std::move(t));
  }
  std::vector<DiagonalClass> out;
  out.reserve(groups.size());
  for (auto& [d, members] : groups) out.push_back({d, std::move(members)});
  return out;
}

std::vector<DiagonalClass> diagonal_classes(const PartitionTuple& shape, const Composition& weight) {
  for (const auto& p : shape)
    if (p.length() > 1)
      throw std::invalid_argument("diagonal classes are defined for single-row shapes only");
  return group_by_diagonals(enumerate_tuples(shape, weight));
}

IntPolynomial restricted_inversion_polynomial(const DiagonalClass& cls) {
  IntPolynomial out;
  for (const auto& t : cls.members) out.add_term(1, inversions(t));
  return out;
}

std::string to_string(const TupleTableau& t) {
  std::string out = "(";
  for (std::size_t p = 0; p < t.components().size(); ++p) {
    if (p > 0) out += ", ";
    const auto& rows = t.components()[p].rows();
    out += '[';
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r > 0) out += '/';
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        if (c > 0) out += ',';
        out += std::to_string(rows[r][c]);
      }
    }
    out += ']';
  }
  return out + ")";
}

std::string to_string(const DiagonalVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i > 0) out += ',';
    out += '{';
    for (std::size_t j = 0; j < d.entries[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(d.entries[i][j]);
    }
    out += '}';
  }
  return out + ")";
}

}  // namespace hlroots
