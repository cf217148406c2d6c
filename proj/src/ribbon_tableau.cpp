#include "hlroots/ribbon_tableau.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hlroots {

namespace {

std::optional<std::string> ribbon_cells_error(const std::vector<Cell>& sorted) {
  if (sorted.empty()) return "empty ribbon";
  for (const auto& c : sorted)
    if (c.row < 1 || c.col < 1) return "ribbon cell outside the quadrant";
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Cell a = sorted[i - 1];
    const Cell b = sorted[i];
    // consecutive contents, each step going right or up
    const bool right = b.row == a.row && b.col == a.col + 1;
    const bool up = b.row == a.row - 1 && b.col == a.col;
    if (!right && !up) return "ribbon cells are not a connected strip without 2x2 block";
  }
  return std::nullopt;
}

std::vector<Cell> by_content(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
    return a.diag() != b.diag() ? a.diag() < b.diag() : a.row < b.row;
  });
  return cells;
}

bool canonical_less(const Ribbon& a, const Ribbon& b) {
  if (a.label != b.label) return a.label < b.label;
  return a.head() < b.head();
}

}  // namespace

Ribbon Ribbon::make(std::vector<Cell> cells, int label) {
  cells = by_content(std::move(cells));
  if (auto err = ribbon_cells_error(cells)) throw std::invalid_argument(*err);
  if (label < 1) throw std::invalid_argument("ribbon labels must be positive");
  return Ribbon{std::move(cells), label};
}

int Ribbon::height() const {
  if (cells.empty()) return 0;
  return cells.front().row - cells.back().row + 1;
}

std::string SpinValue::to_string() const {
  if (twice_spin % 2 == 0) return std::to_string(twice_spin / 2);
  return std::to_string(twice_spin) + "/2";
}

std::optional<std::string> ribbon_tableau_error(const Partition& shape, int k,
                                                const std::vector<Ribbon>& ribbons) {
  if (k < 1) return "k must be positive";
  const Partition core = k_core(shape, k);
  std::map<Cell, int> labels;
  for (const auto& c : core.cells()) labels[c] = 0;
  for (const auto& r : ribbons) {
    if (r.size() != k) return "ribbon of size " + std::to_string(r.size()) + ", expected " +
                              std::to_string(k);
    if (r.label < 1) return "ribbon labels must be positive";
    if (auto err = ribbon_cells_error(by_content(r.cells))) return err;
    for (const auto& c : r.cells) {
      if (!shape.contains(c)) return "ribbon cell outside the shape";
      if (!labels.emplace(c, r.label).second) return "ribbons overlap or cover the core";
    }
  }
  if (static_cast<int>(labels.size()) != shape.weight())
    return "ribbons do not tile the shape minus its core";

  auto at = [&](Cell c) -> int {
    const auto it = labels.find(c);
    return it == labels.end() ? -1 : it->second;
  };
  for (const auto& r : ribbons) {
    const auto sorted = by_content(r.cells);
    const Cell head = sorted.front();
    const Cell tail = sorted.back();
    if (at({head.row, head.col - 1}) > r.label)
      return "rule 1: a head lies right of a larger label";
    if (at({tail.row - 1, tail.col}) >= r.label)
      return "rule 2: a tail lies below a label that is not smaller";
  }
  // each sub-tableau of labels <= i must be a partition shape
  for (const auto& [c, lab] : labels) {
    if (c.row > 1 && at({c.row - 1, c.col}) > lab) return "labels decrease down a column";
    if (c.col > 1 && at({c.row, c.col - 1}) > lab) return "labels decrease along a row";
  }
  return std::nullopt;
}

RibbonTableau::RibbonTableau(Partition shape, int k, std::vector<Ribbon> ribbons)
    : shape_(std::move(shape)), k_(k), ribbons_(std::move(ribbons)) {
  if (auto err = ribbon_tableau_error(shape_, k_, ribbons_)) throw std::invalid_argument(*err);
  core_ = k_core(shape_, k_);
  for (auto& r : ribbons_) r.cells = by_content(std::move(r.cells));
  std::sort(ribbons_.begin(), ribbons_.end(), canonical_less);
}

Composition RibbonTableau::weight() const {
  Composition w;
  for (const auto& r : ribbons_) {
    if (static_cast<int>(w.size()) < r.label) w.resize(static_cast<std::size_t>(r.label), 0);
    ++w[static_cast<std::size_t>(r.label - 1)];
  }
  return w;
}

std::vector<Partition> RibbonTableau::shape_chain() const {
  const int labels = static_cast<int>(weight().size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(labels) + 1, core_.parts());
  for (auto& row : rows) row.resize(static_cast<std::size_t>(shape_.length()), 0);
  for (const auto& r : ribbons_)
    for (const auto& c : r.cells)
      for (int i = r.label; i <= labels; ++i) ++rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c.row - 1)];
  std::vector<Partition> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

int RibbonTableau::label(Cell c) const {
  if (core_.contains(c)) return 0;
  for (const auto& r : ribbons_)
    if (std::find(r.cells.begin(), r.cells.end(), c) != r.cells.end()) return r.label;
  return -1;
}

namespace {

struct Removal {
  Partition inner;
  std::vector<Cell> cells;
};

// All single k-ribbon removals, read off the abacus as bead moves b -> b - k.
std::vector<Removal> removable_ribbons(const Partition& shape, int k) {
  const int n = shape.length() + k;
  const auto beta = beta_numbers(shape, n);
  const std::set<int> occupied(beta.begin(), beta.end());
  std::vector<Removal> out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    if (b - k < 0 || occupied.contains(b - k)) continue;
    auto moved = beta;
    moved[i] = b - k;
    Partition inner = from_beta_numbers(std::move(moved));
    std::vector<Cell> cells;
    for (int r = 1; r <= shape.length(); ++r)
      for (int c = inner.part(r) + 1; c <= shape.part(r); ++c) cells.push_back({r, c});
    out.push_back({std::move(inner), by_content(std::move(cells))});
  }
  return out;
}

bool is_horizontal(const std::vector<Ribbon>& strip) {
  std::set<Cell> cells;
  for (const auto& r : strip) cells.insert(r.cells.begin(), r.cells.end());
  return std::none_of(strip.begin(), strip.end(), [&](const Ribbon& r) {
    return cells.contains(Cell{r.tail().row - 1, r.tail().col});
  });
}

struct Strip {
  Partition inner;
  std::vector<Ribbon> ribbons;
};

// Horizontal strips of `count` ribbons peeled off `outer`; when `target` is
// given only strips ending exactly there are kept.
std::vector<Strip> peel_strips(const Partition& outer, int k, int count, int label,
                               const Partition* target) {
  std::vector<Strip> out;
  std::set<std::vector<Ribbon>> seen;
  std::vector<Ribbon> current;
  std::function<void(const Partition&, int)> rec = [&](const Partition& shape, int left) {
    if (left == 0) {
      if (target != nullptr && shape != *target) return;
      auto sorted = current;
      std::sort(sorted.begin(), sorted.end(), canonical_less);
      if (is_horizontal(sorted)) out.push_back({shape, std::move(sorted)});
      return;
    }
    for (auto& rem : removable_ribbons(shape, k)) {
      if (target != nullptr && !rem.inner.contains(*target)) continue;
      current.push_back(Ribbon{rem.cells, label});
      auto key = current;
      std::sort(key.begin(), key.end(), canonical_less);
      if (seen.insert(std::move(key)).second) rec(rem.inner, left - 1);
      current.pop_back();
    }
  };
  rec(outer, count);
  return out;
}

}  // namespace

std::vector<std::vector<Ribbon>> horizontal_ribbon_strips(const Partition& outer,
                                                          const Partition& inner, int k,
                                                          int label) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<std::vector<Ribbon>> out;
  if (!outer.contains(inner)) return out;
  const int diff = outer.weight() - inner.weight();
  if (diff % k != 0) return out;
  for (auto& s : peel_strips(outer, k, diff / k, label, &inner)) out.push_back(std::move(s.ribbons));
  return out;
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& lambda,
                                                     const Composition& mu, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (std::any_of(mu.begin(), mu.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative weight entry");
  const Partition core = k_core(lambda, k);
  if (k * total(mu) != lambda.weight() - core.weight())
    throw std::invalid_argument("weight mismatch: k|mu| = " + std::to_string(k * total(mu)) +
                                " but |lambda| - |core| = " +
                                std::to_string(lambda.weight() - core.weight()));

  using Fillings = std::vector<std::vector<Ribbon>>;
  std::map<std::pair<Partition, int>, Fillings> memo;
  // fillings of shape / core with labels 1..labels, largest label peeled first
  std::function<const Fillings&(const Partition&, int)> fill =
      [&](const Partition& shape, int labels) -> const Fillings& {
    const auto key = std::make_pair(shape, labels);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Fillings result;
    if (labels == 0) {
      if (shape == core) result.emplace_back();
    } else {
      const int count = mu[static_cast<std::size_t>(labels - 1)];
      for (auto& strip : peel_strips(shape, k, count, labels, nullptr)) {
        for (const auto& below : fill(strip.inner, labels - 1)) {
          auto all = below;
          all.insert(all.end(), strip.ribbons.begin(), strip.ribbons.end());
          result.push_back(std::move(all));
        }
      }
    }
    return memo.emplace(key, std::move(result)).first->second;
  };

  std::vector<RibbonTableau> out;
  for (const auto& ribbons : fill(lambda, static_cast<int>(mu.size())))
    out.emplace_back(lambda, k, ribbons);
  std::sort(out.begin(), out.end());
  return out;
}

SpinValue spin(const RibbonTableau& t) {
  SpinValue s;
  for (const auto& r : t.ribbons()) s.twice_spin += r.height() - 1;
  return s;
}

std::optional<SpinValue> max_spin(const Partition& lambda, const Composition& mu, int k) {
  std::optional<SpinValue> best;
  for (const auto& t : enumerate_ribbon_tableaux(lambda, mu, k)) {
    const SpinValue s = spin(t);
    if (!best || s > *best) best = s;
  }
  return best;
}

int cospin(const RibbonTableau& t, SpinValue class_max) {
  const int diff = class_max.twice_spin - spin(t).twice_spin;
  if (diff < 0) throw std::domain_error("class maximum below the spin of a member");
  if (diff % 2 != 0) throw std::domain_error("spins in one class differ by a half-integer");
  return diff / 2;
}

std::vector<int> cospins(std::span<const RibbonTableau> whole_class) {
  if (whole_class.empty()) throw std::domain_error("cospin on an empty class is undefined");
  SpinValue best = spin(whole_class.front());
  for (const auto& t : whole_class) best = std::max(best, spin(t));
  std::vector<int> out;
  out.reserve(whole_class.size());
  for (const auto& t : whole_class) out.push_back(cospin(t, best));
  return out;
}

int cospin(const RibbonTableau& t) {
  const auto best = max_spin(t.shape(), t.weight(), t.k());
  if (!best) throw std::domain_error("cospin on an empty class is undefined");
  return cospin(t, *best);
}

IntPolynomial cospin_polynomial(const Partition& lambda, const Composition& mu, int k) {
  const auto tableaux = enumerate_ribbon_tableaux(lambda, mu, k);
  IntPolynomial out;
  if (tableaux.empty()) return out;
  for (int c : cospins(tableaux)) out.add_term(1, c);
  return out;
}

TupleTableau stanton_white(const RibbonTableau& t) {
  const int k = t.k();
  const auto chain = t.shape_chain();
  std::vector<std::vector<std::vector<int>>> rows(static_cast<std::size_t>(k));
  PartitionTuple previous = k_quotient(chain.front(), k);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    PartitionTuple next = k_quotient(chain[i], k);
    for (std::size_t p = 0; p < static_cast<std::size_t>(k); ++p) {
      auto& comp = rows[p];
      comp.resize(static_cast<std::size_t>(std::max<int>(static_cast<int>(comp.size()),
                                                         next[p].length())));
      for (int r = 1; r <= next[p].length(); ++r)
        for (int c = previous[p].part(r) + 1; c <= next[p].part(r); ++c)
          comp[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(i));
    }
    previous = std::move(next);
  }
  std::vector<YoungTableau> comps;
  comps.reserve(rows.size());
  for (auto& comp : rows) comps.emplace_back(std::move(comp));
  return TupleTableau(std::move(comps), k_charges(t.core(), k));
}

RibbonTableau stanton_white_inverse(const TupleTableau& t, const Partition& core, int k) {
  if (t.k() != k)
    throw std::invalid_argument("tuple has " + std::to_string(t.k()) + " components, expected " +
                                std::to_string(k));
  const int labels = static_cast<int>(t.weight().size());
  auto sub_shape = [&](int bound) {
    PartitionTuple out;
    for (const auto& comp : t.components()) {
      std::vector<int> parts;
      for (const auto& row : comp.rows())
        parts.push_back(static_cast<int>(std::count_if(row.begin(), row.end(),
                                                       [&](int x) { return x <= bound; })));
      out.emplace_back(std::move(parts));
    }
    return out;
  };
  Partition previous = from_core_quotient(core, sub_shape(0), k);
  std::vector<Ribbon> ribbons;
  for (int i = 1; i <= labels; ++i) {
    Partition next = from_core_quotient(core, sub_shape(i), k);
    auto strips = horizontal_ribbon_strips(next, previous, k, i);
    if (strips.size() != 1)
      throw std::invalid_argument("label " + std::to_string(i) +
                                  " does not form a horizontal ribbon strip");
    ribbons.insert(ribbons.end(), strips.front().begin(), strips.front().end());
    previous = std::move(next);
  }
  return RibbonTableau(previous, k, std::move(ribbons));
}

std::vector<RibbonDiagonalClass> ribbon_diagonal_classes(const Partition& lambda,
                                                         const Composition& mu, int k) {
  const auto tableaux = enumerate_ribbon_tableaux(lambda, mu, k);
  std::map<DiagonalVector, RibbonDiagonalClass> groups;
  if (tableaux.empty()) return {};
  const auto cs = cospins(tableaux);
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    auto d = diagonal_vector(stanton_white(tableaux[i]));
    auto& cls = groups[d];
    cls.vector = std::move(d);
    cls.members.push_back(tableaux[i]);
    cls.cospin_polynomial.add_term(1, cs[i]);
  }
  std::vector<RibbonDiagonalClass> out;
  out.reserve(groups.size());
  for (auto& [d, cls] : groups) out.push_back(std::move(cls));
  return out;
}

std::string to_string(const RibbonTableau& t) {
  std::ostringstream os;
  for (int r = 1; r <= t.shape().length(); ++r) {
    for (int c = 1; c <= t.shape().part(r); ++c) {
      if (c > 1) os << ' ';
      const int lab = t.label({r, c});
      if (lab == 0)
        os << '.';
      else
        os << lab;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace hlroots
