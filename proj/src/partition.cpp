#include "hlroots/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hlroots {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("negative part");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(weight()));
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int i = 1; i <= lambda.part(1); ++i) {
    int count = 0;
    while (lambda.part(count + 1) >= i) ++count;
    out[static_cast<std::size_t>(i - 1)] = count;
  }
  return Partition(std::move(out));
}

Partition scale(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<int> out = lambda.parts();
  for (int& x : out) x *= k;
  return Partition(std::move(out));
}

std::vector<int> beta_numbers(const Partition& lambda, int n) {
  if (n < lambda.length())
    throw std::invalid_argument("bead count below partition length");
  std::vector<int> beta(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    beta[static_cast<std::size_t>(i - 1)] = lambda.part(i) - i + n;
  return beta;
}

Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int n = static_cast<int>(beta.size());
  std::vector<int> parts(beta.size());
  for (int i = 0; i < n; ++i) {
    parts[static_cast<std::size_t>(i)] = beta[static_cast<std::size_t>(i)] - (n - 1 - i);
    if (i > 0 && beta[static_cast<std::size_t>(i)] == beta[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("repeated beta number");
  }
  return Partition(std::move(parts));
}

namespace {

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
}

int balanced_bead_count(int length, int k) { return ((length + k - 1) / k) * k; }

// Bead positions (levels) on each runner, descending.
std::vector<std::vector<int>> runners(const std::vector<int>& beta, int k) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int b : beta) out[static_cast<std::size_t>(b % k)].push_back(b / k);
  for (auto& r : out) std::sort(r.begin(), r.end(), std::greater<>());
  return out;
}

}  // namespace

Partition k_core(const Partition& lambda, int k) {
  check_k(k);
  const int n = balanced_bead_count(lambda.length(), k);
  const auto abacus = runners(beta_numbers(lambda, n), k);
  std::vector<int> beta;
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < static_cast<int>(abacus[static_cast<std::size_t>(r)].size()); ++j)
      beta.push_back(r + k * j);
  return from_beta_numbers(std::move(beta));
}

PartitionTuple k_quotient(const Partition& lambda, int k) {
  check_k(k);
  const int n = balanced_bead_count(lambda.length(), k);
  const auto abacus = runners(beta_numbers(lambda, n), k);
  PartitionTuple out;
  out.reserve(static_cast<std::size_t>(k));
  for (const auto& levels : abacus) {
    const int m = static_cast<int>(levels.size());
    std::vector<int> parts(levels.size());
    for (int j = 0; j < m; ++j)
      parts[static_cast<std::size_t>(j)] = levels[static_cast<std::size_t>(j)] - (m - 1 - j);
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<int> k_charges(const Partition& lambda, int k) {
  check_k(k);
  const int n = balanced_bead_count(lambda.length(), k);
  const auto abacus = runners(beta_numbers(lambda, n), k);
  std::vector<int> out;
  for (const auto& levels : abacus)
    out.push_back(static_cast<int>(levels.size()) - n / k);
  return out;
}

Partition from_core_quotient(const Partition& core,
                             const PartitionTuple& quotient, int k) {
  check_k(k);
  if (static_cast<int>(quotient.size()) != k)
    throw std::invalid_argument("quotient must have k components");
  if (k_core(core, k) != core)
    throw std::invalid_argument("core admits a k-ribbon removal");

  int n = balanced_bead_count(core.length(), k);
  auto counts = [&](int beads) {
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    for (int b : beta_numbers(core, beads)) ++c[static_cast<std::size_t>(b % k)];
    return c;
  };
  std::vector<int> per_runner = counts(n);
  for (;;) {
    bool enough = true;
    for (int r = 0; r < k; ++r)
      if (per_runner[static_cast<std::size_t>(r)] < quotient[static_cast<std::size_t>(r)].length())
        enough = false;
    if (enough) break;
    n += k;
    per_runner = counts(n);
  }

  std::vector<int> beta;
  for (int r = 0; r < k; ++r) {
    const int m = per_runner[static_cast<std::size_t>(r)];
    const Partition& q = quotient[static_cast<std::size_t>(r)];
    for (int j = 1; j <= m; ++j) beta.push_back(r + k * (q.part(j) + m - j));
  }
  return from_beta_numbers(std::move(beta));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer, int weight) {
  std::vector<Partition> out;
  if (weight < 0 || weight > outer.weight()) return out;
  std::vector<int> cur;
  // remaining capacity of rows i..length, used to prune
  std::vector<int> suffix(static_cast<std::size_t>(outer.length()) + 1, 0);
  for (int i = outer.length(); i >= 1; --i)
    suffix[static_cast<std::size_t>(i - 1)] = suffix[static_cast<std::size_t>(i)] + outer.part(i);
  std::function<void(int, int, int)> rec = [&](int row, int left, int bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (row > outer.length()) return;
    const int cap = std::min(bound, outer.part(row));
    for (int p = std::min(cap, left); p >= 1; --p) {
      // rows below can hold at most p each and at most their own length
      int room = 0;
      for (int r = row + 1; r <= outer.length(); ++r) room += std::min(p, outer.part(r));
      if (p + room < left) break;
      cur.push_back(p);
      rec(row + 1, left - p, p);
      cur.pop_back();
    }
  };
  rec(1, weight, outer.part(1));
  return out;
}

bool is_partition(const Composition& c) noexcept {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] <= 0) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

int total(const Composition& c) noexcept {
  return std::accumulate(c.begin(), c.end(), 0);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '(' || text[i] == ')' ||
            text[i] == '[' || text[i] == ']'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    int value = 0;
    const auto* first = text.data() + i;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc())
      throw std::invalid_argument("cannot parse integer list: '" +
                                  std::string(text) + "'");
    out.push_back(value);
    i += static_cast<std::size_t>(ptr - first);
    skip();
    if (i < text.size()) {
      if (text[i] != ',')
        throw std::invalid_argument("expected ',' in integer list: '" +
                                    std::string(text) + "'");
      ++i;
      skip();
    }
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  return Partition(parse_int_list(text));
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (int i = 1; i <= lambda.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(lambda.part(i));
  }
  return out + ")";
}

std::string to_string(const PartitionTuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(tuple[i]);
  }
  return out + ")";
}

}  // namespace hlroots
