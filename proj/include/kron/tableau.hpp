#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kron/expansion.hpp"
#include "kron/partition.hpp"

namespace kron {

/// Content vector (t_1, t_2, ...) of a filling; entry i-1 counts the i's.
/// Trailing zeros are stripped so equal contents compare equal.
class CompositionType {
 public:
  CompositionType() = default;
  explicit CompositionType(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
      if (c < 0) throw DomainError("type entries must be nonnegative");
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }
  CompositionType(std::initializer_list<int> counts) : CompositionType(std::vector<int>(counts)) {}

  /// nu/alpha := (nu_1 - alpha_1, nu_2 - alpha_2, ...); requires alpha within nu.
  static CompositionType difference(const Partition& nu, const Partition& alpha) {
    if (!contains(alpha, nu)) throw DomainError("type nu/alpha needs alpha inside nu");
    std::vector<int> c;
    for (int i = 0; i < nu.length(); ++i) c.push_back(nu[i] - alpha[i]);
    return CompositionType(std::move(c));
  }

  int operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }
  int length() const { return static_cast<int>(counts_.size()); }
  int total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const CompositionType&, const CompositionType&) = default;

 private:
  std::vector<int> counts_;
};

/// A filling of a skew shape. Rows are stored at full width of the outer
/// shape; columns inside the inner shape hold 0.
class Tableau {
 public:
  Tableau() = default;

  /// `skew_rows[r]` lists the entries of row r of the skew cells, left to right.
  Tableau(SkewShape shape, const std::vector<std::vector<int>>& skew_rows) : shape_(std::move(shape)) {
    if (static_cast<int>(skew_rows.size()) != shape_.rows())
      throw DomainError("row count does not match shape");
    grid_.resize(skew_rows.size());
    for (int r = 0; r < shape_.rows(); ++r) {
      if (static_cast<int>(skew_rows[r].size()) != shape_.row_length(r))
        throw DomainError("row length does not match shape");
      grid_[r].assign(shape_.outer[r], 0);
      for (int c = shape_.inner[r]; c < shape_.outer[r]; ++c) grid_[r][c] = skew_rows[r][c - shape_.inner[r]];
    }
  }

  static Tableau from_grid(SkewShape shape, std::vector<std::vector<int>> grid) {
    Tableau t;
    t.shape_ = std::move(shape);
    t.grid_ = std::move(grid);
    return t;
  }

  const SkewShape& shape() const { return shape_; }
  int at(int r, int c) const { return grid_[r][c]; }

  bool is_semistandard() const {
    for (int r = 0; r < shape_.rows(); ++r) {
      for (int c = shape_.inner[r]; c < shape_.outer[r]; ++c) {
        if (grid_[r][c] < 1) return false;
        if (c + 1 < shape_.outer[r] && grid_[r][c] > grid_[r][c + 1]) return false;
        if (r > 0 && c >= shape_.inner[r - 1] && grid_[r - 1][c] >= grid_[r][c]) return false;
      }
    }
    return true;
  }

  CompositionType type() const {
    std::vector<int> counts;
    for (int r = 0; r < shape_.rows(); ++r)
      for (int c = shape_.inner[r]; c < shape_.outer[r]; ++c) {
        int v = grid_[r][c];
        if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
        ++counts[v - 1];
      }
    return CompositionType(std::move(counts));
  }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> grid_;
};

/// Entries read right to left along each row, top row first.
inline std::vector<int> reverse_reading_word(const Tableau& t) {
  std::vector<int> word;
  const auto& s = t.shape();
  for (int r = 0; r < s.rows(); ++r)
    for (int c = s.outer[r] - 1; c >= s.inner[r]; --c) word.push_back(t.at(r, c));
  return word;
}

/// Every prefix satisfies #i + alpha_i >= #(i+1) + alpha_{i+1} for all i >= 1.
/// With alpha empty this is the ordinary lattice (Yamanouchi) condition.
inline bool is_alpha_lattice(std::span<const int> word, const Partition& alpha) {
  std::vector<int> counts(2, 0);
  for (int v : word) {
    if (v < 1) return false;
    if (v + 1 >= static_cast<int>(counts.size())) counts.resize(v + 2, 0);
    ++counts[v];
    // Only the pair (v-1, v) can break when an entry v is appended.
    if (v > 1 && counts[v - 1] + alpha[v - 2] < counts[v] + alpha[v - 1]) return false;
  }
  return true;
}

namespace detail {

/// Backtracking generator of semistandard fillings whose reverse reading word
/// is an alpha-lattice word. Cells are filled in reading order (right to left,
/// top row first), so the lattice condition is checked as each entry lands.
class LatticeFiller {
 public:
  LatticeFiller(const SkewShape& shape, const Partition& alpha, const CompositionType* type)
      : shape_(shape) {
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = shape.outer[r] - 1; c >= shape.inner[r]; --c) cells_.push_back({r, c});
    grid_.resize(shape.rows());
    for (int r = 0; r < shape.rows(); ++r) grid_[r].assign(shape.outer[r], 0);

    const int ncells = static_cast<int>(cells_.size());
    if (type) {
      max_value_ = type->length();
    } else {
      max_value_ = alpha.length() + ncells;
    }
    alpha_len_ = alpha.length();
    counts_.assign(max_value_ + 2, 0);
    alpha_.assign(max_value_ + 2, 0);
    cap_.assign(max_value_ + 2, INT_MAX);
    for (int i = 1; i <= max_value_ + 1; ++i) alpha_[i] = alpha[i - 1];
    if (type)
      for (int i = 1; i <= max_value_ + 1; ++i) cap_[i] = (*type)[i - 1];
  }

  const std::vector<std::vector<int>>& grid() const { return grid_; }
  /// counts()[v] is the number of entries equal to v placed so far.
  const std::vector<int>& counts() const { return counts_; }
  int max_value() const { return max_value_; }

  template <typename Visitor>
  void run(Visitor& visit) {
    step(0, visit);
  }

 private:
  template <typename Visitor>
  void step(std::size_t k, Visitor& visit) {
    if (k == cells_.size()) {
      visit(*this);
      return;
    }
    const auto [r, c] = cells_[k];
    int lo = 1;
    if (r > 0 && c >= shape_.inner[r - 1]) lo = grid_[r - 1][c] + 1;
    int hi = max_value_;
    if (c + 1 < shape_.outer[r]) hi = std::min(hi, grid_[r][c + 1]);
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] >= cap_[v]) continue;
      if (v > 1) {
        // Beyond alpha an unused value blocks every larger value as well.
        if (v - 1 > alpha_len_ && counts_[v - 1] == 0) break;
        if (counts_[v - 1] + alpha_[v - 1] < counts_[v] + 1 + alpha_[v]) continue;
      }
      grid_[r][c] = v;
      ++counts_[v];
      step(k + 1, visit);
      --counts_[v];
    }
    grid_[r][c] = 0;
  }

  SkewShape shape_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
  std::vector<int> alpha_;
  std::vector<int> cap_;
  int max_value_ = 0;
  int alpha_len_ = 0;
};

/// alpha + content of the current filling, as a partition.
inline Partition shifted_content(const LatticeFiller& f, const Partition& alpha) {
  std::vector<int> nu;
  const auto& counts = f.counts();
  const int top = std::max(alpha.length(), f.max_value());
  for (int i = 1; i <= top; ++i) nu.push_back(alpha[i - 1] + (i < static_cast<int>(counts.size()) ? counts[i] : 0));
  return Partition(std::move(nu));
}

/// Accumulates fillings by their shifted content; counts are collected in
/// machine words (one increment per enumerated tableau) and widened at the end.
template <typename Accept>
SchurExpansion expand_lattice_fillings(const SkewShape& shape, const Partition& alpha, Accept&& accept) {
  std::map<Partition, std::uint64_t> buckets;
  LatticeFiller filler(shape, alpha, nullptr);
  auto visit = [&](const LatticeFiller& f) {
    if (accept(f)) ++buckets[shifted_content(f, alpha)];
  };
  filler.run(visit);
  SchurExpansion out(shape.size() + alpha.size());
  for (const auto& [nu, c] : buckets) out.add(nu, BigInt(c));
  return out;
}

template <typename Accept>
BigInt count_lattice_fillings(const SkewShape& shape, const CompositionType& type, const Partition& alpha,
                              Accept&& accept) {
  if (type.total() != shape.size()) return 0;
  std::uint64_t n = 0;
  LatticeFiller filler(shape, alpha, &type);
  auto visit = [&](const LatticeFiller& f) {
    if (accept(f)) ++n;
  };
  filler.run(visit);
  return BigInt(n);
}

}  // namespace detail

/// Number of SSYT of the given skew shape and type whose reverse reading word
/// is an alpha-lattice permutation.
inline BigInt count_ssyt_alpha_lattice(const SkewShape& shape, const CompositionType& type,
                                       const Partition& alpha = {}) {
  if (type.total() != shape.size()) throw DomainError("type total must equal the number of skew cells");
  return detail::count_lattice_fillings(shape, type, alpha, [](const auto&) { return true; });
}

/// Littlewood-Richardson coefficient: multiplicity of s_lambda in s_mu s_nu.
inline BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size() || !contains(mu, lambda)) return 0;
  return count_ssyt_alpha_lattice(SkewShape(lambda, mu), CompositionType(nu.parts()));
}

}  // namespace kron
