#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kron/expansion.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

namespace kron {

/// Labels 1..|mu| entered right to left along each row, top row first.
/// Positions are 0-based (row, column).
class ReverseLexFilling {
 public:
  explicit ReverseLexFilling(Partition mu) : shape_(std::move(mu)) {
    int offset = 0;
    labels_.resize(shape_.length());
    positions_.resize(shape_.size() + 1);
    for (int i = 0; i < shape_.length(); ++i) {
      labels_[i].resize(shape_[i]);
      for (int j = 0; j < shape_[i]; ++j) {
        const int x = offset + shape_[i] - j;
        labels_[i][j] = x;
        positions_[x] = {i, j};
      }
      offset += shape_[i];
    }
  }

  const Partition& shape() const { return shape_; }
  int label(int i, int j) const { return labels_[i][j]; }
  std::pair<int, int> position(int x) const { return positions_[x]; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> labels_;
  std::vector<std::pair<int, int>> positions_;
};

struct SkewOptions {
  /// Apply the row/column lower bounds l >= i, m >= mu_i - j + 1 as a pre-filter.
  bool prune = true;
};

namespace detail {

class SkewSearch {
 public:
  SkewSearch(const Partition& lambda, const Partition& mu, SkewOptions opts)
      : mu_(mu), rl_(mu), rows_(lambda.parts()), placed_(mu.size() + 1, {-1, -1}), opts_(opts) {}

  std::map<Partition, std::uint64_t> run() {
    place(mu_.size());
    return std::move(leaves_);
  }

 private:
  void place(int x) {
    if (x == 0) {
      ++leaves_[Partition(rows_)];
      return;
    }
    const auto [i, j] = rl_.position(x);
    std::pair<int, int> minus{-1, -1};
    std::pair<int, int> plus{-1, -1};
    if (j > 0) minus = placed_[rl_.label(i, j - 1)];
    if (i + 1 < mu_.length() && mu_[i + 1] > j) plus = placed_[rl_.label(i + 1, j)];

    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      const int len = rows_[r];
      if (len == 0) continue;
      if (r + 1 < static_cast<int>(rows_.size()) && rows_[r + 1] == len) continue;
      const int c = len - 1;
      if (opts_.prune && (r < i || c < mu_[i] - j - 1)) continue;
      // Left of and weakly below the box holding x^-.
      if (minus.first >= 0 && !(c < minus.second && r >= minus.first)) continue;
      // Above and weakly right of the box holding x^+.
      if (plus.first >= 0 && !(r < plus.first && c >= plus.second)) continue;
      --rows_[r];
      placed_[x] = {r, c};
      place(x - 1);
      placed_[x] = {-1, -1};
      ++rows_[r];
    }
  }

  Partition mu_;
  ReverseLexFilling rl_;
  std::vector<int> rows_;
  std::vector<std::pair<int, int>> placed_;
  SkewOptions opts_;
  std::map<Partition, std::uint64_t> leaves_;
};

}  // namespace detail

/// Schur expansion of s_{lambda/mu}, by successively peeling labelled corner
/// boxes off lambda in the order given by the reverse lexicographic filling of mu.
inline SchurExpansion skew_expand(const Partition& lambda, const Partition& mu, SkewOptions opts = {}) {
  if (!contains(mu, lambda)) throw DomainError("skew_expand: mu must be contained in lambda");
  SchurExpansion out(lambda.size() - mu.size());
  for (const auto& [nu, c] : detail::SkewSearch(lambda, mu, opts).run()) out.add(nu, BigInt(c));
  return out;
}

inline SchurExpansion skew_expand(const SkewShape& shape, SkewOptions opts = {}) {
  return skew_expand(shape.outer, shape.inner, opts);
}

/// Sorted rearrangement of the row differences lambda_i - alpha_i; the
/// lexicographically smallest term of s_{lambda/alpha}.
inline Partition min_lex_term(const Partition& lambda, const Partition& alpha) {
  if (!contains(alpha, lambda)) throw DomainError("min_lex_term: alpha must be contained in lambda");
  std::vector<int> diffs;
  for (int i = 0; i < lambda.length(); ++i) diffs.push_back(lambda[i] - alpha[i]);
  return Partition::from_unsorted(std::move(diffs));
}

/// Schur expansion of s_alpha * s_{lambda/alpha}: the coefficient of s_nu counts
/// SSYT of shape lambda/alpha and type nu/alpha with alpha-lattice reading word.
inline SchurExpansion skew_times_alpha(const Partition& lambda, const Partition& alpha) {
  if (!contains(alpha, lambda)) throw DomainError("skew_times_alpha: alpha must be contained in lambda");
  return detail::expand_lattice_fillings(SkewShape(lambda, alpha), alpha, [](const auto&) { return true; });
}

/// alpha with the last box of its first row removed.
inline Partition alpha_minus(const Partition& alpha) {
  if (alpha.empty() || alpha[0] == alpha[1])
    throw DomainError("alpha_minus requires alpha_1 > alpha_2");
  std::vector<int> parts = alpha.parts();
  --parts[0];
  return Partition(std::move(parts));
}

struct PositivityResult {
  SchurExpansion expansion;
  bool schur_positive = false;
};

/// s_alpha s_{lambda/alpha} - s_{alpha^-} s_{lambda/alpha^-}.
inline PositivityResult positivity_diff(const Partition& lambda, const Partition& alpha) {
  if (!contains(alpha, lambda)) throw DomainError("positivity_diff: alpha must be contained in lambda");
  const Partition minus = alpha_minus(alpha);
  PositivityResult r;
  r.expansion = skew_times_alpha(lambda, alpha) - skew_times_alpha(lambda, minus);
  r.schur_positive = r.expansion.is_positive();
  return r;
}

}  // namespace kron
