#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "kron/expansion.hpp"
#include "kron/partition.hpp"
#include "kron/skew.hpp"
#include "kron/tableau.hpp"

namespace kron {

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Conjugacy class of S_n labelled by its cycle type.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition rho) : parts_(std::move(rho)) {
    z_ = 1;
    int i = 0;
    while (i < parts_.length()) {
      int j = i;
      while (j < parts_.length() && parts_[j] == parts_[i]) ++j;
      const int m = j - i;
      BigInt pw = 1;
      for (int k = 0; k < m; ++k) pw *= parts_[i];
      z_ *= pw * factorial(m);
      i = j;
    }
  }

  const Partition& parts() const { return parts_; }
  int size() const { return parts_.size(); }
  /// Centralizer order prod_i i^{m_i} m_i!.
  const BigInt& z() const { return z_; }

 private:
  Partition parts_;
  BigInt z_ = 1;
};

namespace detail {

class CharacterEvaluator {
 public:
  // Values of irreducible characters stay far below 2^63 in the supported range.
  static constexpr int kMaxDegree = 30;

  std::int64_t eval(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw DomainError("mn_character: |lambda| must equal |rho|");
    if (lambda.size() > kMaxDegree) throw DomainError("mn_character: degree too large");
    return rec(lambda.parts(), rho.parts(), 0);
  }

 private:
  std::int64_t rec(const std::vector<int>& lambda, const std::vector<int>& rho, std::size_t from) {
    if (from == rho.size()) return 1;
    std::vector<int> rest(rho.begin() + static_cast<std::ptrdiff_t>(from), rho.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = rho[from];
    const int len = static_cast<int>(lambda.size());
    // Beta-set: distinct beads lambda_i + (len - 1 - i).
    std::vector<int> beads(len);
    for (int i = 0; i < len; ++i) beads[i] = lambda[i] + (len - 1 - i);
    std::vector<char> occupied(beads.empty() ? 1 : beads[0] + 1, 0);
    for (int b : beads) occupied[b] = 1;

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
      const int b = beads[i];
      const int target = b - k;
      if (target < 0 || occupied[target]) continue;
      int between = 0;
      for (int q = target + 1; q < b; ++q) between += occupied[q];
      std::vector<int> moved = beads;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (int q = 0; q < len; ++q) {
        const int part = moved[q] - (len - 1 - q);
        if (part > 0) smaller.push_back(part);
      }
      const std::int64_t sub = rec(smaller, rho, from + 1);
      total += (between % 2 ? -sub : sub);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace detail

/// chi^lambda(rho) by the Murnaghan-Nakayama rule (border strips removed
/// largest cycle first, on the beta-set abacus).
inline std::int64_t mn_character(const Partition& lambda, const CycleType& rho) {
  detail::CharacterEvaluator ev;
  return ev.eval(lambda, rho.parts());
}

/// Full character table of S_n; rows and columns both in descending lex order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreps;
  std::vector<CycleType> classes;
  std::vector<std::vector<std::int64_t>> values;  // values[irrep][class]
  std::map<Partition, std::size_t> index;

  std::int64_t at(const Partition& lambda, std::size_t cls) const { return values[index.at(lambda)][cls]; }
};

/// Tables are built once per n and shared between threads.
inline const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<CharacterTable>();
    t->n = n;
    t->irreps = enumerate_partitions(n);
    for (const auto& rho : t->irreps) t->classes.emplace_back(rho);
    detail::CharacterEvaluator ev;
    for (std::size_t i = 0; i < t->irreps.size(); ++i) {
      t->index[t->irreps[i]] = i;
      std::vector<std::int64_t> row;
      for (const auto& c : t->classes) row.push_back(ev.eval(t->irreps[i], c.parts()));
      t->values.push_back(std::move(row));
    }
    slot = std::move(t);
  }
  return *slot;
}

/// g_{lambda,mu,nu} = sum_rho chi^lambda chi^mu chi^nu / z_rho, for every nu.
inline SchurExpansion oracle_character_kron(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("oracle_character_kron: sizes differ");
  const int n = lambda.size();
  const CharacterTable& t = character_table(n);
  const BigInt nfact = factorial(n);
  std::vector<BigInt> weight;  // n!/z_rho * chi^lambda chi^mu
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    weight.push_back(nfact / t.classes[c].z() * t.at(lambda, c) * t.at(mu, c));
  SchurExpansion out(n);
  for (const auto& nu : t.irreps) {
    BigInt sum = 0;
    const auto& row = t.values[t.index.at(nu)];
    for (std::size_t c = 0; c < row.size(); ++c) sum += weight[c] * row[c];
    if (sum % nfact != 0) throw std::logic_error("character sum is not divisible by n!");
    BigInt g = sum / nfact;
    if (g < 0) throw std::logic_error("negative Kronecker coefficient from character sum");
    out.add(nu, g);
  }
  return out;
}

/// f^lambda by the hook length formula.
inline BigInt dimension(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.size()) / hooks;
}

namespace detail {

inline void check_tworow_args(int n, int p, const Partition& lambda) {
  if (lambda.size() != n) throw DomainError("lambda must be a partition of n");
  if (p < 0 || 2 * p > n) throw DomainError("need 0 <= 2p <= n");
}

}  // namespace detail

/// s_{(n-p,p)} * s_lambda as sum_{alpha |- p} s_alpha s_{lambda/alpha}
/// minus sum_{beta |- p-1} s_beta s_{lambda/beta}. Valid for every lambda.
inline SchurExpansion oracle_tworow_signed_sum(int n, int p, const Partition& lambda) {
  detail::check_tworow_args(n, p, lambda);
  SchurExpansion out(n);
  for_each_partition(p, {.inside = lambda}, [&](const Partition& a) { out += skew_times_alpha(lambda, a); });
  if (p >= 1)
    for_each_partition(p - 1, {.inside = lambda}, [&](const Partition& b) { out -= skew_times_alpha(lambda, b); });
  if (!out.is_positive()) throw std::logic_error("signed sum produced a negative coefficient");
  return out;
}

/// Single coefficient of the signed sum, counting fixed-type fillings only.
inline BigInt oracle_tworow_signed_coeff(int n, int p, const Partition& lambda, const Partition& nu) {
  detail::check_tworow_args(n, p, lambda);
  if (nu.size() != n) throw DomainError("nu must be a partition of n");
  const Partition common = intersect(lambda, nu);
  auto term = [&](const Partition& a) {
    return count_ssyt_alpha_lattice(SkewShape(lambda, a), CompositionType::difference(nu, a), a);
  };
  BigInt sum = 0;
  for_each_partition(p, {.inside = common}, [&](const Partition& a) { sum += term(a); });
  if (p >= 1) for_each_partition(p - 1, {.inside = common}, [&](const Partition& b) { sum -= term(b); });
  if (sum < 0) throw std::logic_error("signed sum produced a negative coefficient");
  return sum;
}

}  // namespace kron
