#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

#include "kron/partition.hpp"

namespace kron {

using BigInt = boost::multiprecision::cpp_int;

/// Orders partitions largest-first so that iteration yields descending lex.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Finite linear combination of Schur functions s_nu with integer
/// coefficients. Zero coefficients are never stored; all keys share one size.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, BigInt, DescendingLex>;

  SchurExpansion() = default;
  explicit SchurExpansion(int degree) : degree_(degree) {}

  static SchurExpansion single(const Partition& nu, BigInt coeff = 1) {
    SchurExpansion e(nu.size());
    e.add(nu, coeff);
    return e;
  }

  void add(const Partition& nu, const BigInt& coeff) {
    check_degree(nu);
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(nu, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Partition& nu) const {
    auto it = terms_.find(nu);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  SchurExpansion& operator+=(const SchurExpansion& other) {
    for (const auto& [nu, c] : other.terms_) add(nu, c);
    if (!degree_) degree_ = other.degree_;
    return *this;
  }
  SchurExpansion& operator-=(const SchurExpansion& other) {
    for (const auto& [nu, c] : other.terms_) add(nu, -c);
    if (!degree_) degree_ = other.degree_;
    return *this;
  }
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.terms_ == b.terms_; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::optional<int> degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Every stored coefficient is > 0 (the empty expansion counts as positive).
  bool is_positive() const {
    for (const auto& [nu, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  bool is_multiplicity_free() const {
    for (const auto& [nu, c] : terms_)
      if (c != 1) return false;
    return true;
  }

  /// Lexicographically smallest key.
  std::optional<Partition> min_key() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  SchurExpansion conjugated() const {
    SchurExpansion out;
    out.degree_ = degree_;
    for (const auto& [nu, c] : terms_) out.add(conjugate(nu), c);
    return out;
  }

 private:
  void check_degree(const Partition& nu) {
    if (!degree_) {
      degree_ = nu.size();
    } else if (*degree_ != nu.size()) {
      throw DomainError("expansion keys must all be partitions of " + std::to_string(*degree_));
    }
  }

  Terms terms_;
  std::optional<int> degree_;
};

inline std::string to_string(const SchurExpansion& e) {
  std::string out;
  for (const auto& [nu, c] : e) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*s(" + to_string(nu) + ")";
  }
  return out.empty() ? "0" : out;
}

}  // namespace kron
