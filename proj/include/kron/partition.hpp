#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kron {

/// Thrown when an argument lies outside an operation's domain
/// (containment failures, size mismatches, formula preconditions).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the text parsers.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer partition stored as its positive parts, weakly decreasing.
///
/// Indexing past the last part reads as 0, so formulas that mention
/// lambda_i for i > length need no special casing. Indices are 0-based.
/// Ordering is lexicographic on the zero-padded part sequence.
class Partition {
 public:
  Partition() = default;

  /// Accepts trailing zeros (dropped); throws DomainError on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary nonnegative integers into a partition.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// |lambda|, the sum of the parts.
  int size() const { return size_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Positive parts make vector ordering agree with zero-padded lex order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda[0], 0);
  for (int row : lambda)
    for (int c = 0; c < row; ++c) ++cols[c];
  return Partition(std::move(cols));
}

/// True iff inner is a subdiagram of outer.
inline bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

/// Boxes common to both diagrams.
inline Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  const int len = std::min(a.length(), b.length());
  for (int i = 0; i < len; ++i) parts.push_back(std::min(a[i], b[i]));
  return Partition(std::move(parts));
}

inline std::strong_ordering lex_compare(const Partition& a, const Partition& b) { return a <=> b; }

inline bool is_rectangle(const Partition& lambda) {
  return lambda.empty() || lambda[0] == lambda[lambda.length() - 1];
}

inline bool is_hook(const Partition& lambda) { return lambda[1] <= 1; }

/// Number of indices i < length with lambda_i > lambda_{i+1}, i.e. distinct
/// part sizes minus one (0 for the empty partition).
inline int descent_count(const Partition& lambda) {
  int c = 0;
  for (int i = 0; i + 1 < lambda.length(); ++i)
    if (lambda[i] > lambda[i + 1]) ++c;
  return c;
}

/// (a, ..., a) with k copies.
inline Partition rectangle(int a, int k) {
  if (a <= 0 || k <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(k), a));
}

/// Skew diagram outer/inner.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!contains(inner, outer)) throw DomainError("skew shape requires inner contained in outer");
  }
  explicit SkewShape(Partition straight) : outer(std::move(straight)) {}

  int size() const { return outer.size() - inner.size(); }
  int rows() const { return outer.length(); }
  /// Number of skew cells in row r (0-based).
  int row_length(int r) const { return outer[r] - inner[r]; }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Joins two skew diagrams so that `upper` sits above and entirely to the
/// right of `lower`; the skew Schur function of the result is the product.
inline SkewShape join(const SkewShape& upper, const SkewShape& lower) {
  const int shift = lower.outer[0];
  std::vector<int> outer;
  std::vector<int> inner;
  for (int r = 0; r < upper.rows(); ++r) {
    outer.push_back(upper.outer[r] + shift);
    inner.push_back(upper.inner[r] + shift);
  }
  for (int r = 0; r < lower.rows(); ++r) {
    outer.push_back(lower.outer[r]);
    inner.push_back(lower.inner[r]);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

struct PartitionConstraints {
  std::optional<int> max_length;
  std::optional<int> max_part;
  std::optional<Partition> inside;
};

namespace detail {

template <typename F>
void partitions_rec(int remaining, int row, int cap, const PartitionConstraints& c,
                    std::vector<int>& parts, F& f) {
  if (remaining == 0) {
    f(Partition(parts));
    return;
  }
  if (c.max_length && row >= *c.max_length) return;
  int hi = std::min(remaining, cap);
  if (c.inside) hi = std::min(hi, (*c.inside)[static_cast<std::size_t>(row)]);
  for (int v = hi; v >= 1; --v) {
    parts.push_back(v);
    partitions_rec(remaining - v, row + 1, v, c, parts, f);
    parts.pop_back();
  }
}

}  // namespace detail

/// Calls f on every partition of n meeting the constraints, in descending
/// lexicographic order.
template <typename F>
void for_each_partition(int n, const PartitionConstraints& constraints, F&& f) {
  if (n < 0) return;
  std::vector<int> parts;
  int cap = constraints.max_part.value_or(n);
  detail::partitions_rec(n, 0, cap, constraints, parts, f);
}

inline std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& constraints = {}) {
  std::vector<Partition> out;
  for_each_partition(n, constraints, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// Text form: comma-separated parts with optional exponents ("3^2,1").

inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  auto to_int = [&](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0)
      throw ParseError("bad partition component '" + std::string(s) + "'");
    return v;
  };
  text = trim(text);
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    std::size_t caret = item.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(to_int(item));
    } else {
      int value = to_int(item.substr(0, caret));
      int times = to_int(item.substr(caret + 1));
      parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    }
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(std::string("not a partition: ") + e.what());
  }
}

inline std::string to_string(const Partition& lambda) {
  std::string out;
  for (int i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[i]);
  }
  return out;
}

}  // namespace kron

template <>
struct std::hash<kron::Partition> {
  std::size_t operator()(const kron::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};
