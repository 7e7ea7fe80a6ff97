#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kron/expansion.hpp"
#include "kron/kronecker.hpp"
#include "kron/partition.hpp"

namespace kron {

namespace detail {

// Exact floor/ceil of a/b for b > 0, including negative a.
constexpr int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr int ceil_div(int a, int b) { return -floor_div(-a, b); }
constexpr int chi(bool c) { return c ? 1 : 0; }
constexpr int window(int hi, int lo) { return std::max(0, hi - lo + 1); }

inline int min_of(std::initializer_list<int> v) { return std::min(v); }
inline int max_of(std::initializer_list<int> v) { return std::max(v); }

/// Concatenates runs (value, repeat). Returns nullopt when a repeat count is
/// negative or the row lengths are not a partition (a zero row followed by a
/// nonzero row, or an increase).
inline std::optional<Partition> from_runs(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> rows;
  for (auto [value, times] : runs) {
    if (times < 0 || (times > 0 && value < 0)) return std::nullopt;
    rows.insert(rows.end(), static_cast<std::size_t>(times), value);
  }
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i] > rows[i - 1]) return std::nullopt;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

}  // namespace detail

/// s_{(n-1,1)} * s_lambda: C(lambda) copies of lambda plus every other
/// partition reachable by removing one box and adding one box.
inline SchurExpansion p1_expand(const Partition& lambda) {
  if (lambda.size() < 2) throw DomainError("p1_expand needs |lambda| >= 2");
  SchurExpansion out(lambda.size());
  out.add(lambda, descent_count(lambda));
  std::set<Partition> seen;
  std::vector<int> rows = lambda.parts();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r + 1 < rows.size() && rows[r + 1] == rows[r]) continue;
    --rows[r];
    std::vector<int> base = rows;
    while (!base.empty() && base.back() == 0) base.pop_back();
    for (std::size_t a = 0; a <= base.size(); ++a) {
      if (a > 0 && base[a - 1] == (a < base.size() ? base[a] : 0)) continue;
      std::vector<int> grown = base;
      if (a == grown.size()) grown.push_back(1);
      else ++grown[a];
      Partition mu(std::move(grown));
      if (mu != lambda && seen.insert(mu).second) out.add(mu, 1);
    }
    ++rows[r];
  }
  return out;
}

enum class MfreeSource { prop_p1, thm_p2, thm_p3, thm_p4plus, direct_computation };

inline std::string to_string(MfreeSource s) {
  switch (s) {
    case MfreeSource::prop_p1: return "prop_p1";
    case MfreeSource::thm_p2: return "thm_p2";
    case MfreeSource::thm_p3: return "thm_p3";
    case MfreeSource::thm_p4plus: return "thm_p4plus";
    case MfreeSource::direct_computation: return "direct_computation";
  }
  return "unknown";
}

struct MfreeVerdict {
  bool multiplicity_free = false;
  MfreeSource source = MfreeSource::direct_computation;
  std::optional<std::pair<Partition, BigInt>> witness;
};

/// Decides whether s_{(n-p,p)} * s_lambda is multiplicity free, by the
/// classification lists where they apply and by direct expansion elsewhere.
inline MfreeVerdict is_multiplicity_free(int n, int p, const Partition& lambda) {
  if (lambda.size() != n) throw DomainError("lambda must be a partition of n");
  if (p < 1 || 2 * p > n) throw DomainError("need 1 <= p and 2p <= n");
  const Partition row{n};
  const Partition column = conjugate(row);
  const Partition hook{n - 1, 1};
  const Partition hook_conj = conjugate(hook);
  const bool basic = lambda == row || lambda == column || lambda == hook || lambda == hook_conj;

  if (p == 1) return {descent_count(lambda) <= 1, MfreeSource::prop_p1, std::nullopt};
  if (p == 2 && n >= 6) return {basic || is_rectangle(lambda), MfreeSource::thm_p2, std::nullopt};
  if (p == 3 && n > 16) {
    const bool half = n % 2 == 0 && (lambda == rectangle(n / 2, 2) || lambda == rectangle(2, n / 2));
    return {basic || half, MfreeSource::thm_p3, std::nullopt};
  }
  if (p >= 4 && n > (2 * p - 2) * (2 * p - 2)) return {basic, MfreeSource::thm_p4plus, std::nullopt};

  MfreeVerdict v;
  v.multiplicity_free = true;
  for (const auto& [nu, c] : kron_expand_tworow(n, p, lambda).expansion) {
    if (c >= 2) {
      v.multiplicity_free = false;
      v.witness = std::make_pair(nu, c);
      break;
    }
  }
  return v;
}

/// s_{(n-2,2)} * s_{(m^k)} for n = mk >= 6.
inline SchurExpansion rect_p2_expand(int m, int k) {
  if (m < 1 || k < 1) throw DomainError("rect_p2_expand needs m, k >= 1");
  const int n = m * k;
  if (n < 6) throw DomainError("rect_p2_expand needs mk >= 6");
  // s_{(n)} and s_{(1^n)} act as identity and transpose.
  if (k == 1) return SchurExpansion::single(Partition{n - 2, 2});
  if (m == 1) return SchurExpansion::single(conjugate(Partition{n - 2, 2}));
  // The guarded sum needs a first row of length >= 3; (2^k) is the transpose of (k,k).
  if (m == 2) return rect_p2_expand(k, 2).conjugated();
  using detail::from_runs;
  SchurExpansion out(n);
  auto term = [&](bool guard, std::optional<Partition> nu) {
    if (guard && nu && nu->size() == n) out.add(*nu, 1);
  };
  term(true, from_runs({{m, k}}));
  term(true, from_runs({{m, k - 1}, {m - 1, 1}, {1, 1}}));
  term(true, from_runs({{m, k - 2}, {m - 1, 2}, {1, 2}}));
  term(k >= 4, from_runs({{m + 1, 2}, {m, k - 4}, {m - 1, 2}}));
  term(k >= 3, from_runs({{m + 1, 1}, {m, k - 2}, {m - 1, 1}}));
  term(k >= 3, from_runs({{m + 1, 1}, {m, k - 3}, {m - 1, 2}, {1, 1}}));
  term(true, from_runs({{m + 2, 1}, {m, k - 2}, {m - 2, 1}}));
  term(true, from_runs({{m + 1, 1}, {m, k - 2}, {m - 2, 1}, {1, 1}}));
  term(m >= 4, from_runs({{m, k - 1}, {m - 2, 1}, {2, 1}}));
  return out;
}

/// Coefficient of s_nu in s_{(n-p,p)} * s_{(n-s,1^s)}, for n - s >= 2p - 1.
inline int hook_coeff(int n, int p, int s, const Partition& nu) {
  if (nu.size() != n) throw DomainError("nu must be a partition of n");
  if (s < 1 || s > n - 1) throw DomainError("hook_coeff needs 1 <= s <= n-1");
  if (p < 0 || 2 * p > n) throw DomainError("need 0 <= 2p <= n");
  if (n - s < 2 * p - 1) throw DomainError("hook_coeff needs n - s >= 2p - 1");
  using detail::chi;
  using detail::from_runs;
  using detail::min_of;

  if (p == 0) return chi(nu == *from_runs({{n - s, 1}, {1, s}}));
  if (p == 1) {
    // The last four terms need a first-row box left after removing one.
    std::vector<std::optional<Partition>> terms{from_runs({{n - s + 1, 1}, {1, s - 1}})};
    if (n - s >= 2) {
      terms.push_back(from_runs({{n - s, 1}, {2, 1}, {1, s - 2}}));
      terms.push_back(from_runs({{n - s, 1}, {1, s}}));
      terms.push_back(from_runs({{n - s - 1, 1}, {2, 1}, {1, s - 1}}));
      terms.push_back(from_runs({{n - s - 1, 1}, {1, s + 1}}));
    }
    int c = 0;
    for (const auto& t : terms) c += chi(t && *t == nu);
    return c;
  }

  const int v1 = nu[0];
  const int v2 = nu[1];
  if (v2 <= 1) {
    if (v1 == n - s) return s >= p ? 2 : (s == p - 1 ? 1 : 0);
    if (v1 == n - s - 1) return chi(s >= p - 1);
    if (v1 == n - s + 1) return chi(s >= p);
    return 0;
  }

  // Double hook (v1, v2, 2^i, 1^j).
  int i = 0;
  for (int r = 2; r < nu.length(); ++r) {
    if (nu[r] > 2) return 0;
    if (nu[r] == 2) ++i;
  }
  const int d = v1 - (n - s - v2);  // offset of v1 from n-s-v2
  auto in = [&](int hi) { return chi(0 <= i && i <= hi); };

  if (v2 <= p - 1) {
    switch (d) {
      case 0: return in(min_of({s - p + v2, p - v2}));
      case 1:
        return in(min_of({s - p + v2, p - v2 - 1})) + in(min_of({s - p + v2 - 1, p - v2})) +
               in(min_of({s - p + v2 - 2, p - v2 + 1}));
      case 2:
        return in(min_of({s - p + v2 - 1, p - v2 - 1})) + in(min_of({s - p + v2 - 2, p - v2})) +
               in(min_of({s - p + v2 - 3, p - v2 + 1}));
      case 3: return in(min_of({s - p + v2 - 3, p - v2}));
      default: return 0;
    }
  }
  const bool wide = n - s >= 2 * p;
  if (v2 == p) {
    switch (d) {
      case 0: return chi(wide && i == 0);
      case 1:
        if (wide && i == 0 && s >= 2) return 2;
        return chi((wide && i == 0 && s == 1) || (n - s == 2 * p - 1 && i == 0 && s >= 2) || (i == 1 && s >= 3));
      case 2:
        if (s >= 3 && i == 0) return 2;
        return chi((s == 2 && i == 0) || (s >= 4 && i == 1));
      case 3: return chi(s >= 3 && i == 0);
      default: return 0;
    }
  }
  if (v2 == p + 1) {
    if (v1 == n - s - p) return chi(wide && i == 0 && s >= 1);
    if (v1 == n - s - p + 1) return chi(wide && i == 0 && s >= 2);
    return 0;
  }
  return 0;
}

/// Intermediate quantities of the two-row target formula at a given l.
struct TwoRowTargetTerms {
  int m = 0, M = 0, m_prime = 0, M_prime = 0, b = 0, c = 0;
};

inline TwoRowTargetTerms tworow_target_terms(int p, const Partition& lambda, int t, int l) {
  using detail::chi;
  using detail::max_of;
  using detail::min_of;
  const int l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];
  const int e3 = std::max(0, l3 - l);
  TwoRowTargetTerms r;
  r.m = min_of({l1 - l2, t - l2 + p - 2 * l - e3 - l4, p - 2 * l - 1, l1 + l4 + p - 2 * l - t});
  r.M = max_of({0, t - l2 + p - 2 * l - l3});
  r.m_prime = min_of({l2 - std::max(l, l3), t - p + l - e3 - l4, l1 - 2 * p + 3 * l, l4 - t + l1 - p + l + l2});
  r.M_prime = max_of({0, t - p + l - l3, l2 - p + l});
  r.b = chi(l2 - p + 2 * l + e3 + l4 <= t && t <= l2 + l3 - 1);
  r.c = chi(l1 - std::max(p - l, l2) >= p - 2 * l) *
        chi(p - l + std::max(0, l2 - p + l) + e3 + l4 <= t && t <= l2 + l3 + p - 2 * l - e3);
  return r;
}

/// Coefficient of s_{(n-t,t)} in s_{(n-p,p)} * s_lambda, for lambda_1 >= 2p - 1.
inline int tworow_target_coeff(int n, int p, const Partition& lambda, int t) {
  if (lambda.size() != n) throw DomainError("lambda must be a partition of n");
  if (p < 1 || 2 * p > n) throw DomainError("need 1 <= p and 2p <= n");
  if (t < 0 || 2 * t > n) throw DomainError("need 0 <= t <= n/2");
  if (lambda[0] < 2 * p - 1) throw DomainError("tworow_target_coeff needs lambda_1 >= 2p - 1");
  if (lambda.length() > 4) return 0;
  using detail::chi;
  using detail::min_of;
  const int l1 = lambda[0], l2 = lambda[1], l3 = lambda[2], l4 = lambda[3];

  int value = 0;
  if (p % 2 == 0)
    value += chi(l3 <= p / 2 && p / 2 <= std::min(t, l2)) * chi(l2 + l4 <= t && t <= std::min(l2 + l3, l1 + l4));
  const int top = min_of({(p + 1) / 2 - 1, t, l2, p - l3});
  for (int l = std::max(l4, p - l2); l <= top; ++l) {
    const auto k = tworow_target_terms(p, lambda, t, l);
    value += k.b * detail::window(k.m, k.M);
  }
  for (int l = l4; l <= top; ++l) {
    const auto k = tworow_target_terms(p, lambda, t, l);
    value += k.c * detail::window(k.m_prime, k.M_prime);
  }
  return value;
}

/// Bounds m_1..m_4 and M_1..M_4 of the two-row by two-row formula.
struct TwoRowTwoRowTerms {
  int m1 = 0, M1 = 0, m2 = 0, M2 = 0, m3 = 0, M3 = 0, m4 = 0, M4 = 0;
};

inline TwoRowTwoRowTerms tworow_tworow_terms(int n, int p, int s, int t) {
  using detail::ceil_div;
  using detail::floor_div;
  using detail::max_of;
  using detail::min_of;
  TwoRowTwoRowTerms r;
  r.m1 = std::min(t, floor_div(t - s + p, 2));
  r.M1 = max_of({0, p - s, ceil_div(t + s + p - n, 2)});
  r.m2 = std::min(s, floor_div(p + 1, 2) - 1);
  r.M2 = max_of({0, p - s, ceil_div(2 * s + p - n, 2)});
  r.m3 = std::min(s, floor_div(p + s - t, 2));
  r.M3 = r.M1;
  r.m4 = min_of({s, p - s, floor_div(p + s - t, 2)});
  r.M4 = max_of({0, p - t, ceil_div(t + s + p - n, 2), ceil_div(2 * p + s - n, 3)});
  return r;
}

/// Coefficient of s_{(n-t,t)} in s_{(n-p,p)} * s_{(n-s,s)}, for n - s >= 2p - 1.
inline int tworow_tworow_coeff(int n, int p, int s, int t) {
  if (p < 1 || 2 * p > n) throw DomainError("need 1 <= p and 2p <= n");
  if (s < 0 || 2 * s > n || t < 0 || 2 * t > n) throw DomainError("need 0 <= s, t <= n/2");
  if (n - s < 2 * p - 1) throw DomainError("tworow_tworow_coeff needs n - s >= 2p - 1");
  using detail::chi;
  using detail::window;
  const auto k = tworow_tworow_terms(n, p, s, t);
  if (t < s) return window(k.m1, k.M1);
  if (t == s) return window(k.m2, k.M2) + chi(p % 2 == 0) * chi(p / 2 <= s);
  // [M3, m3] and [M4, m4] are ranges of the same index l; an l in both counts once.
  return window(k.m3, k.M3) + window(k.m4, k.M4) - window(std::min(k.m3, k.m4), std::max(k.M3, k.M4));
}

enum class SequenceSource { closed_form, kronecker };

inline std::string to_string(SequenceSource s) {
  return s == SequenceSource::closed_form ? "closed_form" : "kronecker";
}

struct SequenceEntry {
  int t = 0;
  BigInt value = 0;
  SequenceSource source = SequenceSource::closed_form;
};

struct TwoRowSequence {
  std::vector<SequenceEntry> entries;
  bool unimodal = true;
};

/// True when the sequence never strictly rises after a strict fall.
template <typename Range>
bool is_unimodal(const Range& values) {
  bool fell = false;
  auto it = std::begin(values);
  if (it == std::end(values)) return true;
  auto prev = *it;
  for (++it; it != std::end(values); ++it) {
    if (*it < prev) fell = true;
    else if (*it > prev && fell) return false;
    prev = *it;
  }
  return true;
}

/// Coefficients of s_{(n-t,t)} in s_{(n-p,p)} * s_{(n-s,s)} for t = s-p .. s+p.
/// The closed form is used where n - t >= 2s - 1; other entries are computed
/// from Kronecker tableaux and flagged.
inline TwoRowSequence tworow_tworow_sequence(int n, int p, int s) {
  if (p > s - 1) throw DomainError("tworow_tworow_sequence needs p <= s - 1");
  if (p < 1 || n - s < 2 * p - 1 || n - p < 2 * s - 1)
    throw DomainError("tworow_tworow_sequence needs p >= 1, n - s >= 2p - 1, n - p >= 2s - 1");
  TwoRowSequence seq;
  const Partition lambda{n - s, s};
  std::vector<BigInt> values;
  for (int t = s - p; t <= s + p; ++t) {
    SequenceEntry e;
    e.t = t;
    if (n - t >= 2 * s - 1 && 2 * t <= n) {
      e.value = tworow_tworow_coeff(n, p, s, t);
    } else {
      e.source = SequenceSource::kronecker;
      e.value = 2 * t <= n ? kron_coeff(n, p, lambda, Partition{n - t, t}).value : BigInt(0);
    }
    values.push_back(e.value);
    seq.entries.push_back(std::move(e));
  }
  seq.unimodal = is_unimodal(values);
  return seq;
}

/// Bounds M_1, m_1, M_2, m_2 of the formula for nu = (nu_1, nu_2, nu_3, nu_3).
struct NuDoublePairTerms {
  int M1 = 0, m1 = 0, M2 = 0, m2 = 0;
};

inline NuDoublePairTerms nu_double_pair_terms(int n, int p, int s, const Partition& nu) {
  using detail::ceil_div;
  using detail::floor_div;
  using detail::max_of;
  using detail::min_of;
  const int v1 = nu[0], v2 = nu[1], v3 = nu[2];
  NuDoublePairTerms r;
  r.M1 = max_of({p - v1, v3, p - s + v3, ceil_div(2 * p - v1, 3), ceil_div(p + s - v3 - v1, 2)});
  r.m1 = min_of({floor_div(p + 1, 2) - 1, v2, s - v3, floor_div(v2 + v3 + p - s, 2)});
  r.M2 = max_of({v3, p - v2, ceil_div(p + 2 * s - n, 2), ceil_div(p + s - v3 - v1, 2)});
  r.m2 = min_of({floor_div(p + 1, 2) - 1, v2, s - v3, floor_div(s + p - v2 - v3, 2)});
  return r;
}

/// Coefficient of s_nu in s_{(n-p,p)} * s_{(n-s,s)} for nu = (nu_1, nu_2, nu_3, nu_3).
inline int nu_double_pair_coeff(int n, int p, int s, const Partition& nu) {
  if (nu.size() != n || nu.length() != 4 || nu[2] != nu[3])
    throw DomainError("nu must have the form (nu1, nu2, nu3, nu3) with nu3 >= 1");
  if (p < 0 || s < 0 || n < 2 * p || n < 2 * s || n - s < 2 * p - 1)
    throw DomainError("nu_double_pair_coeff needs n >= 2p, n >= 2s, n - s >= 2p - 1");
  if (p <= 1) return 0;
  using detail::chi;
  const int v2 = nu[1], v3 = nu[2];
  const auto k = nu_double_pair_terms(n, p, s, nu);
  int value = 0;
  if (p % 2 == 0) value += chi(v2 + v3 == s) * chi(v3 <= p / 2 && p / 2 <= v2);
  value += chi(v2 + v3 >= s) * detail::window(k.m2, k.M2);
  value += chi(v2 + v3 <= s - 1) * detail::window(k.m1, k.M1);
  return value;
}

}  // namespace kron
