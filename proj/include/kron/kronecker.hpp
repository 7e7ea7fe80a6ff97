#pragma once

#include <optional>
#include <string>

#include "kron/expansion.hpp"
#include "kron/oracle.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

namespace kron {

enum class KronMethod {
  kronecker_tableaux,            // lambda_1 >= 2p-1
  kronecker_tableaux_conjugate,  // l(lambda) >= 2p-1, computed on lambda'
  oracle_fallback,               // lambda fits in the (2p-2) square
  oracle_signed_sum,
  oracle_character,
};

inline std::string to_string(KronMethod m) {
  switch (m) {
    case KronMethod::kronecker_tableaux: return "kronecker_tableaux";
    case KronMethod::kronecker_tableaux_conjugate: return "kronecker_tableaux_conjugate";
    case KronMethod::oracle_fallback: return "oracle_fallback";
    case KronMethod::oracle_signed_sum: return "oracle_signed_sum";
    case KronMethod::oracle_character: return "oracle_character";
  }
  return "unknown";
}

inline bool is_tableau_route(KronMethod m) {
  return m == KronMethod::kronecker_tableaux || m == KronMethod::kronecker_tableaux_conjugate;
}

struct KronResult {
  BigInt value = 0;
  KronMethod method = KronMethod::kronecker_tableaux;
  std::optional<BigInt> upper_bound;
};

struct KronExpansion {
  SchurExpansion expansion;
  KronMethod method = KronMethod::kronecker_tableaux;
};

namespace detail {

/// Extra condition distinguishing Kronecker tableaux among alpha-lattice fillings
/// of lambda/alpha. Grid indices are 0-based.
inline bool kronecker_condition(const std::vector<std::vector<int>>& grid, const Partition& lambda,
                                const Partition& alpha) {
  const int a1 = alpha[0];
  const int a2 = alpha[1];
  if (a1 == a2) return true;
  // A 1 in row 2, column alpha_1 (1-based) means exactly a1-a2 ones in that row.
  if (lambda[1] >= a1 && grid[1][a1 - 1] == 1) return true;
  int twos = 0;
  for (int c = a1; c < lambda[0]; ++c)
    if (grid[0][c] == 2) ++twos;
  return twos == a1 - a2;
}

inline auto kronecker_acceptor(const Partition& lambda, const Partition& alpha) {
  return [&lambda, &alpha](const LatticeFiller& f) { return kronecker_condition(f.grid(), lambda, alpha); };
}

inline KronMethod choose_route(int p, const Partition& lambda) {
  if (lambda[0] >= 2 * p - 1) return KronMethod::kronecker_tableaux;
  if (lambda.length() >= 2 * p - 1) return KronMethod::kronecker_tableaux_conjugate;
  return KronMethod::oracle_fallback;
}

}  // namespace detail

/// k^lambda_{alpha nu}: number of Kronecker tableaux of shape lambda/alpha and type nu/alpha.
inline BigInt kronecker_tableau_count(const Partition& lambda, const Partition& alpha, const Partition& nu) {
  if (nu.size() != lambda.size() || !contains(alpha, lambda) || !contains(alpha, nu)) return 0;
  if (alpha.empty()) return count_ssyt_alpha_lattice(SkewShape(lambda), CompositionType(nu.parts()));
  return detail::count_lattice_fillings(SkewShape(lambda, alpha), CompositionType::difference(nu, alpha), alpha,
                                        detail::kronecker_acceptor(lambda, alpha));
}

/// All nu with their Kronecker tableau counts k^lambda_{alpha nu}.
inline SchurExpansion kronecker_tableau_expansion(const Partition& lambda, const Partition& alpha) {
  if (!contains(alpha, lambda)) throw DomainError("alpha must be contained in lambda");
  if (alpha.empty()) return SchurExpansion::single(lambda);
  return detail::expand_lattice_fillings(SkewShape(lambda, alpha), alpha, detail::kronecker_acceptor(lambda, alpha));
}

/// Sum over alpha |- p inside lambda and nu of k^lambda_{alpha nu}.
inline BigInt kron_upper_bound(int p, const Partition& lambda, const Partition& nu) {
  BigInt sum = 0;
  if (p < 0 || lambda.size() != nu.size()) return sum;
  for_each_partition(p, {.inside = intersect(lambda, nu)},
                     [&](const Partition& a) { sum += kronecker_tableau_count(lambda, a, nu); });
  return sum;
}

namespace detail {

inline SchurExpansion tableau_route_expansion(int p, const Partition& lambda) {
  SchurExpansion out(lambda.size());
  for_each_partition(p, {.inside = lambda}, [&](const Partition& a) { out += kronecker_tableau_expansion(lambda, a); });
  return out;
}

}  // namespace detail

/// Schur expansion of s_{(n-p,p)} * s_lambda.
inline KronExpansion kron_expand_tworow(int n, int p, const Partition& lambda) {
  detail::check_tworow_args(n, p, lambda);
  if (p == 0) return {SchurExpansion::single(lambda), KronMethod::kronecker_tableaux};
  const KronMethod route = detail::choose_route(p, lambda);
  switch (route) {
    case KronMethod::kronecker_tableaux:
      return {detail::tableau_route_expansion(p, lambda), route};
    case KronMethod::kronecker_tableaux_conjugate:
      return {detail::tableau_route_expansion(p, conjugate(lambda)).conjugated(), route};
    default:
      return {oracle_tworow_signed_sum(n, p, lambda), KronMethod::oracle_fallback};
  }
}

/// Coefficient of s_nu in s_{(n-p,p)} * s_lambda, with the tableau upper bound.
inline KronResult kron_coeff(int n, int p, const Partition& lambda, const Partition& nu) {
  detail::check_tworow_args(n, p, lambda);
  if (nu.size() != n) throw DomainError("nu must be a partition of n");
  KronResult r;
  r.upper_bound = kron_upper_bound(p, lambda, nu);
  if (p == 0) {
    r.value = lambda == nu ? 1 : 0;
    return r;
  }
  r.method = detail::choose_route(p, lambda);
  if (r.method == KronMethod::oracle_fallback) {
    r.value = oracle_tworow_signed_coeff(n, p, lambda, nu);
    return r;
  }
  const bool conj = r.method == KronMethod::kronecker_tableaux_conjugate;
  const Partition lam = conj ? conjugate(lambda) : lambda;
  const Partition target = conj ? conjugate(nu) : nu;
  const Partition common = intersect(lam, target);
  if (common.size() < p || target.length() > lam.length() + std::min(p, lam.length())) return r;
  for_each_partition(p, {.inside = common}, [&](const Partition& a) { r.value += kronecker_tableau_count(lam, a, target); });
  return r;
}

}  // namespace kron
