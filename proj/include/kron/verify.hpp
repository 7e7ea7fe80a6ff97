#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "kron/formulas.hpp"
#include "kron/kronecker.hpp"
#include "kron/oracle.hpp"

namespace kron {

/// Worker count from KRON_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("KRON_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return static_cast<unsigned>(w);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(0..count-1) on a pool of workers and returns the results in index
/// order, so the outcome does not depend on scheduling.
template <typename F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct VerifyReport {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // capped; see mismatch_count
  std::size_t mismatch_count = 0;

  bool ok() const { return mismatch_count == 0; }
};

namespace detail {

struct CaseOutcome {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;
};

inline VerifyReport reduce(std::string suite, const std::vector<CaseOutcome>& parts) {
  constexpr std::size_t kKeep = 20;
  VerifyReport r;
  r.suite = std::move(suite);
  for (const auto& p : parts) {
    r.checked += p.checked;
    r.mismatch_count += p.mismatches.size();
    for (const auto& m : p.mismatches)
      if (r.mismatches.size() < kKeep) r.mismatches.push_back(m);
  }
  return r;
}

struct GridCase {
  int n;
  int p;
  Partition lambda;
};

/// All (n, p, lambda) with lambda |- n, 2p <= n, p <= pmax, n <= nmax.
inline std::vector<GridCase> tworow_grid(int nmin, int nmax, int pmin, int pmax) {
  std::vector<GridCase> cases;
  for (int n = std::max(nmin, 1); n <= nmax; ++n)
    for (int p = pmin; p <= pmax && 2 * p <= n; ++p)
      for (auto& lambda : enumerate_partitions(n)) cases.push_back({n, p, std::move(lambda)});
  return cases;
}

inline std::string describe(const GridCase& c) {
  return "n=" + std::to_string(c.n) + " p=" + std::to_string(c.p) + " lambda=(" + to_string(c.lambda) + ")";
}

inline void compare_expansions(const SchurExpansion& got, const SchurExpansion& want, int n, const std::string& what,
                               CaseOutcome& out) {
  for (const auto& nu : enumerate_partitions(n)) {
    ++out.checked;
    const BigInt a = got.coefficient(nu);
    const BigInt b = want.coefficient(nu);
    if (a != b) out.mismatches.push_back(what + " nu=(" + to_string(nu) + "): " + a.str() + " vs " + b.str());
  }
}

}  // namespace detail

/// Kronecker-tableaux expansion vs the signed-sum oracle on every lambda where
/// a tableau route applies.
inline VerifyReport verify_theorem(int nmax, int pmax) {
  const auto cases = detail::tworow_grid(1, nmax, 1, pmax);
  auto parts = parallel_map(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    detail::CaseOutcome out;
    if (c.lambda[0] < 2 * c.p - 1 && c.lambda.length() < 2 * c.p - 1) return out;
    const auto got = kron_expand_tworow(c.n, c.p, c.lambda);
    const auto want = oracle_tworow_signed_sum(c.n, c.p, c.lambda);
    detail::compare_expansions(got.expansion, want, c.n, detail::describe(c), out);
    return out;
  });
  return detail::reduce("theorem", parts);
}

/// Signed-sum oracle vs character oracle for 0 <= p <= min(pmax, n/2).
inline VerifyReport verify_oracles(int nmax, int pmax) {
  const auto cases = detail::tworow_grid(1, nmax, 0, pmax);
  auto parts = parallel_map(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    detail::CaseOutcome out;
    const auto a = oracle_tworow_signed_sum(c.n, c.p, c.lambda);
    const auto b = oracle_character_kron(Partition{c.n - c.p, c.p}, c.lambda);
    detail::compare_expansions(a, b, c.n, detail::describe(c), out);
    return out;
  });
  return detail::reduce("oracles", parts);
}

/// Closed formulas vs the Kronecker coefficients on their stated domains.
/// nu_double_pair_coeff is additionally checked at p = pmax + 1.
inline VerifyReport verify_formulas(int nmax, int pmax) {
  const auto cases = detail::tworow_grid(2, nmax, 1, pmax + 1);
  auto parts = parallel_map(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const int n = c.n, p = c.p;
    const Partition& lambda = c.lambda;
    detail::CaseOutcome out;
    auto check = [&](const std::string& name, const Partition& nu, long formula, const BigInt& truth) {
      ++out.checked;
      if (BigInt(formula) != truth)
        out.mismatches.push_back(name + " " + detail::describe(c) + " nu=(" + to_string(nu) +
                                 "): " + std::to_string(formula) + " vs " + truth.str());
    };
    const bool hook = is_hook(lambda) && lambda.length() >= 2;
    const bool two_row = lambda.length() <= 2;
    const bool target = lambda.length() <= 4 && lambda[0] >= 2 * p - 1;
    const bool in_pmax = p <= pmax;
    const int s_hook = lambda.length() - 1;
    const int s_row = lambda[1];
    const bool want_hook = in_pmax && hook && n - s_hook >= 2 * p - 1;
    const bool want_target = in_pmax && target;
    const bool want_nu = two_row && n - s_row >= 2 * p - 1;
    if (!want_hook && !want_target && !want_nu) return out;
    const SchurExpansion truth = kron_expand_tworow(n, p, lambda).expansion;
    if (want_hook)
      for (const auto& nu : enumerate_partitions(n)) check("hook", nu, hook_coeff(n, p, s_hook, nu), truth.coefficient(nu));
    if (want_target)
      for (int t = 0; 2 * t <= n; ++t) {
        const Partition nu{n - t, t};
        check("tworow_target", nu, tworow_target_coeff(n, p, lambda, t), truth.coefficient(nu));
        if (two_row && n - s_row >= 2 * p - 1)
          check("tworow_tworow", nu, tworow_tworow_coeff(n, p, s_row, t), truth.coefficient(nu));
      }
    if (want_nu)
      for_each_partition(n, {.max_length = 4}, [&](const Partition& nu) {
        if (nu.length() == 4 && nu[2] == nu[3])
          check("nu_double_pair", nu, nu_double_pair_coeff(n, p, s_row, nu), truth.coefficient(nu));
      });
    return out;
  });
  return detail::reduce("formulas", parts);
}

}  // namespace kron
