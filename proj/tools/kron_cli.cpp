// Command-line front end for the kron library.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kron/kron.hpp"
#include "output.hpp"

namespace {

using kron::BigInt;
using kron::Partition;
using kron::cli::Json;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct Record {
  Json json = Json::object();
  std::ostringstream text;
  int exit_code = 0;
};

Partition partition_arg(const std::string& s) { return kron::parse_partition(s); }

void put_header(Record& r, int n, int p, const Partition& lambda) {
  r.json["n"] = n;
  r.json["p"] = p;
  r.json["lambda"] = kron::cli::to_json(lambda);
}

void put_expansion(Record& r, const kron::SchurExpansion& e) {
  r.json["terms"] = kron::cli::to_json(e);
  kron::cli::print_terms(r.text, e);
}

void put_single(Record& r, const Partition& nu, const BigInt& value) {
  r.json["terms"] = Json::array({Json{{"nu", kron::cli::to_json(nu)}, {"coeff", value.str()}}});
  r.text << "(" << kron::to_string(nu) << ") : " << value.str() << "\n";
}

// ---- kron ----

struct KronArgs {
  int n = 0;
  int p = 0;
  std::string lambda;
  std::string nu;
  std::string method = "auto";
};

Record run_kron(const KronArgs& a) {
  Record r;
  const Partition lambda = partition_arg(a.lambda);
  const std::optional<Partition> nu = a.nu.empty() ? std::nullopt : std::optional(partition_arg(a.nu));
  put_header(r, a.n, a.p, lambda);
  kron::detail::check_tworow_args(a.n, a.p, lambda);
  if (nu && nu->size() != a.n) throw kron::DomainError("nu must be a partition of n");

  std::string method;
  if (a.method == "auto" || a.method == "theorem") {
    if (a.method == "theorem" && a.p > 0 && lambda[0] < 2 * a.p - 1 && lambda.length() < 2 * a.p - 1)
      throw kron::DomainError("no Kronecker tableaux route: lambda fits in the (2p-2) square");
    if (nu) {
      const auto res = kron::kron_coeff(a.n, a.p, lambda, *nu);
      method = kron::to_string(res.method);
      put_single(r, *nu, res.value);
      r.json["upper_bound"] = res.upper_bound->str();
    } else {
      const auto res = kron::kron_expand_tworow(a.n, a.p, lambda);
      method = kron::to_string(res.method);
      put_expansion(r, res.expansion);
    }
  } else if (a.method == "oracle-signed") {
    method = kron::to_string(kron::KronMethod::oracle_signed_sum);
    if (nu) put_single(r, *nu, kron::oracle_tworow_signed_coeff(a.n, a.p, lambda, *nu));
    else put_expansion(r, kron::oracle_tworow_signed_sum(a.n, a.p, lambda));
  } else {
    method = kron::to_string(kron::KronMethod::oracle_character);
    const auto e = kron::oracle_character_kron(Partition{a.n - a.p, a.p}, lambda);
    if (nu) put_single(r, *nu, e.coefficient(*nu));
    else put_expansion(r, e);
  }
  r.json["method"] = method;
  r.text << "method: " << method << "\n";
  return r;
}

// ---- skew / lr / positivity ----

Record run_skew(const std::string& l, const std::string& m) {
  Record r;
  const Partition lambda = partition_arg(l), mu = partition_arg(m);
  r.json["lambda"] = kron::cli::to_json(lambda);
  r.json["mu"] = kron::cli::to_json(mu);
  put_expansion(r, kron::skew_expand(lambda, mu));
  return r;
}

Record run_lr(const std::string& l, const std::string& m, const std::string& v) {
  Record r;
  const Partition lambda = partition_arg(l), mu = partition_arg(m), nu = partition_arg(v);
  const BigInt c = kron::lr_coefficient(lambda, mu, nu);
  r.json["lambda"] = kron::cli::to_json(lambda);
  r.json["mu"] = kron::cli::to_json(mu);
  r.json["nu"] = kron::cli::to_json(nu);
  r.json["coeff"] = c.str();
  r.text << c.str() << "\n";
  return r;
}

Record run_positivity(const std::string& l, const std::string& a) {
  Record r;
  const Partition lambda = partition_arg(l), alpha = partition_arg(a);
  const auto res = kron::positivity_diff(lambda, alpha);
  r.json["lambda"] = kron::cli::to_json(lambda);
  r.json["alpha"] = kron::cli::to_json(alpha);
  r.json["schur_positive"] = res.schur_positive;
  put_expansion(r, res.expansion);
  r.text << "schur_positive: " << (res.schur_positive ? "true" : "false") << "\n";
  return r;
}

// ---- mfree ----

Json verdict_json(const kron::MfreeVerdict& v) {
  Json j{{"multiplicity_free", v.multiplicity_free}, {"source", kron::to_string(v.source)}};
  if (v.witness) j["witness"] = Json{{"nu", kron::cli::to_json(v.witness->first)}, {"coeff", v.witness->second.str()}};
  return j;
}

void verdict_text(std::ostream& os, const kron::MfreeVerdict& v) {
  os << (v.multiplicity_free ? "true" : "false") << " (" << kron::to_string(v.source) << ")";
  if (v.witness) os << " witness (" << kron::to_string(v.witness->first) << ") : " << v.witness->second.str();
  os << "\n";
}

Record run_mfree(int n, int p, const std::string& l, bool sweep) {
  Record r;
  r.json["n"] = n;
  r.json["p"] = p;
  if (!sweep) {
    if (l.empty()) throw kron::ParseError("mfree needs a partition or --sweep");
    const Partition lambda = partition_arg(l);
    r.json["lambda"] = kron::cli::to_json(lambda);
    const auto v = kron::is_multiplicity_free(n, p, lambda);
    r.json.update(verdict_json(v));
    verdict_text(r.text, v);
    return r;
  }
  const auto lambdas = kron::enumerate_partitions(n);
  const auto verdicts =
      kron::parallel_map(lambdas.size(), [&](std::size_t i) { return kron::is_multiplicity_free(n, p, lambdas[i]); });
  Json rows = Json::array();
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    Json row{{"lambda", kron::cli::to_json(lambdas[i])}};
    row.update(verdict_json(verdicts[i]));
    rows.push_back(row);
    r.text << "(" << kron::to_string(lambdas[i]) << ") : ";
    verdict_text(r.text, verdicts[i]);
  }
  r.json["verdicts"] = rows;
  return r;
}

// ---- formula ----

// Outside a formula's domain the coefficient comes from kron_coeff instead,
// and the record says so.
Record run_formula_value(const std::string& name, Json inputs, const std::function<int()>& formula,
                         const std::function<kron::KronResult()>& fallback) {
  Record r;
  r.json["formula"] = name;
  r.json.update(inputs);
  std::string value, source = "closed_form";
  try {
    value = std::to_string(formula());
  } catch (const kron::DomainError& e) {
    const auto res = fallback();
    value = res.value.str();
    source = kron::to_string(res.method);
    std::cerr << "note: " << e.what() << "; using " << source << "\n";
  }
  r.json["coeff"] = value;
  r.json["source"] = source;
  r.text << value << " (" << source << ")\n";
  return r;
}

Partition hook_shape(int n, int s) {
  if (s < 0 || s >= n) throw kron::DomainError("need 0 <= s < n");
  std::vector<int> rows{n - s};
  rows.insert(rows.end(), s, 1);
  return Partition(rows);
}

Record run_seq(int n, int p, int s) {
  Record r;
  const auto seq = kron::tworow_tworow_sequence(n, p, s);
  r.json["formula"] = "seq";
  r.json["n"] = n;
  r.json["p"] = p;
  r.json["s"] = s;
  Json entries = Json::array();
  for (const auto& e : seq.entries) {
    entries.push_back(Json{{"t", e.t}, {"coeff", e.value.str()}, {"source", kron::to_string(e.source)}});
    r.text << "t=" << e.t << " : " << e.value.str() << " (" << kron::to_string(e.source) << ")\n";
  }
  r.json["entries"] = entries;
  r.json["unimodal"] = seq.unimodal;
  r.text << "unimodal: " << (seq.unimodal ? "true" : "false") << "\n";
  return r;
}

Record run_expansion_formula(const std::string& name, Json inputs, const kron::SchurExpansion& e) {
  Record r;
  r.json["formula"] = name;
  for (auto& [k, v] : inputs.items()) r.json[k] = v;
  put_expansion(r, e);
  return r;
}

// ---- verify ----

Record run_verify(int nmax, int pmax, const std::string& suite) {
  Record r;
  kron::VerifyReport rep;
  if (suite == "theorem") rep = kron::verify_theorem(nmax, pmax);
  else if (suite == "oracles") rep = kron::verify_oracles(nmax, pmax);
  else rep = kron::verify_formulas(nmax, pmax);
  r.json["suite"] = rep.suite;
  r.json["nmax"] = nmax;
  r.json["pmax"] = pmax;
  r.json["checked"] = rep.checked;
  r.json["mismatches"] = rep.mismatch_count;
  r.json["first_mismatches"] = rep.mismatches;
  r.text << rep.suite << ": " << rep.checked << " checked, " << rep.mismatch_count << " mismatches\n";
  for (const auto& m : rep.mismatches) r.text << "  " << m << "\n";
  r.text << (rep.ok() ? "all equal" : "MISMATCH") << "\n";
  if (!rep.ok()) r.exit_code = kExitVerify;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker coefficients of two-row shapes by Kronecker tableaux"};
  app.require_subcommand(1);
  bool json = false;
  bool timing = false;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_flag("--timing", timing, "Report wall time on stderr");

  std::function<Record()> action;

  KronArgs ka;
  auto* kron_cmd = app.add_subcommand("kron", "Expand s_(n-p,p) * s_lambda, or one coefficient with --nu");
  kron_cmd->add_option("n", ka.n)->required();
  kron_cmd->add_option("p", ka.p)->required();
  kron_cmd->add_option("lambda", ka.lambda)->required();
  kron_cmd->add_option("--nu", ka.nu, "Single target partition");
  kron_cmd->add_option("--method", ka.method)
      ->check(CLI::IsMember({"auto", "theorem", "oracle-signed", "oracle-char"}));
  kron_cmd->callback([&] { action = [&] { return run_kron(ka); }; });

  std::string s1, s2, s3;
  auto* skew_cmd = app.add_subcommand("skew", "Schur expansion of s_(lambda/mu)");
  skew_cmd->add_option("lambda", s1)->required();
  skew_cmd->add_option("mu", s2)->required();
  skew_cmd->callback([&] { action = [&] { return run_skew(s1, s2); }; });

  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
  lr_cmd->add_option("lambda", s1)->required();
  lr_cmd->add_option("mu", s2)->required();
  lr_cmd->add_option("nu", s3)->required();
  lr_cmd->callback([&] { action = [&] { return run_lr(s1, s2, s3); }; });

  auto* pos_cmd = app.add_subcommand("positivity", "s_alpha s_(lambda/alpha) - s_alpha- s_(lambda/alpha-)");
  pos_cmd->add_option("lambda", s1)->required();
  pos_cmd->add_option("alpha", s2)->required();
  pos_cmd->callback([&] { action = [&] { return run_positivity(s1, s2); }; });

  int mn = 0, mp = 0;
  std::vector<int> sweep;
  auto* mfree_cmd = app.add_subcommand("mfree", "Is s_(n-p,p) * s_lambda multiplicity free?");
  mfree_cmd->add_option("n", mn);
  mfree_cmd->add_option("p", mp);
  mfree_cmd->add_option("lambda", s1);
  mfree_cmd->add_option("--sweep", sweep, "n p: decide for every lambda of n")->expected(2);
  mfree_cmd->callback([&] {
    action = [&] {
      if (!sweep.empty()) return run_mfree(sweep[0], sweep[1], "", true);
      return run_mfree(mn, mp, s1, false);
    };
  });

  auto* formula_cmd = app.add_subcommand("formula", "Closed formulas");
  formula_cmd->require_subcommand(1);
  int fn = 0, fp = 0, fs = 0, ft = 0;
  auto* hook_cmd = formula_cmd->add_subcommand("hook", "Coefficient of nu in s_(n-p,p) * s_(n-s,1^s)");
  hook_cmd->add_option("n", fn)->required();
  hook_cmd->add_option("p", fp)->required();
  hook_cmd->add_option("s", fs)->required();
  hook_cmd->add_option("nu", s1)->required();
  hook_cmd->callback([&] {
    action = [&] {
      const Partition nu = partition_arg(s1);
      return run_formula_value("hook", Json{{"n", fn}, {"p", fp}, {"s", fs}, {"nu", kron::cli::to_json(nu)}},
                               [&] { return kron::hook_coeff(fn, fp, fs, nu); },
                               [&] { return kron::kron_coeff(fn, fp, hook_shape(fn, fs), nu); });
    };
  });
  auto* tworow_cmd = formula_cmd->add_subcommand("tworow", "Coefficient of (n-t,t) in s_(n-p,p) * s_lambda");
  tworow_cmd->add_option("n", fn)->required();
  tworow_cmd->add_option("p", fp)->required();
  tworow_cmd->add_option("lambda", s1)->required();
  tworow_cmd->add_option("t", ft)->required();
  tworow_cmd->callback([&] {
    action = [&] {
      const Partition lambda = partition_arg(s1);
      return run_formula_value("tworow",
                               Json{{"n", fn}, {"p", fp}, {"lambda", kron::cli::to_json(lambda)}, {"t", ft}},
                               [&] { return kron::tworow_target_coeff(fn, fp, lambda, ft); },
                               [&] { return kron::kron_coeff(fn, fp, lambda, Partition{fn - ft, ft}); });
    };
  });
  auto* seq_cmd = formula_cmd->add_subcommand("seq", "Coefficients of (n-t,t), t = s-p..s+p, in s_(n-p,p) * s_(n-s,s)");
  seq_cmd->add_option("n", fn)->required();
  seq_cmd->add_option("p", fp)->required();
  seq_cmd->add_option("s", fs)->required();
  seq_cmd->callback([&] { action = [&] { return run_seq(fn, fp, fs); }; });
  auto* nu_cmd = formula_cmd->add_subcommand("nu334", "Coefficient of (nu1,nu2,nu3,nu3) in s_(n-p,p) * s_(n-s,s)");
  nu_cmd->add_option("n", fn)->required();
  nu_cmd->add_option("p", fp)->required();
  nu_cmd->add_option("s", fs)->required();
  nu_cmd->add_option("nu", s1)->required();
  nu_cmd->callback([&] {
    action = [&] {
      const Partition nu = partition_arg(s1);
      return run_formula_value("nu334", Json{{"n", fn}, {"p", fp}, {"s", fs}, {"nu", kron::cli::to_json(nu)}},
                               [&] { return kron::nu_double_pair_coeff(fn, fp, fs, nu); },
                               [&] { return kron::kron_coeff(fn, fp, Partition{fn - fs, fs}, nu); });
    };
  });
  auto* rect_cmd = formula_cmd->add_subcommand("rect-p2", "s_(n-2,2) * s_(m^k)");
  rect_cmd->add_option("m", fn)->required();
  rect_cmd->add_option("k", fs)->required();
  rect_cmd->callback(
      [&] { action = [&] { return run_expansion_formula("rect-p2", Json{{"m", fn}, {"k", fs}}, kron::rect_p2_expand(fn, fs)); }; });
  auto* p1_cmd = formula_cmd->add_subcommand("p1", "s_(n-1,1) * s_lambda");
  p1_cmd->add_option("lambda", s1)->required();
  p1_cmd->callback([&] {
    action = [&] {
      const Partition lambda = partition_arg(s1);
      return run_expansion_formula("p1", Json{{"lambda", kron::cli::to_json(lambda)}}, kron::p1_expand(lambda));
    };
  });

  std::vector<int> grid{10, 3};
  std::string suite = "theorem";
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check computations over a parameter grid");
  verify_cmd->add_option("--grid", grid, "nmax pmax")->expected(2);
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"theorem", "formulas", "oracles"}));
  verify_cmd->callback([&] { action = [&] { return run_verify(grid[0], grid[1], suite); }; });

  for (auto* sub : {kron_cmd, skew_cmd, lr_cmd, pos_cmd, mfree_cmd, verify_cmd, hook_cmd, tworow_cmd, seq_cmd, nu_cmd,
                    rect_cmd, p1_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Record r = action();
    if (json) {
      std::string command;
      for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
        sub = sub->get_subcommands().front();
        command += (command.empty() ? "" : " ") + sub->get_name();
      }
      Json out{{"command", command}};
      out.update(r.json);
      std::cout << out.dump(2) << "\n";
    }
    else std::cout << r.text.str();
    if (timing)
      std::cerr << "elapsed: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                << " s\n";
    return r.exit_code;
  } catch (const kron::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const kron::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitVerify;
  }
}
