// Command line front end: verify | prove | discover | table | conjecture.
// Exit codes: 0 success/consistent, 1 argument error, 2 engine/oracle
// mismatch or conjecture counterexample.

#include <ctcong/classify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace ctcong;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Args {
  std::string family;
  u64 p = 0;
  u64 a = 1;
  u64 r = 1;
  i64 d = 0;
  u64 pmax = 50;
  u64 amax = 0;
  i64 dmax = 0;
  int modulus = 3;
  bool json = false;
  int jobs = 1;
};

void add_family_options(CLI::App* cmd, Args& args) {
  cmd->add_option("family", args.family, "family identifier");
  cmd->add_option("--family", args.family, "family identifier");
}

const FamilySpec& resolve_family(const Args& args) {
  if (args.family.empty())
    throw CLI::ValidationError("family", "missing family identifier");
  return family(args.family);
}

int run_verify(const Args& args) {
  const FamilySpec& f = resolve_family(args);
  Prime p(args.p);
  const SymResidue res = oracle_sum(f, p, args.a, args.r, args.d);
  const u64 terms = oracle_term_count(f, p, args.a, args.r);
  if (args.json) {
    ordered_json j;
    j["family"] = f.name;
    j["p"] = args.p;
    j["a"] = args.a;
    j["r"] = args.r;
    j["d"] = args.d;
    j["residue"] = res.value;
    j["terms"] = terms;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.value << "\n";
    std::cout << "(oracle sum, " << terms << " terms)\n";
  }
  return 0;
}

int run_prove(const Args& args) {
  const FamilySpec& f = resolve_family(args);
  Prime p(args.p);

  std::optional<SymResidue> engine;
  std::string engine_note;
  if (f.kernel) {
    try {
      engine = extract(with_r_d(*f.kernel, args.r, args.d), p, args.a);
    } catch (const GuardViolation& e) {
      engine_note = e.what();
    }
  } else if (f.name == "binomial_square") {
    if (args.r != 1 || args.d != 0)
      throw CLI::ValidationError("prove", "binomial_square fixes r=1, d=0");
    engine = diagonal_residue(p, args.a);
  } else {
    throw CLI::ValidationError(
        "prove", f.name + " has no constant-term pipeline; use verify");
  }

  std::optional<SymResidue> oracle;
  std::string oracle_note;
  try {
    oracle = oracle_sum(f, p, args.a, args.r, args.d);
  } catch (const CapExceeded& e) {
    oracle_note = e.what();
  }

  const bool mismatch = engine && oracle && !(*engine == *oracle);
  if (args.json) {
    ordered_json j;
    j["family"] = f.name;
    j["p"] = args.p;
    j["a"] = args.a;
    j["r"] = args.r;
    j["d"] = args.d;
    j["engine"] = engine ? ordered_json(engine->value) : ordered_json(nullptr);
    j["oracle"] = oracle ? ordered_json(oracle->value) : ordered_json(nullptr);
    j["verdict"] = !engine ? "fallback: oracle only"
                           : (!oracle ? "engine only (oracle capped)"
                                      : (mismatch ? "MISMATCH" : "MATCH"));
    std::cout << j.dump(2) << "\n";
  } else {
    if (engine)
      std::cout << "engine: " << engine->value << "\n";
    else
      std::cout << "engine unavailable (" << engine_note
                << "); fallback: oracle only\n";
    if (oracle)
      std::cout << "oracle: " << oracle->value << " ("
                << oracle_term_count(f, p, args.a, args.r) << " terms)\n";
    else
      std::cout << "oracle skipped: " << oracle_note << "\n";
    if (engine && oracle) std::cout << (mismatch ? "MISMATCH" : "MATCH") << "\n";
  }
  return mismatch ? 2 : 0;
}

int run_discover(const Args& args) {
  const FamilySpec& f = resolve_family(args);
  std::vector<u64> primes;
  for (u64 q : primes_up_to(args.pmax))
    if (q >= f.min_prime) primes.push_back(q);
  // primes the paper's proposition excludes
  if (f.name == "catalan" || f.name == "central_binomial")
    std::erase_if(primes, [](u64 q) { return q <= 3; });
  if (f.name == "motzkin") std::erase_if(primes, [](u64 q) { return q == 2; });

  u64 amax = args.amax ? args.amax : 2;
  std::vector<u64> a_values;
  for (u64 a = 1; a <= amax; ++a) a_values.push_back(a);
  std::vector<i64> d_values;
  for (i64 d = 0; d <= (f.supports_shift ? args.dmax : 0); ++d)
    d_values.push_back(d);

  // drop sweep points beyond the family caps instead of erroring
  std::erase_if(primes, [&](u64 q) {
    try {
      for (u64 a : a_values)
        for (i64 d : d_values) validate_point(f, Prime(q), a, args.r, d);
      return false;
    } catch (const CapExceeded&) {
      return true;
    }
  });

  const bool parity = a_values.size() > 1;
  CaseTable t = discover(f, primes, a_values, d_values, args.r, args.modulus,
                         parity, args.jobs);
  std::cout << (args.json ? to_json(t) + "\n" : to_text(t));
  return t.consistent ? 0 : 2;
}

int run_table(const std::string& prop_id, const Args& args) {
  TableAudit audit = audit_table(prop_id, args.jobs);
  std::cout << (args.json ? to_json(audit) + "\n" : to_text(audit));
  return audit.discovered.consistent ? 0 : 2;
}

int run_conjecture(const std::string& id, const Args& args) {
  std::vector<u64> primes;
  for (u64 q : primes_up_to(args.pmax))
    if (q >= 5) primes.push_back(q);
  ConjectureReport rep = conjecture_check(id, primes, args.jobs);
  std::cout << (args.json ? to_json(rep) + "\n" : to_text(rep));
  return rep.all_hold ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-term congruence prover and case-table auditor"};
  app.require_subcommand(1);
  Args args;
  app.add_option("--jobs", args.jobs, "worker threads for sweeps")
      ->check(CLI::Range(1, 64));

  CLI::App* verify = app.add_subcommand("verify", "brute-force oracle sum");
  add_family_options(verify, args);
  verify->add_option("--p", args.p, "prime modulus")->required();
  verify->add_option("--a", args.a, "exponent a in p^a");
  verify->add_option("--r", args.r, "upper-limit multiplier r");
  verify->add_option("--d", args.d, "shift d");
  verify->add_flag("--json", args.json, "machine-readable output");

  CLI::App* prove = app.add_subcommand("prove", "constant-term pipeline vs oracle");
  add_family_options(prove, args);
  prove->add_option("--p", args.p, "prime modulus")->required();
  prove->add_option("--a", args.a, "exponent a in p^a");
  prove->add_option("--r", args.r, "upper-limit multiplier r");
  prove->add_option("--d", args.d, "shift d");
  prove->add_flag("--json", args.json, "machine-readable output");

  CLI::App* discover_cmd =
      app.add_subcommand("discover", "empirical case-table discovery");
  add_family_options(discover_cmd, args);
  discover_cmd->add_option("--pmax", args.pmax, "sweep primes up to this bound");
  discover_cmd->add_option("--amax", args.amax, "sweep a = 1..amax");
  discover_cmd->add_option("--dmax", args.dmax, "sweep d = 0..dmax");
  discover_cmd->add_option("--r", args.r, "upper-limit multiplier r");
  discover_cmd->add_option("--modulus", args.modulus, "residue-class modulus M");
  discover_cmd->add_flag("--json", args.json, "machine-readable output");

  CLI::App* table = app.add_subcommand("table", "audit a printed case table");
  std::string prop_id;
  table->add_option("prop", prop_id, "proposition id (prop1, prop1p, prop2, "
                                     "prop2p, prop3, prop4, prop5, prop7)")
      ->required();
  table->add_flag("--json", args.json, "machine-readable output");

  CLI::App* conjecture =
      app.add_subcommand("conjecture", "check a conjectured display per prime");
  std::string conj_id;
  conjecture->add_option("id", conj_id, "conjecture id (1, 2a, 2b, ps0)")
      ->required();
  conjecture->add_option("--pmax", args.pmax, "check primes 5..pmax");
  conjecture->add_flag("--json", args.json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(args);
    if (prove->parsed()) return run_prove(args);
    if (discover_cmd->parsed()) return run_discover(args);
    if (table->parsed()) return run_table(prop_id, args);
    if (conjecture->parsed()) return run_conjecture(conj_id, args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
