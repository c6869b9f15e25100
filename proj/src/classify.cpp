#include <ctcong/classify.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace ctcong {

namespace {

using ordered_json = nlohmann::ordered_json;

struct GridPoint {
  u64 p, a, r;
  i64 d;
};

struct GridResult {
  GridPoint pt;
  i64 residue = 0;  // symmetric
};

// Evaluates the oracle at one grid point; for kernel families also runs the
// engine and demands agreement, so every discovery sweep exercises both.
i64 evaluate_point(const FamilySpec& f, const GridPoint& pt) {
  Prime p(pt.p);
  const SymResidue oracle = oracle_sum(f, p, pt.a, pt.r, pt.d);
  if (f.kernel) {
    const SymResidue engine = extract(with_r_d(*f.kernel, pt.r, pt.d), p, pt.a);
    if (engine != oracle)
      throw std::logic_error(
          "discover: engine/oracle mismatch for " + f.name + " at p=" +
          std::to_string(pt.p) + " a=" + std::to_string(pt.a) + " r=" +
          std::to_string(pt.r) + " d=" + std::to_string(pt.d) + " (engine " +
          std::to_string(engine.value) + ", oracle " +
          std::to_string(oracle.value) + ")");
  }
  return oracle.value;
}

std::vector<GridResult> run_grid(const FamilySpec& f,
                                 std::vector<GridPoint> points, int jobs) {
  std::vector<GridResult> results(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) results[i].pt = points[i];
  if (jobs <= 1 || points.size() < 2) {
    for (auto& r : results) r.residue = evaluate_point(f, r.pt);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= results.size() || failed.load()) return;
      try {
        results[i].residue = evaluate_point(f, results[i].pt);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        failed.store(true);
        if (error.empty()) error = e.what();
        return;
      }
    }
  };
  const int n = std::min<int>(jobs, static_cast<int>(points.size()));
  std::vector<std::thread> pool;
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::logic_error(error);
  return results;
}

std::string describe_key(const CellKey& k, int modulus) {
  std::ostringstream os;
  bool any = false;
  if (k.p_mod != CellKey::kNone) {
    os << "p=" << k.p_mod << " (mod " << modulus << ")";
    any = true;
  }
  if (k.d_mod != CellKey::kNone) {
    os << (any ? ", " : "") << "d=" << k.d_mod << " (mod " << modulus << ")";
    any = true;
  }
  if (k.a_parity != CellKey::kNone)
    os << (any ? ", " : "") << "a " << (k.a_parity ? "odd" : "even");
  if (!any && k.a_parity == CellKey::kNone) os << "(all)";
  return os.str();
}

std::vector<i64> lift_candidates(const std::vector<Witness>& ws) {
  std::vector<i64> out;
  for (i64 v = -kLiftWindow; v <= kLiftWindow; ++v) {
    bool fits = true;
    for (const Witness& w : ws) {
      i64 diff = (v - w.residue) % static_cast<i64>(w.p);
      if (diff != 0) { fits = false; break; }
    }
    if (fits) out.push_back(v);
  }
  return out;
}

std::vector<i64> expected_values(const Cell& c) {
  if (!c.printed.empty()) return c.printed;
  // comparing against a discovered table: its lift is the expectation
  if (c.value) return {*c.value};
  return {};
}

}  // namespace

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 2; n <= limit; ++n)
    if (is_prime_u64(n)) out.push_back(n);
  return out;
}

CaseTable discover(const FamilySpec& f, std::span<const u64> primes,
                   std::span<const u64> a_values, std::span<const i64> d_values,
                   u64 r, int modulus, bool use_parity, int jobs) {
  if (modulus < 1) throw std::invalid_argument("discover: modulus must be >= 1");
  CaseTable t;
  t.family = f.name;
  t.modulus = modulus;
  t.uses_parity = use_parity;
  t.uses_shift = f.supports_shift && (d_values.size() > 1 || (d_values.size() == 1 && d_values[0] != 0));
  t.provenance = Provenance::Discovered;

  std::vector<GridPoint> points;
  for (u64 p : primes)
    for (u64 a : a_values)
      for (i64 d : d_values) {
        validate_point(f, Prime(p), a, r, d);  // caps are preconditions
        points.push_back(GridPoint{p, a, r, d});
      }
  const std::vector<GridResult> results = run_grid(f, std::move(points), jobs);

  for (const GridResult& res : results) {
    CellKey key;
    key.p_mod = static_cast<int>(res.pt.p % static_cast<u64>(modulus));
    if (t.uses_shift)
      key.d_mod = static_cast<int>(((res.pt.d % modulus) + modulus) % modulus);
    if (use_parity) key.a_parity = static_cast<int>(res.pt.a % 2);
    t.cells[key].witnesses.push_back(
        Witness{res.pt.p, res.pt.a, res.pt.d, res.pt.r, res.residue});
  }

  for (auto& [key, cell] : t.cells) {
    const std::vector<i64> candidates = lift_candidates(cell.witnesses);
    if (candidates.empty()) {
      t.consistent = false;
      std::ostringstream os;
      os << "no integer in [-" << kLiftWindow << ", " << kLiftWindow
         << "] matches every witness:";
      for (std::size_t i = 0; i < cell.witnesses.size() && i < 4; ++i) {
        const Witness& w = cell.witnesses[i];
        os << " (p=" << w.p << ",a=" << w.a << " -> " << w.residue << ")";
      }
      t.conflicts.emplace_back(key, os.str());
      continue;
    }
    // smallest lift in absolute value, preferring the nonnegative one
    i64 best = candidates.front();
    for (i64 v : candidates)
      if (std::abs(v) < std::abs(best) || (std::abs(v) == std::abs(best) && v > best))
        best = v;
    cell.value = best;
  }
  return t;
}

DiscrepancyReport compare(const CaseTable& discovered, const CaseTable& printed) {
  if (discovered.modulus != printed.modulus ||
      discovered.uses_parity != printed.uses_parity ||
      discovered.uses_shift != printed.uses_shift)
    throw std::invalid_argument("compare: table shapes differ");
  DiscrepancyReport rep;
  for (const auto& [key, cell] : discovered.cells) {
    auto it = printed.cells.find(key);
    if (it == printed.cells.end())
      throw std::invalid_argument("compare: printed table lacks cell " +
                                  describe_key(key, printed.modulus));
    const std::vector<i64> expected = expected_values(it->second);
    if (!cell.value) {
      // conflicted discovered cell: surface a witness that breaks the print
      for (const Witness& w : cell.witnesses) {
        bool matches_some = false;
        for (i64 v : expected)
          if ((v - w.residue) % static_cast<i64>(w.p) == 0) matches_some = true;
        if (!matches_some) {
          rep.entries.push_back(Discrepancy{key, expected, w.residue, w});
          break;
        }
      }
      continue;
    }
    const bool agrees =
        std::find(expected.begin(), expected.end(), *cell.value) != expected.end();
    if (agrees) {
      if (expected.size() > 1)
        rep.ambiguous_resolved.emplace_back(key, *cell.value);
      continue;
    }
    const Witness w = cell.witnesses.empty() ? Witness{} : cell.witnesses.front();
    rep.entries.push_back(Discrepancy{key, expected, *cell.value, w});
  }
  return rep;
}

namespace {

void add_printed(CaseTable& t, CellKey key, i64 value) {
  t.cells[key].printed.push_back(value);
}

CaseTable fixture_shell(const std::string& family, int modulus, bool parity,
                        bool shift) {
  CaseTable t;
  t.family = family;
  t.modulus = modulus;
  t.uses_parity = parity;
  t.uses_shift = shift;
  t.provenance = Provenance::PrintedFixture;
  return t;
}

}  // namespace

CaseTable printed_fixture(const std::string& prop_id) {
  if (prop_id == "prop1") {
    // 1  if (p=2, d=1, a odd) or (p=1, d=0) or (p=2, d=0, a odd)
    // -1 if (p=2, d=0, a odd) or (p=1, d=2) or (p=2, d=2, a even)
    // 0  otherwise.  The (p=2, d=0, a odd) clause is printed in both
    // branches; the fixture keeps both values.
    CaseTable t = fixture_shell("central_binomial", 3, true, true);
    for (int pm : {1, 2})
      for (int dm : {0, 1, 2})
        for (int par : {0, 1}) {
          CellKey k{pm, dm, par};
          const bool odd = par == 1;
          std::vector<i64> vals;
          if ((pm == 2 && dm == 1 && odd) || (pm == 1 && dm == 0) ||
              (pm == 2 && dm == 0 && odd))
            vals.push_back(1);
          if ((pm == 2 && dm == 0 && odd) || (pm == 1 && dm == 2) ||
              (pm == 2 && dm == 2 && !odd))
            vals.push_back(-1);
          if (vals.empty()) vals.push_back(0);
          for (i64 v : vals) add_printed(t, k, v);
        }
    return t;
  }
  if (prop_id == "prop1p") {
    // printed without any parity split; expanded to the parity key shape
    CaseTable t = fixture_shell("central_binomial", 3, true, true);
    const std::map<std::pair<int, int>, i64> vals{
        {{1, 1}, 1}, {{1, 2}, -4}, {{2, 1}, 4},
        {{2, 2}, -1}, {{1, 0}, 3}, {{2, 0}, -3}};
    for (const auto& [pd, v] : vals)
      for (int par : {0, 1})
        add_printed(t, CellKey{pd.first, pd.second, par}, v);
    return t;
  }
  if (prop_id == "prop2") {
    // 1 if p=1 or (p=2 and a even); -2 if p=2 and a odd
    CaseTable t = fixture_shell("catalan", 3, true, false);
    add_printed(t, CellKey{1, CellKey::kNone, 0}, 1);
    add_printed(t, CellKey{1, CellKey::kNone, 1}, 1);
    add_printed(t, CellKey{2, CellKey::kNone, 0}, 1);
    add_printed(t, CellKey{2, CellKey::kNone, 1}, -2);
    return t;
  }
  if (prop_id == "prop2p") {
    // -7 if p=2 and a even; 2 if p=1 or (p=2 and a odd)
    CaseTable t = fixture_shell("catalan", 3, true, false);
    add_printed(t, CellKey{1, CellKey::kNone, 0}, 2);
    add_printed(t, CellKey{1, CellKey::kNone, 1}, 2);
    add_printed(t, CellKey{2, CellKey::kNone, 0}, -7);
    add_printed(t, CellKey{2, CellKey::kNone, 1}, 2);
    return t;
  }
  if (prop_id == "prop3") {
    // -2 if p=1 (mod 4) or (p=3 and a even); 2 if p=3 and a odd
    CaseTable t = fixture_shell("motzkin", 4, true, false);
    add_printed(t, CellKey{1, CellKey::kNone, 0}, -2);
    add_printed(t, CellKey{1, CellKey::kNone, 1}, -2);
    add_printed(t, CellKey{3, CellKey::kNone, 0}, -2);
    add_printed(t, CellKey{3, CellKey::kNone, 1}, 2);
    return t;
  }
  if (prop_id == "prop4") {
    // 1 if p=1 or (p=2 and a odd); -1 if p=2 and a even; 0 if p=0 (mod 3)
    CaseTable t = fixture_shell("binomial_square", 3, true, false);
    add_printed(t, CellKey{0, CellKey::kNone, 0}, 0);
    add_printed(t, CellKey{0, CellKey::kNone, 1}, 0);
    add_printed(t, CellKey{1, CellKey::kNone, 0}, 1);
    add_printed(t, CellKey{1, CellKey::kNone, 1}, 1);
    add_printed(t, CellKey{2, CellKey::kNone, 0}, -1);
    add_printed(t, CellKey{2, CellKey::kNone, 1}, 1);
    return t;
  }
  if (prop_id == "prop5") {
    CaseTable t = fixture_shell("trinomial", 1, false, false);
    add_printed(t, CellKey{0, CellKey::kNone, CellKey::kNone}, 1);
    return t;
  }
  if (prop_id == "prop7") {
    CaseTable t = fixture_shell("multinomial", 1, false, false);
    add_printed(t, CellKey{0, CellKey::kNone, CellKey::kNone}, 1);
    return t;
  }
  throw std::invalid_argument("unknown proposition id: " + prop_id);
}

TableAudit audit_table(const std::string& prop_id, int jobs) {
  TableAudit audit;
  audit.prop_id = prop_id;
  audit.printed = printed_fixture(prop_id);

  const std::vector<u64> no3{5, 7, 11, 13, 17, 19};
  const std::vector<u64> with3{3, 5, 7, 11, 13};
  const std::vector<u64> a12{1, 2};
  const std::vector<i64> d012{0, 1, 2};
  const std::vector<i64> d0{0};

  if (prop_id == "prop1" || prop_id == "prop1p") {
    const u64 r = prop_id == "prop1" ? 1 : 2;
    audit.discovered = discover(family("central_binomial"), no3, a12, d012, r,
                                3, true, jobs);
  } else if (prop_id == "prop2" || prop_id == "prop2p") {
    const u64 r = prop_id == "prop2" ? 1 : 2;
    audit.discovered = discover(family("catalan"), no3, a12, d0, r, 3, true, jobs);
  } else if (prop_id == "prop3") {
    const std::vector<u64> ps{3, 5, 7, 11, 13, 17, 19};
    audit.discovered = discover(family("motzkin"), ps, a12, d0, 1, 4, true, jobs);
  } else if (prop_id == "prop4") {
    audit.discovered =
        discover(family("binomial_square"), with3, a12, d0, 1, 3, true, jobs);
  } else if (prop_id == "prop5") {
    const std::vector<u64> ps{3, 5, 7, 11};
    audit.discovered = discover(family("trinomial"), ps, a12, d0, 1, 1, false, jobs);
  } else if (prop_id == "prop7") {
    const std::vector<u64> ps{3, 5, 7, 11, 13, 17, 19, 23, 29};
    const std::vector<u64> a1{1};
    audit.discovered =
        discover(multinomial_family(4), ps, a1, d0, 1, 1, false, jobs);
  } else {
    throw std::invalid_argument("unknown proposition id: " + prop_id);
  }

  audit.report = compare(audit.discovered, audit.printed);

  for (const auto& [key, value] : audit.report.ambiguous_resolved) {
    std::ostringstream os;
    os << "published branches overlap on " << describe_key(key, audit.printed.modulus)
       << "; observations select " << value;
    audit.notes.push_back(os.str());
  }
  if (prop_id == "prop1p" && !audit.report.empty())
    audit.notes.push_back(
        "published table has no parity split; even-a cells follow the p=1 "
        "(mod 3) column");
  if (!audit.report.empty()) {
    bool all_sign_flips = true;
    for (const Discrepancy& d : audit.report.entries)
      if (d.printed.size() != 1 || d.printed[0] != -d.observed)
        all_sign_flips = false;
    if (all_sign_flips)
      audit.notes.push_back("every printed value is the negation of the observed one");
  }
  return audit;
}

ConjectureReport conjecture_check(const std::string& id,
                                  std::span<const u64> primes, int jobs) {
  struct Def {
    const char* family;
    i64 if_p1, if_p2;  // printed value for p = 1, 2 (mod 3)
  };
  Def def{};
  if (id == "1") def = {"weighted_quartic", -1, 1};
  else if (id == "2a") def = {"super_catalan", 1, -1};
  else if (id == "2b") def = {"weighted_super_catalan", -7, 7};
  else if (id == "ps0") def = {"weighted_central", 1, -1};
  else throw std::invalid_argument("unknown conjecture id: " + id);

  const FamilySpec& f = family(def.family);
  std::vector<GridPoint> points;
  for (u64 p : primes) {
    if (p < 5)
      throw std::invalid_argument(
          "conjecture_check: primes must be >= 5 (p mod 3 branches collapse)");
    validate_point(f, Prime(p), 1, 1, 0);
    points.push_back(GridPoint{p, 1, 1, 0});
  }
  const std::vector<GridResult> results = run_grid(f, std::move(points), jobs);

  ConjectureReport rep;
  rep.id = id;
  rep.all_hold = true;
  bool all_swapped = !results.empty();
  for (const GridResult& res : results) {
    ConjectureRow row;
    row.p = res.pt.p;
    row.observed = res.residue;
    row.conjectured = res.pt.p % 3 == 1 ? def.if_p1 : def.if_p2;
    row.holds =
        (row.conjectured - row.observed) % static_cast<i64>(res.pt.p) == 0;
    if (!row.holds) rep.all_hold = false;
    if (row.holds ||
        (row.conjectured + row.observed) % static_cast<i64>(res.pt.p) != 0)
      all_swapped = false;
    rep.rows.push_back(row);
  }
  rep.sign_swapped = all_swapped;
  return rep;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

ordered_json key_json(const CellKey& k) {
  ordered_json j;
  j["p_mod"] = k.p_mod;
  if (k.d_mod != CellKey::kNone) j["d_mod"] = k.d_mod; else j["d_mod"] = nullptr;
  if (k.a_parity != CellKey::kNone)
    j["a_parity"] = k.a_parity == 1 ? "odd" : "even";
  else
    j["a_parity"] = nullptr;
  return j;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["p"] = w.p;
  j["a"] = w.a;
  j["d"] = w.d;
  j["r"] = w.r;
  j["residue"] = w.residue;
  return j;
}

ordered_json table_json(const CaseTable& t) {
  ordered_json j;
  j["family"] = t.family;
  j["modulus"] = t.modulus;
  j["parity"] = t.uses_parity;
  j["cells"] = ordered_json::array();
  for (const auto& [key, cell] : t.cells) {
    ordered_json c = key_json(key);
    if (cell.value)
      c["value"] = *cell.value;
    else if (!cell.printed.empty())
      c["value"] = cell.printed.size() == 1 ? ordered_json(cell.printed[0])
                                            : ordered_json(cell.printed);
    else
      c["value"] = nullptr;
    c["witnesses"] = ordered_json::array();
    for (const Witness& w : cell.witnesses) c["witnesses"].push_back(witness_json(w));
    j["cells"].push_back(std::move(c));
  }
  j["consistent"] = t.consistent;
  return j;
}

std::string cell_value_str(const Cell& c) {
  if (c.value) return std::to_string(*c.value);
  if (!c.printed.empty()) {
    std::string s;
    for (std::size_t i = 0; i < c.printed.size(); ++i)
      s += (i ? " | " : "") + std::to_string(c.printed[i]);
    return s;
  }
  return "(none)";
}

}  // namespace

std::string to_text(const CaseTable& t) {
  std::ostringstream os;
  os << "family: " << t.family << "  modulus: " << t.modulus
     << "  parity: " << (t.uses_parity ? "on" : "off")
     << "  consistent: " << (t.consistent ? "yes" : "no") << "\n";
  for (const auto& [key, cell] : t.cells) {
    os << "  " << describe_key(key, t.modulus) << "  ->  "
       << cell_value_str(cell);
    if (!cell.witnesses.empty()) {
      os << "   [";
      for (std::size_t i = 0; i < cell.witnesses.size() && i < 3; ++i) {
        const Witness& w = cell.witnesses[i];
        os << (i ? "; " : "") << "p=" << w.p << " a=" << w.a;
        if (w.d != 0 || key.d_mod != CellKey::kNone) os << " d=" << w.d;
        os << " -> " << w.residue;
      }
      if (cell.witnesses.size() > 3)
        os << "; +" << cell.witnesses.size() - 3 << " more";
      os << "]";
    }
    os << "\n";
  }
  for (const auto& [key, msg] : t.conflicts)
    os << "  conflict at " << describe_key(key, t.modulus) << ": " << msg << "\n";
  return os.str();
}

std::string to_json(const CaseTable& t) { return table_json(t).dump(2); }

std::string to_text(const TableAudit& a) {
  std::ostringstream os;
  os << "== " << a.prop_id << " ==\n";
  os << "discovered:\n" << to_text(a.discovered);
  if (a.report.empty() && a.report.ambiguous_resolved.empty()) {
    os << "printed table: agrees on every populated cell\n";
  } else {
    if (!a.report.entries.empty()) {
      os << "discrepancies vs printed table:\n";
      for (const Discrepancy& d : a.report.entries) {
        os << "  " << describe_key(d.key, a.printed.modulus) << ": printed ";
        for (std::size_t i = 0; i < d.printed.size(); ++i)
          os << (i ? " | " : "") << d.printed[i];
        os << ", observed " << d.observed << "  (witness p=" << d.witness.p
           << " a=" << d.witness.a << " d=" << d.witness.d << " r=" << d.witness.r
           << " -> " << d.witness.residue << ")\n";
      }
    } else {
      os << "no value discrepancies\n";
    }
  }
  for (const std::string& n : a.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string to_json(const TableAudit& a) {
  ordered_json j;
  j["prop"] = a.prop_id;
  j["discovered"] = table_json(a.discovered);
  j["printed"] = table_json(a.printed);
  j["discrepancies"] = ordered_json::array();
  for (const Discrepancy& d : a.report.entries) {
    ordered_json e = key_json(d.key);
    e["printed"] = d.printed.size() == 1 ? ordered_json(d.printed[0])
                                         : ordered_json(d.printed);
    e["observed"] = d.observed;
    e["witness"] = witness_json(d.witness);
    j["discrepancies"].push_back(std::move(e));
  }
  j["ambiguous_resolved"] = ordered_json::array();
  for (const auto& [key, value] : a.report.ambiguous_resolved) {
    ordered_json e = key_json(key);
    e["value"] = value;
    j["ambiguous_resolved"].push_back(std::move(e));
  }
  j["notes"] = a.notes;
  return j.dump(2);
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "conjecture " << r.id << "\n";
  for (const ConjectureRow& row : r.rows)
    os << "  p=" << row.p << ": observed " << row.observed << ", conjectured "
       << row.conjectured << " -> " << (row.holds ? "hold" : "FAIL") << "\n";
  if (r.all_hold) {
    os << "all hold (" << r.rows.size() << " primes)\n";
  } else {
    os << "counterexamples found\n";
    if (r.sign_swapped)
      os << "note: observed values are exactly the negations of the printed "
            "branches (sign-swapped display)\n";
  }
  return os.str();
}

std::string to_json(const ConjectureReport& r) {
  ordered_json j;
  j["conjecture"] = r.id;
  j["rows"] = ordered_json::array();
  for (const ConjectureRow& row : r.rows) {
    ordered_json e;
    e["p"] = row.p;
    e["observed"] = row.observed;
    e["conjectured"] = row.conjectured;
    e["holds"] = row.holds;
    j["rows"].push_back(std::move(e));
  }
  j["all_hold"] = r.all_hold;
  j["sign_swapped"] = r.sign_swapped;
  return j.dump(2);
}

}  // namespace ctcong
