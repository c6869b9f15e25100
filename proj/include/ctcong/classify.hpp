#pragma once

#include <ctcong/families.hpp>

#include <map>
#include <set>

namespace ctcong {

/// Cell coordinates of a case table: residue classes of p and d modulo M
/// plus the parity of a. Unused coordinates are kNone.
struct CellKey {
  static constexpr int kNone = -1;
  int p_mod = kNone;
  int d_mod = kNone;
  int a_parity = kNone;  // 0 = even, 1 = odd
  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct Witness {
  u64 p = 0;
  u64 a = 0;
  i64 d = 0;
  u64 r = 1;
  i64 residue = 0;  // symmetric
};

struct Cell {
  /// Lifted value: the unique integer v with |v| <= 7 congruent to every
  /// witness residue; unset when no consistent lift exists.
  std::optional<i64> value;
  /// Published values for this cell (printed fixtures only); more than one
  /// entry means the published branches overlap ambiguously.
  std::vector<i64> printed;
  std::vector<Witness> witnesses;
};

enum class Provenance { Discovered, PrintedFixture };

struct CaseTable {
  std::string family;
  int modulus = 1;
  bool uses_parity = false;
  bool uses_shift = false;
  Provenance provenance = Provenance::Discovered;
  bool consistent = true;
  std::map<CellKey, Cell> cells;
  /// Cells that failed to lift, with their witnesses.
  std::vector<std::pair<CellKey, std::string>> conflicts;
};

constexpr i64 kLiftWindow = 7;  // largest entry in any published table

/// Sweeps the oracle (and engine, when a kernel exists, asserting equality)
/// over primes x a_values x d_values, groups symmetric residues by cell and
/// lifts each cell to a small integer.
CaseTable discover(const FamilySpec& f, std::span<const u64> primes,
                   std::span<const u64> a_values, std::span<const i64> d_values,
                   u64 r, int modulus, bool use_parity, int jobs = 1);

struct Discrepancy {
  CellKey key;
  std::vector<i64> printed;
  i64 observed = 0;
  Witness witness;
};

struct DiscrepancyReport {
  std::vector<Discrepancy> entries;
  /// Cells whose published value is ambiguous (printed in two branches),
  /// with the empirically selected value.
  std::vector<std::pair<CellKey, i64>> ambiguous_resolved;
  bool empty() const { return entries.empty(); }
};

/// Cell-by-cell diff of a discovered table against a published fixture.
/// Agreement means the observed lift appears among the printed values; an
/// ambiguous printed cell that the observation resolves is recorded
/// separately, not as a discrepancy.
DiscrepancyReport compare(const CaseTable& discovered, const CaseTable& printed);

/// The published case table of one proposition, encoded exactly as printed
/// (including empirically wrong branches). Known ids: prop1, prop1p, prop2,
/// prop2p, prop3, prop4, prop5, prop7.
CaseTable printed_fixture(const std::string& prop_id);

struct TableAudit {
  std::string prop_id;
  CaseTable discovered;
  CaseTable printed;
  DiscrepancyReport report;
  std::vector<std::string> notes;
};

/// Runs the preset discovery sweep for one proposition and diffs it against
/// the printed fixture.
TableAudit audit_table(const std::string& prop_id, int jobs = 1);

struct ConjectureRow {
  u64 p = 0;
  i64 observed = 0;    // symmetric residue of the sum
  i64 conjectured = 0; // value claimed by the printed branch for p mod 3
  bool holds = false;
};

struct ConjectureReport {
  std::string id;
  std::vector<ConjectureRow> rows;
  bool all_hold = false;
  /// True when every row fails with observed == -conjectured: the printed
  /// branches appear sign-swapped.
  bool sign_swapped = false;
};

/// Checks one conjectured display per prime (a = 1, r = 1 as stated).
/// Known ids: 1, 2a, 2b, ps0. Primes must be >= 5.
ConjectureReport conjecture_check(const std::string& id,
                                  std::span<const u64> primes, int jobs = 1);

/// Primes in [2, limit], by trial sieve.
std::vector<u64> primes_up_to(u64 limit);

std::string to_text(const CaseTable& t);
std::string to_json(const CaseTable& t);
std::string to_text(const TableAudit& a);
std::string to_json(const TableAudit& a);
std::string to_text(const ConjectureReport& r);
std::string to_json(const ConjectureReport& r);

}  // namespace ctcong
