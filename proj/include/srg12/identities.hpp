#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srg12/bigint.hpp"
#include "srg12/census.hpp"
#include "srg12/graph.hpp"
#include "srg12/parallel.hpp"

namespace srg12 {

enum class EntryStatus { pass, fail, skipped, info };

std::string_view to_string(EntryStatus s);

/// One checked identity. `formula` states the relation being compared;
/// skipped and informational entries carry their reason in `note`.
struct IdentityEntry {
  std::string name;
  std::string formula;
  std::optional<BigInt> expected;
  std::optional<BigInt> actual;
  EntryStatus status = EntryStatus::skipped;
  std::string note;
  /// conditions, cycles, walks, triples, types, spectral, hexagon or exhaustive.
  std::string group;

  bool counts() const { return status == EntryStatus::pass || status == EntryStatus::fail; }
};

struct GraphMeta {
  std::int64_t n = 0;
  std::optional<std::int64_t> k;  // empty for irregular graphs
  std::uint64_t edges = 0;
  std::string source;
};

struct IdentityReport {
  GraphMeta meta;
  std::vector<IdentityEntry> entries;

  /// No failing entry (skipped and informational entries do not count).
  bool all_pass() const;
  std::size_t count(EntryStatus s) const;
  const IdentityEntry* find(std::string_view name) const;

  /// Entries of one group, in report order.
  std::vector<const IdentityEntry*> group(std::string_view name) const;

  /// {"graph_meta": {...}, "entries": [...]}, integers beyond 64 bits as
  /// decimal strings.
  std::string to_json(int indent = 2) const;
};

/// Every identity the graph can be checked against. Non-family graphs get
/// the condition entries and a skipped entry for everything else. The
/// exhaustive cross-check runs when the order is at most exhaustive_limit.
IdentityReport run_all_checks(const Graph& g, std::string source = "memory", const Exec& exec = {},
                              std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

/// nk(k-2)(2k^2-21k+53)/12. Throws InfeasibleParams unless 2n = k^2+2.
BigInt hexagon_bound(std::int64_t n, std::int64_t k);

/// True iff no two disjoint triangles are joined by exactly two edges; the
/// witness is the first such pair otherwise.
struct MakhnevResult {
  bool holds = true;
  std::uint64_t n3 = 0;
  std::optional<TrianglePairWitness> witness;
};

MakhnevResult makhnev_condition(const Graph& g, const Exec& exec = {});

/// The polynomial coefficients the chain check is evaluated with; tests
/// perturb them to show the check has teeth.
struct ChainCoefficients {
  std::int64_t bound_k2 = 2;
  std::int64_t bound_k1 = -21;
  std::int64_t bound_k0 = 53;
};

struct ChainPoint {
  std::int64_t k = 0;
  std::int64_t n = 0;
  bool e4_ok = false;
  bool e5_ok = false;
  bool c6_ok = false;
  bool hexagon_ok = false;
  std::string first_failure;  // empty when every sub-expression agrees

  bool ok() const { return e4_ok && e5_ok && c6_ok && hexagon_ok; }
};

struct ChainReport {
  std::vector<ChainPoint> points;

  bool ok() const;
  std::size_t failures() const;
};

/// Evaluates, at n = (k^2+2)/2 for every sample k, the collapsed forms of e4
/// and e5 against their counting expressions, the c6 closed form against
/// traces plus Newton's identities, and the assembled hexagon count against
/// the bound. Needs at least 13 distinct even k >= 4 (the identities are
/// polynomials of degree at most 12), otherwise PreconditionError.
ChainReport verify_polynomial_chain(const std::vector<std::int64_t>& ks,
                                    const ChainCoefficients& coefficients = {});

}  // namespace srg12
