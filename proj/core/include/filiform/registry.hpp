#pragma once

#include "filiform/leibniz.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace filiform {

/// The three classification registries: A (lambda rows), B (mu rows), T2 (the
/// eta list). Rows are transcribed verbatim into JSON data files shipped with
/// the repo and embedded at build time; a checksum test guards against
/// accidental edits.
enum class RegistryId { A, B, T2 };

std::string registry_name(RegistryId id);
RegistryId registry_from_string(const std::string& text);

/// One classification row. Fixed slots hold a rational literal; free slots hold
/// a parameter name (e.g. "a7") and range over the scalars, optionally
/// constrained nonzero.
struct RegistryEntry {
  int row = 0;  // 1-based reading-order position
  LeibnizFamily family{};
  std::vector<std::string> slots;
  std::vector<int> nonzero;  // 1-based slot indices that must stay != 0
  std::string note;          // transcription flags (printing irregularities)

  bool is_free_slot(int slot) const;  // 1-based
  bool has_free_slots() const;
};

const std::vector<RegistryEntry>& registry(RegistryId id);

/// The raw embedded JSON text backing a registry (checksum tests hash this).
std::string_view registry_raw_json(RegistryId id);

/// Deterministic instantiation of a row's free slots. Values are drawn from the
/// small-rational pool {0, 1, -1, 1/2, -1/2, 2, -2, 3} (0 excluded for
/// constrained slots) using mt19937_64 seeded with
/// seed * 1000003 + row * 101 + sample; each free slot, in slot order, consumes
/// one engine draw reduced modulo the pool size. Fixed slots parse as written.
FamilyParams instantiate(const RegistryEntry& entry, unsigned long long seed, int sample);

/// Verification outcome for one instantiated registry row.
struct RowCheckResult {
  int row = 0;
  int sample = 0;
  FamilyParams params;
  long leibniz_violations = 0;
  bool ideal_ok = false;
  bool quotient_ok = false;
  bool action_ok = false;
  Fingerprint fingerprint;
  bool structure_ok() const { return ideal_ok && quotient_ok && action_ok; }
};

/// Builds and verifies every row of a registry: rows with free slots are
/// instantiated samples_per_row times (seeded as in instantiate()), fixed rows
/// once. Results are ordered by (row, sample).
std::vector<RowCheckResult> check_registry(RegistryId id, unsigned long long seed,
                                           int samples_per_row = 5);

}  // namespace filiform
