#include "filiform/registry.hpp"

#include "registry_data.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <stdexcept>

namespace filiform {

std::string registry_name(RegistryId id) {
  switch (id) {
    case RegistryId::A: return "A";
    case RegistryId::B: return "B";
    case RegistryId::T2: return "T2";
  }
  throw std::invalid_argument("unknown registry");
}

RegistryId registry_from_string(const std::string& text) {
  if (text == "A") return RegistryId::A;
  if (text == "B") return RegistryId::B;
  if (text == "T2") return RegistryId::T2;
  throw std::invalid_argument("unknown registry '" + text + "' (expected A, B or T2)");
}

std::string_view registry_raw_json(RegistryId id) {
  switch (id) {
    case RegistryId::A: return detail::kAppendixAJson;
    case RegistryId::B: return detail::kAppendixBJson;
    case RegistryId::T2: return detail::kEtaListJson;
  }
  throw std::invalid_argument("unknown registry");
}

bool RegistryEntry::is_free_slot(int slot) const {
  if (slot < 1 || slot > static_cast<int>(slots.size()))
    throw std::out_of_range("RegistryEntry: slot index out of range");
  const std::string& s = slots[static_cast<std::size_t>(slot - 1)];
  return !s.empty() && (s[0] < '0' || s[0] > '9') && s[0] != '-';
}

bool RegistryEntry::has_free_slots() const {
  for (int slot = 1; slot <= static_cast<int>(slots.size()); ++slot)
    if (is_free_slot(slot)) return true;
  return false;
}

namespace {

std::vector<RegistryEntry> parse_registry(std::string_view raw) {
  const nlohmann::json doc = nlohmann::json::parse(raw);
  const LeibnizFamily family = leibniz_family_from_string(doc.at("family").get<std::string>());
  const int arity = leibniz_family_arity(family);

  std::vector<RegistryEntry> entries;
  int row = 0;
  for (const auto& item : doc.at("rows")) {
    RegistryEntry entry;
    entry.row = ++row;
    entry.family = family;
    entry.slots = item.at("slots").get<std::vector<std::string>>();
    if (static_cast<int>(entry.slots.size()) != arity)
      throw std::invalid_argument("registry row " + std::to_string(row) + " has wrong arity");
    if (item.contains("nonzero")) entry.nonzero = item.at("nonzero").get<std::vector<int>>();
    if (item.contains("note")) entry.note = item.at("note").get<std::string>();
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

const std::vector<RegistryEntry>& registry(RegistryId id) {
  static const std::vector<RegistryEntry> a = parse_registry(detail::kAppendixAJson);
  static const std::vector<RegistryEntry> b = parse_registry(detail::kAppendixBJson);
  static const std::vector<RegistryEntry> t2 = parse_registry(detail::kEtaListJson);
  switch (id) {
    case RegistryId::A: return a;
    case RegistryId::B: return b;
    case RegistryId::T2: return t2;
  }
  throw std::invalid_argument("unknown registry");
}

FamilyParams instantiate(const RegistryEntry& entry, unsigned long long seed, int sample) {
  static const std::vector<Rational> pool = {0,       1, -1, Rational(1, 2), Rational(-1, 2),
                                             2,       -2, 3};
  std::mt19937_64 engine(seed * 1000003ULL + static_cast<unsigned long long>(entry.row) * 101ULL +
                         static_cast<unsigned long long>(sample));
  FamilyParams params;
  params.family = entry.family;
  for (int slot = 1; slot <= static_cast<int>(entry.slots.size()); ++slot) {
    const std::string& text = entry.slots[static_cast<std::size_t>(slot - 1)];
    if (!entry.is_free_slot(slot)) {
      params.values.push_back(Rational::parse(text));
      continue;
    }
    bool must_be_nonzero = false;
    for (int c : entry.nonzero)
      if (c == slot) must_be_nonzero = true;
    // index 0 of the pool is the only zero; skip it for constrained slots
    const std::size_t offset = must_be_nonzero ? 1 : 0;
    const std::size_t span = pool.size() - offset;
    params.values.push_back(pool[offset + static_cast<std::size_t>(engine() % span)]);
  }
  return params;
}

std::vector<RowCheckResult> check_registry(RegistryId id, unsigned long long seed,
                                           int samples_per_row) {
  const auto& entries = registry(id);
  if (entries.empty()) return {};
  const LeibnizFamily family = entries.front().family;
  const StructureTable quotient = expected_quotient(family);
  const ModuleAction action = expected_action(family);

  std::vector<RowCheckResult> results;
  for (const auto& entry : entries) {
    const int samples = entry.has_free_slots() ? samples_per_row : 1;
    for (int sample = 0; sample < samples; ++sample) {
      RowCheckResult result;
      result.row = entry.row;
      result.sample = sample;
      result.params = instantiate(entry, seed, sample);
      const LeibnizExtension ext = build_family(result.params);
      const ExtensionReport report = verify_extension(ext, quotient, action);
      result.leibniz_violations = report.leibniz_violations;
      result.ideal_ok = report.ideal_ok;
      result.quotient_ok = report.quotient_ok;
      result.action_ok = report.action_ok;
      result.fingerprint = fingerprint(ext.table);
      results.push_back(std::move(result));
    }
  }
  return results;
}

}  // namespace filiform
