#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxg/genus.hpp"
#include "cxg/known_results.hpp"

namespace cxg {

struct EngineParams {
  uint64_t threshold = 5'000'000;
  bool threshold_overridden = false;  // explicit flag/env beats tier default
  unsigned jobs = 1;
  bool heuristic = false;
  uint64_t budget = 200'000;
  uint64_t seed = 1;
};

// Comparison against the published reference table, when the group has a
// row there.
struct ReferenceCheck {
  Triple triple;
  BigInt genus;
  bool verify_only = false;
  bool matches = false;
};

struct Report {
  GroupSpec spec;
  std::string realization;
  uint32_t degree = 0;
  BigInt group_order;
  Triple triple;
  BigInt genus;
  bool exact = false;
  Provenance provenance = Provenance::kExhaustive;
  std::string note;
  std::optional<PairWitness> witness;
  std::string witness_x, witness_y;  // display forms
  std::optional<ReferenceCheck> reference;
  SearchStats stats;
  EngineParams params;
  double seconds = 0.0;
};

// Full pipeline for one group: quotient sandwich when it forces the
// answer, exhaustive search when the group fits the threshold, otherwise
// (with params.heuristic) lift recipes for D_n and randomized search,
// reported as an upper bound. Throws CapabilityError when nothing applies.
Report run_genus(const GroupSpec& spec, const EngineParams& params);

std::string render_report_text(const Report& r);
std::string render_report_json(const Report& r);  // stable field order
std::string render_report_csv_header();
std::string render_report_csv(const Report& r);

// Witness files: versioned JSON, elements in exact display form, intended
// for bit-exact re-verification.
std::string witness_to_json(const Report& r);
struct VerifyOutcome {
  bool ok = false;
  std::string detail;
  std::string group;
};
VerifyOutcome verify_witness_file(const std::string& json_text);

// Table reproduction against the published rows.
struct TableRow {
  Report report;
  bool matches = false;
};
struct TableOutcome {
  std::vector<TableRow> rows;
  bool all_match = true;
  std::string text;  // rendered table incl. diff markers
  std::string csv;
};
enum class TableKind { kSporadic, kExceptional };
enum class Tier { kStandard, kExtended };
TableOutcome run_table(TableKind kind, Tier tier, const EngineParams& params);

// Spectrum + lift front doors used by the CLI.
std::string run_spectrum(const GroupSpec& spec, const EngineParams& params,
                         const std::string& format);
Report run_lift(uint32_t n, const Triple& t, const EngineParams& params);

}  // namespace cxg
