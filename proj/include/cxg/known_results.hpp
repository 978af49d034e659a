#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxg/catalog.hpp"
#include "cxg/triples.hpp"

namespace cxg {

// Published minimal-triple values for the finite Coxeter groups, used two
// ways: as the regression oracle behind `cxg table`, and as inputs to the
// quotient sandwich bounds. Genus values are recomputed exactly from the
// triple and the closed-form group order rather than stored.
struct KnownRow {
  GroupSpec spec;
  std::string display;  // table label ("I3", "S5", ...)
  Triple triple;
  bool verify_only = false;  // E7: witness checked, minimality not re-proven
};

// The explicitly tabulated rows (sporadic types and ranks 3..29).
const std::vector<KnownRow>& known_rows();

// Row lookup including the asymptotic families (S_n and D_n for n > 29
// have (2,3,8); B_n for n > 8 has (2,4,6); dihedral groups have (2,2,n)).
// Returns nullopt where no published value exists (e.g. S_18).
std::optional<KnownRow> known_row(const GroupSpec& spec);

// Closed-form order: 2n, n!, n! 2^n, n! 2^(n-1), or the sporadic size.
BigInt closed_form_order(const GroupSpec& spec);

// Expected genus for a published row.
BigInt known_genus(const KnownRow& row);

// Ranks n >= 168 for which the standard large-n (2,3,8) generators of S_n
// do not satisfy the lift preconditions (two fixed points of the first
// generator in one cycle of the product, plus a third fixed point); these
// ranks need a direct search instead of the lift.
const std::vector<uint32_t>& lift_exception_ranks();

}  // namespace cxg
