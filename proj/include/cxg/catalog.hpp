#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cxg/group.hpp"
#include "cxg/root_system.hpp"
#include "cxg/signed_perm.hpp"

namespace cxg {

enum class Family { Dihedral, Symmetric, B, D, G2, H3, H4, F4, E6, E7 };

const char* family_name(Family f);

// A named group from the catalog: one of the infinite families with its
// rank, or a fixed sporadic type.
struct GroupSpec {
  Family family;
  uint32_t n = 0;  // rank; meaningful for Dihedral / Symmetric / B / D

  // Grammar: "Dih<n>", "S<n>", "B<n>", "D<n>", "G2", "H3", "H4", "F4",
  // "E6", "E7"; aliases "I3" -> H3, "I4" -> H4. Case-insensitive.
  static GroupSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class Realization {
  kDihedralPolygon,   // rotation + reflection on n points
  kNaturalSymmetric,  // {(1 2), (1 2 ... n)} on n points
  kSignedDeg2n,       // B_n / D_n via the faithful degree-2n action
  kRootAction,        // sporadic types permuting their root system
};

// Signed cycle type of a B_n element: multisets of positive-cycle and
// negative-cycle lengths (a cycle is negative when the signs around it
// sum to 1). Conjugacy classes of B_n are exactly these types.
struct SignedCycleType {
  std::vector<uint32_t> positive;  // sorted descending
  std::vector<uint32_t> negative;  // sorted descending

  uint64_t element_order() const;  // lcm(pos parts, 2 * neg parts)
  bool in_dn() const { return negative.size() % 2 == 0; }
  friend bool operator==(const SignedCycleType&,
                         const SignedCycleType&) = default;
};

std::vector<std::vector<uint32_t>> partitions_of(uint32_t n);
std::vector<SignedCycleType> signed_cycle_types(uint32_t n);
SignedCycleType signed_cycle_type_of(const SignedPermutation& x);
SignedPermutation signed_type_rep(const SignedCycleType& t, uint32_t n);
BigInt bn_class_size(const SignedCycleType& t, uint32_t n);
// A B_n class inside D_n splits into two D_n classes iff it has no
// negative cycles and every positive cycle length is even.
bool dn_class_splits(const SignedCycleType& t);

// A catalog group normalized for the search: the engine handle plus the
// family-aware shortcuts (class representatives and order spectrum by
// cycle type for the infinite families, enumeration otherwise).
class RealizedGroup {
 public:
  GroupSpec spec;
  Realization realization;
  GroupHandle group;
  std::vector<SignedPermutation> signed_gens;  // B/D only
  uint32_t wreath_rank = 0;                    // n for B/D
  std::string note;                            // e.g. the D3 = S4 redirect

  bool parity_prune() const {
    return spec.family == Family::Symmetric || spec.family == Family::D;
  }

  std::vector<ConjugacyClass> class_reps(uint64_t threshold) const;
  std::set<uint64_t> spectrum(uint64_t threshold) const;

  std::string display_element(const Permutation& p) const;
  Permutation parse_element(const std::string& text) const;
};

// Builds the group and certifies its order against the closed form
// (n!, n! 2^n, n! 2^(n-1), 2n, or the fixed sporadic order).
RealizedGroup realize(const GroupSpec& spec);

// Known quotients with element-level projection maps between the realized
// permutation domains: B_n -> S_n and D_n -> S_n (forget signs), and
// B_n -> D_n for odd n (fold by the central all-ones flip).
struct QuotientImage {
  GroupSpec target;
  BigInt kernel_order;
  std::function<Permutation(const Permutation&)> map;
};

std::vector<QuotientImage> quotient_images(const GroupSpec& spec);

}  // namespace cxg
