#pragma once

#include <optional>

#include "cxg/signed_perm.hpp"
#include "cxg/triples.hpp"

namespace cxg {

// Recipe for lifting a generating pair of S_n to one of D_n: sigma and tau
// generate S_n, sigma and sigma*tau have even order, sigma fixes the two
// points i and j which lie in one cycle of sigma*tau, and (when n is even)
// sigma fixes a third point k. The lift decorates sigma with the sign
// vector supported on {i, j} and leaves tau unsigned; the three element
// orders are preserved.
struct LiftRecipe {
  Permutation sigma, tau;
  uint32_t i = 0, j = 0;        // 0-based fixed points of sigma
  std::optional<uint32_t> k;    // third fixed point, required iff n even

  // Throws StructuralError naming the violated precondition:
  // "no-fixed-points", "not-same-cycle", "missing-third-fixed-point",
  // "odd-order-sigma", "odd-order-product", "not-symmetric-generators".
  void validate() const;

  SignVector sign_vector() const;  // ones exactly at i and j
};

// Validates the recipe and returns ([sigma, a], [tau, 0]).
std::pair<SignedPermutation, SignedPermutation> lift(const LiftRecipe& recipe);

// Shape of a subgroup H <= B_n with pi(H) = S_n, read off the kernel
// K = {b : [1,b] in H}, which is an S_n-submodule of F_2^n and therefore
// one of 0, <all-ones>, the even-weight subspace, or everything.
enum class ExtensionClass {
  kTrivialSection,      // K = 0:            H isomorphic to S_n
  kCenterSplit,         // K = <all-ones>:   H = section x center
  kDemiFull,            // K = even space, H inside D_n: H = D_n
  kAlternatingTwisted,  // K = even space, H not inside D_n
  kFull,                // K = F_2^n:        H = B_n
};

const char* extension_class_name(ExtensionClass c);

struct SubgroupShape {
  ExtensionClass cls;
  uint32_t kernel_dim = 0;
  bool inside_dn = false;
  BigInt order;  // n! * 2^kernel_dim
};

// Classifies <x, y> for a pair whose pi-images generate S_n (checked;
// StructuralError otherwise). Requires n >= 5 (CapabilityError below
// that). Runs a stabilizer chain on the degree-n pi-action carrying the
// sign parts along; sift residues with trivial permutation part span K
// over GF(2), so the whole computation is XOR/popcount on machine words
// instead of a degree-2n chain.
SubgroupShape analyze_pair(const SignedPermutation& x,
                           const SignedPermutation& y);
ExtensionClass classify(const SignedPermutation& x,
                        const SignedPermutation& y);

enum class LiftSearchMode { kExhaustive, kHeuristic };

// Searches S_n for a recipe realizing the triple: the signed generator
// must have even order, as must the product, so triples with an odd r (or
// with both p and q odd) have no recipe. Exhaustive mode is authoritative
// for recipe absence; heuristic mode is budgeted random sampling.
std::optional<LiftRecipe> find_liftable_pair(uint32_t n, const Triple& t,
                                             LiftSearchMode mode,
                                             uint64_t budget, uint64_t seed,
                                             uint64_t threshold);

}  // namespace cxg
