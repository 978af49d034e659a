#pragma once

#include <optional>
#include <string>

#include "cxg/catalog.hpp"
#include "cxg/triples.hpp"

namespace cxg {

struct SearchOptions {
  uint64_t threshold = 5'000'000;  // element-enumeration cap
  unsigned jobs = 1;               // parallel shards over x-representatives
};

enum class Provenance { kExhaustive, kHeuristic, kLifted, kSandwich };
const char* provenance_name(Provenance p);

// A concrete generating pair certifying a triple: order(x) = p,
// order(y) = q, order(xy) = r, <x,y> = G. Elements live in the group's
// realized permutation domain.
struct PairWitness {
  Triple triple;
  Permutation x, y;
  Provenance provenance = Provenance::kExhaustive;
};

struct SearchStats {
  uint64_t pairs_scanned = 0;   // (x-rep, y) pairs whose product was tested
  uint64_t order_matches = 0;   // pairs that reached the generation test
  uint64_t triples_tried = 0;
};

struct GenusResult {
  GroupSpec spec;
  BigInt group_order;
  Triple triple;
  BigInt genus;
  bool exact = false;
  Provenance provenance = Provenance::kExhaustive;
  std::optional<PairWitness> witness;
  std::string note;
  SearchStats stats;
};

// Exhaustive search for one triple: x runs over class representatives of
// order p (sharded across jobs), y streams over all elements of order q in
// chain order; the first hit in the global (representative, y) order wins,
// so results are independent of the number of jobs. Absence is
// authoritative. Throws CapabilityError above the enumeration threshold.
std::optional<PairWitness> search_triple(const RealizedGroup& G,
                                         const Triple& t,
                                         const SearchOptions& opts,
                                         SearchStats* stats = nullptr);

// Walks enumerate_triples until the first witness, converts it into the
// genus, and applies the Singerman exactness test (hyperbolic minimal
// defect <= 1/6 certifies equality; spherical minima give genus 0).
GenusResult minimal_pair(const RealizedGroup& G, const SearchOptions& opts);

// Seeded randomized witness search: sample elements uniformly through the
// stabilizer chain, power them down to orders p and q, keep a verified hit.
// Failure is not evidence of absence. budget counts pair attempts.
std::optional<PairWitness> heuristic_pair(const RealizedGroup& G,
                                          const Triple& t, uint64_t budget,
                                          uint64_t seed);

// Verifies a witness from scratch (orders + generation). Used after every
// heuristic/lift hit and by the CLI verify command.
bool verify_witness(const RealizedGroup& G, const PairWitness& w,
                    std::string* why = nullptr);

// Quotient sandwich for B_n / D_n from the published reference rows:
// a (p,q,r) pair of the cover maps to a pair of the quotient whose orders
// divide (p,q,r) and whose defect is no larger, so the quotient brackets
// the achievable defect from above and the cover from below. When the
// bracket collapses and pins a unique divisor-compatible triple, that
// triple is proven minimal without any search.
struct SandwichBound {
  std::optional<Triple> cover_bound;     // from B_n over D_n (n odd)
  std::optional<Triple> quotient_bound;  // from S_n under B_n/D_n
  std::optional<Triple> forced;
};

std::optional<SandwichBound> sandwich_bound(const GroupSpec& spec);

// Exactness rule used for minimal pairs, exposed for tests:
// hyperbolic defect <= 1/6 certifies Riemann-Hurwitz equality.
bool defect_certifies_exact(const Triple& t);

}  // namespace cxg
