#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cxg/perm.hpp"
#include "cxg/types.hpp"

namespace cxg {

// One level of a stabilizer chain: the orbit of the base point under the
// level's generators, with an explicit transversal (transversal[k] maps
// base to orbit[k]; entry 0 is the identity).
struct ChainLevel {
  uint32_t base = 0;
  std::vector<uint32_t> orbit;
  std::vector<int32_t> slot;  // point -> orbit index, -1 outside
  std::vector<Permutation> transversal;
  std::vector<Permutation> inv_transversal;
  std::vector<Permutation> gens;
};

struct ConjugacyClass {
  Permutation rep;
  BigInt size;
};

// A realized finite permutation group: generators plus a deterministic
// stabilizer chain (base points chosen as the smallest moved point, orbits
// extended in BFS order, generators processed in input order). Two builds
// from the same generator list produce identical chains, which makes every
// enumeration order below reproducible. Immutable after build; const
// queries are safe from multiple threads.
class GroupHandle {
 public:
  GroupHandle() = default;  // empty placeholder; build() makes real ones
  static GroupHandle build(std::vector<Permutation> generators);

  uint32_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<ChainLevel>& chain() const { return levels_; }

  bool contains(const Permutation& p) const;

  // Orbit partition of the group on its domain.
  uint32_t orbit_count() const { return orbit_count_; }
  const std::vector<uint32_t>& orbit_ids() const { return orbit_ids_; }
  bool has_odd_element() const { return has_odd_element_; }

  // True iff <x, y> equals this group. Requires x, y of matching degree;
  // callers that pass elements of unknown provenance should check
  // contains() first. Cheap certificates (parity, orbit partition) reject
  // most failing pairs before the chain build.
  bool is_generating_pair(const Permutation& x, const Permutation& y) const;

  // Streams every element exactly once as a span of images, in the fixed
  // chain order (mixed-radix over transversal indices, level 0 outermost).
  // Return false from the callback to stop; returns false if stopped.
  bool for_each_element(
      const std::function<bool(std::span<const uint32_t>)>& fn) const;

  // Streams exactly the elements of the given order, in chain order,
  // without materializing the group. Throws CapabilityError if the group
  // order exceeds max_enumerate.
  bool for_each_element_of_order(
      uint64_t q, uint64_t max_enumerate,
      const std::function<bool(std::span<const uint32_t>)>& fn) const;

  // Exact set of element orders (full enumeration; threshold-guarded).
  std::set<uint64_t> order_spectrum(uint64_t max_enumerate) const;

  // One representative per conjugacy class with exact class sizes, by
  // enumeration + conjugation closure (threshold-guarded). Sorted by
  // (element order, image vector) for deterministic downstream sharding.
  std::vector<ConjugacyClass> class_representatives(
      uint64_t max_enumerate) const;

 private:
  std::pair<Permutation, std::size_t> strip(Permutation h,
                                            std::size_t from) const;
  std::vector<const Permutation*> effective_gens(std::size_t lvl) const;
  void rebuild_orbit(std::size_t lvl);
  void add_level(const Permutation& witness);
  void check_degree(const Permutation& p) const;

  uint32_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<ChainLevel> levels_;
  BigInt order_ = 1;
  std::vector<uint32_t> orbit_ids_;
  uint32_t orbit_count_ = 0;
  bool has_odd_element_ = false;
};

// Independent oracle used by the tests: closure of the generators under
// products, by plain BFS over a hash set. Exponential in |G|; only for
// small groups.
BigInt bfs_closure_order(const std::vector<Permutation>& gens,
                         uint64_t limit = 2'000'000);

}  // namespace cxg
