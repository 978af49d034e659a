#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cxg/golden.hpp"
#include "cxg/perm.hpp"

namespace cxg {

enum class CoxeterType { H3, H4, F4, E6, E7 };

const char* coxeter_type_name(CoxeterType t);

// Root system of an irreducible finite Coxeter group, realized exactly in
// the simple-root coefficient basis: a root is its coefficient vector over
// Z (crystallographic types) or Z[phi] (H types), and inner products come
// from the Gram matrix of the diagram. Reflections never leave the ring,
// so equality is exact coordinate equality; no floating point anywhere.
class RootSystem {
 public:
  // Closes the simple roots under the simple reflections.
  static RootSystem build(CoxeterType type);

  CoxeterType type() const { return type_; }
  uint32_t rank() const { return rank_; }
  uint32_t root_count() const { return static_cast<uint32_t>(roots_.size()); }

  // Roots sorted lexicographically by coefficient vector; index of a root's
  // negative is negative_of(i).
  const std::vector<std::vector<GoldenInt>>& roots() const { return roots_; }
  uint32_t negative_of(uint32_t root_index) const;

  // Coxeter matrix entry m(i,j) from the diagram (order of s_i s_j).
  uint32_t coxeter_label(uint32_t i, uint32_t j) const;

  // One permutation of the root list per simple reflection. The action is
  // faithful, so these generate the group as a permutation group.
  std::vector<Permutation> simple_reflection_perms() const;

  // Deterministic text dump (sorted roots + action tables) for snapshots.
  std::string dump() const;

 private:
  CoxeterType type_;
  uint32_t rank_ = 0;
  std::vector<std::vector<GoldenInt>> roots_;       // sorted
  std::vector<std::vector<uint32_t>> reflection_;   // [i][root] -> root
};

// Convenience wrapper matching the operation names used elsewhere.
inline RootSystem close_roots(CoxeterType type) { return RootSystem::build(type); }
inline std::vector<Permutation> as_permutation_group(const RootSystem& rs) {
  return rs.simple_reflection_perms();
}

}  // namespace cxg
