#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cxg/types.hpp"

namespace cxg {

// A candidate (p,q,r) signature, always kept in the convention p <= q <= r.
// The defect 1 - 1/p - 1/q - 1/r decides everything: negative means the
// pair lives on the sphere, zero on the torus, positive drives the genus
// through the Riemann-Hurwitz count. All comparisons are exact.
struct Triple {
  uint64_t p = 0, q = 0, r = 0;

  Triple() = default;
  Triple(uint64_t p_, uint64_t q_, uint64_t r_);

  BigRat sum() const;     // 1/p + 1/q + 1/r
  BigRat defect() const;  // 1 - sum
  int defect_sign() const;  // -1 spherical, 0 euclidean, +1 hyperbolic

  uint32_t odd_count() const {
    return (p % 2) + (q % 2) + (r % 2);
  }

  std::string to_string() const;  // "(2,3,8)"

  friend bool operator==(const Triple&, const Triple&) = default;

  // Search order: strictly decreasing 1/p+1/q+1/r, ties broken
  // lexicographically by (p,q,r).
  static bool search_order_less(const Triple& a, const Triple& b);
};

// All triples over the spectrum in search order. Entries with p = 1 are
// omitted: a pair containing the identity generates a cyclic group, and
// no group in the catalog is cyclic. With parity_prune (valid for S_n and
// D_n, where at most one of the three orders of a generating pair can be
// odd) triples with two or more odd entries are skipped.
std::vector<Triple> enumerate_triples(const std::set<uint64_t>& spectrum,
                                      bool parity_prune);

// Riemann-Hurwitz genus of a (p,q,r) action of a group of the given
// order: 1 + |G|/2 * defect for hyperbolic triples (the division is
// exact), 0 for spherical ones, 1 for euclidean ones.
BigInt genus_from_triple(const BigInt& group_order, const Triple& t);

}  // namespace cxg
