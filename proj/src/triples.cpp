#include "cxg/triples.hpp"

#include <algorithm>

namespace cxg {

Triple::Triple(uint64_t p_, uint64_t q_, uint64_t r_) : p(p_), q(q_), r(r_) {
  if (p == 0 || q == 0 || r == 0)
    throw StructuralError("triple entries must be positive");
  if (!(p <= q && q <= r))
    throw StructuralError("triple must satisfy p <= q <= r");
}

BigRat Triple::sum() const {
  return BigRat(1, BigInt(p)) + BigRat(1, BigInt(q)) + BigRat(1, BigInt(r));
}

BigRat Triple::defect() const { return BigRat(1) - sum(); }

int Triple::defect_sign() const {
  // defect < 0  <=>  qr + pr + pq > pqr; entries are catalog-sized, so
  // 128-bit products are exact.
  using u128 = unsigned __int128;
  u128 num = u128(q) * r + u128(p) * r + u128(p) * q;
  u128 den = u128(p) * q * r;
  if (num > den) return -1;
  if (num == den) return 0;
  return 1;
}

std::string Triple::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
         std::to_string(r) + ")";
}

bool Triple::search_order_less(const Triple& a, const Triple& b) {
  using u128 = unsigned __int128;
  // Compare 1/pa+1/qa+1/ra vs 1/pb+1/qb+1/rb by cross multiplication.
  u128 na = u128(a.q) * a.r + u128(a.p) * a.r + u128(a.p) * a.q;
  u128 nb = u128(b.q) * b.r + u128(b.p) * b.r + u128(b.p) * b.q;
  u128 da = u128(a.p) * a.q * a.r;
  u128 db = u128(b.p) * b.q * b.r;
  // na/da vs nb/db; entries stay below ~2^20 so the products fit.
  u128 lhs = na * db, rhs = nb * da;
  if (lhs != rhs) return lhs > rhs;  // larger sum first
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  return a.r < b.r;
}

std::vector<Triple> enumerate_triples(const std::set<uint64_t>& spectrum,
                                      bool parity_prune) {
  if (spectrum.empty()) throw StructuralError("empty order spectrum");
  std::vector<uint64_t> vals(spectrum.begin(), spectrum.end());
  std::vector<Triple> out;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] < 2) continue;
    for (std::size_t j = i; j < vals.size(); ++j)
      for (std::size_t k = j; k < vals.size(); ++k) {
        Triple t(vals[i], vals[j], vals[k]);
        if (parity_prune && t.odd_count() >= 2) continue;
        out.push_back(t);
      }
  }
  std::sort(out.begin(), out.end(), Triple::search_order_less);
  return out;
}

BigInt genus_from_triple(const BigInt& group_order, const Triple& t) {
  int sign = t.defect_sign();
  if (sign < 0) return 0;
  if (sign == 0) return 1;
  // 1 + |G| (pqr - qr - pr - pq) / (2 pqr), exactly.
  BigInt p(t.p), q(t.q), r(t.r);
  BigInt num = group_order * (p * q * r - q * r - p * r - p * q);
  BigInt den = BigInt(2) * p * q * r;
  if (num % den != 0)
    throw InvariantError("Riemann-Hurwitz genus is not an integer");
  return 1 + num / den;
}

}  // namespace cxg
