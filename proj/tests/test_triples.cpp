#include "doctest.h"

#include <algorithm>
#include <random>

#include "cxg/triples.hpp"

using namespace cxg;

namespace {

std::ptrdiff_t position(const std::vector<Triple>& v, const Triple& t) {
  auto it = std::find(v.begin(), v.end(), t);
  return it == v.end() ? -1 : it - v.begin();
}

}  // namespace

TEST_CASE("triple construction and classification") {
  CHECK_THROWS_AS(Triple(3, 2, 4), StructuralError);
  CHECK_THROWS_AS(Triple(0, 2, 4), StructuralError);
  CHECK(Triple(2, 3, 5).defect_sign() < 0);   // spherical
  CHECK(Triple(2, 4, 4).defect_sign() == 0);  // euclidean
  CHECK(Triple(2, 3, 7).defect_sign() > 0);   // hyperbolic
  CHECK(Triple(2, 3, 8).to_string() == "(2,3,8)");
  CHECK(Triple(3, 4, 4).odd_count() == 1);
  CHECK(Triple(3, 3, 4).odd_count() == 2);
}

TEST_CASE("stream ordering on the spectrum {1,2,3,4}") {
  std::vector<Triple> ts = enumerate_triples({1, 2, 3, 4}, false);
  // p = 1 never appears
  for (const Triple& t : ts) CHECK(t.p >= 2);
  // (2,3,4) strictly precedes (2,4,4): larger 1/p+1/q+1/r first
  CHECK(position(ts, Triple(2, 3, 4)) < position(ts, Triple(2, 4, 4)));
  REQUIRE(position(ts, Triple(3, 3, 4)) >= 0);
  // the first hyperbolic entry over this spectrum is (3,3,4)
  auto first_hyp = std::find_if(ts.begin(), ts.end(), [](const Triple& t) {
    return t.defect_sign() > 0;
  });
  REQUIRE(first_hyp != ts.end());
  CHECK(*first_hyp == Triple(3, 3, 4));
}

TEST_CASE("parity pruning keeps at most one odd entry") {
  std::vector<Triple> ts = enumerate_triples({2, 3, 4, 8}, true);
  CHECK(position(ts, Triple(3, 3, 4)) == -1);  // two odds: skipped
  CHECK(position(ts, Triple(2, 3, 8)) >= 0);   // one odd: kept
  for (const Triple& t : ts) CHECK(t.odd_count() <= 1);
}

TEST_CASE("(3,3,4) and (3,3,5) precede every triple of defect >= 1/6") {
  std::vector<Triple> ts = enumerate_triples({2, 3, 4, 5, 6, 7, 8}, false);
  auto big_defect = [](const Triple& t) {
    return t.defect() >= BigRat(1, 6);
  };
  std::ptrdiff_t p334 = position(ts, Triple(3, 3, 4));
  std::ptrdiff_t p335 = position(ts, Triple(3, 3, 5));
  REQUIRE(p334 >= 0);
  REQUIRE(p335 >= 0);
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(ts.size()); ++i)
    if (big_defect(ts[i])) {
      CHECK(p334 < i);
      CHECK(p335 < i);
    }
}

TEST_CASE("equal sums break ties lexicographically") {
  // 1/2+1/3+1/12 = 1/2+1/4+1/6 = 1/3+1/3+1/4 = 11/12
  std::vector<Triple> ts = enumerate_triples({2, 3, 4, 6, 12}, false);
  std::ptrdiff_t a = position(ts, Triple(2, 3, 12));
  std::ptrdiff_t b = position(ts, Triple(2, 4, 6));
  std::ptrdiff_t c = position(ts, Triple(3, 3, 4));
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  REQUIRE(c >= 0);
  CHECK(a < b);
  CHECK(b < c);
  CHECK(b == a + 1);
  CHECK(c == b + 1);
}

TEST_CASE("the stream is strictly sorted by decreasing sum") {
  std::vector<Triple> ts = enumerate_triples({2, 3, 5, 8, 12, 30}, false);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CHECK(Triple::search_order_less(ts[i - 1], ts[i]));
    CHECK(ts[i - 1].sum() >= ts[i].sum());
  }
  CHECK_THROWS_AS(enumerate_triples({}, false), StructuralError);
}

TEST_CASE("Riemann-Hurwitz genus values") {
  CHECK(genus_from_triple(12, Triple(2, 2, 6)) == 0);    // spherical
  CHECK(genus_from_triple(24, Triple(2, 4, 4)) == 1);    // euclidean bound
  CHECK(genus_from_triple(120, Triple(2, 3, 10)) == 5);
  CHECK(genus_from_triple(1152, Triple(2, 6, 6)) == 97);
  CHECK(genus_from_triple(192, Triple(3, 4, 4)) == 17);
  CHECK(genus_from_triple(14400, Triple(2, 4, 6)) == 601);
  CHECK(genus_from_triple(51840, Triple(2, 4, 8)) == 3241);
  CHECK(genus_from_triple(2903040, Triple(2, 4, 7)) == 155521);
  // a (2,3,7) action needs |G| divisible by 84
  CHECK_THROWS_AS(genus_from_triple(2, Triple(2, 3, 7)), InvariantError);
}

TEST_CASE("defect < 1/6 iff |G| > 12 (genus - 1), as an identity") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 2000; ++rep) {
    uint64_t vals[3] = {2 + rng() % 30, 2 + rng() % 30, 2 + rng() % 30};
    std::sort(vals, vals + 3);
    Triple t(vals[0], vals[1], vals[2]);
    if (t.defect_sign() <= 0) continue;
    // pick |G| = 2pqr k so the genus is an integer
    BigInt order = BigInt(2) * t.p * t.q * t.r * (1 + rng() % 50);
    BigInt genus = genus_from_triple(order, t);
    bool lhs = t.defect() < BigRat(1, 6);
    bool rhs = order > 12 * (genus - 1);
    CHECK(lhs == rhs);
  }
}
