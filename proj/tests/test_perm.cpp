#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cxg/perm.hpp"

using namespace cxg;

namespace {

Permutation random_perm(uint32_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (uint32_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return Permutation::from_images(std::move(v));
}

}  // namespace

TEST_CASE("identity composes trivially") {
  Permutation id(5);
  Permutation x = Permutation::from_cycles("(1 2 5)", 5);
  CHECK(compose(id, x) == x);
  CHECK(compose(x, id) == x);
  CHECK(compose(x, inverse(x)) == id);
  CHECK(inverse(id) == id);
}

TEST_CASE("composition follows the left-to-right convention") {
  // Value pinned by the signed-permutation homomorphism oracle (see the
  // signed suite): apply (1 2) first, then (2 3).
  Permutation a = Permutation::from_cycles("(1 2)", 3);
  Permutation b = Permutation::from_cycles("(2 3)", 3);
  CHECK(compose(a, b) == Permutation::from_cycles("(1 3 2)", 3));
  CHECK(compose(b, a) == Permutation::from_cycles("(1 2 3)", 3));
}

TEST_CASE("inverse of an involution and of a random element") {
  CHECK(inverse(Permutation::from_cycles("(1 2)", 4)) ==
        Permutation::from_cycles("(1 2)", 4));
  std::mt19937_64 rng(7);
  Permutation c = random_perm(9, rng);
  // Brute-force oracle: the unique d with compose(c, d) = identity, found
  // by scanning all points.
  std::vector<uint32_t> img(9);
  for (uint32_t j = 0; j < 9; ++j)
    for (uint32_t i = 0; i < 9; ++i)
      if (c[i] == j) img[j] = i;
  CHECK(inverse(c) == Permutation::from_images(img));
  CHECK(compose(c, inverse(c)).is_identity());
}

TEST_CASE("order equals the iterated-composition count") {
  CHECK(order(Permutation(4)) == 1);
  CHECK(order(Permutation::from_cycles("(1 2)(3 4 5)", 5)) == 6);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    Permutation g = random_perm(12, rng);
    Permutation acc = g;
    uint64_t k = 1;
    while (!acc.is_identity()) {
      acc = compose(acc, g);
      ++k;
    }
    CHECK(order(g) == k);
  }
}

TEST_CASE("cycle structure and fixed points") {
  Permutation id(4);
  CHECK(fixed_points(id).size() == 4);
  Permutation g = Permutation::from_cycles("(1 2 3)", 5);
  CycleType ct = cycle_type(g);
  CHECK(ct.lengths == std::vector<uint32_t>{3, 1, 1});
  CHECK(fixed_points(g) == std::vector<uint32_t>{3, 4});
  CHECK(ct.order() == 3);
  CHECK(ct.degree() == 5);
}

TEST_CASE("cycle types over all of S_5 hit the 7 partitions of 5") {
  std::vector<uint32_t> base(5);
  std::iota(base.begin(), base.end(), 0u);
  std::set<CycleType> seen;
  uint64_t count = 0;
  // Independent enumeration through std::next_permutation.
  std::sort(base.begin(), base.end());
  do {
    seen.insert(cycle_type(Permutation::from_images(base)));
    ++count;
  } while (std::next_permutation(base.begin(), base.end()));
  CHECK(count == 120);
  CHECK(seen.size() == 7);
}

TEST_CASE("parity is a homomorphism and order is conjugation-stable") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    Permutation a = random_perm(10, rng), b = random_perm(10, rng);
    CHECK(parity(compose(a, b)) == parity(a) * parity(b));
    CHECK(order(a) == order(inverse(a)));
    CHECK(order(compose(a, b)) == order(compose(b, a)));
  }
}

TEST_CASE("compose is associative on random triples") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    Permutation a = random_perm(8, rng), b = random_perm(8, rng),
                c = random_perm(8, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("bijectivity is preserved and validated") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), StructuralError);
  CHECK_THROWS_AS(Permutation::from_images({}), StructuralError);
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    Permutation a = random_perm(20, rng), b = random_perm(20, rng);
    std::vector<bool> seen(20, false);
    Permutation c = compose(a, b);
    for (uint32_t i = 0; i < 20; ++i) seen[c[i]] = true;
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }));
  }
}

TEST_CASE("cycle notation round trip") {
  CHECK(Permutation(6).to_cycles() == "()");
  Permutation g = Permutation::from_cycles(" (1 2) ( 3 4 5 ) ", 6);
  CHECK(g.to_cycles() == "(1 2)(3 4 5)");
  CHECK(Permutation::from_cycles(g.to_cycles(), 6) == g);
  CHECK(Permutation::from_cycles("(1,2)(3,4,5)", 6) == g);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 4), StructuralError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 4), StructuralError);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 1)", 4), StructuralError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 9)", 4), StructuralError);
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    Permutation g2 = random_perm(15, rng);
    CHECK(Permutation::from_cycles(g2.to_cycles(), 15) == g2);
  }
}

TEST_CASE("degree mismatch is a structural error") {
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), StructuralError);
}

TEST_CASE("power uses binary exponentiation correctly") {
  std::mt19937_64 rng(17);
  Permutation g = random_perm(9, rng);
  Permutation acc(9);
  for (uint64_t k = 0; k < 30; ++k) {
    CHECK(power(g, k) == acc);
    acc = compose(acc, g);
  }
}
