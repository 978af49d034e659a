#include "doctest.h"

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cxg/catalog.hpp"
#include "cxg/group.hpp"
#include "cxg/signed_perm.hpp"

using namespace cxg;

namespace {

std::vector<Permutation> sn_gens(uint32_t n) {
  return {Permutation::from_cycles("(1 2)", n), [n] {
            std::vector<uint32_t> img(n);
            for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
            return Permutation::from_images(std::move(img));
          }()};
}

std::vector<Permutation> bn_gens_deg2n(uint32_t n) {
  SignVector zero(n);
  std::vector<SignedPermutation> sg = {
      SignedPermutation(Permutation::from_cycles("(1 2)", n), zero),
      SignedPermutation(
          [n] {
            std::vector<uint32_t> img(n);
            for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
            return Permutation::from_images(std::move(img));
          }(),
          zero),
      SignedPermutation(Permutation(n), zero.with_bit(n - 1))};
  std::vector<Permutation> out;
  for (const auto& s : sg) out.push_back(to_degree_2n(s));
  return out;
}

Permutation random_perm(uint32_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  for (uint32_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return Permutation::from_images(std::move(v));
}

}  // namespace

TEST_CASE("stabilizer-chain orders of the basic groups") {
  CHECK(GroupHandle::build(sn_gens(5)).order() == 120);
  CHECK(GroupHandle::build(bn_gens_deg2n(4)).order() == 384);  // 4! 2^4
  // D_4 via even-signed generators: 4! 2^3
  SignVector zero(4);
  std::vector<Permutation> dgens = {
      to_degree_2n(SignedPermutation(Permutation::from_cycles("(1 2)", 4), zero)),
      to_degree_2n(SignedPermutation(Permutation::from_cycles("(1 2 3 4)", 4), zero)),
      to_degree_2n(SignedPermutation(Permutation(4),
                                     zero.with_bit(2).with_bit(3)))};
  CHECK(GroupHandle::build(dgens).order() == 192);
}

TEST_CASE("chain order equals BFS closure order on small groups") {
  for (uint32_t n : {3u, 4u, 5u, 6u}) {
    auto gens = sn_gens(n);
    CHECK(GroupHandle::build(gens).order() == bfs_closure_order(gens));
  }
  for (uint32_t n : {3u, 4u}) {
    auto gens = bn_gens_deg2n(n);
    CHECK(GroupHandle::build(gens).order() == bfs_closure_order(gens));
  }
}

TEST_CASE("membership: identity, parity obstruction, random products") {
  GroupHandle s5 = GroupHandle::build(sn_gens(5));
  CHECK(s5.contains(Permutation(5)));

  // A_5 rejects odd permutations
  GroupHandle a5 = GroupHandle::build(
      {Permutation::from_cycles("(1 2 3)", 5),
       Permutation::from_cycles("(3 4 5)", 5)});
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(Permutation::from_cycles("(1 2)", 5)));
  CHECK(a5.contains(Permutation::from_cycles("(1 2)(3 4)", 5)));

  std::mt19937_64 rng(1);
  GroupHandle b3 = GroupHandle::build(bn_gens_deg2n(3));
  const auto& gens = b3.generators();
  for (int rep = 0; rep < 10'000; ++rep) {
    Permutation w(6);
    int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) w = compose(w, gens[rng() % gens.size()]);
    CHECK(b3.contains(w));
  }
  // and something outside: an odd sign vector is not in D_3
  GroupHandle d3 = GroupHandle::build(
      {to_degree_2n(SignedPermutation(Permutation::from_cycles("(1 2)", 3),
                                      SignVector(3))),
       to_degree_2n(SignedPermutation(Permutation::from_cycles("(1 2 3)", 3),
                                      SignVector(3))),
       to_degree_2n(SignedPermutation(Permutation(3),
                                      SignVector(3).with_bit(1).with_bit(2)))});
  CHECK(d3.order() == 24);
  CHECK_FALSE(d3.contains(
      to_degree_2n(SignedPermutation(Permutation(3), SignVector(3).with_bit(0)))));
}

TEST_CASE("generating-pair test against the BFS closure oracle") {
  // Oracle: |<x,y>| by product closure, on every pair of S_4 and B_3.
  auto check_all_pairs = [](const GroupHandle& g) {
    std::vector<Permutation> elements;
    g.for_each_element([&](std::span<const uint32_t> img) {
      elements.push_back(Permutation::from_images(
          std::vector<uint32_t>(img.begin(), img.end())));
      return true;
    });
    for (const Permutation& x : elements)
      for (const Permutation& y : elements) {
        bool expected = bfs_closure_order({x, y}) == g.order();
        CHECK(g.is_generating_pair(x, y) == expected);
      }
  };
  check_all_pairs(GroupHandle::build(sn_gens(4)));
  check_all_pairs(GroupHandle::build(bn_gens_deg2n(3)));
}

TEST_CASE("generation test is symmetric and conjugation-invariant") {
  GroupHandle s5 = GroupHandle::build(sn_gens(5));
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    Permutation x = random_perm(5, rng), y = random_perm(5, rng);
    bool xy = s5.is_generating_pair(x, y);
    CHECK(xy == s5.is_generating_pair(y, x));
    Permutation c = random_perm(5, rng);
    Permutation xc = compose(compose(inverse(c), x), c);
    Permutation yc = compose(compose(inverse(c), y), c);
    CHECK(xy == s5.is_generating_pair(xc, yc));
  }
  // identity never helps generate a non-cyclic group
  CHECK_FALSE(s5.is_generating_pair(Permutation(5),
                                    Permutation::from_cycles("(1 2 3 4 5)", 5)));
}

TEST_CASE("deterministic rebuilds and enumeration") {
  GroupHandle a = GroupHandle::build(sn_gens(5));
  GroupHandle b = GroupHandle::build(sn_gens(5));
  REQUIRE(a.chain().size() == b.chain().size());
  for (std::size_t i = 0; i < a.chain().size(); ++i) {
    CHECK(a.chain()[i].base == b.chain()[i].base);
    CHECK(a.chain()[i].orbit == b.chain()[i].orbit);
  }
  std::vector<Permutation> ea, eb;
  a.for_each_element([&](std::span<const uint32_t> img) {
    ea.push_back(
        Permutation::from_images(std::vector<uint32_t>(img.begin(), img.end())));
    return true;
  });
  b.for_each_element([&](std::span<const uint32_t> img) {
    eb.push_back(
        Permutation::from_images(std::vector<uint32_t>(img.begin(), img.end())));
    return true;
  });
  CHECK(ea == eb);
  CHECK(ea.size() == 120);
  CHECK(ea.front().is_identity());
  // every element exactly once
  std::set<Permutation> dedup(ea.begin(), ea.end());
  CHECK(dedup.size() == ea.size());
}

TEST_CASE("elements_of_order streams") {
  GroupHandle s4 = GroupHandle::build(sn_gens(4));
  uint64_t count = 0;
  s4.for_each_element_of_order(1, 1'000'000,
                               [&](std::span<const uint32_t> img) {
                                 ++count;
                                 Permutation p = Permutation::from_images(
                                     std::vector<uint32_t>(img.begin(),
                                                           img.end()));
                                 CHECK(p.is_identity());
                                 return true;
                               });
  CHECK(count == 1);
  count = 0;
  s4.for_each_element_of_order(4, 1'000'000,
                               [&](std::span<const uint32_t>) {
                                 ++count;
                                 return true;
                               });
  CHECK(count == 6);  // the 4-cycles
  CHECK_THROWS_AS(
      s4.for_each_element_of_order(2, 10, [](std::span<const uint32_t>) {
        return true;
      }),
      CapabilityError);
}

TEST_CASE("order spectrum of S_4") {
  GroupHandle s4 = GroupHandle::build(sn_gens(4));
  CHECK(s4.order_spectrum(1'000'000) ==
        std::set<uint64_t>{1, 2, 3, 4});
}

TEST_CASE("conjugacy classes of S_5 and B_3 by enumeration") {
  GroupHandle s5 = GroupHandle::build(sn_gens(5));
  auto classes = s5.class_representatives(1'000'000);
  CHECK(classes.size() == 7);  // partitions of 5
  BigInt total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 120);

  GroupHandle b3 = GroupHandle::build(bn_gens_deg2n(3));
  auto bclasses = b3.class_representatives(1'000'000);
  CHECK(bclasses.size() == 10);  // pairs of partitions with |a|+|b| = 3
  BigInt btotal = 0;
  for (const auto& c : bclasses) btotal += c.size;
  CHECK(btotal == 48);
}

TEST_CASE("class sizes of F4 sum to 1152") {
  GroupSpec spec{Family::F4, 0};
  RealizedGroup f4 = realize(spec);
  auto classes = f4.group.class_representatives(1'000'000);
  BigInt total = 0;
  for (const auto& c : classes) total += c.size;
  CHECK(total == 1152);
}

TEST_CASE("spectrum facts used by the searches") {
  RealizedGroup h3 = realize(GroupSpec{Family::H3, 0});
  CHECK(h3.spectrum(1'000'000).count(10) == 1);
  RealizedGroup f4 = realize(GroupSpec{Family::F4, 0});
  CHECK(f4.spectrum(1'000'000).count(6) == 1);
}

TEST_CASE("element order counts over I4 sum to the group order") {
  RealizedGroup h4 = realize(GroupSpec{Family::H4, 0});
  std::map<uint64_t, uint64_t> counts;
  OrderScanner scan;
  h4.group.for_each_element([&](std::span<const uint32_t> img) {
    ++counts[scan.order_of(img)];
    return true;
  });
  uint64_t total = 0;
  for (auto [q, c] : counts) total += c;
  CHECK(total == 14400);
  for (auto [q, c] : counts) {
    uint64_t streamed = 0;
    h4.group.for_each_element_of_order(q, 1'000'000,
                                       [&](std::span<const uint32_t>) {
                                         ++streamed;
                                         return true;
                                       });
    CHECK(streamed == c);
    if (streamed != c) break;
  }
}

TEST_CASE("errors: empty generators and mixed degrees") {
  CHECK_THROWS_AS(GroupHandle::build({}), StructuralError);
  CHECK_THROWS_AS(GroupHandle::build({Permutation(3), Permutation(4)}),
                  StructuralError);
}
