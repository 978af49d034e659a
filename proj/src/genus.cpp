#include "cxg/genus.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "cxg/kernels.hpp"
#include "cxg/known_results.hpp"

namespace cxg {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kExhaustive: return "exhaustive";
    case Provenance::kHeuristic: return "heuristic";
    case Provenance::kLifted: return "lifted";
    case Provenance::kSandwich: return "sandwich-bound";
  }
  return "?";
}

bool defect_certifies_exact(const Triple& t) {
  // defect <= 1/6  <=>  6 (pqr - qr - pr - pq) <= pqr.
  using u128 = unsigned __int128;
  u128 pqr = u128(t.p) * t.q * t.r;
  u128 sub = u128(t.q) * t.r + u128(t.p) * t.r + u128(t.p) * t.q;
  if (sub >= pqr) return true;  // spherical or euclidean
  return 6 * (pqr - sub) <= pqr;
}

std::optional<PairWitness> search_triple(const RealizedGroup& G,
                                         const Triple& t,
                                         const SearchOptions& opts,
                                         SearchStats* stats) {
  if (G.group.order() > opts.threshold)
    throw CapabilityError(
        "group order exceeds the enumeration threshold; use the heuristic "
        "search instead");

  std::vector<Permutation> reps;
  for (const ConjugacyClass& c : G.class_reps(opts.threshold))
    if (order(c.rep) == t.p) reps.push_back(c.rep);
  if (reps.empty()) return std::nullopt;

  struct Hit {
    std::size_t rep_index;
    uint64_t y_index;
    Permutation x, y;
  };
  std::mutex best_mutex;
  std::optional<Hit> best;
  std::atomic<std::size_t> best_rep{SIZE_MAX};
  std::atomic<std::size_t> next_rep{0};
  std::atomic<uint64_t> pairs_scanned{0}, order_matches{0};

  // One shard per x-representative, each streaming its own y enumeration.
  // The global winner is the lexicographically smallest (rep, y) hit, so
  // the result does not depend on the job count: a shard stops early only
  // when a strictly earlier representative has already hit.
  auto worker = [&]() {
    std::vector<uint32_t> prod(G.group.degree());
    OrderScanner scan;
    while (true) {
      std::size_t ri = next_rep.fetch_add(1);
      if (ri >= reps.size()) return;
      if (best_rep.load() < ri) continue;
      const Permutation& x = reps[ri];
      uint64_t y_index = 0;
      uint64_t local_pairs = 0, local_matches = 0;
      G.group.for_each_element_of_order(
          t.q, opts.threshold, [&](std::span<const uint32_t> y_img) {
            if (best_rep.load(std::memory_order_relaxed) < ri) return false;
            uint64_t yi = y_index++;
            ++local_pairs;
            kernels::compose(x.data(), y_img.data(), prod.data(),
                             prod.size());
            if (scan.order_of(prod) != t.r) return true;
            ++local_matches;
            Permutation y = Permutation::from_images(
                std::vector<uint32_t>(y_img.begin(), y_img.end()));
            if (!G.group.is_generating_pair(x, y)) return true;
            std::lock_guard<std::mutex> lock(best_mutex);
            if (!best || ri < best->rep_index ||
                (ri == best->rep_index && yi < best->y_index)) {
              best = Hit{ri, yi, x, std::move(y)};
              std::size_t cur = best_rep.load();
              while (ri < cur &&
                     !best_rep.compare_exchange_weak(cur, ri)) {
              }
            }
            return false;  // first hit of this shard is its best
          });
      pairs_scanned += local_pairs;
      order_matches += local_matches;
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  jobs = std::min<std::size_t>(jobs, reps.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (stats) {
    stats->pairs_scanned += pairs_scanned.load();
    stats->order_matches += order_matches.load();
  }
  if (!best) return std::nullopt;
  return PairWitness{t, best->x, best->y, Provenance::kExhaustive};
}

GenusResult minimal_pair(const RealizedGroup& G, const SearchOptions& opts) {
  std::set<uint64_t> spectrum = G.spectrum(opts.threshold);
  std::vector<Triple> triples = enumerate_triples(spectrum, G.parity_prune());
  SearchStats stats;
  for (const Triple& t : triples) {
    ++stats.triples_tried;
    std::optional<PairWitness> w = search_triple(G, t, opts, &stats);
    if (!w) continue;
    if (G.parity_prune() && t.odd_count() >= 2)
      throw InvariantError("parity invariant violated by witness triple");

    GenusResult res;
    res.spec = G.spec;
    res.group_order = G.group.order();
    res.triple = t;
    res.genus = genus_from_triple(res.group_order, t);
    int sign = t.defect_sign();
    if (sign < 0) {
      res.exact = true;  // spherical action: genus 0 attained
    } else if (sign == 0) {
      res.exact = false;
      res.note = "euclidean minimal triple: genus <= 1, reported as bound";
    } else {
      res.exact = defect_certifies_exact(t);
      if (!res.exact)
        res.note = "minimal defect above 1/6: Riemann-Hurwitz upper bound";
    }
    res.provenance = Provenance::kExhaustive;
    res.witness = std::move(w);
    res.stats = stats;
    return res;
  }
  throw InvariantError("no generating pair found for " + G.spec.to_string());
}

namespace {

Permutation sample_uniform(const GroupHandle& g, std::mt19937_64& rng) {
  Permutation acc(g.degree());
  for (const ChainLevel& L : g.chain()) {
    // rng() % size instead of a distribution: the sequence must be
    // identical across standard libraries for reproducible seeds.
    const Permutation& u = L.transversal[rng() % L.transversal.size()];
    acc = compose(u, acc);
  }
  return acc;
}

}  // namespace

std::optional<PairWitness> heuristic_pair(const RealizedGroup& G,
                                          const Triple& t, uint64_t budget,
                                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (uint64_t trial = 0; trial < budget; ++trial) {
    Permutation gx = sample_uniform(G.group, rng);
    uint64_t ox = order(gx);
    if (ox % t.p != 0) continue;
    Permutation gy = sample_uniform(G.group, rng);
    uint64_t oy = order(gy);
    if (oy % t.q != 0) continue;
    Permutation x = power(gx, ox / t.p);
    Permutation y = power(gy, oy / t.q);
    if (order(compose(x, y)) != t.r) continue;
    if (!G.group.is_generating_pair(x, y)) continue;
    PairWitness w{t, std::move(x), std::move(y), Provenance::kHeuristic};
    std::string why;
    if (!verify_witness(G, w, &why))
      throw InvariantError("heuristic witness failed re-verification: " + why);
    return w;
  }
  return std::nullopt;
}

bool verify_witness(const RealizedGroup& G, const PairWitness& w,
                    std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (w.x.degree() != G.group.degree() || w.y.degree() != G.group.degree())
    return fail("element degree does not match the group");
  if (!G.group.contains(w.x)) return fail("x is not a member of the group");
  if (!G.group.contains(w.y)) return fail("y is not a member of the group");
  if (order(w.x) != w.triple.p) return fail("order(x) != p");
  if (order(w.y) != w.triple.q) return fail("order(y) != q");
  if (order(compose(w.x, w.y)) != w.triple.r) return fail("order(xy) != r");
  if (!G.group.is_generating_pair(w.x, w.y))
    return fail("<x,y> is a proper subgroup");
  return true;
}

std::optional<SandwichBound> sandwich_bound(const GroupSpec& spec) {
  if (spec.family != Family::B && spec.family != Family::D)
    return std::nullopt;
  SandwichBound sb;
  if (auto srow = known_row(GroupSpec{Family::Symmetric, spec.n}))
    sb.quotient_bound = srow->triple;
  if (spec.family == Family::D && spec.n % 2 == 1)
    if (auto brow = known_row(GroupSpec{Family::B, spec.n}))
      sb.cover_bound = brow->triple;

  if (sb.cover_bound && sb.quotient_bound &&
      sb.cover_bound->sum() == sb.quotient_bound->sum()) {
    // The quotient pair of the cover's minimal pair has orders dividing
    // the cover triple and a sum at least as large; the S_n row caps the
    // sum from above. Equal bounds force the sum, and if only one
    // divisor-compatible triple attains it, the triple itself.
    auto divisors = [](uint64_t v) {
      std::vector<uint64_t> d;
      for (uint64_t k = 1; k <= v; ++k)
        if (v % k == 0) d.push_back(k);
      return d;
    };
    const Triple& c = *sb.cover_bound;
    std::set<std::array<uint64_t, 3>> seen;
    std::vector<Triple> candidates;
    for (uint64_t a : divisors(c.p))
      for (uint64_t b : divisors(c.q))
        for (uint64_t d : divisors(c.r)) {
          std::array<uint64_t, 3> v{a, b, d};
          std::sort(v.begin(), v.end());
          if (v[0] < 2) continue;  // identity entry: cyclic, impossible here
          Triple cand(v[0], v[1], v[2]);
          if (cand.sum() != c.sum()) continue;
          if (seen.insert(v).second) candidates.push_back(cand);
        }
    if (candidates.size() == 1) sb.forced = candidates.front();
  }
  if (!sb.cover_bound && !sb.quotient_bound) return std::nullopt;
  return sb;
}

}  // namespace cxg
