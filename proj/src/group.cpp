#include "cxg/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cxg/kernels.hpp"

namespace cxg {

namespace {

uint32_t smallest_moved_point(const Permutation& p) {
  for (uint32_t i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  throw InvariantError("identity has no moved point");
}

struct SpanHash {
  std::size_t operator()(const std::vector<uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

void GroupHandle::check_degree(const Permutation& p) const {
  if (p.degree() != degree_)
    throw StructuralError("permutation degree does not match group degree");
}

std::pair<Permutation, std::size_t> GroupHandle::strip(
    Permutation h, std::size_t from) const {
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    if (h.is_identity()) return {std::move(h), lvl};
    const ChainLevel& L = levels_[lvl];
    uint32_t pt = h[L.base];
    int32_t k = L.slot.empty() ? -1 : L.slot[pt];
    if (k < 0) return {std::move(h), lvl};
    h = compose(h, L.inv_transversal[k]);
  }
  return {std::move(h), levels_.size()};
}

// Effective generating set of level lvl: every strong generator whose
// dropout level is lvl or deeper stabilizes the first lvl base points and
// so belongs to this level's stabilizer subgroup.
std::vector<const Permutation*> GroupHandle::effective_gens(
    std::size_t lvl) const {
  std::vector<const Permutation*> out;
  for (std::size_t m = lvl; m < levels_.size(); ++m)
    for (const Permutation& s : levels_[m].gens) out.push_back(&s);
  return out;
}

void GroupHandle::rebuild_orbit(std::size_t lvl) {
  std::vector<const Permutation*> gens = effective_gens(lvl);
  ChainLevel& L = levels_[lvl];
  L.orbit.assign(1, L.base);
  L.slot.assign(degree_, -1);
  L.slot[L.base] = 0;
  L.transversal.assign(1, Permutation(degree_));
  L.inv_transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (const Permutation* s : gens) {
      uint32_t q = (*s)[L.orbit[k]];
      if (L.slot[q] < 0) {
        L.slot[q] = static_cast<int32_t>(L.orbit.size());
        L.orbit.push_back(q);
        L.transversal.push_back(compose(L.transversal[k], *s));
        L.inv_transversal.push_back(inverse(L.transversal.back()));
      }
    }
  }
}

void GroupHandle::add_level(const Permutation& witness) {
  ChainLevel L;
  L.base = smallest_moved_point(witness);
  levels_.push_back(std::move(L));
}

GroupHandle GroupHandle::build(std::vector<Permutation> generators) {
  if (generators.empty())
    throw StructuralError("group requires at least one generator");
  GroupHandle g;
  g.degree_ = generators.front().degree();
  for (const Permutation& p : generators) {
    if (p.degree() != g.degree_)
      throw StructuralError("generators have mixed degrees");
    if (!p.is_identity()) g.gens_.push_back(p);
    if (cycle_type(p).parity() < 0) g.has_odd_element_ = true;
  }

  // Seed the chain: sift each generator and install its residue.
  for (const Permutation& p : g.gens_) {
    auto [r, lvl] = g.strip(p, 0);
    if (r.is_identity()) continue;
    if (lvl == g.levels_.size()) g.add_level(r);
    g.levels_[lvl].gens.push_back(std::move(r));
  }

  // Sims verification loop: a level is accepted once every Schreier
  // generator of the level sifts to the identity through the deeper part
  // of the chain; failures descend and re-verify from there.
  if (!g.levels_.empty()) {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(g.levels_.size()) - 1;
    while (i >= 0) {
      g.rebuild_orbit(static_cast<std::size_t>(i));
      std::vector<const Permutation*> gens =
          g.effective_gens(static_cast<std::size_t>(i));
      ChainLevel& L = g.levels_[static_cast<std::size_t>(i)];
      bool clean = true;
      for (std::size_t k = 0; clean && k < L.orbit.size(); ++k) {
        for (const Permutation* s : gens) {
          Permutation u = compose(L.transversal[k], *s);
          int32_t j = L.slot[u[L.base]];
          Permutation schreier = compose(u, L.inv_transversal[j]);
          if (schreier.is_identity()) continue;
          auto [r, lvl] = g.strip(std::move(schreier),
                                  static_cast<std::size_t>(i) + 1);
          if (r.is_identity()) continue;
          if (lvl == g.levels_.size()) g.add_level(r);
          g.levels_[lvl].gens.push_back(std::move(r));
          i = static_cast<std::ptrdiff_t>(lvl);
          clean = false;
          break;
        }
      }
      if (clean) --i;
    }
  }

  g.order_ = 1;
  for (const ChainLevel& L : g.levels_) g.order_ *= L.orbit.size();

  // Orbit partition of the whole group (union-find over generator edges).
  g.orbit_ids_.assign(g.degree_, 0);
  std::vector<uint32_t> parent(g.degree_);
  for (uint32_t i = 0; i < g.degree_; ++i) parent[i] = i;
  std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& p : g.gens_)
    for (uint32_t i = 0; i < g.degree_; ++i) {
      uint32_t a = find(i), b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<uint32_t, uint32_t> relabel;
  for (uint32_t i = 0; i < g.degree_; ++i) {
    uint32_t root = find(i);
    auto [it, fresh] = relabel.try_emplace(root, g.orbit_count_);
    if (fresh) ++g.orbit_count_;
    g.orbit_ids_[i] = it->second;
  }
  return g;
}

bool GroupHandle::contains(const Permutation& p) const {
  check_degree(p);
  auto [r, lvl] = strip(p, 0);
  return r.is_identity();
}

bool GroupHandle::is_generating_pair(const Permutation& x,
                                     const Permutation& y) const {
  check_degree(x);
  check_degree(y);
  // Parity certificate: two even elements only ever generate even ones.
  if (has_odd_element_ && parity(x) > 0 && parity(y) > 0) return false;

  // Orbit certificate: the pair's orbit partition must already match the
  // group's (it always refines it, so comparing counts is enough).
  std::vector<uint32_t> parent(degree_);
  for (uint32_t i = 0; i < degree_; ++i) parent[i] = i;
  std::function<uint32_t(uint32_t)> find = [&](uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  uint32_t comps = degree_;
  auto unite = [&](uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --comps;
    }
  };
  for (uint32_t i = 0; i < degree_; ++i) {
    unite(i, x[i]);
    unite(i, y[i]);
  }
  if (comps != orbit_count_) return false;

  return GroupHandle::build({x, y}).order() == order_;
}

bool GroupHandle::for_each_element(
    const std::function<bool(std::span<const uint32_t>)>& fn) const {
  const std::size_t L = levels_.size();
  std::vector<uint32_t> identity(degree_);
  for (uint32_t i = 0; i < degree_; ++i) identity[i] = i;
  if (L == 0) return fn(identity);

  std::vector<std::size_t> idx(L, 0);
  std::vector<std::vector<uint32_t>> buf(L,
                                         std::vector<uint32_t>(degree_));
  auto recompute_from = [&](std::size_t lvl) {
    for (std::size_t m = lvl; m < L; ++m) {
      const uint32_t* t = levels_[m].transversal[idx[m]].data();
      const uint32_t* acc = (m == 0) ? identity.data() : buf[m - 1].data();
      kernels::compose(t, acc, buf[m].data(), degree_);
    }
  };
  recompute_from(0);
  while (true) {
    if (!fn(buf[L - 1])) return false;
    std::size_t lvl = L;
    while (lvl-- > 0) {
      if (++idx[lvl] < levels_[lvl].transversal.size()) {
        recompute_from(lvl);
        break;
      }
      idx[lvl] = 0;
      if (lvl == 0) return true;
    }
  }
}

bool GroupHandle::for_each_element_of_order(
    uint64_t q, uint64_t max_enumerate,
    const std::function<bool(std::span<const uint32_t>)>& fn) const {
  if (order_ > max_enumerate)
    throw CapabilityError("group too large to enumerate (threshold " +
                          std::to_string(max_enumerate) + ")");
  OrderScanner scan;
  return for_each_element([&](std::span<const uint32_t> img) {
    return scan.order_of(img) == q ? fn(img) : true;
  });
}

std::set<uint64_t> GroupHandle::order_spectrum(uint64_t max_enumerate) const {
  if (order_ > max_enumerate)
    throw CapabilityError("group too large to enumerate (threshold " +
                          std::to_string(max_enumerate) + ")");
  std::set<uint64_t> spectrum;
  OrderScanner scan;
  for_each_element([&](std::span<const uint32_t> img) {
    spectrum.insert(scan.order_of(img));
    return true;
  });
  return spectrum;
}

std::vector<ConjugacyClass> GroupHandle::class_representatives(
    uint64_t max_enumerate) const {
  if (order_ > max_enumerate)
    throw CapabilityError("group too large to enumerate (threshold " +
                          std::to_string(max_enumerate) + ")");

  std::vector<std::vector<uint32_t>> elements;
  std::unordered_map<std::vector<uint32_t>, uint32_t, SpanHash> index;
  for_each_element([&](std::span<const uint32_t> img) {
    std::vector<uint32_t> v(img.begin(), img.end());
    index.emplace(v, static_cast<uint32_t>(elements.size()));
    elements.push_back(std::move(v));
    return true;
  });

  std::vector<Permutation> inv_gens;
  for (const Permutation& s : gens_) inv_gens.push_back(inverse(s));

  std::vector<bool> seen(elements.size(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<uint32_t> work;
  for (uint32_t start = 0; start < elements.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    work.assign(1, start);
    uint64_t size = 0;
    std::vector<uint32_t> scratch(degree_), scratch2(degree_);
    while (!work.empty()) {
      uint32_t cur = work.back();
      work.pop_back();
      ++size;
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        // conjugate: s^-1 * g * s
        kernels::compose(inv_gens[s].data(), elements[cur].data(),
                         scratch.data(), degree_);
        kernels::compose(scratch.data(), gens_[s].data(), scratch2.data(),
                         degree_);
        auto it = index.find(scratch2);
        if (it == index.end())
          throw InvariantError("conjugate escaped the enumerated group");
        if (!seen[it->second]) {
          seen[it->second] = true;
          work.push_back(it->second);
        }
      }
    }
    classes.push_back(
        {Permutation::from_images(elements[start]), BigInt(size)});
  }

  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) {
              uint64_t oa = cxg::order(a.rep);
              uint64_t ob = cxg::order(b.rep);
              if (oa != ob) return oa < ob;
              return a.rep < b.rep;
            });
  return classes;
}

BigInt bfs_closure_order(const std::vector<Permutation>& gens,
                         uint64_t limit) {
  if (gens.empty()) throw StructuralError("closure of empty generator set");
  std::set<Permutation> seen;
  std::vector<Permutation> work;
  Permutation id(gens.front().degree());
  seen.insert(id);
  work.push_back(id);
  while (!work.empty()) {
    Permutation cur = std::move(work.back());
    work.pop_back();
    for (const Permutation& s : gens) {
      Permutation nxt = compose(cur, s);
      if (seen.insert(nxt).second) {
        if (seen.size() > limit)
          throw CapabilityError("BFS closure exceeded its limit");
        work.push_back(std::move(nxt));
      }
    }
  }
  return BigInt(seen.size());
}

}  // namespace cxg
