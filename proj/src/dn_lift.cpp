#include "cxg/dn_lift.hpp"

#include <algorithm>
#include <random>

#include "cxg/catalog.hpp"
#include "cxg/group.hpp"

namespace cxg {

namespace {

// Cycle id of every point of p, ids assigned in order of smallest member.
std::vector<uint32_t> cycle_ids(const Permutation& p) {
  std::vector<uint32_t> id(p.degree(), UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t i = 0; i < p.degree(); ++i) {
    if (id[i] != UINT32_MAX) continue;
    uint32_t j = i;
    while (id[j] == UINT32_MAX) {
      id[j] = next;
      j = p[j];
    }
    ++next;
  }
  return id;
}

bool generates_symmetric(const Permutation& a, const Permutation& b) {
  static thread_local std::optional<std::pair<uint32_t, BigInt>> cached;
  uint32_t n = a.degree();
  if (!cached || cached->first != n) {
    BigInt f = 1;
    for (uint32_t i = 2; i <= n; ++i) f *= i;
    cached = {n, f};
  }
  return GroupHandle::build({a, b}).order() == cached->second;
}

}  // namespace

void LiftRecipe::validate() const {
  const uint32_t n = sigma.degree();
  if (tau.degree() != n)
    throw StructuralError("lift recipe: degree mismatch");
  if (i >= n || j >= n || i == j || sigma[i] != i || sigma[j] != j)
    throw StructuralError(
        "lift recipe precondition violated: no-fixed-points");
  if (order(sigma) % 2 != 0)
    throw StructuralError(
        "lift recipe precondition violated: odd-order-sigma");
  Permutation prod = compose(sigma, tau);
  if (order(prod) % 2 != 0)
    throw StructuralError(
        "lift recipe precondition violated: odd-order-product");
  std::vector<uint32_t> ids = cycle_ids(prod);
  if (ids[i] != ids[j])
    throw StructuralError(
        "lift recipe precondition violated: not-same-cycle");
  if (n % 2 == 0) {
    if (!k || *k >= n || sigma[*k] != *k || *k == i || *k == j)
      throw StructuralError(
          "lift recipe precondition violated: missing-third-fixed-point");
  } else if (k && (*k >= n || sigma[*k] != *k || *k == i || *k == j)) {
    throw StructuralError(
        "lift recipe precondition violated: missing-third-fixed-point");
  }
  if (!generates_symmetric(sigma, tau))
    throw StructuralError(
        "lift recipe precondition violated: not-symmetric-generators");
}

SignVector LiftRecipe::sign_vector() const {
  return SignVector(sigma.degree()).with_bit(i).with_bit(j);
}

std::pair<SignedPermutation, SignedPermutation> lift(
    const LiftRecipe& recipe) {
  recipe.validate();
  return {SignedPermutation(recipe.sigma, recipe.sign_vector()),
          SignedPermutation(recipe.tau, SignVector(recipe.tau.degree()))};
}

const char* extension_class_name(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::kTrivialSection: return "trivial-section";
    case ExtensionClass::kCenterSplit: return "center-split";
    case ExtensionClass::kDemiFull: return "demi-full";
    case ExtensionClass::kAlternatingTwisted: return "alternating-twisted";
    case ExtensionClass::kFull: return "full";
  }
  return "?";
}

namespace {

// XOR basis over GF(2), one machine word per vector. Rows are kept fully
// reduced with distinct leading bits and sorted descending, so a single
// pass reduces any vector to its canonical form.
class Gf2Span {
 public:
  explicit Gf2Span(uint32_t) {}

  bool contains(uint64_t v) const { return reduce(v) == 0; }

  // Returns true if v enlarged the span.
  bool insert(uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(), std::greater<>());
    return true;
  }

  uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
  const std::vector<uint64_t>& rows() const { return rows_; }

 private:
  uint64_t reduce(uint64_t v) const {
    for (uint64_t row : rows_) v = std::min(v, v ^ row);
    return v;
  }

  std::vector<uint64_t> rows_;
};

// Stabilizer chain over the pi-action (degree n) whose elements carry
// their sign vectors. Sift residues with trivial permutation part feed
// the GF(2) kernel span; closure under coordinate permutation by the
// generators keeps the span an S_n-submodule as it grows.
struct ShadowLevel {
  uint32_t base = 0;
  std::vector<uint32_t> orbit;
  std::vector<int32_t> slot;
  std::vector<SignedPermutation> transversal;
  std::vector<SignedPermutation> inv_transversal;
  std::vector<SignedPermutation> gens;
};

class ShadowChain {
 public:
  ShadowChain(const SignedPermutation& x, const SignedPermutation& y)
      : n_(x.rank()), kernel_(n_) {
    pi_gens_ = {x.perm(), y.perm()};
    insert(x);
    insert(y);
    run();
  }

  uint32_t kernel_dim() const { return kernel_.dim(); }
  const Gf2Span& kernel() const { return kernel_; }
  BigInt pi_order() const {
    BigInt o = 1;
    for (const ShadowLevel& L : levels_) o *= L.orbit.size();
    return o;
  }

 private:
  void insert(const SignedPermutation& g) {
    auto [r, lvl] = strip(g, 0);
    if (r.perm().is_identity()) {
      absorb_kernel_vector(r.signs().bits());
      return;
    }
    if (lvl == levels_.size()) add_level(r.perm());
    levels_[lvl].gens.push_back(std::move(r));
  }

  void add_level(const Permutation& witness) {
    ShadowLevel L;
    for (uint32_t i = 0; i < n_; ++i)
      if (witness[i] != i) {
        L.base = i;
        break;
      }
    levels_.push_back(std::move(L));
  }

  std::pair<SignedPermutation, std::size_t> strip(SignedPermutation h,
                                                  std::size_t from) const {
    for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
      if (h.perm().is_identity()) return {std::move(h), lvl};
      const ShadowLevel& L = levels_[lvl];
      int32_t k = L.slot.empty() ? -1 : L.slot[h.perm()[L.base]];
      if (k < 0) return {std::move(h), lvl};
      h = multiply(h, L.inv_transversal[k]);
    }
    return {std::move(h), levels_.size()};
  }

  // Strong generators added at deeper levels stabilize this level's
  // prefix of base points too, so they take part in its orbit.
  std::vector<const SignedPermutation*> effective_gens(
      std::size_t lvl) const {
    std::vector<const SignedPermutation*> out;
    for (std::size_t m = lvl; m < levels_.size(); ++m)
      for (const SignedPermutation& s : levels_[m].gens) out.push_back(&s);
    return out;
  }

  void rebuild_orbit(std::size_t lvl) {
    std::vector<const SignedPermutation*> gens = effective_gens(lvl);
    ShadowLevel& L = levels_[lvl];
    L.orbit.assign(1, L.base);
    L.slot.assign(n_, -1);
    L.slot[L.base] = 0;
    L.transversal.assign(1, SignedPermutation::identity(n_));
    L.inv_transversal.assign(1, SignedPermutation::identity(n_));
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      for (const SignedPermutation* s : gens) {
        uint32_t q = s->perm()[L.orbit[k]];
        if (L.slot[q] < 0) {
          L.slot[q] = static_cast<int32_t>(L.orbit.size());
          L.orbit.push_back(q);
          L.transversal.push_back(multiply(L.transversal[k], *s));
          L.inv_transversal.push_back(inverse(L.transversal.back()));
        }
      }
    }
  }

  // Kernel vectors conjugate around by the pi-parts of group elements, so
  // close the span under the generators' coordinate actions.
  void absorb_kernel_vector(uint64_t bits) {
    if (bits == 0 || kernel_.contains(bits)) return;
    std::vector<uint64_t> work{bits};
    while (!work.empty()) {
      uint64_t v = work.back();
      work.pop_back();
      if (!kernel_.insert(v)) continue;
      for (const Permutation& rho : pi_gens_) {
        SignVector sv(n_, v);
        uint64_t moved = sv.permuted_by(rho).bits();
        if (!kernel_.contains(moved)) work.push_back(moved);
      }
    }
  }

  void run() {
    if (levels_.empty()) return;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      rebuild_orbit(static_cast<std::size_t>(i));
      std::vector<const SignedPermutation*> gens =
          effective_gens(static_cast<std::size_t>(i));
      ShadowLevel& L = levels_[static_cast<std::size_t>(i)];
      bool clean = true;
      for (std::size_t k = 0; clean && k < L.orbit.size(); ++k) {
        for (const SignedPermutation* sp : gens) {
          const SignedPermutation& s = *sp;
          SignedPermutation u = multiply(L.transversal[k], s);
          int32_t j = L.slot[u.perm()[L.base]];
          SignedPermutation schreier = multiply(u, L.inv_transversal[j]);
          if (schreier.is_identity()) continue;
          auto [r, lvl] =
              strip(std::move(schreier), static_cast<std::size_t>(i) + 1);
          if (r.perm().is_identity()) {
            if (r.signs().bits() == 0 ||
                kernel_.contains(r.signs().bits()))
              continue;
            absorb_kernel_vector(r.signs().bits());
            continue;
          }
          if (lvl == levels_.size()) add_level(r.perm());
          levels_[lvl].gens.push_back(std::move(r));
          i = static_cast<std::ptrdiff_t>(lvl);
          clean = false;
          break;
        }
      }
      if (clean) --i;
    }
  }

  uint32_t n_;
  std::vector<Permutation> pi_gens_;
  std::vector<ShadowLevel> levels_;
  Gf2Span kernel_;
};

}  // namespace

SubgroupShape analyze_pair(const SignedPermutation& x,
                           const SignedPermutation& y) {
  const uint32_t n = x.rank();
  if (y.rank() != n) throw StructuralError("rank mismatch");
  if (n < 5)
    throw CapabilityError(
        "subgroup classification requires n >= 5; use the generic engine");
  if (!generates_symmetric(x.perm(), y.perm()))
    throw StructuralError("pi-images do not generate the symmetric group");

  ShadowChain chain(x, y);
  BigInt nfact = 1;
  for (uint32_t i = 2; i <= n; ++i) nfact *= i;
  if (chain.pi_order() != nfact)
    throw InvariantError("shadow chain lost the pi-image");

  SubgroupShape shape;
  shape.kernel_dim = chain.kernel_dim();
  shape.inside_dn = is_in_dn(x) && is_in_dn(y);
  shape.order = nfact << shape.kernel_dim;

  const uint64_t all_ones = SignVector::all_ones(n).bits();
  if (shape.kernel_dim == 0) {
    shape.cls = ExtensionClass::kTrivialSection;
  } else if (shape.kernel_dim == 1) {
    if (chain.kernel().rows() != std::vector<uint64_t>{all_ones})
      throw InvariantError("one-dimensional kernel is not the center");
    shape.cls = ExtensionClass::kCenterSplit;
  } else if (shape.kernel_dim == n - 1) {
    for (uint64_t row : chain.kernel().rows())
      if (SignVector(n, row).weight() % 2 != 0)
        throw InvariantError("codimension-1 kernel is not the even space");
    shape.cls = shape.inside_dn ? ExtensionClass::kDemiFull
                                : ExtensionClass::kAlternatingTwisted;
  } else if (shape.kernel_dim == n) {
    shape.cls = ExtensionClass::kFull;
  } else {
    throw InvariantError("kernel dimension outside {0, 1, n-1, n}");
  }
  return shape;
}

ExtensionClass classify(const SignedPermutation& x,
                        const SignedPermutation& y) {
  return analyze_pair(x, y).cls;
}

namespace {

// The signed generator must carry an even order, and the product order r
// must be even too. Returns the (sigma-order, tau-order) assignments to
// try, preferring sigma <- p.
std::vector<std::pair<uint64_t, uint64_t>> role_assignments(const Triple& t) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  if (t.r % 2 != 0) return out;
  if (t.p % 2 == 0) out.push_back({t.p, t.q});
  if (t.q % 2 == 0 && t.q != t.p) out.push_back({t.q, t.p});
  return out;
}

std::optional<LiftRecipe> make_recipe(const Permutation& sigma,
                                      const Permutation& tau, uint32_t n) {
  std::vector<uint32_t> fixed = fixed_points(sigma);
  uint32_t need = (n % 2 == 0) ? 3 : 2;
  if (fixed.size() < need) return std::nullopt;
  Permutation prod = compose(sigma, tau);
  std::vector<uint32_t> ids = cycle_ids(prod);
  // First two fixed points sharing a product cycle, smallest first.
  for (std::size_t a = 0; a < fixed.size(); ++a)
    for (std::size_t b = a + 1; b < fixed.size(); ++b) {
      if (ids[fixed[a]] != ids[fixed[b]]) continue;
      LiftRecipe recipe;
      recipe.sigma = sigma;
      recipe.tau = tau;
      recipe.i = fixed[a];
      recipe.j = fixed[b];
      if (n % 2 == 0) {
        for (uint32_t f : fixed)
          if (f != recipe.i && f != recipe.j) {
            recipe.k = f;
            break;
          }
      }
      return recipe;
    }
  return std::nullopt;
}

}  // namespace

std::optional<LiftRecipe> find_liftable_pair(uint32_t n, const Triple& t,
                                             LiftSearchMode mode,
                                             uint64_t budget, uint64_t seed,
                                             uint64_t threshold) {
  RealizedGroup sn = realize(GroupSpec{Family::Symmetric, n});
  std::set<uint64_t> spectrum = sn.spectrum(threshold);
  if (!spectrum.count(t.p) || !spectrum.count(t.q) || !spectrum.count(t.r))
    return std::nullopt;

  const uint32_t need = (n % 2 == 0) ? 3 : 2;

  for (auto [sigma_order, tau_order] : role_assignments(t)) {
    if (mode == LiftSearchMode::kExhaustive) {
      std::vector<Permutation> reps;
      for (const ConjugacyClass& c : sn.class_reps(threshold))
        if (order(c.rep) == sigma_order &&
            fixed_points(c.rep).size() >= need)
          reps.push_back(c.rep);
      for (const Permutation& sigma : reps) {
        std::optional<LiftRecipe> found;
        sn.group.for_each_element_of_order(
            tau_order, threshold, [&](std::span<const uint32_t> img) {
              Permutation tau = Permutation::from_images(
                  std::vector<uint32_t>(img.begin(), img.end()));
              if (order(compose(sigma, tau)) != t.r) return true;
              auto recipe = make_recipe(sigma, tau, n);
              if (!recipe) return true;
              if (!sn.group.is_generating_pair(sigma, tau)) return true;
              recipe->validate();
              found = std::move(recipe);
              return false;
            });
        if (found) return found;
      }
    } else {
      std::mt19937_64 rng(seed);
      for (uint64_t trial = 0; trial < budget; ++trial) {
        Permutation gs = [&] {
          Permutation acc(n);
          for (const ChainLevel& L : sn.group.chain())
            acc = compose(L.transversal[rng() % L.transversal.size()], acc);
          return acc;
        }();
        uint64_t os = order(gs);
        if (os % sigma_order != 0) continue;
        Permutation sigma = power(gs, os / sigma_order);
        if (order(sigma) != sigma_order) continue;
        if (fixed_points(sigma).size() < need) continue;
        Permutation gt = [&] {
          Permutation acc(n);
          for (const ChainLevel& L : sn.group.chain())
            acc = compose(L.transversal[rng() % L.transversal.size()], acc);
          return acc;
        }();
        uint64_t ot = order(gt);
        if (ot % tau_order != 0) continue;
        Permutation tau = power(gt, ot / tau_order);
        if (order(compose(sigma, tau)) != t.r) continue;
        auto recipe = make_recipe(sigma, tau, n);
        if (!recipe) continue;
        if (!sn.group.is_generating_pair(sigma, tau)) continue;
        recipe->validate();
        return recipe;
      }
    }
  }
  return std::nullopt;
}

}  // namespace cxg
