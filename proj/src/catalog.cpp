#include "cxg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cxg {

namespace {

BigInt factorial(uint32_t n) {
  BigInt f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow2(uint32_t k) { return BigInt(1) << k; }

Permutation nat_cycle(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Permutation::from_images(std::move(img));
}

Permutation nat_transposition(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = i;
  img[0] = 1;
  img[1] = 0;
  return Permutation::from_images(std::move(img));
}

Permutation polygon_reflection(uint32_t n) {
  std::vector<uint32_t> img(n);
  for (uint32_t i = 0; i < n; ++i) img[i] = (n - i) % n;
  return Permutation::from_images(std::move(img));
}

CoxeterType coxeter_of(Family f) {
  switch (f) {
    case Family::H3: return CoxeterType::H3;
    case Family::H4: return CoxeterType::H4;
    case Family::F4: return CoxeterType::F4;
    case Family::E6: return CoxeterType::E6;
    case Family::E7: return CoxeterType::E7;
    default: throw InvariantError("not a root-system family");
  }
}

BigInt sporadic_order(Family f) {
  switch (f) {
    case Family::G2: return 12;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
    default: throw InvariantError("not a sporadic family");
  }
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::Dihedral: return "Dih";
    case Family::Symmetric: return "S";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto ranked = [&](const std::string& prefix,
                    Family fam) -> std::optional<GroupSpec> {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
      return std::nullopt;
    uint64_t n = 0;
    for (std::size_t i = prefix.size(); i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      n = n * 10 + static_cast<uint64_t>(s[i] - '0');
      if (n > 1'000'000) throw StructuralError("rank out of range: " + text);
    }
    return GroupSpec{fam, static_cast<uint32_t>(n)};
  };

  if (s == "G2") return {Family::G2, 0};
  if (s == "H3" || s == "I3") return {Family::H3, 0};
  if (s == "H4" || s == "I4") return {Family::H4, 0};
  if (s == "F4") return {Family::F4, 0};
  if (s == "E6") return {Family::E6, 0};
  if (s == "E7") return {Family::E7, 0};
  if (s == "E8")
    throw CapabilityError("E8 is outside the scope of this catalog");
  if (auto g = ranked("DIH", Family::Dihedral)) return *g;
  if (auto g = ranked("S", Family::Symmetric)) return *g;
  if (auto g = ranked("B", Family::B)) return *g;
  if (auto g = ranked("D", Family::D)) return *g;
  throw StructuralError("unrecognized group spec: " + text);
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::Dihedral:
    case Family::Symmetric:
    case Family::B:
    case Family::D:
      return std::string(family_name(family)) + std::to_string(n);
    default:
      return family_name(family);
  }
}

// ---------------------------------------------------------------------------
// Partitions and signed cycle types.

std::vector<std::vector<uint32_t>> partitions_of(uint32_t n) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  // Parts non-increasing; generated in lexicographically decreasing order.
  std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t left,
                                                    uint32_t maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (uint32_t part = std::min(left, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

uint64_t SignedCycleType::element_order() const {
  uint64_t ord = 1;
  for (uint32_t len : positive) ord = lcm_u64(ord, len);
  for (uint32_t len : negative) ord = lcm_u64(ord, 2ull * len);
  return ord;
}

std::vector<SignedCycleType> signed_cycle_types(uint32_t n) {
  std::vector<SignedCycleType> out;
  for (uint32_t pos_total = 0; pos_total <= n; ++pos_total) {
    auto pos_parts = partitions_of(pos_total);
    auto neg_parts = partitions_of(n - pos_total);
    for (const auto& lp : pos_parts)
      for (const auto& lm : neg_parts) out.push_back({lp, lm});
  }
  return out;
}

SignedCycleType signed_cycle_type_of(const SignedPermutation& x) {
  SignedCycleType t;
  const Permutation& s = x.perm();
  std::vector<bool> seen(s.degree(), false);
  for (uint32_t i = 0; i < s.degree(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0, j = i;
    bool odd = false;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      odd ^= x.signs().test(j);
      j = s[j];
    }
    (odd ? t.negative : t.positive).push_back(len);
  }
  std::sort(t.positive.begin(), t.positive.end(), std::greater<>());
  std::sort(t.negative.begin(), t.negative.end(), std::greater<>());
  return t;
}

SignedPermutation signed_type_rep(const SignedCycleType& t, uint32_t n) {
  std::vector<uint32_t> img(n);
  SignVector signs(n);
  uint32_t at = 0;
  auto lay_cycle = [&](uint32_t len) {
    for (uint32_t k = 0; k < len; ++k)
      img[at + k] = at + (k + 1) % len;
    at += len;
  };
  for (uint32_t len : t.positive) lay_cycle(len);
  for (uint32_t len : t.negative) {
    signs = signs.with_bit(at);
    lay_cycle(len);
  }
  if (at != n) throw StructuralError("signed cycle type does not sum to n");
  return SignedPermutation(Permutation::from_images(std::move(img)), signs);
}

namespace {

BigInt type_centralizer_order(const std::vector<uint32_t>& parts) {
  std::map<uint32_t, uint32_t> mult;
  for (uint32_t len : parts) ++mult[len];
  BigInt z = 1;
  for (auto [len, m] : mult) {
    z *= factorial(m);
    for (uint32_t i = 0; i < m; ++i) z *= 2u * len;
  }
  return z;
}

}  // namespace

BigInt bn_class_size(const SignedCycleType& t, uint32_t n) {
  BigInt group = factorial(n) * pow2(n);
  BigInt centralizer =
      type_centralizer_order(t.positive) * type_centralizer_order(t.negative);
  if (group % centralizer != 0)
    throw InvariantError("centralizer does not divide group order");
  return group / centralizer;
}

bool dn_class_splits(const SignedCycleType& t) {
  if (!t.negative.empty()) return false;
  for (uint32_t len : t.positive)
    if (len % 2 != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Realization.

RealizedGroup realize(const GroupSpec& spec) {
  RealizedGroup rg;
  rg.spec = spec;
  BigInt expected;

  switch (spec.family) {
    case Family::Dihedral: {
      if (spec.n < 3) throw StructuralError("dihedral rank must be >= 3");
      rg.realization = Realization::kDihedralPolygon;
      rg.group =
          GroupHandle::build({nat_cycle(spec.n), polygon_reflection(spec.n)});
      expected = BigInt(2) * spec.n;
      break;
    }
    case Family::G2: {
      rg.realization = Realization::kDihedralPolygon;
      rg.group = GroupHandle::build({nat_cycle(6), polygon_reflection(6)});
      rg.note = "G2 is the dihedral group of order 12";
      expected = 12;
      break;
    }
    case Family::Symmetric: {
      if (spec.n < 2) throw StructuralError("symmetric rank must be >= 2");
      rg.realization = Realization::kNaturalSymmetric;
      rg.group =
          GroupHandle::build({nat_transposition(spec.n), nat_cycle(spec.n)});
      expected = factorial(spec.n);
      break;
    }
    case Family::B:
    case Family::D: {
      const bool is_d = spec.family == Family::D;
      if (spec.n < 3)
        throw StructuralError("wreath ranks start at 3");
      if (spec.n > SignVector::max_length())
        throw CapabilityError("rank exceeds the sign-vector word (64)");
      rg.realization = Realization::kSignedDeg2n;
      rg.wreath_rank = spec.n;
      SignVector zero(spec.n);
      rg.signed_gens = {
          SignedPermutation(nat_transposition(spec.n), zero),
          SignedPermutation(nat_cycle(spec.n), zero),
      };
      if (is_d) {
        rg.signed_gens.push_back(SignedPermutation(
            Permutation(spec.n),
            zero.with_bit(spec.n - 2).with_bit(spec.n - 1)));
      } else {
        rg.signed_gens.push_back(SignedPermutation(
            Permutation(spec.n), zero.with_bit(spec.n - 1)));
      }
      std::vector<Permutation> gens;
      for (const auto& sg : rg.signed_gens) gens.push_back(to_degree_2n(sg));
      rg.group = GroupHandle::build(std::move(gens));
      expected = factorial(spec.n) * pow2(is_d ? spec.n - 1 : spec.n);
      if (is_d && spec.n == 3) rg.note = "D3 = S4 (order 24)";
      break;
    }
    default: {
      rg.realization = Realization::kRootAction;
      RootSystem rs = RootSystem::build(coxeter_of(spec.family));
      rg.group = GroupHandle::build(rs.simple_reflection_perms());
      expected = sporadic_order(spec.family);
      if (spec.family == Family::H3) rg.note = "H3 is also written I3";
      if (spec.family == Family::H4) rg.note = "H4 is also written I4";
      break;
    }
  }

  if (rg.group.order() != expected)
    throw InvariantError("realized order of " + spec.to_string() +
                         " does not match its closed form");
  return rg;
}

// ---------------------------------------------------------------------------
// Family-aware class representatives and spectra.

std::vector<ConjugacyClass> RealizedGroup::class_reps(
    uint64_t threshold) const {
  switch (spec.family) {
    case Family::Symmetric: {
      std::vector<ConjugacyClass> out;
      BigInt total = factorial(spec.n);
      for (const auto& parts : partitions_of(spec.n)) {
        SignedCycleType t{parts, {}};
        SignedPermutation rep = signed_type_rep(t, spec.n);
        std::map<uint32_t, uint32_t> mult;
        BigInt z = 1;
        for (uint32_t len : parts) ++mult[len];
        for (auto [len, m] : mult) {
          z *= factorial(m);
          for (uint32_t i = 0; i < m; ++i) z *= len;
        }
        out.push_back({rep.perm(), total / z});
      }
      std::sort(out.begin(), out.end(),
                [](const ConjugacyClass& a, const ConjugacyClass& b) {
                  uint64_t oa = order(a.rep), ob = order(b.rep);
                  if (oa != ob) return oa < ob;
                  return a.rep < b.rep;
                });
      return out;
    }
    case Family::B:
    case Family::D: {
      const bool is_d = spec.family == Family::D;
      std::vector<ConjugacyClass> out;
      SignedPermutation flip(Permutation(spec.n),
                             SignVector(spec.n).with_bit(0));
      for (const SignedCycleType& t : signed_cycle_types(spec.n)) {
        if (is_d && !t.in_dn()) continue;
        SignedPermutation rep = signed_type_rep(t, spec.n);
        BigInt size = bn_class_size(t, spec.n);
        if (is_d && dn_class_splits(t)) {
          BigInt half = size / 2;
          out.push_back({to_degree_2n(rep), half});
          SignedPermutation other = multiply(multiply(flip, rep), flip);
          out.push_back({to_degree_2n(other), half});
        } else {
          out.push_back({to_degree_2n(rep), size});
        }
      }
      std::sort(out.begin(), out.end(),
                [](const ConjugacyClass& a, const ConjugacyClass& b) {
                  uint64_t oa = order(a.rep), ob = order(b.rep);
                  if (oa != ob) return oa < ob;
                  return a.rep < b.rep;
                });
      return out;
    }
    default:
      return group.class_representatives(threshold);
  }
}

std::set<uint64_t> RealizedGroup::spectrum(uint64_t threshold) const {
  std::set<uint64_t> out;
  switch (spec.family) {
    case Family::Symmetric:
      for (const auto& parts : partitions_of(spec.n))
        out.insert(SignedCycleType{parts, {}}.element_order());
      return out;
    case Family::B:
    case Family::D:
      for (const SignedCycleType& t : signed_cycle_types(spec.n)) {
        if (spec.family == Family::D && !t.in_dn()) continue;
        out.insert(t.element_order());
      }
      return out;
    case Family::Dihedral:
    case Family::G2: {
      uint32_t n = spec.family == Family::G2 ? 6 : spec.n;
      out.insert(1);
      out.insert(2);
      for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) out.insert(d);
      return out;
    }
    default:
      return group.order_spectrum(threshold);
  }
}

std::string RealizedGroup::display_element(const Permutation& p) const {
  if (realization == Realization::kSignedDeg2n)
    return from_degree_2n(p).to_string();
  return p.to_cycles();
}

Permutation RealizedGroup::parse_element(const std::string& text) const {
  if (realization == Realization::kSignedDeg2n) {
    SignedPermutation sp = SignedPermutation::parse(text);
    if (sp.rank() != wreath_rank)
      throw StructuralError("element rank does not match group");
    return to_degree_2n(sp);
  }
  return Permutation::from_cycles(text, group.degree());
}

// ---------------------------------------------------------------------------
// Quotients.

std::vector<QuotientImage> quotient_images(const GroupSpec& spec) {
  if (spec.family != Family::B && spec.family != Family::D)
    throw StructuralError("quotients are provided for B_n and D_n only");
  const uint32_t n = spec.n;
  std::vector<QuotientImage> out;

  // Forget the signs: the pi map onto S_n.
  out.push_back(QuotientImage{
      GroupSpec{Family::Symmetric, n},
      pow2(spec.family == Family::B ? n : n - 1),
      [](const Permutation& p) { return pi(from_degree_2n(p)); }});

  if (spec.family == Family::B && n % 2 == 1) {
    // Fold by the center: of {x, x*z} exactly one has even signs when n
    // is odd, and picking it is a homomorphism onto D_n.
    SignedPermutation z(Permutation(n), SignVector::all_ones(n));
    out.push_back(QuotientImage{
        GroupSpec{Family::D, n}, BigInt(2), [z](const Permutation& p) {
          SignedPermutation sp = from_degree_2n(p);
          if (!is_in_dn(sp)) sp = multiply(sp, z);
          return to_degree_2n(sp);
        }});
  }
  return out;
}

}  // namespace cxg
