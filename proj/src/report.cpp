#include "cxg/report.hpp"

#include <chrono>
#include <sstream>

#include "cxg/dn_lift.hpp"
#include "cxg/kernels.hpp"

#include "json.hpp"

namespace cxg {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const char* realization_name(Realization r) {
  switch (r) {
    case Realization::kDihedralPolygon: return "dihedral-polygon";
    case Realization::kNaturalSymmetric: return "natural-symmetric";
    case Realization::kSignedDeg2n: return "signed-deg-2n";
    case Realization::kRootAction: return "root-action";
  }
  return "?";
}

std::string rat_string(const BigRat& r) {
  std::ostringstream os;
  os << r.numerator() << "/" << r.denominator();
  return os.str();
}

// Order the lifted pair so that order(x) = p <= order(y) = q.
PairWitness witness_from_lift(const SignedPermutation& sx,
                              const SignedPermutation& sy, const Triple& t) {
  Permutation x = to_degree_2n(sx);
  Permutation y = to_degree_2n(sy);
  if (order(x) != t.p) std::swap(x, y);
  return PairWitness{t, std::move(x), std::move(y), Provenance::kLifted};
}

GenusResult result_from_witness(const RealizedGroup& rg, PairWitness w,
                                bool exact, std::string note) {
  GenusResult res;
  res.spec = rg.spec;
  res.group_order = rg.group.order();
  res.triple = w.triple;
  res.genus = genus_from_triple(res.group_order, w.triple);
  res.exact = exact;
  res.provenance = w.provenance;
  res.note = std::move(note);
  res.witness = std::move(w);
  return res;
}

// Heuristic walk for groups beyond the enumeration threshold: first
// verified witness in triple order, reported as an upper bound. For D_n
// the lift recipe search in S_n runs before raw sampling; its witnesses
// carry the lifted provenance.
GenusResult heuristic_walk(const RealizedGroup& rg,
                           const EngineParams& params) {
  std::set<uint64_t> spectrum = rg.spectrum(params.threshold);
  std::vector<Triple> triples =
      enumerate_triples(spectrum, rg.parity_prune());
  for (const Triple& t : triples) {
    if (rg.spec.family == Family::D && rg.spec.n >= 5) {
      auto recipe =
          find_liftable_pair(rg.spec.n, t, LiftSearchMode::kHeuristic,
                             std::max<uint64_t>(params.budget / 10, 1000),
                             params.seed, params.threshold);
      if (recipe) {
        auto [sx, sy] = lift(*recipe);
        PairWitness w = witness_from_lift(sx, sy, t);
        std::string why;
        if (!verify_witness(rg, w, &why))
          throw InvariantError("lifted witness failed verification: " + why);
        return result_from_witness(
            rg, std::move(w), false,
            "upper bound: lifted witness, minimality not searched");
      }
    }
    auto w = heuristic_pair(rg, t, params.budget, params.seed);
    if (w)
      return result_from_witness(
          rg, std::move(*w), false,
          "upper bound: heuristic witness, minimality not searched");
  }
  throw CapabilityError(
      "heuristic search exhausted its budget without a witness");
}

std::optional<ReferenceCheck> reference_for(const GroupSpec& spec,
                                            const Triple& triple,
                                            const BigInt& genus) {
  auto row = known_row(spec);
  if (!row) return std::nullopt;
  ReferenceCheck ref;
  ref.triple = row->triple;
  ref.genus = known_genus(*row);
  ref.verify_only = row->verify_only;
  ref.matches = (triple == row->triple) && (genus == ref.genus);
  return ref;
}

Report finish_report(Report rep, const RealizedGroup& rg, GenusResult res,
                     Clock::time_point t0) {
  rep.triple = res.triple;
  rep.genus = res.genus;
  rep.exact = res.exact;
  rep.provenance = res.provenance;
  if (!res.note.empty())
    rep.note = rep.note.empty() ? res.note : rep.note + "; " + res.note;
  rep.stats = res.stats;
  if (res.witness) {
    rep.witness_x = rg.display_element(res.witness->x);
    rep.witness_y = rg.display_element(res.witness->y);
    rep.witness = std::move(res.witness);
  }
  rep.reference = reference_for(rep.spec, rep.triple, rep.genus);
  rep.seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace

Report run_genus(const GroupSpec& spec, const EngineParams& params) {
  auto t0 = Clock::now();
  RealizedGroup rg = realize(spec);

  Report rep;
  rep.spec = spec;
  rep.params = params;
  rep.realization = realization_name(rg.realization);
  rep.degree = rg.group.degree();
  rep.group_order = rg.group.order();
  rep.note = rg.note;

  // Quotient sandwich first: when it forces the triple the result is
  // proven at any size, and a witness is only decoration.
  if (auto sb = sandwich_bound(spec); sb && sb->forced) {
    GenusResult res;
    res.spec = spec;
    res.group_order = rg.group.order();
    res.triple = *sb->forced;
    res.genus = genus_from_triple(res.group_order, res.triple);
    res.exact = true;
    res.provenance = Provenance::kSandwich;
    res.note = "forced by quotient sandwich: cover " +
               sb->cover_bound->to_string() + ", quotient " +
               sb->quotient_bound->to_string();
    if (spec.family == Family::D && spec.n >= 5) {
      auto recipe =
          find_liftable_pair(spec.n, res.triple, LiftSearchMode::kHeuristic,
                             std::max<uint64_t>(params.budget, 20'000),
                             params.seed, params.threshold);
      if (recipe) {
        auto [sx, sy] = lift(*recipe);
        PairWitness w = witness_from_lift(sx, sy, res.triple);
        w.provenance = Provenance::kLifted;
        std::string why;
        if (!verify_witness(rg, w, &why))
          throw InvariantError("lifted witness failed verification: " + why);
        res.witness = std::move(w);
      }
    }
    return finish_report(std::move(rep), rg, std::move(res), t0);
  }

  if (rg.group.order() <= params.threshold) {
    SearchOptions opts{params.threshold, params.jobs};
    return finish_report(std::move(rep), rg, minimal_pair(rg, opts), t0);
  }

  if (params.heuristic)
    return finish_report(std::move(rep), rg, heuristic_walk(rg, params), t0);

  throw CapabilityError("order of " + spec.to_string() +
                        " exceeds the enumeration threshold (" +
                        std::to_string(params.threshold) +
                        "); raise --threshold or pass --heuristic");
}

// ---------------------------------------------------------------------------
// Rendering.

std::string render_report_text(const Report& r) {
  std::ostringstream os;
  os << "group: " << r.spec.to_string() << "  order " << r.group_order
     << "  (" << r.realization << ", degree " << r.degree << ")\n";
  os << "minimal triple: " << r.triple.to_string() << "   genus " << r.genus
     << "   " << (r.exact ? "exact" : "upper bound") << "\n";
  os << "method: " << provenance_name(r.provenance);
  os << "   defect " << rat_string(r.triple.defect()) << "\n";
  if (r.witness)
    os << "witness: x = " << r.witness_x << "\n         y = " << r.witness_y
       << "\n";
  if (r.reference) {
    os << "reference: " << r.reference->triple.to_string() << " / "
       << r.reference->genus
       << (r.reference->matches ? "  [match]" : "  [MISMATCH]");
    if (r.reference->verify_only) os << " (verify-only row)";
    os << "\n";
  } else {
    os << "reference: none published for this group\n";
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  os << "pairs scanned " << r.stats.pairs_scanned << ", order matches "
     << r.stats.order_matches << ", triples tried " << r.stats.triples_tried
     << ", " << r.seconds << "s\n";
  return os.str();
}

namespace {

Json report_json(const Report& r) {
  Json j;
  j["schema"] = "cxg-report/1";
  j["group"] = r.spec.to_string();
  j["family"] = family_name(r.spec.family);
  j["n"] = r.spec.n;
  j["order"] = r.group_order.str();
  j["degree"] = r.degree;
  j["realization"] = r.realization;
  j["triple"] = {r.triple.p, r.triple.q, r.triple.r};
  j["defect"] = rat_string(r.triple.defect());
  j["genus"] = r.genus.str();
  j["exact"] = r.exact;
  j["method"] = provenance_name(r.provenance);
  j["note"] = r.note;
  if (r.witness) {
    j["witness"] = Json{{"x", r.witness_x},
                        {"y", r.witness_y},
                        {"provenance", provenance_name(r.witness->provenance)}};
  } else {
    j["witness"] = nullptr;
  }
  if (r.reference) {
    j["reference"] = Json{
        {"triple",
         {r.reference->triple.p, r.reference->triple.q, r.reference->triple.r}},
        {"genus", r.reference->genus.str()},
        {"verify_only", r.reference->verify_only},
        {"matches", r.reference->matches}};
  } else {
    j["reference"] = nullptr;
  }
  j["stats"] = Json{{"pairs_scanned", r.stats.pairs_scanned},
                    {"order_matches", r.stats.order_matches},
                    {"triples_tried", r.stats.triples_tried}};
  j["params"] = Json{{"threshold", r.params.threshold},
                     {"jobs", r.params.jobs},
                     {"heuristic", r.params.heuristic},
                     {"budget", r.params.budget},
                     {"seed", r.params.seed},
                     {"kernel", kernels::impl_name(kernels::active())}};
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace

std::string render_report_json(const Report& r) {
  return report_json(r).dump(2) + "\n";
}

std::string render_report_csv_header() { return "n,family,triple,genus\n"; }

std::string render_report_csv(const Report& r) {
  std::ostringstream os;
  os << r.spec.n << "," << family_name(r.spec.family) << ",\""
     << r.triple.to_string() << "\"," << r.genus << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Witness files.

std::string witness_to_json(const Report& r) {
  if (!r.witness)
    throw StructuralError("report carries no witness to serialize");
  Json j;
  j["format"] = "cxg-witness";
  j["version"] = 1;
  j["group"] = r.spec.to_string();
  j["triple"] = {r.triple.p, r.triple.q, r.triple.r};
  j["x"] = r.witness_x;
  j["y"] = r.witness_y;
  j["provenance"] = provenance_name(r.witness->provenance);
  j["order"] = r.group_order.str();
  j["genus"] = r.genus.str();
  return j.dump(2) + "\n";
}

VerifyOutcome verify_witness_file(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw StructuralError(std::string("witness file is not valid JSON: ") +
                          e.what());
  }
  if (!j.is_object() || j.value("format", "") != "cxg-witness" ||
      j.value("version", 0) != 1)
    throw StructuralError("witness file header is missing or unsupported");
  for (const char* key : {"group", "triple", "x", "y"})
    if (!j.contains(key))
      throw StructuralError(std::string("witness file lacks field: ") + key);

  VerifyOutcome out;
  out.group = j["group"].get<std::string>();
  GroupSpec spec = GroupSpec::parse(out.group);
  RealizedGroup rg = realize(spec);

  auto tj = j["triple"];
  if (!tj.is_array() || tj.size() != 3)
    throw StructuralError("witness triple must be [p, q, r]");
  Triple t(tj[0].get<uint64_t>(), tj[1].get<uint64_t>(),
           tj[2].get<uint64_t>());

  PairWitness w;
  w.triple = t;
  w.x = rg.parse_element(j["x"].get<std::string>());
  w.y = rg.parse_element(j["y"].get<std::string>());

  std::string why;
  if (!verify_witness(rg, w, &why)) {
    out.ok = false;
    out.detail = why;
    return out;
  }
  if (j.contains("order") &&
      BigInt(j["order"].get<std::string>()) != rg.group.order()) {
    out.ok = false;
    out.detail = "declared group order does not match the realization";
    return out;
  }
  if (j.contains("genus") &&
      BigInt(j["genus"].get<std::string>()) !=
          genus_from_triple(rg.group.order(), t)) {
    out.ok = false;
    out.detail = "declared genus does not match the triple";
    return out;
  }
  out.ok = true;
  out.detail = "witness verifies: orders (" + std::to_string(t.p) + "," +
               std::to_string(t.q) + "," + std::to_string(t.r) +
               ") and generation check pass";
  return out;
}

// ---------------------------------------------------------------------------
// Table reproduction.

namespace {

// E7 is checked witness-only: a heuristic (2,4,7) pair is found, verified,
// and the genus recomputed; no exhaustive minimality sweep is attempted.
Report verify_only_row(const GroupSpec& spec, const EngineParams& params) {
  auto t0 = Clock::now();
  auto row = known_row(spec);
  if (!row) throw InvariantError("verify-only row without reference");
  RealizedGroup rg = realize(spec);

  Report rep;
  rep.spec = spec;
  rep.params = params;
  rep.realization = realization_name(rg.realization);
  rep.degree = rg.group.degree();
  rep.group_order = rg.group.order();

  std::optional<PairWitness> w;
  for (uint64_t attempt = 0; attempt < 8 && !w; ++attempt)
    w = heuristic_pair(rg, row->triple, params.budget,
                       params.seed + attempt);
  if (!w)
    throw CapabilityError("no heuristic witness found for " +
                          spec.to_string() + " within budget");
  GenusResult res = result_from_witness(
      rg, std::move(*w), false,
      "verify-only: witness checked, minimality taken from the reference");
  return finish_report(std::move(rep), rg, std::move(res), t0);
}

std::vector<GroupSpec> table_specs(TableKind kind, Tier tier) {
  std::vector<GroupSpec> out;
  if (kind == TableKind::kSporadic) {
    out.push_back({Family::G2, 0});
    out.push_back({Family::H3, 0});
    out.push_back({Family::F4, 0});
    out.push_back({Family::H4, 0});
    if (tier == Tier::kExtended) {
      out.push_back({Family::E6, 0});
      out.push_back({Family::E7, 0});
    }
  } else {
    for (uint32_t n : {3u, 4u, 5u, 6u, 7u, 8u})
      out.push_back({Family::Symmetric, n});
    if (tier == Tier::kExtended) out.push_back({Family::Symmetric, 9});
    for (uint32_t n : {3u, 4u, 5u}) out.push_back({Family::B, n});
    if (tier == Tier::kExtended) out.push_back({Family::B, 6});
    for (uint32_t n : {3u, 4u, 5u, 6u}) out.push_back({Family::D, n});
    if (tier == Tier::kExtended) {
      out.push_back({Family::D, 7});
      out.push_back({Family::D, 8});
    }
  }
  return out;
}

}  // namespace

TableOutcome run_table(TableKind kind, Tier tier,
                       const EngineParams& params) {
  EngineParams p = params;
  if (!p.threshold_overridden)
    p.threshold = (tier == Tier::kExtended) ? 50'000'000 : 5'000'000;

  TableOutcome out;
  std::ostringstream text, csv;
  csv << render_report_csv_header();
  text << "group      order            triple     genus        method"
          "      status\n";

  for (const GroupSpec& spec : table_specs(kind, tier)) {
    Report rep = (spec.family == Family::E7) ? verify_only_row(spec, p)
                                             : run_genus(spec, p);
    bool match = rep.reference && rep.reference->matches;
    out.all_match = out.all_match && match;

    std::ostringstream line;
    line << rep.spec.to_string();
    for (std::size_t i = line.str().size(); i < 11; ++i) line << ' ';
    std::string ord = rep.group_order.str();
    line << ord;
    for (std::size_t i = ord.size(); i < 17; ++i) line << ' ';
    std::string tr = rep.triple.to_string();
    line << tr;
    for (std::size_t i = tr.size(); i < 11; ++i) line << ' ';
    std::string gen = rep.genus.str();
    line << gen;
    for (std::size_t i = gen.size(); i < 13; ++i) line << ' ';
    std::string meth = provenance_name(rep.provenance);
    line << meth;
    for (std::size_t i = meth.size(); i < 12; ++i) line << ' ';
    line << (match ? "ok" : "DIFF");
    if (!match && rep.reference)
      line << " expected " << rep.reference->triple.to_string() << "/"
           << rep.reference->genus;
    text << line.str() << "\n";
    csv << render_report_csv(rep);

    out.rows.push_back(TableRow{std::move(rep), match});
  }
  text << (out.all_match ? "all rows match the reference table\n"
                         : "TABLE MISMATCH\n");
  out.text = text.str();
  out.csv = csv.str();
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum and lift front doors.

std::string run_spectrum(const GroupSpec& spec, const EngineParams& params,
                         const std::string& format) {
  RealizedGroup rg = realize(spec);
  std::set<uint64_t> spectrum = rg.spectrum(params.threshold);
  if (format == "json") {
    Json j;
    j["group"] = spec.to_string();
    j["order"] = rg.group.order().str();
    j["spectrum"] = spectrum;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << spec.to_string() << " (order " << rg.group.order()
     << "): element orders";
  for (uint64_t q : spectrum) os << " " << q;
  os << "\n";
  return os.str();
}

Report run_lift(uint32_t n, const Triple& t, const EngineParams& params) {
  auto t0 = Clock::now();
  GroupSpec spec{Family::D, n};
  RealizedGroup rg = realize(spec);

  Report rep;
  rep.spec = spec;
  rep.params = params;
  rep.realization = realization_name(rg.realization);
  rep.degree = rg.group.degree();
  rep.group_order = rg.group.order();

  BigInt nfact = 1;
  for (uint32_t i = 2; i <= n; ++i) nfact *= i;
  LiftSearchMode mode = (nfact <= params.threshold && !params.heuristic)
                            ? LiftSearchMode::kExhaustive
                            : LiftSearchMode::kHeuristic;
  auto recipe = find_liftable_pair(n, t, mode, params.budget, params.seed,
                                   params.threshold);
  if (!recipe)
    throw CapabilityError("no lift recipe found for " + spec.to_string() +
                          " with triple " + t.to_string() +
                          (mode == LiftSearchMode::kExhaustive
                               ? " (exhaustive: none exists)"
                               : " (heuristic budget exhausted)"));
  auto [sx, sy] = lift(*recipe);
  PairWitness w = witness_from_lift(sx, sy, t);
  std::string why;
  if (!verify_witness(rg, w, &why))
    throw InvariantError("lifted witness failed verification: " + why);
  GenusResult res = result_from_witness(
      rg, std::move(w), false, "lifted witness: genus is an upper bound");
  return finish_report(std::move(rep), rg, std::move(res), t0);
}

}  // namespace cxg
