#include "doctest.h"

#include "json.hpp"

#include "cxg/report.hpp"

using namespace cxg;

namespace {

EngineParams quick_params() {
  EngineParams p;
  p.jobs = 2;
  return p;
}

}  // namespace

TEST_CASE("genus reports render and the JSON round-trips") {
  Report rep = run_genus(GroupSpec::parse("S4"), quick_params());
  CHECK(rep.triple == Triple(2, 3, 4));
  CHECK(rep.genus == 0);
  REQUIRE(rep.reference.has_value());
  CHECK(rep.reference->matches);

  std::string text = render_report_text(rep);
  CHECK(text.find("S4") != std::string::npos);
  CHECK(text.find("(2,3,4)") != std::string::npos);

  std::string json_text = render_report_json(rep);
  auto parsed = nlohmann::ordered_json::parse(json_text);
  CHECK(parsed.dump(2) + "\n" == json_text);  // parse(emit(r)) = r
  CHECK(parsed["group"] == "S4");
  CHECK(parsed["genus"] == "0");
  CHECK(parsed["exact"] == true);
  CHECK(parsed["reference"]["matches"] == true);

  std::string csv = render_report_csv(rep);
  CHECK(csv == "4,S,\"(2,3,4)\",0\n");
}

TEST_CASE("witness files verify and reject tampering") {
  Report rep = run_genus(GroupSpec::parse("D5"), quick_params());
  REQUIRE(rep.witness.has_value());
  std::string file = witness_to_json(rep);

  VerifyOutcome ok = verify_witness_file(file);
  CHECK(ok.ok);
  CHECK(ok.group == "D5");

  // swap two images inside the x element: orders or membership break
  auto j = nlohmann::ordered_json::parse(file);
  std::string x = j["x"];
  // x has the form "[cycles | bits]"; flip one sign bit instead of
  // guessing at cycle text: membership in D_5 must then fail.
  auto bar = x.find('|');
  REQUIRE(bar != std::string::npos);
  std::size_t bitpos = bar + 2;
  x[bitpos] = (x[bitpos] == '0') ? '1' : '0';
  j["x"] = x;
  VerifyOutcome bad = verify_witness_file(j.dump());
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.detail.empty());

  // tamper with the claimed genus
  auto j2 = nlohmann::ordered_json::parse(file);
  j2["genus"] = "999";
  CHECK_FALSE(verify_witness_file(j2.dump()).ok);

  // malformed files are structural errors, not verification failures
  CHECK_THROWS_AS(verify_witness_file("{not json"), StructuralError);
  CHECK_THROWS_AS(verify_witness_file("{\"format\":\"other\"}"),
                  StructuralError);
}

TEST_CASE("the sandwich pipeline handles D17 without enumeration") {
  EngineParams p = quick_params();
  p.budget = 30'000;
  Report rep = run_genus(GroupSpec::parse("D17"), p);
  CHECK(rep.triple == Triple(2, 4, 6));
  CHECK(rep.exact);
  CHECK(rep.provenance == Provenance::kSandwich);
  REQUIRE(rep.reference.has_value());
  CHECK(rep.reference->matches);
  // 17! 2^16 / 24 + 1
  CHECK(rep.genus == BigInt("971263803654144001"));
  if (rep.witness) {
    RealizedGroup rg = realize(GroupSpec::parse("D17"));
    std::string why;
    CHECK(verify_witness(rg, *rep.witness, &why));
  }
}

TEST_CASE("capability error without the heuristic flag") {
  CHECK_THROWS_AS(run_genus(GroupSpec::parse("B99"), quick_params()),
                  CapabilityError);
}

TEST_CASE("heuristic pipeline reports an upper bound for large groups") {
  EngineParams p = quick_params();
  p.heuristic = true;
  p.budget = 100'000;
  p.seed = 5;
  Report rep = run_genus(GroupSpec::parse("D12"), p);
  CHECK_FALSE(rep.exact);
  REQUIRE(rep.reference.has_value());
  // D12's published triple is (2,3,12); the heuristic walk may stop there
  // or at any earlier verified witness, but never at a better-than-
  // published sum (that would contradict the reference minimality).
  CHECK_FALSE(Triple::search_order_less(rep.triple, rep.reference->triple));
  REQUIRE(rep.witness.has_value());
  RealizedGroup rg = realize(GroupSpec::parse("D12"));
  std::string why;
  CHECK(verify_witness(rg, *rep.witness, &why));
}

TEST_CASE("lift command produces a verified D_10 witness report") {
  EngineParams p = quick_params();
  p.budget = 50'000;
  p.seed = 3;
  p.heuristic = true;  // skip the exhaustive S_10 sweep in unit tests
  Report rep = run_lift(10, Triple(2, 3, 10), p);
  CHECK(rep.spec == GroupSpec::parse("D10"));
  CHECK(rep.provenance == Provenance::kLifted);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness_x.find('|') != std::string::npos);
  std::string file = witness_to_json(rep);
  CHECK(verify_witness_file(file).ok);
  REQUIRE(rep.reference.has_value());
  CHECK(rep.reference->matches);  // (2,3,10) is also the published triple
}

TEST_CASE("spectrum rendering") {
  std::string text =
      run_spectrum(GroupSpec::parse("S4"), quick_params(), "text");
  CHECK(text.find("1 2 3 4") != std::string::npos);
  std::string json_text =
      run_spectrum(GroupSpec::parse("F4"), quick_params(), "json");
  auto j = nlohmann::ordered_json::parse(json_text);
  CHECK(j["order"] == "1152");
  CHECK(j["spectrum"].size() == 7);  // {1,2,3,4,6,8,12}
}
