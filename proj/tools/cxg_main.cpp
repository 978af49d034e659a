// cxg: strong symmetric genus computations for the finite Coxeter groups.
//
// Subcommands:
//   genus <group>          minimal (p,q,r) pair and genus for one group
//   table                  recompute a reference table and diff it
//   lift <n> <p> <q> <r>   lift an S_n pair to a D_n witness
//   spectrum <group>       element-order spectrum
//   verify <witness.json>  re-check a serialized witness
//
// Exit codes: 0 ok, 2 parse error, 3 capability error, 4 table mismatch,
// 5 verification failure, 1 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cxg/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapability = 3;
constexpr int kExitTableMismatch = 4;
constexpr int kExitVerifyFailed = 5;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cxg::StructuralError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit_report(const cxg::Report& rep, const std::string& format,
                 const std::string& witness_out) {
  if (format == "json") {
    std::cout << cxg::render_report_json(rep);
  } else if (format == "csv") {
    std::cout << cxg::render_report_csv_header()
              << cxg::render_report_csv(rep);
  } else {
    std::cout << cxg::render_report_text(rep);
  }
  if (!witness_out.empty()) {
    if (!rep.witness)
      throw cxg::CapabilityError("no witness available to write");
    write_file(witness_out, cxg::witness_to_json(rep));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong symmetric genus of the finite Coxeter groups"};
  app.require_subcommand(1);

  cxg::EngineParams params;
  std::string format = "text";
  std::string witness_out;
  params.jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threshold", params.threshold,
                    "element-enumeration cap")
        ->envname("CXG_THRESHOLD");
    cmd->add_flag("--heuristic", params.heuristic,
                  "allow randomized witness search above the threshold")
        ->envname("CXG_HEURISTIC");
    cmd->add_option("--budget", params.budget,
                    "heuristic trial budget")
        ->envname("CXG_BUDGET");
    cmd->add_option("--seed", params.seed, "heuristic RNG seed")
        ->envname("CXG_SEED");
    cmd->add_option("--jobs", params.jobs, "parallel search shards")
        ->envname("CXG_JOBS");
    cmd->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("CXG_FORMAT");
    cmd->add_option("--witness-out", witness_out,
                    "write the witness as a JSON file")
        ->envname("CXG_WITNESS_OUT");
  };

  std::string spec_text;
  auto* genus = app.add_subcommand("genus", "minimal pair and genus");
  genus->add_option("group", spec_text, "e.g. S5, B4, D10, Dih7, F4, I4")
      ->required();
  add_common(genus);

  std::string which = "sporadic", tier_text = "standard";
  auto* table = app.add_subcommand("table", "reproduce a reference table");
  table->add_option("--reproduce", which, "sporadic | exceptional")
      ->check(CLI::IsMember({"sporadic", "exceptional"}));
  table->add_option("--tier", tier_text, "standard | extended")
      ->check(CLI::IsMember({"standard", "extended"}))
      ->envname("CXG_TIER");
  add_common(table);

  uint32_t lift_n = 0;
  std::vector<uint64_t> lift_pqr;
  auto* liftc = app.add_subcommand("lift", "lift an S_n pair to D_n");
  liftc->add_option("n", lift_n, "rank")->required();
  liftc->add_option("pqr", lift_pqr, "triple p q r")
      ->expected(3)
      ->required();
  add_common(liftc);

  std::string spectrum_spec;
  auto* spectrum = app.add_subcommand("spectrum", "element-order spectrum");
  spectrum->add_option("group", spectrum_spec)->required();
  add_common(spectrum);

  std::string witness_path;
  auto* verify = app.add_subcommand("verify", "re-check a witness file");
  verify->add_option("file", witness_path)->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  params.threshold_overridden =
      genus->count("--threshold") || table->count("--threshold") ||
      liftc->count("--threshold") || spectrum->count("--threshold") ||
      verify->count("--threshold") || std::getenv("CXG_THRESHOLD");

  try {
    if (*genus) {
      emit_report(cxg::run_genus(cxg::GroupSpec::parse(spec_text), params),
                  format, witness_out);
    } else if (*table) {
      cxg::Tier tier = tier_text == "extended" ? cxg::Tier::kExtended
                                               : cxg::Tier::kStandard;
      cxg::TableKind kind = which == "sporadic"
                                ? cxg::TableKind::kSporadic
                                : cxg::TableKind::kExceptional;
      cxg::TableOutcome out = cxg::run_table(kind, tier, params);
      std::cout << (format == "csv" ? out.csv : out.text);
      if (!out.all_match) return kExitTableMismatch;
    } else if (*liftc) {
      cxg::Triple t(lift_pqr[0], lift_pqr[1], lift_pqr[2]);
      emit_report(cxg::run_lift(lift_n, t, params), format, witness_out);
    } else if (*spectrum) {
      std::cout << cxg::run_spectrum(cxg::GroupSpec::parse(spectrum_spec),
                                     params, format);
    } else if (*verify) {
      cxg::VerifyOutcome out = cxg::verify_witness_file(read_file(witness_path));
      std::cout << (out.ok ? "PASS " : "FAIL ") << out.group << ": "
                << out.detail << "\n";
      if (!out.ok) return kExitVerifyFailed;
    }
  } catch (const cxg::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cxg::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
