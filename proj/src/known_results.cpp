#include "cxg/known_results.hpp"

namespace cxg {

namespace {

std::vector<KnownRow> build_rows() {
  auto S = [](uint32_t n) { return GroupSpec{Family::Symmetric, n}; };
  auto B = [](uint32_t n) { return GroupSpec{Family::B, n}; };
  auto D = [](uint32_t n) { return GroupSpec{Family::D, n}; };
  std::vector<KnownRow> rows;

  rows.push_back({GroupSpec{Family::G2, 0}, "G2", Triple(2, 2, 6)});
  rows.push_back({GroupSpec{Family::H3, 0}, "I3", Triple(2, 3, 10)});
  rows.push_back({GroupSpec{Family::H4, 0}, "I4", Triple(2, 4, 6)});
  rows.push_back({GroupSpec{Family::F4, 0}, "F4", Triple(2, 6, 6)});
  rows.push_back({GroupSpec{Family::E6, 0}, "E6", Triple(2, 4, 8)});
  rows.push_back({GroupSpec{Family::E7, 0}, "E7", Triple(2, 4, 7), true});

  // Symmetric column. S3 is the dihedral group of order 6.
  rows.push_back({S(3), "S3", Triple(2, 2, 3)});
  rows.push_back({S(4), "S4", Triple(2, 3, 4)});
  rows.push_back({S(5), "S5", Triple(2, 4, 5)});
  rows.push_back({S(6), "S6", Triple(2, 5, 6)});
  rows.push_back({S(7), "S7", Triple(2, 3, 10)});
  rows.push_back({S(8), "S8", Triple(2, 4, 7)});
  rows.push_back({S(9), "S9", Triple(2, 4, 6)});
  rows.push_back({S(10), "S10", Triple(2, 3, 10)});
  rows.push_back({S(11), "S11", Triple(2, 4, 5)});
  rows.push_back({S(12), "S12", Triple(2, 3, 12)});
  rows.push_back({S(13), "S13", Triple(2, 3, 12)});
  rows.push_back({S(14), "S14", Triple(2, 4, 6)});
  rows.push_back({S(15), "S15", Triple(2, 4, 5)});
  rows.push_back({S(16), "S16", Triple(2, 4, 5)});
  rows.push_back({S(17), "S17", Triple(2, 4, 6)});
  rows.push_back({S(20), "S20", Triple(2, 3, 8)});
  rows.push_back({S(22), "S22", Triple(2, 3, 10)});
  rows.push_back({S(23), "S23", Triple(2, 3, 10)});
  rows.push_back({S(26), "S26", Triple(2, 4, 5)});
  rows.push_back({S(29), "S29", Triple(2, 3, 12)});

  // Hyperoctahedral column: (2,4,6) except the small ranks below.
  rows.push_back({B(3), "B3", Triple(2, 4, 6)});
  rows.push_back({B(4), "B4", Triple(2, 4, 6)});
  rows.push_back({B(5), "B5", Triple(2, 4, 10)});
  rows.push_back({B(6), "B6", Triple(2, 6, 6)});
  rows.push_back({B(7), "B7", Triple(2, 4, 6)});
  rows.push_back({B(8), "B8", Triple(2, 4, 8)});
  for (uint32_t n : {9u, 10u, 11u, 12u, 13u, 14u, 15u, 16u, 17u, 20u, 22u,
                     23u, 26u, 29u})
    rows.push_back({B(n), "B" + std::to_string(n), Triple(2, 4, 6)});

  // Demihyperoctahedral column. D3 = S4.
  rows.push_back({D(3), "D3", Triple(2, 3, 4)});
  rows.push_back({D(4), "D4", Triple(3, 4, 4)});
  rows.push_back({D(5), "D5", Triple(2, 4, 5)});
  rows.push_back({D(6), "D6", Triple(2, 5, 6)});
  rows.push_back({D(7), "D7", Triple(2, 4, 6)});
  rows.push_back({D(8), "D8", Triple(2, 4, 7)});
  rows.push_back({D(9), "D9", Triple(2, 4, 6)});
  rows.push_back({D(10), "D10", Triple(2, 3, 10)});
  rows.push_back({D(11), "D11", Triple(2, 4, 5)});
  rows.push_back({D(12), "D12", Triple(2, 3, 12)});
  rows.push_back({D(13), "D13", Triple(2, 3, 12)});
  rows.push_back({D(14), "D14", Triple(2, 3, 14)});
  rows.push_back({D(15), "D15", Triple(2, 4, 5)});
  rows.push_back({D(16), "D16", Triple(2, 4, 5)});
  rows.push_back({D(17), "D17", Triple(2, 4, 6)});
  rows.push_back({D(20), "D20", Triple(2, 4, 5)});
  rows.push_back({D(22), "D22", Triple(2, 3, 10)});
  rows.push_back({D(23), "D23", Triple(2, 3, 12)});
  rows.push_back({D(26), "D26", Triple(2, 4, 5)});
  rows.push_back({D(29), "D29", Triple(2, 3, 12)});

  return rows;
}

}  // namespace

const std::vector<KnownRow>& known_rows() {
  static const std::vector<KnownRow> rows = build_rows();
  return rows;
}

std::optional<KnownRow> known_row(const GroupSpec& spec) {
  for (const KnownRow& row : known_rows())
    if (row.spec == spec) return row;
  switch (spec.family) {
    case Family::Dihedral:
      return KnownRow{spec, spec.to_string(), Triple(2, 2, spec.n)};
    case Family::Symmetric:
      if (spec.n > 29)
        return KnownRow{spec, spec.to_string(), Triple(2, 3, 8)};
      return std::nullopt;
    case Family::B:
      if (spec.n > 8)
        return KnownRow{spec, spec.to_string(), Triple(2, 4, 6)};
      return std::nullopt;
    case Family::D:
      if (spec.n > 29)
        return KnownRow{spec, spec.to_string(), Triple(2, 3, 8)};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

BigInt closed_form_order(const GroupSpec& spec) {
  auto factorial = [](uint32_t n) {
    BigInt f = 1;
    for (uint32_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (spec.family) {
    case Family::Dihedral: return BigInt(2) * spec.n;
    case Family::Symmetric: return factorial(spec.n);
    case Family::B: return factorial(spec.n) << spec.n;
    case Family::D: return factorial(spec.n) << (spec.n - 1);
    case Family::G2: return 12;
    case Family::H3: return 120;
    case Family::H4: return 14400;
    case Family::F4: return 1152;
    case Family::E6: return 51840;
    case Family::E7: return 2903040;
  }
  throw StructuralError("unknown family");
}

BigInt known_genus(const KnownRow& row) {
  return genus_from_triple(closed_form_order(row.spec), row.triple);
}

const std::vector<uint32_t>& lift_exception_ranks() {
  static const std::vector<uint32_t> ranks = {
      171, 173, 174, 181, 185, 188, 194, 201, 202,
      206, 209, 214, 230, 250, 257, 265, 286};
  return ranks;
}

}  // namespace cxg
