#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cxg/types.hpp"

namespace cxg {

// Element a + b*phi of Z[phi], phi^2 = phi + 1 (phi the golden ratio).
// Exact ring arithmetic; used for the icosahedral (H-type) root systems.
// Crystallographic types simply keep b = 0.
struct GoldenInt {
  int64_t a = 0;
  int64_t b = 0;

  constexpr GoldenInt() = default;
  constexpr GoldenInt(int64_t a_, int64_t b_ = 0) : a(a_), b(b_) {}

  static constexpr GoldenInt phi() { return {0, 1}; }

  friend constexpr GoldenInt operator+(GoldenInt x, GoldenInt y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x, GoldenInt y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }

  // (a + b phi)(c + e phi) = (ac + be) + (ae + bc + be) phi
  friend constexpr GoldenInt operator*(GoldenInt x, GoldenInt y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }

  GoldenInt& operator+=(GoldenInt y) { return *this = *this + y; }
  GoldenInt& operator-=(GoldenInt y) { return *this = *this - y; }

  // Exact division by a plain integer; throws if not divisible.
  GoldenInt divide_exact(int64_t d) const {
    if (d == 0 || a % d != 0 || b % d != 0)
      throw InvariantError("GoldenInt: inexact division");
    return {a / d, b / d};
  }

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  friend constexpr bool operator==(GoldenInt, GoldenInt) = default;
  friend constexpr auto operator<=>(GoldenInt x, GoldenInt y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.b <=> y.b;
  }

  std::string to_string() const {
    if (b == 0) return std::to_string(a);
    std::string s = std::to_string(a);
    s += (b < 0 ? "-" : "+");
    s += std::to_string(b < 0 ? -b : b);
    s += "phi";
    return s;
  }
};

}  // namespace cxg
