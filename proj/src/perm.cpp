#include "cxg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cxg/kernels.hpp"

namespace cxg {

Permutation::Permutation(uint32_t degree) : img_(degree) {
  if (degree == 0) throw StructuralError("permutation degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<uint32_t> images) {
  if (images.empty()) throw StructuralError("permutation degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw StructuralError("image list is not a bijection of {1..n}");
    seen[v] = true;
  }
  return Permutation(std::move(images), 0);
}

Permutation Permutation::from_cycles(const std::string& text, uint32_t degree) {
  if (degree == 0) throw StructuralError("permutation degree must be >= 1");
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ','))
      ++pos;
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw StructuralError("expected '(' in cycle text");
    ++pos;
    any = true;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw StructuralError("expected point number in cycle text");
      uint64_t v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
        if (v > degree) throw StructuralError("cycle point exceeds degree");
        ++pos;
      }
      if (v == 0) throw StructuralError("points are 1-based; 0 is invalid");
      uint32_t p = static_cast<uint32_t>(v - 1);
      if (used[p]) throw StructuralError("point repeated across cycles");
      used[p] = true;
      cyc.push_back(p);
      skip_ws();
    }
    if (pos >= text.size()) throw StructuralError("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  if (!any) throw StructuralError("empty cycle text (identity is \"()\")");
  return Permutation(std::move(img), 0);
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw StructuralError("compose: degree mismatch");
  std::vector<uint32_t> out(a.degree());
  kernels::compose(a.data(), b.data(), out.data(), a.degree());
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& a) {
  std::vector<uint32_t> out(a.degree());
  for (uint32_t i = 0; i < a.degree(); ++i) out[a[i]] = i;
  return Permutation::from_images(std::move(out));
}

Permutation power(const Permutation& g, uint64_t k) {
  Permutation acc(g.degree());
  Permutation base = g;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  uint64_t g = std::gcd(a, b);
  uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b)
    throw CapabilityError("element order overflows 64 bits");
  return q * b;
}

uint64_t order(const Permutation& a) {
  std::vector<bool> seen(a.degree(), false);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = a[j];
    }
    ord = lcm_u64(ord, len);
  }
  return ord;
}

CycleType cycle_type(const Permutation& a) {
  CycleType ct;
  std::vector<bool> seen(a.degree(), false);
  for (uint32_t i = 0; i < a.degree(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = a[j];
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
  return ct;
}

std::vector<uint32_t> fixed_points(const Permutation& a) {
  std::vector<uint32_t> fp;
  for (uint32_t i = 0; i < a.degree(); ++i)
    if (a[i] == i) fp.push_back(i);
  return fp;
}

int parity(const Permutation& a) { return cycle_type(a).parity(); }

uint64_t CycleType::order() const {
  uint64_t ord = 1;
  for (uint32_t len : lengths) ord = lcm_u64(ord, len);
  return ord;
}

int CycleType::parity() const {
  return (degree() - lengths.size()) % 2 == 0 ? 1 : -1;
}

uint32_t CycleType::degree() const {
  uint32_t d = 0;
  for (uint32_t len : lengths) d += len;
  return d;
}

}  // namespace cxg
