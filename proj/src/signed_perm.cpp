#include "cxg/signed_perm.hpp"

#include <bit>
#include <cctype>

namespace cxg {

SignVector::SignVector(uint32_t n, uint64_t bits) : n_(n), bits_(bits) {
  if (n > max_length())
    throw CapabilityError("sign vectors support rank <= 64");
  if (n < 64 && (bits >> n) != 0)
    throw StructuralError("sign bits beyond vector length");
}

SignVector SignVector::all_ones(uint32_t n) {
  return SignVector(n, n == 64 ? ~0ull : ((1ull << n) - 1));
}

SignVector SignVector::with_bit(uint32_t i) const {
  if (i >= n_) throw StructuralError("sign bit index out of range");
  return SignVector(n_, bits_ | (1ull << i));
}

uint32_t SignVector::weight() const {
  return static_cast<uint32_t>(std::popcount(bits_));
}

SignVector SignVector::operator^(const SignVector& o) const {
  if (n_ != o.n_) throw StructuralError("sign vector length mismatch");
  return SignVector(n_, bits_ ^ o.bits_);
}

SignVector SignVector::permuted_by(const Permutation& p) const {
  if (p.degree() != n_) throw StructuralError("sign vector length mismatch");
  uint64_t out = 0;
  uint64_t b = bits_;
  while (b) {
    uint32_t m = static_cast<uint32_t>(std::countr_zero(b));
    b &= b - 1;
    out |= 1ull << p[m];
  }
  return SignVector(n_, out);
}

std::string SignVector::to_string() const {
  std::string s(n_, '0');
  for (uint32_t i = 0; i < n_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

SignVector SignVector::parse(const std::string& text) {
  if (text.empty() || text.size() > max_length())
    throw StructuralError("bad sign vector text");
  uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= 1ull << i;
    else if (text[i] != '0')
      throw StructuralError("sign vector text must be 0/1 digits");
  }
  return SignVector(static_cast<uint32_t>(text.size()), bits);
}

SignedPermutation::SignedPermutation(Permutation perm, SignVector signs)
    : perm_(std::move(perm)), signs_(signs) {
  if (perm_.degree() != signs_.length())
    throw StructuralError("signed permutation: degree != sign length");
}

SignedPermutation SignedPermutation::identity(uint32_t n) {
  return SignedPermutation(Permutation(n), SignVector(n));
}

bool SignedPermutation::is_identity() const {
  return perm_.is_identity() && signs_.bits() == 0;
}

std::string SignedPermutation::to_string() const {
  return "[" + perm_.to_cycles() + " | " + signs_.to_string() + "]";
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
  auto l = text.find('[');
  auto bar = text.find('|');
  auto r = text.rfind(']');
  if (l == std::string::npos || bar == std::string::npos ||
      r == std::string::npos || !(l < bar && bar < r))
    throw StructuralError("signed permutation text must be \"[cycles | bits]\"");
  std::string cyc = text.substr(l + 1, bar - l - 1);
  std::string bits = text.substr(bar + 1, r - bar - 1);
  auto strip = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
  };
  strip(cyc);
  strip(bits);
  SignVector sv = SignVector::parse(bits);
  Permutation p = Permutation::from_cycles(cyc, sv.length());
  return SignedPermutation(std::move(p), sv);
}

SignedPermutation multiply(const SignedPermutation& x,
                           const SignedPermutation& y) {
  if (x.rank() != y.rank())
    throw StructuralError("signed multiply: rank mismatch");
  return SignedPermutation(compose(x.perm(), y.perm()),
                           x.signs().permuted_by(y.perm()) ^ y.signs());
}

SignedPermutation inverse(const SignedPermutation& x) {
  Permutation pinv = inverse(x.perm());
  return SignedPermutation(pinv, x.signs().permuted_by(pinv));
}

SignedPermutation signed_power(const SignedPermutation& x, uint64_t k) {
  SignedPermutation acc = SignedPermutation::identity(x.rank());
  SignedPermutation base = x;
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

uint64_t signed_order(const SignedPermutation& x) {
  const Permutation& s = x.perm();
  std::vector<bool> seen(s.degree(), false);
  uint64_t ord = 1;
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
    ord = lcm_u64(ord, odd ? 2ull * len : len);
  }
  return ord;
}

Permutation to_degree_2n(const SignedPermutation& x) {
  uint32_t n = x.rank();
  std::vector<uint32_t> img(2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t t = x.perm()[i];
    uint32_t flip = x.signs().test(t) ? 1u : 0u;
    img[2 * i] = 2 * t + flip;
    img[2 * i + 1] = 2 * t + (1u - flip);
  }
  return Permutation::from_images(std::move(img));
}

SignedPermutation from_degree_2n(const Permutation& p) {
  if (p.degree() % 2 != 0)
    throw StructuralError("degree-2n permutation expected");
  uint32_t n = p.degree() / 2;
  std::vector<uint32_t> img(n);
  SignVector signs(n);
  uint64_t bits = 0;
  for (uint32_t i = 0; i < n; ++i) {
    uint32_t a = p[2 * i], b = p[2 * i + 1];
    if ((a ^ b) != 1u)
      throw StructuralError("permutation does not preserve +- pairing");
    img[i] = a / 2;
    if (a & 1) bits |= 1ull << (a / 2);
  }
  return SignedPermutation(Permutation::from_images(std::move(img)),
                           SignVector(n, bits));
}

}  // namespace cxg
