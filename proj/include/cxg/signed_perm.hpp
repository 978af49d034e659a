#pragma once

#include <cstdint>
#include <string>

#include "cxg/perm.hpp"

namespace cxg {

// Sign vector: n binary digits packed into one machine word (n <= 64).
// XOR and popcount are the hot path of the D_n kernel computation.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(uint32_t n, uint64_t bits = 0);

  static SignVector all_ones(uint32_t n);
  static uint32_t max_length() { return 64; }

  uint32_t length() const { return n_; }
  uint64_t bits() const { return bits_; }
  bool test(uint32_t i) const { return (bits_ >> i) & 1u; }
  SignVector with_bit(uint32_t i) const;

  uint32_t weight() const;
  bool even() const { return weight() % 2 == 0; }

  SignVector operator^(const SignVector& o) const;

  // Moves the bit at position m to position p(m): result[p(m)] = this[m].
  // This is the coordinate action the wreath multiplication rule uses.
  SignVector permuted_by(const Permutation& p) const;

  std::string to_string() const;  // e.g. "1100"
  static SignVector parse(const std::string& text);

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  uint32_t n_ = 0;
  uint64_t bits_ = 0;
};

// Element [sigma, b] of the wreath product Z_2 wr S_n (the hyperoctahedral
// group B_n): sigma permutes the n axes, b flips signs. Multiplication:
//
//   [sigma, b] * [tau, c] = [sigma*tau, b.permuted_by(tau) ^ c]
//
// which is exactly the homomorphic image rule for the faithful degree-2n
// action (oracle-tested). Lies in D_n iff b has even weight.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(Permutation perm, SignVector signs);

  static SignedPermutation identity(uint32_t n);

  const Permutation& perm() const { return perm_; }
  const SignVector& signs() const { return signs_; }
  uint32_t rank() const { return perm_.degree(); }

  bool is_identity() const;

  // Textual form "[cycles | bitstring]", e.g. "[(1 2) | 1100]".
  std::string to_string() const;
  static SignedPermutation parse(const std::string& text);

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  Permutation perm_;
  SignVector signs_;
};

SignedPermutation multiply(const SignedPermutation& x,
                           const SignedPermutation& y);
SignedPermutation inverse(const SignedPermutation& x);
SignedPermutation signed_power(const SignedPermutation& x, uint64_t k);

// Smallest k >= 1 with x^k = identity. Equals lcm over sigma-cycles of
// (len) for even sign-sum cycles and (2 len) for odd ones; verified in
// tests against both repeated multiplication and the degree-2n image.
uint64_t signed_order(const SignedPermutation& x);

// Faithful action on the 2n points {+-1..+-n}; injective homomorphism.
// Point encoding: +i -> 2(i-1), -i -> 2(i-1)+1 (0-based).
Permutation to_degree_2n(const SignedPermutation& x);

// Inverse of to_degree_2n on its image. Throws StructuralError if the
// permutation does not preserve the +-pairing.
SignedPermutation from_degree_2n(const Permutation& p);

// Quotient map [sigma, b] -> sigma.
inline const Permutation& pi(const SignedPermutation& x) { return x.perm(); }

// Membership in the index-2 subgroup D_n: even sign vector.
inline bool is_in_dn(const SignedPermutation& x) { return x.signs().even(); }

}  // namespace cxg
