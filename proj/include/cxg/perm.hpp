#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cxg/types.hpp"

namespace cxg {

// Exact permutation of {1..n}. Internally points are 0-based; all text I/O
// (cycle notation) is 1-based. Values are immutable after construction and
// safe to share across threads.
//
// Composition convention, fixed globally: compose(a, b) applies a first,
// then b, i.e. (a*b)(i) = b(a(i)). The signed-wreath multiplication rule
// is a homomorphism onto the degree-2n action under exactly this pairing
// of conventions; the oracle tests in the signed module pin it down.
class Permutation {
 public:
  Permutation() = default;  // degree 0, used only as an empty placeholder

  // Identity of the given degree.
  explicit Permutation(uint32_t degree);

  // Takes 0-based images; validates bijectivity.
  static Permutation from_images(std::vector<uint32_t> images);

  // Parses 1-based cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the
  // identity. Whitespace-insensitive; commas allowed as separators.
  static Permutation from_cycles(const std::string& text, uint32_t degree);

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t operator[](uint32_t i) const { return img_[i]; }
  std::span<const uint32_t> images() const { return img_; }
  const uint32_t* data() const { return img_.data(); }

  bool is_identity() const;

  // 1-based cycle notation; fixed points omitted; identity is "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  explicit Permutation(std::vector<uint32_t> images, int)
      : img_(std::move(images)) {}
  std::vector<uint32_t> img_;
};

// (a*b)(i) = b(a(i)); degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// g^k for k >= 0 (binary powering).
Permutation power(const Permutation& g, uint64_t k);

// Smallest k >= 1 with a^k = identity (= lcm of cycle lengths).
uint64_t order(const Permutation& a);

// Cycle lengths including fixed points, sorted descending.
struct CycleType {
  std::vector<uint32_t> lengths;

  uint64_t order() const;  // lcm of lengths
  int parity() const;      // +1 even, -1 odd: (-1)^(degree - #cycles)
  uint32_t degree() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType& a,
                                          const CycleType& b) {
    return a.lengths <=> b.lengths;
  }
};

CycleType cycle_type(const Permutation& a);
std::vector<uint32_t> fixed_points(const Permutation& a);  // 0-based
int parity(const Permutation& a);                          // +1 / -1

// Checked lcm helper shared by order computations.
uint64_t lcm_u64(uint64_t a, uint64_t b);

// Cycle-order scan over raw image spans with an epoch-stamped visited
// buffer, so hot loops never clear memory between elements.
class OrderScanner {
 public:
  uint64_t order_of(std::span<const uint32_t> img) {
    if (stamp_.size() < img.size()) stamp_.assign(img.size(), 0);
    ++epoch_;
    uint64_t ord = 1;
    for (uint32_t i = 0; i < img.size(); ++i) {
      if (stamp_[i] == epoch_) continue;
      uint64_t len = 0;
      uint32_t j = i;
      while (stamp_[j] != epoch_) {
        stamp_[j] = epoch_;
        ++len;
        j = img[j];
      }
      ord = lcm_u64(ord, len);
    }
    return ord;
  }

 private:
  std::vector<uint64_t> stamp_;
  uint64_t epoch_ = 0;
};

}  // namespace cxg
