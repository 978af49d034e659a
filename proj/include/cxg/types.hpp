#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace cxg {

// Exact arithmetic everywhere: group orders overflow 64 bits near n = 15
// (n! 2^n), genus values grow like n!/24.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::rational<BigInt>;

// Thrown when an operation is structurally ill-formed (degree mismatch,
// non-bijective image list, bad cycle text, ...).
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a request is valid but outside what this build can compute
// (enumeration threshold exceeded, rank above the sign-vector word, ...).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails. Seeing this is a bug.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace cxg
