#pragma once

// Scalar arithmetic in Z/p^k, the coefficient base for every ring in the library.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudomod {

using Int = std::int64_t;
using Vec = std::vector<Int>;

/// Error raised for malformed input (bad literals, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error raised when a post-condition or hard invariant fails.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error raised when an enumeration would exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Zmod {
 public:
  Zmod(Int p, int k);

  Int prime() const { return p_; }
  int exponent() const { return k_; }
  Int modulus() const { return n_; }

  Int reduce(Int a) const {
    a %= n_;
    return a < 0 ? a + n_ : a;
  }
  Int add(Int a, Int b) const { return reduce(a + b); }
  Int sub(Int a, Int b) const { return reduce(a - b); }
  Int mul(Int a, Int b) const { return reduce(a * b); }
  Int neg(Int a) const { return reduce(-a); }

  /// p-adic valuation of a residue; returns k for zero.
  int valuation(Int a) const;
  bool is_unit(Int a) const { return reduce(a) % p_ != 0; }
  /// Inverse of a unit; throws InputError on non-units.
  Int inverse(Int a) const;
  /// p^e as a residue.
  Int power_of_p(int e) const;

  bool operator==(const Zmod& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  Int p_;
  int k_;
  Int n_;
};

bool is_prime(Int n);

}  // namespace pseudomod
