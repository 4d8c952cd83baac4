#pragma once

// Truncated discrete valuation ring k[t]/(t^N) over a finite field k.

#include <vector>

#include "pseudomod/algebra.hpp"

namespace pseudomod {

class DvrModel {
 public:
  static constexpr int kDefaultTruncation = 16;

  DvrModel(const FiniteRing& field, int truncation = kDefaultTruncation);

  const FiniteRing& field() const { return field_; }
  int truncation() const { return n_; }
  const FiniteRing& ring() const { return ext_.ring; }
  const Extension& extension() const { return ext_; }
  const Vec& t() const { return ext_.x; }
  Int q() const { return q_; }

  Vec t_power(int e) const;
  /// The ideal (t^e); e >= N gives the zero ideal.
  const RowSpan& ideal_t(int e) const;
  /// Largest v with x in (t^v); N for zero.
  int valuation(const Vec& x) const;
  /// Valuation of the generator of an ideal of the carrier.
  int ideal_valuation(const RowSpan& ideal) const;
  /// Length of O/I.
  int colength(const RowSpan& ideal) const;

 private:
  FiniteRing field_;
  int n_;
  Extension ext_;
  Int q_;
  std::vector<RowSpan> powers_;
};

/// F_p, or F_{p^2} as F_p[x]/(x^2 - c) for the least non-square c.
FiniteRing prime_field(Int p);
FiniteRing quadratic_field(Int p);

}  // namespace pseudomod
