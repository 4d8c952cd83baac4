#include "pseudomod/dvr.hpp"

namespace pseudomod {

namespace {

Extension build(const FiniteRing& field, int n) {
  if (n < 1) throw InputError("DvrModel: truncation must be positive");
  std::vector<Vec> low(n, field.zero());
  return extension(field, low);
}

}  // namespace

DvrModel::DvrModel(const FiniteRing& field, int truncation)
    : field_(field), n_(truncation), ext_(build(field, truncation)), q_(1) {
  if (!is_local(field) || !is_zero_ideal(field, radical(field))) throw InputError("DvrModel: base must be a finite field");
  for (int i = 0; i < field.log_size(); ++i) q_ *= field.zmod().prime();
  for (int e = 0; e <= n_; ++e) powers_.push_back(ideal_closure(ring(), {t_power(e)}));
}

Vec DvrModel::t_power(int e) const { return ring().pow(t(), e); }

const RowSpan& DvrModel::ideal_t(int e) const { return powers_[e < n_ ? e : n_]; }

int DvrModel::valuation(const Vec& x) const {
  int v = 0;
  while (v < n_ && powers_[v + 1].contains(x)) ++v;
  return v;
}

int DvrModel::ideal_valuation(const RowSpan& ideal) const {
  for (int e = 0; e <= n_; ++e)
    if (powers_[e] == ideal.plus(ring().relations())) return e;
  throw InvariantFailure("DvrModel: ideal is not a power of the uniformizer");
}

int DvrModel::colength(const RowSpan& ideal) const { return ideal_valuation(ideal); }

FiniteRing prime_field(Int p) { return zmod_ring(p, 1); }

FiniteRing quadratic_field(Int p) {
  FiniteRing fp = prime_field(p);
  for (Int c = 2; c < p; ++c) {
    bool square = false;
    for (Int y = 0; y < p; ++y)
      if (y * y % p == c) square = true;
    if (!square) return extension(fp, {{(p - c) % p}, {0}}).ring;
  }
  throw InputError("quadratic_field: p must be odd");
}

}  // namespace pseudomod
