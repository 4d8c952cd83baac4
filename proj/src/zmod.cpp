#include "pseudomod/zmod.hpp"

namespace pseudomod {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Zmod::Zmod(Int p, int k) : p_(p), k_(k), n_(1) {
  if (!is_prime(p)) throw InputError("Zmod: " + std::to_string(p) + " is not prime");
  if (k < 1) throw InputError("Zmod: exponent must be positive");
  for (int i = 0; i < k; ++i) {
    if (n_ > (Int{1} << 31) / p) throw InputError("Zmod: modulus p^k exceeds 2^31");
    n_ *= p;
  }
}

int Zmod::valuation(Int a) const {
  a = reduce(a);
  if (a == 0) return k_;
  int v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

Int Zmod::inverse(Int a) const {
  a = reduce(a);
  if (a % p_ == 0) throw InputError("Zmod::inverse: " + std::to_string(a) + " is not a unit");
  // extended Euclid on (a, n)
  Int r0 = n_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Int Zmod::power_of_p(int e) const {
  Int r = 1;
  for (int i = 0; i < e && i < k_; ++i) r *= p_;
  return e >= k_ ? 0 : r;
}

}  // namespace pseudomod
