#pragma once

// Finite algebras over Z/p^k presented as (Z/p^k)^n modulo a relation span,
// with multiplication given by structure constants on the ambient basis.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pseudomod/linalg.hpp"

namespace pseudomod {

class Algebra {
 public:
  /// table[i * dim + j] is the product of ambient basis vectors i and j.
  Algebra(const Zmod& z, int dim, const Mat& relations, Mat table, Vec one);

  const Zmod& zmod() const { return z_; }
  int dim() const { return n_; }
  const RowSpan& relations() const { return rel_; }
  const Vec& one() const { return one_; }
  const Vec& table_entry(int i, int j) const { return (*table_)[static_cast<std::size_t>(i) * n_ + j]; }
  const std::shared_ptr<const Mat>& table() const { return table_; }

  Vec reduce(const Vec& a) const { return rel_.reduce(a); }
  Vec zero() const { return Vec(static_cast<std::size_t>(n_), 0); }
  Vec basis(int i) const { return reduce(unit_vec(n_, i)); }
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(Int c, const Vec& a) const;
  Vec mul(const Vec& a, const Vec& b) const;
  /// Product with the i-th ambient basis vector on the left or right.
  Vec mul_basis_left(int i, const Vec& b) const;
  Vec mul_basis_right(const Vec& a, int j) const;
  Vec pow(const Vec& a, Int e) const;

  bool is_zero(const Vec& a) const { return rel_.contains(a); }
  bool equal(const Vec& a, const Vec& b) const { return is_zero(sub(a, b)); }
  bool is_zero_ring() const { return is_zero(one_); }
  bool is_commutative() const;
  /// log_p of the number of elements.
  int log_size() const { return n_ * z_.exponent() - rel_.log_size(); }

  /// Same structure constants, relations replaced by `ideal` (which must contain them).
  Algebra with_relations(const RowSpan& ideal) const;

 private:
  Zmod z_;
  int n_;
  RowSpan rel_;
  std::shared_ptr<const Mat> table_;
  Vec one_;
};

/// Commutative algebras play the role of coefficient rings.
using FiniteRing = Algebra;
/// Ideals (one- or two-sided) are stored as their preimage in ambient coordinates.
using Ideal = RowSpan;

/// Returns a description of the first violated axiom, or an empty string.
std::string check_algebra_axioms(const Algebra& a);

class RingHom {
 public:
  RingHom(Algebra src, Algebra dst, Mat images);

  const Algebra& src() const { return src_; }
  const Algebra& dst() const { return dst_; }
  const Mat& images() const { return images_; }
  Vec apply(const Vec& a) const;
  RowSpan kernel() const;
  RowSpan image() const;
  bool is_surjective() const;
  RowSpan preimage(const RowSpan& ideal) const;
  /// Same map with the target replaced by a quotient of it sharing the ambient.
  RingHom into(const Algebra& dst_quotient) const;
  /// Same map with the source replaced by a quotient; throws if not well defined.
  RingHom from(const Algebra& src_quotient) const;
  /// Empty string if additive-well-defined, unital and multiplicative on basis pairs.
  std::string check() const;

 private:
  Algebra src_;
  Algebra dst_;
  Mat images_;
};

RingHom compose(const RingHom& g, const RingHom& f);
RingHom identity_hom(const Algebra& a);

/// An algebra over a commutative base ring with its structure map.
struct AssocAlgebra {
  FiniteRing base;
  Algebra alg;
  Mat structure;  // image of each ambient basis vector of base

  Vec embed(const Vec& a) const;
};

// ---- constructors ----

FiniteRing zmod_ring(Int p, int k);
FiniteRing zero_ring_like(const Zmod& z);

struct Extension {
  FiniteRing ring;
  Vec x;
  RingHom inclusion;
};

/// base[x]/(f) with f = x^d + sum_j low[j] x^j, coefficients in base.
Extension extension(const FiniteRing& base, const std::vector<Vec>& low);
/// The hom out of base[x]/(f) determined by a hom out of base and the image of x.
RingHom extension_hom(const Extension& ext, const RingHom& base_map, const Vec& x_image);

struct ProductRing {
  Algebra ring;
  RingHom pr1;
  RingHom pr2;
  Vec pair(const Vec& a, const Vec& b) const;
};
ProductRing product_ring(const Algebra& a, const Algebra& b);

struct Subalgebra {
  Algebra alg;
  RingHom embedding;
};
/// Presents the subalgebra spanned by `gens` (which must be multiplicatively closed
/// together with the unit) with one ambient coordinate per generator.
Subalgebra subalgebra(const Algebra& parent, const Mat& gens);

struct FiberProduct {
  FiniteRing ring;
  RingHom p1;
  RingHom p2;
  RingHom embedding;  // into the product ring
};
FiberProduct fiber_product(const RingHom& f, const RingHom& g);

// ---- ideals ----

RowSpan zero_ideal(const Algebra& r);
RowSpan unit_ideal(const Algebra& r);
bool is_unit_ideal(const Algebra& r, const RowSpan& i);
bool is_zero_ideal(const Algebra& r, const RowSpan& i);
/// Two-sided ideal generated by gens.
RowSpan ideal_closure(const Algebra& r, const Mat& gens);
/// Additive span of gens plus the relations.
RowSpan additive_span(const Algebra& r, const Mat& gens);
RowSpan ideal_sum(const RowSpan& a, const RowSpan& b);
RowSpan ideal_product(const Algebra& r, const RowSpan& a, const RowSpan& b);
RowSpan ideal_power(const Algebra& r, const RowSpan& a, int e);
/// {x : x * i = 0 for all i in I} for a commutative ring.
RowSpan annihilator(const FiniteRing& r, const RowSpan& ideal);
RowSpan annihilator_of_elements(const FiniteRing& r, const Mat& elems);
Algebra quotient_ring(const Algebra& r, const RowSpan& ideal);
RingHom quotient_map(const Algebra& r, const RowSpan& ideal);
/// Generators of the ideal modulo relations, dropping zero rows.
Mat ideal_generators(const Algebra& r, const RowSpan& ideal);

// ---- local rings ----

RowSpan radical(const FiniteRing& r);
bool is_local(const FiniteRing& r);

struct LocalInfo {
  RowSpan maximal;
  FiniteRing residue;
  int degree;  // residue field is F_{p^degree}
  Int q;
};
LocalInfo local_info(const FiniteRing& r);

/// Length over a local ring of a subquotient given as log_p-size.
int length_from_log(const LocalInfo& info, int log_p_size);
/// Length of I/J for ideals J within I.
int ideal_quotient_length(const FiniteRing& r, const LocalInfo& info, const RowSpan& i, const RowSpan& j);
int embedding_dimension(const FiniteRing& r);
bool gorenstein_test(const FiniteRing& r);
/// Minimal generators of an ideal of a local ring (lifts of a basis of I/mI).
Mat minimal_generators(const FiniteRing& r, const LocalInfo& info, const RowSpan& ideal);
int minimal_generator_count(const FiniteRing& r, const RowSpan& ideal);
/// Maximal proper sub-ideals of I (ideals J with mI within J and I/J simple).
std::vector<RowSpan> maximal_subideals(const FiniteRing& r, const RowSpan& ideal);
std::vector<RowSpan> all_ideals(const FiniteRing& r, std::size_t budget);

// ---- elements ----

/// Canonical representatives of all elements, sorted; throws BudgetExceeded.
std::vector<Vec> enumerate_elements(const Algebra& a, std::size_t budget);
std::optional<Vec> inverse(const Algebra& a, const Vec& x);
bool is_unit(const Algebra& a, const Vec& x);
Vec unit_inverse(const Algebra& a, const Vec& x);
Vec scalar(const Algebra& a, Int c);

}  // namespace pseudomod
