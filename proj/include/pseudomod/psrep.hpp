#pragma once

// Two-dimensional pseudorepresentations stored as trace and determinant on group elements.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudomod/group.hpp"
#include "pseudomod/rng.hpp"

namespace pseudomod {

/// 2x2 matrix over a ring, row-major: {a, b, c, d}.
using Mat2 = std::array<Vec, 4>;

Mat2 mat2_identity(const FiniteRing& r);
Mat2 mat2_diag(const Vec& a, const Vec& d, const FiniteRing& r);
Mat2 mat2_mul(const FiniteRing& r, const Mat2& x, const Mat2& y);
Vec mat2_trace(const FiniteRing& r, const Mat2& x);
Vec mat2_det(const FiniteRing& r, const Mat2& x);
std::optional<Mat2> mat2_inverse(const FiniteRing& r, const Mat2& x);
bool mat2_equal(const FiniteRing& r, const Mat2& x, const Mat2& y);

struct MatrixRep2 {
  FiniteRing ring;
  MarkedGroup group;
  std::vector<Mat2> images;  // indexed by group element
};

/// Extends generator images to the whole group and verifies the homomorphism property.
MatrixRep2 matrix_rep(const FiniteRing& r, const MarkedGroup& g, const std::vector<Mat2>& gen_images);
MatrixRep2 conjugate_rep(const MatrixRep2& rho, const Mat2& m);

struct Pseudorep2 {
  FiniteRing ring;
  MarkedGroup group;
  std::vector<Vec> trace;
  std::vector<Vec> det;
};

Pseudorep2 psi_of_rep(const MatrixRep2& rho);
Pseudorep2 psi_of_characters(const FiniteRing& r, const MarkedGroup& g, const Character& chi1, const Character& chi2);
Pseudorep2 base_change(const Pseudorep2& d, const RingHom& f);
bool same_pseudorep(const Pseudorep2& a, const Pseudorep2& b);

struct ValidationReport {
  bool ok = true;
  std::string identity;
  std::vector<int> witness;

  std::string describe() const;
};

/// Checks the finite identity system characterising degree-2 laws.
ValidationReport validate_pseudorep(const Pseudorep2& d);

struct CharPoly {
  Vec trace;
  Vec det;
};

/// Linear extension of the trace to the group algebra.
Vec trace_on_algebra(const Pseudorep2& d, const GroupAlgebra& ga, const Vec& x);
/// Trace of each ambient basis vector of the group algebra.
Mat trace_matrix(const Pseudorep2& d, const GroupAlgebra& ga);
CharPoly char_poly_at(const Pseudorep2& d, const GroupAlgebra& ga, const Vec& x);

/// Two-sided ideal {x : t(xy) = 0 for all y} of the group algebra.
RowSpan kernel_of(const Pseudorep2& d, const GroupAlgebra& ga);
/// Re-validates the law induced on A[G]/kernel.
ValidationReport validate_induced_law(const Pseudorep2& d, const GroupAlgebra& ga, const RowSpan& kernel,
                                      std::uint64_t seed, int samples);

struct ResidualSplit {
  bool supported = false;
  std::string reason;
  std::vector<Vec> chi1;  // values in the residue field (ambient coordinates of the base)
  std::vector<Vec> chi2;
  bool multiplicity_free = false;
};

ResidualSplit residual_split(const Pseudorep2& d);

}  // namespace pseudomod
