#pragma once

// Cayley-Hamilton quotients, idempotent lifting and type (1,1) generalized matrix algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudomod/psrep.hpp"

namespace pseudomod {

/// An algebra over a commutative base with a degree-2 law given by a linear trace.
struct ChAlgebra {
  FiniteRing base;
  Algebra alg;
  Mat structure;                  // image of each ambient basis vector of base
  Mat trace_map;                  // trace (in base) of each ambient basis vector of alg
  std::vector<Vec> group_images;  // image of each group element, empty for synthetic algebras

  Vec embed(const Vec& a) const;
  Vec trace(const Vec& x) const;
  Vec det(const Vec& x) const;
  /// x^2 - t(x) x + d(x).
  Vec ch_residual(const Vec& x) const;
  /// Same data over the quotient by a two-sided ideal and a base ideal with trace(ideal) in base_ideal.
  ChAlgebra quotient(const RowSpan& ideal, const RowSpan& base_ideal) const;
};

/// Empty string, or a description of the first violated invariant.
std::string check_ch_algebra(const ChAlgebra& e, std::uint64_t seed, int samples);
/// Kernel of base -> alg is trivial.
bool structure_map_injective(const ChAlgebra& e);

struct ChQuotient {
  ChAlgebra ch;
  RowSpan ideal;  // in the ambient of the group algebra
};

/// Quotient of A[G] by the two-sided ideal generated by the polarized Cayley-Hamilton elements.
ChQuotient ch_quotient(const GroupAlgebra& ga, const Pseudorep2& d);

/// Full matrix-shaped algebra (a b; c d) over A with b*c multiplied by mu: trace a+d, det ad - mu bc.
ChAlgebra synthetic_gma_algebra(const FiniteRing& a, const Vec& mu);
/// Standard diagonal idempotent (1 0; 0 0) of a synthetic algebra.
Vec synthetic_e11(const ChAlgebra& e);
/// Element (a b; c d) of a synthetic algebra.
Vec synthetic_element(const ChAlgebra& e, const Vec& a, const Vec& b, const Vec& c, const Vec& d);

struct IdempotentLift {
  Vec e1;
  Vec e2;
  int iterations = 0;         // Newton steps used for e1
  int nilpotency_class = 0;   // of the trace radical {x : t(xy) in m for all y}
};

/// Runs e <- 3e^2 - 2e^3 from x until e^2 = e; x^2 - x must be nilpotent.
Vec newton_idempotent(const Algebra& alg, const Vec& x, int max_iterations, int* iterations);
/// Smallest c with N^c = 0 for N = {x : t(xy) in m for all y}.
int trace_radical_class(const ChAlgebra& e);
/// Lifts the residual idempotents attached to a split (chi1 on e1, chi2 on e2).
IdempotentLift lift_idempotents(const ChAlgebra& e, const std::vector<Vec>& chi1, const std::vector<Vec>& chi2);
/// Lifts the idempotents splitting an element whose residual characteristic polynomial has
/// distinct roots lambda1 (on e1) and lambda2.
IdempotentLift lift_idempotents_from_element(const ChAlgebra& e, const Vec& x, const Vec& lambda1,
                                             const Vec& lambda2);
/// Element and root pair usable for lift_idempotents_from_element, searched over group images.
struct SplittingElement {
  int group_element = -1;
  Vec lambda1;
  Vec lambda2;
};
std::optional<SplittingElement> find_splitting_element(const ChAlgebra& e);

struct GmaAlgebra {
  ChAlgebra ch;
  Vec e1;
  Vec e2;
  Mat b_gens;  // minimal A-module generators of e1 E e2
  Mat c_gens;  // minimal A-module generators of e2 E e1
  std::vector<std::vector<Vec>> m;  // m[i][j] = psi1(b_i c_j) in A
  std::vector<LinearSolver> solvers;  // corner e1Ee1, corner e2Ee2, then B and C over their generators

  /// Coordinate of a corner element e_i x e_i (i = 0 or 1) in A.
  Vec corner_coordinate(int i, const Vec& corner_element) const;
  /// e_i x e_j.
  Vec piece(int i, int j, const Vec& x) const;
};

GmaAlgebra gma_decompose(const ChAlgebra& e, const Vec& e1, const Vec& e2);
/// Empty string or the first violated GMA invariant.
std::string check_gma(const GmaAlgebra& g);

struct Coordinates {
  Vec a;     // in A
  Vec b;     // element of e1 E e2
  Vec c;     // element of e2 E e1
  Vec d;     // in A
  Vec b_coeffs;  // one solution over b_gens (A-coefficients concatenated)
  Vec c_coeffs;
};

Coordinates coordinates(const GmaAlgebra& g, const Vec& x);
Vec reassemble(const GmaAlgebra& g, const Coordinates& c);
/// Coordinates of every group image.
std::vector<Coordinates> coordinate_maps(const GmaAlgebra& g);

struct ReducibilityResult {
  RowSpan ideal;  // in A
  FiniteRing quotient;
  std::vector<Vec> chi1;  // values in A/J on group elements (or on basis elements when no group)
  std::vector<Vec> chi2;
  bool certificate_ok = false;
  std::string certificate_failure;
};

ReducibilityResult reducibility_ideal(const GmaAlgebra& g);
/// Checks that the split characters reproduce trace and det modulo the ideal.
std::string verify_reducibility_certificate(const GmaAlgebra& g, const ReducibilityResult& r);
/// True if the law (trace, det) over A/K is a sum of two characters (searched exhaustively).
bool splits_over(const FiniteRing& a, const RowSpan& k, const FiniteGroup& grp, const std::vector<Vec>& trace,
                 const std::vector<Vec>& det, std::size_t budget);
/// For each maximal proper sub-ideal of J: the law does not split over A/K.
std::string verify_reducibility_minimality(const GmaAlgebra& g, const ReducibilityResult& r,
                                           const FiniteGroup& grp, std::size_t budget);

}  // namespace pseudomod
