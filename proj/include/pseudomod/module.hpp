#pragma once

// Finitely presented modules over finite commutative rings.

#include <vector>

#include "pseudomod/algebra.hpp"

namespace pseudomod {

/// Cokernel of R^relations -> R^ngens; each relation row lists ngens ring elements.
struct FinModule {
  FiniteRing base;
  int ngens = 0;
  std::vector<std::vector<Vec>> relations;
};

/// R-span of the relation rows inside (Z/p^k)^(ngens * dim), including base relations.
RowSpan relation_submodule(const FinModule& m);
/// log_p of the number of elements.
int module_log_size(const FinModule& m);
/// Composition length over a local base.
int module_length(const FinModule& m);
RowSpan module_annihilator(const FinModule& m);
/// Ideal of maximal minors of the relation matrix.
RowSpan fitting_ideal(const FinModule& m);

Vec determinant(const FiniteRing& r, const std::vector<std::vector<Vec>>& square);

FinModule cyclic_module(const FiniteRing& r, const Mat& ideal_gens);
FinModule direct_sum(const FinModule& a, const FinModule& b);
FinModule free_module(const FiniteRing& r, int rank);

/// Presentation of an ideal as a module: minimal generators and the R-span of their syzygies.
FinModule ideal_as_module(const FiniteRing& r, const RowSpan& ideal);

}  // namespace pseudomod
