#pragma once

// Augmented algebras over a truncated DVR, the numerical criterion and Eisenstein towers.

#include <string>
#include <vector>

#include "pseudomod/dvr.hpp"
#include "pseudomod/module.hpp"

namespace pseudomod {

/// T with O -> T -> O composing to the identity; O is k[t]/(t^N).
struct AugmentedAlgebra {
  FiniteRing o;
  Vec t;
  FiniteRing ring;
  RingHom structure;
  RingHom pi;
  RowSpan wp;  // ker(pi)
  int rank = 0;
};

/// Validates the section property and freeness over O; throws InputError otherwise.
AugmentedAlgebra make_augmented(const FiniteRing& o, const Vec& t, const FiniteRing& ring, const RingHom& structure,
                                const RingHom& pi);
/// O[x]/(x^2 - t^r x) with x -> 0.
AugmentedAlgebra node_algebra(const DvrModel& o, int r);
AugmentedAlgebra trivial_augmented(const DvrModel& o);

/// Length over O of a finite O-module of the given log_p size.
int o_length(const FiniteRing& o, int log_p_size);
/// Length of O/I.
int o_colength(const FiniteRing& o, const RowSpan& ideal);

/// pi(Ann_T(ker pi)).
RowSpan eta_invariant(const AugmentedAlgebra& t);
/// Length over O of wp/wp^2 (O acting through residue degree of r).
int cotangent_length(const FiniteRing& r, const RowSpan& wp, const FiniteRing& o);

struct LenstraVerdict {
  int cotangent = 0;
  int eta_length = 0;
  bool criterion_met = false;
  bool isomorphism_checked = false;
  bool is_isomorphism = false;
  bool ci_decided = false;
  bool complete_intersection = false;
  std::string failure;  // nonempty when the criterion's promise is contradicted
};

/// R -> T -> O; criterion_met when l(J/J^2) <= l(O/eta).
LenstraVerdict lenstra_check(const FiniteRing& r, const RingHom& r_to_t, const AugmentedAlgebra& t);

struct NonCiInstance {
  FiniteRing r;
  RingHom r_to_t;
  AugmentedAlgebra t;
};
/// O[x]/(x^3, t x) onto O.
NonCiInstance non_ci_instance(const DvrModel& o);

/// True when m/(tT + m^2) has dimension at most 1, which makes T a complete intersection.
bool principal_route_ci(const FiniteRing& t_ring, const Vec& t_image);

// ---------------------------------------------------------------- towers

struct TowerSpec {
  std::string kind;  // plane, ramified, node, cubic, fat, axes
  int r = 1;
  int param = 0;     // a for ramified, s for node, axis count for axes
  Int p = 5;
  int degree = 1;    // residue field F_p or F_{p^2}
  std::string name() const;
};

struct EisensteinTower {
  TowerSpec spec;
  int truncation = 0;
  int depth = 0;
  int stable = 0;  // comparisons are made modulo t^stable
  bool degenerate = false;
  FiniteRing lambda;
  Vec t;
  FiniteRing h;
  FiniteRing big_h;
  RingHom lambda_to_h;
  RingHom lambda_to_big_h;
  RingHom big_h_to_h;
  RingHom big_h_to_lambda;
  RingHom h_to_quotient;  // h -> lambda/(t^r)
  RowSpan xi;             // (t^r) in lambda
  RowSpan i_h;            // I in h
  RowSpan i_big;          // I_H in H
  RowSpan script_i;       // ker(H -> lambda)
  RowSpan ker_h;          // ker(H -> h)
  Vec t0;
  std::string failure;    // first violated tower invariant
};

EisensteinTower build_eisenstein_tower(const TowerSpec& spec, int truncation = 10);
/// Adds t^stable to an ideal of a tower ring (h, H or lambda) through the given structure map.
RowSpan stable_ideal(const EisensteinTower& tw, const FiniteRing& ring, const RingHom& from_lambda,
                     const RowSpan& ideal);
/// H viewed as an augmented algebra over lambda.
AugmentedAlgebra tower_augmented(const EisensteinTower& tw);

enum class Decision { True, False, Skipped };
std::string decision_name(Decision d);

struct AuditEntry {
  std::string condition;
  Decision value = Decision::Skipped;
  std::string detail;
};

struct TheoremAudit {
  std::string tower;
  std::vector<AuditEntry> entries;
  int length_h_mod_i = 0;
  bool length_matches = false;
  bool annihilators_hold = false;
  bool consistent = false;
  std::string failure;
};

TheoremAudit theorem_audit(const EisensteinTower& tw);

struct FittingReplay {
  bool fitting_in_annihilator = false;
  bool annihilator_vanishes = false;  // stably
  int cotangent = 0;                  // l(I/I^2)
  int r = 0;
  bool bound_holds = false;
};

FittingReplay fitting_replay(const EisensteinTower& tw);

/// Deterministic corpus of tower specs: Gorenstein and non-Gorenstein kinds.
std::vector<TowerSpec> standard_tower_specs();

}  // namespace pseudomod
