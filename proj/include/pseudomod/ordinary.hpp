#pragma once

// Ordinary Cayley-Hamilton representations and the ordinary quotient.

#include <optional>
#include <string>
#include <vector>

#include "pseudomod/gma.hpp"

namespace pseudomod {

enum class Verdict { Ordinary, NotOrdinary, Unsupported };
std::string verdict_name(Verdict v);

/// A GMA whose group images play the role of rho, with the marked subgroups and kappa over the base.
struct OrdinaryContext {
  MarkedGroup group;
  Character kappa;
  GmaAlgebra gma;
};

struct OrdinaryWitness {
  bool ok = true;
  int g = -1;
  std::string coordinate;  // "rho12" or "rho11"
};

/// rho12 vanishes on Dp and rho11 equals kappa^-1 on Ip.
OrdinaryWitness is_ordinary_rep(const OrdinaryContext& ctx);

struct LabeledElement {
  std::string provenance;
  int g = -1;  // group element, or -1 when derived from an ideal row
  Vec element;
};

struct OrdinaryQuotient {
  RowSpan j_star;  // two-sided ideal of E
  std::vector<LabeledElement> j_star_generators;
  RowSpan j_base;  // ideal of A generated by traces and dets of j_star
  std::vector<LabeledElement> j_base_generators;
  RowSpan j;  // j_star plus j_base * E
  ChAlgebra e_ord;
  bool collapsed = false;
  std::string collapse_stage;
  std::string descent_failure;
  bool injective = false;
};

OrdinaryQuotient ordinary_quotient(const OrdinaryContext& ctx, std::uint64_t seed = 0);

struct ReducibleOrdinary {
  RowSpan j_red;       // two-sided ideal of E
  RowSpan base_ideal;  // in A
  ChAlgebra e_red;
  std::vector<Vec> chi1;  // over A / base_ideal, on group elements
  std::vector<Vec> chi2;
  std::string certificate_failure;
  bool maps_onto_ord_quotient = false;  // kernel containment toward E_ord / (reducibility ideal) E_ord
  bool equals_ord_quotient = false;
};

ReducibleOrdinary reducible_ordinary_quotient(const OrdinaryContext& ctx, const OrdinaryQuotient& oq);

/// Which residual character carries e1: explicit index (0 = chi1 of residual_split, 1 = chi2) or by kappa.
struct E1Label {
  int index = -1;
  std::string source;  // "explicit", "kappa on G", "kappa on Ip"
};

struct OrdinaryDecision {
  Verdict verdict = Verdict::Unsupported;
  std::string reason;
  E1Label label;
  std::optional<OrdinaryContext> context;
  std::optional<OrdinaryQuotient> quotient;
};

/// Labels e1 among the residual characters; nullopt means no character matches kappa^-1 on Ip.
std::optional<E1Label> label_e1(const Pseudorep2& d, const ResidualSplit& split, const Character& kappa,
                                std::optional<int> explicit_index);

/// Builds the CH quotient of A[G], its GMA with e1 labeled and the ordinary context. Without a
/// residual split, e1 comes from a group element with distinct residual roots (label index swaps them).
OrdinaryContext build_context(const Pseudorep2& d, const Character& kappa, const ResidualSplit& split,
                              const E1Label& label);

OrdinaryDecision is_ordinary_psrep(const Pseudorep2& d, const Character& kappa,
                                   std::optional<int> explicit_index = std::nullopt);

enum class TangentConstraint { All, Ordinary, ReducibleOrdinary };
std::string constraint_name(TangentConstraint c);

struct TangentCount {
  int fp_dimension = 0;
  int dimension = -1;  // over the residue field, -1 when fp_dimension is not a multiple of its degree
  std::size_t candidates = 0;
  std::size_t accepted = 0;
  bool additive_closed = false;
};

/// First-order deformations of a field-valued law over k[e]/(e^2) satisfying the constraint.
TangentCount ordinary_tangent_count(const Pseudorep2& dbar, const Character& kappa, std::optional<int> explicit_index,
                                    TangentConstraint constraint, std::size_t budget);

/// Residual values of every defining identity of a degree-2 law (zero iff valid, ignoring unit checks).
std::vector<Vec> identity_residuals(const Pseudorep2& d);

}  // namespace pseudomod
