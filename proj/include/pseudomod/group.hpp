#pragma once

// Finite groups with marked subgroups, characters and group algebras.

#include <optional>
#include <string>
#include <vector>

#include "pseudomod/algebra.hpp"

namespace pseudomod {

class FiniteGroup {
 public:
  static constexpr int kDefaultMaxOrder = 48;

  /// Element 0 must be the identity.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, int e) const;
  int element_order(int a) const;
  const std::vector<int>& generators() const { return gens_; }
  /// Shortest word in generator indices reaching g (BFS order).
  const std::vector<int>& word(int g) const { return words_[g]; }
  /// Elements in BFS order from the identity, each reached by right-multiplying a generator.
  const std::vector<int>& bfs_order() const { return bfs_; }
  /// For g != identity in BFS order: g = parent(g) * generator(parent_gen(g)).
  int parent(int g) const { return parent_[g]; }
  int parent_gen(int g) const { return parent_gen_[g]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::string name(int g) const;

  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_abelian() const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> words_;
  std::vector<int> bfs_, parent_, parent_gen_;
};

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n generated by a rotation r and a reflection s.
FiniteGroup dihedral_group(int n);
/// Group generated by permutations of {0..d-1}.
FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens);
FiniteGroup symmetric_group_s3();
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

struct MarkedGroup {
  FiniteGroup group;
  std::vector<int> dp;  // sorted elements of the decomposition stand-in
  std::vector<int> ip;  // sorted elements of the inertia stand-in, within dp
  std::optional<int> involution;
};

MarkedGroup mark_group(const FiniteGroup& g, const std::vector<int>& dp_gens, const std::vector<int>& ip_gens);
/// Evaluates a word of generator indices.
int evaluate_word(const FiniteGroup& g, const std::vector<int>& word);

struct Character {
  std::string name;
  std::vector<Vec> values;  // indexed by group element
};

struct CharacterCheck {
  bool ok = true;
  int g = -1;
  int h = -1;
};

/// Extends generator values along BFS words; does not check consistency.
Character character_from_generators(const FiniteRing& r, const FiniteGroup& g, const std::string& name,
                                    const std::vector<Vec>& gen_values);
/// Multiplicativity on all pairs; throws InputError on non-unit values.
CharacterCheck character_check(const FiniteRing& r, const FiniteGroup& g, const Character& chi);
Character trivial_character(const FiniteRing& r, const FiniteGroup& g, const std::string& name = "trivial");
Character inverse_character(const FiniteRing& r, const Character& chi);
/// Image of a character under a ring map.
Character map_character(const RingHom& f, const Character& chi);

struct GroupAlgebra {
  AssocAlgebra algebra;
  FiniteGroup group;
  std::vector<Vec> elements;  // image of each group element

  /// Coefficient of g (as an element of the base) in x.
  Vec coefficient(const Vec& x, int g) const;
  /// sum_g a_g g from base coefficients.
  Vec combine(const std::vector<Vec>& coeffs) const;
};

GroupAlgebra group_algebra(const FiniteRing& r, const FiniteGroup& g);

}  // namespace pseudomod
