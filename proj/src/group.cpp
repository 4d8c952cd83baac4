#include "pseudomod/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pseudomod {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators)
    : table_(std::move(table)), gens_(std::move(generators)) {
  const int n = order();
  if (n < 1) throw InputError("FiniteGroup: empty table");
  if (n > kDefaultMaxOrder) throw InputError("FiniteGroup: order exceeds " + std::to_string(kDefaultMaxOrder));
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("FiniteGroup: table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("FiniteGroup: entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw InputError("FiniteGroup: element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw InputError("FiniteGroup: table is not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0 || table_[inverse_[a]][a] != 0) throw InputError("FiniteGroup: missing inverse");
  for (int g : gens_)
    if (g < 0 || g >= n) throw InputError("FiniteGroup: generator out of range");
  words_.assign(n, {});
  parent_.assign(n, -1);
  parent_gen_.assign(n, -1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  bfs_.push_back(0);
  for (std::size_t at = 0; at < bfs_.size(); ++at) {
    int g = bfs_[at];
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      int h = table_[g][gens_[s]];
      if (seen[h]) continue;
      seen[h] = true;
      words_[h] = words_[g];
      words_[h].push_back(static_cast<int>(s));
      parent_[h] = g;
      parent_gen_[h] = static_cast<int>(s);
      bfs_.push_back(h);
    }
  }
  if (static_cast<int>(bfs_.size()) != n) throw InputError("FiniteGroup: generators do not generate the group");
}

int FiniteGroup::pow(int a, int e) const {
  int r = 0;
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::string FiniteGroup::name(int g) const {
  if (g == 0) return "1";
  std::string s;
  for (int w : words_[g]) s += static_cast<char>('a' + w);
  return s;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t at = 0; at < elems.size(); ++at)
    for (int s : gens) {
      int h = mul(elems[at], s);
      if (!in[h]) {
        in[h] = true;
        elems.push_back(h);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::vector<bool> in(order(), false);
  for (int e : elems) in[e] = true;
  if (!in[0]) return false;
  for (int a : elems)
    for (int b : elems)
      if (!in[mul(a, inv(b))]) return false;
  return true;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(t, n > 1 ? std::vector<int>{1} : std::vector<int>{});
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InputError("dihedral_group: n must be positive");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int i = a % n, sa = a / n, j = b % n, sb = b / n;
      int rot = ((i + (sa ? -j : j)) % n + n) % n;
      t[a][b] = rot + n * ((sa + sb) % 2);
    }
  std::vector<int> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return FiniteGroup(t, gens);
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return cyclic_group(1);
  const std::size_t d = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != d) throw InputError("permutation_group: permutations of different degree");
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < d; ++i)
      if (sorted[i] != static_cast<int>(i)) throw InputError("permutation_group: not a permutation");
  }
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(d);
    for (std::size_t x = 0; x < d; ++x) c[x] = a[b[x]];
    return c;
  };
  std::vector<int> id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t at = 0; at < elems.size(); ++at)
    for (const auto& g : gens) {
      auto h = compose(elems[at], g);
      if (!index.count(h)) {
        if (elems.size() >= static_cast<std::size_t>(FiniteGroup::kDefaultMaxOrder))
          throw InputError("permutation_group: group too large");
        index[h] = static_cast<int>(elems.size());
        elems.push_back(h);
      }
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<int> gi;
  for (const auto& g : gens) gi.push_back(index.at(g));
  return FiniteGroup(t, gi);
}

FiniteGroup symmetric_group_s3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup quaternion_group() {
  // units 1,i,j,k as 0..3; element u + 4*sign
  const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u = a % 4, v = b % 4;
      int s = (a / 4 + b / 4 + sign[u][v]) % 2;
      t[a][b] = prod[u][v] + 4 * s;
    }
  return FiniteGroup(t, {1, 2});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<int> gens;
  for (int g : a.generators()) gens.push_back(g * nb);
  for (int h : b.generators()) gens.push_back(h);
  return FiniteGroup(t, gens);
}

MarkedGroup mark_group(const FiniteGroup& g, const std::vector<int>& dp_gens, const std::vector<int>& ip_gens) {
  for (int x : dp_gens)
    if (x < 0 || x >= g.order()) throw InputError("mark_group: element out of range");
  for (int x : ip_gens)
    if (x < 0 || x >= g.order()) throw InputError("mark_group: element out of range");
  MarkedGroup m{g, g.subgroup_closure(dp_gens), g.subgroup_closure(ip_gens), std::nullopt};
  for (int x : m.ip)
    if (!std::binary_search(m.dp.begin(), m.dp.end(), x)) throw InputError("mark_group: inertia is not inside decomposition");
  return m;
}

int evaluate_word(const FiniteGroup& g, const std::vector<int>& word) {
  int x = 0;
  for (int w : word) {
    if (w < 0 || w >= static_cast<int>(g.generators().size())) throw InputError("word: generator index out of range");
    x = g.mul(x, g.generators()[w]);
  }
  return x;
}

Character character_from_generators(const FiniteRing& r, const FiniteGroup& g, const std::string& name,
                                    const std::vector<Vec>& gen_values) {
  if (gen_values.size() != g.generators().size()) throw InputError("character: one value per generator required");
  Character chi{name, std::vector<Vec>(g.order())};
  chi.values[0] = r.one();
  for (int x : g.bfs_order())
    if (x != 0) chi.values[x] = r.mul(chi.values[g.parent(x)], gen_values[g.parent_gen(x)]);
  return chi;
}

CharacterCheck character_check(const FiniteRing& r, const FiniteGroup& g, const Character& chi) {
  if (static_cast<int>(chi.values.size()) != g.order()) throw InputError("character_check: character is not total");
  for (const auto& v : chi.values)
    if (!is_unit(r, v)) throw InputError("character_check: value is not a unit");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!r.equal(chi.values[g.mul(a, b)], r.mul(chi.values[a], chi.values[b]))) return {false, a, b};
  return {};
}

Character trivial_character(const FiniteRing& r, const FiniteGroup& g, const std::string& name) {
  return Character{name, std::vector<Vec>(g.order(), r.one())};
}

Character inverse_character(const FiniteRing& r, const Character& chi) {
  Character out{chi.name + "^-1", {}};
  for (const auto& v : chi.values) out.values.push_back(unit_inverse(r, v));
  return out;
}

Character map_character(const RingHom& f, const Character& chi) {
  Character out{chi.name, {}};
  for (const auto& v : chi.values) out.values.push_back(f.apply(v));
  return out;
}

Vec GroupAlgebra::coefficient(const Vec& x, int g) const {
  const int na = algebra.base.dim();
  return algebra.base.reduce(Vec(x.begin() + static_cast<std::ptrdiff_t>(g) * na,
                                 x.begin() + static_cast<std::ptrdiff_t>(g + 1) * na));
}

Vec GroupAlgebra::combine(const std::vector<Vec>& coeffs) const {
  const int na = algebra.base.dim();
  Vec v(algebra.alg.dim(), 0);
  for (std::size_t g = 0; g < coeffs.size(); ++g)
    std::copy(coeffs[g].begin(), coeffs[g].end(), v.begin() + static_cast<std::ptrdiff_t>(g) * na);
  return algebra.alg.reduce(v);
}

GroupAlgebra group_algebra(const FiniteRing& r, const FiniteGroup& g) {
  const int na = r.dim(), ng = g.order(), n = na * ng;
  Mat rel;
  for (int x = 0; x < ng; ++x)
    for (const auto& rr : r.relations().rows()) {
      Vec v(n, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(x) * na);
      rel.push_back(v);
    }
  Mat table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < ng; ++x)
    for (int i = 0; i < na; ++i)
      for (int y = 0; y < ng; ++y)
        for (int j = 0; j < na; ++j) {
          Vec v(n, 0);
          const Vec& c = r.table_entry(i, j);
          std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(g.mul(x, y)) * na);
          table[static_cast<std::size_t>(x * na + i) * n + (y * na + j)] = std::move(v);
        }
  Vec one(n, 0);
  std::copy(r.one().begin(), r.one().end(), one.begin());
  Algebra alg(r.zmod(), n, rel, std::move(table), one);
  Mat structure;
  for (int i = 0; i < na; ++i) structure.push_back(unit_vec(n, i));
  GroupAlgebra ga{AssocAlgebra{r, alg, structure}, g, {}};
  for (int x = 0; x < ng; ++x) {
    Vec v(n, 0);
    std::copy(r.one().begin(), r.one().end(), v.begin() + static_cast<std::ptrdiff_t>(x) * na);
    ga.elements.push_back(alg.reduce(v));
  }
  return ga;
}

}  // namespace pseudomod
