#pragma once

// Brute-force reference computations used by the tests. Everything here enumerates
// elements directly and never calls the library's linear algebra.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pseudomod/algebra.hpp"
#include "pseudomod/dvr.hpp"
#include "pseudomod/psrep.hpp"
#include "pseudomod/rng.hpp"

namespace oracle {

using pseudomod::Algebra;
using pseudomod::Int;
using pseudomod::Mat;
using pseudomod::Vec;
using pseudomod::Zmod;

using ElemSet = std::set<Vec>;

inline Vec vadd(const Zmod& z, const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = z.add(a[i], b[i]);
  return c;
}

/// Every Z/p^k-combination of the rows, by closing {0} under adding generators.
inline ElemSet span(const Zmod& z, const Mat& rows, int ncols) {
  ElemSet seen{Vec(ncols, 0)};
  std::vector<Vec> todo{Vec(ncols, 0)};
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (const auto& r : rows) {
      Vec w = vadd(z, v, r);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

/// All coefficient vectors of the ambient module.
inline std::vector<Vec> ambient(const Zmod& z, int n) {
  std::vector<Vec> out{Vec()};
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const auto& v : out)
      for (Int c = 0; c < z.modulus(); ++c) {
        Vec w = v;
        w.push_back(c);
        next.push_back(w);
      }
    out.swap(next);
  }
  return out;
}

/// Elements of the algebra as sets of ambient vectors modulo relations, each represented by
/// the library-independent key: the sorted coset would be too large, so cosets are keyed by
/// their smallest member.
struct Cosets {
  const Algebra* a;
  ElemSet relations;

  explicit Cosets(const Algebra& alg) : a(&alg), relations(span(alg.zmod(), alg.relations().rows(), alg.dim())) {}

  Vec key(const Vec& v) const {
    Vec best;
    bool first = true;
    for (const auto& r : relations) {
      Vec w = vadd(a->zmod(), v, r);
      if (first || w < best) best = w, first = false;
    }
    return best;
  }
  ElemSet keys(const std::vector<Vec>& vs) const {
    ElemSet out;
    for (const auto& v : vs) out.insert(key(v));
    return out;
  }
  std::vector<Vec> elements() const {
    ElemSet out;
    for (const auto& v : ambient(a->zmod(), a->dim())) out.insert(key(v));
    return {out.begin(), out.end()};
  }
};

/// Smallest ideal containing gens: closure under addition and multiplication by basis vectors.
inline ElemSet ideal(const Algebra& a, const Mat& gens) {
  Cosets c(a);
  ElemSet seen{c.key(a.zero())};
  std::vector<Vec> todo{a.zero()};
  auto push = [&](const Vec& v) {
    Vec k = c.key(v);
    if (seen.insert(k).second) todo.push_back(k);
  };
  for (const auto& g : gens) push(g);
  while (!todo.empty()) {
    Vec v = todo.back();
    todo.pop_back();
    for (const auto& w : std::vector<Vec>(seen.begin(), seen.end())) push(vadd(a.zmod(), v, w));
    for (int i = 0; i < a.dim(); ++i) {
      push(a.mul(pseudomod::unit_vec(a.dim(), i), v));
      push(a.mul(v, pseudomod::unit_vec(a.dim(), i)));
    }
  }
  return seen;
}

/// Keys of every element of a RowSpan that contains the relations.
inline ElemSet ideal_elements(const Algebra& a, const pseudomod::RowSpan& i) {
  Cosets c(a);
  ElemSet all = span(a.zmod(), i.rows(), a.dim());
  return c.keys(std::vector<Vec>(all.begin(), all.end()));
}

inline ElemSet annihilator(const Algebra& a, const ElemSet& ideal_elems) {
  Cosets c(a);
  ElemSet out;
  for (const auto& x : c.elements()) {
    bool kills = true;
    for (const auto& y : ideal_elems)
      if (!a.is_zero(a.mul(x, y))) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  return out;
}

/// log_p of a finite set size that is a power of p.
inline int log_p(std::size_t n, Int p) {
  int e = 0;
  while (n > 1) {
    n /= static_cast<std::size_t>(p);
    ++e;
  }
  return e;
}

/// Gorenstein by the dualizing module: some F_p-linear functional phi makes (x, y) -> phi(xy)
/// nondegenerate, i.e. Hom(R, F_p) is free of rank one. Requires a field base with no relations.
inline bool dualizing_free(const Algebra& a) {
  const Zmod& z = a.zmod();
  const int n = a.dim();
  std::vector<Vec> elems = ambient(z, n);
  for (const auto& phi : ambient(z, n)) {
    if (std::all_of(phi.begin(), phi.end(), [](Int c) { return c == 0; })) continue;
    bool nondeg = true;
    for (const auto& x : elems) {
      if (std::all_of(x.begin(), x.end(), [](Int c) { return c == 0; })) continue;
      bool pairs = false;
      for (int j = 0; j < n && !pairs; ++j) {
        Vec xy = a.mul(x, pseudomod::unit_vec(n, j));
        Int s = 0;
        for (int i = 0; i < n; ++i) s = z.add(s, z.mul(phi[i], xy[i]));
        pairs = s != 0;
      }
      if (!pairs) {
        nondeg = false;
        break;
      }
    }
    if (nondeg) return true;
  }
  return false;
}

/// F_p[x_1..x_v] modulo every monomial outside a downward-closed set (given as exponent vectors).
inline Algebra monomial_algebra(Int p, const std::vector<std::vector<int>>& monomials) {
  const int n = static_cast<int>(monomials.size());
  Mat table;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> m(monomials[i].size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = monomials[i][k] + monomials[j][k];
      Vec v(n, 0);
      for (int l = 0; l < n; ++l)
        if (monomials[l] == m) v[l] = 1;
      table.push_back(v);
    }
  Vec one(n, 0);
  one[0] = 1;
  return Algebra(Zmod(p, 1), n, {}, table, one);
}

/// All downward-closed monomial sets of the given size in `vars` variables (first entry the unit).
inline std::vector<std::vector<std::vector<int>>> order_ideals(int vars, int size) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur{std::vector<int>(vars, 0)};
  std::set<std::vector<std::vector<int>>> seen;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(cur.size()) == size) {
      std::vector<std::vector<int>> s(cur.begin() + 1, cur.end());
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second) out.push_back(cur);
      return;
    }
    std::set<std::vector<int>> cands;
    for (const auto& m : cur)
      for (int v = 0; v < vars; ++v) {
        std::vector<int> w = m;
        ++w[v];
        if (std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
        bool closed = true;
        for (int u = 0; u < vars; ++u)
          if (w[u] > 0) {
            std::vector<int> d = w;
            --d[u];
            if (std::find(cur.begin(), cur.end(), d) == cur.end()) closed = false;
          }
        if (closed) cands.insert(w);
      }
    for (const auto& w : cands) {
      cur.push_back(w);
      grow();
      cur.pop_back();
    }
  };
  grow();
  return out;
}

/// 2x2 matrices over a ring, used to enumerate representations directly.
inline pseudomod::Mat2 random_gl2(const Algebra& r, pseudomod::Rng& rng) {
  while (true) {
    pseudomod::Mat2 m;
    for (auto& e : m) {
      Vec v(r.dim());
      for (auto& c : v) c = rng.below(r.zmod().modulus());
      e = r.reduce(v);
    }
    if (pseudomod::is_unit(r, pseudomod::mat2_det(r, m))) return m;
  }
}

}  // namespace oracle
