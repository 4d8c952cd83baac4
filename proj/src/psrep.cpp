#include "pseudomod/psrep.hpp"

#include <algorithm>

namespace pseudomod {

Mat2 mat2_identity(const FiniteRing& r) { return {r.one(), r.zero(), r.zero(), r.one()}; }

Mat2 mat2_diag(const Vec& a, const Vec& d, const FiniteRing& r) { return {r.reduce(a), r.zero(), r.zero(), r.reduce(d)}; }

Mat2 mat2_mul(const FiniteRing& r, const Mat2& x, const Mat2& y) {
  return {r.add(r.mul(x[0], y[0]), r.mul(x[1], y[2])), r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3])),
          r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2])), r.add(r.mul(x[2], y[1]), r.mul(x[3], y[3]))};
}

Vec mat2_trace(const FiniteRing& r, const Mat2& x) { return r.add(x[0], x[3]); }

Vec mat2_det(const FiniteRing& r, const Mat2& x) { return r.sub(r.mul(x[0], x[3]), r.mul(x[1], x[2])); }

std::optional<Mat2> mat2_inverse(const FiniteRing& r, const Mat2& x) {
  auto di = inverse(r, mat2_det(r, x));
  if (!di) return std::nullopt;
  return Mat2{r.mul(*di, x[3]), r.neg(r.mul(*di, x[1])), r.neg(r.mul(*di, x[2])), r.mul(*di, x[0])};
}

bool mat2_equal(const FiniteRing& r, const Mat2& x, const Mat2& y) {
  for (int i = 0; i < 4; ++i)
    if (!r.equal(x[i], y[i])) return false;
  return true;
}

MatrixRep2 matrix_rep(const FiniteRing& r, const MarkedGroup& mg, const std::vector<Mat2>& gen_images) {
  const FiniteGroup& g = mg.group;
  if (gen_images.size() != g.generators().size()) throw InputError("matrix_rep: one image per generator required");
  for (const auto& m : gen_images)
    if (!mat2_inverse(r, m)) throw InputError("matrix_rep: generator image is not invertible");
  MatrixRep2 rho{r, mg, std::vector<Mat2>(g.order())};
  rho.images[0] = mat2_identity(r);
  for (int x : g.bfs_order())
    if (x != 0) rho.images[x] = mat2_mul(r, rho.images[g.parent(x)], gen_images[g.parent_gen(x)]);
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t s = 0; s < g.generators().size(); ++s)
      if (!mat2_equal(r, rho.images[g.mul(x, g.generators()[s])], mat2_mul(r, rho.images[x], gen_images[s])))
        throw InputError("matrix_rep: generator images violate the group relations");
  return rho;
}

MatrixRep2 conjugate_rep(const MatrixRep2& rho, const Mat2& m) {
  auto mi = mat2_inverse(rho.ring, m);
  if (!mi) throw InputError("conjugate_rep: matrix is not invertible");
  MatrixRep2 out = rho;
  for (auto& x : out.images) x = mat2_mul(rho.ring, mat2_mul(rho.ring, m, x), *mi);
  return out;
}

Pseudorep2 psi_of_rep(const MatrixRep2& rho) {
  Pseudorep2 d{rho.ring, rho.group, {}, {}};
  for (const auto& m : rho.images) {
    Vec det = mat2_det(rho.ring, m);
    if (!is_unit(rho.ring, det)) throw InputError("psi_of_rep: image is not invertible");
    d.trace.push_back(mat2_trace(rho.ring, m));
    d.det.push_back(det);
  }
  return d;
}

Pseudorep2 psi_of_characters(const FiniteRing& r, const MarkedGroup& g, const Character& chi1, const Character& chi2) {
  Pseudorep2 d{r, g, {}, {}};
  for (int x = 0; x < g.group.order(); ++x) {
    d.trace.push_back(r.add(chi1.values[x], chi2.values[x]));
    d.det.push_back(r.mul(chi1.values[x], chi2.values[x]));
  }
  return d;
}

Pseudorep2 base_change(const Pseudorep2& d, const RingHom& f) {
  Pseudorep2 out{f.dst(), d.group, {}, {}};
  for (const auto& v : d.trace) out.trace.push_back(f.apply(v));
  for (const auto& v : d.det) out.det.push_back(f.apply(v));
  return out;
}

bool same_pseudorep(const Pseudorep2& a, const Pseudorep2& b) {
  if (a.trace.size() != b.trace.size()) return false;
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    if (!a.ring.equal(a.trace[i], b.trace[i]) || !a.ring.equal(a.det[i], b.det[i])) return false;
  return true;
}

std::string ValidationReport::describe() const {
  if (ok) return "ok";
  std::string s = identity + " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i]);
  return s + ")";
}

ValidationReport validate_pseudorep(const Pseudorep2& d) {
  const FiniteRing& r = d.ring;
  const FiniteGroup& g = d.group.group;
  const int n = g.order();
  auto fail = [](const std::string& id, std::vector<int> w) { return ValidationReport{false, id, std::move(w)}; };
  if (static_cast<int>(d.trace.size()) != n || static_cast<int>(d.det.size()) != n)
    return fail("totality", {});
  const Int half = r.zmod().inverse(2);
  const auto& t = d.trace;
  const auto& dt = d.det;
  if (!r.equal(t[0], scalar(r, 2))) return fail("trace(1) = 2", {0});
  for (int a = 0; a < n; ++a)
    if (!is_unit(r, dt[a])) return fail("det is a unit", {a});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!r.equal(t[g.mul(a, b)], t[g.mul(b, a)])) return fail("centrality", {a, b});
  for (int a = 0; a < n; ++a) {
    Vec rhs = r.scale(half, r.sub(r.mul(t[a], t[a]), t[g.mul(a, a)]));
    if (!r.equal(dt[a], rhs)) return fail("det = (t^2 - t(g^2))/2", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vec lhs = r.mul(t[a], t[b]);
      Vec rhs = r.add(t[g.mul(a, b)], r.mul(dt[b], t[g.mul(a, g.inv(b))]));
      if (!r.equal(lhs, rhs)) return fail("trace identity", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!r.equal(dt[g.mul(a, b)], r.mul(dt[a], dt[b]))) return fail("det multiplicative", {a, b});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      Vec tab_ta = r.mul(t[a], t[b]);
      for (int c = 0; c < n; ++c) {
        Vec s = r.mul(tab_ta, t[c]);
        s = r.sub(s, r.mul(t[ab], t[c]));
        s = r.sub(s, r.mul(t[g.mul(b, c)], t[a]));
        s = r.sub(s, r.mul(t[g.mul(a, c)], t[b]));
        s = r.add(s, t[g.mul(ab, c)]);
        s = r.add(s, t[g.mul(g.mul(a, c), b)]);
        if (!r.is_zero(s)) return fail("pseudocharacter identity", {a, b, c});
      }
    }
  return {};
}

Vec trace_on_algebra(const Pseudorep2& d, const GroupAlgebra& ga, const Vec& x) {
  const FiniteRing& r = d.ring;
  Vec s = r.zero();
  for (int g = 0; g < ga.group.order(); ++g) s = r.add(s, r.mul(ga.coefficient(x, g), d.trace[g]));
  return s;
}

Mat trace_matrix(const Pseudorep2& d, const GroupAlgebra& ga) {
  const FiniteRing& r = d.ring;
  Mat out;
  for (int g = 0; g < ga.group.order(); ++g)
    for (int i = 0; i < r.dim(); ++i) out.push_back(r.mul_basis_left(i, d.trace[g]));
  return out;
}

CharPoly char_poly_at(const Pseudorep2& d, const GroupAlgebra& ga, const Vec& x) {
  const FiniteRing& r = d.ring;
  Vec tx = trace_on_algebra(d, ga, x);
  Vec tx2 = trace_on_algebra(d, ga, ga.algebra.alg.mul(x, x));
  Vec dx = r.scale(r.zmod().inverse(2), r.sub(r.mul(tx, tx), tx2));
  return {tx, dx};
}

namespace {

Vec apply_trace(const FiniteRing& r, const Mat& tm, const Vec& x) {
  const Zmod& z = r.zmod();
  Vec s(r.dim(), 0);
  for (std::size_t i = 0; i < tm.size(); ++i) {
    const Int xi = z.reduce(x[i]);
    if (xi == 0) continue;
    for (int l = 0; l < r.dim(); ++l) s[l] = (s[l] + xi * tm[i][l]) % z.modulus();
  }
  return r.reduce(s);
}

}  // namespace

RowSpan kernel_of(const Pseudorep2& d, const GroupAlgebra& ga) {
  const FiniteRing& r = d.ring;
  const Algebra& e = ga.algebra.alg;
  const int n = e.dim(), na = r.dim();
  Mat tm = trace_matrix(d, ga);
  Mat images;
  for (int u = 0; u < n; ++u) {
    Vec row;
    row.reserve(static_cast<std::size_t>(n) * na);
    for (int j = 0; j < n; ++j) {
      Vec t = apply_trace(r, tm, e.table_entry(u, j));
      row.insert(row.end(), t.begin(), t.end());
    }
    images.push_back(row);
  }
  Mat rel;
  for (int j = 0; j < n; ++j)
    for (const auto& rr : r.relations().rows()) {
      Vec v(static_cast<std::size_t>(n) * na, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(j) * na);
      rel.push_back(v);
    }
  return kernel_mod(r.zmod(), images, rel, n * na).plus(e.relations());
}

ValidationReport validate_induced_law(const Pseudorep2& d, const GroupAlgebra& ga, const RowSpan& kernel,
                                      std::uint64_t seed, int samples) {
  const FiniteRing& r = d.ring;
  Algebra q = ga.algebra.alg.with_relations(kernel);
  const int n = q.dim();
  Mat tm = trace_matrix(d, ga);
  const Int half = r.zmod().inverse(2);
  auto tr = [&](const Vec& x) { return apply_trace(r, tm, x); };
  auto dt = [&](const Vec& x) { return r.scale(half, r.sub(r.mul(tr(x), tr(x)), tr(q.mul(x, x)))); };
  auto fail = [](const std::string& id, std::vector<int> w) { return ValidationReport{false, id, std::move(w)}; };
  for (std::size_t i = 0; i < kernel.rows().size(); ++i) {
    const Vec& x = kernel.rows()[i];
    if (!r.is_zero(tr(x))) return fail("trace vanishes on kernel", {static_cast<int>(i)});
    for (int j = 0; j < n; ++j) {
      Vec xy = ga.algebra.alg.mul_basis_right(x, j);
      Vec dxy = r.scale(half, r.sub(r.mul(tr(xy), tr(xy)), tr(ga.algebra.alg.mul(xy, xy))));
      if (!r.is_zero(dxy)) return fail("det vanishes on kernel", {static_cast<int>(i), j});
    }
  }
  if (!r.equal(tr(q.one()), scalar(r, 2))) return fail("trace(1) = 2", {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!r.equal(tr(q.table_entry(i, j)), tr(q.table_entry(j, i)))) return fail("centrality", {i, j});
      Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
      if (!r.equal(dt(q.table_entry(i, j)), r.mul(dt(ei), dt(ej)))) return fail("det multiplicative", {i, j});
    }
  Rng rng(seed);
  const Int mod = r.zmod().modulus();
  for (int s = 0; s < samples; ++s) {
    Vec x(n), y(n);
    for (int i = 0; i < n; ++i) x[i] = rng.below(mod);
    for (int i = 0; i < n; ++i) y[i] = rng.below(mod);
    if (!r.equal(dt(q.mul(x, y)), r.mul(dt(x), dt(y)))) return fail("det multiplicative on sample", {s});
    if (!r.equal(tr(q.mul(x, y)), tr(q.mul(y, x)))) return fail("centrality on sample", {s});
  }
  return {};
}

ResidualSplit residual_split(const Pseudorep2& d) {
  const FiniteRing& r = d.ring;
  const FiniteGroup& g = d.group.group;
  LocalInfo info = local_info(r);
  const FiniteRing& k = info.residue;
  std::vector<Vec> field = enumerate_elements(k, 1u << 16);
  ResidualSplit out;
  std::vector<Vec> tbar, dbar;
  for (int x = 0; x < g.order(); ++x) {
    tbar.push_back(k.reduce(d.trace[x]));
    dbar.push_back(k.reduce(d.det[x]));
  }
  auto is_root = [&](int x, const Vec& l) {
    return k.is_zero(k.add(k.sub(k.mul(l, l), k.mul(tbar[x], l)), dbar[x]));
  };
  for (int x = 0; x < g.order(); ++x) {
    bool any = false;
    for (const auto& l : field)
      if (is_root(x, l)) {
        any = true;
        break;
      }
    if (!any) {
      out.reason = "characteristic polynomial at " + g.name(x) + " is irreducible over the residue field";
      return out;
    }
  }
  const auto& gens = g.generators();
  std::vector<std::vector<Vec>> options;
  for (int s : gens) {
    std::vector<Vec> roots;
    for (const auto& l : field)
      if (is_root(s, l)) roots.push_back(l);
    options.push_back(roots);
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<Vec> vals;
    for (std::size_t s = 0; s < gens.size(); ++s) vals.push_back(options[s][idx[s]]);
    Character c1 = character_from_generators(k, g, "chi1", vals);
    bool good = true;
    for (int x = 0; x < g.order() && good; ++x) good = is_root(x, c1.values[x]);
    if (good) {
      Character c2{"chi2", {}};
      for (int x = 0; x < g.order(); ++x) c2.values.push_back(k.sub(tbar[x], c1.values[x]));
      if (character_check(k, g, c1).ok && character_check(k, g, c2).ok) {
        out.supported = true;
        out.chi1 = c1.values;
        out.chi2 = c2.values;
        out.multiplicity_free = false;
        for (int x = 0; x < g.order(); ++x)
          if (!k.equal(c1.values[x], c2.values[x])) out.multiplicity_free = true;
        return out;
      }
    }
    std::size_t s = 0;
    while (s < gens.size() && ++idx[s] == options[s].size()) idx[s++] = 0;
    if (s == gens.size()) break;
  }
  out.reason = "residual pseudorepresentation is not a sum of two characters";
  return out;
}

}  // namespace pseudomod
