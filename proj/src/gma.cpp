#include "pseudomod/gma.hpp"

#include <algorithm>

namespace pseudomod {

namespace {

Vec linear_combination(const Zmod& z, const Mat& rows, const Vec& coeffs, int ncols) {
  Vec s(static_cast<std::size_t>(ncols), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Int c = z.reduce(coeffs[i]);
    if (c == 0) continue;
    for (int l = 0; l < ncols; ++l) s[l] = z.add(s[l], z.mul(c, rows[i][l]));
  }
  return s;
}

Mat blocks_of(const RowSpan& rel, int blocks, int width) {
  Mat out;
  for (int b = 0; b < blocks; ++b)
    for (const auto& rr : rel.rows()) {
      Vec v(static_cast<std::size_t>(blocks) * width, 0);
      std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(b) * width);
      out.push_back(v);
    }
  return out;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

Vec ChAlgebra::embed(const Vec& a) const { return alg.reduce(linear_combination(alg.zmod(), structure, a, alg.dim())); }

Vec ChAlgebra::trace(const Vec& x) const {
  return base.reduce(linear_combination(base.zmod(), trace_map, x, base.dim()));
}

Vec ChAlgebra::det(const Vec& x) const {
  Vec t = trace(x);
  Vec t2 = trace(alg.mul(x, x));
  return base.scale(base.zmod().inverse(2), base.sub(base.mul(t, t), t2));
}

Vec ChAlgebra::ch_residual(const Vec& x) const {
  Vec x2 = alg.mul(x, x);
  Vec tx = alg.mul(embed(trace(x)), x);
  return alg.add(alg.sub(x2, tx), embed(det(x)));
}

ChAlgebra ChAlgebra::quotient(const RowSpan& ideal, const RowSpan& base_ideal) const {
  ChAlgebra q{base.with_relations(base_ideal), alg.with_relations(ideal), structure, trace_map, {}};
  for (const auto& g : group_images) q.group_images.push_back(q.alg.reduce(g));
  return q;
}

bool structure_map_injective(const ChAlgebra& e) {
  RowSpan ker = kernel_mod(e.alg.zmod(), e.structure, e.alg.relations().rows(), e.alg.dim());
  return e.base.relations().contains(ker);
}

std::string check_ch_algebra(const ChAlgebra& e, std::uint64_t seed, int samples) {
  const Algebra& a = e.alg;
  const int n = a.dim();
  if (e.alg.is_zero_ring()) return "";
  for (const auto& r : a.relations().rows())
    if (!e.base.is_zero(e.trace(r))) return "trace not defined on the quotient";
  if (!e.base.equal(e.trace(a.one()), scalar(e.base, 2))) return "trace(1) != 2";
  if (!structure_map_injective(e)) return "structure map not injective";
  for (int l = 0; l < e.base.dim(); ++l) {
    Vec s = a.reduce(e.structure[l]);
    for (int j = 0; j < n; ++j)
      if (!a.equal(a.mul_basis_right(s, j), a.mul_basis_left(j, s))) return "base not central";
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!e.base.equal(e.trace(a.table_entry(i, j)), e.trace(a.table_entry(j, i))))
        return "trace not central at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
  for (int i = 0; i < n; ++i)
    if (!a.is_zero(e.ch_residual(unit_vec(n, i)))) return "CH identity fails at basis " + std::to_string(i);
  Rng rng(seed);
  const Int mod = a.zmod().modulus();
  for (int s = 0; s < samples; ++s) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.below(mod);
    if (!a.is_zero(e.ch_residual(x))) return "CH identity fails at sample " + vec_str(x);
  }
  return "";
}

ChQuotient ch_quotient(const GroupAlgebra& ga, const Pseudorep2& d) {
  ValidationReport rep = validate_pseudorep(d);
  if (!rep.ok) throw InputError("ch_quotient: invalid pseudorepresentation: " + rep.describe());
  const Algebra& e = ga.algebra.alg;
  const FiniteRing& r = d.ring;
  const FiniteGroup& g = ga.group;
  ChAlgebra pre{r, e, ga.algebra.structure, trace_matrix(d, ga), ga.elements};
  Mat gens;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x; y < g.order(); ++y) {
      const Vec& gx = ga.elements[x];
      const Vec& gy = ga.elements[y];
      Vec v = e.add(ga.elements[g.mul(x, y)], ga.elements[g.mul(y, x)]);
      v = e.sub(v, e.mul(pre.embed(d.trace[x]), gy));
      v = e.sub(v, e.mul(pre.embed(d.trace[y]), gx));
      Vec c = r.sub(r.mul(d.trace[x], d.trace[y]), d.trace[g.mul(x, y)]);
      v = e.add(v, pre.embed(c));
      if (!e.is_zero(v)) gens.push_back(v);
    }
  RowSpan ideal = ideal_closure(e, gens);
  for (const auto& row : ideal.rows())
    if (!r.is_zero(pre.trace(row))) throw InvariantFailure("ch_quotient: trace does not vanish on the CH ideal");
  return {pre.quotient(ideal, r.relations()), ideal};
}

ChAlgebra synthetic_gma_algebra(const FiniteRing& a, const Vec& mu) {
  const int na = a.dim(), n = 4 * na;
  const Zmod& z = a.zmod();
  // blocks: 0 = (1,1), 1 = (1,2), 2 = (2,1), 3 = (2,2)
  auto row_of = [](int q) { return q / 2; };
  auto col_of = [](int q) { return q % 2; };
  Mat table(static_cast<std::size_t>(n) * n);
  for (int q1 = 0; q1 < 4; ++q1)
    for (int i = 0; i < na; ++i)
      for (int q2 = 0; q2 < 4; ++q2)
        for (int j = 0; j < na; ++j) {
          Vec v(n, 0);
          if (col_of(q1) == row_of(q2)) {
            Vec c = a.table_entry(i, j);
            if ((q1 == 1 && q2 == 2) || (q1 == 2 && q2 == 1)) c = a.mul(c, mu);
            const int q = 2 * row_of(q1) + col_of(q2);
            for (int l = 0; l < na; ++l) v[q * na + l] = z.reduce(c[l]);
          }
          table[static_cast<std::size_t>(q1 * na + i) * n + (q2 * na + j)] = std::move(v);
        }
  Vec one(n, 0);
  for (int l = 0; l < na; ++l) {
    one[l] = a.one()[l];
    one[3 * na + l] = a.one()[l];
  }
  Algebra alg(z, n, blocks_of(a.relations(), 4, na), std::move(table), one);
  Mat structure, trace_map;
  for (int l = 0; l < na; ++l) {
    Vec v(n, 0);
    v[l] = 1;
    v[3 * na + l] = 1;
    structure.push_back(v);
  }
  for (int q = 0; q < 4; ++q)
    for (int i = 0; i < na; ++i) trace_map.push_back(q == 0 || q == 3 ? unit_vec(na, i) : zero_vec(na));
  return ChAlgebra{a, alg, structure, trace_map, {}};
}

Vec synthetic_element(const ChAlgebra& e, const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
  const int na = e.base.dim();
  Vec v(static_cast<std::size_t>(4) * na, 0);
  const Vec* parts[4] = {&a, &b, &c, &d};
  for (int q = 0; q < 4; ++q)
    for (int l = 0; l < na; ++l) v[q * na + l] = (*parts[q])[l];
  return e.alg.reduce(v);
}

Vec synthetic_e11(const ChAlgebra& e) {
  const FiniteRing& a = e.base;
  return synthetic_element(e, a.one(), a.zero(), a.zero(), a.zero());
}

Vec newton_idempotent(const Algebra& alg, const Vec& x, int max_iterations, int* iterations) {
  Vec e = alg.reduce(x);
  int it = 0;
  while (true) {
    Vec e2 = alg.mul(e, e);
    if (alg.equal(e2, e)) break;
    if (it >= max_iterations) throw InvariantFailure("newton_idempotent: no convergence");
    Vec e3 = alg.mul(e2, e);
    e = alg.sub(alg.scale(3, e2), alg.scale(2, e3));
    ++it;
  }
  if (iterations) *iterations = it;
  return e;
}

int trace_radical_class(const ChAlgebra& e) {
  const Algebra& a = e.alg;
  const int n = a.dim(), nb = e.base.dim();
  LocalInfo info = local_info(e.base);
  Mat images;
  for (int i = 0; i < n; ++i) {
    Vec row;
    row.reserve(static_cast<std::size_t>(n) * nb);
    for (int j = 0; j < n; ++j) {
      Vec t = e.trace(a.table_entry(i, j));
      row.insert(row.end(), t.begin(), t.end());
    }
    images.push_back(row);
  }
  RowSpan nrad =
      kernel_mod(a.zmod(), images, blocks_of(info.maximal, n, nb), n * nb).plus(a.relations());
  RowSpan pw = nrad;
  int c = 1;
  while (!is_zero_ideal(a, pw)) {
    if (++c > 64) throw InvariantFailure("trace radical is not nilpotent");
    pw = ideal_product(a, pw, nrad);
  }
  return c;
}

IdempotentLift lift_idempotents_from_element(const ChAlgebra& e, const Vec& x, const Vec& lambda1,
                                             const Vec& lambda2) {
  const Algebra& a = e.alg;
  const FiniteRing& r = e.base;
  auto inv = inverse(r, r.sub(lambda1, lambda2));
  if (!inv) throw InputError("lift_idempotents: residual roots are not distinct");
  IdempotentLift out;
  out.nilpotency_class = trace_radical_class(e);
  Vec y1 = a.mul(a.sub(x, e.embed(lambda2)), e.embed(*inv));
  Vec y2 = a.mul(a.sub(x, e.embed(lambda1)), e.embed(r.neg(*inv)));
  const int cap = out.nilpotency_class + 1;
  out.e1 = newton_idempotent(a, y1, cap, &out.iterations);
  int it2 = 0;
  Vec e2p = newton_idempotent(a, y2, cap, &it2);
  Vec f = a.sub(a.one(), out.e1);
  out.e2 = newton_idempotent(a, a.mul(a.mul(f, e2p), f), cap, &it2);
  if (!a.equal(out.e2, f)) throw InvariantFailure("lift_idempotents: orthogonalized idempotent differs from 1 - e1");
  if (a.is_zero(out.e1) || a.is_zero(out.e2)) throw InvariantFailure("lift_idempotents: degenerate idempotent");
  if (out.iterations > out.nilpotency_class)
    throw InvariantFailure("lift_idempotents: iteration count exceeds nilpotency class");
  return out;
}

IdempotentLift lift_idempotents(const ChAlgebra& e, const std::vector<Vec>& chi1, const std::vector<Vec>& chi2) {
  LocalInfo info = local_info(e.base);
  for (std::size_t g = 0; g < chi1.size() && g < e.group_images.size(); ++g)
    if (!info.residue.equal(chi1[g], chi2[g])) return lift_idempotents_from_element(e, e.group_images[g], chi1[g], chi2[g]);
  throw InputError("lift_idempotents: residual split is not multiplicity free");
}

std::optional<SplittingElement> find_splitting_element(const ChAlgebra& e) {
  LocalInfo info = local_info(e.base);
  const FiniteRing& k = info.residue;
  std::vector<Vec> field = enumerate_elements(k, 1u << 16);
  for (std::size_t g = 0; g < e.group_images.size(); ++g) {
    Vec t = k.reduce(e.trace(e.group_images[g]));
    Vec d = k.reduce(e.det(e.group_images[g]));
    std::vector<Vec> roots;
    for (const auto& l : field)
      if (k.is_zero(k.add(k.sub(k.mul(l, l), k.mul(t, l)), d))) roots.push_back(l);
    if (roots.size() == 2) return SplittingElement{static_cast<int>(g), roots[0], roots[1]};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- GMA

Vec GmaAlgebra::corner_coordinate(int i, const Vec& corner_element) const {
  auto c = solvers[i].solve(ch.alg.reduce(corner_element));
  if (!c) throw InvariantFailure("corner_coordinate: element is not in the corner");
  return ch.base.reduce(*c);
}

Vec GmaAlgebra::piece(int i, int j, const Vec& x) const {
  const Vec& ei = i == 0 ? e1 : e2;
  const Vec& ej = j == 0 ? e1 : e2;
  return ch.alg.mul(ch.alg.mul(ei, x), ej);
}

namespace {

// Minimal generators of an A-submodule `span` of E (A local), greedy modulo m*span.
Mat module_min_generators(const ChAlgebra& e, const LocalInfo& info, const RowSpan& span) {
  const Algebra& a = e.alg;
  Mat mgens;
  for (const auto& mrow : info.maximal.rows())
    for (const auto& row : span.rows()) mgens.push_back(a.mul(e.embed(mrow), row));
  RowSpan cur = a.relations().plus(mgens);
  Mat gens;
  for (const auto& row : span.rows()) {
    if (cur == span) break;
    if (cur.contains(row)) continue;
    Vec g = a.reduce(row);
    Mat more;
    for (int l = 0; l < e.base.dim(); ++l) more.push_back(a.mul(a.reduce(e.structure[l]), g));
    cur = cur.plus(more);
    gens.push_back(g);
  }
  if (cur != span) throw InvariantFailure("module generators do not span");
  return gens;
}

LinearSolver module_solver(const ChAlgebra& e, const Mat& gens) {
  Mat rows;
  for (const auto& g : gens)
    for (int l = 0; l < e.base.dim(); ++l) rows.push_back(e.alg.mul(e.alg.reduce(e.structure[l]), g));
  return LinearSolver(e.alg.zmod(), rows, e.alg.relations().rows(), e.alg.dim());
}

}  // namespace

GmaAlgebra gma_decompose(const ChAlgebra& e, const Vec& e1, const Vec& e2) {
  const Algebra& a = e.alg;
  const FiniteRing& r = e.base;
  const int n = a.dim();
  if (!a.equal(a.mul(e1, e1), e1) || !a.equal(a.mul(e2, e2), e2) || !a.is_zero(a.mul(e1, e2)) ||
      !a.is_zero(a.mul(e2, e1)) || !a.equal(a.add(e1, e2), a.one()))
    throw InvariantFailure("gma_decompose: idempotents are not orthogonal with sum 1");
  GmaAlgebra g{e, a.reduce(e1), a.reduce(e2), {}, {}, {}, {}};
  for (int i = 0; i < 2; ++i) {
    const Vec& ei = i == 0 ? g.e1 : g.e2;
    Mat corner, images;
    for (int j = 0; j < n; ++j) corner.push_back(a.mul(a.mul_basis_right(ei, j), ei));
    for (int l = 0; l < r.dim(); ++l) images.push_back(a.mul(a.reduce(e.structure[l]), ei));
    LinearSolver s(a.zmod(), images, a.relations().rows(), n);
    if (additive_span(a, corner) != s.image() || !r.relations().contains(s.kernel()))
      throw InvariantFailure("gma_decompose: diagonal corner is not free of rank 1");
    g.solvers.push_back(s);
  }
  LocalInfo info = local_info(r);
  Mat bs, cs;
  for (int j = 0; j < n; ++j) {
    Vec bj = unit_vec(n, j);
    bs.push_back(g.piece(0, 1, bj));
    cs.push_back(g.piece(1, 0, bj));
  }
  g.b_gens = module_min_generators(e, info, additive_span(a, bs));
  g.c_gens = module_min_generators(e, info, additive_span(a, cs));
  g.solvers.push_back(module_solver(e, g.b_gens));
  g.solvers.push_back(module_solver(e, g.c_gens));
  for (const auto& b : g.b_gens) {
    std::vector<Vec> row;
    for (const auto& c : g.c_gens) {
      Vec m1 = g.corner_coordinate(0, a.mul(b, c));
      Vec m2 = g.corner_coordinate(1, a.mul(c, b));
      if (!r.equal(m1, m2)) throw InvariantFailure("gma_decompose: pairing is not symmetric");
      row.push_back(m1);
    }
    g.m.push_back(row);
  }
  return g;
}

std::string check_gma(const GmaAlgebra& g) {
  const Algebra& a = g.ch.alg;
  const FiniteRing& r = g.ch.base;
  if (!a.equal(a.mul(g.e1, g.e1), g.e1) || !a.equal(a.mul(g.e2, g.e2), g.e2)) return "idempotents";
  if (!a.is_zero(a.mul(g.e1, g.e2)) || !a.is_zero(a.mul(g.e2, g.e1))) return "orthogonality";
  if (!a.equal(a.add(g.e1, g.e2), a.one())) return "sum of idempotents";
  for (std::size_t i = 0; i < g.b_gens.size(); ++i)
    for (std::size_t j = 0; j < g.c_gens.size(); ++j)
      if (!r.equal(g.corner_coordinate(1, a.mul(g.c_gens[j], g.b_gens[i])), g.m[i][j])) return "pairing symmetry";
  for (int i = 0; i < a.dim(); ++i) {
    Vec x = unit_vec(a.dim(), i);
    Coordinates c = coordinates(g, x);
    Vec bc = g.corner_coordinate(0, a.mul(c.b, c.c));
    if (!r.equal(g.ch.trace(x), r.add(c.a, c.d))) return "trace at basis " + std::to_string(i);
    if (!r.equal(g.ch.det(x), r.sub(r.mul(c.a, c.d), bc))) return "det at basis " + std::to_string(i);
    if (!a.equal(reassemble(g, c), x)) return "reassembly at basis " + std::to_string(i);
  }
  return "";
}

Coordinates coordinates(const GmaAlgebra& g, const Vec& x) {
  Coordinates c;
  c.a = g.corner_coordinate(0, g.piece(0, 0, x));
  c.b = g.piece(0, 1, x);
  c.c = g.piece(1, 0, x);
  c.d = g.corner_coordinate(1, g.piece(1, 1, x));
  auto bco = g.solvers[2].solve(c.b);
  auto cco = g.solvers[3].solve(c.c);
  if (!bco || !cco) throw InvariantFailure("coordinates: off-diagonal piece outside the generated module");
  c.b_coeffs = *bco;
  c.c_coeffs = *cco;
  return c;
}

Vec reassemble(const GmaAlgebra& g, const Coordinates& c) {
  const Algebra& a = g.ch.alg;
  Vec v = a.add(a.mul(g.ch.embed(c.a), g.e1), a.mul(g.ch.embed(c.d), g.e2));
  return a.add(v, a.add(c.b, c.c));
}

std::vector<Coordinates> coordinate_maps(const GmaAlgebra& g) {
  std::vector<Coordinates> out;
  for (const auto& x : g.ch.group_images) out.push_back(coordinates(g, x));
  return out;
}

// ---------------------------------------------------------------- reducibility

ReducibilityResult reducibility_ideal(const GmaAlgebra& g) {
  const FiniteRing& r = g.ch.base;
  Mat gens;
  for (const auto& row : g.m)
    for (const auto& v : row) gens.push_back(v);
  RowSpan j = ideal_closure(r, gens);
  ReducibilityResult out{j, r.with_relations(j), {}, {}, false, ""};
  const Algebra& a = g.ch.alg;
  if (!g.ch.group_images.empty()) {
    for (const auto& x : g.ch.group_images) {
      out.chi1.push_back(out.quotient.reduce(g.corner_coordinate(0, g.piece(0, 0, x))));
      out.chi2.push_back(out.quotient.reduce(g.corner_coordinate(1, g.piece(1, 1, x))));
    }
  } else {
    for (int i = 0; i < a.dim(); ++i) {
      Vec x = unit_vec(a.dim(), i);
      out.chi1.push_back(out.quotient.reduce(g.corner_coordinate(0, g.piece(0, 0, x))));
      out.chi2.push_back(out.quotient.reduce(g.corner_coordinate(1, g.piece(1, 1, x))));
    }
  }
  out.certificate_failure = verify_reducibility_certificate(g, out);
  out.certificate_ok = out.certificate_failure.empty();
  return out;
}

std::string verify_reducibility_certificate(const GmaAlgebra& g, const ReducibilityResult& res) {
  const FiniteRing& q = res.quotient;
  const Algebra& a = g.ch.alg;
  if (q.is_zero_ring()) return "";
  auto chi_at = [&](int i, const Vec& x) {
    return q.reduce(g.corner_coordinate(i, g.piece(i, i, x)));
  };
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    Vec x = unit_vec(n, i);
    Vec c1 = chi_at(0, x), c2 = chi_at(1, x);
    if (!q.equal(q.reduce(g.ch.trace(x)), q.add(c1, c2))) return "trace not reproduced at basis " + std::to_string(i);
    if (!q.equal(q.reduce(g.ch.det(x)), q.mul(c1, c2))) return "det not reproduced at basis " + std::to_string(i);
    for (int j = 0; j < n; ++j) {
      Vec y = unit_vec(n, j);
      Vec xy = a.table_entry(i, j);
      for (int s = 0; s < 2; ++s)
        if (!q.equal(chi_at(s, xy), q.mul(chi_at(s, x), chi_at(s, y))))
          return "character " + std::to_string(s + 1) + " not multiplicative at basis pair (" + std::to_string(i) +
                 "," + std::to_string(j) + ")";
    }
  }
  const auto& imgs = g.ch.group_images;
  if (!imgs.empty()) {
    if (res.chi1.size() != imgs.size()) return "certificate has wrong length";
    for (std::size_t x = 0; x < imgs.size(); ++x) {
      if (!q.equal(res.chi1[x], chi_at(0, imgs[x])) || !q.equal(res.chi2[x], chi_at(1, imgs[x])))
        return "certificate values differ from the diagonal coordinates";
      if (!q.equal(q.reduce(g.ch.trace(imgs[x])), q.add(res.chi1[x], res.chi2[x])))
        return "trace not reproduced on group element " + std::to_string(x);
      if (!q.equal(q.reduce(g.ch.det(imgs[x])), q.mul(res.chi1[x], res.chi2[x])))
        return "det not reproduced on group element " + std::to_string(x);
    }
  }
  return "";
}

bool splits_over(const FiniteRing& a, const RowSpan& k, const FiniteGroup& grp, const std::vector<Vec>& trace,
                 const std::vector<Vec>& det, std::size_t budget) {
  FiniteRing q = a.with_relations(k);
  if (q.is_zero_ring()) return true;
  std::vector<Vec> elems = enumerate_elements(q, budget);
  auto is_root = [&](int x, const Vec& l) {
    return q.is_zero(q.add(q.sub(q.mul(l, l), q.mul(trace[x], l)), det[x]));
  };
  const auto& gens = grp.generators();
  std::vector<std::vector<Vec>> options;
  std::size_t total = 1;
  for (int s : gens) {
    std::vector<Vec> roots;
    for (const auto& l : elems)
      if (is_root(s, l)) roots.push_back(l);
    if (roots.empty()) return false;
    if (total > budget / roots.size()) throw BudgetExceeded("splits_over: too many root assignments");
    total *= roots.size();
    options.push_back(roots);
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<Vec> vals;
    for (std::size_t s = 0; s < gens.size(); ++s) vals.push_back(options[s][idx[s]]);
    Character c1 = character_from_generators(q, grp, "chi1", vals);
    bool good = true;
    for (int x = 0; x < grp.order() && good; ++x) good = is_root(x, c1.values[x]);
    if (good) {
      Character c2{"chi2", {}};
      for (int x = 0; x < grp.order(); ++x) c2.values.push_back(q.sub(trace[x], c1.values[x]));
      if (character_check(q, grp, c1).ok && character_check(q, grp, c2).ok) return true;
    }
    std::size_t s = 0;
    while (s < gens.size() && ++idx[s] == options[s].size()) idx[s++] = 0;
    if (s == gens.size()) break;
  }
  return false;
}

std::string verify_reducibility_minimality(const GmaAlgebra& g, const ReducibilityResult& res,
                                           const FiniteGroup& grp, std::size_t budget) {
  const FiniteRing& r = g.ch.base;
  if (is_zero_ideal(r, res.ideal)) return "";
  std::vector<Vec> tr, dt;
  for (const auto& x : g.ch.group_images) {
    tr.push_back(g.ch.trace(x));
    dt.push_back(g.ch.det(x));
  }
  if (tr.empty()) return "no group images";
  std::vector<RowSpan> subs = is_unit_ideal(r, res.ideal) ? std::vector<RowSpan>{local_info(r).maximal}
                                                          : maximal_subideals(r, res.ideal);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (splits_over(r, subs[i], grp, tr, dt, budget))
      return "law splits over a proper sub-ideal (index " + std::to_string(i) + ")";
  return "";
}

}  // namespace pseudomod
