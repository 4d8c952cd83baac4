#include "pseudomod/ordinary.hpp"

#include <algorithm>

namespace pseudomod {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ordinary:
      return "ordinary";
    case Verdict::NotOrdinary:
      return "not-ordinary";
    case Verdict::Unsupported:
      return "unsupported";
  }
  return "unsupported";
}

std::string constraint_name(TangentConstraint c) {
  switch (c) {
    case TangentConstraint::All:
      return "all";
    case TangentConstraint::Ordinary:
      return "ordinary";
    case TangentConstraint::ReducibleOrdinary:
      return "reducible-ordinary";
  }
  return "all";
}

OrdinaryWitness is_ordinary_rep(const OrdinaryContext& ctx) {
  const GmaAlgebra& g = ctx.gma;
  const FiniteRing& r = g.ch.base;
  for (int x : ctx.group.dp)
    if (!g.ch.alg.is_zero(g.piece(0, 1, g.ch.group_images[x]))) return {false, x, "rho12"};
  for (int x : ctx.group.ip) {
    Vec a = g.corner_coordinate(0, g.piece(0, 0, g.ch.group_images[x]));
    if (!r.equal(r.mul(a, ctx.kappa.values[x]), r.one())) return {false, x, "rho11"};
  }
  return {};
}

OrdinaryQuotient ordinary_quotient(const OrdinaryContext& ctx, std::uint64_t seed) {
  const GmaAlgebra& g = ctx.gma;
  const ChAlgebra& e = g.ch;
  const Algebra& a = e.alg;
  const FiniteRing& r = e.base;
  std::vector<LabeledElement> gens;
  for (int x : ctx.group.dp) {
    Vec v = g.piece(0, 1, e.group_images[x]);
    if (!a.is_zero(v)) gens.push_back({"rho12(Dp)", x, v});
  }
  for (int x : ctx.group.ip) {
    Vec kinv = unit_inverse(r, ctx.kappa.values[x]);
    Vec v = a.sub(g.piece(0, 0, e.group_images[x]), a.mul(e.embed(kinv), g.e1));
    if (!a.is_zero(v)) gens.push_back({"rho11-kappa^-1(Ip)", x, v});
  }
  Mat gm;
  for (const auto& l : gens) gm.push_back(l.element);
  RowSpan j_star = ideal_closure(a, gm);

  std::vector<LabeledElement> base_gens;
  Mat tr_rows, all_rows;
  for (const auto& row : j_star.rows()) {
    Vec t = e.trace(row);
    if (!r.is_zero(t)) {
      base_gens.push_back({"Tr(J*)", -1, t});
      tr_rows.push_back(t);
    }
  }
  all_rows = tr_rows;
  for (const auto& row : j_star.rows()) {
    Vec d = e.det(row);
    if (!r.is_zero(d)) {
      base_gens.push_back({"D(J*)", -1, d});
      all_rows.push_back(d);
    }
  }
  RowSpan tr_ideal = ideal_closure(r, tr_rows);
  RowSpan j_base = ideal_closure(r, all_rows);

  Mat jm = j_star.rows();
  for (const auto& row : j_base.rows()) jm.push_back(e.embed(row));
  RowSpan j = ideal_closure(a, jm);

  OrdinaryQuotient out{j_star, gens, j_base, base_gens, j, e.quotient(j, j_base), false, "", "", false};
  out.collapsed = is_unit_ideal(r, j_base);
  if (out.collapsed) {
    if (is_unit_ideal(a, j_star))
      out.collapse_stage = "J*";
    else if (is_unit_ideal(r, tr_ideal))
      out.collapse_stage = "Tr(J*)";
    else
      out.collapse_stage = "D(J*)";
  }
  out.descent_failure = check_ch_algebra(out.e_ord, seed, 20);
  out.injective = out.collapsed || structure_map_injective(out.e_ord);
  return out;
}

ReducibleOrdinary reducible_ordinary_quotient(const OrdinaryContext& ctx, const OrdinaryQuotient& oq) {
  const GmaAlgebra& g = ctx.gma;
  const ChAlgebra& e = g.ch;
  const Algebra& a = e.alg;
  const FiniteRing& r = e.base;
  const auto& imgs = e.group_images;
  Mat bg = oq.j_base.rows(), cs;
  std::vector<Vec> b12, c21;
  for (const auto& x : imgs) {
    b12.push_back(g.piece(0, 1, x));
    c21.push_back(g.piece(1, 0, x));
  }
  for (const auto& b : b12) {
    if (a.is_zero(b)) continue;
    for (const auto& c : c21) {
      if (a.is_zero(c)) continue;
      Vec v = g.corner_coordinate(0, a.mul(b, c));
      if (!r.is_zero(v)) bg.push_back(v);
    }
  }
  RowSpan base_ideal = ideal_closure(r, bg);
  Mat jm = oq.j.rows();
  for (const auto& row : base_ideal.rows()) jm.push_back(e.embed(row));
  RowSpan j_red = ideal_closure(a, jm);
  ReducibleOrdinary out{j_red, base_ideal, e.quotient(j_red, base_ideal), {}, {}, "", false, false};
  const FiniteRing& q = out.e_red.base;
  for (const auto& x : imgs) {
    out.chi1.push_back(q.reduce(g.corner_coordinate(0, g.piece(0, 0, x))));
    out.chi2.push_back(q.reduce(g.corner_coordinate(1, g.piece(1, 1, x))));
  }
  if (!q.is_zero_ring()) {
    const FiniteGroup& grp = ctx.group.group;
    for (int x = 0; x < grp.order() && out.certificate_failure.empty(); ++x) {
      if (!q.equal(q.reduce(e.trace(imgs[x])), q.add(out.chi1[x], out.chi2[x])))
        out.certificate_failure = "trace not reproduced at " + grp.name(x);
      else if (!q.equal(q.reduce(e.det(imgs[x])), q.mul(out.chi1[x], out.chi2[x])))
        out.certificate_failure = "det not reproduced at " + grp.name(x);
      for (int y = 0; y < grp.order() && out.certificate_failure.empty(); ++y) {
        const int xy = grp.mul(x, y);
        if (!q.equal(out.chi1[xy], q.mul(out.chi1[x], out.chi1[y])) ||
            !q.equal(out.chi2[xy], q.mul(out.chi2[x], out.chi2[y])))
          out.certificate_failure = "split characters not multiplicative at (" + grp.name(x) + "," + grp.name(y) + ")";
      }
    }
  }
  if (oq.collapsed) {
    out.maps_onto_ord_quotient = true;
    out.equals_ord_quotient = (j_red == oq.j);
    return out;
  }
  GmaAlgebra gord = gma_decompose(oq.e_ord, oq.e_ord.alg.reduce(g.e1), oq.e_ord.alg.reduce(g.e2));
  ReducibilityResult red = reducibility_ideal(gord);
  Mat tm = oq.j.rows();
  for (const auto& row : red.ideal.rows()) tm.push_back(e.embed(row));
  RowSpan target = ideal_closure(a, tm);
  out.maps_onto_ord_quotient = target.contains(j_red);
  out.equals_ord_quotient = (target == j_red);
  return out;
}

std::optional<E1Label> label_e1(const Pseudorep2& d, const ResidualSplit& split, const Character& kappa,
                                std::optional<int> explicit_index) {
  if (explicit_index) {
    if (*explicit_index != 0 && *explicit_index != 1) throw InputError("e1 label must be 0 or 1");
    return E1Label{*explicit_index, "explicit"};
  }
  const FiniteRing& r = d.ring;
  LocalInfo info = local_info(r);
  const FiniteRing& k = info.residue;
  const FiniteGroup& g = d.group.group;
  std::vector<Vec> kinv;
  for (const auto& v : kappa.values) kinv.push_back(k.reduce(unit_inverse(r, v)));
  auto matches = [&](const std::vector<Vec>& chi, const std::vector<int>& elems) {
    for (int x : elems)
      if (!k.equal(chi[x], kinv[x])) return false;
    return true;
  };
  std::vector<int> all(g.order());
  for (int x = 0; x < g.order(); ++x) all[x] = x;
  const bool g1 = matches(split.chi1, all), g2 = matches(split.chi2, all);
  if (g1 != g2) return E1Label{g1 ? 0 : 1, "kappa on G"};
  const bool i1 = matches(split.chi1, d.group.ip), i2 = matches(split.chi2, d.group.ip);
  if (i1 && i2) throw InputError("e1 label is ambiguous: both residual characters match kappa^-1 on Ip");
  if (!i1 && !i2) return std::nullopt;
  return E1Label{i1 ? 0 : 1, "kappa on Ip"};
}

OrdinaryContext build_context(const Pseudorep2& d, const Character& kappa, const ResidualSplit& split,
                              const E1Label& label) {
  GroupAlgebra ga = group_algebra(d.ring, d.group.group);
  ChQuotient chq = ch_quotient(ga, d);
  const ChAlgebra& e = chq.ch;
  IdempotentLift lift;
  if (split.supported) {
    lift = label.index == 1 ? lift_idempotents(e, split.chi2, split.chi1) : lift_idempotents(e, split.chi1, split.chi2);
  } else {
    auto se = find_splitting_element(e);
    if (!se) throw InputError("no group element has distinct residual eigenvalues");
    const Vec& x = e.group_images[se->group_element];
    lift = label.index == 1 ? lift_idempotents_from_element(e, x, se->lambda2, se->lambda1)
                            : lift_idempotents_from_element(e, x, se->lambda1, se->lambda2);
  }
  return OrdinaryContext{d.group, kappa, gma_decompose(e, lift.e1, lift.e2)};
}

OrdinaryDecision is_ordinary_psrep(const Pseudorep2& d, const Character& kappa, std::optional<int> explicit_index) {
  ValidationReport rep = validate_pseudorep(d);
  if (!rep.ok) throw InputError("is_ordinary_psrep: invalid pseudorepresentation: " + rep.describe());
  OrdinaryDecision out;
  ResidualSplit split = residual_split(d);
  if (!split.supported) {
    out.reason = split.reason;
    return out;
  }
  if (!split.multiplicity_free) {
    out.reason = "residual characters coincide";
    return out;
  }
  auto label = label_e1(d, split, kappa, explicit_index);
  if (!label) {
    out.verdict = Verdict::NotOrdinary;
    out.reason = "no residual character equals kappa^-1 on Ip";
    return out;
  }
  out.label = *label;
  out.context = build_context(d, kappa, split, *label);
  out.quotient = ordinary_quotient(*out.context);
  const bool zero = is_zero_ideal(d.ring, out.quotient->j_base);
  out.verdict = zero ? Verdict::Ordinary : Verdict::NotOrdinary;
  out.reason = zero ? "ordinary ideal of the base vanishes" : "ordinary ideal of the base is nonzero";
  return out;
}

std::vector<Vec> identity_residuals(const Pseudorep2& d) {
  const FiniteRing& r = d.ring;
  const FiniteGroup& g = d.group.group;
  const int n = g.order();
  const auto& t = d.trace;
  const auto& dt = d.det;
  const Int half = r.zmod().inverse(2);
  std::vector<Vec> out;
  out.push_back(r.sub(t[0], scalar(r, 2)));
  for (int a = 0; a < n; ++a)
    out.push_back(r.sub(dt[a], r.scale(half, r.sub(r.mul(t[a], t[a]), t[g.mul(a, a)]))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.push_back(r.sub(t[g.mul(a, b)], t[g.mul(b, a)]));
      out.push_back(r.sub(dt[g.mul(a, b)], r.mul(dt[a], dt[b])));
      Vec rhs = r.add(t[g.mul(a, b)], r.mul(dt[b], t[g.mul(a, g.inv(b))]));
      out.push_back(r.sub(r.mul(t[a], t[b]), rhs));
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = g.mul(a, b);
      Vec tatb = r.mul(t[a], t[b]);
      for (int c = 0; c < n; ++c) {
        Vec s = r.mul(tatb, t[c]);
        s = r.sub(s, r.mul(t[ab], t[c]));
        s = r.sub(s, r.mul(t[g.mul(b, c)], t[a]));
        s = r.sub(s, r.mul(t[g.mul(a, c)], t[b]));
        s = r.add(s, t[g.mul(ab, c)]);
        s = r.add(s, t[g.mul(g.mul(a, c), b)]);
        out.push_back(s);
      }
    }
  return out;
}

namespace {

Pseudorep2 deform(const Pseudorep2& dbar, const Extension& ext, const Mat& fp_basis, const Vec& delta) {
  const FiniteRing& k = dbar.ring;
  const FiniteRing& ke = ext.ring;
  const int n = dbar.group.group.order();
  const int fb = static_cast<int>(fp_basis.size());
  Pseudorep2 out{ke, dbar.group, {}, {}};
  auto pert = [&](int block) {
    Vec s = k.zero();
    for (int b = 0; b < fb; ++b) s = k.add(s, k.scale(delta[block * fb + b], fp_basis[b]));
    return ke.mul(ext.x, ext.inclusion.apply(s));
  };
  for (int x = 0; x < n; ++x) out.trace.push_back(ke.add(ext.inclusion.apply(dbar.trace[x]), pert(x)));
  for (int x = 0; x < n; ++x) out.det.push_back(ke.add(ext.inclusion.apply(dbar.det[x]), pert(n + x)));
  return out;
}

}  // namespace

TangentCount ordinary_tangent_count(const Pseudorep2& dbar, const Character& kappa, std::optional<int> explicit_index,
                                    TangentConstraint constraint, std::size_t budget) {
  const FiniteRing& k = dbar.ring;
  const Zmod& z = k.zmod();
  if (z.exponent() != 1) throw InputError("tangent count: base must be a field of characteristic p");
  if (!is_local(k) || !is_zero_ideal(k, local_info(k).maximal)) throw InputError("tangent count: base is not a field");
  ValidationReport rep = validate_pseudorep(dbar);
  if (!rep.ok) throw InputError("tangent count: invalid pseudorepresentation: " + rep.describe());
  Mat fp_basis;
  {
    std::vector<bool> pivot(k.dim(), false);
    for (std::size_t i = 0; i < k.relations().rows().size(); ++i) pivot[k.relations().pivot_col(static_cast<int>(i))] = true;
    for (int c = 0; c < k.dim(); ++c)
      if (!pivot[c]) fp_basis.push_back(k.reduce(unit_vec(k.dim(), c)));
  }
  const int f = static_cast<int>(fp_basis.size());
  const int n = dbar.group.group.order();
  const int unknowns = 2 * n * f;
  Extension ext = extension(k, {k.zero(), k.zero()});
  const int nk = k.dim();

  Mat rows;
  int cols = 0;
  for (int u = 0; u < unknowns; ++u) {
    Pseudorep2 de = deform(dbar, ext, fp_basis, unit_vec(unknowns, u));
    std::vector<Vec> res = identity_residuals(de);
    Vec row;
    for (const auto& v : res) {
      Vec w = ext.ring.reduce(v);
      row.insert(row.end(), w.begin() + nk, w.begin() + 2 * nk);
    }
    cols = static_cast<int>(row.size());
    rows.push_back(row);
  }
  Mat rel;
  if (!k.relations().is_zero()) {
    const int blocks = cols / nk;
    for (int b = 0; b < blocks; ++b)
      for (const auto& rr : k.relations().rows()) {
        Vec v(cols, 0);
        std::copy(rr.begin(), rr.end(), v.begin() + static_cast<std::ptrdiff_t>(b) * nk);
        rel.push_back(v);
      }
  }
  RowSpan kernel = kernel_mod(z, rows, rel, cols);
  const int dim = static_cast<int>(kernel.rows().size());
  const Int p = z.prime();
  std::size_t total = 1;
  for (int i = 0; i < dim; ++i) {
    if (total > budget / static_cast<std::size_t>(p)) throw BudgetExceeded("tangent count: enumeration budget exceeded");
    total *= static_cast<std::size_t>(p);
  }
  Character kappa_e = map_character(ext.inclusion, kappa);
  TangentCount out;
  out.candidates = total;
  Mat accepted;
  std::vector<Int> coeff(dim, 0);
  for (std::size_t c = 0; c < total; ++c) {
    Vec delta(unknowns, 0);
    for (int i = 0; i < dim; ++i)
      for (int u = 0; u < unknowns; ++u) delta[u] = z.add(delta[u], z.mul(coeff[i], kernel.rows()[i][u]));
    bool ok = true;
    if (constraint != TangentConstraint::All) {
      Pseudorep2 de = deform(dbar, ext, fp_basis, delta);
      OrdinaryDecision dec = is_ordinary_psrep(de, kappa_e, explicit_index);
      ok = dec.verdict == Verdict::Ordinary;
      if (ok && constraint == TangentConstraint::ReducibleOrdinary) {
        ReducibleOrdinary red = reducible_ordinary_quotient(*dec.context, *dec.quotient);
        ok = is_zero_ideal(de.ring, red.base_ideal);
      }
    }
    if (ok) accepted.push_back(delta);
    for (int i = 0; i < dim; ++i) {
      if (++coeff[i] < p) break;
      coeff[i] = 0;
    }
  }
  out.accepted = accepted.size();
  int logp = 0;
  std::size_t s = 1;
  while (s < out.accepted) {
    s *= static_cast<std::size_t>(p);
    ++logp;
  }
  RowSpan span(z, unknowns, accepted);
  out.additive_closed = (s == out.accepted) && span.log_size() == logp;
  out.fp_dimension = logp;
  const int degree = local_info(k).degree;
  out.dimension = logp % degree == 0 ? logp / degree : -1;
  return out;
}

}  // namespace pseudomod
