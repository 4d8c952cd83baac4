#include "pseudomod/criterion.hpp"

#include <algorithm>
#include <functional>

namespace pseudomod {

namespace {

Vec lift_pair(const FiberProduct& fp, const Vec& u, const Vec& v) {
  Vec target = u;
  target.insert(target.end(), v.begin(), v.end());
  const Algebra& prod = fp.embedding.dst();
  LinearSolver s(prod.zmod(), fp.embedding.images(), prod.relations().rows(), prod.dim());
  auto c = s.solve(prod.reduce(target));
  if (!c) throw InvariantFailure("fiber product: pair is not in the pullback");
  return fp.ring.reduce(*c);
}

RingHom hom_from_images(const Algebra& src, const Algebra& dst, const std::function<Vec(int)>& image) {
  Mat imgs;
  for (int i = 0; i < src.dim(); ++i) imgs.push_back(image(i));
  return RingHom(src, dst, imgs);
}

}  // namespace

int o_length(const FiniteRing& o, int log_p_size) {
  LocalInfo info = local_info(o);
  return length_from_log(info, log_p_size);
}

int o_colength(const FiniteRing& o, const RowSpan& ideal) {
  return o_length(o, o.log_size() - (ideal.log_size() - o.relations().log_size()));
}

AugmentedAlgebra make_augmented(const FiniteRing& o, const Vec& t, const FiniteRing& ring, const RingHom& structure,
                                const RingHom& pi) {
  RingHom round = compose(pi, structure);
  for (int i = 0; i < o.dim(); ++i)
    if (!o.equal(round.apply(unit_vec(o.dim(), i)), unit_vec(o.dim(), i)))
      throw InputError("augmented algebra: pi is not a section of the structure map");
  std::string err = structure.check();
  if (err.empty()) err = pi.check();
  if (!err.empty()) throw InputError("augmented algebra: " + err);
  Vec tt = structure.apply(t);
  RowSpan tt_ideal = ideal_closure(ring, {tt});
  LocalInfo info = local_info(o);
  const int fib = ring.log_size() - (tt_ideal.log_size() - ring.relations().log_size());
  const int rank = length_from_log(info, fib);
  if (ring.log_size() != rank * o.log_size()) throw InputError("augmented algebra: not free over the base");
  return AugmentedAlgebra{o, t, ring, structure, pi, pi.kernel(), rank};
}

AugmentedAlgebra node_algebra(const DvrModel& o, int r) {
  const FiniteRing& lam = o.ring();
  Extension ext = extension(lam, {lam.zero(), lam.neg(o.t_power(r))});
  RingHom pi = extension_hom(ext, identity_hom(lam), lam.zero());
  return make_augmented(lam, o.t(), ext.ring, ext.inclusion, pi);
}

AugmentedAlgebra trivial_augmented(const DvrModel& o) {
  return make_augmented(o.ring(), o.t(), o.ring(), identity_hom(o.ring()), identity_hom(o.ring()));
}

RowSpan eta_invariant(const AugmentedAlgebra& t) {
  RowSpan ann = annihilator(t.ring, t.wp);
  Mat imgs;
  for (const auto& row : ann.rows()) imgs.push_back(t.pi.apply(row));
  return ideal_closure(t.o, imgs);
}

int cotangent_length(const FiniteRing& r, const RowSpan& wp, const FiniteRing& o) {
  RowSpan sq = ideal_product(r, wp, wp);
  return o_length(o, wp.log_size() - sq.log_size());
}

bool principal_route_ci(const FiniteRing& t_ring, const Vec& t_image) {
  LocalInfo info = local_info(t_ring);
  RowSpan m2 = ideal_product(t_ring, info.maximal, info.maximal);
  RowSpan sub = m2.plus(ideal_closure(t_ring, {t_image}));
  return ideal_quotient_length(t_ring, info, info.maximal, sub) <= 1;
}

LenstraVerdict lenstra_check(const FiniteRing& r, const RingHom& r_to_t, const AugmentedAlgebra& t) {
  if (!r_to_t.is_surjective()) throw InputError("lenstra_check: R -> T is not surjective");
  std::string err = r_to_t.check();
  if (!err.empty()) throw InputError("lenstra_check: " + err);
  RingHom pi_r = compose(t.pi, r_to_t);
  RowSpan j = pi_r.kernel();
  LenstraVerdict v;
  v.cotangent = cotangent_length(r, j, t.o);
  v.eta_length = o_colength(t.o, eta_invariant(t));
  v.criterion_met = v.cotangent <= v.eta_length;
  if (!v.criterion_met) return v;
  v.isomorphism_checked = true;
  v.is_isomorphism = r.log_size() == t.ring.log_size();
  v.complete_intersection = principal_route_ci(t.ring, t.structure.apply(t.t));
  v.ci_decided = v.complete_intersection;
  if (!v.is_isomorphism) v.failure = "criterion met but R -> T is not an isomorphism";
  return v;
}

NonCiInstance non_ci_instance(const DvrModel& o) {
  const FiniteRing& lam = o.ring();
  Extension ext = extension(lam, {lam.zero(), lam.zero(), lam.zero()});
  Vec tx = ext.ring.mul(ext.inclusion.apply(o.t()), ext.x);
  RowSpan rel = ideal_closure(ext.ring, {tx});
  FiniteRing r = ext.ring.with_relations(rel);
  RingHom to_o = extension_hom(ext, identity_hom(lam), lam.zero()).from(r);
  return NonCiInstance{r, to_o, trivial_augmented(o)};
}

// ---------------------------------------------------------------- towers

std::string TowerSpec::name() const {
  std::string s = kind + "-r" + std::to_string(r);
  if (kind == "ramified" || kind == "node" || kind == "axes") s += "-" + std::to_string(param);
  s += "-p" + std::to_string(p);
  if (degree != 1) s += "-f" + std::to_string(degree);
  return s;
}

namespace {

struct HBuild {
  FiniteRing h;
  RingHom structure;  // lambda_D -> h
  RingHom aug;        // h -> lambda_D/(t^r)
};

HBuild build_h(const TowerSpec& spec, const DvrModel& dvr, const RingHom& red) {
  const FiniteRing& lam = dvr.ring();
  const FiniteRing& q = red.dst();
  auto tp = [&](int e) { return dvr.t_power(e); };
  if (spec.kind == "plane") return HBuild{lam, identity_hom(lam), red};
  if (spec.kind == "ramified" || spec.kind == "node" || spec.kind == "cubic") {
    std::vector<Vec> low;
    if (spec.kind == "ramified") {
      if (spec.param < spec.r) throw InputError("ramified tower needs r <= a");
      low = {lam.neg(tp(spec.param)), lam.zero()};
    } else if (spec.kind == "node") {
      low = {lam.zero(), lam.neg(tp(spec.param))};
    } else {
      low = {lam.zero(), lam.neg(tp(1)), lam.zero()};
    }
    Extension ext = extension(lam, low);
    return HBuild{ext.ring, ext.inclusion, extension_hom(ext, red, q.zero())};
  }
  if (spec.kind == "fat") {
    Extension e1 = extension(lam, {lam.zero(), lam.zero()});
    Extension e2 = extension(e1.ring, {e1.ring.zero(), e1.ring.zero()});
    Vec x = e2.inclusion.apply(e1.x);
    RowSpan rel = ideal_closure(e2.ring, {e2.ring.mul(x, e2.x)});
    FiniteRing h = e2.ring.with_relations(rel);
    RingHom a1 = extension_hom(e1, red, q.zero());
    RingHom a2 = extension_hom(e2, a1, q.zero());
    return HBuild{h, compose(e2.inclusion, e1.inclusion).into(h), a2.from(h)};
  }
  if (spec.kind == "axes") {
    if (spec.param < 2) throw InputError("axes tower needs at least 2 axes");
    RingHom r1 = quotient_map(lam, dvr.ideal_t(1));
    FiniteRing p = lam;
    RingHom first = identity_hom(lam);
    RingHom diag = identity_hom(lam);
    for (int i = 1; i < spec.param; ++i) {
      FiberProduct fp = fiber_product(compose(r1, first), r1);
      RingHom nd = hom_from_images(lam, fp.ring, [&](int l) {
        Vec a = unit_vec(lam.dim(), l);
        return lift_pair(fp, diag.apply(a), a);
      });
      first = compose(first, fp.p1);
      diag = nd;
      p = fp.ring;
    }
    return HBuild{p, diag, compose(red, first)};
  }
  throw InputError("unknown tower kind: " + spec.kind);
}

}  // namespace

RowSpan stable_ideal(const EisensteinTower& tw, const FiniteRing& ring, const RingHom& from_lambda,
                     const RowSpan& ideal) {
  Vec tm = from_lambda.apply(tw.lambda.pow(tw.t, tw.stable));
  Mat gens = ideal.rows();
  gens.push_back(tm);
  return ideal_closure(ring, gens);
}

EisensteinTower build_eisenstein_tower(const TowerSpec& spec, int truncation) {
  if (spec.r < 0 || spec.r > truncation / 2 - 1) throw InputError("tower: r out of range for the truncation");
  const FiniteRing field = spec.degree == 1 ? prime_field(spec.p) : quadratic_field(spec.p);
  const int depth = truncation + spec.r + 2;
  DvrModel dvr(field, depth);
  const FiniteRing& lam_d = dvr.ring();
  RowSpan xi_d = dvr.ideal_t(spec.r);
  RingHom red = quotient_map(lam_d, xi_d);
  HBuild hb = build_h(spec, dvr, red);
  FiberProduct fp = fiber_product(hb.aug, red);
  RingHom lam_to_big_d = hom_from_images(lam_d, fp.ring, [&](int l) {
    Vec a = unit_vec(lam_d.dim(), l);
    return lift_pair(fp, hb.structure.apply(a), a);
  });
  Vec tn = dvr.t_power(truncation);
  FiniteRing lambda = lam_d.with_relations(dvr.ideal_t(truncation));
  FiniteRing h = hb.h.with_relations(ideal_closure(hb.h, {hb.structure.apply(tn)}));
  FiniteRing big = fp.ring.with_relations(ideal_closure(fp.ring, {lam_to_big_d.apply(tn)}));

  EisensteinTower tw{spec,
                     truncation,
                     depth,
                     truncation / 2,
                     spec.r == 0,
                     lambda,
                     lambda.reduce(dvr.t()),
                     h,
                     big,
                     hb.structure.into(h).from(lambda),
                     lam_to_big_d.into(big).from(lambda),
                     fp.p1.into(h).from(big),
                     fp.p2.into(lambda).from(big),
                     hb.aug.from(h),
                     ideal_closure(lambda, {lambda.pow(lambda.reduce(dvr.t()), spec.r)}),
                     RowSpan(lambda.zmod(), 1),
                     RowSpan(lambda.zmod(), 1),
                     RowSpan(lambda.zmod(), 1),
                     RowSpan(lambda.zmod(), 1),
                     {},
                     ""};
  tw.i_h = tw.h_to_quotient.kernel();
  tw.i_big = compose(tw.h_to_quotient, tw.big_h_to_h).kernel();
  tw.script_i = tw.big_h_to_lambda.kernel();
  tw.ker_h = tw.big_h_to_h.kernel();
  if (tw.degenerate) return tw;

  // T0: generator of ker(H -> h) mapping exactly to t^r
  LocalInfo hinfo = local_info(big);
  Mat kg = minimal_generators(big, hinfo, tw.ker_h);
  Vec tr = lambda.pow(tw.t, spec.r);
  Mat multiples;
  for (int l = 0; l < lambda.dim(); ++l) multiples.push_back(lambda.mul(tr, unit_vec(lambda.dim(), l)));
  LinearSolver by_tr(lambda.zmod(), multiples, lambda.relations().rows(), lambda.dim());
  for (const auto& g : kg) {
    auto u = by_tr.solve(tw.big_h_to_lambda.apply(g));
    if (!u) continue;
    auto ui = inverse(lambda, lambda.reduce(*u));
    if (!ui) continue;
    tw.t0 = big.mul(g, tw.lambda_to_big_h.apply(*ui));
    break;
  }
  auto fail = [&](const std::string& s) {
    if (tw.failure.empty()) tw.failure = s;
  };
  if (tw.t0.empty()) {
    fail("no generator of ker(H -> h) maps to t^r");
  } else {
    if (!lambda.equal(tw.big_h_to_lambda.apply(tw.t0), tr)) fail("T0 does not map to t^r");
    if (kg.size() != 1 || ideal_closure(big, {tw.t0}) != tw.ker_h) fail("ker(H -> h) is not generated by T0");
  }
  // script I maps isomorphically onto I
  {
    Mat imgs;
    for (const auto& row : tw.script_i.rows()) imgs.push_back(tw.big_h_to_h.apply(row));
    RowSpan img = additive_span(h, imgs);
    RowSpan coeffs = kernel_mod(h.zmod(), imgs, h.relations().rows(), h.dim());
    Mat lost;
    for (const auto& c : coeffs.rows()) {
      Vec x = big.zero();
      for (std::size_t i = 0; i < c.size(); ++i) x = big.add(x, big.scale(c[i], tw.script_i.rows()[i]));
      lost.push_back(x);
    }
    RowSpan zero_stable = stable_ideal(tw, big, tw.lambda_to_big_h, big.relations());
    bool injective = true;
    for (const auto& x : lost) injective = injective && zero_stable.contains(x);
    if (img != tw.i_h) fail("script I does not map onto I");
    if (!injective) fail("script I -> I has kernel outside t^stable H");
  }
  // H/I_H = h/I = lambda/xi
  {
    const int a = big.log_size() - (tw.i_big.log_size() - big.relations().log_size());
    const int b = h.log_size() - (tw.i_h.log_size() - h.relations().log_size());
    const int c = lambda.log_size() - (tw.xi.log_size() - lambda.relations().log_size());
    if (a != b || b != c) fail("H/I_H, h/I and lambda/xi differ in size");
  }
  return tw;
}

AugmentedAlgebra tower_augmented(const EisensteinTower& tw) {
  return make_augmented(tw.lambda, tw.t, tw.big_h, tw.lambda_to_big_h, tw.big_h_to_lambda);
}

std::string decision_name(Decision d) {
  switch (d) {
    case Decision::True:
      return "true";
    case Decision::False:
      return "false";
    case Decision::Skipped:
      return "skipped";
  }
  return "skipped";
}

TheoremAudit theorem_audit(const EisensteinTower& tw) {
  TheoremAudit a;
  a.tower = tw.spec.name();
  if (tw.degenerate) {
    a.failure = "degenerate tower (r = 0)";
    return a;
  }
  const FiniteRing& h = tw.h;
  const FiniteRing& big = tw.big_h;
  LocalInfo hi = local_info(h), bi = local_info(big);
  auto dec = [](bool b) { return b ? Decision::True : Decision::False; };
  const int emb_h = embedding_dimension(h);
  const int emb_big = embedding_dimension(big);
  Mat i_gens = minimal_generators(h, hi, tw.i_h);
  Mat s_gens = minimal_generators(big, bi, tw.script_i);
  const bool i_principal = i_gens.size() == 1;
  const bool s_principal = s_gens.size() == 1;

  // (1) h regular
  a.entries.push_back({"1", dec(emb_h == 1), "embdim(h) = " + std::to_string(emb_h)});
  // (2) I generated by a single non-zero divisor, checked stably
  {
    bool nzd = false;
    if (i_principal) {
      RowSpan ann = annihilator_of_elements(h, i_gens);
      RowSpan zero_stable = stable_ideal(tw, h, tw.lambda_to_h, h.relations());
      nzd = zero_stable.contains(ann);
    }
    a.entries.push_back({"2", dec(i_principal && nzd),
                         "I needs " + std::to_string(i_gens.size()) + " generator(s)" +
                             (i_principal ? (nzd ? ", non-zero divisor" : ", zero divisor") : "")});
  }
  // (3) I and script I principal
  a.entries.push_back({"3", dec(i_principal && s_principal),
                       "I: " + std::to_string(i_gens.size()) + ", script I: " + std::to_string(s_gens.size())});
  // (4) embdim(H) = 2
  a.entries.push_back({"4", dec(emb_big == 2), "embdim(H) = " + std::to_string(emb_big)});
  // (5) complete intersection via the principal-ideal route
  if (i_principal && s_principal)
    a.entries.push_back({"5", Decision::True, "principal Eisenstein ideals"});
  else
    a.entries.push_back({"5", Decision::Skipped, "only the principal-ideal route is decided"});
  // (6) Gorenstein, on special fibers
  {
    FiniteRing hf = h.with_relations(ideal_closure(h, {tw.lambda_to_h.apply(tw.t)}));
    FiniteRing bf = big.with_relations(ideal_closure(big, {tw.lambda_to_big_h.apply(tw.t)}));
    const bool gh = gorenstein_test(hf), gb = gorenstein_test(bf);
    a.entries.push_back({"6", dec(gh && gb), std::string("h: ") + (gh ? "yes" : "no") + ", H: " + (gb ? "yes" : "no")});
  }
  // (7) simple zero
  a.entries.push_back({"7", dec(tw.spec.r == 1), "r = " + std::to_string(tw.spec.r)});
  // (8) h regular and h (x)_H H/script I a field
  {
    FiniteRing tens = big.with_relations(tw.ker_h.plus(tw.script_i));
    const bool field = is_local(tens) && is_zero_ideal(tens, local_info(tens).maximal);
    a.entries.push_back({"8", dec(emb_h == 1 && field), std::string("intersection ring ") + (field ? "is" : "is not") + " a field"});
  }
  a.length_h_mod_i = ideal_quotient_length(h, hi, unit_ideal(h), tw.i_h);
  a.length_matches = a.length_h_mod_i == tw.spec.r;
  {
    RowSpan ann_s = annihilator(big, tw.script_i);
    RowSpan ann_k = annihilator(big, tw.ker_h);
    auto st = [&](const RowSpan& x) { return stable_ideal(tw, big, tw.lambda_to_big_h, x); };
    a.annihilators_hold = st(ann_s) == st(tw.ker_h) && st(ann_k) == st(tw.script_i);
  }
  Decision ref = Decision::Skipped;
  a.consistent = true;
  for (const auto& e : a.entries) {
    if (e.condition != "2" && e.condition != "3" && e.condition != "4" && e.condition != "6") continue;
    if (ref == Decision::Skipped) ref = e.value;
    if (e.value != ref) a.consistent = false;
  }
  if (a.entries[4].value == Decision::True && ref != Decision::True) a.consistent = false;
  if (a.entries[0].value == Decision::True && a.entries[1].value != Decision::True) a.consistent = false;
  if (ref == Decision::True && a.entries[6].value != a.entries[7].value) a.consistent = false;
  if (!a.consistent)
    a.failure = "decided conditions disagree";
  else if (!a.length_matches)
    a.failure = "length of h/I differs from r";
  else if (!a.annihilators_hold)
    a.failure = "annihilator identities fail";
  else if (!tw.failure.empty())
    a.failure = tw.failure;
  return a;
}

FittingReplay fitting_replay(const EisensteinTower& tw) {
  FittingReplay f;
  f.r = tw.spec.r;
  const FiniteRing& h = tw.h;
  FinModule m = ideal_as_module(h, tw.i_h);
  RowSpan fitt = fitting_ideal(m);
  RowSpan ann = annihilator(h, tw.i_h);
  f.fitting_in_annihilator = ann.contains(fitt);
  f.annihilator_vanishes = stable_ideal(tw, h, tw.lambda_to_h, h.relations()).contains(ann);
  f.cotangent = cotangent_length(h, tw.i_h, tw.lambda);
  f.bound_holds = f.cotangent >= f.r;
  return f;
}

std::vector<TowerSpec> standard_tower_specs() {
  std::vector<TowerSpec> out;
  for (int r = 1; r <= 4; ++r) out.push_back({"plane", r, 0, 5, 1});
  out.push_back({"plane", 2, 0, 7, 1});
  out.push_back({"plane", 1, 0, 5, 2});
  for (int a = 1; a <= 3; ++a)
    for (int r = 1; r <= a; ++r) out.push_back({"ramified", r, a, 5, 1});
  for (int s = 1; s <= 2; ++s)
    for (int r = 1; r <= 2; ++r) out.push_back({"node", r, s, 5, 1});
  out.push_back({"cubic", 1, 0, 5, 1});
  out.push_back({"fat", 1, 0, 5, 1});
  out.push_back({"fat", 2, 0, 5, 1});
  out.push_back({"axes", 1, 3, 5, 1});
  out.push_back({"axes", 2, 3, 5, 1});
  out.push_back({"axes", 1, 4, 5, 1});
  return out;
}

}  // namespace pseudomod
