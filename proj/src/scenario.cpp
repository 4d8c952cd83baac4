#include "pseudomod/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "pseudomod/rng.hpp"

namespace pseudomod {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Int get_int(const json& j, const char* key, Int fallback, Int lo, Int hi, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const json& v = j[key];
  if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
  Int x = v.get<Int>();
  if (x < lo || x > hi) bad(where + "." + key, "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

bool is_small_odd_prime(Int p) {
  if (p < 3 || p > 97) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int need_prime(const json& j, const std::string& where) {
  Int p = get_int(j, "p", 5, 3, 97, where);
  if (!is_small_odd_prime(p)) bad(where + ".p", std::to_string(p) + " is not an odd prime");
  return p;
}

std::vector<int> words_to_elements(const FiniteGroup& g, const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of generator words");
  std::vector<int> out;
  const int ngen = static_cast<int>(g.generators().size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) bad(w, "expected a word (list of generator indices)");
    std::vector<int> word;
    for (const auto& x : j[i]) {
      if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= ngen) bad(w, "bad generator index");
      word.push_back(x.get<int>());
    }
    out.push_back(evaluate_word(g, word));
  }
  return out;
}

Mat2 mat2_from_json(const FiniteRing& r, const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) bad(where, "expected [a, b, c, d]");
  Mat2 m;
  for (int i = 0; i < 4; ++i) m[i] = element_from_json(r, j[i], where + "[" + std::to_string(i) + "]");
  return m;
}

json coords_json(const std::vector<Vec>& vs) { return json(vs); }

}  // namespace

const std::vector<std::string>& pipeline_stages() {
  static const std::vector<std::string> s = {"validate", "kernel",  "ch",       "gma",
                                             "reducibility", "ordinary", "reducible_ordinary", "tangent"};
  return s;
}

FiniteRing ring_from_spec(const json& j, const std::string& where) {
  const std::string kind = need_string(j, "kind", where);
  if (kind == "table") return ring_from_json(j, where);
  const Int p = need_prime(j, where);
  const int degree = static_cast<int>(get_int(j, "degree", 1, 1, 2, where));
  FiniteRing field = degree == 1 ? prime_field(p) : quadratic_field(p);
  if (kind == "field") return field;
  if (kind == "zmod") return zmod_ring(p, static_cast<int>(get_int(j, "k", 1, 1, 4, where)));
  if (kind == "dvr") return DvrModel(field, static_cast<int>(get_int(j, "n", 2, 1, 12, where))).ring();
  if (kind == "dual") return extension(field, {field.zero(), field.zero()}).ring;
  if (kind == "fiber") {
    const int n = static_cast<int>(get_int(j, "n", 2, 1, 8, where));
    const int m = static_cast<int>(get_int(j, "m", 1, 0, n, where));
    DvrModel o(field, n);
    RingHom red = quotient_map(o.ring(), o.ideal_t(m));
    return fiber_product(red, red).ring;
  }
  bad(where + ".kind", "unknown ring kind \"" + kind + "\"");
}

Scenario parse_scenario(const json& j) {
  Scenario s;
  if (!j.is_object()) bad("scenario", "expected an object");
  if (j.contains("schema") && j["schema"] != kScenarioSchema) bad("scenario.schema", "unsupported scenario schema");
  s.name = need_string(j, "name", "scenario");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<Int>() >= 0))
      bad("scenario.seed", "expected a nonnegative integer");
    s.seed = j["seed"].get<std::uint64_t>();
  }
  s.budget = static_cast<std::size_t>(get_int(j, "budget", 200000, 1, Int(1) << 40, "scenario"));

  if (j.contains("rings")) {
    if (!j["rings"].is_object()) bad("scenario.rings", "expected an object");
    for (const auto& [k, v] : j["rings"].items()) s.rings.emplace(k, ring_from_spec(v, "rings." + k));
  }
  if (j.contains("groups")) {
    if (!j["groups"].is_object()) bad("scenario.groups", "expected an object");
    for (const auto& [k, v] : j["groups"].items()) {
      const std::string w = "groups." + k;
      FiniteGroup g = group_from_json(v, w);
      json all = json::array();
      for (std::size_t i = 0; i < g.generators().size(); ++i) all.push_back(json::array({i}));
      std::vector<int> dp = words_to_elements(g, v.contains("dp") ? v["dp"] : all, w + ".dp");
      std::vector<int> ip = v.contains("ip") ? words_to_elements(g, v["ip"], w + ".ip") : dp;
      std::vector<int> dps = g.subgroup_closure(dp);
      for (int x : ip)
        if (!std::binary_search(dps.begin(), dps.end(), x)) bad(w + ".ip", "inertia is not inside the decomposition group");
      s.groups.emplace(k, mark_group(g, dp, ip));
    }
  }
  auto ring_ref = [&](const json& v, const std::string& w) -> const FiniteRing& {
    std::string name = need_string(v, "ring", w);
    auto it = s.rings.find(name);
    if (it == s.rings.end()) bad(w + ".ring", "unknown ring \"" + name + "\"");
    return it->second;
  };
  auto group_ref = [&](const json& v, const std::string& w) -> const MarkedGroup& {
    std::string name = need_string(v, "group", w);
    auto it = s.groups.find(name);
    if (it == s.groups.end()) bad(w + ".group", "unknown group \"" + name + "\"");
    return it->second;
  };
  if (j.contains("characters")) {
    if (!j["characters"].is_object()) bad("scenario.characters", "expected an object");
    for (const auto& [k, v] : j["characters"].items()) {
      const std::string w = "characters." + k;
      const FiniteRing& r = ring_ref(v, w);
      const MarkedGroup& g = group_ref(v, w);
      const json& vals = need(v, "values", w);
      if (!vals.is_array() || vals.size() != g.group.generators().size())
        bad(w + ".values", "expected one value per generator");
      std::vector<Vec> gv;
      for (std::size_t i = 0; i < vals.size(); ++i)
        gv.push_back(element_from_json(r, vals[i], w + ".values[" + std::to_string(i) + "]"));
      Character chi = character_from_generators(r, g.group, k, gv);
      CharacterCheck cc = character_check(r, g.group, chi);
      if (!cc.ok)
        bad(w, "not multiplicative at (" + g.group.name(cc.g) + ", " + g.group.name(cc.h) + ")");
      s.characters.emplace(k, chi);
    }
  }
  if (j.contains("representations")) {
    if (!j["representations"].is_object()) bad("scenario.representations", "expected an object");
    for (const auto& [k, v] : j["representations"].items()) {
      const std::string w = "representations." + k;
      const FiniteRing& r = ring_ref(v, w);
      const MarkedGroup& g = group_ref(v, w);
      const std::string kind = need_string(v, "kind", w);
      if (kind == "matrix") {
        const json& imgs = need(v, "images", w);
        if (!imgs.is_array() || imgs.size() != g.group.generators().size())
          bad(w + ".images", "expected one matrix per generator");
        std::vector<Mat2> gi;
        for (std::size_t i = 0; i < imgs.size(); ++i)
          gi.push_back(mat2_from_json(r, imgs[i], w + ".images[" + std::to_string(i) + "]"));
        s.reps.push_back({k, psi_of_rep(matrix_rep(r, g, gi))});
      } else if (kind == "characters") {
        auto get = [&](const char* key) -> const Character& {
          std::string n = need_string(v, key, w);
          auto it = s.characters.find(n);
          if (it == s.characters.end()) bad(w + "." + key, "unknown character \"" + n + "\"");
          return it->second;
        };
        s.reps.push_back({k, psi_of_characters(r, g, get("chi1"), get("chi2"))});
      } else if (kind == "law") {
        const int n = g.group.order();
        const json& tj = need(v, "trace", w);
        const json& dj = need(v, "det", w);
        if (!tj.is_array() || !dj.is_array() || tj.size() != static_cast<std::size_t>(n) ||
            dj.size() != static_cast<std::size_t>(n))
          bad(w, "trace and det need one value per group element");
        Pseudorep2 d{r, g, {}, {}};
        for (int i = 0; i < n; ++i) {
          d.trace.push_back(element_from_json(r, tj[i], w + ".trace"));
          d.det.push_back(element_from_json(r, dj[i], w + ".det"));
        }
        s.reps.push_back({k, d});
      } else {
        bad(w + ".kind", "unknown representation kind \"" + kind + "\"");
      }
    }
  }
  auto find_rep = [&](const std::string& n) {
    return std::find_if(s.reps.begin(), s.reps.end(), [&](const NamedRep& r) { return r.name == n; });
  };
  if (j.contains("pipelines")) {
    if (!j["pipelines"].is_array()) bad("scenario.pipelines", "expected an array");
    for (std::size_t i = 0; i < j["pipelines"].size(); ++i) {
      const json& v = j["pipelines"][i];
      const std::string w = "pipelines[" + std::to_string(i) + "]";
      PipelineSpec p;
      p.rep = need_string(v, "rep", w);
      auto rep = find_rep(p.rep);
      if (rep == s.reps.end()) bad(w + ".rep", "unknown representation \"" + p.rep + "\"");
      p.kappa = need_string(v, "kappa", w);
      auto kit = s.characters.find(p.kappa);
      if (kit == s.characters.end()) bad(w + ".kappa", "unknown character \"" + p.kappa + "\"");
      if (kit->second.values.size() != rep->law.trace.size() || kit->second.values[0].size() != rep->law.trace[0].size())
        bad(w + ".kappa", "kappa lives on a different ring or group");
      if (v.contains("e1")) p.e1 = static_cast<int>(get_int(v, "e1", 0, 0, 1, w));
      if (v.contains("stages")) {
        for (const auto& st : v["stages"]) {
          if (!st.is_string()) bad(w + ".stages", "expected stage names");
          const auto& all = pipeline_stages();
          if (std::find(all.begin(), all.end(), st.get<std::string>()) == all.end())
            bad(w + ".stages", "unknown stage \"" + st.get<std::string>() + "\"");
          p.stages.push_back(st);
        }
      } else {
        p.stages = pipeline_stages();
      }
      s.pipelines.push_back(p);
    }
  }
  if (j.contains("towers")) {
    for (std::size_t i = 0; i < j["towers"].size(); ++i) {
      const json& v = j["towers"][i];
      const std::string w = "towers[" + std::to_string(i) + "]";
      TowerSpec t;
      t.kind = need_string(v, "kind", w);
      static const std::set<std::string> kinds = {"plane", "ramified", "node", "cubic", "fat", "axes"};
      if (!kinds.count(t.kind)) bad(w + ".kind", "unknown tower kind \"" + t.kind + "\"");
      t.r = static_cast<int>(get_int(v, "r", 1, 0, 4, w));
      t.param = static_cast<int>(get_int(v, "param", 0, 0, 4, w));
      t.p = need_prime(v, w);
      t.degree = static_cast<int>(get_int(v, "degree", 1, 1, 2, w));
      s.towers.push_back(t);
    }
  }
  if (j.contains("lenstra")) {
    for (std::size_t i = 0; i < j["lenstra"].size(); ++i) {
      const json& v = j["lenstra"][i];
      const std::string w = "lenstra[" + std::to_string(i) + "]";
      LenstraSpec l;
      l.family = need_string(v, "family", w);
      if (l.family != "node" && l.family != "non_ci" && l.family != "trivial") bad(w + ".family", "unknown family");
      l.r = static_cast<int>(get_int(v, "r", 1, 1, 6, w));
      l.p = need_prime(v, w);
      l.truncation = static_cast<int>(get_int(v, "truncation", 8, 2, 12, w));
      if (l.family == "node" && l.r >= l.truncation) bad(w + ".r", "r must be below the truncation");
      s.lenstra.push_back(l);
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_scenario(j);
}

// ---------------------------------------------------------------- runner

namespace {

json split_json(const ResidualSplit& s) {
  json j = {{"supported", s.supported}, {"multiplicity_free", s.multiplicity_free}};
  if (!s.reason.empty()) j["reason"] = s.reason;
  if (s.supported) j["chi1"] = coords_json(s.chi1), j["chi2"] = coords_json(s.chi2);
  return j;
}

struct PipelineRun {
  const Scenario& sc;
  const PipelineSpec& spec;
  const Pseudorep2& d;
  const Character& kappa;
  std::uint64_t seed;
  std::size_t budget;
  std::vector<std::string>& failures;
  json out = json::object();

  PipelineRun(const Scenario& s, const PipelineSpec& p, const Pseudorep2& law, const Character& k, std::uint64_t sd,
              std::size_t b, std::vector<std::string>& f)
      : sc(s), spec(p), d(law), kappa(k), seed(sd), budget(b), failures(f) {}

  std::optional<ResidualSplit> split;
  std::optional<E1Label> label;
  bool labeled_by_kappa = false;
  std::optional<OrdinaryContext> ctx;
  std::optional<ReducibilityResult> red;
  std::optional<OrdinaryQuotient> oq;

  void fail(const std::string& stage, const std::string& what) {
    failures.push_back(spec.rep + "/" + stage + ": " + what);
  }

  bool wants(const std::string& st) const {
    return std::find(spec.stages.begin(), spec.stages.end(), st) != spec.stages.end();
  }

  const ResidualSplit& residual() {
    if (!split) split = residual_split(d);
    return *split;
  }

  // Chooses e1 and builds the GMA; nullopt when no idempotents exist.
  bool context() {
    if (ctx) return true;
    const ResidualSplit& s = residual();
    GroupAlgebra ga = group_algebra(d.ring, d.group.group);
    ChQuotient chq = ch_quotient(ga, d);
    const ChAlgebra& e = chq.ch;
    IdempotentLift lift;
    json lj;
    if (s.supported && s.multiplicity_free) {
      label = label_e1(d, s, kappa, spec.e1);
      labeled_by_kappa = label.has_value();
      if (!label) label = E1Label{0, "default"};
      lift = label->index == 1 ? lift_idempotents(e, s.chi2, s.chi1) : lift_idempotents(e, s.chi1, s.chi2);
      lj["source"] = "residual characters";
    } else {
      auto se = find_splitting_element(e);
      if (!se) return false;
      label = E1Label{spec.e1.value_or(0), spec.e1 ? "explicit" : "splitting element"};
      const Vec& x = e.group_images[se->group_element];
      lift = label->index == 1 ? lift_idempotents_from_element(e, x, se->lambda2, se->lambda1)
                               : lift_idempotents_from_element(e, x, se->lambda1, se->lambda2);
      lj["source"] = "splitting element";
      lj["element"] = d.group.group.name(se->group_element);
      lj["roots"] = {se->lambda1, se->lambda2};
    }
    lj["label"] = {{"index", label->index}, {"by", label->source}};
    lj["iterations"] = lift.iterations;
    lj["nilpotency_class"] = lift.nilpotency_class;
    lj["within_class"] = lift.iterations <= lift.nilpotency_class;
    lj["e1"] = lift.e1;
    lj["e2"] = lift.e2;
    if (lift.iterations > lift.nilpotency_class) fail("gma", "idempotent lifting exceeded the radical class");
    out["idempotents"] = lj;
    ctx = OrdinaryContext{d.group, kappa, gma_decompose(e, lift.e1, lift.e2)};
    return true;
  }

  bool run_validate() {
    ValidationReport v = validate_pseudorep(d);
    json j = {{"ok", v.ok}};
    if (!v.ok) {
      j["identity"] = v.identity;
      json w = json::array();
      for (int g : v.witness) w.push_back(d.group.group.name(g));
      j["witness"] = w;
      fail("validate", v.describe());
    }
    out["validate"] = j;
    return v.ok;
  }

  void run_kernel() {
    GroupAlgebra ga = group_algebra(d.ring, d.group.group);
    RowSpan ker = kernel_of(d, ga);
    ValidationReport v = validate_induced_law(d, ga, ker, seed, 100);
    out["kernel"] = {{"ideal", ideal_to_json(ga.algebra.alg, ker)}, {"induced_law_ok", v.ok}};
    if (!v.ok) fail("kernel", "induced law: " + v.describe());
  }

  void run_ch() {
    GroupAlgebra ga = group_algebra(d.ring, d.group.group);
    ChQuotient q = ch_quotient(ga, d);
    std::string err = check_ch_algebra(q.ch, seed, 100);
    const Algebra& e = q.ch.alg;
    bool exhaustive = false;
    double size = std::pow(static_cast<double>(e.zmod().prime()), e.log_size());
    if (err.empty() && size <= 15625.0) {
      for (const auto& x : enumerate_elements(e, budget))
        if (!e.is_zero(q.ch.ch_residual(x))) {
          err = "Cayley-Hamilton identity fails on an enumerated element";
          break;
        }
      exhaustive = true;
    }
    out["ch"] = {{"ideal", ideal_to_json(ga.algebra.alg, q.ideal)},
                 {"log_size", e.log_size()},
                 {"structure_injective", structure_map_injective(q.ch)},
                 {"exhaustive", exhaustive},
                 {"check", err.empty() ? "ok" : err}};
    if (!err.empty()) fail("ch", err);
  }

  void run_gma() {
    out["residual"] = split_json(residual());
    if (!context()) {
      out["gma"] = {{"status", "skipped"}, {"reason", "no element with distinct residual eigenvalues"}};
      return;
    }
    const GmaAlgebra& g = ctx->gma;
    std::string err = check_gma(g);
    out["gma"] = {{"status", "done"},
                  {"b_generators", g.b_gens.size()},
                  {"c_generators", g.c_gens.size()},
                  {"m", g.m},
                  {"check", err.empty() ? "ok" : err}};
    if (!err.empty()) fail("gma", err);
  }

  void run_reducibility() {
    if (!context()) {
      out["reducibility"] = {{"status", "skipped"}};
      return;
    }
    red = reducibility_ideal(ctx->gma);
    std::string cert = verify_reducibility_certificate(ctx->gma, *red);
    std::string minimal = verify_reducibility_minimality(ctx->gma, *red, d.group.group, budget);
    json j = {{"status", "done"},
              {"ideal", ideal_to_json(d.ring, red->ideal)},
              {"unit_ideal", is_unit_ideal(d.ring, red->ideal)},
              {"zero_ideal", is_zero_ideal(d.ring, red->ideal)},
              {"certificate", cert.empty() && red->certificate_ok ? "ok" : cert + red->certificate_failure},
              {"minimality", minimal.empty() ? "ok" : minimal}};
    if (!is_unit_ideal(d.ring, red->ideal)) j["chi1"] = red->chi1, j["chi2"] = red->chi2;
    out["reducibility"] = j;
    if (!cert.empty() || !red->certificate_ok) fail("reducibility", cert + red->certificate_failure);
    if (!minimal.empty()) fail("reducibility", minimal);
  }

  void run_ordinary() {
    if (!context()) {
      out["ordinary"] = {{"verdict", verdict_name(Verdict::Unsupported)}, {"reason", residual().reason}};
      return;
    }
    oq = ordinary_quotient(*ctx, seed);
    json gens = json::array();
    for (const auto& l : oq->j_star_generators)
      gens.push_back({{"from", l.provenance}, {"g", l.g < 0 ? json(nullptr) : json(d.group.group.name(l.g))}});
    json base_gens = json::array();
    for (const auto& l : oq->j_base_generators) base_gens.push_back({{"from", l.provenance}, {"value", l.element}});
    const ResidualSplit& s = residual();
    Verdict v;
    std::string reason;
    if (!s.supported) {
      v = Verdict::Unsupported;
      reason = s.reason;
    } else if (!s.multiplicity_free) {
      v = Verdict::Unsupported;
      reason = "residual characters coincide";
    } else if (!labeled_by_kappa) {
      v = Verdict::NotOrdinary;
      reason = "no residual character equals kappa^-1 on Ip";
    } else {
      const bool zero = is_zero_ideal(d.ring, oq->j_base);
      v = zero ? Verdict::Ordinary : Verdict::NotOrdinary;
      reason = zero ? "ordinary ideal of the base vanishes" : "ordinary ideal of the base is nonzero";
    }
    OrdinaryWitness w = is_ordinary_rep(*ctx);
    json j = {{"verdict", verdict_name(v)},
              {"reason", reason},
              {"is_ordinary", v == Verdict::Ordinary},
              {"rep_is_ordinary", w.ok},
              {"j_star", ideal_to_json(ctx->gma.ch.alg, oq->j_star)},
              {"j_star_generators", gens},
              {"j_base", ideal_to_json(d.ring, oq->j_base)},
              {"j_base_generators", base_gens},
              {"quotient_log_size", oq->e_ord.alg.log_size()},
              {"zero_ring", oq->e_ord.alg.is_zero_ring()},
              {"collapsed", oq->collapsed},
              {"structure_injective", oq->injective}};
    if (oq->collapsed) j["collapse_stage"] = oq->collapse_stage;
    if (!w.ok) j["rep_witness"] = {{"g", d.group.group.name(w.g)}, {"coordinate", w.coordinate}};
    if (v == Verdict::Ordinary && !w.ok) fail("ordinary", "ordinary verdict but the GMA coordinates are not ordinary");
    if (!oq->descent_failure.empty()) {
      j["descent"] = oq->descent_failure;
      fail("ordinary", oq->descent_failure);
    } else {
      j["descent"] = "ok";
    }
    out["ordinary"] = j;
  }

  void run_reducible_ordinary() {
    if (!context()) {
      out["reducible_ordinary"] = {{"status", "skipped"}};
      return;
    }
    if (!oq) oq = ordinary_quotient(*ctx, seed);
    ReducibleOrdinary ro = reducible_ordinary_quotient(*ctx, *oq);
    json j = {{"status", "done"},
              {"base_ideal", ideal_to_json(d.ring, ro.base_ideal)},
              {"quotient_log_size", ro.e_red.alg.log_size()},
              {"maps_onto_ordinary_quotient", ro.maps_onto_ord_quotient},
              {"equals_ordinary_quotient", ro.equals_ord_quotient},
              {"certificate", ro.certificate_failure.empty() ? "ok" : ro.certificate_failure}};
    out["reducible_ordinary"] = j;
    if (!ro.certificate_failure.empty()) fail("reducible_ordinary", ro.certificate_failure);
    if (!ro.maps_onto_ord_quotient || !ro.equals_ord_quotient)
      fail("reducible_ordinary", "does not match the ordinary quotient modulo its reducibility ideal");
  }

  void run_tangent() {
    const FiniteRing& r = d.ring;
    if (r.zmod().exponent() != 1 || local_info(r).maximal.log_size() != r.relations().log_size()) {
      out["tangent"] = {{"status", "skipped"}, {"reason", "needs a law over a field of prime characteristic"}};
      return;
    }
    json j = {{"status", "done"}, {"note", "first-order count over a finite residue field (analogue)"}};
    const Verdict base = is_ordinary_psrep(d, kappa, spec.e1).verdict;
    for (auto c : {TangentConstraint::All, TangentConstraint::Ordinary, TangentConstraint::ReducibleOrdinary}) {
      if (c != TangentConstraint::All && base != Verdict::Ordinary) {
        j[constraint_name(c)] = {{"status", "skipped"}, {"reason", "the law itself is " + verdict_name(base)}};
        continue;
      }
      TangentCount t = ordinary_tangent_count(d, kappa, spec.e1, c, budget);
      j[constraint_name(c)] = {{"dimension", t.dimension},      {"fp_dimension", t.fp_dimension},
                               {"candidates", t.candidates},    {"accepted", t.accepted},
                               {"additive_closed", t.additive_closed}};
      if (!t.additive_closed) fail("tangent", constraint_name(c) + " solutions are not closed under addition");
    }
    out["tangent"] = j;
  }

  json run(bool validate_only) {
    out["rep"] = spec.rep;
    out["kappa"] = spec.kappa;
    out["group_order"] = d.group.group.order();
    out["ring_log_size"] = d.ring.log_size();
    const bool valid = run_validate();
    if (validate_only || !valid) return out;
    if (wants("kernel")) run_kernel();
    if (wants("ch")) run_ch();
    if (wants("gma")) run_gma();
    if (wants("reducibility")) run_reducibility();
    if (wants("ordinary")) run_ordinary();
    if (wants("reducible_ordinary")) run_reducible_ordinary();
    if (wants("tangent")) run_tangent();
    return out;
  }
};

}  // namespace

json tower_report(const TowerSpec& spec, std::vector<std::string>& failures) {
  const std::string n = spec.name();
  EisensteinTower tw = build_eisenstein_tower(spec);
  json j = {{"tower", n}, {"kind", spec.kind}, {"r", spec.r}, {"degenerate", tw.degenerate}};
  if (tw.degenerate) return j;
  TheoremAudit a = theorem_audit(tw);
  json table = json::object();
  json detail = json::object();
  for (const auto& e : a.entries) {
    table[e.condition] = decision_name(e.value);
    detail[e.condition] = e.detail;
  }
  FittingReplay f = fitting_replay(tw);
  AugmentedAlgebra aug = tower_augmented(tw);
  const int eta = o_colength(tw.lambda, eta_invariant(aug));
  LenstraVerdict lv = lenstra_check(tw.big_h, identity_hom(tw.big_h), aug);
  j["conditions"] = table;
  j["details"] = detail;
  j["length_h_mod_I"] = a.length_h_mod_i;
  j["annihilators"] = a.annihilators_hold;
  j["consistent"] = a.consistent;
  j["t0"] = tw.t0;
  j["eta_length"] = eta;
  j["fitting"] = {{"inside_annihilator", f.fitting_in_annihilator},
                  {"annihilator_vanishes", f.annihilator_vanishes},
                  {"cotangent_length", f.cotangent},
                  {"bound_holds", f.bound_holds}};
  j["lenstra"] = {{"cotangent", lv.cotangent}, {"eta_length", lv.eta_length}, {"criterion_met", lv.criterion_met}};
  if (!a.failure.empty()) failures.push_back(n + ": " + a.failure);
  if (eta != spec.r) failures.push_back(n + ": length of O/eta differs from r");
  if (!f.fitting_in_annihilator) failures.push_back(n + ": Fitting ideal not inside the annihilator");
  if (f.annihilator_vanishes && !f.bound_holds) failures.push_back(n + ": cotangent bound fails");
  if (!lv.failure.empty()) failures.push_back(n + ": " + lv.failure);
  return j;
}

json lenstra_report(const LenstraSpec& spec, std::vector<std::string>& failures) {
  DvrModel o(prime_field(spec.p), spec.truncation);
  std::string name = spec.family + (spec.family == "node" ? "-r" + std::to_string(spec.r) : "") + "-p" +
                     std::to_string(spec.p) + "-n" + std::to_string(spec.truncation);
  LenstraVerdict v;
  if (spec.family == "node") {
    AugmentedAlgebra t = node_algebra(o, spec.r);
    v = lenstra_check(t.ring, identity_hom(t.ring), t);
  } else if (spec.family == "non_ci") {
    NonCiInstance nc = non_ci_instance(o);
    v = lenstra_check(nc.r, nc.r_to_t, nc.t);
  } else {
    AugmentedAlgebra t = trivial_augmented(o);
    v = lenstra_check(t.ring, identity_hom(t.ring), t);
  }
  json j = {{"instance", name},
            {"cotangent", v.cotangent},
            {"eta_length", v.eta_length},
            {"criterion_met", v.criterion_met},
            {"isomorphism_checked", v.isomorphism_checked}};
  if (v.isomorphism_checked) {
    j["is_isomorphism"] = v.is_isomorphism;
    j["complete_intersection"] = v.complete_intersection;
  }
  if (!v.failure.empty()) failures.push_back(name + ": " + v.failure);
  return j;
}

Report run_scenario(const Scenario& s, const RunOptions& opt) {
  Report rep;
  const std::uint64_t seed = opt.seed.value_or(s.seed);
  const std::size_t budget = opt.budget.value_or(s.budget);
  json doc = {{"schema", kReportSchema}, {"scenario", s.name}, {"seed", seed}, {"budget", budget}};
  const bool reps = opt.mode == RunMode::Pipeline || opt.mode == RunMode::Validate;
  if (reps) {
    json pipes = json::array();
    if (opt.mode == RunMode::Validate && s.pipelines.empty()) {
      for (const auto& r : s.reps) {
        ValidationReport v = validate_pseudorep(r.law);
        json j = {{"rep", r.name}, {"validate", {{"ok", v.ok}}}};
        if (!v.ok) {
          j["validate"]["identity"] = v.identity;
          rep.failures.push_back(r.name + "/validate: " + v.describe());
        }
        pipes.push_back(j);
      }
    }
    for (const auto& p : s.pipelines) {
      const auto& nr = *std::find_if(s.reps.begin(), s.reps.end(), [&](const NamedRep& r) { return r.name == p.rep; });
      PipelineRun run{s, p, nr.law, s.characters.at(p.kappa), seed, budget, rep.failures};
      pipes.push_back(run.run(opt.mode == RunMode::Validate));
    }
    doc["pipelines"] = pipes;
  }
  if (opt.mode == RunMode::Pipeline || opt.mode == RunMode::Audit) {
    json towers = json::array();
    for (const auto& t : s.towers) towers.push_back(tower_report(t, rep.failures));
    doc["towers"] = towers;
  }
  if (opt.mode == RunMode::Pipeline || opt.mode == RunMode::Criterion) {
    json ls = json::array();
    for (const auto& l : s.lenstra) ls.push_back(lenstra_report(l, rep.failures));
    if (opt.mode == RunMode::Criterion)
      for (const auto& t : s.towers) {
        json tr = tower_report(t, rep.failures);
        json j = tr.contains("lenstra") ? tr["lenstra"] : json::object();
        j["instance"] = tr["tower"];
        ls.push_back(j);
      }
    doc["lenstra"] = ls;
  }
  doc["status"] = rep.failures.empty() ? "ok" : "invariant_failure";
  doc["failures"] = rep.failures;
  rep.doc = doc;
  return rep;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "scenario " << report.value("scenario", "") << " (seed " << report.value("seed", 0) << ")\n";
  if (report.contains("pipelines"))
    for (const auto& p : report["pipelines"]) {
      os << "  rep " << p.value("rep", "") << ": valid=" << (p["validate"]["ok"].get<bool>() ? "yes" : "no");
      if (p.contains("reducibility") && p["reducibility"].value("status", "") == "done")
        os << " reducibility_log_size=" << p["reducibility"]["ideal"]["log_size"];
      if (p.contains("ordinary")) os << " ordinary=" << p["ordinary"].value("verdict", "");
      if (p.contains("ordinary") && p["ordinary"].contains("zero_ring"))
        os << " ord_quotient=" << (p["ordinary"]["zero_ring"].get<bool>() ? "zero" : "nonzero");
      os << "\n";
    }
  if (report.contains("towers") && !report["towers"].empty()) {
    os << "  tower                      1 2 3 4 5 6 7 8  l(h/I) ann\n";
    for (const auto& t : report["towers"]) {
      std::string n = t.value("tower", "");
      n.resize(26, ' ');
      os << "  " << n << " ";
      if (t.contains("conditions")) {
        for (int c = 1; c <= 8; ++c) os << t["conditions"][std::to_string(c)].get<std::string>()[0] << " ";
        os << " " << t["length_h_mod_I"] << "      " << (t["annihilators"].get<bool>() ? "ok" : "FAIL");
      } else {
        os << "degenerate";
      }
      os << "\n";
    }
  }
  if (report.contains("lenstra"))
    for (const auto& l : report["lenstra"])
      os << "  lenstra " << l.value("instance", "") << ": l(J/J^2)=" << l.value("cotangent", -1)
         << " l(O/eta)=" << l.value("eta_length", -1) << " met=" << (l.value("criterion_met", false) ? "yes" : "no")
         << "\n";
  os << "  status " << report.value("status", "") << "\n";
  for (const auto& f : report["failures"]) os << "  failure: " << f.get<std::string>() << "\n";
  return os.str();
}

// ---------------------------------------------------------------- corpus

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Elements of order dividing n among the units of a field F_p (as integers).
std::vector<Int> roots_of_unity(Int p, int n) {
  std::vector<Int> out;
  for (Int a = 1; a < p; ++a) {
    Int x = 1;
    for (int i = 0; i < n; ++i) x = x * a % p;
    if (x == 1) out.push_back(a);
  }
  return out;
}

struct GroupChoice {
  json spec;
  std::vector<int> gen_orders;  // orders of the images required for abelian characters
  bool abelian;
};

GroupChoice pick_group(Rng& rng, Int kinds) {
  switch (rng.below(kinds)) {
    case 0:
      return {{{"kind", "cyclic"}, {"n", 2}}, {2}, true};
    case 1:
      return {{{"kind", "cyclic"}, {"n", 4}}, {4}, true};
    case 2:
      return {{{"kind", "cyclic"}, {"n", 6}}, {6}, true};
    case 3:
      return {{{"kind", "dihedral"}, {"n", 4}}, {2, 2}, false};
    default:
      return {{{"kind", "s3"}}, {2, 1}, false};
  }
}

json word_list(Rng& rng, int ngen) {
  json dp = json::array();
  if (rng.below(3) == 0) return dp;
  dp.push_back(json::array({static_cast<int>(rng.below(ngen))}));
  return dp;
}

}  // namespace

Corpus generate_corpus(std::uint64_t seed, const CorpusCounts& counts) {
  Corpus c;
  Rng rng(seed);
  const std::string prefix = "s" + std::to_string(seed) + "-";
  static const char* kRepKinds[] = {"diagonal", "triangular", "irreducible"};
  for (int i = 0; i < counts.reps; ++i) {
    const std::string kind = kRepKinds[i % 3];
    const Int p = rng.below(2) ? 7 : 5;
    GroupChoice gc = kind == "irreducible" ? GroupChoice{{{"kind", "s3"}}, {2, 1}, false}
                     : kind == "triangular"  ? pick_group(rng, 3)
                                             : pick_group(rng, 5);
    const int ngen = static_cast<int>(gc.gen_orders.size());
    // character values: roots of unity of the order each generator needs
    auto char_values = [&]() {
      json vals = json::array();
      for (int g = 0; g < ngen; ++g) {
        std::vector<Int> roots = roots_of_unity(p, gc.gen_orders[g]);
        vals.push_back(roots[rng.below(static_cast<Int>(roots.size()))]);
      }
      return vals;
    };
    json sc = {{"schema", kScenarioSchema}, {"seed", seed}, {"budget", 200000}};
    json ring = {{"kind", "field"}, {"p", p}};
    if (kind != "irreducible") {
      switch (rng.below(4)) {
        case 1:
          ring = {{"kind", "dvr"}, {"p", p}, {"n", 2}};
          break;
        case 2:
          ring = {{"kind", "dual"}, {"p", p}};
          break;
        case 3:
          ring = {{"kind", "fiber"}, {"p", p}, {"n", 2}, {"m", 1}};
          break;
        default:
          break;
      }
    }
    sc["rings"] = {{"A", ring}};
    json group = gc.spec;
    group["dp"] = json::array({json::array({0})});
    group["ip"] = word_list(rng, 1);
    sc["groups"] = {{"G", group}};
    json chars = {{"kappa", {{"ring", "A"}, {"group", "G"}, {"values", char_values()}}}};
    json reps;
    if (kind == "diagonal") {
      chars["chi1"] = {{"ring", "A"}, {"group", "G"}, {"values", char_values()}};
      chars["chi2"] = {{"ring", "A"}, {"group", "G"}, {"values", char_values()}};
      reps["rho"] = {{"kind", "characters"}, {"ring", "A"}, {"group", "G"}, {"chi1", "chi1"}, {"chi2", "chi2"}};
    } else if (kind == "triangular") {
      json imgs = json::array();
      for (int g = 0; g < ngen; ++g) {
        std::vector<Int> roots = roots_of_unity(p, gc.gen_orders[g]);
        Int a = roots[rng.below(static_cast<Int>(roots.size()))];
        Int dd = roots[rng.below(static_cast<Int>(roots.size()))];
        if (roots.size() > 1 && dd == a) dd = roots[(std::find(roots.begin(), roots.end(), a) - roots.begin() + 1) % roots.size()];
        Int b = a == dd ? 0 : rng.below(p);
        imgs.push_back({a, b, 0, dd});
      }
      reps["rho"] = {{"kind", "matrix"}, {"ring", "A"}, {"group", "G"}, {"images", imgs}};
    } else {
      // standard representation of S_3 conjugated by a random invertible matrix
      Int a, b, cc, dd;
      do {
        a = rng.below(p), b = rng.below(p), cc = rng.below(p), dd = rng.below(p);
      } while ((a * dd - b * cc) % p == 0);
      Int det = ((a * dd - b * cc) % p + p) % p;
      Int inv = 1;
      while (det * inv % p != 1) ++inv;
      const Int m[4] = {a, b, cc, dd};
      const Int mi[4] = {dd * inv % p, (p - b) * inv % p, (p - cc) * inv % p, a * inv % p};
      auto conj = [&](const Int x[4]) {
        Int t[4], u[4];
        for (int r = 0; r < 2; ++r)
          for (int col = 0; col < 2; ++col) t[2 * r + col] = (m[2 * r] * x[col] + m[2 * r + 1] * x[2 + col]) % p;
        for (int r = 0; r < 2; ++r)
          for (int col = 0; col < 2; ++col) u[2 * r + col] = (t[2 * r] * mi[col] + t[2 * r + 1] * mi[2 + col]) % p;
        return json::array({u[0], u[1], u[2], u[3]});
      };
      const Int swap[4] = {0, 1, 1, 0};
      const Int rot[4] = {0, p - 1, 1, p - 1};
      reps["rho"] = {{"kind", "matrix"}, {"ring", "A"}, {"group", "G"}, {"images", json::array({conj(swap), conj(rot)})}};
    }
    sc["characters"] = chars;
    sc["representations"] = reps;
    sc["pipelines"] = json::array({{{"rep", "rho"}, {"kappa", "kappa"}}});
    char idx[16];
    std::snprintf(idx, sizeof idx, "%03d", i);
    const std::string name = prefix + "rep-" + idx + "-" + kind;
    sc["name"] = name;
    c.entries.push_back({name, sc});
  }
  const std::vector<TowerSpec> pool = standard_tower_specs();
  for (int i = 0; i < counts.towers; ++i) {
    const TowerSpec& t = pool[rng.below(static_cast<Int>(pool.size()))];
    char idx[16];
    std::snprintf(idx, sizeof idx, "%03d", i);
    const std::string name = prefix + "tower-" + idx + "-" + t.name();
    json sc = {{"schema", kScenarioSchema},
               {"name", name},
               {"seed", seed},
               {"towers", json::array({{{"kind", t.kind}, {"r", t.r}, {"param", t.param}, {"p", t.p},
                                        {"degree", t.degree}}})}};
    c.entries.push_back({name, sc});
  }
  std::sort(c.entries.begin(), c.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  json entries = json::array();
  std::string all;
  for (const auto& e : c.entries) {
    const std::string text = e.scenario.dump(2);
    entries.push_back({{"name", e.name}, {"file", e.name + ".json"}, {"checksum", fnv1a_hex(text)}});
    all += e.name + "\n" + text + "\n";
  }
  c.manifest = {{"schema", kManifestSchema},
                {"seed", seed},
                {"counts", {{"reps", counts.reps}, {"towers", counts.towers}}},
                {"entries", entries},
                {"checksum", fnv1a_hex(all)}};
  return c;
}

}  // namespace pseudomod
