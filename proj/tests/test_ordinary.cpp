#include "doctest.h"
#include "oracles.hpp"
#include "pseudomod/gma.hpp"
#include "pseudomod/ordinary.hpp"

using namespace pseudomod;

namespace {

Mat2 mat(const FiniteRing& r, Int a, Int b, Int c, Int d) {
  return {scalar(r, a), scalar(r, b), scalar(r, c), scalar(r, d)};
}

struct DiagonalCase {
  FiniteRing f = prime_field(5);
  MarkedGroup g = mark_group(cyclic_group(4), {1}, {1});
  Character kappa = character_from_generators(f, g.group, "kappa", {scalar(f, 2)});
  Character kappa_inv = inverse_character(f, kappa);
  Character other = trivial_character(f, g.group);
};

Pseudorep2 s3_law(const FiniteRing& r, MarkedGroup& marked) {
  auto s3 = symmetric_group_s3();
  marked = mark_group(s3, s3.generators(), {s3.generators()[1]});
  return psi_of_rep(matrix_rep(r, marked, {mat(r, 0, 1, 1, 0), mat(r, 0, -1, 1, -1)}));
}

/// Number of valid laws over the dual numbers lifting dbar, by enumerating every value change.
std::size_t count_dual_lifts(const Pseudorep2& dbar) {
  const auto& k = dbar.ring;
  auto ext = extension(k, {k.zero(), k.zero()});
  const Int p = k.zmod().prime();
  const int n = dbar.group.group.order();
  std::vector<Int> delta(2 * n, 0);
  std::size_t valid = 0;
  while (true) {
    Pseudorep2 d{ext.ring, dbar.group, {}, {}};
    for (int g = 0; g < n; ++g) {
      Vec t = ext.inclusion.apply(dbar.trace[g]);
      Vec e = ext.inclusion.apply(dbar.det[g]);
      d.trace.push_back(ext.ring.add(t, ext.ring.mul(scalar(ext.ring, delta[2 * g]), ext.x)));
      d.det.push_back(ext.ring.add(e, ext.ring.mul(scalar(ext.ring, delta[2 * g + 1]), ext.x)));
    }
    valid += validate_pseudorep(d).ok;
    int i = 0;
    while (i < 2 * n && ++delta[i] == p) delta[i++] = 0;
    if (i == 2 * n) break;
  }
  return valid;
}

}  // namespace

TEST_CASE("diagonal law with the kappa side first is ordinary") {
  DiagonalCase c;
  auto d = psi_of_characters(c.f, c.g, c.kappa_inv, c.other);
  auto dec = is_ordinary_psrep(d, c.kappa);
  CHECK(dec.verdict == Verdict::Ordinary);
  REQUIRE(dec.context.has_value());
  CHECK(is_ordinary_rep(*dec.context).ok);
  REQUIRE(dec.quotient.has_value());
  CHECK(is_zero_ideal(c.f, dec.quotient->j_base));
  CHECK_FALSE(dec.quotient->collapsed);
  CHECK(dec.quotient->injective);
  CHECK(dec.quotient->e_ord.alg.log_size() == dec.context->gma.ch.alg.log_size());
  CHECK(check_ch_algebra(dec.quotient->e_ord, 1, 50).empty());

  // the order of the characters in the literal does not matter: e1 is labeled by kappa
  auto swapped = psi_of_characters(c.f, c.g, c.other, c.kappa_inv);
  CHECK(is_ordinary_psrep(swapped, c.kappa).verdict == Verdict::Ordinary);
}

TEST_CASE("forcing e1 onto the wrong side fails on the diagonal coordinate") {
  DiagonalCase c;
  auto d = psi_of_characters(c.f, c.g, c.kappa_inv, c.other);
  auto split = residual_split(d);
  auto label = label_e1(d, split, c.kappa, std::nullopt);
  REQUIRE(label.has_value());
  E1Label wrong{1 - label->index, "explicit"};
  auto ctx = build_context(d, c.kappa, split, wrong);
  auto w = is_ordinary_rep(ctx);
  CHECK_FALSE(w.ok);
  CHECK(w.coordinate == "rho11");
  CHECK(std::binary_search(ctx.group.ip.begin(), ctx.group.ip.end(), w.g));
}

TEST_CASE("no character matching kappa inverse on inertia means not ordinary") {
  DiagonalCase c;
  auto chi = character_from_generators(c.f, c.g.group, "chi", {scalar(c.f, 4)});
  auto d = psi_of_characters(c.f, c.g, chi, c.other);
  auto dec = is_ordinary_psrep(d, c.kappa);
  CHECK(dec.verdict == Verdict::NotOrdinary);
  CHECK_FALSE(label_e1(d, residual_split(d), c.kappa, std::nullopt).has_value());
}

TEST_CASE("irreducible S3 law collapses the ordinary quotient") {
  auto f7 = prime_field(7);
  MarkedGroup marked = mark_group(symmetric_group_s3(), {}, {});
  auto d = s3_law(f7, marked);
  auto kappa = trivial_character(f7, marked.group);
  CHECK(is_ordinary_psrep(d, kappa).verdict == Verdict::Unsupported);

  auto split = residual_split(d);
  CHECK_FALSE(split.supported);
  auto ctx = build_context(d, kappa, split, E1Label{0, "splitting element"});
  CHECK(check_gma(ctx.gma).empty());
  auto w = is_ordinary_rep(ctx);
  CHECK_FALSE(w.ok);
  CHECK(std::binary_search(ctx.group.dp.begin(), ctx.group.dp.end(), w.g));
  auto oq = ordinary_quotient(ctx);
  CHECK(is_unit_ideal(f7, oq.j_base));
  CHECK(oq.collapsed);
  CHECK_FALSE(oq.collapse_stage.empty());
  for (const auto& gen : oq.j_star_generators) CHECK_FALSE(gen.provenance.empty());

  auto red = reducible_ordinary_quotient(ctx, oq);
  CHECK(is_unit_ideal(f7, red.base_ideal));
}

TEST_CASE("reducible ordinary quotient of an ordinary diagonal law changes nothing") {
  DiagonalCase c;
  auto d = psi_of_characters(c.f, c.g, c.kappa_inv, c.other);
  auto dec = is_ordinary_psrep(d, c.kappa);
  REQUIRE(dec.quotient.has_value());
  auto red = reducible_ordinary_quotient(*dec.context, *dec.quotient);
  CHECK(is_zero_ideal(c.f, red.base_ideal));
  CHECK(red.equals_ord_quotient);
  CHECK(red.maps_onto_ord_quotient);
  CHECK(red.certificate_failure.empty());
}

TEST_CASE("ordinarity over a non-reduced base") {
  // a character congruent to kappa inverse modulo t
  auto ext = extension(prime_field(5), {Vec{0}, Vec{0}});
  const auto& a = ext.ring;
  auto g = mark_group(cyclic_group(5), {1}, {1});
  auto kappa = trivial_character(a, g.group);
  auto deformed = character_from_generators(a, g.group, "chi", {a.add(a.one(), ext.x)});
  REQUIRE(character_check(a, g.group, deformed).ok);
  // residually both characters are trivial, so no split is multiplicity free
  auto d = psi_of_characters(a, g, kappa, deformed);
  CHECK(is_ordinary_psrep(d, kappa).verdict == Verdict::Unsupported);

  auto c4 = mark_group(cyclic_group(4), {1}, {1});
  auto k4 = character_from_generators(a, c4.group, "kappa", {scalar(a, 2)});
  auto k4_inv = inverse_character(a, k4);
  auto lifted_other = character_from_generators(a, c4.group, "chi", {scalar(a, 1)});
  auto ord = psi_of_characters(a, c4, k4_inv, lifted_other);
  CHECK(is_ordinary_psrep(ord, k4).verdict == Verdict::Ordinary);
  auto bad = character_from_generators(a, c4.group, "bad", {scalar(a, 4)});
  CHECK(is_ordinary_psrep(psi_of_characters(a, c4, bad, lifted_other), k4).verdict == Verdict::NotOrdinary);
}

TEST_CASE("first-order counts") {
  for (Int p : {3, 5, 7}) {
    CAPTURE(p);
    auto f = prime_field(p);
    auto g = mark_group(cyclic_group(2), {1}, {1});
    auto triv = trivial_character(f, g.group);
    auto sign = character_from_generators(f, g.group, "sign", {scalar(f, -1)});
    auto dbar = psi_of_characters(f, g, triv, sign);
    auto all = ordinary_tangent_count(dbar, triv, std::nullopt, TangentConstraint::All, 100000);
    CHECK(all.accepted == count_dual_lifts(dbar));
    CHECK(all.additive_closed);
    auto ord = ordinary_tangent_count(dbar, triv, std::nullopt, TangentConstraint::Ordinary, 100000);
    auto red = ordinary_tangent_count(dbar, triv, std::nullopt, TangentConstraint::ReducibleOrdinary, 100000);
    CHECK(ord.additive_closed);
    CHECK(red.additive_closed);
    CHECK(ord.fp_dimension <= all.fp_dimension);
    CHECK(red.fp_dimension <= ord.fp_dimension);
  }

  auto f5 = prime_field(5);
  auto c5 = mark_group(cyclic_group(5), {1}, {1});
  auto triv = trivial_character(f5, c5.group);
  CHECK_THROWS_AS(ordinary_tangent_count(psi_of_characters(f5, c5, triv, triv), triv, std::nullopt,
                                         TangentConstraint::All, 1),
                  BudgetExceeded);
  CHECK_THROWS_AS(ordinary_tangent_count(psi_of_characters(zmod_ring(5, 2), mark_group(cyclic_group(2), {1}, {1}),
                                                           trivial_character(zmod_ring(5, 2), cyclic_group(2)),
                                                           trivial_character(zmod_ring(5, 2), cyclic_group(2))),
                                         trivial_character(zmod_ring(5, 2), cyclic_group(2)), std::nullopt,
                                         TangentConstraint::All, 1000),
                  InputError);
  CHECK(constraint_name(TangentConstraint::ReducibleOrdinary) == "reducible-ordinary");
  CHECK(verdict_name(Verdict::NotOrdinary) != verdict_name(Verdict::Ordinary));
}
