#include "doctest.h"
#include "oracles.hpp"
#include "pseudomod/gma.hpp"

using namespace pseudomod;

namespace {

MarkedGroup all_marked(const FiniteGroup& g) { return mark_group(g, g.generators(), g.generators()); }

Mat2 mat(const FiniteRing& r, Int a, Int b, Int c, Int d) {
  return {scalar(r, a), scalar(r, b), scalar(r, c), scalar(r, d)};
}

FiniteRing truncated(Int p, int n) { return extension(prime_field(p), std::vector<Vec>(n, Vec{0})).ring; }

void check_ch_exhaustively(const ChAlgebra& e) {
  for (const auto& x : enumerate_elements(e.alg, 100000)) REQUIRE(e.alg.is_zero(e.ch_residual(x)));
}

GmaAlgebra gma_from_split(const ChQuotient& q, const Pseudorep2& d) {
  auto split = residual_split(d);
  REQUIRE(split.supported);
  REQUIRE(split.multiplicity_free);
  auto lift = lift_idempotents(q.ch, split.chi1, split.chi2);
  return gma_decompose(q.ch, lift.e1, lift.e2);
}

GmaAlgebra gma_from_element(const ChAlgebra& e) {
  auto s = find_splitting_element(e);
  REQUIRE(s.has_value());
  auto lift = lift_idempotents_from_element(e, e.group_images[s->group_element], s->lambda1, s->lambda2);
  return gma_decompose(e, lift.e1, lift.e2);
}

}  // namespace

TEST_CASE("cayley-hamilton quotient of a split abelian law is two copies of the base") {
  auto f5 = prime_field(5);
  auto g = all_marked(cyclic_group(4));
  auto chi1 = character_from_generators(f5, g.group, "a", {scalar(f5, 2)});
  auto chi2 = character_from_generators(f5, g.group, "b", {scalar(f5, 3)});
  auto d = psi_of_characters(f5, g, chi1, chi2);
  auto q = ch_quotient(group_algebra(f5, g.group), d);
  CHECK(q.ch.alg.log_size() == 2);
  CHECK(check_ch_algebra(q.ch, 1, 100).empty());
  CHECK(structure_map_injective(q.ch));
  check_ch_exhaustively(q.ch);

  auto gma = gma_from_split(q, d);
  CHECK(check_gma(gma).empty());
  CHECK(gma.b_gens.empty());
  CHECK(gma.c_gens.empty());
  CHECK(q.ch.alg.equal(q.ch.alg.add(gma.e1, gma.e2), q.ch.alg.one()));
  auto red = reducibility_ideal(gma);
  CHECK(is_zero_ideal(f5, red.ideal));
  CHECK(red.certificate_ok);
  for (const auto& c : coordinate_maps(gma)) {
    CHECK(q.ch.alg.is_zero(c.b));
    CHECK(q.ch.alg.is_zero(c.c));
  }
}

TEST_CASE("cayley-hamilton quotient of the standard S3 law is a full matrix algebra") {
  auto f7 = prime_field(7);
  auto s3 = symmetric_group_s3();
  auto rho = matrix_rep(f7, all_marked(s3), {mat(f7, 0, 1, 1, 0), mat(f7, 0, -1, 1, -1)});
  auto d = psi_of_rep(rho);
  auto q = ch_quotient(group_algebra(f7, s3), d);
  CHECK(q.ch.alg.log_size() == 4);
  CHECK_FALSE(q.ch.alg.is_commutative());
  CHECK(check_ch_algebra(q.ch, 1, 100).empty());
  check_ch_exhaustively(q.ch);

  // the induced map to matrices is an algebra isomorphism: products of group images match
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q.ch.alg.equal(q.ch.alg.mul(q.ch.group_images[a], q.ch.group_images[b]), q.ch.group_images[s3.mul(a, b)]));

  auto gma = gma_from_element(q.ch);
  CHECK(check_gma(gma).empty());
  CHECK(gma.b_gens.size() == 1);
  CHECK(gma.c_gens.size() == 1);
  auto red = reducibility_ideal(gma);
  CHECK(is_unit_ideal(f7, red.ideal));
  bool off_diagonal = false;
  for (const auto& c : coordinate_maps(gma)) off_diagonal |= !q.ch.alg.is_zero(c.b);
  CHECK(off_diagonal);
  auto id = coordinates(gma, q.ch.group_images[0]);
  CHECK(f7.equal(id.a, f7.one()));
  CHECK(f7.equal(id.d, f7.one()));
  CHECK(q.ch.alg.is_zero(id.b));
  CHECK(q.ch.alg.is_zero(id.c));
}

TEST_CASE("trivial group gives the base ring back") {
  auto r = zmod_ring(5, 2);
  auto g = all_marked(cyclic_group(1));
  auto triv = trivial_character(r, g.group);
  auto q = ch_quotient(group_algebra(r, g.group), psi_of_characters(r, g, triv, triv));
  CHECK(q.ch.alg.log_size() == r.log_size());
  CHECK(check_ch_algebra(q.ch, 1, 20).empty());
}

TEST_CASE("dihedral group of order 8: off-diagonal pairing detects irreducibility") {
  auto f5 = prime_field(5);
  auto d4 = dihedral_group(4);
  auto marked = all_marked(d4);
  auto irr = psi_of_rep(matrix_rep(f5, marked, {mat(f5, 0, -1, 1, 0), mat(f5, 1, 0, 0, -1)}));
  auto q_irr = ch_quotient(group_algebra(f5, d4), irr);
  CHECK(check_ch_algebra(q_irr.ch, 3, 100).empty());
  auto g_irr = gma_from_element(q_irr.ch);
  CHECK(check_gma(g_irr).empty());
  REQUIRE(g_irr.b_gens.size() == 1);
  REQUIRE(g_irr.c_gens.size() == 1);
  CHECK_FALSE(f5.is_zero(g_irr.m[0][0]));

  auto red_rep = psi_of_rep(matrix_rep(f5, marked, {mat(f5, 1, 0, 0, -1), mat(f5, 1, 0, 0, 1)}));
  auto q_red = ch_quotient(group_algebra(f5, d4), red_rep);
  auto g_red = gma_from_element(q_red.ch);
  CHECK(check_gma(g_red).empty());
  bool pairing_zero = true;
  for (const auto& row : g_red.m)
    for (const auto& v : row) pairing_zero &= f5.is_zero(v);
  CHECK(pairing_zero);
  CHECK(is_zero_ideal(f5, reducibility_ideal(g_red).ideal));
}

TEST_CASE("synthetic matrix algebras") {
  auto a = truncated(5, 3);
  auto t = extension(prime_field(5), std::vector<Vec>(3, Vec{0})).x;

  auto full = synthetic_gma_algebra(a, a.one());
  CHECK(check_ch_algebra(full, 4, 100).empty());
  Vec e11 = synthetic_e11(full);
  auto g = gma_decompose(full, e11, full.alg.sub(full.alg.one(), e11));
  CHECK(check_gma(g).empty());
  REQUIRE(g.m.size() == 1);
  CHECK(a.equal(g.m[0][0], a.one()) == true);
  CHECK(is_unit_ideal(a, reducibility_ideal(g).ideal));

  auto twisted = synthetic_gma_algebra(a, t);
  Vec f11 = synthetic_e11(twisted);
  auto gt = gma_decompose(twisted, f11, twisted.alg.sub(twisted.alg.one(), f11));
  CHECK(check_gma(gt).empty());
  auto red = reducibility_ideal(gt);
  CHECK(red.ideal == ideal_closure(a, {t}));
  CHECK(red.certificate_ok);
  CHECK(verify_reducibility_certificate(gt, red).empty());
  CHECK(red.quotient.log_size() == 1);

  Rng rng(31);
  auto elems = enumerate_elements(a, 1000);
  for (int trial = 0; trial < 50; ++trial) {
    auto pick = [&]() { return elems[rng.below(static_cast<Int>(elems.size()))]; };
    Vec x = synthetic_element(twisted, pick(), pick(), pick(), pick());
    CHECK(twisted.alg.is_zero(twisted.ch_residual(x)));
    auto c = coordinates(gt, x);
    CHECK(twisted.alg.equal(reassemble(gt, c), x));
    // trace and determinant are read off the coordinates
    CHECK(a.equal(twisted.trace(x), a.add(c.a, c.d)));
  }
}

TEST_CASE("newton iteration converges within the nilpotency class") {
  auto a = truncated(5, 2);
  auto t = extension(prime_field(5), std::vector<Vec>(2, Vec{0})).x;
  auto e = synthetic_gma_algebra(a, a.one());
  CHECK(trace_radical_class(e) == 2);
  Rng rng(32);
  auto elems = enumerate_elements(a, 100);
  for (int trial = 0; trial < 40; ++trial) {
    auto pick = [&]() { return a.mul(t, elems[rng.below(static_cast<Int>(elems.size()))]); };
    Vec noise = synthetic_element(e, pick(), pick(), pick(), pick());
    Vec x = e.alg.add(synthetic_e11(e), noise);
    int iterations = 0;
    Vec idem = newton_idempotent(e.alg, x, 10, &iterations);
    CHECK(e.alg.equal(e.alg.mul(idem, idem), idem));
    CHECK(iterations <= 2);
    CHECK(a.equal(e.trace(idem), a.one()));
  }
}

TEST_CASE("lifted idempotents over a non-reduced base") {
  auto a = truncated(5, 2);
  auto t = extension(prime_field(5), std::vector<Vec>(2, Vec{0})).x;
  auto g = all_marked(cyclic_group(4));
  // upper triangular lift of diag(2, 3) with a t in the corner
  auto rho = matrix_rep(a, g, {{scalar(a, 2), t, a.zero(), scalar(a, 3)}});
  auto d = psi_of_rep(rho);
  auto q = ch_quotient(group_algebra(a, g.group), d);
  CHECK(check_ch_algebra(q.ch, 5, 100).empty());
  check_ch_exhaustively(q.ch);
  auto split = residual_split(d);
  auto lift = lift_idempotents(q.ch, split.chi1, split.chi2);
  CHECK(lift.iterations <= lift.nilpotency_class);
  CHECK(q.ch.alg.equal(q.ch.alg.mul(lift.e1, lift.e1), lift.e1));
  CHECK(q.ch.alg.is_zero(q.ch.alg.mul(lift.e1, lift.e2)));
  auto gma = gma_decompose(q.ch, lift.e1, lift.e2);
  CHECK(check_gma(gma).empty());
  auto red = reducibility_ideal(gma);
  CHECK(red.certificate_ok);
  CHECK(verify_reducibility_minimality(gma, red, g.group, 100000).empty());
}
