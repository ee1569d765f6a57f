#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "threefold/groebner.hpp"
#include "threefold/hilbert.hpp"
#include "threefold/ideal_ops.hpp"
#include "threefold/io.hpp"

using namespace threefold;

namespace {
const MonomialOrder grevlex = MonomialOrder::grevlex();
Poly P(const std::string& s, Ring r = fixtures::p3()) { return parse_poly(s, r); }
}  // namespace

TEST_CASE("colon basics") {
  Ring r = fixtures::p3();
  Ideal x2(r, {P("x0^2")});
  Ideal x(r, {P("x0")});
  CHECK(ideal_equal(colon(x2, x), x));

  // (I : <1>) = I
  Ideal one(r, {P("1")});
  Ideal I = fixtures::twisted_cubic();
  CHECK(ideal_equal(colon(I, one), I));

  // (I : I) is the unit ideal
  CHECK(is_unit_ideal(colon(I, I)));
}

TEST_CASE("saturation examples") {
  Ring r = fixtures::p3();
  Ideal I(r, {P("x0^2"), P("x0*x1"), P("x0*x2"), P("x0*x3")});
  Ideal sat = saturate_irrelevant(I);
  CHECK(ideal_equal(sat, Ideal(r, {P("x0")})));
  CHECK(sat.saturated == SatFlag::yes);

  // already saturated: twisted cubic
  Ideal tc = fixtures::twisted_cubic();
  CHECK(ideal_equal(saturate_irrelevant(tc), tc));

  // square of a line ideal is its own saturation
  Ideal line = fixtures::line_x0_x1();
  Ideal sq = ideal_power(line, 2);
  CHECK(ideal_equal(saturate_irrelevant(sq), fixtures::fat_line()));

  // fast path agrees with the iterated-colon definition on fixtures
  for (const Ideal& f :
       {fixtures::skew_lines(), fixtures::fat_line(), sq, tc, I}) {
    CHECK(ideal_equal(saturate_irrelevant(f), saturate(f, irrelevant_ideal(r))));
  }

  // idempotence
  Ideal s1 = saturate_irrelevant(I);
  CHECK(ideal_equal(saturate_irrelevant(s1), s1));
}

TEST_CASE("intersection examples") {
  Ring r = fixtures::p3();
  Ideal Ix(r, {P("x0")});
  Ideal Iy(r, {P("x1")});
  CHECK(ideal_equal(intersect(Ix, Iy), Ideal(r, {P("x0*x1")})));

  Ideal tc = fixtures::twisted_cubic();
  CHECK(ideal_equal(intersect(tc, tc), tc));

  // containment identities on a fixture pair
  Ideal line = fixtures::line_x0_x1();
  Ideal both = intersect(tc, line);
  CHECK(ideal_contains(tc, both));
  CHECK(ideal_contains(line, both));
  // ((I : J) · J) ⊆ I
  Ideal c = colon(tc, line);
  CHECK(ideal_contains(tc, ideal_product(c, line)));
  // I ⊆ saturate(I)
  CHECK(ideal_contains(saturate_irrelevant(tc), tc));
}

TEST_CASE("elimination examples") {
  // ring k[t, x, y, z] with z the homogenizer: eliminate t from
  // <t - x, t^2 - y z> and recover x^2 - y z
  Ring r4{kDefaultPrime, 4};
  Ideal I(r4, {parse_poly("x0 - x1", r4), parse_poly("x0^2 - x2*x3", r4)});
  Ideal E = eliminate(I, {0});
  Ring r3{kDefaultPrime, 3};
  CHECK(ideal_equal(E, Ideal(r3, {parse_poly("x0^2 - x1*x2", r3)})));

  // eliminating nothing returns I
  CHECK(ideal_equal(eliminate(I, {}), I));

  // graph of the twisted-cubic parametrization x_i = s^{3-i} t^i:
  // eliminating the parameters recovers the three quadrics
  Ring r6{kDefaultPrime, 6};
  std::vector<Poly> gens;
  std::vector<Poly> param{parse_poly("x0^3", r6), parse_poly("x0^2*x1", r6),
                          parse_poly("x0*x1^2", r6), parse_poly("x1^3", r6)};
  for (int i = 0; i < 4; ++i)
    gens.push_back(sub(Poly::variable(r6, 2 + i), param[i], grevlex));
  Ideal graph(r6, std::move(gens));
  Ideal img = eliminate(graph, {0, 1});
  CHECK(ideal_equal(img, fixtures::twisted_cubic()));
}

TEST_CASE("jacobian ideal examples") {
  Ring r = fixtures::p3();
  // smooth quadric: singular locus empty
  Ideal q(r, {P("x0*x3 - x1*x2")});
  Ideal sing = saturate_irrelevant(jacobian_ideal(q));
  CHECK(is_unit_ideal(sing));

  // cone x^2 + y^2 + z^2: vertex point V(x0,x1,x2)
  Ideal cone(r, {P("x0^2 + x1^2 + x2^2")});
  Ideal vertex = saturate_irrelevant(jacobian_ideal(cone));
  CHECK(ideal_equal(vertex, Ideal(r, {P("x0"), P("x1"), P("x2")})));

  // twisted cubic is smooth (full Jacobian criterion, codim 2)
  Ideal tc = fixtures::twisted_cubic();
  CHECK(is_unit_ideal(saturate_irrelevant(singular_locus_ideal(tc, 2))));
}

TEST_CASE("generic coordinate change") {
  Ideal tc = fixtures::twisted_cubic();
  // identity matrix: same ideal
  std::vector<std::vector<uint32_t>> id(4, std::vector<uint32_t>(4, 0));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  CHECK(ideal_equal(apply_linear_change(tc, id), tc));

  Ideal moved = generic_coordinate_change(tc, 99);
  // Hilbert data invariant
  CHECK(hilbert_data(moved) == hilbert_data(tc));
  // reduced grevlex basis generally differs
  const auto& a = groebner_basis(tc, grevlex);
  const auto& b = groebner_basis(moved, grevlex);
  bool same = a.size() == b.size();
  if (same)
    for (size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == b[i])) same = false;
  CHECK(!same);
}
