#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "threefold/hilbert.hpp"
#include "threefold/ideal_ops.hpp"
#include "threefold/io.hpp"

using namespace threefold;

TEST_CASE("hilbert data of the whole space") {
  Ring r = fixtures::p3();
  Ideal zero(r, {});
  HilbertData hd = hilbert_data(zero);
  CHECK(hd.dim == 3);
  CHECK(hd.degree == 1);
  for (int t = 0; t < 6; ++t) CHECK(hd.hf(t) == binomial_ll(t + 3, 3));
  CHECK(hd.stabilization_degree == 0);
}

TEST_CASE("curves: twisted cubic, skew lines, fat line, line+point") {
  Ideal tc = fixtures::twisted_cubic();
  HilbertData a = hilbert_data(tc);
  CHECK(a.dim == 1);
  CHECK(a.degree == 3);
  CHECK(a.pa == 0);
  CHECK(a.hf(2) == 7);

  HilbertData b = hilbert_data(fixtures::skew_lines());
  CHECK(b.dim == 1);
  CHECK(b.degree == 2);
  CHECK(b.pa == -1);

  HilbertData c = hilbert_data(fixtures::fat_line());
  CHECK(c.dim == 1);
  CHECK(c.degree == 3);
  CHECK(c.pa == 0);
  for (int t = 1; t < 6; ++t) CHECK(c.hf(t) == 3 * t + 1);

  Ideal lp = intersect(fixtures::line_x0_x1(), fixtures::point_0100());
  HilbertData d = hilbert_data(lp);
  CHECK(d.dim == 1);
  CHECK(d.degree == 1);
  // HP(t) = t + 2 = (t+1) + 1
  CHECK(d.hp(0) == 2);
  CHECK(d.hp(5) == 7);
  CHECK(d.pa == -1);
}

TEST_CASE("empty scheme") {
  Ring r = fixtures::p3();
  Ideal irr = irrelevant_ideal(r);
  HilbertData hd = hilbert_data(ideal_power(irr, 2));
  // saturation of an irrelevant-primary ideal is the unit ideal: dim -1
  CHECK(hd.dim == -1);
  CHECK(hd.degree == 0);
}

TEST_CASE("graded_dim") {
  Ideal lp = intersect(fixtures::line_x0_x1(), fixtures::point_0100());
  CHECK(graded_dim(lp, 1) == 1);  // the unique plane through line and point
  CHECK(graded_dim(lp, 2) == 6);
  CHECK(graded_dim(lp, -1) == 0);
  CHECK(graded_dim(fixtures::twisted_cubic(), 2) == 3);

  // identity: graded_dim + HF = C(k+3,3) on saturated inputs
  Ideal tc = fixtures::twisted_cubic();
  HilbertData hd = hilbert_data(tc);
  for (int k = 0; k < 8; ++k)
    CHECK(graded_dim(tc, k) + hd.hf(k) == binomial_ll(k + 3, 3));

  // graded_piece dimension agrees with the Hilbert-function count
  for (int k = 2; k < 6; ++k)
    CHECK(static_cast<long long>(graded_piece(tc, k).size()) == graded_dim(tc, k));
}

TEST_CASE("length of intersection") {
  // two skew lines: empty intersection reports 0
  Ideal l1 = fixtures::line_x0_x1();
  Ideal l2 = parse_ideal_string("ring p=32003 vars=4\nx2\nx3\n");
  CHECK(length_of_intersection(l1, l2) == 0);

  // a line and a point on it
  Ideal pt = parse_ideal_string("ring p=32003 vars=4\nx0\nx1\nx2\n");
  CHECK(length_of_intersection(l1, pt) == 1);

  // two meeting lines
  Ideal l3 = parse_ideal_string("ring p=32003 vars=4\nx0\nx2\n");
  CHECK(length_of_intersection(l1, l3) == 1);

  // positive-dimensional intersection
  CHECK_THROWS_AS((void)length_of_intersection(l1, l1), positive_dimensional_error);
}

TEST_CASE("acm test") {
  CHECK(acm_test(fixtures::twisted_cubic()));
  CHECK(!acm_test(fixtures::skew_lines()));
  CHECK_THROWS_AS((void)acm_test(fixtures::point_0100()), bad_arguments_error);
}

TEST_CASE("h1 of twists of the structure sheaf") {
  // rational curve: h^1(O) = 0
  CHECK(h1_structure_sheaf(fixtures::twisted_cubic(), 0) == 0);
  CHECK(h1_structure_sheaf(fixtures::twisted_cubic(), 1) == 0);
  CHECK_THROWS_AS((void)h1_structure_sheaf(fixtures::skew_lines(), 0), not_acm_error);
}

TEST_CASE("hyperplane section lengths") {
  Ideal tc = fixtures::twisted_cubic();
  Ideal sec = hyperplane_section(tc, 5);
  HilbertData hd = hilbert_data_raw(sec);
  CHECK(hd.dim == 0);
  CHECK(hd.degree == 3);

  // line ∪ point: the generic plane meets only the line
  Ideal lp = intersect(fixtures::line_x0_x1(), fixtures::point_0100());
  Ideal sec2 = hyperplane_section(lp, 5);
  CHECK(hilbert_data_raw(sec2).degree == 1);
}
