#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "fixtures.hpp"
#include "threefold/groebner.hpp"
#include "threefold/io.hpp"

using namespace threefold;

namespace {
const MonomialOrder grevlex = MonomialOrder::grevlex();

Poly P(const std::string& s, Ring r = fixtures::p3()) { return parse_poly(s, r); }
}  // namespace

TEST_CASE("multivariate division basics") {
  std::vector<Poly> basis{P("x0")};
  CHECK(normal_form(P("x0^2"), basis, grevlex).is_zero());
  CHECK(normal_form(P("x0^2 + x1^2"), basis, grevlex) == P("x1^2"));

  // f - nf(f) lies in the ideal, and no monomial of nf is divisible by a lead
  Poly f = P("x0^3 + 5*x0*x1*x2 + 7*x3^3");
  std::vector<Poly> b2{P("x0*x1 - x2^2"), P("x0^2 - x3^2")};
  for (auto& g : b2) g.normalize(grevlex);
  Poly nf = normal_form(f, b2, grevlex);
  for (const auto& t : nf.t) {
    CHECK(!b2[0].lm().divides(t.m));
    CHECK(!b2[1].lm().divides(t.m));
  }
  std::vector<Poly> q;
  Poly rem = normal_form_with_quotients(f, b2, grevlex, q);
  Poly rebuilt = rem;
  for (size_t i = 0; i < b2.size(); ++i)
    rebuilt = add(rebuilt, mul(q[i], b2[i], grevlex), grevlex);
  CHECK(rebuilt == f);
}

TEST_CASE("normal form of generator combinations is zero") {
  Ideal I = fixtures::twisted_cubic();
  const auto& gb = groebner_basis(I, grevlex);
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    // random polynomial combination of the generators
    Poly f(I.ring);
    for (const auto& g : I.gens()) {
      Poly c = random_form(I.ring, static_cast<int>(rng.below(3)), rng);
      f = add(f, mul(c, g, grevlex), grevlex);
    }
    CHECK(normal_form(f, gb, grevlex).is_zero());
  }
}

TEST_CASE("groebner basis of a monomial-generated ideal") {
  Ideal I = fixtures::line_x0_x1();
  auto gb = groebner_basis(I, grevlex);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P("x1"));
  CHECK(gb[1] == P("x0"));
}

TEST_CASE("twisted cubic is its own reduced grevlex basis") {
  Ideal I = fixtures::twisted_cubic();
  auto gb = groebner_basis(I, grevlex);
  REQUIRE(gb.size() == 3);
  // monic normalization fixes the signs: leads are x1^2, x1*x2, x2^2
  std::vector<Poly> expected{P("x1^2 - x0*x2"), P("x1*x2 - x0*x3"), P("x2^2 - x1*x3")};
  for (auto& e : expected) e.normalize(grevlex);
  for (const auto& e : expected)
    CHECK(std::find(gb.begin(), gb.end(), e) != gb.end());

  // independent oracle: every pairwise S-polynomial reduces to zero
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      CHECK(normal_form(s_poly(gb[i], gb[j], grevlex), gb, grevlex).is_zero());
}

TEST_CASE("determinism and reduced-basis uniqueness") {
  Ideal I = fixtures::twisted_cubic();
  auto a = buchberger(I.gens(), grevlex);
  auto b = buchberger(I.gens(), grevlex);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  // shuffled generator order yields the identical reduced basis
  std::vector<Poly> shuffled{I.gens()[2], I.gens()[0], I.gens()[1]};
  auto c = buchberger(shuffled, grevlex);
  REQUIRE(a.size() == c.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == c[i]);

  // and a nontrivial input: random combinations still generate the same ideal
  Rng rng(7);
  std::vector<Poly> messy = I.gens();
  messy.push_back(add(mul(random_form(I.ring, 1, rng), I.gens()[0], grevlex),
                      I.gens()[1], grevlex));
  auto d = buchberger(messy, grevlex);
  REQUIRE(a.size() == d.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == d[i]);
}

TEST_CASE("membership: positive and negative instances per fixture") {
  Rng rng(2024);
  const uint32_t p = kDefaultPrime;
  struct Fixture {
    Ideal I;
    // a parameterized point of V(I) serving as the negative-instance oracle
    std::function<std::vector<uint32_t>(uint32_t)> point;
  };
  std::vector<Fixture> fixtures_with_points;
  fixtures_with_points.push_back(
      {fixtures::twisted_cubic(), [p](uint32_t t) {
         return std::vector<uint32_t>{1, t, fp_mul(t, t, p),
                                      fp_mul(fp_mul(t, t, p), t, p)};
       }});
  fixtures_with_points.push_back({fixtures::line_x0_x1(), [](uint32_t t) {
                                    return std::vector<uint32_t>{0, 0, 1, t};
                                  }});

  for (auto& [I, point] : fixtures_with_points) {
    // positives: constructed combinations
    for (int k = 0; k < 20; ++k) {
      Poly f(I.ring);
      for (const auto& g : I.gens())
        f = add(f, mul(random_form(I.ring, 1 + static_cast<int>(rng.below(2)), rng), g,
                       grevlex),
                grevlex);
      CHECK(contains(I, f));
    }
    // negatives: witnessed by a point of the curve where f does not vanish
    for (int k = 0; k < 20; ++k) {
      Poly f = random_form(I.ring, 2 + static_cast<int>(rng.below(2)), rng);
      std::vector<uint32_t> pt = point(rng.field_nonzero(p));
      if (evaluate(f, pt) == 0) continue;  // unlucky draw; skip
      CHECK(!contains(I, f));
    }
  }
}

TEST_CASE("generators and cached basis generate the same ideal") {
  // mutual normal-form reduction: each generator reduces to zero against
  // the basis, and the basis generates no more than the generators do
  Ideal I = fixtures::twisted_cubic();
  const auto& gb = groebner_basis(I, grevlex);
  for (const auto& g : I.gens()) CHECK(normal_form(g, gb, grevlex).is_zero());
  Ideal from_basis(I.ring, gb);
  CHECK(ideal_equal(I, from_basis));
}

TEST_CASE("groebner cache: concurrent readers, single writer") {
  Ideal I = fixtures::twisted_cubic();
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&I, &mismatches] {
      for (int k = 0; k < 20; ++k) {
        const auto& a = groebner_basis(I, grevlex);
        const auto& b = groebner_basis(I, MonomialOrder::lex());
        if (a.size() != 3 || b.empty()) ++mismatches;
      }
    });
  for (auto& t : workers) t.join();
  CHECK(mismatches == 0);
}

TEST_CASE("resource budget raises with pair count") {
  Ideal I = fixtures::twisted_cubic();
  GbOptions tiny;
  tiny.max_pairs = 1;
  bool threw = false;
  try {
    buchberger(I.gens(), grevlex, tiny);
  } catch (const resource_limit_error& e) {
    threw = true;
    CHECK(e.pairs_processed >= 1);
  }
  CHECK(threw);
}

TEST_CASE("ring mismatch is rejected") {
  Poly a = P("x0");
  Poly b = parse_poly("x0", Ring{kDefaultPrime, 5});
  CHECK_THROWS_AS((void)add(a, b, grevlex), ring_mismatch_error);
  CHECK_THROWS_AS((void)normal_form(a, {b}, grevlex), ring_mismatch_error);
}

TEST_CASE("ideal text format round trip") {
  Ideal I = fixtures::twisted_cubic();
  Ideal J = parse_ideal_string(format_ideal(I));
  CHECK(ideal_equal(I, J));
  CHECK_THROWS_AS(parse_ideal_string("ring p=32003 vars=4\nx9\n"), parse_error);
  CHECK_THROWS_AS(parse_ideal_string("no header\n"), parse_error);
}
