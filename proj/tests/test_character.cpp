#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "threefold/character.hpp"
#include "threefold/hilbert.hpp"
#include "threefold/ideal_ops.hpp"

using namespace threefold;

namespace {
NumericalCharacter chi(std::vector<long long> n) { return NumericalCharacter{std::move(n)}; }
}  // namespace

TEST_CASE("h-vector to character bijection on pinned values") {
  CHECK(character_from_hvector(HVector{{1, 2, 3, 4, 4, 2}}) == chi({6, 6, 5, 5}));
  CHECK(character_from_hvector(HVector{{1, 2, 3, 4, 5, 1}}) == chi({6, 5, 5, 5, 5}));
  CHECK(character_from_hvector(HVector{{1, 2}}) == chi({2, 2}));
  CHECK_THROWS_AS((void)character_from_hvector(HVector{{1, 1, 3}}), bad_arguments_error);
}

TEST_CASE("genus of a character") {
  CHECK(genus_of_character(chi({6, 5, 5, 5, 5})) == 30);
  CHECK(genus_of_character(chi({6, 6, 5, 5})) == 31);
  CHECK(genus_of_character(chi({2, 2})) == 0);
  CHECK(genus_of_character(chi({3, 3})) == 2);
}

TEST_CASE("connectedness table") {
  // the seven sigma=4 rows, with stated gap positions
  for (auto r : {0, 1, 2}) {
    auto rep = is_connected(chi({10 - r, 4 + r, 4, 4}));
    CHECK(!rep.connected);
    CHECK(rep.gap_after == 0);
  }
  auto b = is_connected(chi({7, 7, 4, 4}));
  CHECK(!b.connected);
  CHECK(b.gap_after == 1);
  auto c = is_connected(chi({8, 5, 5, 4}));
  CHECK(!c.connected);
  CHECK(c.gap_after == 0);
  auto d = is_connected(chi({7, 6, 5, 4}));
  CHECK(d.connected);
  auto e = is_connected(chi({6, 6, 6, 4}));
  CHECK(!e.connected);
  CHECK(e.gap_after == 2);
  auto f = is_connected(chi({7, 5, 5, 5}));
  CHECK(!f.connected);
  CHECK(f.gap_after == 0);
  auto g = is_connected(chi({6, 6, 5, 5}));
  CHECK(g.connected);
}

TEST_CASE("round trip through the h-vector on all small characters") {
  auto all = enumerate_characters(6, 20);
  CHECK(all.size() > 50);
  for (const auto& c : all) {
    HVector h = hvector_from_character(c);
    CHECK(h.admissible());
    CHECK(character_from_hvector(h) == c);
    // degree identity: sum (n_i - i) = sum h(j)
    long long deg = 0;
    for (size_t i = 0; i < c.n.size(); ++i) deg += c.n[i] - static_cast<long long>(i);
    CHECK(deg == h.total());
  }
}

TEST_CASE("plane sections and characters of fixture curves") {
  Ideal tc = fixtures::twisted_cubic();
  Ideal sec = plane_section(tc, 21);
  CHECK(hilbert_data_raw(sec).degree == 3);
  HVector h = h_vector(sec);
  CHECK(h.h == std::vector<long long>{1, 2});
  CHECK(character_of_curve(tc, 21) == chi({2, 2}));

  // fat line: its section is the first infinitesimal neighbourhood of a
  // plane point, h = (1, 2)
  HVector hf = h_vector(plane_section(fixtures::fat_line(), 3));
  CHECK(hf.total() == 3);
  CHECK(hf.h == std::vector<long long>{1, 2});

  // sigma equals both max h and the least k with sections through the points
  Ideal sec2 = plane_section(tc, 4);
  long long sigma = *std::max_element(h.h.begin(), h.h.end());
  long long least = -1;
  for (int k = 0; k < 6 && least < 0; ++k)
    if (graded_dim(sec2, k) > 0) least = k;
  CHECK(sigma == least);
}

TEST_CASE("five general points have h-vector (1,2,2)") {
  // five seeded points in the plane via the section of a quintic-free trick:
  // build the ideal of 5 explicit points in P^2 directly
  Ring r3{kDefaultPrime, 3};
  Rng rng(99);
  std::vector<Ideal> pts;
  Ideal acc(r3, {Poly::constant(r3, 1)});
  for (int i = 0; i < 5; ++i) {
    uint32_t a = rng.field(kDefaultPrime), b = rng.field(kDefaultPrime);
    // point (1 : a : b) = V(x1 - a x0, x2 - b x0)
    std::vector<Term> t1{{Monomial::var(1), 1}, {Monomial::var(0), fp_neg(a, kDefaultPrime)}};
    std::vector<Term> t2{{Monomial::var(2), 1}, {Monomial::var(0), fp_neg(b, kDefaultPrime)}};
    Ideal pt(r3, {Poly::from_terms(r3, t1, MonomialOrder::grevlex()),
                  Poly::from_terms(r3, t2, MonomialOrder::grevlex())});
    acc = (i == 0) ? pt : intersect(acc, pt);
  }
  HVector h = h_vector(acc);
  CHECK(h.h == std::vector<long long>{1, 2, 2});
  CHECK(character_from_hvector(h) == chi({3, 3}));
}
