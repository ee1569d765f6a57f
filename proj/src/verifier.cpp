#include "threefold/verifier.hpp"

#include <algorithm>
#include <numeric>

#include "threefold/cf.hpp"
#include "threefold/errors.hpp"
#include "threefold/gf.hpp"
#include "threefold/groebner.hpp"
#include "threefold/ideal_ops.hpp"

namespace threefold {

namespace {
const MonomialOrder kGrevlex = MonomialOrder::grevlex();
}

LinearSystem assemble_system(const BaseLocusBundle& bundle) {
  int d = bundle.d;
  auto basis = graded_piece(bundle.IB, d - 1);
  if (basis.size() != 6)
    throw certificate_error("h0 mismatch", "h0(I_B(" + std::to_string(d - 1) + ")) = " +
                                               std::to_string(basis.size()) +
                                               ", expected 6");
  return LinearSystem{d - 1, std::move(basis)};
}

bool spannedness_check(const LinearSystem& sys, const BaseLocusBundle& bundle,
                       Ideal* excess) {
  Ideal base = saturate_irrelevant(Ideal(bundle.IB.ring, sys.basis));
  if (ideal_equal(base, bundle.IB)) return true;
  if (excess) *excess = base;
  return false;
}

std::pair<Ideal, HilbertData> characteristic_curve(const LinearSystem& sys,
                                                   const BaseLocusBundle& bundle,
                                                   uint64_t seed, int* retries) {
  const int d = bundle.d;
  const long long expect_deg = d, expect_pa = d - 3;
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (retries) *retries = attempt;
    Rng rng(derive_seed(seed, "charcurve", attempt));
    Poly s1 = random_combination(sys.basis, rng);
    Poly s2 = random_combination(sys.basis, rng);
    Ideal two(bundle.IB.ring, {s1, s2});
    Ideal gamma = saturate_irrelevant(saturate(two, bundle.IB));
    HilbertData hd = hilbert_data_raw(gamma);
    if (hd.dim == 1 && hd.degree == expect_deg && hd.pa == expect_pa)
      return {gamma, hd};
  }
  throw certificate_error("characteristic curve",
                          "no member pair yielded a (" + std::to_string(expect_deg) + "," +
                              std::to_string(expect_pa) + ") free curve");
}

std::vector<MapReport::Meet> char_meets(const Ideal& gamma, const BaseLocusBundle& bundle) {
  std::vector<MapReport::Meet> out;
  const bool doubled = bundle.case_id == CaseId::castelnuovo ||
                       bundle.case_id == CaseId::bordiga;
  if (bundle.IB1 && bundle.IB2) {
    out.push_back({"B1", doubled ? 2 : 1, length_of_intersection(gamma, *bundle.IB1)});
    out.push_back({"B2", 1, length_of_intersection(gamma, *bundle.IB2)});
  } else {
    out.push_back({"B", 1, length_of_intersection(gamma, bundle.IB)});
  }
  return out;
}

long long image_degree(const LinearSystem& sys, const BaseLocusBundle& bundle,
                       uint64_t seed, int* retries) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (retries) *retries = attempt;
    Rng rng(derive_seed(seed, "imagedeg", attempt));
    Poly s1 = random_combination(sys.basis, rng);
    Poly s2 = random_combination(sys.basis, rng);
    Poly s3 = random_combination(sys.basis, rng);
    Ideal three(bundle.IB.ring, {s1, s2, s3});
    Ideal resid = saturate_irrelevant(saturate(three, bundle.IB));
    HilbertData hd = hilbert_data_raw(resid);
    if (hd.dim == 0) return hd.degree;
  }
  throw certificate_error("image degree", "residual of three members not zero-dimensional");
}

std::pair<Ideal, HilbertData> sectional_curve(const LinearSystem& sys, const Ideal& gamma,
                                              const BaseLocusBundle& bundle, uint64_t seed,
                                              int* retries) {
  const uint32_t p = bundle.IB.ring.p;
  const int d = bundle.d;
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (retries) *retries = attempt;
    Rng rng(derive_seed(seed, "sectional", attempt));
    // graph of the map on Gamma in k[x0..x3, z, y0..y5]; z s(x) - 1 kills
    // the fibers over the base points Gamma ∩ B
    Ring big{p, 11};
    std::vector<Poly> gens;
    for (const auto& g : gamma.gens()) gens.push_back(shift_vars(g, big, 0));
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        Poly yi = Poly::variable(big, 5 + i), yj = Poly::variable(big, 5 + j);
        Poly m = sub(mul(yi, shift_vars(sys.basis[j], big, 0), kGrevlex),
                     mul(yj, shift_vars(sys.basis[i], big, 0), kGrevlex), kGrevlex);
        gens.push_back(m);
      }
    Poly member = random_combination(sys.basis, rng);
    Poly rab = sub(mul(Poly::variable(big, 4), shift_vars(member, big, 0), kGrevlex),
                   Poly::constant(big, 1), kGrevlex);
    gens.push_back(rab);
    Ideal graph(big, std::move(gens));
    Ideal image = eliminate(graph, {0, 1, 2, 3, 4});
    Ideal sat = saturate_irrelevant(image);
    HilbertData hd = hilbert_data_raw(sat);
    if (hd.dim == 1 && hd.degree == d && hd.pa == d - 3) return {sat, hd};
  }
  throw certificate_error("sectional curve", "image curve is not (d, d-3)");
}

namespace {

// substitute away the linear forms of a saturated ideal, re-expressing the
// rest in a ring with fewer variables
Ideal strip_linear_forms(Ideal I) {
  for (;;) {
    const auto& gb = groebner_basis(I, kGrevlex);
    const Poly* lin = nullptr;
    for (const auto& g : gb)
      if (g.homogeneous_degree() == 1) { lin = &g; break; }
    if (!lin) return I;
    // solve for the lead variable
    int var = -1;
    for (int i = 0; i < I.ring.n; ++i)
      if (lin->lm().e[i]) { var = i; break; }
    uint32_t c = lin->lc();
    Poly rest = sub(*lin, Poly::from_terms(I.ring, {{Monomial::var(var), c}}, kGrevlex),
                    kGrevlex);
    Poly image_var = scale(neg(rest), fp_inv(c, I.ring.p));
    // substitution images: var -> image_var, others unchanged, then drop var
    Ring small{I.ring.p, I.ring.n - 1};
    std::vector<Poly> images;
    for (int i = 0; i < I.ring.n; ++i) {
      if (i == var) {
        // re-express image_var in the small ring (it contains no `var`)
        Poly f(small);
        for (const auto& tm : image_var.t) {
          Term nt;
          nt.c = tm.c;
          nt.m.deg = tm.m.deg;
          for (int k = 0, w = 0; k < I.ring.n; ++k) {
            if (k == var) continue;
            nt.m.e[w++] = tm.m.e[k];
          }
          f.t.push_back(nt);
        }
        f.normalize(kGrevlex);
        images.push_back(f);
      } else {
        int w = i < var ? i : i - 1;
        images.push_back(Poly::variable(small, w));
      }
    }
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) {
      Poly h = substitute(g, images, small, kGrevlex);
      if (!h.is_zero()) gens.push_back(h);
    }
    I = Ideal(small, std::move(gens));
  }
}

}  // namespace

bool sectional_smoothness(const Ideal& curve) {
  Ideal I = strip_linear_forms(saturate_irrelevant(curve));
  HilbertData hd = hilbert_data_raw(I);
  if (hd.dim != 1)
    throw bad_arguments_error("sectional_smoothness: not a curve after stripping");
  int codim = I.ring.n - 2;
  Ideal sing = saturate_irrelevant(singular_locus_ideal(I, codim));
  return is_unit_ideal(sing);
}

namespace {

struct SectionPoints {
  // per part: the univariate eliminant factors and the u-coordinate map
  struct Orbit {
    FpPoly factor;
    FpPoly u_of_v;  // u = g(v)
    int mult;
    std::string label_prefix;
  };
  std::vector<Orbit> orbits;
  int total_degree = 0;
};

// Shape-position extraction of the points of a zero-dimensional ideal in
// three variables (already sectioned): returns the eliminant h(v) and the
// coordinate function u = g(v) on the chart x0 = 1.
bool shape_extract(const Ideal& section3, FpPoly& h, FpPoly& g) {
  const uint32_t p = section3.ring.p;
  Ring aff{p, 2};
  std::vector<Poly> affine;
  for (const auto& f : section3.gens()) {
    // substitute x0 = 1, rename (x1, x2) -> (u, v)
    Poly a(aff);
    for (const auto& tm : f.t) {
      Term nt;
      nt.c = tm.c;
      nt.m.e[0] = tm.m.e[1];
      nt.m.e[1] = tm.m.e[2];
      nt.m.deg = static_cast<uint16_t>(tm.m.e[1] + tm.m.e[2]);
      a.t.push_back(nt);
    }
    a.normalize(kGrevlex);
    if (!a.is_zero()) affine.push_back(a);
  }
  auto gb = buchberger(affine, MonomialOrder::lex());
  if (gb.size() != 2) return false;
  // ascending lex leads: gb[0] univariate in v, gb[1] with lead u
  const Poly& hv = gb[0];
  const Poly& ug = gb[1];
  for (const auto& tm : hv.t)
    if (tm.m.e[0]) return false;
  Monomial ulead = ug.lm();
  if (ulead.e[0] != 1 || ulead.e[1] != 0) return false;
  for (const auto& tm : ug.t)
    if (tm.m.e[0] > 1 || (tm.m.e[0] == 1 && tm.m.e[1] > 0)) return false;

  h.assign(hv.degree() + 1, 0);
  for (const auto& tm : hv.t) h[tm.m.e[1]] = tm.c;
  // ug = c*u + tail(v), monic by construction
  g.clear();
  for (const auto& tm : ug.t) {
    if (tm.m.e[0] == 1) continue;
    if (g.size() <= tm.m.e[1]) g.resize(tm.m.e[1] + 1, 0);
    g[tm.m.e[1]] = fp_neg(tm.c, p);
  }
  return true;
}

}  // namespace

SectionConfigReport section_cf_check(const BaseLocusBundle& bundle, uint64_t seed) {
  SectionConfigReport rep;
  const uint32_t p = bundle.IB.ring.p;

  CFSystem sys = CFSystem::CF1;
  // (part ideal, multiplicity, expected section length, label prefix)
  struct Part {
    const Ideal* ideal;
    int mult;
    int expect;
    std::string prefix;
  };
  std::vector<Part> parts;
  switch (bundle.case_id) {
    case CaseId::segre:
      rep.system = "none";
      rep.cf_pass = true;
      rep.notes.push_back(
          "plane section of B is a single simple point; no CF system applies");
      return rep;
    case CaseId::delpezzo:
      sys = CFSystem::CF1;
      parts.push_back({&bundle.IB, 1, 5, "x"});
      break;
    case CaseId::castelnuovo:
      sys = CFSystem::CF2;
      parts.push_back({&*bundle.IB1, 2, 1, "x"});
      parts.push_back({&*bundle.IB2, 1, 7, "y"});
      break;
    case CaseId::bordiga:
      sys = CFSystem::CF3p;
      parts.push_back({&*bundle.IB1, 2, 3, "x"});
      parts.push_back({&*bundle.IB2, 1, 7, "y"});
      break;
  }
  rep.system = cf_system_name(sys);

  for (int attempt = 0; attempt < 8; ++attempt) {
    rep.retries = attempt;
    uint64_t plane_seed = derive_seed(seed, "section-plane", attempt);
    // shared generic plane and shared in-plane coordinates for all parts
    auto m4 = random_invertible_matrix(4, p, derive_seed(plane_seed, "m4"));
    auto m3 = random_invertible_matrix(3, p, derive_seed(plane_seed, "m3"));

    SectionPoints pts;
    bool ok = true;
    for (const auto& part : parts) {
      Ideal moved = apply_linear_change(*part.ideal, m4);
      // substitute x3 = 0
      Ring r3{p, 3};
      std::vector<Poly> cut;
      for (const auto& f : moved.gens()) {
        Poly s3(r3);
        for (const auto& tm : f.t) {
          if (tm.m.e[3]) continue;
          Term nt;
          nt.c = tm.c;
          for (int i = 0; i < 3; ++i) nt.m.e[i] = tm.m.e[i];
          nt.m.deg = static_cast<uint16_t>(tm.m.e[0] + tm.m.e[1] + tm.m.e[2]);
          s3.t.push_back(nt);
        }
        s3.normalize(kGrevlex);
        if (!s3.is_zero()) cut.push_back(s3);
      }
      Ideal section = saturate_irrelevant(apply_linear_change(Ideal(r3, cut), m3));
      HilbertData hd = hilbert_data_raw(section);
      if (hd.dim != 0 || hd.degree != part.expect) { ok = false; break; }

      FpPoly h, g;
      if (!shape_extract(section, h, g) ||
          fppoly::deg(h) != part.expect ||
          !fppoly::is_squarefree(h, p)) {
        ok = false;
        break;
      }
      for (const auto& factor :
           fppoly::factor_squarefree(h, p, derive_seed(plane_seed, "factor"))) {
        pts.orbits.push_back({factor, g, part.mult, part.prefix});
        pts.total_degree += fppoly::deg(factor);
      }
    }
    if (!ok) continue;

    // the compositum degree
    int K = 1;
    for (const auto& o : pts.orbits) K = std::lcm(K, fppoly::deg(o.factor));
    rep.field_degree = K;
    GFField F{GFCtx::make(p, K, derive_seed(seed, "modulus"))};

    PlaneConfigT<GFField> config;
    config.F = F;
    config.system = sys;
    int xi = 0, yi = 0;
    for (const auto& o : pts.orbits) {
      GFElem root = find_root(o.factor, F, derive_seed(plane_seed, "root"));
      GFElem v = root;
      for (int j = 0; j < fppoly::deg(o.factor); ++j) {
        if (j > 0) v = F.frobenius(v);
        // u = g(v) with F_p coefficients
        GFElem u = F.zero();
        for (size_t i = o.u_of_v.size(); i-- > 0;) {
          u = F.mul(u, v);
          u = F.add(u, F.from_fp(o.u_of_v[i]));
        }
        CFPointT<GFField> pt;
        pt.x = {F.one(), u, v};
        pt.mult = o.mult;
        int& counter = o.mult == 2 ? xi : yi;
        pt.label = o.label_prefix + std::to_string(++counter);
        config.pts.push_back(std::move(pt));
      }
    }

    CFReport cf = check_cf(config);
    rep.cf_pass = cf.passed;
    rep.violations.clear();
    for (const auto& v : cf.violations) rep.violations.push_back(v.condition);
    rep.notes = cf.notes;
    rep.notes.push_back("section points over F_p^" + std::to_string(K));
    return rep;
  }
  throw certificate_error("section config",
                          "no generic plane split the section within the retry budget");
}

MapReport birationality_audit(const BaseLocusBundle& bundle, uint64_t seed, bool heavy) {
  MapReport rep;
  const int d = bundle.d;
  bool ok = true;

  LinearSystem sys;
  try {
    sys = assemble_system(bundle);
    rep.hypotheses.h0_dminus1 = 6;
  } catch (const std::exception& e) {
    rep.errors.push_back(e.what());
    rep.passed = false;
    return rep;
  }

  try {
    rep.hypotheses.spanned = spannedness_check(sys, bundle);
    ok &= rep.hypotheses.spanned;
  } catch (const std::exception& e) {
    rep.errors.push_back(e.what());
    ok = false;
  }

  rep.hypotheses.h0_dminus2 = graded_dim(bundle.IB, d - 2);
  ok &= rep.hypotheses.h0_dminus2 == 1;

  try {
    rep.section_cf = section_cf_check(bundle, derive_seed(seed, "cf"));
    rep.hypotheses.cf_pass = rep.section_cf.cf_pass;
    rep.retries += rep.section_cf.retries;
    ok &= rep.hypotheses.cf_pass;
  } catch (const std::exception& e) {
    rep.errors.push_back(e.what());
    ok = false;
  }

  try {
    int r1 = 0;
    auto [gamma, ghd] =
        characteristic_curve(sys, bundle, derive_seed(seed, "gamma"), &r1);
    rep.retries += r1;
    rep.char_curve = {ghd.degree, ghd.pa};
    rep.sectional_genus = static_cast<int>(ghd.pa);
    rep.meets = char_meets(gamma, bundle);
    long long lhs = static_cast<long long>(d - 1) * ghd.degree;
    long long rhs = d;
    for (const auto& m : rep.meets) rhs += m.multiplicity * m.length;
    rep.degree_identity = lhs == rhs;
    ok &= rep.degree_identity;

    int r2 = 0;
    rep.image_degree =
        static_cast<int>(image_degree(sys, bundle, derive_seed(seed, "imgdeg"), &r2));
    rep.retries += r2;
    ok &= rep.image_degree == d;
    ok &= rep.sectional_genus == d - 3;

    if (heavy) {
      int r3 = 0;
      auto [curve, chd] =
          sectional_curve(sys, gamma, bundle, derive_seed(seed, "slice"), &r3);
      rep.retries += r3;
      rep.sectional = {chd.degree, chd.pa};
      ok &= chd.degree == d && chd.pa == d - 3;
      rep.sectional_smooth = sectional_smoothness(curve);
      ok &= *rep.sectional_smooth;
    }
  } catch (const std::exception& e) {
    rep.errors.push_back(e.what());
    ok = false;
  }

  rep.passed = ok;
  return rep;
}

}  // namespace threefold
