#include "threefold/builders.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "threefold/character.hpp"
#include "threefold/errors.hpp"
#include "threefold/groebner.hpp"
#include "threefold/ideal_ops.hpp"
#include "threefold/io.hpp"
#include "threefold/linalg.hpp"

namespace threefold {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Records named certificates; a mismatch aborts the attempt so the builder
// can retry with a fresh derived seed.
struct CertRecorder {
  std::vector<Certificate>* out;

  void require(const std::string& name, long long expected, long long actual) {
    bool ok = expected == actual;
    out->push_back({name, std::to_string(expected), std::to_string(actual), ok});
    if (!ok)
      throw certificate_error(name, "expected " + std::to_string(expected) + ", got " +
                                        std::to_string(actual));
  }
  void require_flag(const std::string& name, bool ok, const std::string& detail = "") {
    out->push_back({name, "true", ok ? "true" : "false", ok});
    if (!ok) throw certificate_error(name, detail.empty() ? "failed" : detail);
  }
};

}  // namespace

std::string case_name(CaseId c) {
  switch (c) {
    case CaseId::segre: return "segre";
    case CaseId::delpezzo: return "delpezzo";
    case CaseId::castelnuovo: return "castelnuovo";
    case CaseId::bordiga: return "bordiga";
  }
  return "?";
}

CaseId case_from_name(const std::string& name) {
  if (name == "segre") return CaseId::segre;
  if (name == "delpezzo") return CaseId::delpezzo;
  if (name == "castelnuovo") return CaseId::castelnuovo;
  if (name == "bordiga") return CaseId::bordiga;
  throw bad_arguments_error("unknown case '" + name +
                            "' (expected segre|delpezzo|castelnuovo|bordiga)");
}

int case_degree(CaseId c) {
  switch (c) {
    case CaseId::segre: return 3;
    case CaseId::delpezzo: return 4;
    case CaseId::castelnuovo: return 5;
    case CaseId::bordiga: return 6;
  }
  return 0;
}

Poly random_combination(const std::vector<Poly>& basis, Rng& rng) {
  if (basis.empty()) throw bad_arguments_error("random_combination: empty basis");
  Poly acc(basis[0].ring);
  while (acc.is_zero()) {
    for (const auto& b : basis)
      acc = add(acc, scale(b, rng.field(basis[0].ring.p)), kGrevlex);
  }
  return acc;
}

std::pair<Ideal, LinkageCertificate> link(const Poly& f1, const Poly& f2, const Ideal& I) {
  require_same_ring(f1.ring, I.ring);
  require_same_ring(f2.ring, I.ring);
  if (!contains(I, f1) || !contains(I, f2))
    throw bad_arguments_error("link: the complete intersection does not contain V(I)");
  Ideal ci(I.ring, {f1, f2});
  HilbertData ci_hd = hilbert_data_raw(ci);
  if (ci_hd.dim != I.ring.n - 3)
    throw bad_arguments_error("link: (f1, f2) is not a complete intersection of codim 2");

  HilbertData in_hd = hilbert_data(I);
  LinkageCertificate cert;
  cert.s = f1.homogeneous_degree();
  cert.t = f2.homogeneous_degree();
  cert.deg_input = in_hd.degree;
  cert.pa_input = in_hd.pa;

  Ideal linked = saturate_irrelevant(colon(ci, I));
  HilbertData out_hd = hilbert_data_raw(linked);
  cert.deg_linked = out_hd.degree;
  cert.pa_linked = out_hd.pa;

  long long expect_deg = static_cast<long long>(cert.s) * cert.t - cert.deg_input;
  long long expect_pa =
      cert.pa_input + ((cert.s + cert.t - 4) * (expect_deg - cert.deg_input)) / 2;
  cert.pass = out_hd.dim == 1 && cert.deg_linked == expect_deg && cert.pa_linked == expect_pa;
  if (!cert.pass)
    throw certificate_error(
        "linkage(" + std::to_string(cert.s) + "," + std::to_string(cert.t) + ")",
        "expected (" + std::to_string(expect_deg) + "," + std::to_string(expect_pa) +
            "), got (" + std::to_string(cert.deg_linked) + "," +
            std::to_string(cert.pa_linked) + ")");
  return {std::move(linked), cert};
}

namespace {

// ideal of a single projective point from its coordinates
Ideal point_ideal(Ring r, const std::vector<uint32_t>& pt) {
  FpField F{r.p};
  std::vector<std::vector<uint32_t>> row{pt};
  auto ns = nullspace(F, row);
  std::vector<Poly> gens;
  for (const auto& v : ns) {
    Poly f(r);
    for (int i = 0; i < r.n; ++i)
      if (v[i]) f.t.push_back({Monomial::var(i), v[i]});
    f.normalize(kGrevlex);
    gens.push_back(f);
  }
  return Ideal(r, std::move(gens), SatFlag::yes);
}

using Attempt = BaseLocusBundle (*)(uint32_t, uint64_t);

BaseLocusBundle with_retries(CaseId id, Attempt attempt, uint32_t prime, uint64_t seed,
                             int retries) {
  std::string last;
  for (int k = 0; k <= retries; ++k) {
    try {
      BaseLocusBundle b = attempt(prime, derive_seed(seed, case_name(id).c_str(), k));
      b.provenance = {prime, seed, k};
      return b;
    } catch (const certificate_error& e) {
      last = e.what();
    }
  }
  throw certificate_error("build_" + case_name(id),
                          "all retries exhausted; last failure: " + last);
}

BaseLocusBundle attempt_segre(uint32_t prime, uint64_t seed) {
  Ring r{prime, 4};
  Rng rng(seed);
  BaseLocusBundle b;
  b.case_id = CaseId::segre;
  b.d = 3;
  CertRecorder cert{&b.certificates};

  Ideal line_std(r, {Poly::variable(r, 0), Poly::variable(r, 1)});
  Ideal line = apply_linear_change(line_std, random_invertible_matrix(4, prime, rng.next()));
  line.saturated = SatFlag::yes;

  std::vector<uint32_t> pt{rng.field(prime), rng.field(prime), rng.field(prime),
                           rng.field_nonzero(prime)};
  // the point must avoid the line
  bool off_line = false;
  for (const auto& g : line.gens())
    if (evaluate(g, pt) != 0) off_line = true;
  cert.require_flag("point off line", off_line);
  Ideal point = point_ideal(r, pt);

  b.IB1 = line;
  b.IB2 = point;
  b.IB = intersect(line, point);
  b.IB.saturated = SatFlag::yes;

  HilbertData hd = hilbert_data_raw(b.IB);
  cert.require("deg(1-dim part of B)", 1, hd.degree);
  cert.require("HP(0) of B = 2 (line plus point)", 2, hd.hp(0));
  cert.require("h0(I_B(1))", 1, graded_dim(b.IB, 1));
  cert.require("h0(I_B(2))", 6, graded_dim(b.IB, 2));
  b.phi = graded_piece(b.IB, 1)[0];
  return b;
}

BaseLocusBundle attempt_delpezzo(uint32_t prime, uint64_t seed) {
  Ring r{prime, 4};
  Rng rng(seed);
  BaseLocusBundle b;
  b.case_id = CaseId::delpezzo;
  b.d = 4;
  CertRecorder cert{&b.certificates};

  // elliptic quartic D as a complete intersection of two random quadrics
  Poly q1 = random_form(r, 2, rng), q2 = random_form(r, 2, rng);
  Ideal D = saturate_irrelevant(Ideal(r, {q1, q2}));
  HilbertData dhd = hilbert_data_raw(D);
  cert.require("deg D", 4, dhd.degree);
  cert.require("pa D", 1, dhd.dim == 1 ? dhd.pa : -999);
  cert.require("h0(I_D(2))", 2, graded_dim(D, 2));

  // two independent cubics through D and the liaison to the quintic
  auto cubics = graded_piece(D, 3);
  Poly c1 = random_combination(cubics, rng);
  Poly c2 = random_combination(cubics, rng);
  auto [B, lk] = link(c1, c2, D);
  cert.require("linked degree", 5, lk.deg_linked);
  cert.require("linked genus", 2, lk.pa_linked);

  b.IB = B;
  HilbertData bhd = hilbert_data_raw(b.IB);
  cert.require("deg B", 5, bhd.degree);
  cert.require("pa B", 2, bhd.pa);
  cert.require("deg(B ∩ D)", 8, length_of_intersection(b.IB, D));
  cert.require("h0(I_B(2))", 1, graded_dim(b.IB, 2));
  cert.require("h0(I_B(3))", 6, graded_dim(b.IB, 3));
  b.phi = graded_piece(b.IB, 2)[0];
  return b;
}

BaseLocusBundle attempt_castelnuovo(uint32_t prime, uint64_t seed) {
  Ring r{prime, 4};
  Rng rng(seed);
  BaseLocusBundle b;
  b.case_id = CaseId::castelnuovo;
  b.d = 5;
  CertRecorder cert{&b.certificates};

  // double structure of genus -2 on a line (a ribbon): in standard
  // coordinates (x0^2, x0 x1, x1^2, x0 q - x1 s) with q, s quadrics in the
  // complementary variables
  Ring r2{prime, 2};
  Poly q_small = random_form(r2, 2, rng);
  Poly s_small = random_form(r2, 2, rng);
  Poly q = shift_vars(q_small, r, 2), s = shift_vars(s_small, r, 2);
  Poly x0 = Poly::variable(r, 0), x1 = Poly::variable(r, 1);
  Poly wgen = sub(mul(x0, q, kGrevlex), mul(x1, s, kGrevlex), kGrevlex);
  std::vector<Poly> wgens{mul(x0, x0, kGrevlex), mul(x0, x1, kGrevlex),
                          mul(x1, x1, kGrevlex), wgen};

  auto mat = random_invertible_matrix(4, prime, rng.next());
  Ideal B1 = apply_linear_change(Ideal(r, {x0, x1}), mat);
  B1.saturated = SatFlag::yes;
  Ideal W = saturate_irrelevant(apply_linear_change(Ideal(r, wgens), mat));
  HilbertData whd = hilbert_data_raw(W);
  cert.require("ribbon degree", 2, whd.degree);
  cert.require("ribbon genus", -2, whd.dim == 1 ? whd.pa : -999);

  // two cubics through the ribbon: the complete intersection links it to
  // the septic
  auto cubics = graded_piece(W, 3);
  cert.require("dim (I_W)_3", 11, static_cast<long long>(cubics.size()));
  Poly g1 = random_combination(cubics, rng);
  Poly g2 = random_combination(cubics, rng);
  auto [B2, lk] = link(g1, g2, W);
  cert.require("deg B2", 7, lk.deg_linked);
  cert.require("pa B2", 3, lk.pa_linked);

  // the reverse residual of (G1, G2) is the ribbon again
  auto [Wback, lk2] = link(g1, g2, B2);
  cert.require("residual degree", 2, lk2.deg_linked);
  cert.require("residual genus", -2, lk2.pa_linked);
  cert.require_flag("residual equals the ribbon", ideal_equal(Wback, W));

  // tangency of G1, G2 along B1: the 2x2 minors of their gradients vanish
  // on B1
  {
    const auto& gb1 = groebner_basis(B1, kGrevlex);
    bool tangent = true;
    for (int i = 0; i < 4 && tangent; ++i)
      for (int j = i + 1; j < 4 && tangent; ++j) {
        Poly m = sub(mul(derivative(g1, i), derivative(g2, j), kGrevlex),
                     mul(derivative(g1, j), derivative(g2, i), kGrevlex), kGrevlex);
        if (!normal_form(m, gb1, kGrevlex).is_zero()) tangent = false;
      }
    cert.require_flag("G1, G2 tangent along B1", tangent);
  }

  cert.require("deg(B1 ∩ B2) (5-secancy)", 5, length_of_intersection(B1, B2));

  Ideal twoB1 = saturate_irrelevant(ideal_power(B1, 2));
  HilbertData fat = hilbert_data_raw(twoB1);
  cert.require("deg 2B1", 3, fat.degree);
  cert.require("pa 2B1", 0, fat.pa);
  cert.require("deg(2B1 ∩ B2)", 10, length_of_intersection(twoB1, B2));

  b.IB1 = B1;
  b.IB2 = B2;
  b.I2B1 = twoB1;
  b.IB = intersect(twoB1, B2);
  b.IB.saturated = SatFlag::yes;

  HilbertData bhd = hilbert_data_raw(b.IB);
  cert.require("deg B", 10, bhd.degree);
  // union genus: pa(2B1) + pa(B2) + deg(2B1 ∩ B2) - 1
  cert.require("pa B", 0 + 3 + 10 - 1, bhd.pa);
  cert.require("h0(I_B(3))", 1, graded_dim(b.IB, 3));
  cert.require("h0(I_B(4))", 6, graded_dim(b.IB, 4));
  b.phi = graded_piece(b.IB, 3)[0];

  // B1 lies in the singular locus of phi
  Ideal sing_phi = saturate_irrelevant(jacobian_ideal(principal_ideal(b.phi)));
  cert.require_flag("B1 ⊆ Sing(phi)", ideal_contains(B1, sing_phi));
  return b;
}

// Top-dimensional part of a curve-dimensional scheme, extracted by double
// liaison inside a complete intersection of two forms through it (embedded
// points do not survive two colons).  The result is certified by the caller.
Ideal unmixed_curve_part(const Ideal& J, int form_degree, Rng& rng) {
  Ideal sat = saturate_irrelevant(J);
  auto forms = graded_piece(sat, form_degree);
  if (forms.size() < 2)
    throw certificate_error("unmixed_curve_part",
                            "too few forms of degree " + std::to_string(form_degree));
  for (int attempt = 0; attempt < 5; ++attempt) {
    Poly f1 = random_combination(forms, rng);
    Poly f2 = random_combination(forms, rng);
    Ideal ci(J.ring, {f1, f2});
    if (hilbert_data_raw(ci).dim != J.ring.n - 3) continue;
    Ideal residual = saturate_irrelevant(colon(ci, sat));
    return saturate_irrelevant(colon(ci, residual));
  }
  throw certificate_error("unmixed_curve_part", "no complete intersection found");
}

BaseLocusBundle attempt_bordiga(uint32_t prime, uint64_t seed) {
  Rng rng(seed);
  BaseLocusBundle b;
  b.case_id = CaseId::bordiga;
  b.d = 6;
  CertRecorder cert{&b.certificates};

  // rational normal quartic scroll S(1,3) in P^5, parameterized over
  // (s,t;u,v), then projected to P^3 by four generic linear combinations
  Ring rp{prime, 4};  // parameters s,t,u,v
  auto V = [&](int i) { return Poly::variable(rp, i); };
  std::vector<Poly> scroll{
      mul(V(2), V(0), kGrevlex),                                   // u s
      mul(V(2), V(1), kGrevlex),                                   // u t
      mul(V(3), pow(V(0), 3, kGrevlex), kGrevlex),                 // v s^3
      mul(V(3), mul(pow(V(0), 2, kGrevlex), V(1), kGrevlex), kGrevlex),
      mul(V(3), mul(V(0), pow(V(1), 2, kGrevlex), kGrevlex), kGrevlex),
      mul(V(3), pow(V(1), 3, kGrevlex), kGrevlex),                 // v t^3
  };
  std::vector<Poly> proj(4, Poly(rp));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j)
      proj[i] = add(proj[i], scale(scroll[j], rng.field(prime)), kGrevlex);

  // implicitize the projected scroll: the quartic phi
  Ring r8{prime, 8};
  std::vector<Poly> graph;
  for (int i = 0; i < 4; ++i)
    graph.push_back(sub(Poly::variable(r8, 4 + i), shift_vars(proj[i], r8, 0), kGrevlex));
  Ideal surf = eliminate(Ideal(r8, std::move(graph)), {0, 1, 2, 3});
  const auto& surf_gb = groebner_basis(surf, kGrevlex);
  cert.require("projected scroll hypersurface", 1,
               static_cast<long long>(surf_gb.size()));
  cert.require("deg phi", 4, surf_gb[0].homogeneous_degree());
  b.phi = surf_gb[0];

  // B1 = the double curve of the projection, a twisted cubic.  The Jacobian
  // scheme of phi carries embedded structure at the pinch points, so the
  // curve is its top-dimensional part.
  Ideal jac = saturate_irrelevant(jacobian_ideal(principal_ideal(b.phi)));
  Ideal B1 = unmixed_curve_part(jac, 3, rng);
  cert.require_flag("Jacobian scheme contained in B1", ideal_contains(B1, jac));
  HilbertData b1hd = hilbert_data_raw(B1);
  cert.require("deg B1", 3, b1hd.degree);
  cert.require("pa B1", 0, b1hd.dim == 1 ? b1hd.pa : -999);
  cert.require("h0(I_B1(2))", 3, graded_dim(B1, 2));
  cert.require_flag("B1 smooth",
                    is_unit_ideal(saturate_irrelevant(singular_locus_ideal(B1, 2))));

  Ideal twoB1 = saturate_irrelevant(ideal_power(B1, 2));
  HilbertData fat = hilbert_data_raw(twoB1);
  cert.require("deg 2B1", 9, fat.degree);
  cert.require("pa 2B1", 8, fat.pa);

  // B2: the curve {u A4 + v B6 = 0} on the scroll, pushed through the same
  // projection; parameterized by (u,v) = (B6, -A4)
  Ring r2{prime, 2};
  Poly A4 = random_form(r2, 4, rng);
  Poly B6 = random_form(r2, 6, rng);
  std::vector<Poly> images{Poly::variable(r2, 0), Poly::variable(r2, 1), B6, neg(A4)};
  std::vector<Poly> curve_param;
  for (int i = 0; i < 4; ++i)
    curve_param.push_back(substitute(proj[i], images, r2, kGrevlex));

  Ring r6{prime, 6};
  std::vector<Poly> cgraph;
  for (int i = 0; i < 4; ++i)
    cgraph.push_back(
        sub(Poly::variable(r6, 2 + i), shift_vars(curve_param[i], r6, 0), kGrevlex));
  Ideal B2 = eliminate(Ideal(r6, std::move(cgraph)), {0, 1});
  B2.saturated = SatFlag::yes;  // kernel of a ring map is prime
  HilbertData b2hd = hilbert_data_raw(B2);
  cert.require("deg B2", 7, b2hd.degree);
  cert.require("pa B2", 0, b2hd.dim == 1 ? b2hd.pa : -999);

  cert.require("deg(B1 ∩ B2)", 12, length_of_intersection(B1, B2));
  cert.require("deg(2B1 ∩ B2)", 24, length_of_intersection(twoB1, B2));

  b.IB1 = B1;
  b.IB2 = B2;
  b.I2B1 = twoB1;
  b.IB = intersect(twoB1, B2);
  b.IB.saturated = SatFlag::yes;

  HilbertData bhd = hilbert_data_raw(b.IB);
  cert.require("deg B", 16, bhd.degree);
  cert.require("pa B", 31, bhd.pa);
  cert.require("h0(I_B(4))", 1, graded_dim(b.IB, 4));
  cert.require("h0(I_B(5))", 6, graded_dim(b.IB, 5));

  // the unique quartic through B is phi itself
  Poly unique_quartic = graded_piece(b.IB, 4)[0];
  Poly phimonic = b.phi;
  phimonic.normalize(kGrevlex);
  phimonic.make_monic();
  cert.require_flag("quartic through B is phi", unique_quartic == phimonic);
  b.phi = phimonic;
  return b;
}

}  // namespace

BaseLocusBundle build_segre(uint32_t prime, uint64_t seed, int retries) {
  return with_retries(CaseId::segre, attempt_segre, prime, seed, retries);
}
BaseLocusBundle build_delpezzo(uint32_t prime, uint64_t seed, int retries) {
  return with_retries(CaseId::delpezzo, attempt_delpezzo, prime, seed, retries);
}
BaseLocusBundle build_castelnuovo(uint32_t prime, uint64_t seed, int retries) {
  return with_retries(CaseId::castelnuovo, attempt_castelnuovo, prime, seed, retries);
}
BaseLocusBundle build_bordiga(uint32_t prime, uint64_t seed, int retries) {
  return with_retries(CaseId::bordiga, attempt_bordiga, prime, seed, retries);
}

BaseLocusBundle build_case(CaseId c, uint32_t prime, uint64_t seed, int retries) {
  switch (c) {
    case CaseId::segre: return build_segre(prime, seed, retries);
    case CaseId::delpezzo: return build_delpezzo(prime, seed, retries);
    case CaseId::castelnuovo: return build_castelnuovo(prime, seed, retries);
    case CaseId::bordiga: return build_bordiga(prime, seed, retries);
  }
  throw bad_arguments_error("bad case");
}

void save_bundle(const BaseLocusBundle& bundle, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const Ideal& I) {
    write_ideal_file(I, (fs::path(dir) / (name + ".ideal")).string());
  };
  write("IB", bundle.IB);
  if (bundle.IB1) write("IB1", *bundle.IB1);
  if (bundle.IB2) write("IB2", *bundle.IB2);
  if (bundle.I2B1) write("I2B1", *bundle.I2B1);
  write("phi", Ideal(bundle.phi.ring, {bundle.phi}));

  nlohmann::json j;
  j["case"] = case_name(bundle.case_id);
  j["d"] = bundle.d;
  j["prime"] = bundle.provenance.prime;
  j["seed"] = bundle.provenance.seed;
  j["retries"] = bundle.provenance.retries;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : bundle.certificates)
    j["certificates"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  std::ofstream out(fs::path(dir) / "bundle.json");
  out << j.dump(2) << "\n";
}

BaseLocusBundle load_bundle(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream in(fs::path(dir) / "bundle.json");
  if (!in) throw std::runtime_error("cannot read bundle.json in " + dir);
  nlohmann::json j;
  in >> j;
  BaseLocusBundle b;
  b.case_id = case_from_name(j.at("case").get<std::string>());
  b.d = j.at("d").get<int>();
  b.provenance.prime = j.at("prime").get<uint32_t>();
  b.provenance.seed = j.at("seed").get<uint64_t>();
  b.provenance.retries = j.at("retries").get<int>();
  for (const auto& c : j.at("certificates"))
    b.certificates.push_back({c.at("name").get<std::string>(),
                              c.at("expected").get<std::string>(),
                              c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
  auto read = [&](const std::string& name) {
    return read_ideal_file((fs::path(dir) / (name + ".ideal")).string());
  };
  b.IB = read("IB");
  b.IB.saturated = SatFlag::yes;
  if (fs::exists(fs::path(dir) / "IB1.ideal")) b.IB1 = read("IB1");
  if (fs::exists(fs::path(dir) / "IB2.ideal")) b.IB2 = read("IB2");
  if (fs::exists(fs::path(dir) / "I2B1.ideal")) b.I2B1 = read("I2B1");
  Ideal phi = read("phi");
  b.phi = phi.gens().at(0);
  return b;
}

}  // namespace threefold
