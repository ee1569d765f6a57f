#include "threefold/cf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace threefold {

std::string cf_system_name(CFSystem s) {
  switch (s) {
    case CFSystem::CF1: return "CF1";
    case CFSystem::CF2: return "CF2";
    case CFSystem::CF3: return "CF3";
    case CFSystem::CF3p: return "CF3'";
    case CFSystem::CF4: return "CF4";
  }
  return "?";
}

namespace cf_detail {

void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      fn(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace cf_detail

namespace {

// expected multiplicity pattern per system: {#doubles, #simples}
std::pair<int, int> pattern_of(CFSystem s) {
  switch (s) {
    case CFSystem::CF1: return {0, 5};
    case CFSystem::CF2: return {1, 7};
    case CFSystem::CF3: return {0, 10};
    case CFSystem::CF3p: return {3, 7};
    case CFSystem::CF4: return {6, 5};
  }
  return {0, 0};
}

// quantified subset cardinalities (#doubles, #simples) per numbered
// condition: minimal elements of the quantifier's up-set (larger subsets
// are implied because adding a base point can only decrease h^0)
struct Condition {
  int number;
  int curve_degree;
  std::vector<std::pair<int, int>> patterns;
};

std::vector<Condition> conditions_of(CFSystem s) {
  switch (s) {
    case CFSystem::CF1:
      return {{1, 1, {{0, 3}}}};
    case CFSystem::CF2:
      return {{1, 1, {{1, 2}}}, {2, 1, {{0, 4}}}, {3, 2, {{1, 6}}}};
    case CFSystem::CF3:
      return {{1, 1, {{0, 4}}}, {2, 2, {{0, 8}}}, {3, 3, {{0, 10}}}};
    case CFSystem::CF3p:
      return {{1, 1, {{0, 5}, {1, 3}, {2, 1}, {3, 0}}},
              {2, 2, {{2, 6}, {3, 4}}},
              {3, 3, {{3, 7}}}};
    case CFSystem::CF4:
      return {{1, 1, {{1, 4}, {2, 2}, {3, 0}}},
              {2, 2, {{4, 4}, {5, 2}, {6, 0}}},
              {3, 3, {{6, 4}}}};
  }
  return {};
}

}  // namespace

template <class Field>
CFReport check_cf(const PlaneConfigT<Field>& config) {
  const Field& F = config.F;
  CFReport report;
  auto [want_d, want_s] = pattern_of(config.system);
  auto dbl = config.doubles();
  auto smp = config.simples();
  if (static_cast<int>(dbl.size()) != want_d || static_cast<int>(smp.size()) != want_s)
    throw bad_arguments_error(
        "configuration does not match " + cf_system_name(config.system) + ": expected " +
        std::to_string(want_d) + " double + " + std::to_string(want_s) + " simple points");
  for (const auto& pt : config.pts) {
    bool all_zero = true;
    for (const auto& c : pt.x)
      if (!F.is_zero(c)) all_zero = false;
    if (all_zero) throw bad_arguments_error("point with all-zero coordinates");
    if (pt.mult != 1 && pt.mult != 2)
      throw bad_arguments_error("multiplicity must be 1 or 2");
  }

  // condition (0): infinitely-near points are not modeled, so it reduces to
  // pairwise distinctness (strict even for CF2, which is flagged).
  const int N = static_cast<int>(config.pts.size());
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      // projective equality: cross product vanishes
      const auto& a = config.pts[i].x;
      const auto& b = config.pts[j].x;
      bool equal = true;
      for (int u = 0; u < 3 && equal; ++u)
        for (int v = u + 1; v < 3 && equal; ++v) {
          auto d = F.sub(F.mul(a[u], b[v]), F.mul(a[v], b[u]));
          if (!F.is_zero(d)) equal = false;
        }
      if (equal)
        report.violations.push_back(
            {cf_system_name(config.system) + "(0)", {i, j}, {}});
    }
  if (config.system == CFSystem::CF2)
    report.notes.push_back(
        "CF2(0) permits one infinitely-near point; near-points are unsupported, "
        "strict distinctness enforced");

  for (const auto& cond : conditions_of(config.system)) {
    for (const auto& [na, nb] : cond.patterns) {
      cf_detail::subsets_of_size(
          static_cast<int>(dbl.size()), na, [&](const std::vector<int>& da) {
            cf_detail::subsets_of_size(
                static_cast<int>(smp.size()), nb, [&](const std::vector<int>& sb) {
                  std::vector<std::vector<typename Field::Elem>> rows;
                  std::vector<int> witness;
                  for (int ia : da) {
                    rows.push_back(
                        cf_detail::eval_row(F, cond.curve_degree, config.pts[dbl[ia]].x));
                    witness.push_back(dbl[ia]);
                  }
                  for (int ib : sb) {
                    rows.push_back(
                        cf_detail::eval_row(F, cond.curve_degree, config.pts[smp[ib]].x));
                    witness.push_back(smp[ib]);
                  }
                  auto ns = nullspace(F, rows);
                  if (!ns.empty()) {
                    CFViolation v;
                    v.condition = cf_system_name(config.system) + "(" +
                                  std::to_string(cond.number) + ")";
                    v.witness = witness;
                    for (const auto& c : ns.front())
                      v.section.push_back(cf_detail::elem_str(F, c));
                    report.violations.push_back(std::move(v));
                  }
                });
          });
    }
  }

  report.passed = report.violations.empty();
  return report;
}

namespace {

template <class Field>
std::array<typename Field::Elem, 3> cross(const Field& F,
                                          const std::array<typename Field::Elem, 3>& a,
                                          const std::array<typename Field::Elem, 3>& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

template <class Field>
std::array<typename Field::Elem, 3> proj_normalize(const Field& F,
                                                   std::array<typename Field::Elem, 3> v) {
  for (int i = 0; i < 3; ++i) {
    if (!F.is_zero(v[i])) {
      auto inv = F.inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = F.mul(v[j], inv);
      return v;
    }
  }
  return v;
}

// require h^0(D·H - subset) == 0, else throw hypotheses_error
template <class Field>
void require_vanishing(const Field& F, int D, const PlaneConfigT<Field>& config,
                       const std::vector<int>& subset, const std::string& what) {
  std::vector<std::pair<std::array<typename Field::Elem, 3>, int>> cons;
  for (int i : subset) cons.push_back({config.pts[i].x, 1});
  if (interp_dim(F, D, cons) != 0) throw hypotheses_error(what);
}

}  // namespace

template <class Field>
CensusResult census_lines_conics(const PlaneConfigT<Field>& config) {
  const Field& F = config.F;
  CFReport base = check_cf(config);
  if (!base.passed)
    throw bad_arguments_error("census requires a configuration that passes " +
                              cf_system_name(config.system));
  CensusResult out;

  if (config.system == CFSystem::CF3) {
    const int N = 10;
    // no 3 collinear, no 6 on a conic
    cf_detail::subsets_of_size(N, 3, [&](const std::vector<int>& s) {
      require_vanishing(F, 1, config, s, "3 points collinear");
    });
    cf_detail::subsets_of_size(N, 6, [&](const std::vector<int>& s) {
      require_vanishing(F, 2, config, s, "6 points on a conic");
    });
    std::set<std::array<typename Field::Elem, 3>> lines;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        lines.insert(proj_normalize(F, cross(F, config.pts[i].x, config.pts[j].x)));
    out.pair_lines = static_cast<long long>(lines.size());
    if (out.pair_lines != 45)
      throw hypotheses_error("pair lines not distinct: " + std::to_string(out.pair_lines));
    return out;
  }

  if (config.system == CFSystem::CF4) {
    auto dbl = config.doubles();
    auto smp = config.simples();
    // census hypotheses with Λ nonempty in both vanishings (the counted
    // classes 2x_i x_h and the conics through five x_i are Λ = ∅):
    // h^0(H - Dx - Ly) = 0 for 2#D + #L >= 4 and
    // h^0(2H - Dx - Ly) = 0 for 2#D + #L >= 10, minimal patterns checked
    for (auto [na, nb] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {2, 1}}) {
      cf_detail::subsets_of_size(6, na, [&](const std::vector<int>& da) {
        cf_detail::subsets_of_size(5, nb, [&](const std::vector<int>& sb) {
          std::vector<int> s;
          for (int i : da) s.push_back(dbl[i]);
          for (int i : sb) s.push_back(smp[i]);
          require_vanishing(F, 1, config, s, "degree-1 vanishing fails");
        });
      });
    }
    for (auto [na, nb] : std::vector<std::pair<int, int>>{{3, 4}, {4, 2}, {5, 1}}) {
      cf_detail::subsets_of_size(6, na, [&](const std::vector<int>& da) {
        cf_detail::subsets_of_size(5, nb, [&](const std::vector<int>& sb) {
          std::vector<int> s;
          for (int i : da) s.push_back(dbl[i]);
          for (int i : sb) s.push_back(smp[i]);
          require_vanishing(F, 2, config, s, "degree-2 vanishing fails");
        });
      });
    }

    out.exceptional = 6;
    std::set<std::array<typename Field::Elem, 3>> lines;
    for (size_t i = 0; i < dbl.size(); ++i)
      for (size_t j = i + 1; j < dbl.size(); ++j)
        lines.insert(
            proj_normalize(F, cross(F, config.pts[dbl[i]].x, config.pts[dbl[j]].x)));
    out.line_transforms = static_cast<long long>(lines.size());
    if (out.line_transforms != 15)
      throw hypotheses_error("x_i x_h lines not distinct");

    // conics through each 5-subset of the double points: exactly one, smooth
    cf_detail::subsets_of_size(6, 5, [&](const std::vector<int>& da) {
      std::vector<std::vector<typename Field::Elem>> rows;
      for (int i : da) rows.push_back(cf_detail::eval_row(F, 2, config.pts[dbl[i]].x));
      auto ns = nullspace(F, rows);
      if (ns.size() != 1)
        throw hypotheses_error("conic through five x_i not unique");
      // monomial order of eval_row(2): x0^2, x0x1, x1^2, x0x2, x1x2, x2^2
      const auto& c = ns.front();
      auto half = [&](const typename Field::Elem& v) {
        auto two = F.add(F.one(), F.one());
        return F.mul(v, F.inv(two));
      };
      std::vector<std::vector<typename Field::Elem>> m(3,
                                                       std::vector<typename Field::Elem>(3));
      m[0][0] = c[0];
      m[1][1] = c[2];
      m[2][2] = c[5];
      m[0][1] = m[1][0] = half(c[1]);
      m[0][2] = m[2][0] = half(c[3]);
      m[1][2] = m[2][1] = half(c[4]);
      if (rank(F, m) != 3) throw hypotheses_error("five-point conic is singular");
      out.five_point_conics += 1;
    });
    return out;
  }

  throw bad_arguments_error("census applies to CF3 and CF4 configurations");
}

template CFReport check_cf<FpField>(const PlaneConfigT<FpField>&);
template CFReport check_cf<GFField>(const PlaneConfigT<GFField>&);
template CensusResult census_lines_conics<FpField>(const PlaneConfigT<FpField>&);
template CensusResult census_lines_conics<GFField>(const PlaneConfigT<GFField>&);
template long long interp_dim<FpField>(
    const FpField&, int, const std::vector<std::pair<std::array<uint32_t, 3>, int>>&);

PlaneConfig parse_plane_config(const std::string& text) {
  PlaneConfig config;
  config.F = FpField{kDefaultPrime};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label)) continue;
    if (label == "prime") {
      uint32_t p;
      if (!(ls >> p) || !is_prime_u32(p)) throw parse_error(lineno, "bad prime");
      config.F.p = p;
      continue;
    }
    CFPointT<FpField> pt;
    pt.label = label;
    long long mult, a, b, c;
    if (!(ls >> mult >> a >> b >> c))
      throw parse_error(lineno, "expected: label mult p0 p1 p2");
    if (mult != 1 && mult != 2) throw parse_error(lineno, "mult must be 1 or 2");
    pt.mult = static_cast<int>(mult);
    auto red = [&](long long v) {
      long long m = v % static_cast<long long>(config.F.p);
      if (m < 0) m += config.F.p;
      return static_cast<uint32_t>(m);
    };
    pt.x = {red(a), red(b), red(c)};
    config.pts.push_back(std::move(pt));
  }
  // infer the system from the multiplicity pattern
  int nd = static_cast<int>(config.doubles().size());
  int ns = static_cast<int>(config.simples().size());
  std::map<std::pair<int, int>, CFSystem> patterns{
      {{0, 5}, CFSystem::CF1},
      {{1, 7}, CFSystem::CF2},
      {{0, 10}, CFSystem::CF3},
      {{3, 7}, CFSystem::CF3p},
      {{6, 5}, CFSystem::CF4},
  };
  auto it = patterns.find({nd, ns});
  if (it == patterns.end())
    throw parse_error(lineno, "multiplicity pattern (" + std::to_string(nd) + " double, " +
                                  std::to_string(ns) +
                                  " simple) matches no CF system");
  config.system = it->second;
  return config;
}

std::string format_plane_config(const PlaneConfig& config) {
  std::string out;
  if (config.F.p != kDefaultPrime) out += "prime " + std::to_string(config.F.p) + "\n";
  for (const auto& pt : config.pts)
    out += pt.label + " " + std::to_string(pt.mult) + " " + std::to_string(pt.x[0]) + " " +
           std::to_string(pt.x[1]) + " " + std::to_string(pt.x[2]) + "\n";
  return out;
}

PlaneConfig generic_config(CFSystem sys, uint32_t p, uint64_t seed) {
  PlaneConfig config;
  config.F = FpField{p};
  config.system = sys;
  auto [nd, ns] = pattern_of(sys);
  Rng rng(derive_seed(seed, "cf-config"));
  for (int i = 0; i < nd; ++i) {
    CFPointT<FpField> pt;
    pt.mult = 2;
    pt.label = "x" + std::to_string(i + 1);
    pt.x = {rng.field(p), rng.field(p), 1};
    config.pts.push_back(pt);
  }
  for (int i = 0; i < ns; ++i) {
    CFPointT<FpField> pt;
    pt.mult = 1;
    pt.label = (nd ? "y" : "x") + std::to_string(nd + i + 1);
    pt.x = {rng.field(p), rng.field(p), 1};
    config.pts.push_back(pt);
  }
  return config;
}

}  // namespace threefold
