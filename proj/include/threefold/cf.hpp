#ifndef THREEFOLD_CF_HPP
#define THREEFOLD_CF_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "threefold/errors.hpp"
#include "threefold/gf.hpp"
#include "threefold/linalg.hpp"
#include "threefold/poly.hpp"

namespace threefold {

// Executable Catanese-Franciosi very-ampleness checks on plane point
// configurations, as exact rank computations.  The engine is generic over
// the coefficient field: configurations read from files live over F_p,
// configurations extracted from constructed base loci live in F_{p^k}.

enum class CFSystem { CF1, CF2, CF3, CF3p, CF4 };

std::string cf_system_name(CFSystem s);

struct hypotheses_error : std::runtime_error {
  explicit hypotheses_error(const std::string& what)
      : std::runtime_error("hypotheses not met: " + what) {}
};

template <class Field>
struct CFPointT {
  std::array<typename Field::Elem, 3> x;
  int mult = 1;  // 1 or 2
  std::string label;
};

template <class Field>
struct PlaneConfigT {
  Field F;
  CFSystem system = CFSystem::CF1;
  std::vector<CFPointT<Field>> pts;

  std::vector<int> doubles() const {
    std::vector<int> idx;
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i].mult == 2) idx.push_back(static_cast<int>(i));
    return idx;
  }
  std::vector<int> simples() const {
    std::vector<int> idx;
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i].mult == 1) idx.push_back(static_cast<int>(i));
    return idx;
  }
};

using PlaneConfig = PlaneConfigT<FpField>;

struct CFViolation {
  std::string condition;             // e.g. "CF3'(1)"
  std::vector<int> witness;          // offending point indices
  std::vector<std::string> section;  // coefficients of the nonzero curve
};

struct CFReport {
  bool passed = false;
  std::vector<CFViolation> violations;
  std::vector<std::string> notes;
};

struct CensusResult {
  // CF3: lines = 45 pair lines.  CF4: 6 + 15 + 6 = 27 conics.
  long long pair_lines = 0;
  long long exceptional = 0;
  long long line_transforms = 0;
  long long five_point_conics = 0;
  long long total() const { return exceptional + line_transforms + five_point_conics; }
};

namespace cf_detail {

template <class Field>
std::vector<typename Field::Elem> eval_row(const Field& F, int D,
                                           const std::array<typename Field::Elem, 3>& pt) {
  auto mons = monomials_of_degree(3, D);
  std::vector<typename Field::Elem> row;
  row.reserve(mons.size());
  for (const auto& m : mons) {
    auto v = F.one();
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < m.e[i]; ++k) v = F.mul(v, pt[i]);
    row.push_back(v);
  }
  return row;
}

// rows imposed by vanishing to order `mult` at pt (1 row, or value + two
// partials chosen to span together with the Euler relation)
template <class Field>
void constraint_rows(const Field& F, int D, const std::array<typename Field::Elem, 3>& pt,
                     int mult, std::vector<std::vector<typename Field::Elem>>& rows) {
  rows.push_back(eval_row(F, D, pt));
  if (mult < 2) return;
  int skip = 0;
  while (skip < 3 && F.is_zero(pt[skip])) ++skip;
  auto mons = monomials_of_degree(3, D);
  for (int var = 0; var < 3; ++var) {
    if (var == skip) continue;
    std::vector<typename Field::Elem> row;
    row.reserve(mons.size());
    for (const auto& m : mons) {
      if (m.e[var] == 0) {
        row.push_back(F.zero());
        continue;
      }
      auto v = F.one();
      for (int i = 0; i < 3; ++i) {
        int e = m.e[i] - (i == var ? 1 : 0);
        for (int k = 0; k < e; ++k) v = F.mul(v, pt[i]);
      }
      // multiply by the integer exponent
      auto ev = F.zero();
      for (int k = 0; k < m.e[var]; ++k) ev = F.add(ev, v);
      row.push_back(ev);
    }
    rows.push_back(std::move(row));
  }
}

template <class Field>
std::string elem_str(const Field&, const typename Field::Elem& e) {
  if constexpr (std::is_same_v<typename Field::Elem, uint32_t>) {
    return std::to_string(e);
  } else {
    return gf_to_string(e);
  }
}

void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace cf_detail

// h^0 of plane curves of degree D through the constraints:
// C(D+2,2) - rank(M), one row per simple point, three per double point.
template <class Field>
long long interp_dim(const Field& F, int D,
                     const std::vector<std::pair<std::array<typename Field::Elem, 3>, int>>&
                         constraints) {
  if (D < 0) return 0;
  long long cols = (D + 2) * (D + 1) / 2;
  std::vector<std::vector<typename Field::Elem>> rows;
  for (const auto& [pt, mult] : constraints)
    cf_detail::constraint_rows(F, D, pt, mult, rows);
  if (rows.empty()) return cols;
  return cols - rank(F, rows);
}

template <class Field>
CFReport check_cf(const PlaneConfigT<Field>& config);

template <class Field>
CensusResult census_lines_conics(const PlaneConfigT<Field>& config);

extern template CFReport check_cf<FpField>(const PlaneConfigT<FpField>&);
extern template CFReport check_cf<GFField>(const PlaneConfigT<GFField>&);
extern template CensusResult census_lines_conics<FpField>(const PlaneConfigT<FpField>&);
extern template CensusResult census_lines_conics<GFField>(const PlaneConfigT<GFField>&);
extern template long long interp_dim<FpField>(
    const FpField&, int,
    const std::vector<std::pair<std::array<uint32_t, 3>, int>>&);

// ---- F_p front-end ----

// text format: one point per line `label mult p0 p1 p2`; the CF system is
// inferred from the multiplicity pattern
PlaneConfig parse_plane_config(const std::string& text);
std::string format_plane_config(const PlaneConfig& config);

// seeded generic configurations (pass their system's checks w.h.p.)
PlaneConfig generic_config(CFSystem sys, uint32_t p, uint64_t seed);

}  // namespace threefold

#endif
