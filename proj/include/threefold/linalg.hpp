#ifndef THREEFOLD_LINALG_HPP
#define THREEFOLD_LINALG_HPP

#include <cstdint>
#include <vector>

#include "threefold/fp.hpp"

namespace threefold {

// Dense row-reduction over an abstract field.  Field must provide:
//   Elem, zero(), one(), is_zero(e), add, sub, mul, inv, neg.
// Pivoting picks the first nonzero entry, so results are canonical.

struct FpField {
  uint32_t p;
  using Elem = uint32_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return fp_add(a, b, p); }
  Elem sub(Elem a, Elem b) const { return fp_sub(a, b, p); }
  Elem mul(Elem a, Elem b) const { return fp_mul(a, b, p); }
  Elem neg(Elem a) const { return fp_neg(a, p); }
  Elem inv(Elem a) const { return fp_inv(a, p); }
};

// In-place reduced row echelon form; returns rank.
template <class Field>
int rref(const Field& F, std::vector<std::vector<typename Field::Elem>>& a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && F.is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    auto inv = F.inv(a[r][c]);
    for (size_t j = c; j < cols; ++j) a[r][j] = F.mul(a[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || F.is_zero(a[i][c])) continue;
      auto f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        a[i][j] = F.sub(a[i][j], F.mul(f, a[r][j]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

template <class Field>
int rank(const Field& F, std::vector<std::vector<typename Field::Elem>> a) {
  return rref(F, a);
}

// Canonical basis of the right nullspace {x : a x = 0}.
template <class Field>
std::vector<std::vector<typename Field::Elem>> nullspace(
    const Field& F, std::vector<std::vector<typename Field::Elem>> a) {
  using E = typename Field::Elem;
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  int rk = rref(F, a);
  std::vector<int> pivot_col_of_row(rk, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < rk; ++i) {
    for (size_t c = 0; c < cols; ++c)
      if (!F.is_zero(a[i][c])) {
        pivot_col_of_row[i] = static_cast<int>(c);
        is_pivot[c] = true;
        break;
      }
  }
  std::vector<std::vector<E>> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<E> v(cols, F.zero());
    v[fc] = F.one();
    for (int i = 0; i < rk; ++i) {
      int pc = pivot_col_of_row[i];
      if (pc >= 0 && !F.is_zero(a[i][fc])) v[pc] = F.neg(a[i][fc]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Invert a square matrix over F_p; returns false if singular.
inline bool invert_matrix(const FpField& F, std::vector<std::vector<uint32_t>> a,
                          std::vector<std::vector<uint32_t>>& out) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, 0);
    a[i][n + i] = 1;
  }
  int rk = rref(F, a);
  if (rk < static_cast<int>(n)) return false;
  out.assign(n, std::vector<uint32_t>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return true;
}

}  // namespace threefold

#endif
