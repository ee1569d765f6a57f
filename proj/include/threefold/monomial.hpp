#ifndef THREEFOLD_MONOMIAL_HPP
#define THREEFOLD_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

namespace threefold {

// Rings used here have at most 12 variables (P^3 plus parameters plus an
// auxiliary elimination variable).
constexpr int kMaxVars = 12;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, uint8_t exp = 1) {
    Monomial m;
    m.e[i] = exp;
    m.deg = exp;
    return m;
  }

  bool is_one() const { return deg == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(e[i] + o.e[i]);
    r.deg = static_cast<uint16_t>(deg + o.deg);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient o / this, caller guarantees divisibility
  Monomial quotient_into(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(o.e[i] - e[i]);
    r.deg = static_cast<uint16_t>(o.deg - deg);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    uint16_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d = static_cast<uint16_t>(d + r.e[i]);
    }
    r.deg = d;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= e[i];
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

struct MonomialHasher {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind : uint8_t { grevlex, lex, block };

// Monomial order.  block(k) eliminates the first k variables: any monomial
// involving them ranks above any monomial free of them (grevlex per block).
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int block_k = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder block(int k) { return {OrderKind::block, k}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block_k == o.block_k;
  }
  bool operator<(const MonomialOrder& o) const {
    if (kind != o.kind) return kind < o.kind;
    return block_k < o.block_k;
  }

  // grevlex compare on a variable range [lo, hi): 1 if a > b
  static int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  // 1 if a > b, 0 if equal, -1 if a < b; n = number of ring variables
  int cmp(const Monomial& a, const Monomial& b, int n) const {
    switch (kind) {
      case OrderKind::grevlex: {
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        for (int i = n - 1; i >= 0; --i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
      }
      case OrderKind::lex: {
        for (int i = 0; i < n; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      }
      case OrderKind::block: {
        int c = cmp_grevlex_range(a, b, 0, block_k);
        if (c) return c;
        return cmp_grevlex_range(a, b, block_k, n);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b, int n) const {
    return cmp(a, b, n) > 0;
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "block(" + std::to_string(block_k) + ")";
    }
    return "?";
  }
};

}  // namespace threefold

#endif
