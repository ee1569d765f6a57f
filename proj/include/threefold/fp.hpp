#ifndef THREEFOLD_FP_HPP
#define THREEFOLD_FP_HPP

#include <cstdint>
#include <stdexcept>

namespace threefold {

// Arithmetic in F_p for a word-sized prime p (default 32003).
// Elements are canonical residues in [0, p).

constexpr uint32_t kDefaultPrime = 32003;

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t fp_pow(uint32_t a, uint64_t e, uint32_t p) {
  uint64_t r = 1, base = a % p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

inline uint32_t fp_inv(uint32_t a, uint32_t p) {
  if (a == 0) throw std::domain_error("fp_inv: division by zero");
  // extended Euclid
  int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    int64_t q = r / nr;
    int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

inline uint32_t fp_div(uint32_t a, uint32_t b, uint32_t p) {
  return fp_mul(a, fp_inv(b, p), p);
}

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Square root mod p (Tonelli-Shanks).  Returns false if a is a non-residue.
inline bool fp_sqrt(uint32_t a, uint32_t p, uint32_t& out) {
  a %= p;
  if (a == 0) { out = 0; return true; }
  if (p == 2) { out = a; return true; }
  if (fp_pow(a, (p - 1) / 2, p) != 1) return false;
  if (p % 4 == 3) { out = fp_pow(a, (p + 1) / 4, p); return true; }
  // general Tonelli-Shanks
  uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  uint32_t z = 2;
  while (fp_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  uint32_t m = s;
  uint32_t c = fp_pow(z, q, p);
  uint32_t t = fp_pow(a, q, p);
  uint32_t r = fp_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    uint32_t i = 0, tt = t;
    while (tt != 1) { tt = fp_mul(tt, tt, p); ++i; }
    uint32_t b = fp_pow(c, 1u << (m - i - 1), p);
    m = i;
    c = fp_mul(b, b, p);
    t = fp_mul(t, c, p);
    r = fp_mul(r, b, p);
  }
  out = r;
  return true;
}

// Deterministic seeded RNG (splitmix64).  std:: distributions are not
// portable across standard libraries, so all randomness goes through this.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) by rejection
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::domain_error("Rng::below(0)");
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do { v = next(); } while (v >= lim);
    return v % n;
  }

  uint32_t field(uint32_t p) { return static_cast<uint32_t>(below(p)); }
  uint32_t field_nonzero(uint32_t p) { return 1 + static_cast<uint32_t>(below(p - 1)); }

 private:
  uint64_t state_;
};

// Stable seed derivation for sub-tasks: mixes a seed with a tag and counter.
inline uint64_t derive_seed(uint64_t seed, const char* tag, uint64_t counter = 0) {
  uint64_t h = 0xcbf29ce484222325ull ^ seed;
  for (const char* c = tag; *c; ++c) {
    h ^= static_cast<uint8_t>(*c);
    h *= 0x100000001b3ull;
  }
  h ^= counter + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  Rng mix(h);
  return mix.next();
}

}  // namespace threefold

#endif
