#ifndef THREEFOLD_IDEAL_HPP
#define THREEFOLD_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "threefold/poly.hpp"

namespace threefold {

enum class SatFlag : uint8_t { yes, no, unknown };

// Homogeneous ideal with a per-order cache of reduced Groebner bases.
// Generators are immutable after construction; the cache supports
// concurrent readers and single-writer inserts, and is shared by copies.
class Ideal {
 public:
  Ring ring;
  SatFlag saturated = SatFlag::unknown;

  Ideal() : ring{kDefaultPrime, 4}, cache_(std::make_shared<Cache>()) {}
  Ideal(Ring r, std::vector<Poly> gens, SatFlag sat = SatFlag::unknown)
      : ring(r), saturated(sat), gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) {
      require_same_ring(g.ring, ring);
      g.normalize(MonomialOrder::grevlex());
    }
    prune_zeros();
  }

  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  std::shared_ptr<const std::vector<Poly>> cached_basis(const MonomialOrder& ord) const {
    std::shared_lock lk(cache_->mx);
    auto it = cache_->bases.find(ord);
    return it == cache_->bases.end() ? nullptr : it->second;
  }

  void store_basis(const MonomialOrder& ord,
                   std::shared_ptr<const std::vector<Poly>> basis) const {
    std::unique_lock lk(cache_->mx);
    cache_->bases.emplace(ord, std::move(basis));
  }

 private:
  struct Cache {
    mutable std::shared_mutex mx;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Poly>>> bases;
  };

  void prune_zeros() {
    std::erase_if(gens_, [](const Poly& g) { return g.is_zero(); });
  }

  std::vector<Poly> gens_;
  mutable std::shared_ptr<Cache> cache_;
};

}  // namespace threefold

#endif
