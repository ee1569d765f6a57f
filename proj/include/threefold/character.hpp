#ifndef THREEFOLD_CHARACTER_HPP
#define THREEFOLD_CHARACTER_HPP

#include <string>
#include <vector>

#include "threefold/hilbert.hpp"
#include "threefold/ideal.hpp"

namespace threefold {

// First difference of the Hilbert function of a zero-dimensional plane
// section; h(0)=1, h(j)=j+1 below sigma, non-increasing afterwards.
struct HVector {
  std::vector<long long> h;
  long long total() const;
  bool admissible(std::string* why = nullptr) const;
};

// Numerical character (n_0 >= ... >= n_{sigma-1}), n_{sigma-1} >= sigma,
// sum (n_i - i) = section degree.
struct NumericalCharacter {
  std::vector<long long> n;
  int sigma() const { return static_cast<int>(n.size()); }
  bool valid(std::string* why = nullptr) const;
  std::string str() const;  // "(n0,n1,...)"
  bool operator==(const NumericalCharacter& o) const { return n == o.n; }
};

// Saturated ideal of B ∩ {seeded generic plane} in 3 variables.
Ideal plane_section(const Ideal& I, uint64_t seed);

HVector h_vector(const Ideal& points_ideal_3vars);

NumericalCharacter character_from_hvector(const HVector& h);

// h reconstructed from chi: h(j) = #{i : i <= j < n_i}
HVector hvector_from_character(const NumericalCharacter& chi);

// genus g(chi) = sum_{j>=2} (j-1) h(j)
long long genus_of_character(const NumericalCharacter& chi);

struct ConnectednessReport {
  bool connected;
  int gap_after;  // index i of the first gap n_i - n_{i+1} >= 2; -1 if none
};
ConnectednessReport is_connected(const NumericalCharacter& chi);

// Character of a seeded-generic plane section, recomputed with three seeds
// which must agree; throws unstable_character_error otherwise.
NumericalCharacter character_of_curve(const Ideal& I, uint64_t seed);

// All valid characters with the given sigma bound and section degree bound
// (used by the exhaustive round-trip property test).
std::vector<NumericalCharacter> enumerate_characters(int max_sigma, long long max_degree);

}  // namespace threefold

#endif
