#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crystal/homology.hpp"
#include "crystal/ideal.hpp"
#include "crystal/monomial.hpp"

namespace crystal {

/// Multidegrees are exponent vectors; squarefree ones index the Hochster route.
using Multidegree = Monomial;

/// Graded Betti numbers B_{i,j} of R/I: i is the homological index (B_{0,0}
/// is the free module R itself, B_{1,j} counts minimal generators of degree
/// j), j the total degree.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  explicit BettiTable(std::uint32_t characteristic = 0) : characteristic_(characteristic) {}

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t value);

  /// Set when only homological indices <= max_index were computed.
  std::optional<int> max_index() const noexcept { return max_index_; }
  void set_max_index(std::optional<int> m) noexcept { max_index_ = m; }

  /// Largest i with a nonzero entry (0 for the zero ideal, -1 if empty).
  int projective_dimension() const noexcept;
  /// Restriction to homological indices <= i_max.
  BettiTable truncated(int i_max) const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.characteristic_ == b.characteristic_ && a.entries_ == b.entries_;
  }

 private:
  std::uint32_t characteristic_;
  std::map<Key, std::uint64_t> entries_;  // nonzero entries only
  std::optional<int> max_index_;
};

/// Sum over j of B_{i,j}.
std::uint64_t total_betti(const BettiTable& table, int i);

struct LcmLattice {
  std::vector<Multidegree> degrees;  // sorted by degree, then exponent vector
};

/// All lcms of nonempty generator subsets, by iterated pairwise-lcm closure.
LcmLattice lcm_lattice(const MonomialIdeal& ideal);

/// K^b(I) = { tau subset of supp(b) : x^b / x^tau in I } on the vertices
/// supp(b). Throws Error{NonSquarefreeDegree} for non-squarefree b.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& b);

struct BettiOptions {
  std::uint32_t characteristic = 0;
  /// Compute only B_{i,j} with i <= max_index. Only lcms of at most
  /// max_index generators can carry such entries, which bounds the work.
  std::optional<int> max_index;
  unsigned jobs = 1;
  /// Hochster route: visit every squarefree multidegree instead of the lcm
  /// lattice (test hook; limited to 20 variables).
  bool visit_all_squarefree = false;
  /// Hochster route: reduce each K^b by strong collapses before computing
  /// homology.
  bool collapse = true;
  /// Taylor route: refuse full enumeration above this many generators.
  std::size_t max_taylor_generators = 20;
};

/// Betti numbers of R/I from reduced homology of upper Koszul complexes over
/// the lcm lattice: B_{i+1,|b|} gets dim H~_{i-1}(K^b(I)).
/// Throws Error{NonSquarefreeIdeal} for non-squarefree I.
BettiTable graded_betti_hochster(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Betti numbers of R/I from the Taylor complex tensored with the residue
/// field, split by lcm multidegree. Handles any monomial ideal; throws
/// Error{TooManyGenerators} beyond options.max_taylor_generators (full run).
BettiTable graded_betti_taylor(const MonomialIdeal& ideal, const BettiOptions& options = {});

}  // namespace crystal
