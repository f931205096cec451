#pragma once

#include <atomic>
#include <cstddef>
#include <utility>
#include <vector>

#include "crystal/lattice.hpp"
#include "crystal/polynomial.hpp"

namespace crystal {

/// Generators ab - (a v b)(a ^ b) of a join-meet ideal, one per incomparable
/// pair (comparable pairs give the zero binomial and are skipped).
struct BinomialGeneratorSet {
  std::vector<Polynomial> gens;
  std::vector<std::pair<Element, Element>> source_pairs;  // parallel to gens
};

BinomialGeneratorSet join_meet_ideal(const FiniteLattice& lattice, const PolyRing& ring);

struct BuchbergerOptions {
  /// Abort with Error{Cancelled} once the working basis exceeds this size.
  std::size_t max_basis_size = 20000;
  const std::atomic<bool>* cancel = nullptr;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Groebner basis (monic, interreduced) sorted by leading monomial:
/// degree first, then ascending in the ring's order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const PolyRing& ring,
                                   const BuchbergerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

inline std::vector<Polynomial> buchberger(const BinomialGeneratorSet& gens, const PolyRing& ring,
                                          const BuchbergerOptions& options = {},
                                          BuchbergerStats* stats = nullptr) {
  return buchberger(gens.gens, ring, options, stats);
}

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(const std::vector<Polynomial>& basis, const PolyRing& ring);

/// Minimal generating set of a monomial ideal. Generators are unique, no one
/// divides another, and they are sorted by degree and then ascending in the
/// order supplied at construction (index order of exponents otherwise).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t var_count, std::vector<Monomial> gens,
                const MonomialOrder* order = nullptr);

  std::size_t var_count() const noexcept { return var_count_; }
  const std::vector<Monomial>& min_gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_squarefree() const noexcept;
  bool contains(const Monomial& m) const;

 private:
  std::size_t var_count_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order);

}  // namespace crystal
