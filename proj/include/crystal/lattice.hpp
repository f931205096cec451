#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystal {

using Element = std::size_t;

struct CrystalParams {
  std::vector<int> chain_lengths;  // n_1, ..., n_k

  std::size_t k() const noexcept { return chain_lengths.size(); }
  void validate() const;
};

/// A finite lattice with precomputed order relation and join/meet tables.
///
/// Instances are only produced by the factory functions below, which check
/// every lattice axiom eagerly; a FiniteLattice value therefore always has
/// total, well-defined join and meet. Immutable after construction.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(const std::string& label) const;

  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  friend FiniteLattice from_cover_relations(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

 private:
  FiniteLattice() = default;

  std::vector<std::string> labels_;
  std::vector<unsigned char> leq_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice from its Hasse diagram. `covers` holds (lower, upper)
/// pairs. Throws Error{UnknownLabel, DuplicateLabel, CycleDetected,
/// NotALattice}; the NotALattice message names a witness pair.
FiniteLattice from_cover_relations(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers);

/// k chains of lengths n_1..n_k glued between a common bottom `s` and top
/// `t`. Elements are indexed s, x1_1, ..., x1_{n_1}, x2_1, ..., t.
FiniteLattice crystal(const CrystalParams& params);

/// Index of x_{chain,pos} (both 1-based) in a crystal lattice.
Element crystal_element(const CrystalParams& params, int chain, int pos);

/// Unordered incomparable pairs (a < b by index), lexicographic order.
std::vector<std::pair<Element, Element>> incomparable_pairs(const FiniteLattice& lattice);

bool is_distributive(const FiniteLattice& lattice);
bool is_modular(const FiniteLattice& lattice);

struct CoverFile {
  std::vector<std::string> labels;  // in order of first appearance
  std::vector<std::pair<std::string, std::string>> covers;
};

/// Parses the `lower upper` per-line cover format. '#' lines are comments;
/// a line with a single token declares an isolated label.
CoverFile parse_cover_file(std::istream& in);

}  // namespace crystal
