#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace crystal {

/// Finite simplicial complex stored by its facets. Vertices are labelled by
/// caller-chosen indices (variable indices in practice); faces are bitmasks
/// over positions in `vertices()`, so at most 64 vertices are supported.
///
/// Two degenerate complexes are distinguished: the void complex (no faces at
/// all, no facets) and the empty-face complex {∅} (a single empty facet).
class SimplicialComplex {
 public:
  using Face = std::uint64_t;

  SimplicialComplex() = default;  // void complex on no vertices
  /// Non-maximal and duplicate facets are dropped.
  SimplicialComplex(std::vector<std::size_t> vertices, std::vector<Face> facets);

  static SimplicialComplex void_complex(std::vector<std::size_t> vertices = {});
  static SimplicialComplex empty_face(std::vector<std::size_t> vertices = {});

  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(Face face) const noexcept;
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept;
  std::size_t face_count() const;

  /// All faces grouped by dimension: result[d + 1] holds the d-faces in
  /// increasing bitmask order (so lexicographic in vertex position).
  std::vector<std::vector<Face>> faces_by_dimension() const;

 private:
  std::vector<std::size_t> vertices_;
  std::vector<Face> facets_;
};

/// dim H~_d for d = -1 .. dimension(), stored at index d + 1. The void
/// complex yields an empty vector. characteristic 0 computes over Q.
std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& cx,
                                                  std::uint32_t characteristic);

/// Repeatedly deletes dominated vertices (v such that every facet through v
/// also contains some fixed w != v). Each deletion is a strong collapse, so
/// the result is homotopy equivalent to the input and has the same reduced
/// homology over any field.
SimplicialComplex strong_collapse_core(const SimplicialComplex& cx);

}  // namespace crystal
