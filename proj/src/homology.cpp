#include "crystal/homology.hpp"

#include <algorithm>
#include <bit>

#include "crystal/errors.hpp"
#include "crystal/linalg.hpp"

namespace crystal {

namespace {

std::vector<SimplicialComplex::Face> maximal_only(std::vector<SimplicialComplex::Face> faces) {
  // Larger faces first so each candidate only needs checking against kept ones.
  std::sort(faces.begin(), faces.end(), [](auto a, auto b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<SimplicialComplex::Face> kept;
  for (auto f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](auto g) { return (f & ~g) == 0; });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > 64)
    throw Error(ErrorKind::TooManyVariables, "simplicial complexes support at most 64 vertices");
  const Face all = vertices_.size() == 64 ? ~Face{0} : (Face{1} << vertices_.size()) - 1;
  for (Face f : facets)
    if (f & ~all) throw Error(ErrorKind::IndexOutOfRange, "facet uses an unknown vertex");
  facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::size_t> vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_face(std::vector<std::size_t> vertices) {
  return SimplicialComplex(std::move(vertices), {Face{0}});
}

bool SimplicialComplex::contains(Face face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const noexcept {
  int d = -2;
  for (Face f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::vector<std::vector<SimplicialComplex::Face>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(dimension() + 2));
  for (Face f : facets_) {
    // Enumerate all submasks of the facet, including the empty face.
    for (Face sub = f;; sub = (sub - 1) & f) {
      out[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
      if (sub == 0) break;
    }
  }
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& v : faces_by_dimension()) n += v.size();
  return n;
}

std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& cx,
                                                  std::uint32_t characteristic) {
  if (cx.is_void()) return {};
  auto faces = cx.faces_by_dimension();  // faces[k] holds (k-1)-faces
  const std::size_t levels = faces.size();

  // rank of the boundary from level k to level k-1, for k >= 1.
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& hi = faces[k];
    const auto& lo = faces[k - 1];
    SparseMatrix m(hi.size(), lo.size());
    for (std::size_t r = 0; r < hi.size(); ++r) {
      SimplicialComplex::Face f = hi[r];
      int pos = 0;
      auto& row = m.row_entries[r];
      for (SimplicialComplex::Face rest = f; rest; rest &= rest - 1, ++pos) {
        SimplicialComplex::Face bit = rest & (~rest + 1);
        auto it = std::lower_bound(lo.begin(), lo.end(), f & ~bit);
        row.emplace_back(static_cast<std::uint32_t>(it - lo.begin()), pos % 2 == 0 ? 1 : -1);
      }
      std::sort(row.begin(), row.end());
    }
    boundary_rank[k] = matrix_rank(m, characteristic);
  }

  std::vector<std::uint64_t> ranks(levels, 0);
  for (std::size_t k = 0; k < levels; ++k)
    ranks[k] = faces[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return ranks;
}

SimplicialComplex strong_collapse_core(const SimplicialComplex& cx) {
  using Face = SimplicialComplex::Face;
  std::vector<Face> facets = cx.facets();
  for (bool changed = true; changed;) {
    changed = false;
    Face support = 0;
    for (Face f : facets) support |= f;
    for (Face rest = support; rest; rest &= rest - 1) {
      Face v = rest & (~rest + 1);
      Face common = ~Face{0};
      for (Face f : facets)
        if (f & v) common &= f;
      if (common & ~v) {
        for (Face& f : facets) f &= ~v;
        facets = maximal_only(std::move(facets));
        changed = true;
        break;
      }
    }
  }
  return SimplicialComplex(cx.vertices(), std::move(facets));
}

}  // namespace crystal
