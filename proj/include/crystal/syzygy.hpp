#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crystal/betti.hpp"
#include "crystal/lattice.hpp"
#include "crystal/polynomial.hpp"

namespace crystal {

/// Element of the free module F_1: generator position -> coefficient.
struct SyzygyVector {
  std::map<std::size_t, Polynomial> coords;
};

struct SyzygyFamily {
  std::string label;  // "u1", "u2", ... following the alpha-subscripts
  int degree = 0;     // total degree |a| shared by all members
  std::vector<SyzygyVector> members;
};

/// The F_1 basis and explicit first-syzygy families for the initial ideal of
/// the crystal lattice L_2(N, n2), n2 in {1, 2}.
///
/// Basis order (0-based positions):
///   n2 = 1:  x_i*y1 (i = 1..N), then x_i*s*t (i = 2..N)
///   n2 = 2:  x_i*y1 (i = 1..N), x_i*y2 (i = 1..N), x_i*s*t (i = 2..N), y2*s*t
/// where x_i is x1_i and y_j is x2_j.
struct SyzygyModel {
  int N = 0;
  int n2 = 0;
  CrystalParams params;
  PolyRing ring;
  std::vector<Monomial> basis;
  std::vector<SyzygyFamily> families;
};

/// Sum over coordinates of coefficient * generator.
/// Throws Error{IndexOutOfRange} for a coordinate outside `gens`.
Polynomial phi1_apply(std::span<const Monomial> gens, const SyzygyVector& v, const PolyRing& ring);

/// True iff every coordinate times its generator is a single term of one
/// common multidegree.
bool is_homogeneous_syzygy(std::span<const Monomial> gens, const SyzygyVector& v);

/// Families u1 (x_i x_j y1; C(N,2), degree 3), u2 (x_i x_j s t; C(N-1,2),
/// degree 4), u3 (x_i y1 s t; N-1, degree 4). Requires N >= 2.
SyzygyModel paper_syzygies_case1(int N);

/// Families u1, u2 (x_i x_j y1 / y2), u4 (x_i y1 y2) in degree 3 and u3
/// (x_i x_j s t), u5 (x_i y1 s t), u8 (x_i y2 s t against y2 s t from the
/// x_i y2 side), u9 (same degree, from the x_i s t side) in degree 4.
/// Requires N >= 2.
SyzygyModel paper_syzygies_case2(int N);

/// Closed-form member count per family label.
std::map<std::string, std::uint64_t> expected_family_counts(int N, int n2);

struct FamilySummary {
  std::string label;
  int degree;
  std::uint64_t count;
};

struct SyzygyReport {
  std::string case_label;  // "L2(N,1)" or "L2(N,2)"
  int N = 0;
  std::vector<FamilySummary> families;
  std::map<int, std::uint64_t> family_count_by_degree;
  std::map<int, std::uint64_t> betti_row2;  // j -> B_{2,j}
  std::vector<int> mismatched_degrees;
  bool pass = false;
};

/// Compares per-degree family counts with row 2 of `table`; passes iff they
/// agree in every degree that occurs on either side.
SyzygyReport verify_counts(const std::vector<SyzygyFamily>& families, const BettiTable& table,
                           std::string case_label = {}, int N = 0);

std::string render_syzygy_report_json(const SyzygyReport& report);

}  // namespace crystal
