#include "crystal/betti.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "crystal/errors.hpp"
#include "crystal/linalg.hpp"
#include "parallel.hpp"

namespace crystal {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

int BettiTable::projective_dimension() const noexcept {
  int p = -1;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

BettiTable BettiTable::truncated(int i_max) const {
  BettiTable out(characteristic_);
  for (const auto& [key, v] : entries_)
    if (key.first <= i_max) out.entries_[key] = v;
  out.max_index_ = max_index_ ? std::min(*max_index_, i_max) : i_max;
  return out;
}

std::uint64_t total_betti(const BettiTable& table, int i) {
  std::uint64_t sum = 0;
  for (const auto& [key, v] : table.entries())
    if (key.first == i) sum += v;
  return sum;
}

namespace {

using Mask = std::uint64_t;

bool is_unit_ideal(const MonomialIdeal& ideal) {
  return std::any_of(ideal.min_gens().begin(), ideal.min_gens().end(),
                     [](const Monomial& g) { return g.is_one(); });
}

Mask to_mask(const Monomial& m) {
  Mask out = 0;
  for (std::size_t v = 0; v < m.var_count(); ++v)
    if (m[v]) out |= Mask{1} << v;
  return out;
}

std::vector<Mask> squarefree_masks(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw Error(ErrorKind::NonSquarefreeIdeal,
                "the Hochster route needs a squarefree ideal; use the Taylor route");
  if (ideal.var_count() > 64)
    throw Error(ErrorKind::TooManyVariables, "the Hochster route supports at most 64 variables");
  std::vector<Mask> gens;
  for (const auto& g : ideal.min_gens()) gens.push_back(to_mask(g));
  return gens;
}

// Lcms of generator subsets of size 1..max_size (unbounded when nullopt).
std::vector<Mask> lcm_closure(const std::vector<Mask>& gens, std::optional<int> max_size) {
  std::unordered_set<Mask> seen;
  std::vector<Mask> all;
  if (!max_size) {
    for (Mask g : gens) {
      const std::size_t existing = all.size();
      if (seen.insert(g).second) all.push_back(g);
      for (std::size_t k = 0; k < existing; ++k) {
        Mask l = all[k] | g;
        if (seen.insert(l).second) all.push_back(l);
      }
    }
    return all;
  }
  std::vector<Mask> frontier;
  for (Mask g : gens)
    if (seen.insert(g).second) frontier.push_back(g);
  all = frontier;
  for (int size = 2; size <= *max_size && !frontier.empty(); ++size) {
    std::vector<Mask> next;
    for (Mask l : frontier)
      for (Mask g : gens) {
        Mask u = l | g;
        if (seen.insert(u).second) next.push_back(u);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

// K^b over the vertices supp(b); facets are supp(b) minus each generator
// dividing b, re-indexed to local vertex positions.
SimplicialComplex koszul_from_masks(const std::vector<Mask>& gens, Mask b) {
  std::vector<std::size_t> vertices;
  for (Mask rest = b; rest; rest &= rest - 1) vertices.push_back(std::countr_zero(rest));
  auto compress = [&](Mask m) {
    Mask out = 0;
    for (std::size_t pos = 0; pos < vertices.size(); ++pos)
      if (m >> vertices[pos] & 1) out |= Mask{1} << pos;
    return out;
  };
  std::vector<SimplicialComplex::Face> facets;
  for (Mask g : gens)
    if ((g & ~b) == 0) facets.push_back(compress(b & ~g));
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

using Contribution = std::vector<std::pair<BettiTable::Key, std::uint64_t>>;

}  // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
  const auto& gens = ideal.min_gens();
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> all;
  for (const auto& g : gens) {
    const std::size_t existing = all.size();
    if (seen.insert(g).second) all.push_back(g);
    for (std::size_t k = 0; k < existing; ++k) {
      Monomial l = lcm(all[k], g);
      if (seen.insert(l).second) all.push_back(std::move(l));
    }
  }
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
  });
  return LcmLattice{std::move(all)};
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, const Multidegree& b) {
  if (b.var_count() != ideal.var_count())
    throw Error(ErrorKind::ContextMismatch, "multidegree length differs from the ideal");
  if (!b.is_squarefree())
    throw Error(ErrorKind::NonSquarefreeDegree,
                "upper Koszul complexes are only built for squarefree degrees");
  if (ideal.var_count() > 64)
    throw Error(ErrorKind::TooManyVariables, "at most 64 variables are supported");
  // Membership of x^(b - tau) is tested by divisibility, so non-squarefree
  // generators simply never divide a squarefree degree's cofaces.
  std::vector<Mask> gens;
  for (const auto& g : ideal.min_gens())
    if (g.is_squarefree()) gens.push_back(to_mask(g));
  return koszul_from_masks(gens, to_mask(b));
}

BettiTable graded_betti_hochster(const MonomialIdeal& ideal, const BettiOptions& options) {
  BettiTable table(options.characteristic);
  table.set_max_index(options.max_index);
  if (options.max_index && *options.max_index < 0) return table;
  const std::vector<Mask> gens = squarefree_masks(ideal);
  if (is_unit_ideal(ideal)) return table;
  table.add(0, 0, 1);
  if (gens.empty() || (options.max_index && *options.max_index == 0)) return table;

  std::vector<Mask> degrees;
  if (options.visit_all_squarefree) {
    if (ideal.var_count() > 20)
      throw Error(ErrorKind::TooManyVariables, "exhaustive squarefree visit limited to 20 variables");
    for (Mask b = 1; b < (Mask{1} << ideal.var_count()); ++b) degrees.push_back(b);
  } else {
    degrees = lcm_closure(gens, options.max_index);
  }

  const std::uint32_t ch = options.characteristic;
  auto slots = detail::parallel_chunks<Contribution>(
      degrees.size(), options.jobs, [&](std::size_t begin, std::size_t end, Contribution& out) {
        for (std::size_t k = begin; k < end; ++k) {
          const Mask b = degrees[k];
          SimplicialComplex cx = koszul_from_masks(gens, b);
          if (cx.is_void()) continue;
          if (options.collapse) cx = strong_collapse_core(cx);
          auto ranks = reduced_homology_ranks(cx, ch);
          const int degree = std::popcount(b);
          for (std::size_t level = 0; level < ranks.size(); ++level) {
            // ranks[level] is H~_{level-1}; it contributes to B_{level+1}.
            const int i = static_cast<int>(level) + 1;
            if (options.max_index && i > *options.max_index) break;
            if (ranks[level]) out.emplace_back(BettiTable::Key{i, degree}, ranks[level]);
          }
        }
      });
  for (const auto& slot : slots)
    for (const auto& [key, v] : slot) table.add(key.first, key.second, v);
  return table;
}

namespace {

struct TaylorStratum {
  int degree = 0;
  std::vector<std::vector<Mask>> by_size;  // subsets (generator masks) by cardinality
};

}  // namespace

BettiTable graded_betti_taylor(const MonomialIdeal& ideal, const BettiOptions& options) {
  BettiTable table(options.characteristic);
  table.set_max_index(options.max_index);
  if (options.max_index && *options.max_index < 0) return table;
  if (is_unit_ideal(ideal)) return table;
  const auto& gens = ideal.min_gens();
  const std::size_t m = gens.size();
  if (m > 64) throw Error(ErrorKind::TooManyGenerators, "the Taylor route supports at most 64 generators");

  // Homology at subset size s needs chains of size s + 1.
  std::size_t max_size = m;
  if (options.max_index) max_size = std::min<std::size_t>(m, static_cast<std::size_t>(*options.max_index) + 1);
  // Resource guard: number of enumerated subsets must stay within 2^limit.
  {
    long double count = 0, binom = 1;
    for (std::size_t s = 0; s <= max_size; ++s) {
      count += binom;
      binom = binom * static_cast<long double>(m - s) / static_cast<long double>(s + 1);
    }
    long double limit = std::ldexp(1.0L, static_cast<int>(options.max_taylor_generators));
    if (count > limit)
      throw Error(ErrorKind::TooManyGenerators,
                  "Taylor complex too large: " + std::to_string(m) + " generators (limit " +
                      std::to_string(options.max_taylor_generators) + " for a full run)");
  }

  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  std::vector<TaylorStratum> strata;
  auto record = [&](Mask subset, const Monomial& l, std::size_t size) {
    auto [it, fresh] = index.emplace(l, strata.size());
    if (fresh) {
      strata.emplace_back();
      strata.back().degree = static_cast<int>(l.degree());
      strata.back().by_size.resize(max_size + 1);
    }
    strata[it->second].by_size[size].push_back(subset);
  };

  // Depth-first enumeration with incremental lcm; subsets are emitted in
  // increasing mask order within each size after the sort below.
  struct Frame {
    std::size_t next;
    Mask subset;
    Monomial l;
    std::size_t size;
  };
  std::vector<Frame> stack{{0, 0, Monomial(ideal.var_count()), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    record(f.subset, f.l, f.size);
    if (f.size == max_size) continue;
    for (std::size_t g = f.next; g < m; ++g)
      stack.push_back(Frame{g + 1, f.subset | Mask{1} << g, lcm(f.l, gens[g]), f.size + 1});
  }
  for (auto& st : strata)
    for (auto& v : st.by_size) std::sort(v.begin(), v.end());

  const std::uint32_t ch = options.characteristic;
  auto slots = detail::parallel_chunks<Contribution>(
      strata.size(), options.jobs, [&](std::size_t begin, std::size_t end, Contribution& out) {
        for (std::size_t k = begin; k < end; ++k) {
          const auto& st = strata[k];
          // boundary_rank[s]: rank of the map from size-s subsets to size s-1.
          std::vector<std::size_t> boundary_rank(max_size + 2, 0);
          for (std::size_t s = 1; s <= max_size; ++s) {
            const auto& hi = st.by_size[s];
            const auto& lo = st.by_size[s - 1];
            if (hi.empty() || lo.empty()) continue;
            SparseMatrix mat(hi.size(), lo.size());
            for (std::size_t r = 0; r < hi.size(); ++r) {
              int pos = 0;
              for (Mask rest = hi[r]; rest; rest &= rest - 1, ++pos) {
                Mask face = hi[r] & ~(rest & (~rest + 1));
                // Faces with a smaller lcm vanish after tensoring with the
                // residue field, so only same-stratum faces appear.
                auto it = std::lower_bound(lo.begin(), lo.end(), face);
                if (it != lo.end() && *it == face)
                  mat.row_entries[r].emplace_back(static_cast<std::uint32_t>(it - lo.begin()),
                                                  pos % 2 == 0 ? 1 : -1);
              }
              std::sort(mat.row_entries[r].begin(), mat.row_entries[r].end());
            }
            boundary_rank[s] = matrix_rank(mat, ch);
          }
          std::size_t top = options.max_index ? std::min<std::size_t>(max_size, *options.max_index)
                                              : max_size;
          for (std::size_t s = 0; s <= top; ++s) {
            std::uint64_t h = st.by_size[s].size() - boundary_rank[s] - boundary_rank[s + 1];
            if (h) out.emplace_back(BettiTable::Key{static_cast<int>(s), st.degree}, h);
          }
        }
      });
  for (const auto& slot : slots)
    for (const auto& [key, v] : slot) table.add(key.first, key.second, v);
  return table;
}

}  // namespace crystal
