// Independent reference computations used only by the tests. Nothing here
// calls into the Hochster or Taylor code paths.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "crystal/betti.hpp"
#include "crystal/ideal.hpp"
#include "crystal/lattice.hpp"

namespace oracle {

using crystal::Exponent;
using crystal::Monomial;
using crystal::MonomialIdeal;

// Plain Gaussian elimination over Q (p == 0) or F_p on a dense matrix.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a, std::uint32_t p = 0) {
  auto reduce = [p](mpq_class& x) {
    if (p == 0) return;
    mpz_class n = x.get_num() % p;
    if (n < 0) n += p;
    x = n;
  };
  auto inverse = [p](const mpq_class& x) -> mpq_class {
    if (p == 0) return 1 / x;
    mpz_class inv;
    mpz_class v = x.get_num();
    mpz_class mod = p;
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    return mpq_class(inv);
  };
  for (auto& row : a)
    for (auto& x : row) reduce(x);
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    mpq_class inv = inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] -= f * a[rank][k];
        reduce(a[r][k]);
      }
    }
    ++rank;
  }
  return rank;
}

inline bool in_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

inline Monomial lcm_all(const std::vector<Monomial>& gens, std::size_t n) {
  Monomial out(n);
  for (const auto& g : gens) out = lcm(out, g);
  return out;
}

// Betti numbers of S/I from the Koszul complex K(x_1..x_n) tensored with S/I,
// one multidegree b <= lcm(I) at a time. In degree b the i-th chain group has
// basis e_tau (x) x^(b - tau) over subsets tau of supp(b) with
// x^(b - tau) not in I; the differential drops one index of tau and
// multiplies the coefficient monomial by that variable.
inline crystal::BettiTable koszul_betti(const std::vector<Monomial>& gens, std::size_t n,
                                        std::uint32_t p = 0) {
  crystal::BettiTable table(p);
  Monomial top = lcm_all(gens, n);
  std::vector<Exponent> b(n, 0);
  while (true) {
    Monomial mb(b);
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v)
      if (b[v]) support.push_back(v);
    const std::size_t s = support.size();
    // Chain groups by |tau|; masks over positions in support.
    std::vector<std::vector<std::uint32_t>> basis(s + 1);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      std::vector<Exponent> e = b;
      for (std::size_t k = 0; k < s; ++k)
        if (mask >> k & 1) --e[support[k]];
      if (!in_ideal(gens, Monomial(e))) basis[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }
    // rank of d_i : C_i -> C_{i-1}
    std::vector<std::size_t> rk(s + 2, 0);
    for (std::size_t i = 1; i <= s; ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      std::map<std::uint32_t, std::size_t> row_of;
      for (std::size_t r = 0; r < basis[i - 1].size(); ++r) row_of[basis[i - 1][r]] = r;
      std::vector<std::vector<mpq_class>> m(basis[i - 1].size(),
                                            std::vector<mpq_class>(basis[i].size(), 0));
      for (std::size_t c = 0; c < basis[i].size(); ++c) {
        std::uint32_t tau = basis[i][c];
        int sign = 1;
        for (std::size_t k = 0; k < s; ++k) {
          if (!(tau >> k & 1)) continue;
          auto it = row_of.find(tau & ~(1u << k));
          if (it != row_of.end()) m[it->second][c] = sign;
          sign = -sign;
        }
      }
      rk[i] = dense_rank(std::move(m), p);
    }
    const int deg = static_cast<int>(mb.degree());
    for (std::size_t i = 0; i <= s; ++i) {
      std::int64_t h = static_cast<std::int64_t>(basis[i].size()) - static_cast<std::int64_t>(rk[i]) -
                       static_cast<std::int64_t>(rk[i + 1]);
      if (h > 0) table.add(static_cast<int>(i), deg, static_cast<std::uint64_t>(h));
    }
    std::size_t v = 0;
    while (v < n && b[v] == top[v]) b[v++] = 0;
    if (v == n) break;
    ++b[v];
  }
  return table;
}

// Numerator of the Hilbert series of S/I by inclusion-exclusion over
// generator subsets: sum_S (-1)^|S| t^deg(lcm S). Index = degree.
inline std::vector<std::int64_t> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t n) {
  std::vector<std::int64_t> out(1, 0);
  const std::size_t m = gens.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Monomial l(n);
    for (std::size_t k = 0; k < m; ++k)
      if (mask >> k & 1) l = lcm(l, gens[k]);
    std::size_t d = l.degree();
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] += (__builtin_popcountll(mask) % 2) ? -1 : 1;
  }
  return out;
}

// Same numerator from a Betti table: sum_{i,j} (-1)^i B_{i,j} t^j.
inline std::vector<std::int64_t> euler_numerator(const crystal::BettiTable& t) {
  std::vector<std::int64_t> out(1, 0);
  for (const auto& [key, v] : t.entries()) {
    std::size_t j = static_cast<std::size_t>(key.second);
    if (out.size() <= j) out.resize(j + 1, 0);
    out[j] += (key.first % 2 ? -1 : 1) * static_cast<std::int64_t>(v);
  }
  return out;
}

inline bool same_polynomial(std::vector<std::int64_t> a, std::vector<std::int64_t> b) {
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
  return a == b;
}

inline std::vector<Monomial> random_squarefree_gens(std::mt19937& rng, std::size_t vars,
                                                    std::size_t max_gens) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<std::uint32_t> mask_dist(1, (1u << vars) - 1);
  std::vector<Monomial> gens;
  const std::size_t m = count(rng);
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t mask = mask_dist(rng);
    std::vector<Exponent> e(vars, 0);
    for (std::size_t v = 0; v < vars; ++v) e[v] = mask >> v & 1;
    gens.emplace_back(std::move(e));
  }
  return gens;
}

// Least upper bound found by listing every upper bound.
inline crystal::Element brute_join(const crystal::FiniteLattice& L, crystal::Element a,
                                   crystal::Element b) {
  std::vector<crystal::Element> ub;
  for (crystal::Element z = 0; z < L.size(); ++z)
    if (L.leq(a, z) && L.leq(b, z)) ub.push_back(z);
  for (auto z : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](auto w) { return L.leq(z, w); })) return z;
  return L.size();
}

inline crystal::Element brute_meet(const crystal::FiniteLattice& L, crystal::Element a,
                                   crystal::Element b) {
  std::vector<crystal::Element> lb;
  for (crystal::Element z = 0; z < L.size(); ++z)
    if (L.leq(z, a) && L.leq(z, b)) lb.push_back(z);
  for (auto z : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](auto w) { return L.leq(w, z); })) return z;
  return L.size();
}

// Distributive / modular laws over all triples.
inline bool triples_distributive(const crystal::FiniteLattice& L) {
  for (crystal::Element a = 0; a < L.size(); ++a)
    for (crystal::Element b = 0; b < L.size(); ++b)
      for (crystal::Element c = 0; c < L.size(); ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

inline bool triples_modular(const crystal::FiniteLattice& L) {
  for (crystal::Element a = 0; a < L.size(); ++a)
    for (crystal::Element b = 0; b < L.size(); ++b)
      for (crystal::Element c = 0; c < L.size(); ++c)
        if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
  return true;
}

// Minimal generators of in(I) for crystal(2, [N, n2]) as index sets, written
// out from the generator description: x_i y1 (all i), x_i s t (i >= 2), and
// for n2 = 2 also x_i y2 (all i) and y2 s t.
inline std::set<std::vector<Exponent>> expected_initial_ideal(int N, int n2) {
  const std::size_t n = static_cast<std::size_t>(N + n2 + 2);
  const std::size_t s = 0, t = n - 1;
  auto x = [](int i) { return static_cast<std::size_t>(i); };
  auto y = [N](int j) { return static_cast<std::size_t>(N + j); };
  auto mono = [n](std::initializer_list<std::size_t> vs) {
    std::vector<Exponent> e(n, 0);
    for (auto v : vs) ++e[v];
    return e;
  };
  std::set<std::vector<Exponent>> out;
  for (int i = 1; i <= N; ++i) out.insert(mono({x(i), y(1)}));
  for (int i = 2; i <= N; ++i) out.insert(mono({x(i), s, t}));
  if (n2 == 2) {
    for (int i = 1; i <= N; ++i) out.insert(mono({x(i), y(2)}));
    out.insert(mono({y(2), s, t}));
  }
  return out;
}

}  // namespace oracle
