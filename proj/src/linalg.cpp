#include "crystal/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "crystal/errors.hpp"
#include "crystal/polynomial.hpp"

namespace crystal {

namespace {

template <typename T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

struct Overflow {};

// Reduces incoming rows against pivots keyed by leading column. `Eliminate`
// returns the row with its leading entry cancelled by the pivot row.
template <typename T, typename Convert, typename Eliminate>
std::size_t sparse_rank(const SparseMatrix& m, Convert convert, Eliminate eliminate) {
  std::vector<std::size_t> order(m.rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row_entries[a].size() < m.row_entries[b].size();
  });

  std::vector<Row<T>> pivots;
  std::vector<std::int64_t> pivot_of(m.cols, -1);
  for (std::size_t idx : order) {
    Row<T> row;
    row.reserve(m.row_entries[idx].size());
    for (const auto& [c, v] : m.row_entries[idx]) {
      T x = convert(v);
      if (x != 0) row.emplace_back(c, std::move(x));
    }
    while (!row.empty()) {
      std::int64_t p = pivot_of[row.front().first];
      if (p < 0) {
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        break;
      }
      row = eliminate(row, pivots[static_cast<std::size_t>(p)]);
    }
    if (pivots.size() == std::min(m.rows, m.cols)) break;
  }
  return pivots.size();
}

// Merge a*x + b*y over two sorted rows, dropping zeros.
template <typename T, typename Combine>
Row<T> merge(const Row<T>& x, const Row<T>& y, Combine combine) {
  Row<T> out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin(), iy = y.begin();
  T zero{0};
  while (ix != x.end() || iy != y.end()) {
    std::uint32_t c;
    T v;
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      c = ix->first;
      v = combine(ix->second, zero);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      c = iy->first;
      v = combine(zero, iy->second);
      ++iy;
    } else {
      c = ix->first;
      v = combine(ix->second, iy->second);
      ++ix;
      ++iy;
    }
    if (v != 0) out.emplace_back(c, std::move(v));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::size_t rank_sparse_int64(const SparseMatrix& m) {
  auto eliminate = [](const Row<std::int64_t>& row, const Row<std::int64_t>& pivot) {
    std::int64_t a = pivot.front().second, b = row.front().second;
    std::int64_t g = std::gcd(a, b);
    a /= g;
    b /= g;
    auto out = merge<std::int64_t>(row, pivot, [&](std::int64_t x, std::int64_t y) {
      return checked_sub(checked_mul(a, x), checked_mul(b, y));
    });
    std::int64_t content = 0;
    for (const auto& e : out) content = std::gcd(content, e.second);
    if (content > 1)
      for (auto& e : out) e.second /= content;
    return out;
  };
  return sparse_rank<std::int64_t>(m, [](std::int64_t v) { return v; }, eliminate);
}

std::size_t rank_sparse_mpz(const SparseMatrix& m) {
  auto eliminate = [](const Row<mpz_class>& row, const Row<mpz_class>& pivot) {
    mpz_class a = pivot.front().second, b = row.front().second;
    mpz_class g = gcd(a, b);
    a /= g;
    b /= g;
    auto out = merge<mpz_class>(row, pivot,
                                [&](const mpz_class& x, const mpz_class& y) -> mpz_class {
                                  return a * x - b * y;
                                });
    mpz_class content = 0;
    for (const auto& e : out) content = gcd(content, e.second);
    if (content > 1)
      for (auto& e : out) e.second /= content;
    return out;
  };
  return sparse_rank<mpz_class>(m, [](std::int64_t v) { return mpz_class(static_cast<long>(v)); },
                                eliminate);
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "rank_mod_p needs a prime modulus below 2^31");
  const std::int64_t P = p;
  auto reduce = [P](std::int64_t v) {
    v %= P;
    return v < 0 ? v + P : v;
  };
  auto inverse = [P](std::int64_t a) {
    std::int64_t r = 1, e = P - 2, b = a;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return r;
  };
  auto eliminate = [&](const Row<std::int64_t>& row, const Row<std::int64_t>& pivot) {
    std::int64_t f = row.front().second * inverse(pivot.front().second) % P;
    return merge<std::int64_t>(row, pivot, [&](std::int64_t x, std::int64_t y) {
      return reduce(x - f * y);
    });
  };
  return sparse_rank<std::int64_t>(m, reduce, eliminate);
}

std::size_t rank_bareiss(const SparseMatrix& m) {
  const std::size_t R = m.rows, C = m.cols;
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C, 0));
  for (std::size_t r = 0; r < R; ++r)
    for (const auto& [c, v] : m.row_entries[r]) a[r][c] = static_cast<long>(v);

  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t piv = rank;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      for (std::size_t c = col + 1; c < C; ++c) {
        a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_sparse_integer(const SparseMatrix& m) {
  try {
    return rank_sparse_int64(m);
  } catch (const Overflow&) {
    return rank_sparse_mpz(m);
  }
}

std::size_t matrix_rank(const SparseMatrix& m, std::uint32_t characteristic) {
  if (characteristic != 0) return rank_mod_p(m, characteristic);
  constexpr std::size_t kDenseLimit = 64 * 64;
  if (m.rows * m.cols <= kDenseLimit) return rank_bareiss(m);
  return rank_sparse_integer(m);
}

}  // namespace crystal
