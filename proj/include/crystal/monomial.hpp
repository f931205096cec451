#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace crystal {

class FiniteLattice;

/// Variable names plus the ascending ranking the monomial orders are built on.
/// rank(v) == 0 is the smallest variable.
class VarContext {
 public:
  VarContext(std::vector<std::string> names, std::vector<std::size_t> rank);

  /// Variables are the lattice elements; rank follows element index, which
  /// for crystal lattices is s < x1_1 < ... < xk_{n_k} < t.
  static std::shared_ptr<const VarContext> from_lattice(const FiniteLattice& lattice);
  /// Ranking equals index order.
  static std::shared_ptr<const VarContext> from_names(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t var) const { return names_.at(var); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t rank(std::size_t var) const { return rank_.at(var); }
  /// Variable indices sorted by ascending rank.
  const std::vector<std::size_t>& by_rank() const noexcept { return by_rank_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> by_rank_;
};

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t var_count, std::size_t var);

  std::size_t var_count() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  bool is_squarefree() const noexcept;

  bool divides(const Monomial& other) const;
  /// Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string(const VarContext& ctx) const;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { Lex, DegLex, DegRevLex };

OrderKind parse_order_kind(const std::string& name);
const char* to_string(OrderKind kind) noexcept;

/// A monomial order over a VarContext's ranking.
///
/// Lex compares exponents from the highest-ranked variable down, larger
/// exponent wins. DegLex compares total degree first, then Lex. DegRevLex
/// compares total degree first; on ties it scans from the lowest-ranked
/// variable up and the monomial with the smaller exponent at the first
/// difference is the greater one.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::shared_ptr<const VarContext> ctx)
      : kind_(kind), ctx_(std::move(ctx)) {}

  OrderKind kind() const noexcept { return kind_; }
  const VarContext& context() const noexcept { return *ctx_; }
  const std::shared_ptr<const VarContext>& context_ptr() const noexcept { return ctx_; }

  /// Throws Error{ContextMismatch} when either monomial has the wrong length.
  std::strong_ordering cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

 private:
  OrderKind kind_;
  std::shared_ptr<const VarContext> ctx_;
};

}  // namespace crystal
