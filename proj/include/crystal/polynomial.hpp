#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crystal/monomial.hpp"

namespace crystal {

class FiniteLattice;

using Coeff = mpq_class;

/// Ground field: characteristic 0 (exact rationals) or a prime p, in which
/// case coefficients are kept as integer representatives in [0, p).
class Field {
 public:
  Field() = default;
  /// Throws Error{InvalidArgument} unless p is 0 or a prime.
  explicit Field(std::uint32_t characteristic);

  std::uint32_t characteristic() const noexcept { return p_; }
  Coeff normalize(const Coeff& c) const;
  Coeff inverse(const Coeff& c) const;

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n) noexcept;

struct Term {
  Monomial monomial;
  Coeff coeff;
};

/// Sparse polynomial; terms are strictly decreasing under the owning ring's
/// order and no stored coefficient is zero, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }
  bool is_homogeneous() const noexcept;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

/// Arithmetic context: a monomial order plus a ground field. All polynomial
/// operations go through a ring so sorting and coefficient reduction agree.
class PolyRing {
 public:
  explicit PolyRing(MonomialOrder order, Field field = Field{})
      : order_(std::move(order)), field_(field) {}

  const MonomialOrder& order() const noexcept { return order_; }
  const VarContext& context() const noexcept { return order_.context(); }
  const Field& field() const noexcept { return field_; }
  std::size_t var_count() const noexcept { return context().size(); }

  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial constant(const Coeff& c) const;
  Polynomial monomial(const Monomial& m, const Coeff& c = 1) const;
  Polynomial variable(std::size_t var) const;
  /// a*b - c*d for lattice-style binomials.
  Polynomial binomial(const Monomial& plus, const Monomial& minus) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, const Coeff& c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, const Coeff& c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial monic(const Polynomial& a) const;

  /// Canonical text: terms in decreasing order, `coeff*var^e` with `^1` and
  /// unit coefficients omitted; "0" for the zero polynomial.
  std::string to_string(const Polynomial& p) const;

 private:
  // a + c*m*b; the workhorse for add/sub and reduction steps.
  Polynomial axpy(const Polynomial& a, const Coeff& c, const Monomial* m,
                  const Polynomial& b) const;

  MonomialOrder order_;
  Field field_;
};

/// Full multivariate division remainder of f by G. The first element of G
/// (in sequence order) whose leading monomial divides the current term is
/// used, so the result is deterministic for a given sequence.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const PolyRing& ring);

/// (lcm/LT(f))*f - (lcm/LT(g))*g over the leading monomials' lcm.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PolyRing& ring);

/// True iff every join-meet binomial ab - (a v b)(a ^ b) of an incomparable
/// pair has leading monomial ab. The order's context must come from `lattice`.
bool is_compatible_order(const FiniteLattice& lattice, const MonomialOrder& order);

}  // namespace crystal
