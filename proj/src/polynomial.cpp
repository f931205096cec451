#include "crystal/polynomial.hpp"

#include <algorithm>

#include "crystal/errors.hpp"
#include "crystal/lattice.hpp"

namespace crystal {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw Error(ErrorKind::InvalidArgument,
                "characteristic must be 0 or a prime, got " + std::to_string(p_));
}

Coeff Field::normalize(const Coeff& c) const {
  if (p_ == 0) {
    Coeff out = c;
    out.canonicalize();
    return out;
  }
  mpz_class p = p_;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator vanishes modulo p");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class num = c.get_num() * inv % p;
  if (num < 0) num += p;
  return Coeff(num);
}

Coeff Field::inverse(const Coeff& c) const {
  if (c == 0) throw Error(ErrorKind::InvalidArgument, "division by zero coefficient");
  if (p_ == 0) return Coeff(1) / c;
  return normalize(Coeff(1) / normalize(c));
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial PolyRing::make(std::vector<Term> terms) const {
  for (auto& t : terms) {
    if (t.monomial.var_count() != var_count())
      throw Error(ErrorKind::ContextMismatch, "term over the wrong number of variables");
    t.coeff = field_.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field_.normalize(p.terms_.back().coeff + t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial PolyRing::constant(const Coeff& c) const {
  return monomial(Monomial(var_count()), c);
}

Polynomial PolyRing::monomial(const Monomial& m, const Coeff& c) const {
  return make({Term{m, c}});
}

Polynomial PolyRing::variable(std::size_t var) const {
  return monomial(Monomial::variable(var_count(), var));
}

Polynomial PolyRing::binomial(const Monomial& plus, const Monomial& minus) const {
  return make({Term{plus, 1}, Term{minus, -1}});
}

Polynomial PolyRing::axpy(const Polynomial& a, const Coeff& c, const Monomial* m,
                          const Polynomial& b) const {
  Polynomial out;
  if (c == 0) return a;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto scaled = [&](const Term& t) {
    return Term{m ? t.monomial * *m : t.monomial, field_.normalize(c * t.coeff)};
  };
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end()) {
      out.terms_.push_back(*ia++);
      continue;
    }
    Term tb = scaled(*ib);
    if (ia == a.terms_.end()) {
      out.terms_.push_back(std::move(tb));
      ++ib;
      continue;
    }
    auto ord = order_.cmp(ia->monomial, tb.monomial);
    if (ord > 0) {
      out.terms_.push_back(*ia++);
    } else if (ord < 0) {
      out.terms_.push_back(std::move(tb));
      ++ib;
    } else {
      Coeff sum = field_.normalize(ia->coeff + tb.coeff);
      if (sum != 0) out.terms_.push_back(Term{ia->monomial, sum});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  return axpy(a, 1, nullptr, b);
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return axpy(a, -1, nullptr, b);
}

Polynomial PolyRing::neg(const Polynomial& a) const { return scale(a, -1); }

Polynomial PolyRing::scale(const Polynomial& a, const Coeff& c) const {
  return axpy(Polynomial{}, c, nullptr, a);
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, const Coeff& c) const {
  // Multiplication by a monomial preserves the order, so no re-sort.
  return axpy(Polynomial{}, c, &m, a);
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  for (const auto& t : a.terms_) out = axpy(out, t.coeff, &t.monomial, b);
  return out;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inverse(a.leading_coeff()));
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms_) {
    Coeff c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool unit = c == 1;
    if (t.monomial.is_one()) {
      out += c.get_str();
    } else {
      if (!unit) out += c.get_str() + '*';
      out += t.monomial.to_string(context());
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G, const PolyRing& ring) {
  for (const auto& g : G)
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "normal_form: zero divisor");

  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : G)
      if (g.leading_monomial().divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      Monomial shift = divisor->leading_monomial().quotient_of(lt.monomial);
      Coeff c = -lt.coeff * ring.field().inverse(divisor->leading_coeff());
      p = ring.add(p, ring.mul_term(*divisor, shift, c));
    } else {
      remainder.push_back(lt);
      p = ring.sub(p, ring.monomial(lt.monomial, lt.coeff));
    }
  }
  // Remainder terms were emitted in decreasing order already.
  return ring.make(std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PolyRing& ring) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorKind::InvalidArgument, "s_polynomial of a zero polynomial");
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Field& K = ring.field();
  Polynomial a = ring.mul_term(f, f.leading_monomial().quotient_of(l), K.inverse(f.leading_coeff()));
  Polynomial b = ring.mul_term(g, g.leading_monomial().quotient_of(l), K.inverse(g.leading_coeff()));
  return ring.sub(a, b);
}

bool is_compatible_order(const FiniteLattice& lattice, const MonomialOrder& order) {
  const std::size_t n = lattice.size();
  if (order.context().size() != n)
    throw Error(ErrorKind::ContextMismatch, "order context does not match the lattice");
  for (auto [a, b] : incomparable_pairs(lattice)) {
    Monomial product = Monomial::variable(n, a) * Monomial::variable(n, b);
    Monomial jm = Monomial::variable(n, lattice.join(a, b)) * Monomial::variable(n, lattice.meet(a, b));
    if (!order.greater(product, jm)) return false;
  }
  return true;
}

}  // namespace crystal
