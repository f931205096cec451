#include "crystal/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "crystal/errors.hpp"

namespace crystal {

BinomialGeneratorSet join_meet_ideal(const FiniteLattice& lattice, const PolyRing& ring) {
  const std::size_t n = lattice.size();
  if (ring.var_count() != n)
    throw Error(ErrorKind::ContextMismatch, "ring variables do not match lattice elements");
  BinomialGeneratorSet out;
  for (auto pair : incomparable_pairs(lattice)) {
    auto [a, b] = pair;
    Monomial product = Monomial::variable(n, a) * Monomial::variable(n, b);
    Monomial jm = Monomial::variable(n, lattice.join(a, b)) *
                  Monomial::variable(n, lattice.meet(a, b));
    out.gens.push_back(ring.binomial(product, jm));
    out.source_pairs.push_back(pair);
  }
  return out;
}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t v = 0; v < a.var_count(); ++v)
    if (a[v] != 0 && b[v] != 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const PolyRing& ring, const BuchbergerOptions& opts, BuchbergerStats& stats)
      : ring_(ring), opts_(opts), stats_(stats) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& input) {
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      Polynomial r = normal_form(f, basis_, ring_);
      if (!r.is_zero()) insert(ring_.monic(r));
    }
    while (!pairs_.empty()) {
      if (opts_.cancel && opts_.cancel->load(std::memory_order_relaxed))
        throw Error(ErrorKind::Cancelled, "Groebner basis computation cancelled");
      Pair p = take_next();
      ++stats_.pairs_considered;
      if (coprime(basis_[p.i].leading_monomial(), basis_[p.j].leading_monomial())) {
        ++stats_.coprime_skipped;
        continue;
      }
      if (chain_criterion(p)) {
        ++stats_.chain_skipped;
        continue;
      }
      Polynomial r = normal_form(s_polynomial(basis_[p.i], basis_[p.j], ring_), basis_, ring_);
      if (r.is_zero()) {
        ++stats_.reductions_to_zero;
        continue;
      }
      insert(ring_.monic(r));
    }
    return reduce();
  }

 private:
  bool pending(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return pending_[j][i];
  }

  void insert(Polynomial f) {
    if (basis_.size() >= opts_.max_basis_size)
      throw Error(ErrorKind::Cancelled, "Groebner basis exceeded the size limit");
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(f));
    pending_.emplace_back(k, false);
    for (std::size_t i = 0; i < k; ++i) {
      pairs_.push_back(Pair{i, k, lcm(basis_[i].leading_monomial(), basis_[k].leading_monomial())});
      pending_[k][i] = true;
    }
  }

  // Normal selection strategy: smallest lcm first; ties broken by index so
  // runs are reproducible.
  Pair take_next() {
    const auto& order = ring_.order();
    auto best = pairs_.begin();
    for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
      auto c = order.cmp(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::tie(it->j, it->i) < std::tie(best->j, best->i))) best = it;
    }
    Pair p = std::move(*best);
    *best = std::move(pairs_.back());
    pairs_.pop_back();
    pending_[p.j][p.i] = false;
    return p;
  }

  // Buchberger's second criterion: some third leading monomial divides the
  // lcm and both pairs through it have already been treated.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis_[k].leading_monomial().divides(p.lcm)) continue;
      if (!pending(p.i, k) && !pending(p.j, k)) return true;
    }
    return false;
  }

  std::vector<Polynomial> reduce() {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& lm = basis_[i].leading_monomial();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const Monomial& other = basis_[j].leading_monomial();
        // Equal leading monomials: keep the first occurrence only.
        if (other.divides(lm) && (other != lm || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      const Term& lt = minimal[i].leading_term();
      Polynomial tail = ring_.sub(minimal[i], ring_.monomial(lt.monomial, lt.coeff));
      Polynomial r = ring_.add(ring_.monomial(lt.monomial, lt.coeff), normal_form(tail, others, ring_));
      reduced.push_back(ring_.monic(r));
    }
    const auto& order = ring_.order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      const Monomial& ma = a.leading_monomial();
      const Monomial& mb = b.leading_monomial();
      if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
      return order.cmp(ma, mb) < 0;
    });
    return reduced;
  }

  const PolyRing& ring_;
  const BuchbergerOptions& opts_;
  BuchbergerStats& stats_;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<bool>> pending_;  // lower triangle: pending_[j][i], i < j
};

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const PolyRing& ring,
                                   const BuchbergerOptions& options, BuchbergerStats* stats) {
  BuchbergerStats local;
  Buchberger engine(ring, options, stats ? *stats : local);
  return engine.run(gens);
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const PolyRing& ring) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j], ring), basis, ring).is_zero()) return false;
  return true;
}

MonomialIdeal::MonomialIdeal(std::size_t var_count, std::vector<Monomial> gens,
                             const MonomialOrder* order)
    : var_count_(var_count) {
  for (const auto& g : gens)
    if (g.var_count() != var_count)
      throw Error(ErrorKind::ContextMismatch, "generator over the wrong number of variables");
  if (order && order->context().size() != var_count)
    throw Error(ErrorKind::ContextMismatch, "order context does not match the ideal");

  auto less = [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (order) return order->cmp(a, b) < 0;
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(),
                                        b.exponents().begin(), b.exponents().end());
  };
  std::sort(gens.begin(), gens.end(), less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After sorting by degree, a generator can only be divided by an earlier one.
  for (const auto& g : gens) {
    bool divisible = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!divisible) gens_.push_back(g);
  }
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial());
  return MonomialIdeal(order.context().size(), std::move(lms), &order);
}

}  // namespace crystal
