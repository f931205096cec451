#include "crystal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "crystal/errors.hpp"
#include "crystal/lattice.hpp"

namespace crystal {

VarContext::VarContext(std::vector<std::string> names, std::vector<std::size_t> rank)
    : names_(std::move(names)), rank_(std::move(rank)) {
  if (names_.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable context");
  if (rank_.size() != names_.size())
    throw Error(ErrorKind::InvalidArgument, "rank vector length differs from names");
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::DuplicateLabel, "variable names must be distinct");
  by_rank_.assign(names_.size(), names_.size());
  for (std::size_t v = 0; v < rank_.size(); ++v) {
    if (rank_[v] >= names_.size() || by_rank_[rank_[v]] != names_.size())
      throw Error(ErrorKind::InvalidArgument, "rank must be a permutation of 0..n-1");
    by_rank_[rank_[v]] = v;
  }
}

std::shared_ptr<const VarContext> VarContext::from_names(std::vector<std::string> names) {
  std::vector<std::size_t> rank(names.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  return std::make_shared<const VarContext>(std::move(names), std::move(rank));
}

std::shared_ptr<const VarContext> VarContext::from_lattice(const FiniteLattice& lattice) {
  return from_names(lattice.labels());
}

Monomial Monomial::variable(std::size_t var_count, std::size_t var) {
  Monomial m(var_count);
  m.exps_.at(var) = 1;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

static void check_same_length(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count())
    throw Error(ErrorKind::ContextMismatch, "monomials over different variable counts");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  check_same_length(*this, other);
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i])
      throw Error(ErrorKind::InvalidArgument, "monomial quotient is not exact");
    q.exps_[i] = other.exps_[i] - exps_[i];
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  Monomial out(a.var_count());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] > std::numeric_limits<Exponent>::max() - b.exps_[i])
      throw Error(ErrorKind::ExponentOverflow, "exponent overflow in monomial product");
    out.exps_[i] = a.exps_[i] + b.exps_[i];
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  Monomial out(a.var_count());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_length(a, b);
  Monomial out(a.var_count());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

std::string Monomial::to_string(const VarContext& ctx) const {
  if (ctx.size() != exps_.size())
    throw Error(ErrorKind::ContextMismatch, "monomial length differs from context");
  std::string out;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(v);
    if (exps_[v] != 1) out += '^' + std::to_string(exps_[v]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "deglex") return OrderKind::DegLex;
  if (name == "degrevlex") return OrderKind::DegRevLex;
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + name + "'");
}

const char* to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

std::strong_ordering MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  const std::size_t n = ctx_->size();
  if (a.var_count() != n || b.var_count() != n)
    throw Error(ErrorKind::ContextMismatch, "monomial does not belong to the order's context");
  const auto& vars = ctx_->by_rank();

  auto lex = [&]() {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] <=> b[*it];
    return std::strong_ordering::equal;
  };

  switch (kind_) {
    case OrderKind::Lex:
      return lex();
    case OrderKind::DegLex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      return lex();
    case OrderKind::DegRevLex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      for (std::size_t v : vars)
        if (a[v] != b[v]) return b[v] <=> a[v];
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

}  // namespace crystal
