#include <doctest.h>

#include <random>

#include "crystal/errors.hpp"
#include "crystal/lattice.hpp"
#include "crystal/polynomial.hpp"

namespace crystal {

namespace {

Monomial mono(std::vector<Exponent> e) { return Monomial(std::move(e)); }

PolyRing abc_ring(std::uint32_t p = 0) {
  return PolyRing(MonomialOrder(OrderKind::DegRevLex, VarContext::from_names({"a", "b", "c"})),
                  Field(p));
}

Polynomial random_poly(std::mt19937& rng, const PolyRing& R, int terms) {
  std::uniform_int_distribution<Exponent> e(0, 3);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    std::vector<Exponent> ex(R.var_count());
    for (auto& x : ex) x = e(rng);
    ts.push_back({Monomial(std::move(ex)), Coeff(c(rng))});
  }
  return R.make(std::move(ts));
}

std::vector<CrystalParams> crystals_up_to(int max_k, int max_n) {
  std::vector<CrystalParams> out;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> ns(static_cast<std::size_t>(k), 1);
    while (true) {
      out.push_back({ns});
      std::size_t i = 0;
      while (i < ns.size() && ns[i] == max_n) ns[i++] = 1;
      if (i == ns.size()) break;
      ++ns[i];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fields") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(Field(4), Error);
  Field f7(7);
  CHECK(f7.normalize(Coeff(-1)) == 6);
  CHECK(f7.normalize(Coeff(1, 3)) == 5);  // 3 * 5 = 15 = 1 mod 7
  CHECK(f7.inverse(Coeff(3)) == 5);
  Field q;
  CHECK(q.inverse(Coeff(3)) == Coeff(1, 3));
  CHECK_THROWS_AS(q.inverse(Coeff(0)), Error);
}

TEST_CASE("make sorts, merges and drops zeros") {
  auto R = abc_ring();
  auto p = R.make({{mono({1, 0, 0}), 2}, {mono({0, 0, 2}), 1}, {mono({1, 0, 0}), -2}, {mono({0, 1, 1}), 3}});
  REQUIRE(p.size() == 2);
  CHECK(p.leading_monomial() == mono({0, 0, 2}));
  CHECK(R.to_string(p) == "c^2 + 3*b*c");
  CHECK(R.to_string(Polynomial{}) == "0");
  CHECK(R.to_string(R.constant(-4)) == "-4");
  CHECK(R.to_string(R.binomial(mono({1, 1, 0}), mono({2, 0, 0}))) == "a*b - a^2");
  CHECK(R.to_string(R.make({{mono({0, 0, 1}), Coeff(-1, 2)}, {Monomial(3), 1}})) == "-1/2*c + 1");
}

TEST_CASE("ring arithmetic identities") {
  auto R = abc_ring();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly(rng, R, 4), g = random_poly(rng, R, 3), h = random_poly(rng, R, 2);
    REQUIRE(R.add(f, g) == R.add(g, f));
    REQUIRE(R.sub(f, f).is_zero());
    REQUIRE(R.add(f, R.neg(f)).is_zero());
    REQUIRE(R.mul(f, g) == R.mul(g, f));
    REQUIRE(R.mul(f, R.add(g, h)) == R.add(R.mul(f, g), R.mul(f, h)));
    REQUIRE(R.scale(f, 3) == R.add(f, R.add(f, f)));
    if (!f.is_zero()) REQUIRE(R.monic(f).leading_coeff() == 1);
  }
}

TEST_CASE("characteristic p arithmetic") {
  auto R = abc_ring(3);
  auto x = R.variable(0);
  auto p = R.add(R.add(x, x), x);
  CHECK(p.is_zero());
  auto q = R.scale(R.variable(1), -1);
  CHECK(R.to_string(q) == "2*b");
}

TEST_CASE("homogeneity") {
  auto R = abc_ring();
  CHECK(R.binomial(mono({1, 1, 0}), mono({0, 0, 2})).is_homogeneous());
  CHECK_FALSE(R.add(R.variable(0), R.constant(1)).is_homogeneous());
}

TEST_CASE("s-polynomial of two lattice binomials, worked by hand") {
  // crystal(2,[2,1]) variables s, x1_1, x1_2, x2_1, t
  auto L = crystal(CrystalParams{{2, 1}});
  PolyRing R(MonomialOrder(OrderKind::DegRevLex, VarContext::from_lattice(L)));
  auto f = R.binomial(mono({0, 1, 0, 1, 0}), mono({1, 0, 0, 0, 1}));  // x1_1 x2_1 - s t
  auto g = R.binomial(mono({0, 0, 1, 1, 0}), mono({1, 0, 0, 0, 1}));  // x1_2 x2_1 - s t
  REQUIRE(f.leading_monomial() == mono({0, 1, 0, 1, 0}));
  REQUIRE(g.leading_monomial() == mono({0, 0, 1, 1, 0}));
  // lcm = x1_1 x1_2 x2_1; S = x1_2 f - x1_1 g = x1_1 s t - x1_2 s t, and
  // s x1_2 t leads because it has the smaller x1_1 exponent
  auto S = s_polynomial(f, g, R);
  CHECK(R.to_string(S) == "-s*x1_2*t + s*x1_1*t");
  // neither leading monomial divides x1_2 s t, so S is already reduced
  std::vector<Polynomial> G{f, g};
  CHECK(normal_form(S, G, R) == S);
}

TEST_CASE("normal form") {
  auto R = abc_ring();
  // G = {a^2 - b, a*b - c} ; leading terms are the quadratics
  std::vector<Polynomial> G{R.make({{mono({2, 0, 0}), 1}, {mono({0, 1, 0}), -1}}),
                            R.make({{mono({1, 1, 0}), 1}, {mono({0, 0, 1}), -1}})};
  auto f = R.monomial(mono({3, 0, 0}));  // a^3 -> a*b -> c
  CHECK(R.to_string(normal_form(f, G, R)) == "c");
  CHECK(normal_form(G[0], G, R).is_zero());
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_poly(rng, R, 5);
    auto r = normal_form(h, G, R);
    REQUIRE(normal_form(r, G, R) == r);
    for (const auto& t : r.terms())
      for (const auto& g : G) REQUIRE_FALSE(g.leading_monomial().divides(t.monomial));
  }
  std::vector<Polynomial> with_zero{Polynomial{}};
  CHECK_THROWS_AS(normal_form(f, with_zero, R), Error);
}

TEST_CASE("degrevlex over the element ranking is compatible with every small crystal") {
  for (const auto& p : crystals_up_to(3, 4)) {
    auto L = crystal(p);
    MonomialOrder o(OrderKind::DegRevLex, VarContext::from_lattice(L));
    REQUIRE(is_compatible_order(L, o));
  }
}

TEST_CASE("lex and deglex are not compatible with a crystal") {
  auto L = crystal(CrystalParams{{2, 1}});
  CHECK_FALSE(is_compatible_order(L, MonomialOrder(OrderKind::Lex, VarContext::from_lattice(L))));
  CHECK_FALSE(is_compatible_order(L, MonomialOrder(OrderKind::DegLex, VarContext::from_lattice(L))));
  // chains have no incomparable pairs, so anything goes
  auto C = crystal(CrystalParams{{3}});
  CHECK(is_compatible_order(C, MonomialOrder(OrderKind::Lex, VarContext::from_lattice(C))));
}

TEST_CASE("compatibility needs a matching context") {
  auto L = crystal(CrystalParams{{2, 1}});
  MonomialOrder o(OrderKind::DegRevLex, VarContext::from_names({"a", "b"}));
  CHECK_THROWS_AS(is_compatible_order(L, o), Error);
}

}  // namespace crystal
