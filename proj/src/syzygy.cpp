#include "crystal/syzygy.hpp"

#include <set>

#include <json.hpp>

#include "crystal/errors.hpp"

namespace crystal {

Polynomial phi1_apply(std::span<const Monomial> gens, const SyzygyVector& v, const PolyRing& ring) {
  Polynomial out;
  for (const auto& [idx, coeff] : v.coords) {
    if (idx >= gens.size())
      throw Error(ErrorKind::IndexOutOfRange,
                  "syzygy coordinate " + std::to_string(idx) + " outside F1 basis of size " +
                      std::to_string(gens.size()));
    out = ring.add(out, ring.mul_term(coeff, gens[idx], 1));
  }
  return out;
}

bool is_homogeneous_syzygy(std::span<const Monomial> gens, const SyzygyVector& v) {
  std::optional<Monomial> degree;
  for (const auto& [idx, coeff] : v.coords) {
    if (idx >= gens.size() || coeff.size() != 1) return false;
    Monomial d = coeff.leading_monomial() * gens[idx];
    if (degree && *degree != d) return false;
    degree = d;
  }
  return true;
}

namespace {

long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Variable indices in crystal(2, [N, n2]): s, x1_1..x1_N, x2_1..x2_n2, t.
struct Vars {
  int N, n2;
  std::size_t count() const { return static_cast<std::size_t>(N + n2 + 2); }
  std::size_t s() const { return 0; }
  std::size_t x(int i) const { return static_cast<std::size_t>(i); }
  std::size_t y(int j) const { return static_cast<std::size_t>(N + j); }
  std::size_t t() const { return static_cast<std::size_t>(N + n2 + 1); }

  Monomial mono(std::initializer_list<std::size_t> vars) const {
    std::vector<Exponent> e(count(), 0);
    for (auto v : vars) ++e[v];
    return Monomial(std::move(e));
  }
};

SyzygyModel make_model(int N, int n2) {
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "syzygy families need N >= 2");
  CrystalParams params{{N, n2}};
  FiniteLattice lattice = crystal(params);
  PolyRing ring(MonomialOrder(OrderKind::DegRevLex, VarContext::from_lattice(lattice)));
  return SyzygyModel{N, n2, params, std::move(ring), {}, {}};
}

// Member with coordinate m/gen_p at p and -m/gen_q at q (the d_{p,q} pattern).
SyzygyVector difference(const SyzygyModel& model, std::size_t p, std::size_t q, const Monomial& m) {
  const auto& gp = model.basis.at(p);
  const auto& gq = model.basis.at(q);
  if (!gp.divides(m) || !gq.divides(m))
    throw Error(ErrorKind::InvalidArgument, "syzygy degree is not a common multiple");
  SyzygyVector v;
  v.coords[p] = model.ring.monomial(gp.quotient_of(m), 1);
  v.coords[q] = model.ring.monomial(gq.quotient_of(m), -1);
  return v;
}

}  // namespace

SyzygyModel paper_syzygies_case1(int N) {
  SyzygyModel model = make_model(N, 1);
  const Vars V{N, 1};
  for (int i = 1; i <= N; ++i) model.basis.push_back(V.mono({V.x(i), V.y(1)}));
  for (int i = 2; i <= N; ++i) model.basis.push_back(V.mono({V.x(i), V.s(), V.t()}));

  // 1-based e-indices as written: e_i for x_i y1, e_{N+i-1} for x_i s t.
  auto e = [](int k) { return static_cast<std::size_t>(k - 1); };

  SyzygyFamily u1{"u1", 3, {}}, u2{"u2", 4, {}}, u3{"u3", 4, {}};
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      u1.members.push_back(difference(model, e(i), e(j), V.mono({V.x(i), V.x(j), V.y(1)})));
  for (int i = 2; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      u2.members.push_back(difference(model, e(N + i - 1), e(N + j - 1),
                                      V.mono({V.x(i), V.x(j), V.s(), V.t()})));
  for (int i = 2; i <= N; ++i)
    u3.members.push_back(difference(model, e(i), e(N + i - 1),
                                    V.mono({V.x(i), V.y(1), V.s(), V.t()})));
  model.families = {std::move(u1), std::move(u2), std::move(u3)};
  return model;
}

SyzygyModel paper_syzygies_case2(int N) {
  SyzygyModel model = make_model(N, 2);
  const Vars V{N, 2};
  for (int i = 1; i <= N; ++i) model.basis.push_back(V.mono({V.x(i), V.y(1)}));
  for (int i = 1; i <= N; ++i) model.basis.push_back(V.mono({V.x(i), V.y(2)}));
  for (int i = 2; i <= N; ++i) model.basis.push_back(V.mono({V.x(i), V.s(), V.t()}));
  model.basis.push_back(V.mono({V.y(2), V.s(), V.t()}));

  // e_i: x_i y1, e_{N+i}: x_i y2, e_{2N+i-1}: x_i s t, e_{3N}: y2 s t.
  auto e = [](int k) { return static_cast<std::size_t>(k - 1); };

  SyzygyFamily u1{"u1", 3, {}}, u2{"u2", 3, {}}, u4{"u4", 3, {}};
  SyzygyFamily u3{"u3", 4, {}}, u5{"u5", 4, {}}, u8{"u8", 4, {}}, u9{"u9", 4, {}};
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      u1.members.push_back(difference(model, e(i), e(j), V.mono({V.x(i), V.x(j), V.y(1)})));
      u2.members.push_back(
          difference(model, e(N + i), e(N + j), V.mono({V.x(i), V.x(j), V.y(2)})));
    }
  for (int i = 1; i <= N; ++i)
    u4.members.push_back(difference(model, e(i), e(N + i), V.mono({V.x(i), V.y(1), V.y(2)})));
  for (int i = 2; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      u3.members.push_back(difference(model, e(2 * N + i - 1), e(2 * N + j - 1),
                                      V.mono({V.x(i), V.x(j), V.s(), V.t()})));
  for (int i = 2; i <= N; ++i)
    u5.members.push_back(difference(model, e(i), e(2 * N + i - 1),
                                    V.mono({V.x(i), V.y(1), V.s(), V.t()})));
  for (int i = 1; i <= N; ++i)
    u8.members.push_back(
        difference(model, e(N + i), e(3 * N), V.mono({V.x(i), V.y(2), V.s(), V.t()})));
  for (int i = 2; i <= N; ++i)
    u9.members.push_back(difference(model, e(2 * N + i - 1), e(3 * N),
                                    V.mono({V.x(i), V.y(2), V.s(), V.t()})));
  model.families = {std::move(u1), std::move(u2), std::move(u4), std::move(u3),
                    std::move(u5), std::move(u8), std::move(u9)};
  return model;
}

std::map<std::string, std::uint64_t> expected_family_counts(int N, int n2) {
  const long n = N;
  if (n2 == 1)
    return {{"u1", choose2(n)}, {"u2", choose2(n - 1)}, {"u3", n - 1}};
  if (n2 == 2)
    return {{"u1", choose2(n)}, {"u2", choose2(n)}, {"u4", n},    {"u3", choose2(n - 1)},
            {"u5", n - 1},      {"u8", n},          {"u9", n - 1}};
  throw Error(ErrorKind::InvalidArgument, "syzygy families exist for n2 in {1, 2} only");
}

SyzygyReport verify_counts(const std::vector<SyzygyFamily>& families, const BettiTable& table,
                           std::string case_label, int N) {
  SyzygyReport report;
  report.case_label = std::move(case_label);
  report.N = N;
  for (const auto& f : families) {
    report.families.push_back({f.label, f.degree, f.members.size()});
    report.family_count_by_degree[f.degree] += f.members.size();
  }
  for (const auto& [key, v] : table.entries())
    if (key.first == 2) report.betti_row2[key.second] = v;

  std::set<int> degrees;
  for (const auto& [j, c] : report.family_count_by_degree)
    if (c) degrees.insert(j);
  for (const auto& [j, v] : report.betti_row2) degrees.insert(j);
  for (int j : degrees) {
    auto fc = report.family_count_by_degree.count(j) ? report.family_count_by_degree.at(j) : 0;
    auto bv = report.betti_row2.count(j) ? report.betti_row2.at(j) : 0;
    if (fc != bv) report.mismatched_degrees.push_back(j);
  }
  report.pass = report.mismatched_degrees.empty();
  return report;
}

std::string render_syzygy_report_json(const SyzygyReport& report) {
  nlohmann::json fams = nlohmann::json::array();
  for (const auto& f : report.families)
    fams.push_back({{"label", f.label}, {"degree", f.degree}, {"count", f.count}});
  nlohmann::json row2 = nlohmann::json::object();
  for (const auto& [j, v] : report.betti_row2) row2[std::to_string(j)] = v;
  nlohmann::json doc{{"case", report.case_label},
                     {"N", report.N},
                     {"families", fams},
                     {"betti_row2", row2},
                     {"mismatched_degrees", report.mismatched_degrees},
                     {"pass", report.pass}};
  return doc.dump(2) + "\n";
}

}  // namespace crystal
