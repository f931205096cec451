#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "crystal/errors.hpp"
#include "crystal/report.hpp"

namespace crystal {

namespace {

std::int64_t value_of(const std::vector<VerificationRow>& rows, int n1, const std::string& q) {
  for (const auto& r : rows)
    if (r.n1 == n1 && r.quantity == q) return r.computed;
  FAIL("row missing");
  return -1;
}

}  // namespace

TEST_CASE("route and format names") {
  CHECK(parse_route("taylor") == Route::Taylor);
  CHECK(std::string(to_string(Route::Hochster)) == "hochster");
  CHECK_THROWS_AS(parse_route("koszul"), Error);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_output_format("xml"), Error);
}

TEST_CASE("cmd_betti examples") {
  PipelineOptions opts;
  auto t = run_pipeline(CrystalParams{{5, 1}}, opts).table;
  CHECK(total_betti(t, 1) == 9);
  CHECK(total_betti(t, 2) == 20);
  auto chain = run_pipeline(CrystalParams{{4}}, opts).table;
  CHECK(chain.entries().size() == 1);
  CHECK(chain.at(0, 0) == 1);
  auto t32 = run_pipeline(CrystalParams{{3, 2}}, opts).table;
  CHECK(t32.at(2, 3) == 9);
  CHECK(t32.at(2, 4) == 8);
}

TEST_CASE("rendered betti tables") {
  auto t = run_pipeline(CrystalParams{{2, 1}}).table;
  CHECK(render_betti_text(t) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 2 1\n"
        "    2: . 1 1\n");
  CHECK(render_betti_csv(t) == "i,j,value\n0,0,1\n1,2,2\n1,3,1\n2,3,1\n2,4,1\n");
  auto doc = nlohmann::json::parse(render_betti_json(t));
  CHECK(doc["char"] == 0);
  CHECK(doc["entries"].size() == 5);
  CHECK(doc["entries"][1] == nlohmann::json::array({1, 2, 2}));
  CHECK(render_betti(t, OutputFormat::Csv) == render_betti_csv(t));
}

TEST_CASE("groebner rendering") {
  auto r = run_groebner(CrystalParams{{2, 1}});
  auto doc = nlohmann::json::parse(render_groebner_json(r.ring, r.basis, r.initial));
  CHECK(doc["variables"] == nlohmann::json::array({"s", "x1_1", "x1_2", "x2_1", "t"}));
  CHECK(doc["initial_ideal"] == nlohmann::json::array({"x1_1*x2_1", "x1_2*x2_1", "s*x1_2*t"}));
  CHECK(doc["basis"].size() == 3);
  CHECK(doc["basis"][0] == "x1_1*x2_1 - s*t");
  auto text = render_groebner_text(r.ring, r.basis, r.initial);
  CHECK(text.find("initial ideal (3):") != std::string::npos);
}

TEST_CASE("pipeline errors carry their stage") {
  PipelineOptions lex;
  lex.order = OrderKind::Lex;
  try {
    run_pipeline(CrystalParams{{2, 1}}, lex);
    FAIL("expected an order error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("[order]", 0) == 0);
  }
  try {
    run_pipeline(CrystalParams{{2, 0}});
    FAIL("expected a lattice error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("[lattice]", 0) == 0);
  }
  PipelineOptions bad_char;
  bad_char.characteristic = 6;
  CHECK_THROWS_AS(run_pipeline(CrystalParams{{2, 1}}, bad_char), Error);
}

TEST_CASE("closed-form formulas") {
  CHECK(theorem_formula(1, 20, "sum_B1") == 39);
  CHECK(theorem_formula(1, 20, "sum_B2") == 380);
  CHECK(theorem_formula(2, 10, "sum_B1") == 30);
  CHECK(theorem_formula(2, 10, "sum_B2") == 109);
  CHECK(theorem_formula(2, 3, "B2,3") == 9);
  CHECK(theorem_formula(2, 3, "B2,4") == 8);
  CHECK(theorem_formula(1, 2, "sum_B2") == 2);
  CHECK_THROWS_AS(theorem_formula(3, 2, "sum_B1"), Error);
  CHECK_THROWS_AS(theorem_formula(1, 2, "B3,4"), Error);
}

TEST_CASE("verify rows") {
  auto rows = cmd_verify(1, 6, Route::Hochster);
  CHECK(rows.size() == 5 * 6);
  for (const auto& r : rows) {
    CHECK(r.pass == (r.computed == r.formula));
    CHECK(r.pass);
  }
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n1 < b.n1; }));

  auto minimal = cmd_verify(2, 2, Route::Taylor);
  CHECK(minimal.size() == 6);
  CHECK(value_of(minimal, 2, "sum_B2") == 8);

  auto two = cmd_verify(2, 8, Route::Hochster, 0, 3);
  for (const auto& r : two)
    if (r.quantity != "sum_B2") CHECK(r.pass);
  CHECK(value_of(two, 8, "B2,3") == 64);
  CHECK(value_of(two, 8, "B2,4") == 43);
  CHECK(cmd_verify(2, 8, Route::Taylor, 0, 2).size() == two.size());
  CHECK_THROWS_AS(cmd_verify(1, 1, Route::Hochster), Error);
}

TEST_CASE("verification rendering") {
  auto rows = cmd_verify(1, 2, Route::Hochster);
  auto csv = render_verification(rows, OutputFormat::Csv);
  CHECK(csv.rfind("n1,n2,quantity,computed,formula,pass\n2,1,sum_B1,3,3,true\n", 0) == 0);
  auto doc = nlohmann::json::parse(render_verification(rows, OutputFormat::Json));
  CHECK(doc.size() == 6);
  CHECK(render_verification(rows, OutputFormat::Text).find("PASS") != std::string::npos);
}

TEST_CASE("table1 rows") {
  const std::vector<std::array<int, 3>> printed{
      {2, 3, 6},    {3, 5, 9},    {4, 7, 12},   {5, 9, 15},   {6, 11, 18},  {7, 13, 21},
      {8, 15, 24},  {9, 17, 27},  {10, 19, 30}, {11, 21, 33}, {12, 23, 36}, {14, 27, 42},
      {15, 29, 45}, {16, 31, 48}, {17, 33, 51}, {18, 35, 54}, {19, 37, 57}, {20, 39, 60}};
  auto rows = table1_rows(false, 2);
  REQUIRE(rows.size() == printed.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n1 == printed[i][0]);
    CHECK(rows[i].b_n1_1 == static_cast<std::uint64_t>(printed[i][1]));
    CHECK(rows[i].b_n1_2 == static_cast<std::uint64_t>(printed[i][2]));
  }
  auto filled = table1_rows(true);
  REQUIRE(filled.size() == 19);
  CHECK(filled[11].n1 == 13);
  CHECK(filled[11].b_n1_1 == 25);
  CHECK(filled[11].b_n1_2 == 39);
}

TEST_CASE("table1 output is byte stable") {
  auto a = cmd_table1(OutputFormat::Csv, false, 1);
  auto b = cmd_table1(OutputFormat::Csv, false, 4);
  CHECK(a == b);
  CHECK(a.rfind("n1,b_n1_1,b_n1_2\n2,3,6\n", 0) == 0);
  CHECK(a.find("\n13,") == std::string::npos);
  CHECK(cmd_table1(OutputFormat::Text) == cmd_table1(OutputFormat::Text));
}

TEST_CASE("figure data") {
  auto one = cmd_figure_data(1, 10);
  CHECK(one.rfind("n1,total_b2_computed,total_b2_formula\n2,2,2\n", 0) == 0);
  CHECK(one.find("\n10,90,90\n") != std::string::npos);
  auto two = figure_rows(2, 10, 2);
  REQUIRE(two.size() == 9);
  CHECK(two.back().n1 == 10);
  CHECK(two.back().formula == 109);
  // computed value is C(n,2)*2 + n + C(n-1,2) + 3n - 2
  CHECK(two.back().computed == 164);
  CHECK_THROWS_AS(figure_rows(3, 10), Error);
}

TEST_CASE("lattice check reports") {
  std::istringstream pentagon("0 a\na b\nb 1\n0 c\nc 1\n");
  auto r = cmd_lattice_check(pentagon);
  CHECK(r.valid);
  CHECK(r.size == 5);
  CHECK_FALSE(r.modular);
  CHECK_FALSE(r.distributive);
  CHECK(r.incomparable_pairs == 2);

  std::istringstream diamond("0 a\n0 b\n0 c\na 1\nb 1\nc 1\n");
  auto d = cmd_lattice_check(diamond);
  CHECK(d.modular);
  CHECK_FALSE(d.distributive);

  std::istringstream chain("0 1\n");
  CHECK(cmd_lattice_check(chain).distributive);

  std::istringstream vee("0 a\n0 b\n");
  auto v = cmd_lattice_check(vee);
  CHECK_FALSE(v.valid);
  CHECK(v.error.find("NotALattice") != std::string::npos);
  auto doc = nlohmann::json::parse(render_lattice_check(v, OutputFormat::Json));
  CHECK(doc["valid"] == false);

  std::istringstream junk("a b c\n");
  CHECK_THROWS_AS(cmd_lattice_check(junk), Error);
  CHECK(render_lattice_check(r, OutputFormat::Text).find("modular: no") != std::string::npos);
}

}  // namespace crystal
