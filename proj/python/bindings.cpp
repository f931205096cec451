#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crystal/errors.hpp"
#include "crystal/report.hpp"
#include "crystal/syzygy.hpp"

namespace py = pybind11;
namespace cr = crystal;

namespace {

py::dict table_dict(const cr::BettiTable& t) {
  py::dict out;
  for (const auto& [key, v] : t.entries()) out[py::make_tuple(key.first, key.second)] = v;
  return out;
}

cr::PipelineOptions options(const std::string& order, std::uint32_t characteristic,
                            const std::string& route, std::optional<int> max_index, unsigned jobs) {
  cr::PipelineOptions o;
  o.order = cr::parse_order_kind(order);
  o.characteristic = characteristic;
  o.route = cr::parse_route(route);
  o.max_index = max_index;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti numbers of join-meet ideals of crystal lattices.";

  py::register_exception<cr::Error>(m, "CrystalError", PyExc_ValueError);

  m.def(
      "lattice_info",
      [](const std::vector<int>& ns) {
        auto L = cr::crystal(cr::CrystalParams{ns});
        py::dict d;
        d["labels"] = L.labels();
        d["distributive"] = cr::is_distributive(L);
        d["modular"] = cr::is_modular(L);
        d["incomparable_pairs"] = cr::incomparable_pairs(L).size();
        return d;
      },
      py::arg("ns"), "Labels and classification of the crystal lattice with chain lengths ns.");

  m.def(
      "groebner",
      [](const std::vector<int>& ns, const std::string& order, std::uint32_t characteristic) {
        auto r = cr::run_groebner(cr::CrystalParams{ns}, options(order, characteristic, "hochster", {}, 1));
        py::dict d;
        d["variables"] = r.ring.context().names();
        std::vector<std::string> basis, initial;
        for (const auto& g : r.basis) basis.push_back(r.ring.to_string(g));
        for (const auto& g : r.initial.min_gens()) initial.push_back(g.to_string(r.ring.context()));
        d["basis"] = basis;
        d["initial_ideal"] = initial;
        return d;
      },
      py::arg("ns"), py::arg("order") = "degrevlex", py::arg("characteristic") = 0,
      "Reduced Groebner basis and initial ideal of the join-meet ideal.");

  m.def(
      "betti",
      [](const std::vector<int>& ns, std::uint32_t characteristic, const std::string& route,
         std::optional<int> max_index, unsigned jobs) {
        py::gil_scoped_release release;
        auto t = cr::run_pipeline(cr::CrystalParams{ns},
                                  options("degrevlex", characteristic, route, max_index, jobs))
                     .table;
        py::gil_scoped_acquire acquire;
        return table_dict(t);
      },
      py::arg("ns"), py::arg("characteristic") = 0, py::arg("route") = "hochster",
      py::arg("max_index") = py::none(), py::arg("jobs") = 1,
      "Graded Betti numbers {(i, j): value} of R/in(I) for the crystal lattice.");

  m.def(
      "betti_of_monomials",
      [](const std::vector<std::vector<cr::Exponent>>& gens, std::size_t var_count,
         std::uint32_t characteristic, const std::string& route, std::optional<int> max_index) {
        std::vector<cr::Monomial> ms;
        for (const auto& e : gens) ms.emplace_back(e);
        cr::MonomialIdeal I(var_count, ms);
        cr::BettiOptions o;
        o.characteristic = characteristic;
        o.max_index = max_index;
        auto t = cr::parse_route(route) == cr::Route::Hochster ? cr::graded_betti_hochster(I, o)
                                                               : cr::graded_betti_taylor(I, o);
        return table_dict(t);
      },
      py::arg("gens"), py::arg("var_count"), py::arg("characteristic") = 0,
      py::arg("route") = "hochster", py::arg("max_index") = py::none(),
      "Graded Betti numbers of R/I for a monomial ideal given by exponent vectors.");

  m.def(
      "render_betti",
      [](const std::vector<int>& ns, const std::string& format, std::uint32_t characteristic) {
        return cr::cmd_betti(cr::CrystalParams{ns}, options("degrevlex", characteristic, "hochster", {}, 1),
                             cr::parse_output_format(format));
      },
      py::arg("ns"), py::arg("format") = "text", py::arg("characteristic") = 0);

  m.def(
      "verify",
      [](int theorem, int n_max, const std::string& route, std::uint32_t characteristic) {
        py::list rows;
        for (const auto& r : cr::cmd_verify(theorem, n_max, cr::parse_route(route), characteristic)) {
          py::dict d;
          d["n1"] = r.n1;
          d["n2"] = r.n2;
          d["quantity"] = r.quantity;
          d["computed"] = r.computed;
          d["formula"] = r.formula;
          d["pass"] = r.pass;
          rows.append(d);
        }
        return rows;
      },
      py::arg("theorem"), py::arg("n_max"), py::arg("route") = "hochster", py::arg("characteristic") = 0);

  m.def(
      "table1",
      [](bool fill_gaps) {
        std::vector<std::tuple<int, std::uint64_t, std::uint64_t>> out;
        for (const auto& r : cr::table1_rows(fill_gaps)) out.emplace_back(r.n1, r.b_n1_1, r.b_n1_2);
        return out;
      },
      py::arg("fill_gaps") = false, "Rows (n1, B(n1,1), B(n1,2)).");

  m.def(
      "figure_data",
      [](int n2, int n_max) {
        std::vector<std::tuple<int, std::uint64_t, std::int64_t>> out;
        for (const auto& r : cr::figure_rows(n2, n_max)) out.emplace_back(r.n1, r.computed, r.formula);
        return out;
      },
      py::arg("n2"), py::arg("n_max"), "Rows (n1, computed total B2, formula total B2).");

  m.def(
      "lattice_check",
      [](const std::string& text) {
        std::istringstream in(text);
        auto r = cr::cmd_lattice_check(in);
        py::dict d;
        d["valid"] = r.valid;
        d["size"] = r.size;
        if (r.valid) {
          d["distributive"] = r.distributive;
          d["modular"] = r.modular;
          d["incomparable_pairs"] = r.incomparable_pairs;
        } else {
          d["error"] = r.error;
        }
        return d;
      },
      py::arg("text"), "Validate and classify a lattice given in cover-relation format.");

  m.def(
      "syzygy_report",
      [](int N, int n2) {
        auto model = n2 == 1 ? cr::paper_syzygies_case1(N) : cr::paper_syzygies_case2(N);
        cr::PipelineOptions o;
        o.max_index = 2;
        auto t = cr::run_pipeline(model.params, o).table;
        return cr::render_syzygy_report_json(
            cr::verify_counts(model.families, t, "L2(N," + std::to_string(n2) + ")", N));
      },
      py::arg("N"), py::arg("n2"), "JSON report comparing syzygy family counts with B2,j.");
}
