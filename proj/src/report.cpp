#include "crystal/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "crystal/errors.hpp"
#include "parallel.hpp"

namespace crystal {

Route parse_route(const std::string& name) {
  if (name == "hochster") return Route::Hochster;
  if (name == "taylor") return Route::Taylor;
  throw Error(ErrorKind::InvalidArgument, "unknown route '" + name + "'");
}

const char* to_string(Route route) noexcept {
  return route == Route::Hochster ? "hochster" : "taylor";
}

namespace {

template <typename F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("[") + stage + "] " + e.what());
  }
}

}  // namespace

PipelineResult run_groebner(const CrystalParams& params, const PipelineOptions& options) {
  FiniteLattice lattice = staged("lattice", [&] { return crystal(params); });
  PolyRing ring = staged("order", [&] {
    return PolyRing(MonomialOrder(options.order, VarContext::from_lattice(lattice)),
                    Field(options.characteristic));
  });
  staged("order", [&] {
    if (!is_compatible_order(lattice, ring.order()))
      throw Error(ErrorKind::InvalidArgument,
                  std::string("monomial order '") + to_string(options.order) +
                      "' is not compatible with the lattice");
    return 0;
  });
  auto basis = staged("groebner", [&] { return buchberger(join_meet_ideal(lattice, ring), ring); });
  MonomialIdeal initial = initial_ideal(basis, ring.order());
  return PipelineResult{std::move(lattice), std::move(ring), std::move(basis), std::move(initial),
                        BettiTable(options.characteristic)};
}

PipelineResult run_pipeline(const CrystalParams& params, const PipelineOptions& options) {
  PipelineResult result = run_groebner(params, options);
  BettiOptions bo;
  bo.characteristic = options.characteristic;
  bo.max_index = options.max_index;
  bo.jobs = options.jobs;
  result.table = staged("betti", [&] {
    return options.route == Route::Hochster ? graded_betti_hochster(result.initial, bo)
                                            : graded_betti_taylor(result.initial, bo);
  });
  return result;
}

std::string cmd_betti(const CrystalParams& params, const PipelineOptions& options,
                      OutputFormat format) {
  return render_betti(run_pipeline(params, options).table, format);
}

std::int64_t theorem_formula(int theorem, int n1, const std::string& quantity) {
  const std::int64_t n = n1;
  auto c2 = [](std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; };
  if (theorem == 1) {
    if (quantity == "sum_B1") return 2 * n - 1;
    if (quantity == "sum_B2") return n * (n - 1);
    if (quantity == "B1,2") return n;
    if (quantity == "B1,3") return n - 1;
    if (quantity == "B2,3") return c2(n);
    if (quantity == "B2,4") return c2(n - 1) + n - 1;
  } else if (theorem == 2) {
    if (quantity == "sum_B1") return 3 * n;
    if (quantity == "sum_B2") return n * (n + 1) - 1;
    if (quantity == "B1,2") return 2 * n;
    if (quantity == "B1,3") return n;
    if (quantity == "B2,3") return 2 * c2(n) + n;
    if (quantity == "B2,4") return c2(n - 1) + 3 * n - 2;
  }
  throw Error(ErrorKind::InvalidArgument,
              "no formula for theorem " + std::to_string(theorem) + " quantity " + quantity);
}

std::vector<VerificationRow> cmd_verify(int theorem, int n_max, Route route,
                                        std::uint32_t characteristic, unsigned jobs) {
  if (theorem != 1 && theorem != 2)
    throw Error(ErrorKind::InvalidArgument, "theorem must be 1 or 2");
  if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "n-max must be at least 2");
  static const char* kQuantities[] = {"sum_B1", "sum_B2", "B1,2", "B1,3", "B2,3", "B2,4"};
  const int n2 = theorem;
  const std::size_t count = static_cast<std::size_t>(n_max - 1);

  using Rows = std::vector<std::vector<VerificationRow>>;
  auto slots = detail::parallel_chunks<Rows>(count, jobs, [&](std::size_t b, std::size_t e, Rows& out) {
    for (std::size_t k = b; k < e; ++k) {
      const int n1 = static_cast<int>(k) + 2;
      PipelineOptions opts;
      opts.characteristic = characteristic;
      opts.route = route;
      opts.max_index = 2;
      BettiTable t = run_pipeline(CrystalParams{{n1, n2}}, opts).table;
      std::vector<VerificationRow> rows;
      for (const char* q : kQuantities) {
        std::string quantity = q;
        std::int64_t computed;
        if (quantity == "sum_B1") computed = static_cast<std::int64_t>(total_betti(t, 1));
        else if (quantity == "sum_B2") computed = static_cast<std::int64_t>(total_betti(t, 2));
        else computed = static_cast<std::int64_t>(t.at(quantity[1] - '0', quantity[3] - '0'));
        std::int64_t formula = theorem_formula(theorem, n1, quantity);
        rows.push_back({n1, n2, quantity, computed, formula, computed == formula});
      }
      out.push_back(std::move(rows));
    }
  });
  std::vector<VerificationRow> all;
  for (auto& slot : slots)
    for (auto& rows : slot)
      for (auto& r : rows) all.push_back(std::move(r));
  return all;
}

std::string render_verification(const std::vector<VerificationRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "n1,n2,quantity,computed,formula,pass\n";
      for (const auto& r : rows)
        out << r.n1 << ',' << r.n2 << ',' << r.quantity << ',' << r.computed << ',' << r.formula
            << ',' << (r.pass ? "true" : "false") << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : rows)
        doc.push_back({{"n1", r.n1}, {"n2", r.n2}, {"quantity", r.quantity},
                       {"computed", r.computed}, {"formula", r.formula}, {"pass", r.pass}});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      out << std::setw(4) << "n1" << std::setw(4) << "n2" << std::setw(8) << "quantity"
          << std::setw(10) << "computed" << std::setw(10) << "formula" << "  result\n";
      for (const auto& r : rows)
        out << std::setw(4) << r.n1 << std::setw(4) << r.n2 << std::setw(8) << r.quantity
            << std::setw(10) << r.computed << std::setw(10) << r.formula << "  "
            << (r.pass ? "PASS" : "FAIL") << '\n';
      break;
  }
  return out.str();
}

std::vector<Table1Row> table1_rows(bool fill_gaps, unsigned jobs) {
  std::vector<int> ns;
  for (int n = 2; n <= 20; ++n)
    if (n != 13 || fill_gaps) ns.push_back(n);
  using Rows = std::vector<Table1Row>;
  auto slots = detail::parallel_chunks<Rows>(ns.size(), jobs, [&](std::size_t b, std::size_t e, Rows& out) {
    PipelineOptions opts;
    opts.max_index = 1;
    for (std::size_t k = b; k < e; ++k) {
      const int n = ns[k];
      auto one = run_pipeline(CrystalParams{{n, 1}}, opts).table;
      auto two = run_pipeline(CrystalParams{{n, 2}}, opts).table;
      out.push_back({n, total_betti(one, 1), total_betti(two, 1)});
    }
  });
  Rows rows;
  for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
  return rows;
}

std::string cmd_table1(OutputFormat format, bool fill_gaps, unsigned jobs) {
  auto rows = table1_rows(fill_gaps, jobs);
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "n1,b_n1_1,b_n1_2\n";
      for (const auto& r : rows) out << r.n1 << ',' << r.b_n1_1 << ',' << r.b_n1_2 << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& r : rows) doc.push_back({{"n1", r.n1}, {"B(n1,1)", r.b_n1_1}, {"B(n1,2)", r.b_n1_2}});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Text:
      out << "Total of the first Betti numbers\n";
      out << std::setw(4) << "n1" << std::setw(10) << "B(n1,1)" << std::setw(10) << "B(n1,2)" << '\n';
      for (const auto& r : rows)
        out << std::setw(4) << r.n1 << std::setw(10) << r.b_n1_1 << std::setw(10) << r.b_n1_2 << '\n';
      break;
  }
  return out.str();
}

std::vector<FigureRow> figure_rows(int n2, int n_max, unsigned jobs) {
  if (n2 != 1 && n2 != 2) throw Error(ErrorKind::InvalidArgument, "n2 must be 1 or 2");
  if (n_max < 2) throw Error(ErrorKind::InvalidArgument, "n-max must be at least 2");
  using Rows = std::vector<FigureRow>;
  auto slots = detail::parallel_chunks<Rows>(static_cast<std::size_t>(n_max - 1), jobs,
                                             [&](std::size_t b, std::size_t e, Rows& out) {
    PipelineOptions opts;
    opts.max_index = 2;
    for (std::size_t k = b; k < e; ++k) {
      const int n1 = static_cast<int>(k) + 2;
      auto t = run_pipeline(CrystalParams{{n1, n2}}, opts).table;
      out.push_back({n1, total_betti(t, 2), theorem_formula(n2, n1, "sum_B2")});
    }
  });
  Rows rows;
  for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
  return rows;
}

std::string cmd_figure_data(int n2, int n_max, unsigned jobs) {
  std::string out = "n1,total_b2_computed,total_b2_formula\n";
  for (const auto& r : figure_rows(n2, n_max, jobs))
    out += std::to_string(r.n1) + ',' + std::to_string(r.computed) + ',' + std::to_string(r.formula) + '\n';
  return out;
}

LatticeCheckReport cmd_lattice_check(std::istream& covers) {
  CoverFile file = parse_cover_file(covers);
  LatticeCheckReport report;
  try {
    FiniteLattice L = from_cover_relations(file.labels, file.covers);
    report.valid = true;
    report.size = L.size();
    report.distributive = is_distributive(L);
    report.modular = is_modular(L);
    report.incomparable_pairs = incomparable_pairs(L).size();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    report.valid = false;
    report.size = file.labels.size();
    report.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return report;
}

std::string render_lattice_check(const LatticeCheckReport& r, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    nlohmann::json doc{{"valid", r.valid}, {"size", r.size}};
    if (r.valid) {
      doc["distributive"] = r.distributive;
      doc["modular"] = r.modular;
      doc["incomparable_pairs"] = r.incomparable_pairs;
    } else {
      doc["error"] = r.error;
    }
    out << doc.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    out << "valid,size,distributive,modular,incomparable_pairs\n";
    out << r.valid << ',' << r.size << ',' << r.distributive << ',' << r.modular << ','
        << r.incomparable_pairs << '\n';
  } else {
    if (!r.valid) {
      out << "valid: no\nerror: " << r.error << '\n';
    } else {
      out << "valid: yes\nelements: " << r.size << "\ndistributive: "
          << (r.distributive ? "yes" : "no") << "\nmodular: " << (r.modular ? "yes" : "no")
          << "\nincomparable pairs: " << r.incomparable_pairs << '\n';
    }
  }
  return out.str();
}

}  // namespace crystal
