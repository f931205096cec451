#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "crystal/betti.hpp"
#include "crystal/format.hpp"
#include "crystal/ideal.hpp"
#include "crystal/lattice.hpp"

namespace crystal {

enum class Route { Hochster, Taylor };

Route parse_route(const std::string& name);
const char* to_string(Route route) noexcept;

struct PipelineOptions {
  OrderKind order = OrderKind::DegRevLex;
  std::uint32_t characteristic = 0;
  Route route = Route::Hochster;
  std::optional<int> max_index;  // truncate the Betti computation
  unsigned jobs = 1;
};

struct PipelineResult {
  FiniteLattice lattice;
  PolyRing ring;
  std::vector<Polynomial> basis;
  MonomialIdeal initial;
  BettiTable table;
};

/// crystal -> join-meet ideal -> reduced Groebner basis -> initial ideal.
/// The order must be compatible with the lattice; errors carry a stage tag
/// ("[lattice]", "[order]", "[groebner]") in their message.
PipelineResult run_groebner(const CrystalParams& params, const PipelineOptions& options = {});

/// run_groebner followed by the Betti computation on the chosen route.
PipelineResult run_pipeline(const CrystalParams& params, const PipelineOptions& options = {});

/// Rendered Betti table for crystal(k, ns).
std::string cmd_betti(const CrystalParams& params, const PipelineOptions& options,
                      OutputFormat format);

struct VerificationRow {
  int n1 = 0;
  int n2 = 0;
  std::string quantity;  // "sum_B1", "sum_B2", "B1,2", "B1,3", "B2,3", "B2,4"
  std::int64_t computed = 0;
  std::int64_t formula = 0;
  bool pass = false;
};

/// Closed-form value of `quantity` for L_2(n1, n2) (theorem 1: n2 = 1,
/// theorem 2: n2 = 2).
std::int64_t theorem_formula(int theorem, int n1, const std::string& quantity);

/// Rows for every n1 in [2, n_max] and every quantity, sorted by n1. Only
/// homological indices <= 2 are computed.
std::vector<VerificationRow> cmd_verify(int theorem, int n_max, Route route,
                                        std::uint32_t characteristic = 0, unsigned jobs = 1);

std::string render_verification(const std::vector<VerificationRow>& rows, OutputFormat format);

struct Table1Row {
  int n1;
  std::uint64_t b_n1_1;  // total first Betti number of L_2(n1, 1)
  std::uint64_t b_n1_2;  // total first Betti number of L_2(n1, 2)
};

/// Rows n1 = 2..12, 14..20 (the published layout omits 13); fill_gaps adds 13.
std::vector<Table1Row> table1_rows(bool fill_gaps, unsigned jobs = 1);
std::string cmd_table1(OutputFormat format, bool fill_gaps = false, unsigned jobs = 1);

struct FigureRow {
  int n1;
  std::uint64_t computed;
  std::int64_t formula;
};

/// Total second Betti numbers of L_2(n1, n2) for n1 in [2, n_max].
std::vector<FigureRow> figure_rows(int n2, int n_max, unsigned jobs = 1);
/// CSV `n1,total_b2_computed,total_b2_formula`.
std::string cmd_figure_data(int n2, int n_max, unsigned jobs = 1);

struct LatticeCheckReport {
  bool valid = false;
  std::string error;
  std::size_t size = 0;
  bool distributive = false;
  bool modular = false;
  std::size_t incomparable_pairs = 0;
};

/// Never throws for lattice-level problems; they land in `error`. Parse
/// errors (with line numbers) propagate as Error{ParseError}.
LatticeCheckReport cmd_lattice_check(std::istream& covers);
std::string render_lattice_check(const LatticeCheckReport& report, OutputFormat format);

}  // namespace crystal
