#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "crystal/errors.hpp"
#include "crystal/polynomial.hpp"
#include "crystal/report.hpp"
#include "crystal/syzygy.hpp"

namespace {

enum Exit { kPass = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Globals {
  std::uint32_t characteristic = 0;
  std::string format = "text";
  std::string order = "degrevlex";
  unsigned jobs = 1;
};

crystal::CrystalParams parse_params(int k, const std::vector<int>& ns) {
  crystal::CrystalParams params{ns};
  if (k != static_cast<int>(params.k()))
    throw crystal::Error(crystal::ErrorKind::InvalidArgument,
                         "--k " + std::to_string(k) + " disagrees with " +
                             std::to_string(ns.size()) + " chain lengths in --n");
  params.validate();
  return params;
}

crystal::PipelineOptions pipeline_options(const Globals& g) {
  if (g.characteristic != 0 && !crystal::is_prime(g.characteristic))
    throw crystal::Error(crystal::ErrorKind::InvalidArgument,
                         "--char must be 0 or a prime, got " + std::to_string(g.characteristic));
  crystal::PipelineOptions opts;
  opts.order = crystal::parse_order_kind(g.order);
  opts.characteristic = g.characteristic;
  opts.jobs = g.jobs;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers of join-meet ideals of crystal lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--char", g.characteristic, "Field characteristic: 0 or a prime")->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--order", g.order, "Monomial order")
      ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  int k = 2;
  std::vector<int> ns;
  std::string route = "hochster";
  std::optional<int> max_index;

  auto* betti = app.add_subcommand("betti", "Betti table of L_k(n1,...,nk)");
  betti->add_option("--k", k, "Number of chains")->required();
  betti->add_option("--n", ns, "Chain lengths")->required()->delimiter(',');
  betti->add_option("--route", route, "Betti route")->check(CLI::IsMember({"hochster", "taylor"}));
  betti->add_option("--max-index", max_index, "Only compute B_{i,j} with i <= this");

  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis and initial ideal");
  groebner->add_option("--k", k, "Number of chains")->required();
  groebner->add_option("--n", ns, "Chain lengths")->required()->delimiter(',');

  int theorem = 1;
  int n_max = 10;
  auto* verify = app.add_subcommand("verify", "Check the closed-form Betti formulas");
  verify->add_option("--theorem", theorem, "1 (n2 = 1) or 2 (n2 = 2)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  verify->add_option("--n-max", n_max, "Largest n1")->check(CLI::Range(2, 64));
  verify->add_option("--route", route, "Betti route")->check(CLI::IsMember({"hochster", "taylor"}));

  bool fill_gaps = false;
  auto* table1 = app.add_subcommand("table1", "Totals of the first Betti numbers");
  table1->add_flag("--fill-gaps", fill_gaps, "Include the n1 = 13 row");

  int n2 = 1;
  std::string out_path;
  auto* figure = app.add_subcommand("figure-data", "Totals of the second Betti numbers as CSV");
  figure->add_option("--n2", n2, "Second chain length")->check(CLI::IsMember({1, 2}));
  figure->add_option("--n-max", n_max, "Largest n1")->check(CLI::Range(2, 64));
  figure->add_option("--out", out_path, "Write CSV here instead of stdout");

  std::string cover_path;
  auto* lattice_check = app.add_subcommand("lattice-check", "Validate and classify a cover-relation file");
  lattice_check->add_option("file", cover_path, "Cover-relation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    const auto format = crystal::parse_output_format(g.format);
    auto opts = pipeline_options(g);

    if (*betti) {
      opts.route = crystal::parse_route(route);
      opts.max_index = max_index;
      std::cout << crystal::cmd_betti(parse_params(k, ns), opts, format);
      return kPass;
    }
    if (*groebner) {
      auto r = crystal::run_groebner(parse_params(k, ns), opts);
      std::cout << (format == crystal::OutputFormat::Json
                        ? crystal::render_groebner_json(r.ring, r.basis, r.initial)
                        : crystal::render_groebner_text(r.ring, r.basis, r.initial));
      return kPass;
    }
    if (*verify) {
      auto rows = crystal::cmd_verify(theorem, n_max, crystal::parse_route(route), g.characteristic, g.jobs);
      std::cout << crystal::render_verification(rows, format);
      for (const auto& r : rows)
        if (!r.pass) return kMismatch;
      return kPass;
    }
    if (*table1) {
      std::cout << crystal::cmd_table1(format, fill_gaps, g.jobs);
      return kPass;
    }
    if (*figure) {
      std::string csv = crystal::cmd_figure_data(n2, n_max, g.jobs);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << csv;
        if (!out) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kUsage;
        }
      }
      return kPass;
    }
    if (*lattice_check) {
      std::ifstream in(cover_path);
      if (!in) {
        std::cerr << "error: cannot read " << cover_path << '\n';
        return kUsage;
      }
      auto report = crystal::cmd_lattice_check(in);
      std::cout << crystal::render_lattice_check(report, format);
      return report.valid ? kPass : kMismatch;
    }
  } catch (const crystal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_resource_guard() ? kResource : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
