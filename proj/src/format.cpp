#include "crystal/format.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "crystal/errors.hpp"

namespace crystal {

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorKind::InvalidArgument, "unknown output format '" + name + "'");
}

std::string render_betti_text(const BettiTable& table) {
  const int cols = table.projective_dimension() + 1;
  if (cols <= 0) return "(zero module)\n";
  int row_min = 0, row_max = 0;
  bool first = true;
  for (const auto& [key, v] : table.entries()) {
    int r = key.second - key.first;
    row_min = first ? r : std::min(row_min, r);
    row_max = first ? r : std::max(row_max, r);
    first = false;
  }

  std::vector<std::string> header(cols), totals(cols);
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(row_max - row_min + 1),
                                              std::vector<std::string>(cols));
  std::vector<std::size_t> width(cols, 0);
  for (int i = 0; i < cols; ++i) {
    header[i] = std::to_string(i);
    totals[i] = std::to_string(total_betti(table, i));
    width[i] = std::max(header[i].size(), totals[i].size());
    for (int r = row_min; r <= row_max; ++r) {
      std::uint64_t v = table.at(i, r + i);
      auto& cell = cells[static_cast<std::size_t>(r - row_min)][i];
      cell = v ? std::to_string(v) : ".";
      width[i] = std::max(width[i], cell.size());
    }
  }
  std::size_t label_width = std::string("total:").size();
  for (int r = row_min; r <= row_max; ++r)
    label_width = std::max(label_width, std::to_string(r).size() + 1);

  std::ostringstream out;
  auto line = [&](const std::string& label, const std::vector<std::string>& row) {
    out << std::setw(static_cast<int>(label_width)) << label;
    for (int i = 0; i < cols; ++i) out << ' ' << std::setw(static_cast<int>(width[i])) << row[i];
    out << '\n';
  };
  line("", header);
  line("total:", totals);
  for (int r = row_min; r <= row_max; ++r)
    line(std::to_string(r) + ":", cells[static_cast<std::size_t>(r - row_min)]);
  return out.str();
}

std::string render_betti_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back({key.first, key.second, v});
  nlohmann::json doc{{"char", table.characteristic()}, {"entries", entries}};
  return doc.dump() + "\n";
}

std::string render_betti_csv(const BettiTable& table) {
  std::string out = "i,j,value\n";
  for (const auto& [key, v] : table.entries())
    out += std::to_string(key.first) + ',' + std::to_string(key.second) + ',' + std::to_string(v) + '\n';
  return out;
}

std::string render_betti(const BettiTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return render_betti_text(table);
    case OutputFormat::Json: return render_betti_json(table);
    case OutputFormat::Csv: return render_betti_csv(table);
  }
  return {};
}

std::string render_groebner_json(const PolyRing& ring, const std::vector<Polynomial>& basis,
                                 const MonomialIdeal& initial) {
  nlohmann::json doc;
  doc["variables"] = ring.context().names();
  doc["basis"] = nlohmann::json::array();
  for (const auto& g : basis) doc["basis"].push_back(ring.to_string(g));
  doc["initial_ideal"] = nlohmann::json::array();
  for (const auto& m : initial.min_gens()) doc["initial_ideal"].push_back(m.to_string(ring.context()));
  return doc.dump(2) + "\n";
}

std::string render_groebner_text(const PolyRing& ring, const std::vector<Polynomial>& basis,
                                 const MonomialIdeal& initial) {
  std::ostringstream out;
  out << "variables:";
  for (const auto& n : ring.context().names()) out << ' ' << n;
  out << "\nbasis (" << basis.size() << "):\n";
  for (const auto& g : basis) out << "  " << ring.to_string(g) << '\n';
  out << "initial ideal (" << initial.size() << "):\n";
  for (const auto& m : initial.min_gens()) out << "  " << m.to_string(ring.context()) << '\n';
  return out.str();
}

}  // namespace crystal
