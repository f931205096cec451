#include "crystal/lattice.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "crystal/errors.hpp"

namespace crystal {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NonSquarefreeDegree: return "NonSquarefreeDegree";
    case ErrorKind::NonSquarefreeIdeal: return "NonSquarefreeIdeal";
    case ErrorKind::TooManyGenerators: return "TooManyGenerators";
    case ErrorKind::TooManyVariables: return "TooManyVariables";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

void CrystalParams::validate() const {
  if (chain_lengths.empty())
    throw Error(ErrorKind::InvalidArgument, "crystal lattice needs at least one chain");
  for (int n : chain_lengths)
    if (n < 1)
      throw Error(ErrorKind::InvalidArgument, "chain lengths must be positive");
}

std::optional<Element> FiniteLattice::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

namespace {

// Unique minimal element of `candidates` under `below(a, b)` meaning a <= b,
// or nullopt when there are zero or several.
template <typename Below>
std::optional<Element> unique_minimum(const std::vector<Element>& candidates, Below below) {
  std::optional<Element> found;
  for (Element c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](Element d) { return d != c && below(d, c); });
    if (!minimal) continue;
    if (found) return std::nullopt;
    found = c;
  }
  return found;
}

}  // namespace

FiniteLattice from_cover_relations(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "a lattice needs at least one element");

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i)
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "duplicate label '" + labels[i] + "'");

  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorKind::UnknownLabel, "unknown label '" + l + "'");
    return it->second;
  };

  std::vector<std::vector<Element>> up(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    Element a = lookup(lo), b = lookup(hi);
    if (a == b) throw Error(ErrorKind::CycleDetected, "self-cover on '" + lo + "'");
    up[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm both detects cycles and yields a topological order for
  // the transitive closure.
  std::vector<Element> topo;
  topo.reserve(n);
  std::queue<Element> ready;
  for (Element i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  while (!ready.empty()) {
    Element a = ready.front();
    ready.pop();
    topo.push_back(a);
    for (Element b : up[a])
      if (--indegree[b] == 0) ready.push(b);
  }
  if (topo.size() != n)
    throw Error(ErrorKind::CycleDetected, "cover relation contains a cycle");

  FiniteLattice L;
  L.labels_ = labels;
  L.leq_.assign(n * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element a = *it;
    L.leq_[a * n + a] = 1;
    for (Element b : up[a])
      for (Element c = 0; c < n; ++c)
        if (L.leq_[b * n + c]) L.leq_[a * n + c] = 1;
  }

  auto leq = [&](Element a, Element b) { return L.leq_[a * n + b] != 0; };
  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  std::vector<Element> bounds;
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (leq(a, c) && leq(b, c)) bounds.push_back(c);
      auto lub = unique_minimum(bounds, leq);
      if (!lub)
        throw Error(ErrorKind::NotALattice, "no unique least upper bound for (" + labels[a] +
                                                ", " + labels[b] + ")");
      bounds.clear();
      for (Element c = 0; c < n; ++c)
        if (leq(c, a) && leq(c, b)) bounds.push_back(c);
      auto glb = unique_minimum(bounds, [&](Element x, Element y) { return leq(y, x); });
      if (!glb)
        throw Error(ErrorKind::NotALattice, "no unique greatest lower bound for (" + labels[a] +
                                                ", " + labels[b] + ")");
      L.join_[a * n + b] = L.join_[b * n + a] = *lub;
      L.meet_[a * n + b] = L.meet_[b * n + a] = *glb;
    }
  }

  // Bottom and top exist in any finite lattice: the meet/join of everything.
  Element bottom = 0, top = 0;
  for (Element e = 1; e < n; ++e) {
    bottom = L.meet(bottom, e);
    top = L.join(top, e);
  }
  L.bottom_ = bottom;
  L.top_ = top;
  return L;
}

FiniteLattice crystal(const CrystalParams& params) {
  params.validate();
  std::vector<std::string> labels{"s"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < params.k(); ++i) {
    std::string prev = "s";
    for (int j = 1; j <= params.chain_lengths[i]; ++j) {
      std::string name = "x" + std::to_string(i + 1) + "_" + std::to_string(j);
      labels.push_back(name);
      covers.emplace_back(prev, name);
      prev = name;
    }
    covers.emplace_back(prev, "t");
  }
  labels.push_back("t");
  return from_cover_relations(labels, covers);
}

Element crystal_element(const CrystalParams& params, int chain, int pos) {
  if (chain < 1 || static_cast<std::size_t>(chain) > params.k() || pos < 1 ||
      pos > params.chain_lengths[chain - 1])
    throw Error(ErrorKind::IndexOutOfRange, "no crystal element x" + std::to_string(chain) +
                                                "_" + std::to_string(pos));
  Element e = 1;
  for (int i = 0; i < chain - 1; ++i) e += params.chain_lengths[i];
  return e + static_cast<Element>(pos - 1);
}

std::vector<std::pair<Element, Element>> incomparable_pairs(const FiniteLattice& lattice) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < lattice.size(); ++a)
    for (Element b = a + 1; b < lattice.size(); ++b)
      if (!lattice.comparable(a, b)) out.emplace_back(a, b);
  return out;
}

bool is_distributive(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

bool is_modular(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      if (!L.leq(a, c)) continue;
      for (Element b = 0; b < n; ++b)
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
    }
  return true;
}

CoverFile parse_cover_file(std::istream& in) {
  CoverFile out;
  std::unordered_map<std::string, bool> seen;
  auto note = [&](const std::string& l) {
    if (seen.emplace(l, true).second) out.labels.push_back(l);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() == 1) {
      note(tokens[0]);
    } else if (tokens.size() == 2) {
      note(tokens[0]);
      note(tokens[1]);
      out.covers.emplace_back(tokens[0], tokens[1]);
    } else {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) +
                                             ": expected 'lower upper', got " +
                                             std::to_string(tokens.size()) + " tokens");
    }
  }
  return out;
}

}  // namespace crystal
