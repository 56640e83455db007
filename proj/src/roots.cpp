#include "exgeo/roots.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exgeo {

DiagramSpec DiagramSpec::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad diagram: " + s);
  char fam = s[0];
  if (fam != 'A' && fam != 'D' && fam != 'E') throw std::invalid_argument("bad diagram family: " + s);
  int rank;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used + 1 != s.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad diagram rank: " + s);
  }
  DiagramSpec spec{static_cast<Family>(fam), rank};
  spec.validate();
  return spec;
}

void DiagramSpec::validate() const {
  switch (family) {
    case Family::A:
      if (rank >= 1) return;
      break;
    case Family::D:
      if (rank >= 4) return;
      break;
    case Family::E:
      if (rank == 6 || rank == 7 || rank == 8) return;
      break;
  }
  throw std::invalid_argument("invalid family/rank combination: " + str());
}

std::string angle_name(AngleClass a) {
  switch (a) {
    case AngleClass::Zero: return "0";
    case AngleClass::PiThird: return "pi/3";
    case AngleClass::PiHalf: return "pi/2";
    case AngleClass::TwoPiThird: return "2pi/3";
    case AngleClass::Pi: return "pi";
  }
  return "?";
}

DictionaryRow dictionary_row(AngleClass a) {
  switch (a) {
    case AngleClass::Zero: return {a, 0, NeighborClass::NotApplicable, false};
    case AngleClass::PiThird: return {a, 1, NeighborClass::NotApplicable, false};
    case AngleClass::PiHalf: return {a, 2, NeighborClass::Multiple, false};
    case AngleClass::TwoPiThird: return {a, 2, NeighborClass::Unique, true};
    case AngleClass::Pi: return {a, 3, NeighborClass::None, false};
  }
  throw std::logic_error("bad angle");
}

std::vector<std::vector<int>> cartan_matrix(const DiagramSpec& spec) {
  spec.validate();
  int n = spec.rank;
  std::vector<std::pair<int, int>> edges;  // 1-based Bourbaki labels
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E:
      edges.emplace_back(1, 3);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, 4);
      break;
  }
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  }
  return c;
}

namespace {

std::string coeff_key(const RootCoeffs& c) {
  std::string k;
  k.reserve(c.size() * 3);
  for (int v : c) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

int coeff_height(const RootCoeffs& c) {
  int h = 0;
  for (int v : c) h += v;
  return h;
}

/// Canonical order among positive roots: ascending height, then descending
/// lexicographic on coefficient vectors (so alpha_1 precedes alpha_2, ...).
bool canonical_less(const RootCoeffs& a, const RootCoeffs& b) {
  int ha = coeff_height(a), hb = coeff_height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

RootSystem RootSystem::build(const DiagramSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec_ = spec;
  rs.cartan_ = cartan_matrix(spec);
  int n = spec.rank;

  // Closure of the simple roots under the simple reflections
  // s_i(b) = b - (alpha_i | b) alpha_i.
  std::set<RootCoeffs> all;
  std::vector<RootCoeffs> frontier;
  for (int i = 0; i < n; ++i) {
    RootCoeffs e(n, 0);
    e[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootCoeffs> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        int ip = 0;
        for (int j = 0; j < n; ++j) ip += rs.cartan_[i][j] * b[j];
        RootCoeffs r = b;
        r[i] -= ip;
        if (all.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }

  std::vector<RootCoeffs> pos;
  for (const auto& r : all) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int v) { return v <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("mixed-sign root produced by reflection closure");
    if (nonneg) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), canonical_less);

  rs.roots_ = pos;
  for (const auto& r : pos) {
    RootCoeffs neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    rs.roots_.push_back(std::move(neg));
  }
  std::size_t N = rs.roots_.size();
  rs.heights_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    rs.heights_[i] = coeff_height(rs.roots_[i]);
    rs.index_[coeff_key(rs.roots_[i])] = i;
  }

  rs.inner_.assign(N * N, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int ip = rs.inner_coeffs(rs.roots_[i], rs.roots_[j]);
      if (ip < -2 || ip > 2) throw std::logic_error("inner product out of range");
      rs.inner_[i * N + j] = static_cast<int8_t>(ip);
      if (i == j && ip != 2) throw std::logic_error("root of wrong norm");
    }

  rs.sum_.assign(N * N, -1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      RootCoeffs s(rs.roots_[i]);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += rs.roots_[j][k];
      auto it = rs.index_.find(coeff_key(s));
      if (it != rs.index_.end()) rs.sum_[i * N + j] = static_cast<int32_t>(it->second);
    }

  rs.highest_ = rs.positive_count() - 1;  // maximal height is last in canonical order
  for (std::size_t i = 0; i + 1 < rs.positive_count(); ++i)
    if (rs.heights_[i] >= rs.heights_[rs.highest_]) throw std::logic_error("highest root not unique");

  const RootCoeffs& theta = rs.roots_[rs.highest_];
  for (int i = 0; i < n; ++i) {
    RootCoeffs e(n, 0);
    e[i] = 1;
    if (rs.inner_coeffs(theta, e) != 0) rs.J_.push_back(i + 1);
  }

  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  rs.pairs_.assign(N, {npos, npos});
  for (std::size_t g = 0; g < rs.positive_count(); ++g) {
    if (rs.heights_[g] < 2) continue;
    bool found = false;
    for (std::size_t g1 = 0; g1 < rs.positive_count() && !found; ++g1) {
      RootCoeffs d(rs.roots_[g]);
      for (std::size_t k = 0; k < d.size(); ++k) d[k] -= rs.roots_[g1][k];
      auto it = rs.index_.find(coeff_key(d));
      if (it != rs.index_.end() && rs.is_positive(it->second)) {
        rs.pairs_[g] = {g1, it->second};
        found = true;
      }
    }
    if (!found) throw std::logic_error("positive root with no decomposition");
  }
  return rs;
}

std::optional<std::size_t> RootSystem::find(const RootCoeffs& c) const {
  auto it = index_.find(coeff_key(c));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const RootCoeffs& c) const {
  auto r = find(c);
  if (!r) throw std::invalid_argument("not a root of this system");
  return *r;
}

int RootSystem::inner_coeffs(const RootCoeffs& a, const RootCoeffs& b) const {
  int n = spec_.rank;
  int ip = 0;
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n; ++j) ip += a[i] * cartan_[i][j] * b[j];
  }
  return ip;
}

AngleClass RootSystem::angle(std::size_t i, std::size_t j) const {
  switch (inner(i, j)) {
    case 2: return AngleClass::Zero;
    case 1: return AngleClass::PiThird;
    case 0: return AngleClass::PiHalf;
    case -1: return AngleClass::TwoPiThird;
    case -2: return AngleClass::Pi;
  }
  throw std::logic_error("bad inner product");
}

std::pair<std::size_t, std::size_t> RootSystem::defining_pair(std::size_t gamma) const {
  if (!has_defining_pair(gamma)) throw std::invalid_argument("root has no defining pair");
  return pairs_[gamma];
}

bool RootSystem::has_defining_pair(std::size_t gamma) const {
  return gamma < roots_.size() && pairs_[gamma].first != static_cast<std::size_t>(-1);
}

std::string RootSystem::to_json() const {
  std::ostringstream os;
  auto vec = [&os](const std::vector<int>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  os << "{\"type\":\"" << spec_.str() << "\",\"rank\":" << spec_.rank << ",\"cartan\":[";
  for (std::size_t i = 0; i < cartan_.size(); ++i) {
    if (i) os << ',';
    vec(cartan_[i]);
  }
  os << "],\"roots\":[";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) os << ',';
    vec(roots_[i]);
  }
  os << "],\"positive_count\":" << positive_count() << ",\"highest_root\":" << highest_ << ",\"J\":[";
  for (std::size_t i = 0; i < J_.size(); ++i) os << (i ? "," : "") << J_[i];
  os << "],\"defining_pairs\":[";
  bool first = true;
  for (std::size_t g = 0; g < roots_.size(); ++g) {
    if (!has_defining_pair(g)) continue;
    if (!first) os << ',';
    first = false;
    os << "[" << g << "," << pairs_[g].first << "," << pairs_[g].second << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace exgeo
