#ifndef EXGEO_ROOTS_HPP
#define EXGEO_ROOTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace exgeo {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

struct DiagramSpec {
  Family family;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
  /// Parse "A2", "D4", "E8"; throws std::invalid_argument on junk or an
  /// invalid family/rank combination.
  static DiagramSpec parse(const std::string& s);
  void validate() const;
};

using RootCoeffs = std::vector<int>;  // coordinates over the simple roots

enum class AngleClass { Zero, PiThird, PiHalf, TwoPiThird, Pi };

std::string angle_name(AngleClass a);

enum class NeighborClass { Unique, Multiple, None, NotApplicable };

/// One row of the angle/distance/common-neighbor dictionary.
struct DictionaryRow {
  AngleClass angle;
  int distance;             // expected collinearity-graph distance
  NeighborClass neighbors;  // expected common-neighbor count class
  bool neighbor_is_sum;     // at 2pi/3 the unique neighbor is the point of alpha+beta
};

DictionaryRow dictionary_row(AngleClass a);

/// Simply-laced irreducible root system in simple-root coordinates with the
/// inner product given by the Cartan matrix. Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(const DiagramSpec& spec);

  const DiagramSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }
  const std::vector<RootCoeffs>& roots() const { return roots_; }
  const RootCoeffs& root(std::size_t i) const { return roots_[i]; }

  bool is_positive(std::size_t i) const { return i < positive_count(); }
  int height(std::size_t i) const { return heights_[i]; }
  std::size_t neg_index(std::size_t i) const {
    std::size_t p = positive_count();
    return i < p ? i + p : i - p;
  }

  std::optional<std::size_t> find(const RootCoeffs& c) const;
  std::size_t index_of(const RootCoeffs& c) const;

  int inner(std::size_t i, std::size_t j) const { return inner_[i * roots_.size() + j]; }
  int inner_coeffs(const RootCoeffs& a, const RootCoeffs& b) const;
  /// Index of alpha+beta if it is a root.
  std::optional<std::size_t> sum_index(std::size_t i, std::size_t j) const {
    int32_t s = sum_[i * roots_.size() + j];
    return s < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(s));
  }

  AngleClass angle(std::size_t i, std::size_t j) const;
  DictionaryRow dictionary(std::size_t i, std::size_t j) const { return dictionary_row(angle(i, j)); }

  std::size_t highest_root() const { return highest_; }
  /// Bourbaki labels i with (highest root | alpha_i) != 0, 1-based.
  const std::vector<int>& root_set_J() const { return J_; }

  /// Defining pair (g1, g2), g1 + g2 = gamma, for a non-simple positive root.
  /// g1 is the first positive root in canonical order with gamma - g1 positive.
  std::pair<std::size_t, std::size_t> defining_pair(std::size_t gamma) const;
  bool has_defining_pair(std::size_t gamma) const;

  std::string to_json() const;

 private:
  RootSystem() = default;

  DiagramSpec spec_{Family::A, 1};
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoeffs> roots_;  // canonical order: positives by (height, desc-lex), then mirrored negatives
  std::vector<int> heights_;
  std::vector<int8_t> inner_;
  std::vector<int32_t> sum_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t highest_ = 0;
  std::vector<int> J_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;  // by root index; (npos,npos) if none
};

std::vector<std::vector<int>> cartan_matrix(const DiagramSpec& spec);

}  // namespace exgeo

#endif
