#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chevorbit {

enum class Family { A, D, E };

char family_letter(Family f);

/// A root written in the basis of simple roots.
struct Root {
  std::vector<int> coeffs;

  int rank() const { return static_cast<int>(coeffs.size()); }
  int height() const;
  bool is_positive() const;
  bool is_zero() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

/// Position of a root inside `RootSystem::roots()`.
using RootIndex = int;
inline constexpr RootIndex kNoRoot = -1;

/// Partition of Phi relative to a fixed root alpha, keyed by <beta, alpha>.
enum class PhiClass { Two, One, Zero, MinusOne, MinusTwo };

PhiClass phi_class_from_pairing(int pairing);

/// Simply-laced root system with the numbering conventions used throughout
/// the library:
///   A_l  chain 1-2-...-l
///   D_l  nodes 1 and 2 are fork tips attached to node 3, chain 3-4-...-l
///   E_l  Bourbaki (node 2 hangs off node 4)
/// Simple-root indices are 0-based in the API (alpha_1 is index 0).
///
/// Roots are ordered: positive roots by height, then lexicographically, then
/// their negatives in the same order. The structure is immutable once built.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// rank x rank Cartan matrix (symmetric, simply-laced).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootIndex i) const { return roots_.at(i); }

  bool is_positive(RootIndex i) const { return i < positive_count_; }
  RootIndex negate(RootIndex i) const { return i < positive_count_ ? i + positive_count_ : i - positive_count_; }
  /// Index of alpha_i + alpha_j, or kNoRoot.
  RootIndex sum(RootIndex a, RootIndex b) const { return sum_[a * size() + b]; }
  /// <alpha, beta> for root indices; values in {-2,...,2}.
  int pairing(RootIndex a, RootIndex b) const { return pairing_[a * size() + b]; }
  /// Index of the simple root alpha_i (0-based i).
  RootIndex simple(int i) const { return simple_.at(i); }
  int height(RootIndex i) const { return roots_[i].height(); }

  RootIndex delta() const { return delta_; }
  /// <beta, delta>; the level of a root.
  int level(RootIndex i) const { return pairing(i, delta_); }

  std::optional<RootIndex> find(const Root& r) const;
  /// Throws NotARoot.
  RootIndex index_of(const Root& r) const;

  /// Cartan pairing of arbitrary coefficient vectors.
  int pairing(const Root& a, const Root& b) const;

  PhiClass phi_class(RootIndex alpha, RootIndex beta) const;
  /// Roots orthogonal to delta, in root order.
  const std::vector<RootIndex>& phi0() const { return phi0_; }
  /// Roots at angle pi/3 with delta, in root order; defines V_1 coordinates.
  const std::vector<RootIndex>& phi1() const { return phi1_; }
  /// Position of a root inside phi1(), or -1.
  int phi1_position(RootIndex i) const { return phi1_pos_[i]; }

  /// Weyl reflection s_alpha(beta) = beta - <beta, alpha> alpha.
  RootIndex reflect(RootIndex alpha, RootIndex beta) const;

  /// Smallest simple index i with gamma - alpha_i in Phi or zero.
  /// Throws NotAPositiveRoot.
  int min_subtractable_index(RootIndex gamma) const;

  /// Largest simple index with a nonzero coefficient.
  int max_support_index(RootIndex beta) const;

  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] == -1; }

 private:
  RootSystem() = default;

  Family family_{};
  int rank_ = 0;
  int positive_count_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, RootIndex> lookup_;
  std::vector<RootIndex> sum_;
  std::vector<std::int8_t> pairing_;
  std::vector<RootIndex> simple_;
  RootIndex delta_ = kNoRoot;
  std::vector<RootIndex> phi0_;
  std::vector<RootIndex> phi1_;
  std::vector<int> phi1_pos_;
};

/// Parses "A3", "D4", "E8"; throws UnsupportedSystem.
RootSystem parse_system(std::string_view spec);

/// The pairwise orthogonal roots (lambda, rho, sigma, tau) in Phi_1 with
/// lambda + rho + sigma + tau = 2 delta used to write orbit representatives.
struct StandardQuadruple {
  RootIndex lambda;
  RootIndex rho;
  RootIndex sigma;
  RootIndex tau;
};

/// D family only; throws UnsupportedSystem otherwise.
StandardQuadruple standard_quadruple(const RootSystem& rs);

}  // namespace chevorbit
