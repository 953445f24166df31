#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevorbit/chevalley.hpp"
#include "chevorbit/gfield.hpp"
#include "chevorbit/lievector.hpp"

namespace chevorbit {

/// Coefficients of x in V_1 = <e_a : <a, delta> = 1>, in the order of
/// RootSystem::phi1().
using V1Vector = std::vector<Scalar>;

enum class Luminosity { ZeroVec, Singular, Brilliant, Shining, Dark };

const char* luminosity_name(Luminosity l);

/// Trace-zero 2x2 matrix [[c, u], [w, -c]].
struct ZBlock {
  Scalar c = 0;
  Scalar u = 0;
  Scalar w = 0;

  bool is_zero() const { return c == 0 && u == 0 && w == 0; }
  friend bool operator==(const ZBlock&, const ZBlock&) = default;
};

/// SL(2, K)-conjugacy invariant of a trace-zero 2x2 matrix.
struct Sl2Invariant {
  enum class Kind { Zero, Nilpotent, Regular };

  Kind kind = Kind::Zero;
  SquareClass square{SquareToken::Square, 1};  // Nilpotent only
  NormClass norm{0, 0};                         // Regular only; norm.k = -det

  friend bool operator==(const Sl2Invariant&, const Sl2Invariant&) = default;
};

/// Zero; Nilpotent with the square class of the upper-right entry (or of
/// minus the lower-left one when the former vanishes); Regular with
/// k = -det z and the K_k class of the upper entry of an antidiagonal
/// SL(2)-conjugate [[0, k/d], [d, 0]].
Sl2Invariant sl2_invariant(const PrimeField& field, const ZBlock& z);

using Matrix2 = std::array<std::array<Scalar, 2>, 2>;

/// Throws NotTraceZero unless m[0][0] + m[1][1] = 0 in F_p.
ZBlock to_zblock(const PrimeField& field, const Matrix2& m);

enum class Label { I, IIa, IIb, II, IIIa, IIIb, IIIc, III, IV, V, VI };

const char* label_name(Label l);
std::optional<Label> parse_label(std::string_view s);

enum class ParamKind { Scalar, SquareClass, NormClass };

/// A square class is stored by its representative, a norm class by its token.
struct Param {
  std::string name;
  ParamKind kind = ParamKind::Scalar;
  Scalar value = 0;

  friend bool operator==(const Param&, const Param&) = default;
  friend auto operator<=>(const Param&, const Param&) = default;
};

struct OrbitDescriptor {
  Family family = Family::A;
  int rank = 0;
  Scalar p = 0;
  Label label = Label::I;
  std::vector<Param> params;

  const Param* find(std::string_view name) const;

  friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
  friend auto operator<=>(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

std::string to_string(const OrbitDescriptor& d);

/// Level of a root element relative to delta, used by `luminosity`.
Luminosity luminosity(const RootSystem& rs, const LieVector& y);

/// Orbit classification of G_0 on V_1 over F_p for the families A and D.
///
/// The object keeps the table, the field and the per-system data (quadruple,
/// A_1 factors of Phi_0, covector/vector positions) so that batches of
/// vectors are classified without recomputation. Construction throws
/// UnsupportedFamily for E and CharTwo / InvalidModulus for bad p.
class OrbitLab {
 public:
  OrbitLab(const StructureConstants& table, Scalar p);

  const StructureConstants& table() const { return *table_; }
  const RootSystem& roots() const { return table_->roots(); }
  const PrimeField& field() const { return field_; }
  ScalarDomain domain() const { return field_.domain(); }
  /// |Phi_1|
  int dimension() const { return static_cast<int>(roots().phi1().size()); }

  /// Throws InvalidVector on wrong length or entries outside 0..p-1.
  void validate(const V1Vector& x) const;
  LieVector embed(const V1Vector& x) const;
  V1Vector restrict(const LieVector& v) const;
  /// e_mu as a V_1 vector; mu must lie in Phi_1.
  V1Vector unit(RootIndex mu, Scalar c = 1) const;

  /// D only. The unique root element y with y^delta = 1 and y^a = x^a on
  /// Phi_1, built as x_{-delta}(c) prod x_{a-delta}(N_{a-delta,delta} x^a) e_delta.
  /// `order` lists Phi_1 positions in the order the factors act; by default
  /// the last position acts first.
  LieVector associated_root_element(const V1Vector& x, const std::vector<int>* order = nullptr) const;

  /// D only. One block per A_1 factor {+-gamma} of Phi_0 that meets the
  /// quadruple: gamma = alpha_1, alpha_2, alpha_4 on D_4 and alpha_l on D_l.
  /// Entries: upper-right y^{-gamma}, lower-left y^{gamma}, diagonal
  /// (-c, c) with c the h_gamma coordinate of y.
  std::vector<ZBlock> z_blocks(const LieVector& y) const;

  /// A only, l >= 2: u_j = x at alpha_1+...+alpha_j, v_j = x at
  /// alpha_{j+1}+...+alpha_l.
  std::pair<V1Vector, V1Vector> al_pair(const V1Vector& x) const;

  OrbitDescriptor classify(const V1Vector& x) const;
  bool same_orbit(const V1Vector& x1, const V1Vector& x2) const { return classify(x1) == classify(x2); }
  /// Representative of the orbit with descriptor d; classify of the result
  /// equals d. Throws InvalidDescriptor.
  V1Vector canonical_form(const OrbitDescriptor& d) const;
  /// Every descriptor the classification theorems predict, sorted.
  std::vector<OrbitDescriptor> predicted_descriptors() const;

  /// Nilpotent-class parameter of block b, normalized so that e_lambda + r e_mu
  /// gets the class of r.
  SquareClass block_square_class(const ZBlock& z, int b) const;

 private:
  OrbitDescriptor classify_a(const V1Vector& x) const;
  OrbitDescriptor classify_d(const V1Vector& x) const;
  OrbitDescriptor base() const;
  std::vector<V1Vector> candidates(const OrbitDescriptor& d) const;

  const StructureConstants* table_;
  PrimeField field_;
  // D data
  RootIndex lambda_ = kNoRoot, rho_ = kNoRoot, sigma_ = kNoRoot, tau_ = kNoRoot;
  std::vector<int> block_simple_;
  std::vector<RootIndex> block_mu_;
  std::vector<Scalar> block_sign_;
  int cancel_index_ = -1;
  // A data (positions in phi1)
  std::vector<int> u_pos_, v_pos_;
};

}  // namespace chevorbit
