#pragma once

#include <vector>

#include "chevorbit/chevalley.hpp"
#include "chevorbit/lievector.hpp"

namespace chevorbit {

/// One factor x_gamma(a) of a group word.
struct RootFactor {
  RootIndex root = kNoRoot;
  Scalar scalar = 0;

  friend bool operator==(const RootFactor&, const RootFactor&) = default;
};

/// x_{g1}(a1) x_{g2}(a2) ... x_{gm}(am); the rightmost factor acts first.
using GroupWord = std::vector<RootFactor>;

/// x_gamma(a) acting on the adjoint module:
///   e_b     -> e_b + N_{gamma b} a e_{gamma+b}   when <gamma, b> = -1
///   e_-gamma -> e_-gamma + a h_gamma - a^2 e_gamma
///   h_i     -> h_i - <alpha_i, gamma> a e_gamma
/// and identity on the remaining basis vectors.
LieVector apply_root_element(const StructureConstants& table, RootIndex gamma, Scalar a, const LieVector& v);

LieVector apply_word(const StructureConstants& table, const GroupWord& word, const LieVector& v);

/// Reversed word with negated scalars.
GroupWord inverse(const GroupWord& word, const ScalarDomain& domain);

/// w_gamma(a) = x_{-gamma}(-a^2 + a) x_gamma(-1/a) x_{-gamma}(a - 1) x_gamma(1).
/// Throws ZeroScalar for a = 0.
GroupWord w_word(const RootSystem& rs, RootIndex gamma, Scalar a, const ScalarDomain& domain);

/// Diagonal form of w_gamma(a): e_b is scaled by a^{-<b, gamma>}, h is fixed.
/// Throws ZeroScalar for a = 0.
LieVector w_apply_fast(const RootSystem& rs, RootIndex gamma, Scalar a, const LieVector& v);

/// n_gamma = x_gamma(1) x_{-gamma}(-1) x_gamma(1); sends e_b to +-e_{s_gamma(b)}.
GroupWord weyl_word(const RootSystem& rs, RootIndex gamma);

}  // namespace chevorbit
