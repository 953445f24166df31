#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "chevorbit/lievector.hpp"
#include "chevorbit/rootsys.hpp"

namespace chevorbit {

/// Structure constants N_{alpha beta} in {-1, 0, +1} of a positive Chevalley
/// basis, stored densely over ordered root pairs.
///
/// `build` derives the table from the extraspecial seeds N_{alpha_j, gamma -
/// alpha_j} = +1 (j the least index subtractable from gamma) by propagating
/// the sign relations N1, N2' and N3'' over GF(2) until a fixpoint. Throws
/// Inconsistent if a relation is violated and Underdetermined if some
/// constant stays unknown; neither happens for a valid root system.
class StructureConstants {
 public:
  static StructureConstants build(std::shared_ptr<const RootSystem> rs);
  static StructureConstants build(Family family, int rank);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }

  /// N_{alpha beta}; 0 when alpha + beta is not a root. Throws
  /// SameOppositePair for beta = -alpha.
  int operator()(RootIndex alpha, RootIndex beta) const;

  /// Unchecked lookup (0 for opposite pairs).
  int at(RootIndex alpha, RootIndex beta) const { return n_[alpha * rs_->size() + beta]; }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::int8_t> n_;
};

/// Sign of N_{alpha_i, beta} for beta, beta + alpha_i positive: -1 exactly
/// when i exceeds every simple index in the support of beta. `i` is 0-based.
/// Throws SumNotARoot when beta + alpha_i is not a positive root.
int sign_rule(const RootSystem& rs, int i, RootIndex beta);

/// N_{alpha beta} computed without a table: rewrite to a pair of positive
/// roots by N1/N2', then peel simple roots off alpha by height using the
/// Jacobi identity, with `sign_rule` supplying every constant whose first
/// argument is simple. Throws SameOppositePair for beta = -alpha.
int structure_constant_fast(const RootSystem& rs, RootIndex alpha, RootIndex beta);

/// Lie bracket in the Chevalley basis:
///   [e_a, e_b] = N_ab e_{a+b},  [e_a, e_-a] = h_a,  [h_i, e_b] = <alpha_i, b> e_b.
/// h_a for a non-simple root expands along its simple-root coefficients.
/// Throws ScalarMismatch when the domains differ.
LieVector bracket(const StructureConstants& table, const LieVector& v, const LieVector& w);

}  // namespace chevorbit
