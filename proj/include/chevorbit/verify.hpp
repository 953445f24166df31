#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chevorbit/chevalley.hpp"

namespace chevorbit {

struct CheckCount {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;

  bool ok() const { return fail == 0; }
  void record(bool good) { good ? ++pass : ++fail; }
};

/// N_ab != 0 exactly when a + b is a root.
CheckCount check_support(const StructureConstants& t);
/// N_ab = N_{-b,-a} = -N_{-a,-b} = -N_ba
CheckCount check_n1(const StructureConstants& t);
/// N_ab = N_bc = N_ca whenever a + b + c = 0
CheckCount check_n2p(const StructureConstants& t);
/// N_bc N_{a,b+c} = N_{a+b,c} N_ab whenever all four are defined
CheckCount check_n3pp(const StructureConstants& t);
/// N_{alpha_j, gamma - alpha_j} = +1 for j = min_subtractable_index(gamma)
CheckCount check_n4(const StructureConstants& t);
/// Jacobi identity and antisymmetry on basis elements, over the integers.
/// Exhaustive over triples when `random_triples` is empty.
CheckCount check_jacobi(const StructureConstants& t, std::optional<std::uint64_t> random_triples = std::nullopt,
                        std::uint64_t seed = 1);
/// Table against sign_rule on every (i, beta) with beta, beta + alpha_i positive.
CheckCount check_theorem1(const StructureConstants& t);
/// Table against structure_constant_fast on every ordered pair.
CheckCount check_fast_path(const StructureConstants& t);

/// Jacobi is exhaustive except for E_7 and E_8, where 10^5 random triples are used.
std::optional<std::uint64_t> default_jacobi_sample(const RootSystem& rs);

/// Products of constants at the standard quadruple (family D).
struct QuadrupleProducts {
  /// N_{l-d,d} N_{l-d,r} N_{s-d,d} N_{s-d,t}
  int product1 = 0;
  /// N_{l-d,d} N_{l-d,s} N_{r-d,d} N_{r-d,t}  (D_4 only, else 0)
  int product2 = 0;
  /// the factors of product1 followed by those of product2
  std::vector<int> constants;
};

/// Throws UnsupportedSystem outside family D.
QuadrupleProducts quadruple_products(const StructureConstants& t);

/// (gamma, j, i) with 0-based simple indices.
struct DichotomyException {
  RootIndex gamma;
  int j;
  int i;
};

/// Positive gamma with least subtractable alpha_j and another subtractable
/// alpha_i (gamma != alpha_i + alpha_j) such that alpha_j is not the least
/// simple root subtractable from gamma - alpha_i.
std::vector<DichotomyException> dichotomy_exceptions(const RootSystem& rs);

}  // namespace chevorbit
