#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevorbit/orbitlab.hpp"

namespace chevorbit {

inline constexpr std::uint64_t kDefaultStateBudget = 10'000'000;

/// Budget from CHEVORBIT_BUDGET, else the default.
std::uint64_t state_budget_from_env();

struct OrbitRecord {
  V1Vector representative;  // lexicographically least state
  std::uint64_t size = 0;
  OrbitDescriptor descriptor;
};

struct OrbitCensus {
  Family family = Family::A;
  int rank = 0;
  Scalar p = 0;
  std::uint64_t total_states = 0;
  std::vector<OrbitRecord> orbits;  // ordered by representative
  /// Orbit root of every state (the least state's code).
  std::vector<std::uint32_t> orbit_of;
};

/// Encode a V_1 vector as a base-p integer, first coordinate most significant.
std::uint64_t encode_state(const V1Vector& x, Scalar p);
V1Vector decode_state(std::uint64_t code, int length, Scalar p);

/// Orbits of G_0 on V_1 over F_p by union-find over all p^|Phi_1| states,
/// with generators x_gamma(t), gamma in Phi_0, t in F_p*. Throws
/// BudgetExceeded when the state count exceeds `budget`.
OrbitCensus enumerate_orbits(const OrbitLab& lab, std::uint64_t budget = kDefaultStateBudget);

struct CrosscheckReport {
  bool ok = true;
  std::string failure;             // first failed assertion, empty when ok
  std::optional<V1Vector> witness;  // offending state, if any
  std::uint64_t states_classified = 0;
  std::uint64_t random_pairs = 0;
  std::uint64_t representative_pairs = 0;
};

/// Checks that classification and brute force agree:
///  (a) descriptor constant on every orbit,
///  (b) distinct orbits carry distinct descriptors,
///  (c) canonical_form round-trips and lands in the orbit carrying its descriptor,
///  (d) same_orbit matches orbit membership on all representative pairs and
///      on `random_pairs` random state pairs,
///  (e) the descriptors found are exactly the predicted ones.
CrosscheckReport crosscheck(const OrbitLab& lab, const OrbitCensus& census, std::uint64_t random_pairs = 10'000,
                            std::uint64_t seed = 1);

}  // namespace chevorbit
