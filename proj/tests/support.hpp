#pragma once

#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "chevorbit/chevalley.hpp"
#include "chevorbit/liemod.hpp"
#include "chevorbit/orbitlab.hpp"

namespace testing {

using namespace chevorbit;

inline const StructureConstants& table(Family f, int rank) {
  static std::map<std::pair<Family, int>, std::unique_ptr<StructureConstants>> cache;
  auto& slot = cache[{f, rank}];
  if (!slot) slot = std::make_unique<StructureConstants>(StructureConstants::build(f, rank));
  return *slot;
}

inline std::vector<std::pair<Family, int>> all_systems() {
  std::vector<std::pair<Family, int>> out;
  for (int l = 1; l <= 8; ++l) out.push_back({Family::A, l});
  for (int l = 4; l <= 8; ++l) out.push_back({Family::D, l});
  for (int l = 6; l <= 8; ++l) out.push_back({Family::E, l});
  return out;
}

inline Root root_of(std::vector<int> c) { return Root{std::move(c)}; }

inline RootIndex idx(const RootSystem& rs, std::vector<int> c) { return rs.index_of(Root{std::move(c)}); }

inline V1Vector random_v1(const OrbitLab& lab, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, lab.field().p() - 1);
  V1Vector x(lab.dimension());
  for (auto& c : x) c = d(rng);
  return x;
}

inline GroupWord random_g0_word(const OrbitLab& lab, std::mt19937_64& rng, int max_len = 6) {
  GroupWord w;
  const auto& phi0 = lab.roots().phi0();
  if (phi0.empty()) return w;
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> root(0, phi0.size() - 1);
  std::uniform_int_distribution<Scalar> t(1, lab.field().p() - 1);
  for (int n = len(rng); n > 0; --n) w.push_back({phi0[root(rng)], t(rng)});
  return w;
}

inline V1Vector act(const OrbitLab& lab, const GroupWord& w, const V1Vector& x) {
  return lab.restrict(apply_word(lab.table(), w, lab.embed(x)));
}

}  // namespace testing
