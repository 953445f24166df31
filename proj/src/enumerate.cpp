#include "chevorbit/enumerate.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "chevorbit/error.hpp"

namespace chevorbit {

namespace {

// Effect of x_gamma(1) on V_1: coordinate dst gains sign * x[src].
struct Move {
  int src;
  int dst;
  Scalar sign;
};

std::vector<std::vector<Move>> generator_moves(const OrbitLab& lab) {
  const RootSystem& rs = lab.roots();
  const auto& phi1 = rs.phi1();
  std::vector<std::vector<Move>> out;
  for (RootIndex g : rs.phi0()) {
    std::vector<Move> moves;
    for (int i = 0; i < static_cast<int>(phi1.size()); ++i) {
      if (rs.pairing(g, phi1[i]) != -1) continue;
      moves.push_back({i, rs.phi1_position(rs.sum(g, phi1[i])), lab.table().at(g, phi1[i])});
    }
    if (!moves.empty()) out.push_back(std::move(moves));
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // the smaller root wins, so every root is the least state of its set
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::uint64_t state_budget_from_env() {
  if (const char* env = std::getenv("CHEVORBIT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultStateBudget;
}

std::uint64_t encode_state(const V1Vector& x, Scalar p) {
  std::uint64_t code = 0;
  for (Scalar c : x) code = code * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(c);
  return code;
}

V1Vector decode_state(std::uint64_t code, int length, Scalar p) {
  V1Vector x(length, 0);
  for (int i = length - 1; i >= 0; --i) {
    x[i] = static_cast<Scalar>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  return x;
}

OrbitCensus enumerate_orbits(const OrbitLab& lab, std::uint64_t budget) {
  const int n = lab.dimension();
  const Scalar p = lab.field().p();
  const auto up = static_cast<std::uint64_t>(p);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / up + 1) throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget) + " states");
    total *= up;
  }
  if (total > budget || total > 0xFFFFFFFFull)
    throw Error(Errc::BudgetExceeded, std::to_string(total) + " states exceed the budget of " + std::to_string(budget));

  std::vector<std::uint64_t> place(n);
  for (int i = n - 1, w = 0; i >= 0; --i, ++w) place[i] = w == 0 ? 1 : place[i + 1] * up;

  const auto gens = generator_moves(lab);
  UnionFind uf(total);
  V1Vector x(n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    // x tracks decode(code); increment as a base-p odometer
    if (code) {
      for (int i = n - 1; i >= 0; --i) {
        if (++x[i] < p) break;
        x[i] = 0;
      }
    }
    for (const auto& moves : gens) {
      for (Scalar t = 1; t < p; ++t) {
        std::int64_t image = static_cast<std::int64_t>(code);
        for (const Move& m : moves) {
          if (x[m.src] == 0) continue;
          // moves of one generator never feed each other, so x is the input
          const Scalar old = x[m.dst];
          Scalar next = (old + m.sign * t * x[m.src]) % p;
          if (next < 0) next += p;
          image += (next - old) * static_cast<std::int64_t>(place[m.dst]);
        }
        uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(image));
      }
    }
  }

  OrbitCensus census;
  census.family = lab.roots().family();
  census.rank = lab.roots().rank();
  census.p = p;
  census.total_states = total;
  census.orbit_of.resize(total);
  std::map<std::uint32_t, std::size_t> slot;
  for (std::uint64_t code = 0; code < total; ++code) {
    const std::uint32_t root = uf.find(static_cast<std::uint32_t>(code));
    census.orbit_of[code] = root;
    auto [it, fresh] = slot.try_emplace(root, census.orbits.size());
    if (fresh) {
      OrbitRecord rec;
      rec.representative = decode_state(root, n, p);
      rec.descriptor = lab.classify(rec.representative);
      census.orbits.push_back(std::move(rec));
    }
    ++census.orbits[it->second].size;
  }
  return census;
}

CrosscheckReport crosscheck(const OrbitLab& lab, const OrbitCensus& census, std::uint64_t random_pairs,
                            std::uint64_t seed) {
  CrosscheckReport report;
  const int n = lab.dimension();
  const Scalar p = census.p;
  auto fail = [&](std::string what, std::optional<V1Vector> witness = std::nullopt) {
    if (report.ok) {
      report.ok = false;
      report.failure = std::move(what);
      report.witness = std::move(witness);
    }
  };

  std::map<std::uint32_t, const OrbitRecord*> by_root;
  for (const auto& rec : census.orbits)
    by_root[static_cast<std::uint32_t>(encode_state(rec.representative, p))] = &rec;

  // (a)
  for (std::uint64_t code = 0; code < census.total_states && report.ok; ++code) {
    const V1Vector x = decode_state(code, n, p);
    if (!(lab.classify(x) == by_root.at(census.orbit_of[code])->descriptor))
      fail("descriptor differs inside one orbit", x);
    ++report.states_classified;
  }

  // (b)
  std::set<OrbitDescriptor> seen;
  for (const auto& rec : census.orbits)
    if (!seen.insert(rec.descriptor).second) fail("two orbits share " + to_string(rec.descriptor), rec.representative);

  // (c)
  for (const auto& rec : census.orbits) {
    if (!report.ok) break;
    try {
      const V1Vector c = lab.canonical_form(rec.descriptor);
      if (!(lab.classify(c) == rec.descriptor)) fail("canonical form does not round-trip", c);
      else if (census.orbit_of[encode_state(c, p)] != encode_state(rec.representative, p))
        fail("canonical form lies outside its orbit", c);
    } catch (const Error& e) {
      fail(e.what(), rec.representative);
    }
  }

  // (d)
  for (std::size_t i = 0; i < census.orbits.size(); ++i) {
    for (std::size_t j = 0; j < census.orbits.size(); ++j) {
      const bool same = lab.same_orbit(census.orbits[i].representative, census.orbits[j].representative);
      if (same != (i == j)) fail("same_orbit disagrees on representatives", census.orbits[i].representative);
      ++report.representative_pairs;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, census.total_states - 1);
  for (std::uint64_t k = 0; k < random_pairs && report.ok; ++k) {
    const std::uint64_t a = pick(rng), b = pick(rng);
    const bool same = lab.same_orbit(decode_state(a, n, p), decode_state(b, n, p));
    if (same != (census.orbit_of[a] == census.orbit_of[b])) fail("same_orbit disagrees", decode_state(a, n, p));
    ++report.random_pairs;
  }

  // (e)
  const auto predicted = lab.predicted_descriptors();
  if (std::vector<OrbitDescriptor>(seen.begin(), seen.end()) != predicted)
    fail("orbit descriptors differ from the predicted list");
  return report;
}

}  // namespace chevorbit
