#include "chevorbit/verify.hpp"

#include <random>

#include "chevorbit/error.hpp"

namespace chevorbit {

CheckCount check_support(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = 0; b < rs.size(); ++b)
      if (b != rs.negate(a)) c.record((t.at(a, b) != 0) == (rs.sum(a, b) != kNoRoot));
  return c;
}

CheckCount check_n1(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex a = 0; a < rs.size(); ++a) {
    for (RootIndex b = 0; b < rs.size(); ++b) {
      if (rs.sum(a, b) == kNoRoot) continue;
      const int n = t.at(a, b);
      const RootIndex na = rs.negate(a), nb = rs.negate(b);
      c.record(n == t.at(nb, na) && n == -t.at(na, nb) && n == -t.at(b, a));
    }
  }
  return c;
}

CheckCount check_n2p(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex a = 0; a < rs.size(); ++a) {
    for (RootIndex b = 0; b < rs.size(); ++b) {
      const RootIndex s = rs.sum(a, b);
      if (s == kNoRoot) continue;
      const RootIndex g = rs.negate(s);
      c.record(t.at(a, b) == t.at(b, g) && t.at(b, g) == t.at(g, a));
    }
  }
  return c;
}

CheckCount check_n3pp(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex a = 0; a < rs.size(); ++a) {
    for (RootIndex b = 0; b < rs.size(); ++b) {
      const RootIndex ab = rs.sum(a, b);
      if (ab == kNoRoot) continue;
      for (RootIndex g = 0; g < rs.size(); ++g) {
        const RootIndex bg = rs.sum(b, g);
        if (bg == kNoRoot || rs.sum(a, bg) == kNoRoot || rs.sum(ab, g) == kNoRoot) continue;
        c.record(t.at(b, g) * t.at(a, bg) == t.at(ab, g) * t.at(a, b));
      }
    }
  }
  return c;
}

CheckCount check_n4(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex g = 0; g < rs.positive_count(); ++g) {
    if (rs.height(g) < 2) continue;
    const RootIndex aj = rs.simple(rs.min_subtractable_index(g));
    c.record(t.at(aj, rs.sum(g, rs.negate(aj))) == 1);
  }
  return c;
}

namespace {

LieVector basis(const RootSystem& rs, int k) {
  const auto z = ScalarDomain::integers();
  return k < rs.size() ? LieVector::root_vector(rs, z, k) : LieVector::coroot_vector(rs, z, k - rs.size());
}

bool jacobi_holds(const StructureConstants& t, const LieVector& x, const LieVector& y, const LieVector& z) {
  LieVector sum = bracket(t, bracket(t, x, y), z);
  sum += bracket(t, bracket(t, y, z), x);
  sum += bracket(t, bracket(t, z, x), y);
  return sum.is_zero();
}

}  // namespace

std::optional<std::uint64_t> default_jacobi_sample(const RootSystem& rs) {
  if (rs.family() == Family::E && rs.rank() >= 7) return 100'000;
  return std::nullopt;
}

CheckCount check_jacobi(const StructureConstants& t, std::optional<std::uint64_t> random_triples, std::uint64_t seed) {
  const RootSystem& rs = t.roots();
  const int dim = rs.size() + rs.rank();
  std::vector<LieVector> e;
  for (int k = 0; k < dim; ++k) e.push_back(basis(rs, k));
  CheckCount c;
  for (int i = 0; i < dim; ++i) {
    c.record(bracket(t, e[i], e[i]).is_zero());
    for (int j = i + 1; j < dim; ++j) c.record((bracket(t, e[i], e[j]) + bracket(t, e[j], e[i])).is_zero());
  }
  if (random_triples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (std::uint64_t n = 0; n < *random_triples; ++n) c.record(jacobi_holds(t, e[pick(rng)], e[pick(rng)], e[pick(rng)]));
    return c;
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) c.record(jacobi_holds(t, e[i], e[j], e[k]));
  return c;
}

CheckCount check_theorem1(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (int i = 0; i < rs.rank(); ++i) {
    for (RootIndex b = 0; b < rs.positive_count(); ++b) {
      const RootIndex s = rs.sum(rs.simple(i), b);
      if (s == kNoRoot || !rs.is_positive(s)) continue;
      c.record(t.at(rs.simple(i), b) == sign_rule(rs, i, b));
    }
  }
  return c;
}

CheckCount check_fast_path(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  CheckCount c;
  for (RootIndex a = 0; a < rs.size(); ++a)
    for (RootIndex b = 0; b < rs.size(); ++b)
      if (b != rs.negate(a)) c.record(t.at(a, b) == structure_constant_fast(rs, a, b));
  return c;
}

QuadrupleProducts quadruple_products(const StructureConstants& t) {
  const RootSystem& rs = t.roots();
  const auto q = standard_quadruple(rs);
  const RootIndex d = rs.delta();
  const RootIndex md = rs.negate(d);
  auto minus_delta = [&](RootIndex r) { return rs.sum(r, md); };
  QuadrupleProducts out;
  out.constants = {t(minus_delta(q.lambda), d), t(minus_delta(q.lambda), q.rho), t(minus_delta(q.sigma), d),
                   t(minus_delta(q.sigma), q.tau)};
  out.product1 = out.constants[0] * out.constants[1] * out.constants[2] * out.constants[3];
  if (rs.rank() == 4) {
    const std::vector<int> second = {t(minus_delta(q.lambda), d), t(minus_delta(q.lambda), q.sigma),
                                     t(minus_delta(q.rho), d), t(minus_delta(q.rho), q.tau)};
    out.product2 = second[0] * second[1] * second[2] * second[3];
    out.constants.insert(out.constants.end(), second.begin(), second.end());
  }
  return out;
}

std::vector<DichotomyException> dichotomy_exceptions(const RootSystem& rs) {
  std::vector<DichotomyException> out;
  for (RootIndex g = 0; g < rs.positive_count(); ++g) {
    if (rs.height(g) < 2) continue;
    const int j = rs.min_subtractable_index(g);
    for (int i = j + 1; i < rs.rank(); ++i) {
      const RootIndex rest = rs.sum(g, rs.negate(rs.simple(i)));
      if (rest == kNoRoot || rest == rs.simple(j)) continue;
      if (rs.min_subtractable_index(rest) != j) out.push_back({g, j, i});
    }
  }
  return out;
}

}  // namespace chevorbit
