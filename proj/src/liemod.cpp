#include "chevorbit/liemod.hpp"

#include <algorithm>
#include <cstdlib>

#include "chevorbit/error.hpp"

namespace chevorbit {

namespace {

void require_root(const RootSystem& rs, RootIndex gamma) {
  if (gamma < 0 || gamma >= rs.size()) throw Error(Errc::NotARoot, "root index out of range");
}

}  // namespace

LieVector apply_root_element(const StructureConstants& table, RootIndex gamma, Scalar a, const LieVector& v) {
  const RootSystem& rs = table.roots();
  require_root(rs, gamma);
  const ScalarDomain& dom = v.domain();
  a = dom.reduce(a);
  LieVector out = v;
  if (a == 0) return out;

  const RootIndex minus = rs.negate(gamma);
  for (RootIndex b = 0; b < rs.size(); ++b) {
    const Scalar x = v.e(b);
    if (x == 0) continue;
    if (b == minus) {
      const Root& g = rs.root(gamma);
      const Scalar ax = dom.mul(a, x);
      for (int i = 0; i < rs.rank(); ++i)
        if (g.coeffs[i] != 0) out.add_h(i, dom.mul(ax, g.coeffs[i]));
      out.add_e(gamma, dom.neg(dom.mul(a, ax)));
    } else if (rs.pairing(gamma, b) == -1) {
      out.add_e(rs.sum(gamma, b), dom.mul(dom.mul(a, x), table.at(gamma, b)));
    }
  }
  for (int i = 0; i < rs.rank(); ++i) {
    const Scalar y = v.h(i);
    if (y == 0) continue;
    out.add_e(gamma, dom.mul(dom.mul(a, y), -rs.pairing(rs.simple(i), gamma)));
  }
  return out;
}

LieVector apply_word(const StructureConstants& table, const GroupWord& word, const LieVector& v) {
  LieVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_root_element(table, it->root, it->scalar, out);
  return out;
}

GroupWord inverse(const GroupWord& word, const ScalarDomain& domain) {
  GroupWord out(word.rbegin(), word.rend());
  for (auto& f : out) f.scalar = domain.neg(f.scalar);
  return out;
}

GroupWord w_word(const RootSystem& rs, RootIndex gamma, Scalar a, const ScalarDomain& domain) {
  require_root(rs, gamma);
  a = domain.reduce(a);
  if (a == 0) throw Error(Errc::ZeroScalar, "w_gamma(0) is undefined");
  const RootIndex minus = rs.negate(gamma);
  const Scalar inv_a = domain.inv(a);
  return {
      {minus, domain.add(domain.neg(domain.mul(a, a)), a)},
      {gamma, domain.neg(inv_a)},
      {minus, domain.sub(a, 1)},
      {gamma, 1},
  };
}

LieVector w_apply_fast(const RootSystem& rs, RootIndex gamma, Scalar a, const LieVector& v) {
  require_root(rs, gamma);
  const ScalarDomain& dom = v.domain();
  a = dom.reduce(a);
  if (a == 0) throw Error(Errc::ZeroScalar, "w_gamma(0) is undefined");
  const Scalar inv_a = dom.inv(a);
  LieVector out = v;
  for (RootIndex b = 0; b < rs.size(); ++b) {
    const Scalar x = v.e(b);
    if (x == 0) continue;
    const int m = rs.pairing(b, gamma);
    const Scalar f = m >= 0 ? inv_a : a;
    Scalar y = x;
    for (int k = 0; k < std::abs(m); ++k) y = dom.mul(y, f);
    out.set_e(b, y);
  }
  return out;
}

GroupWord weyl_word(const RootSystem& rs, RootIndex gamma) {
  require_root(rs, gamma);
  return {{gamma, 1}, {rs.negate(gamma), -1}, {gamma, 1}};
}

}  // namespace chevorbit
