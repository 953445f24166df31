#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "chevorbit/error.hpp"

using namespace testing;

namespace {

struct DFixture {
  const StructureConstants& t;
  OrbitLab lab;
  StandardQuadruple q;

  DFixture(int l, Scalar p) : t(table(Family::D, l)), lab(t, p), q(standard_quadruple(t.roots())) {}

  V1Vector vec(std::initializer_list<std::pair<RootIndex, Scalar>> terms) const {
    V1Vector x(lab.dimension(), 0);
    for (auto [r, c] : terms) x[lab.roots().phi1_position(r)] = lab.field().reduce(x[lab.roots().phi1_position(r)] + c);
    return x;
  }
};

Matrix2 mul(const PrimeField& f, const Matrix2& a, const Matrix2& b) {
  Matrix2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
  return c;
}

}  // namespace

TEST_CASE("construction limits") {
  CHECK_THROWS_AS(OrbitLab(table(Family::E, 6), 3), Error);
  CHECK_THROWS_AS(OrbitLab(table(Family::D, 4), 2), Error);
  const OrbitLab a(table(Family::A, 3), 3);
  CHECK_THROWS_AS(a.associated_root_element(V1Vector(4, 0)), Error);
  const OrbitLab d(table(Family::D, 4), 3);
  CHECK_THROWS_AS(d.al_pair(V1Vector(8, 0)), Error);
  CHECK_THROWS_AS(d.classify(V1Vector(7, 0)), Error);
  CHECK_THROWS_AS(d.classify(V1Vector{0, 0, 0, 0, 0, 0, 0, 3}), Error);
}

TEST_CASE("associated root element examples") {
  DFixture d(4, 5);
  const auto& rs = d.lab.roots();
  const auto f = d.lab.domain();
  CHECK(d.lab.associated_root_element(V1Vector(8, 0)) == LieVector::root_vector(rs, f, rs.delta()));

  auto y = d.lab.associated_root_element(d.vec({{d.q.lambda, 1}}));
  auto expect = LieVector::root_vector(rs, f, rs.delta());
  expect.set_e(d.q.lambda, 1);
  CHECK(y == expect);

  y = d.lab.associated_root_element(d.vec({{d.q.lambda, 1}, {d.q.rho, 1}, {d.q.sigma, 1}, {d.q.tau, 1}}));
  const Scalar ymd = y.e(rs.negate(rs.delta()));
  CHECK((ymd == 1 || ymd == 4));
}

TEST_CASE("root element: postconditions, order independence, equivariance") {
  std::mt19937_64 rng(17);
  for (auto [l, p] : {std::pair{4, 5}, {5, 3}, {6, 3}}) {
    DFixture d(l, p);
    const auto& rs = d.lab.roots();
    std::vector<int> order(d.lab.dimension());
    std::iota(order.begin(), order.end(), 0);
    for (int n = 0; n < 60; ++n) {
      const auto x = random_v1(d.lab, rng);
      const auto y = d.lab.associated_root_element(x);
      CHECK(y.e(rs.delta()) == 1);
      CHECK(d.lab.restrict(y) == x);
      CHECK(y.h(l - 2) == 0);
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(d.lab.associated_root_element(x, &order) == y);
      const auto g = random_g0_word(d.lab, rng);
      CHECK(d.lab.associated_root_element(act(d.lab, g, x)) == apply_word(d.t, g, y));
    }
  }
}

TEST_CASE("luminosity examples") {
  DFixture d(4, 3);
  auto lum = [&](V1Vector x) { return luminosity(d.lab.roots(), d.lab.associated_root_element(x)); };
  CHECK(lum(V1Vector(8, 0)) == Luminosity::ZeroVec);
  CHECK(lum(d.vec({{d.q.lambda, 1}})) == Luminosity::Singular);
  CHECK(lum(d.vec({{d.q.lambda, 1}, {d.q.rho, 1}})) == Luminosity::Brilliant);
  CHECK(lum(d.vec({{d.q.lambda, 1}, {d.q.rho, 1}, {d.q.sigma, 1}})) == Luminosity::Shining);
  CHECK(lum(d.vec({{d.q.lambda, 1}, {d.q.rho, 2}, {d.q.sigma, 1}, {d.q.tau, 2}})) == Luminosity::Dark);
}

TEST_CASE("z-block examples") {
  DFixture d(4, 5);
  auto blocks = [&](V1Vector x) { return d.lab.z_blocks(d.lab.associated_root_element(x)); };
  const auto dark = blocks(d.vec({{d.q.lambda, 1}, {d.q.rho, 1}, {d.q.sigma, 1}, {d.q.tau, 1}}));
  CHECK(dark.size() == 3);
  CHECK(dark[0] == ZBlock{0, 1, 1});
  const auto ll = blocks(d.vec({{d.q.lambda, 1}, {d.q.rho, 1}}));
  CHECK(!ll[0].is_zero());
  CHECK(ll[1].is_zero());
  CHECK(ll[2].is_zero());
  for (const auto& z : blocks(V1Vector(8, 0))) CHECK(z.is_zero());
  CHECK(DFixture(6, 3).lab.z_blocks(DFixture(6, 3).lab.associated_root_element(V1Vector(16, 0))).size() == 1);
}

TEST_CASE("sl2 invariants decide SL(2,F_3) conjugacy") {
  const PrimeField f(3);
  std::vector<Matrix2> group;
  for (Scalar a = 0; a < 3; ++a)
    for (Scalar b = 0; b < 3; ++b)
      for (Scalar c = 0; c < 3; ++c)
        for (Scalar e = 0; e < 3; ++e)
          if (f.sub(f.mul(a, e), f.mul(b, c)) == 1) group.push_back({{{a, b}, {c, e}}});
  CHECK(group.size() == 24);
  std::vector<Matrix2> sl2;
  for (Scalar c = 0; c < 3; ++c)
    for (Scalar u = 0; u < 3; ++u)
      for (Scalar w = 0; w < 3; ++w) sl2.push_back({{{c, u}, {w, f.neg(c)}}});
  for (const auto& a : sl2) {
    for (const auto& b : sl2) {
      bool conjugate = false;
      for (const auto& g : group) {
        const Matrix2 ginv{{{g[1][1], f.neg(g[0][1])}, {f.neg(g[1][0]), g[0][0]}}};
        conjugate = conjugate || mul(f, mul(f, g, a), ginv) == b;
      }
      CHECK((sl2_invariant(f, to_zblock(f, a)) == sl2_invariant(f, to_zblock(f, b))) == conjugate);
    }
  }
  CHECK_THROWS_AS(to_zblock(f, Matrix2{{{1, 0}, {0, 1}}}), Error);
}

TEST_CASE("sl2 invariant cases") {
  const PrimeField f(7);
  CHECK(sl2_invariant(f, ZBlock{}).kind == Sl2Invariant::Kind::Zero);
  // [[0,p],[0,0]] ~ [[0,s],[0,0]] iff s/p is a square
  for (Scalar p = 1; p < 7; ++p)
    for (Scalar s = 1; s < 7; ++s)
      CHECK((sl2_invariant(f, {0, p, 0}) == sl2_invariant(f, {0, s, 0})) == f.is_square(f.div(s, p)));
  // antidiag(p,q) ~ antidiag(s,t) iff pq = st
  for (Scalar p = 1; p < 7; ++p)
    for (Scalar q = 1; q < 7; ++q) {
      const auto a = sl2_invariant(f, {0, p, q});
      CHECK(a.kind == Sl2Invariant::Kind::Regular);
      CHECK(a.norm.k == f.mul(p, q));
      CHECK(a == sl2_invariant(f, {0, f.neg(q), f.neg(p)}));
    }
}

TEST_CASE("A-series covector and vector") {
  const OrbitLab lab(table(Family::A, 4), 5);
  const auto& rs = lab.roots();
  const RootIndex rho = idx(rs, {1, 0, 0, 0}), sigma = idx(rs, {0, 0, 0, 1}), dmr = idx(rs, {0, 1, 1, 1});
  auto [u, v] = lab.al_pair(lab.unit(rho));
  CHECK(u == V1Vector{1, 0, 0});
  CHECK(v == V1Vector{0, 0, 0});
  std::tie(u, v) = lab.al_pair(lab.unit(sigma));
  CHECK(u == V1Vector{0, 0, 0});
  CHECK(v == V1Vector{0, 0, 1});
  auto x = lab.unit(rho);
  x[rs.phi1_position(dmr)] = 3;
  std::tie(u, v) = lab.al_pair(x);
  CHECK(u == V1Vector{1, 0, 0});
  CHECK(v == V1Vector{3, 0, 0});
}

TEST_CASE("classification examples") {
  {
    const OrbitLab lab(table(Family::A, 4), 3);
    const auto& rs = lab.roots();
    auto x = lab.unit(idx(rs, {1, 0, 0, 0}));
    x[rs.phi1_position(idx(rs, {0, 0, 0, 1}))] = 1;
    const auto d = lab.classify(x);
    CHECK(d.label == Label::III);
    CHECK(d.params.empty());
    CHECK(lab.canonical_form(d) == x);
    OrbitDescriptor iib = d;
    iib.label = Label::IIb;
    CHECK(lab.canonical_form(iib) == lab.unit(idx(rs, {0, 0, 0, 1})));
  }
  {
    const OrbitLab lab(table(Family::A, 3), 5);
    const auto& rs = lab.roots();
    std::set<OrbitDescriptor> seen;
    for (Scalar c = 1; c < 5; ++c) {
      auto x = lab.unit(idx(rs, {1, 0, 0}));
      x[rs.phi1_position(idx(rs, {0, 1, 1}))] = c;
      const auto d = lab.classify(x);
      CHECK(d.label == Label::VI);
      CHECK(d.find("c")->value == c);
      seen.insert(d);
    }
    CHECK(seen.size() == 4);
  }
  {
    DFixture d(4, 3);
    const auto desc = d.lab.classify(d.vec({{d.q.lambda, 1}, {d.q.rho, 2}}));
    CHECK(desc.label == Label::IIIa);
    CHECK(desc.find("rho_class")->kind == ParamKind::SquareClass);
    CHECK(desc.find("rho_class")->value == 2);
    CHECK(d.lab.classify(V1Vector(8, 0)).label == Label::I);
  }
  CHECK(OrbitLab(table(Family::A, 1), 3).classify({}).label == Label::I);
}

TEST_CASE("same_orbit examples") {
  DFixture d3(4, 3);
  CHECK(!d3.lab.same_orbit(d3.vec({{d3.q.lambda, 1}, {d3.q.rho, 1}}), d3.vec({{d3.q.lambda, 1}, {d3.q.sigma, 1}})));
  DFixture d5(4, 5);
  CHECK(d5.lab.same_orbit(d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 1}}), d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 4}})));
  CHECK(!d5.lab.same_orbit(d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 1}}), d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 2}})));
  const auto dark1 = d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 1}, {d5.q.sigma, 1}, {d5.q.tau, 1}});
  const auto dark2 = d5.vec({{d5.q.lambda, 1}, {d5.q.rho, 1}, {d5.q.sigma, 1}, {d5.q.tau, 2}});
  CHECK(!d5.lab.same_orbit(dark1, dark2));
}

TEST_CASE("canonical forms") {
  DFixture d(6, 5);
  for (const auto& desc : d.lab.predicted_descriptors()) CHECK(d.lab.classify(d.lab.canonical_form(desc)) == desc);
  OrbitDescriptor v;
  v.family = Family::D;
  v.rank = 6;
  v.p = 5;
  v.label = Label::V;
  v.params = {{"k", ParamKind::Scalar, 3}, {"rho_class", ParamKind::NormClass, 1}};
  const auto x = d.lab.canonical_form(v);
  const Scalar r = x[d.lab.roots().phi1_position(d.q.rho)];
  CHECK(x == d.vec({{d.q.lambda, 1}, {d.q.rho, r}, {d.q.sigma, 1}, {d.q.tau, d.lab.field().div(3, r)}}));
  CHECK(d.lab.canonical_form(d.lab.classify(V1Vector(16, 0))) == V1Vector(16, 0));
  v.params[0].value = 0;
  CHECK_THROWS_AS(d.lab.canonical_form(v), Error);
  v.rank = 5;
  CHECK_THROWS_AS(d.lab.canonical_form(v), Error);
}

TEST_CASE("predicted descriptor counts") {
  for (Scalar p : {3, 5, 7}) {
    CHECK(OrbitLab(table(Family::D, 4), p).predicted_descriptors().size() == static_cast<std::size_t>(p + 11));
    for (int l = 5; l <= 8; ++l)
      CHECK(OrbitLab(table(Family::D, l), p).predicted_descriptors().size() == static_cast<std::size_t>(p + 6));
    CHECK(OrbitLab(table(Family::A, 3), p).predicted_descriptors().size() == static_cast<std::size_t>(2 * p + 1));
    for (int l = 4; l <= 8; ++l)
      CHECK(OrbitLab(table(Family::A, l), p).predicted_descriptors().size() == static_cast<std::size_t>(p + 3));
    CHECK(OrbitLab(table(Family::A, 2), p).predicted_descriptors().size() == static_cast<std::size_t>(p * p));
  }
}

TEST_CASE("G_0 invariance of the descriptor") {
  std::mt19937_64 rng(23);
  for (auto [f, l, p] : {std::tuple{Family::D, 4, 5}, {Family::D, 5, 3}, {Family::D, 7, 3}, {Family::A, 3, 5},
                         {Family::A, 5, 3}}) {
    const OrbitLab lab(table(f, l), p);
    for (int n = 0; n < 100; ++n) {
      const auto x = random_v1(lab, rng);
      const auto g = random_g0_word(lab, rng);
      CHECK(lab.classify(act(lab, g, x)) == lab.classify(x));
    }
  }
}

TEST_CASE("three commuting w-elements scale the quadruple") {
  DFixture d(4, 7);
  const auto& rs = d.lab.roots();
  const PrimeField& f = d.lab.field();
  const auto dom = d.lab.domain();
  const auto x = d.vec({{d.q.lambda, 1}, {d.q.rho, 2}, {d.q.sigma, 3}, {d.q.tau, 4}});
  for (auto [a, b, c] : {std::tuple<Scalar, Scalar, Scalar>{2, 3, 5}, {6, 1, 4}}) {
    GroupWord g = w_word(rs, rs.simple(0), a, dom);
    const auto w2 = w_word(rs, rs.simple(1), b, dom);
    const auto w4 = w_word(rs, rs.simple(3), c, dom);
    g.insert(g.end(), w2.begin(), w2.end());
    g.insert(g.end(), w4.begin(), w4.end());
    const auto gx = act(d.lab, g, x);
    auto at = [&](RootIndex r) { return gx[rs.phi1_position(r)]; };
    CHECK(at(d.q.lambda) == f.mul(f.mul(a, b), c));
    CHECK(at(d.q.rho) == f.mul(2, f.div(a, f.mul(b, c))));
    CHECK(at(d.q.sigma) == f.mul(3, f.div(b, f.mul(a, c))));
    CHECK(at(d.q.tau) == f.mul(4, f.div(c, f.mul(a, b))));
  }
}
