#include "chevorbit/orbitlab.hpp"

#include <algorithm>
#include <sstream>

#include "chevorbit/error.hpp"
#include "chevorbit/liemod.hpp"

namespace chevorbit {

const char* luminosity_name(Luminosity l) {
  switch (l) {
    case Luminosity::ZeroVec: return "zero";
    case Luminosity::Singular: return "singular";
    case Luminosity::Brilliant: return "brilliant";
    case Luminosity::Shining: return "shining";
    case Luminosity::Dark: return "dark";
  }
  return "?";
}

namespace {

constexpr const char* kLabelNames[] = {"I", "IIa", "IIb", "II", "IIIa", "IIIb", "IIIc", "III", "IV", "V", "VI"};

Param scalar_param(std::string name, Scalar v) { return {std::move(name), ParamKind::Scalar, v}; }
Param square_param(std::string name, const SquareClass& c) {
  return {std::move(name), ParamKind::SquareClass, c.representative};
}
Param norm_param(std::string name, const NormClass& c) { return {std::move(name), ParamKind::NormClass, c.token}; }

Scalar nilpotent_entry(const ZBlock& z) { return z.u != 0 ? z.u : -z.w; }

}  // namespace

const char* label_name(Label l) { return kLabelNames[static_cast<int>(l)]; }

std::optional<Label> parse_label(std::string_view s) {
  for (int i = 0; i < static_cast<int>(std::size(kLabelNames)); ++i)
    if (s == kLabelNames[i]) return static_cast<Label>(i);
  return std::nullopt;
}

const Param* OrbitDescriptor::find(std::string_view name) const {
  for (const auto& p : params)
    if (p.name == name) return &p;
  return nullptr;
}

std::string to_string(const OrbitDescriptor& d) {
  std::ostringstream os;
  os << family_letter(d.family) << d.rank << "/F" << d.p << " " << label_name(d.label);
  for (const auto& p : d.params) os << " " << p.name << "=" << p.value;
  return os.str();
}

Sl2Invariant sl2_invariant(const PrimeField& field, const ZBlock& z) {
  const Scalar c = field.reduce(z.c), u = field.reduce(z.u), w = field.reduce(z.w);
  Sl2Invariant inv;
  if (c == 0 && u == 0 && w == 0) return inv;
  const Scalar k = field.add(field.mul(c, c), field.mul(u, w));
  if (k == 0) {
    inv.kind = Sl2Invariant::Kind::Nilpotent;
    inv.square = square_class(field, u != 0 ? u : field.neg(w));
    return inv;
  }
  // In the basis (v, z v / d), d = det[v, z v], z becomes [[0, k/d], [d, 0]].
  auto image = [&](Scalar x0, Scalar x1) {
    return std::pair{field.add(field.mul(c, x0), field.mul(u, x1)), field.sub(field.mul(w, x0), field.mul(c, x1))};
  };
  Scalar d = 0;
  for (auto [x0, x1] : {std::pair<Scalar, Scalar>{1, 0}, {0, 1}, {1, 1}}) {
    auto [y0, y1] = image(x0, x1);
    d = field.sub(field.mul(x0, y1), field.mul(x1, y0));
    if (d != 0) break;
  }
  inv.kind = Sl2Invariant::Kind::Regular;
  inv.norm = norm_class(field, k, field.div(k, d));
  return inv;
}

ZBlock to_zblock(const PrimeField& field, const Matrix2& m) {
  if (field.add(m[0][0], m[1][1]) != 0) throw Error(Errc::NotTraceZero, "matrix is not trace zero");
  return {field.reduce(m[0][0]), field.reduce(m[0][1]), field.reduce(m[1][0])};
}

Luminosity luminosity(const RootSystem& rs, const LieVector& y) {
  if (y.e(rs.negate(rs.delta())) != 0) return Luminosity::Dark;
  bool level[3] = {false, false, false};  // -1, 0, 1
  for (RootIndex b = 0; b < rs.size(); ++b) {
    if (y.e(b) == 0) continue;
    const int lv = rs.level(b);
    if (lv >= -1 && lv <= 1) level[lv + 1] = true;
  }
  if (level[0]) return Luminosity::Shining;
  const bool h = std::any_of(y.h_part().begin(), y.h_part().end(), [](Scalar c) { return c != 0; });
  if (level[1] || h) return Luminosity::Brilliant;
  if (level[2]) return Luminosity::Singular;
  return Luminosity::ZeroVec;
}

OrbitLab::OrbitLab(const StructureConstants& table, Scalar p) : table_(&table), field_(p) {
  const RootSystem& rs = roots();
  const int l = rs.rank();
  if (rs.family() == Family::E) throw Error(Errc::UnsupportedFamily, "orbit classification covers A and D only");
  if (rs.family() == Family::A) {
    for (int j = 1; j < l; ++j) {
      Root u(std::vector<int>(l, 0)), v(std::vector<int>(l, 0));
      for (int i = 0; i < j; ++i) u.coeffs[i] = 1;
      for (int i = j; i < l; ++i) v.coeffs[i] = 1;
      u_pos_.push_back(rs.phi1_position(rs.index_of(u)));
      v_pos_.push_back(rs.phi1_position(rs.index_of(v)));
    }
    return;
  }
  const auto q = standard_quadruple(rs);
  lambda_ = q.lambda;
  rho_ = q.rho;
  sigma_ = q.sigma;
  tau_ = q.tau;
  // the one simple root outside Phi_0
  cancel_index_ = l - 2;
  if (l == 4) {
    block_simple_ = {0, 1, 3};
    block_mu_ = {rho_, sigma_, tau_};
  } else {
    block_simple_ = {l - 1};
    block_mu_ = {rho_};
  }
  for (std::size_t b = 0; b < block_mu_.size(); ++b) {
    V1Vector probe = unit(lambda_);
    probe[rs.phi1_position(block_mu_[b])] = 1;
    const ZBlock z = z_blocks(associated_root_element(probe))[b];
    const Scalar t = field_.reduce(nilpotent_entry(z));
    if (sl2_invariant(field_, z).kind != Sl2Invariant::Kind::Nilpotent || (t != 1 && t != p - 1))
      throw Error(Errc::Mismatch, "unexpected block for e_lambda + e_mu");
    block_sign_.push_back(t);
  }
}

void OrbitLab::validate(const V1Vector& x) const {
  if (static_cast<int>(x.size()) != dimension())
    throw Error(Errc::InvalidVector, "expected " + std::to_string(dimension()) + " coordinates, got " +
                                         std::to_string(x.size()));
  for (Scalar c : x)
    if (c < 0 || c >= field_.p())
      throw Error(Errc::InvalidVector, "coordinate " + std::to_string(c) + " outside 0.." +
                                           std::to_string(field_.p() - 1));
}

LieVector OrbitLab::embed(const V1Vector& x) const {
  validate(x);
  LieVector v(roots(), domain());
  const auto& phi1 = roots().phi1();
  for (std::size_t i = 0; i < phi1.size(); ++i) v.set_e(phi1[i], x[i]);
  return v;
}

V1Vector OrbitLab::restrict(const LieVector& v) const {
  V1Vector x;
  for (RootIndex a : roots().phi1()) x.push_back(v.e(a));
  return x;
}

V1Vector OrbitLab::unit(RootIndex mu, Scalar c) const {
  const int pos = roots().phi1_position(mu);
  if (pos < 0) throw Error(Errc::InvalidVector, to_string(roots().root(mu)) + " is not in Phi_1");
  V1Vector x(dimension(), 0);
  x[pos] = field_.reduce(c);
  return x;
}

LieVector OrbitLab::associated_root_element(const V1Vector& x, const std::vector<int>* order) const {
  const RootSystem& rs = roots();
  if (rs.family() != Family::D) throw Error(Errc::UnsupportedFamily, "root element y is defined for D only");
  validate(x);
  const ScalarDomain dom = domain();
  const auto& phi1 = rs.phi1();
  const RootIndex delta = rs.delta();
  const RootIndex minus_delta = rs.negate(delta);

  std::vector<int> seq;
  if (order) {
    seq = *order;
    std::vector<int> check = seq;
    std::sort(check.begin(), check.end());
    bool perm = check.size() == phi1.size();
    for (int i = 0; perm && i < static_cast<int>(check.size()); ++i) perm = check[i] == i;
    if (!perm) throw Error(Errc::InvalidVector, "order is not a permutation of Phi_1");
  } else {
    for (int i = dimension() - 1; i >= 0; --i) seq.push_back(i);
  }

  LieVector y = LieVector::root_vector(rs, dom, delta);
  for (int pos : seq) {
    if (x[pos] == 0) continue;
    const RootIndex g = rs.sum(phi1[pos], minus_delta);
    y = apply_root_element(*table_, g, dom.mul(table_->at(g, delta), x[pos]), y);
  }
  // x_{-delta}(c) adds c h_{-delta} = -c h_delta
  const Scalar c = dom.mul(y.h(cancel_index_), dom.inv(rs.root(delta).coeffs[cancel_index_]));
  y = apply_root_element(*table_, minus_delta, c, y);

  bool ok = y.e(delta) == 1 && y.h(cancel_index_) == 0;
  for (std::size_t i = 0; ok && i < phi1.size(); ++i) ok = y.e(phi1[i]) == x[i];
  if (!ok) throw Error(Errc::Mismatch, "root element postconditions violated");
  return y;
}

std::vector<ZBlock> OrbitLab::z_blocks(const LieVector& y) const {
  const RootSystem& rs = roots();
  if (rs.family() != Family::D) throw Error(Errc::UnsupportedFamily, "z-blocks are defined for D only");
  std::vector<ZBlock> out;
  for (int i : block_simple_) {
    const RootIndex g = rs.simple(i);
    out.push_back({field_.neg(y.h(i)), y.e(rs.negate(g)), y.e(g)});
  }
  return out;
}

SquareClass OrbitLab::block_square_class(const ZBlock& z, int b) const {
  if (sl2_invariant(field_, z).kind != Sl2Invariant::Kind::Nilpotent)
    throw Error(Errc::Mismatch, "block is not nilpotent");
  return square_class(field_, field_.mul(block_sign_.at(b), nilpotent_entry(z)));
}

std::pair<V1Vector, V1Vector> OrbitLab::al_pair(const V1Vector& x) const {
  if (roots().family() != Family::A) throw Error(Errc::UnsupportedFamily, "covector/vector pair is defined for A only");
  validate(x);
  V1Vector u, v;
  for (int pos : u_pos_) u.push_back(x[pos]);
  for (int pos : v_pos_) v.push_back(x[pos]);
  return {u, v};
}

OrbitDescriptor OrbitLab::base() const {
  OrbitDescriptor d;
  d.family = roots().family();
  d.rank = roots().rank();
  d.p = field_.p();
  return d;
}

OrbitDescriptor OrbitLab::classify(const V1Vector& x) const {
  return roots().family() == Family::A ? classify_a(x) : classify_d(x);
}

OrbitDescriptor OrbitLab::classify_a(const V1Vector& x) const {
  validate(x);
  OrbitDescriptor d = base();
  const int l = roots().rank();
  if (l == 1) return d;
  auto [u, v] = al_pair(x);
  auto nonzero = [](const V1Vector& w) { return std::any_of(w.begin(), w.end(), [](Scalar c) { return c != 0; }); };
  const bool nu = nonzero(u), nv = nonzero(v);
  if (l == 2) {
    // G_0 is trivial: the pair itself is the invariant
    if (nu && nv) d.label = Label::VI;
    else if (nu) d.label = Label::IIa;
    else if (nv) d.label = Label::IIb;
    if (nu) d.params.push_back(scalar_param("x_rho", u[0]));
    if (nv) d.params.push_back(scalar_param("x_delta_minus_rho", v[0]));
    return d;
  }
  if (!nu && !nv) return d;
  if (!nv) {
    d.label = Label::IIa;
    return d;
  }
  if (!nu) {
    d.label = Label::IIb;
    return d;
  }
  Scalar s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) s = field_.add(s, field_.mul(u[j], v[j]));
  if (s != 0) {
    d.label = Label::VI;
    d.params.push_back(scalar_param("c", s));
    return d;
  }
  d.label = Label::III;
  if (l == 3) {
    // v = c (-u_2, u_1): c is what remains after moving u to (1, 0)
    const Scalar c = u[0] != 0 ? field_.div(v[1], u[0]) : field_.div(field_.neg(v[0]), u[1]);
    d.params.push_back(scalar_param("c", c));
  }
  return d;
}

OrbitDescriptor OrbitLab::classify_d(const V1Vector& x) const {
  OrbitDescriptor d = base();
  const LieVector y = associated_root_element(x);
  const auto blocks = z_blocks(y);
  const bool d4 = roots().rank() == 4;
  switch (luminosity(roots(), y)) {
    case Luminosity::ZeroVec:
      d.label = Label::I;
      break;
    case Luminosity::Singular:
      d.label = Label::II;
      break;
    case Luminosity::Brilliant: {
      static constexpr Label kLabels[] = {Label::IIIa, Label::IIIb, Label::IIIc};
      static constexpr const char* kNames[] = {"rho_class", "sigma_class", "tau_class"};
      int b = 0;
      while (b < static_cast<int>(blocks.size()) && blocks[b].is_zero()) ++b;
      if (!d4 && b == static_cast<int>(blocks.size())) {
        d.label = Label::IIIb;
        break;
      }
      if (b == static_cast<int>(blocks.size())) throw Error(Errc::Mismatch, "brilliant vector with zero blocks");
      d.label = kLabels[b];
      d.params.push_back(square_param(kNames[b], block_square_class(blocks[b], b)));
      break;
    }
    case Luminosity::Shining:
      d.label = Label::IV;
      d.params.push_back(square_param("rho_class", block_square_class(blocks[0], 0)));
      if (d4) d.params.push_back(square_param("sigma_class", block_square_class(blocks[1], 1)));
      break;
    case Luminosity::Dark: {
      d.label = Label::V;
      const auto z1 = sl2_invariant(field_, blocks[0]);
      if (z1.kind != Sl2Invariant::Kind::Regular) throw Error(Errc::Mismatch, "dark vector with singular z_1");
      d.params.push_back(scalar_param("k", z1.norm.k));
      d.params.push_back(norm_param("rho_class", z1.norm));
      if (d4) {
        const auto z2 = sl2_invariant(field_, blocks[1]);
        if (z2.kind != Sl2Invariant::Kind::Regular) throw Error(Errc::Mismatch, "dark vector with singular z_2");
        d.params.push_back(norm_param("sigma_class", z2.norm));
      }
      break;
    }
  }
  return d;
}

std::vector<V1Vector> OrbitLab::candidates(const OrbitDescriptor& d) const {
  const int l = roots().rank();
  auto param = [&](std::string_view name) -> Scalar {
    const Param* p = d.find(name);
    if (!p) throw Error(Errc::InvalidDescriptor, "missing parameter " + std::string(name));
    return field_.reduce(p->value);
  };
  auto add = [&](V1Vector x, RootIndex mu, Scalar c) {
    x[roots().phi1_position(mu)] = field_.add(x[roots().phi1_position(mu)], c);
    return x;
  };
  const V1Vector zero(dimension(), 0);
  std::vector<V1Vector> out;

  if (roots().family() == Family::A) {
    if (d.label == Label::I) return {zero};
    if (l == 1) return {};
    const RootIndex rho = roots().phi1()[u_pos_[0]];
    const RootIndex sigma = roots().phi1()[v_pos_.back()];
    const RootIndex delta_minus_rho = roots().phi1()[v_pos_[0]];
    if (l == 2) {
      V1Vector x = zero;
      if (d.find("x_rho")) x = add(x, rho, param("x_rho"));
      if (d.find("x_delta_minus_rho")) x = add(x, delta_minus_rho, param("x_delta_minus_rho"));
      return {x};
    }
    switch (d.label) {
      case Label::IIa: return {add(zero, rho, 1)};
      case Label::IIb: return {add(zero, sigma, 1)};
      case Label::III: return {add(add(zero, rho, 1), sigma, l == 3 ? param("c") : 1)};
      case Label::VI: return {add(add(zero, rho, 1), delta_minus_rho, param("c"))};
      default: return {};
    }
  }

  const V1Vector e_lambda = add(zero, lambda_, 1);
  const auto units = field_.units();
  const std::vector<Scalar> square_reps = {1, field_.least_nonresidue()};
  switch (d.label) {
    case Label::I: return {zero};
    case Label::II: return {e_lambda};
    case Label::IIIa:
    case Label::IIIb:
    case Label::IIIc: {
      if (l > 4 && d.label == Label::IIIb) return {add(e_lambda, sigma_, 1)};
      const int b = d.label == Label::IIIa ? 0 : d.label == Label::IIIb ? 1 : 2;
      for (Scalar r : square_reps) out.push_back(add(e_lambda, block_mu_.at(b), r));
      return out;
    }
    case Label::IV:
      for (Scalar r : square_reps) {
        if (l > 4) {
          out.push_back(add(add(e_lambda, rho_, r), sigma_, 1));
          continue;
        }
        for (Scalar s : square_reps) out.push_back(add(add(e_lambda, rho_, r), sigma_, s));
      }
      return out;
    case Label::V: {
      const Scalar k = param("k");
      if (k == 0) return {};
      for (Scalar r : units) {
        const V1Vector base = add(e_lambda, rho_, r);
        if (l > 4) {
          out.push_back(add(add(base, sigma_, 1), tau_, field_.div(k, r)));
          continue;
        }
        for (Scalar s : units) out.push_back(add(add(base, sigma_, s), tau_, field_.div(k, field_.mul(r, s))));
      }
      return out;
    }
    default: return {};
  }
}

V1Vector OrbitLab::canonical_form(const OrbitDescriptor& d) const {
  if (!(d.family == roots().family() && d.rank == roots().rank() && d.p == field_.p()))
    throw Error(Errc::InvalidDescriptor, "descriptor belongs to another system or field");
  for (const V1Vector& x : candidates(d))
    if (classify(x) == d) return x;
  throw Error(Errc::InvalidDescriptor, "no orbit carries " + to_string(d));
}

std::vector<OrbitDescriptor> OrbitLab::predicted_descriptors() const {
  const int l = roots().rank();
  const Scalar p = field_.p();
  std::vector<OrbitDescriptor> out;
  auto make = [&](Label label, std::vector<Param> params = {}) {
    OrbitDescriptor d = base();
    d.label = label;
    d.params = std::move(params);
    out.push_back(std::move(d));
  };
  const auto squares = square_class_representatives(field_);

  if (roots().family() == Family::A) {
    if (l == 2) {
      for (Scalar a = 0; a < p; ++a) {
        for (Scalar b = 0; b < p; ++b) {
          std::vector<Param> params;
          if (a) params.push_back(scalar_param("x_rho", a));
          if (b) params.push_back(scalar_param("x_delta_minus_rho", b));
          make(a && b ? Label::VI : a ? Label::IIa : b ? Label::IIb : Label::I, params);
        }
      }
    } else {
      make(Label::I);
      if (l > 1) {
        make(Label::IIa);
        make(Label::IIb);
        if (l == 3) {
          for (Scalar c = 1; c < p; ++c) make(Label::III, {scalar_param("c", c)});
        } else {
          make(Label::III);
        }
        for (Scalar c = 1; c < p; ++c) make(Label::VI, {scalar_param("c", c)});
      }
    }
  } else {
    make(Label::I);
    make(Label::II);
    if (l == 4) {
      static constexpr Label kLabels[] = {Label::IIIa, Label::IIIb, Label::IIIc};
      static constexpr const char* kNames[] = {"rho_class", "sigma_class", "tau_class"};
      for (int b = 0; b < 3; ++b)
        for (const auto& s : squares) make(kLabels[b], {square_param(kNames[b], s)});
      for (const auto& r : squares)
        for (const auto& s : squares) make(Label::IV, {square_param("rho_class", r), square_param("sigma_class", s)});
    } else {
      for (const auto& s : squares) make(Label::IIIa, {square_param("rho_class", s)});
      make(Label::IIIb);
      for (const auto& s : squares) make(Label::IV, {square_param("rho_class", s)});
    }
    for (Scalar k = 1; k < p; ++k) {
      for (Scalar r : norm_class_representatives(field_, k)) {
        if (l == 4) {
          for (Scalar s : norm_class_representatives(field_, k))
            make(Label::V, {scalar_param("k", k), norm_param("rho_class", {k, r}), norm_param("sigma_class", {k, s})});
        } else {
          make(Label::V, {scalar_param("k", k), norm_param("rho_class", {k, r})});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chevorbit
