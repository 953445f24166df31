#include "chevorbit/chevalley.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "chevorbit/error.hpp"

namespace chevorbit {

namespace {

// Sign of a constant as a bit: N = (-1)^bit. Every relation among signs is an
// XOR equation over at most four unknowns.
struct SignEquation {
  std::array<int, 4> vars{};
  int size = 0;
  std::uint8_t parity = 0;
};

class SignSystem {
 public:
  explicit SignSystem(int var_count) : value_(var_count, -1), adjacency_(var_count) {}

  void add(std::initializer_list<int> vars, std::uint8_t parity) {
    SignEquation eq;
    eq.parity = parity;
    for (int v : vars) {
      // a repeated variable cancels
      auto end = eq.vars.begin() + eq.size;
      auto it = std::find(eq.vars.begin(), end, v);
      if (it != end) {
        *it = eq.vars[eq.size - 1];
        --eq.size;
      } else {
        eq.vars[eq.size++] = v;
      }
    }
    const int id = static_cast<int>(equations_.size());
    for (int k = 0; k < eq.size; ++k) adjacency_[eq.vars[k]].push_back(id);
    equations_.push_back(eq);
  }

  void seed(int var, std::uint8_t bit) { assign(var, bit); }

  void propagate() {
    unknown_.assign(equations_.size(), 0);
    acc_.assign(equations_.size(), 0);
    for (std::size_t e = 0; e < equations_.size(); ++e) {
      const auto& eq = equations_[e];
      unknown_[e] = eq.size;
      if (eq.size == 0 && eq.parity != 0) throw Error(Errc::Inconsistent, "empty relation with odd parity");
    }
    // seeds were queued before the counters existed
    std::deque<int> pending(queue_.begin(), queue_.end());
    queue_.clear();
    for (int v : pending) queue_.push_back(v);
    while (!queue_.empty()) {
      const int v = queue_.front();
      queue_.pop_front();
      for (int e : adjacency_[v]) {
        --unknown_[e];
        acc_[e] ^= static_cast<std::uint8_t>(value_[v]);
        const auto& eq = equations_[e];
        if (unknown_[e] == 0) {
          if (acc_[e] != eq.parity) throw Error(Errc::Inconsistent, "sign relation violated");
        } else if (unknown_[e] == 1) {
          for (int k = 0; k < eq.size; ++k) {
            if (value_[eq.vars[k]] < 0) {
              assign(eq.vars[k], static_cast<std::uint8_t>(acc_[e] ^ eq.parity));
              break;
            }
          }
        }
      }
    }
  }

  int value(int var) const { return value_[var]; }

 private:
  void assign(int var, std::uint8_t bit) {
    if (value_[var] >= 0) {
      if (value_[var] != bit) throw Error(Errc::Inconsistent, "conflicting sign for a constant");
      return;
    }
    value_[var] = bit;
    queue_.push_back(var);
  }

  std::vector<int> value_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<SignEquation> equations_;
  std::vector<int> unknown_;
  std::vector<std::uint8_t> acc_;
  std::deque<int> queue_;
};

}  // namespace

StructureConstants StructureConstants::build(Family family, int rank) {
  return build(std::make_shared<const RootSystem>(RootSystem::build(family, rank)));
}

StructureConstants StructureConstants::build(std::shared_ptr<const RootSystem> rs_ptr) {
  const RootSystem& rs = *rs_ptr;
  const int n = rs.size();

  std::vector<int> var(static_cast<std::size_t>(n) * n, -1);
  int var_count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rs.sum(a, b) != kNoRoot) var[a * n + b] = var_count++;
  auto v = [&](int a, int b) { return var[a * n + b]; };

  SignSystem system(var_count);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = rs.sum(a, b);
      if (ab == kNoRoot) continue;
      // N1: N_ab = N_{-b,-a} = -N_ba
      system.add({v(a, b), v(rs.negate(b), rs.negate(a))}, 0);
      system.add({v(a, b), v(b, a)}, 1);
      // N2': N_ab = N_bc for a + b + c = 0
      const int c = rs.negate(ab);
      system.add({v(a, b), v(b, c)}, 0);
      // N3'': N_bg N_{a,b+g} = N_{a+b,g} N_ab
      for (int g = 0; g < n; ++g) {
        const int bg = rs.sum(b, g);
        if (bg == kNoRoot) continue;
        const int abg = rs.sum(a, bg);
        if (abg == kNoRoot || rs.sum(ab, g) == kNoRoot) continue;
        system.add({v(b, g), v(a, bg), v(ab, g), v(a, b)}, 0);
      }
    }
  }

  // N4 seeds: the extraspecial pair of every positive non-simple root.
  for (int gamma = 0; gamma < rs.positive_count(); ++gamma) {
    if (rs.height(gamma) < 2) continue;
    const int j = rs.min_subtractable_index(gamma);
    const int alpha_j = rs.simple(j);
    system.seed(v(alpha_j, rs.sum(gamma, rs.negate(alpha_j))), 0);
  }
  system.propagate();

  StructureConstants table;
  table.rs_ = std::move(rs_ptr);
  table.n_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int id = v(a, b);
      if (id < 0) continue;
      const int bit = system.value(id);
      if (bit < 0) {
        throw Error(Errc::Underdetermined,
                    "N" + to_string(rs.root(a)) + to_string(rs.root(b)) + " left undetermined");
      }
      table.n_[a * n + b] = static_cast<std::int8_t>(bit ? -1 : 1);
    }
  }
  return table;
}

int StructureConstants::operator()(RootIndex alpha, RootIndex beta) const {
  if (alpha < 0 || beta < 0 || alpha >= rs_->size() || beta >= rs_->size())
    throw Error(Errc::NotARoot, "structure constant index out of range");
  if (rs_->negate(alpha) == beta) throw Error(Errc::SameOppositePair, "[e_a, e_-a] is h_a");
  return at(alpha, beta);
}

int sign_rule(const RootSystem& rs, int i, RootIndex beta) {
  if (i < 0 || i >= rs.rank()) throw Error(Errc::NotARoot, "simple index out of range");
  if (!rs.is_positive(beta)) throw Error(Errc::NotAPositiveRoot, "sign_rule needs a positive beta");
  const RootIndex s = rs.sum(rs.simple(i), beta);
  if (s == kNoRoot || !rs.is_positive(s)) throw Error(Errc::SumNotARoot, "beta + alpha_i is not a root");
  return i > rs.max_support_index(beta) ? -1 : 1;
}

namespace {

// alpha, beta positive with alpha + beta a root.
int fast_positive(const RootSystem& rs, RootIndex alpha, RootIndex beta) {
  if (rs.height(alpha) == 1) return sign_rule(rs, rs.min_subtractable_index(alpha), beta);
  const int k = rs.min_subtractable_index(alpha);
  const RootIndex simple_k = rs.simple(k);
  const RootIndex rest = rs.sum(alpha, rs.negate(simple_k));
  const int split = sign_rule(rs, k, rest);  // N_{alpha_k, rest}
  // [e_alpha, e_beta] = N_{k,rest} ([e_k, [e_rest, e_beta]] - [e_rest, [e_k, e_beta]]);
  // exactly one of the two inner brackets is nonzero.
  if (rs.pairing(rest, beta) == -1) {
    const RootIndex rb = rs.sum(rest, beta);
    return split * fast_positive(rs, rest, beta) * sign_rule(rs, k, rb);
  }
  const RootIndex kb = rs.sum(simple_k, beta);
  return -split * sign_rule(rs, k, beta) * fast_positive(rs, rest, kb);
}

}  // namespace

int structure_constant_fast(const RootSystem& rs, RootIndex alpha, RootIndex beta) {
  if (rs.negate(alpha) == beta) throw Error(Errc::SameOppositePair, "[e_a, e_-a] is h_a");
  const RootIndex s = rs.sum(alpha, beta);
  if (s == kNoRoot) return 0;
  const bool pa = rs.is_positive(alpha);
  const bool pb = rs.is_positive(beta);
  if (pa && pb) return fast_positive(rs, alpha, beta);
  if (!pa && !pb) return -fast_positive(rs, rs.negate(alpha), rs.negate(beta));
  // With c = -(alpha + beta): N_ab = N_bc = N_ca, and N_{xy} = -N_{-x,-y}.
  const RootIndex c = rs.negate(s);
  if (pa) {
    if (rs.is_positive(s)) return -fast_positive(rs, rs.negate(beta), s);
    return fast_positive(rs, c, alpha);
  }
  if (rs.is_positive(s)) return -fast_positive(rs, s, rs.negate(alpha));
  return fast_positive(rs, beta, c);
}

LieVector bracket(const StructureConstants& table, const LieVector& v, const LieVector& w) {
  if (!(v.domain() == w.domain())) throw Error(Errc::ScalarMismatch, "bracket over different scalar domains");
  const RootSystem& rs = table.roots();
  const ScalarDomain& dom = v.domain();
  LieVector out(rs, dom);
  const int n = rs.size();
  const int l = rs.rank();

  std::vector<int> ve, we;
  for (int a = 0; a < n; ++a) {
    if (v.e(a) != 0) ve.push_back(a);
    if (w.e(a) != 0) we.push_back(a);
  }

  for (int a : ve) {
    const Scalar x = v.e(a);
    for (int b : we) {
      const Scalar y = w.e(b);
      const Scalar xy = dom.mul(x, y);
      if (b == rs.negate(a)) {
        const Root& r = rs.root(a);
        for (int i = 0; i < l; ++i)
          if (r.coeffs[i] != 0) out.add_h(i, dom.mul(xy, r.coeffs[i]));
      } else if (const int s = rs.sum(a, b); s != kNoRoot) {
        out.add_e(s, dom.mul(xy, table.at(a, b)));
      }
    }
    for (int i = 0; i < l; ++i) {
      if (w.h(i) == 0) continue;
      // [e_a, h_i] = -<alpha_i, a> e_a
      out.add_e(a, dom.mul(dom.mul(x, w.h(i)), -rs.pairing(rs.simple(i), a)));
    }
  }
  for (int i = 0; i < l; ++i) {
    if (v.h(i) == 0) continue;
    for (int b : we) out.add_e(b, dom.mul(dom.mul(v.h(i), w.e(b)), rs.pairing(rs.simple(i), b)));
  }
  return out;
}

}  // namespace chevorbit
