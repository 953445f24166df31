#include "chevorbit/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <initializer_list>
#include <set>
#include <sstream>

#include "chevorbit/error.hpp"

namespace chevorbit {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

int Root::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool Root::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs.at(i);
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i) os << ',';
    os << r.coeffs[i];
  }
  os << ')';
  return os.str();
}

PhiClass phi_class_from_pairing(int pairing) {
  switch (pairing) {
    case 2: return PhiClass::Two;
    case 1: return PhiClass::One;
    case 0: return PhiClass::Zero;
    case -1: return PhiClass::MinusOne;
    case -2: return PhiClass::MinusTwo;
    default: throw Error(Errc::NotARoot, "pairing out of range");
  }
}

namespace {

bool supported(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
  }
  return false;
}

std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      // fork tips 1,2 on node 3, then the chain 3-4-...-l
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 2);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::E:
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  if (!supported(family, rank)) {
    throw Error(Errc::UnsupportedSystem,
                std::string(1, family_letter(family)) + std::to_string(rank));
  }
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
  for (auto [i, j] : dynkin_edges(family, rank)) {
    rs.cartan_[i][j] = -1;
    rs.cartan_[j][i] = -1;
  }

  // Closure: beta + alpha_i is a root exactly when <beta, alpha_i> = -1.
  std::set<Root> positive;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] = 1;
    positive.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Root simple{std::vector<int>(rank, 0)};
      simple.coeffs[i] = 1;
      if (rs.pairing(beta, simple) == -1) {
        Root next = beta + simple;
        if (positive.insert(next).second) queue.push_back(next);
      }
    }
  }

  std::vector<Root> pos(positive.begin(), positive.end());
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coeffs < b.coeffs;
  });
  rs.positive_count_ = static_cast<int>(pos.size());
  rs.roots_ = pos;
  for (const Root& r : pos) rs.roots_.push_back(-r);
  for (int i = 0; i < rs.size(); ++i) rs.lookup_.emplace(rs.roots_[i], i);

  const int n = rs.size();
  rs.sum_.assign(static_cast<std::size_t>(n) * n, kNoRoot);
  rs.pairing_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rs.pairing_[a * n + b] = static_cast<std::int8_t>(rs.pairing(rs.roots_[a], rs.roots_[b]));
      if (auto s = rs.find(rs.roots_[a] + rs.roots_[b])) rs.sum_[a * n + b] = *s;
    }
  }

  rs.simple_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] = 1;
    rs.simple_[i] = rs.lookup_.at(r);
  }

  // The highest root: the only positive root to which no simple root adds.
  for (int a = 0; a < rs.positive_count_; ++a) {
    bool maximal = true;
    for (int i = 0; i < rank && maximal; ++i) maximal = rs.sum(a, rs.simple_[i]) == kNoRoot;
    if (maximal) {
      if (rs.delta_ != kNoRoot) throw Error(Errc::Inconsistent, "two maximal roots");
      rs.delta_ = a;
    }
  }

  rs.phi1_pos_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    const int lv = rs.level(a);
    if (lv == 0) rs.phi0_.push_back(a);
    if (lv == 1) {
      rs.phi1_pos_[a] = static_cast<int>(rs.phi1_.size());
      rs.phi1_.push_back(a);
    }
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::optional<RootIndex> RootSystem::find(const Root& r) const {
  auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(const Root& r) const {
  if (r.rank() != rank_) throw Error(Errc::NotARoot, to_string(r));
  auto found = find(r);
  if (!found) throw Error(Errc::NotARoot, to_string(r) + " in " + name());
  return *found;
}

int RootSystem::pairing(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a.coeffs.at(i) * cartan_[i][j] * b.coeffs.at(j);
  return s;
}

PhiClass RootSystem::phi_class(RootIndex alpha, RootIndex beta) const {
  return phi_class_from_pairing(pairing(beta, alpha));
}

RootIndex RootSystem::reflect(RootIndex alpha, RootIndex beta) const {
  const int c = pairing(beta, alpha);
  if (c == 0) return beta;
  Root r = roots_.at(beta);
  const Root& a = roots_.at(alpha);
  for (int i = 0; i < rank_; ++i) r.coeffs[i] -= c * a.coeffs[i];
  return index_of(r);
}

int RootSystem::min_subtractable_index(RootIndex gamma) const {
  if (gamma < 0 || gamma >= size() || !is_positive(gamma)) {
    throw Error(Errc::NotAPositiveRoot, "min_subtractable_index");
  }
  for (int i = 0; i < rank_; ++i) {
    if (simple_[i] == gamma) return i;
    if (sum(gamma, negate(simple_[i])) != kNoRoot) return i;
  }
  throw Error(Errc::NotAPositiveRoot, "no subtractable simple root");
}

int RootSystem::max_support_index(RootIndex beta) const {
  const Root& r = roots_.at(beta);
  for (int i = rank_ - 1; i >= 0; --i)
    if (r.coeffs[i] != 0) return i;
  return -1;
}

RootSystem parse_system(std::string_view spec) {
  if (spec.size() < 2) throw Error(Errc::UnsupportedSystem, std::string(spec));
  Family family;
  switch (std::toupper(static_cast<unsigned char>(spec[0]))) {
    case 'A': family = Family::A; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    default: throw Error(Errc::UnsupportedSystem, std::string(spec));
  }
  int rank = 0;
  for (char ch : spec.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 100)
      throw Error(Errc::UnsupportedSystem, std::string(spec));
    rank = rank * 10 + (ch - '0');
  }
  return RootSystem::build(family, rank);
}

StandardQuadruple standard_quadruple(const RootSystem& rs) {
  if (rs.family() != Family::D) throw Error(Errc::UnsupportedSystem, "standard quadruple needs D_l");
  const int l = rs.rank();
  const Root& delta = rs.root(rs.delta());
  auto make = [l](std::initializer_list<int> tail_pos) {
    Root r{std::vector<int>(l, 0)};
    for (int i : tail_pos) r.coeffs[i] = 1;
    return r;
  };
  if (l == 4) {
    return {rs.index_of(make({2})), rs.index_of(make({1, 2, 3})), rs.index_of(make({0, 2, 3})),
            rs.index_of(make({0, 1, 2}))};
  }
  Root lambda = make({l - 2});
  Root sigma = make({l - 3, l - 2, l - 1});
  // rho = delta - lambda - alpha_l = (1,1,2,...,2,1,0)
  Root rho = delta - lambda - make({l - 1});
  Root tau = delta + delta - lambda - rho - sigma;
  return {rs.index_of(lambda), rs.index_of(rho), rs.index_of(sigma), rs.index_of(tau)};
}

}  // namespace chevorbit
