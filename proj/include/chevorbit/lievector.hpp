#pragma once

#include <vector>

#include "chevorbit/gfield.hpp"
#include "chevorbit/rootsys.hpp"

namespace chevorbit {

/// Element x = sum x^alpha e_alpha + x^h of the Lie algebra V(Phi) in the
/// Chevalley basis {e_alpha, h_{alpha_i}}. Coefficients live in a
/// ScalarDomain and are stored densely (root order, then simple coroots).
class LieVector {
 public:
  LieVector(const RootSystem& rs, ScalarDomain domain)
      : domain_(domain), e_(rs.size(), 0), h_(rs.rank(), 0) {}

  static LieVector root_vector(const RootSystem& rs, ScalarDomain domain, RootIndex i, Scalar c = 1) {
    LieVector v(rs, domain);
    v.set_e(i, c);
    return v;
  }
  static LieVector coroot_vector(const RootSystem& rs, ScalarDomain domain, int i, Scalar c = 1) {
    LieVector v(rs, domain);
    v.set_h(i, c);
    return v;
  }

  const ScalarDomain& domain() const { return domain_; }
  int root_count() const { return static_cast<int>(e_.size()); }
  int rank() const { return static_cast<int>(h_.size()); }
  /// Number of basis coordinates, |Phi| + rank.
  int dimension() const { return root_count() + rank(); }

  Scalar e(RootIndex i) const { return e_[i]; }
  Scalar h(int i) const { return h_[i]; }
  void set_e(RootIndex i, Scalar c) { e_[i] = domain_.reduce(c); }
  void set_h(int i, Scalar c) { h_[i] = domain_.reduce(c); }
  void add_e(RootIndex i, Scalar c) { e_[i] = domain_.add(e_[i], c); }
  void add_h(int i, Scalar c) { h_[i] = domain_.add(h_[i], c); }

  const std::vector<Scalar>& e_part() const { return e_; }
  const std::vector<Scalar>& h_part() const { return h_; }

  /// Coordinate by flat basis index (roots first, then coroots).
  Scalar coord(int k) const { return k < root_count() ? e_[k] : h_[k - root_count()]; }
  void add_coord(int k, Scalar c) {
    if (k < root_count()) add_e(k, c);
    else add_h(k - root_count(), c);
  }

  bool is_zero() const;

  LieVector& operator+=(const LieVector& other);
  LieVector& operator-=(const LieVector& other);
  LieVector scaled(Scalar c) const;

  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend LieVector operator-(LieVector a, const LieVector& b) { return a -= b; }
  friend bool operator==(const LieVector&, const LieVector&) = default;

 private:
  ScalarDomain domain_;
  std::vector<Scalar> e_;
  std::vector<Scalar> h_;
};

}  // namespace chevorbit
