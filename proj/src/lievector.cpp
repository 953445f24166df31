#include "chevorbit/lievector.hpp"

#include <algorithm>

#include "chevorbit/error.hpp"

namespace chevorbit {

namespace {

void require_same(const LieVector& a, const LieVector& b) {
  if (!(a.domain() == b.domain())) throw Error(Errc::ScalarMismatch, "vectors over different scalar domains");
  if (a.root_count() != b.root_count() || a.rank() != b.rank())
    throw Error(Errc::ScalarMismatch, "vectors of different root systems");
}

}  // namespace

bool LieVector::is_zero() const {
  auto zero = [](Scalar c) { return c == 0; };
  return std::all_of(e_.begin(), e_.end(), zero) && std::all_of(h_.begin(), h_.end(), zero);
}

LieVector& LieVector::operator+=(const LieVector& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = domain_.add(e_[i], other.e_[i]);
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] = domain_.add(h_[i], other.h_[i]);
  return *this;
}

LieVector& LieVector::operator-=(const LieVector& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = domain_.sub(e_[i], other.e_[i]);
  for (std::size_t i = 0; i < h_.size(); ++i) h_[i] = domain_.sub(h_[i], other.h_[i]);
  return *this;
}

LieVector LieVector::scaled(Scalar c) const {
  LieVector out = *this;
  for (auto& x : out.e_) x = domain_.mul(x, c);
  for (auto& x : out.h_) x = domain_.mul(x, c);
  return out;
}

}  // namespace chevorbit
