#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace chevorbit {

using Scalar = std::int64_t;

/// Coefficient domain of Lie algebra vectors: exact integers (modulus 0)
/// or the prime field F_p. Values are kept reduced to 0..p-1 over F_p.
class ScalarDomain {
 public:
  static ScalarDomain integers() { return ScalarDomain(0); }
  /// Throws CharTwo for p = 2, InvalidModulus if p is not an odd prime.
  static ScalarDomain prime_field(Scalar p);

  Scalar modulus() const { return modulus_; }
  bool is_field() const { return modulus_ != 0; }

  Scalar reduce(Scalar a) const {
    if (modulus_ == 0) return a;
    a %= modulus_;
    return a < 0 ? a + modulus_ : a;
  }
  Scalar add(Scalar a, Scalar b) const { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const { return reduce(a - b); }
  Scalar neg(Scalar a) const { return reduce(-a); }
  Scalar mul(Scalar a, Scalar b) const { return reduce(a * b); }
  /// Multiplicative inverse; over the integers only +-1 are invertible.
  Scalar inv(Scalar a) const;

  friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

 private:
  explicit ScalarDomain(Scalar m) : modulus_(m) {}
  Scalar modulus_;
};

bool is_prime(Scalar n);

class NormValueCache;

/// F_p for an odd prime p < 2^31.
class PrimeField {
 public:
  /// Throws CharTwo for p = 2 and InvalidModulus otherwise.
  explicit PrimeField(Scalar p);

  Scalar p() const { return p_; }
  ScalarDomain domain() const { return ScalarDomain::prime_field(p_); }

  Scalar reduce(Scalar a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  Scalar add(Scalar a, Scalar b) const { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const { return reduce(a - b); }
  Scalar neg(Scalar a) const { return reduce(-a); }
  Scalar mul(Scalar a, Scalar b) const { return reduce(reduce(a) * reduce(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Throws ZeroArgument.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool is_square(Scalar a) const;
  /// Smallest quadratic non-residue in 1..p-1.
  Scalar least_nonresidue() const { return least_nonresidue_; }

  /// 1, ..., p-1
  std::vector<Scalar> units() const;

  /// values[c] is true iff x^2 - k y^2 = c has a solution. Computed once per k.
  const std::vector<bool>& norm_values(Scalar k) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Scalar p_;
  Scalar least_nonresidue_;
  std::shared_ptr<NormValueCache> cache_;
};

enum class SquareToken { Square, NonSquare };

/// Element of K*/(K*)^2 with a fixed representative (1 or the least
/// non-residue).
struct SquareClass {
  SquareToken token;
  Scalar representative;

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

/// Throws ZeroArgument for a = 0.
SquareClass square_class(const PrimeField& field, Scalar a);
/// {1, least non-residue}
std::vector<SquareClass> square_class_representatives(const PrimeField& field);

/// Class of a in K_k = K* / ~_k where a ~_k b iff x^2 - k y^2 = ab is solvable.
/// The token is the least element of the class.
struct NormClass {
  Scalar k;
  Scalar token;

  friend bool operator==(const NormClass&, const NormClass&) = default;
};

/// Throws ZeroK.
bool norm_form_solvable(const PrimeField& field, Scalar k, Scalar c);
/// Throws ZeroArgument if any of k, a, b is zero.
bool k_class_equal(const PrimeField& field, Scalar k, Scalar a, Scalar b);
NormClass norm_class(const PrimeField& field, Scalar k, Scalar a);
/// Least element of each class of K_k, ascending.
std::vector<Scalar> norm_class_representatives(const PrimeField& field, Scalar k);

}  // namespace chevorbit
