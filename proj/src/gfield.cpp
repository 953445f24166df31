#include "chevorbit/gfield.hpp"

#include <utility>

#include "chevorbit/error.hpp"

namespace chevorbit {

class NormValueCache {
 public:
  std::mutex mutex;
  std::map<Scalar, std::vector<bool>> values;
};

namespace {

constexpr Scalar kExhaustiveNormLimit = 4096;

void require_odd_prime(Scalar p) {
  if (p == 2) throw Error(Errc::CharTwo, "characteristic 2 is not supported");
  if (p < 3 || p >= (Scalar{1} << 31) || !is_prime(p))
    throw Error(Errc::InvalidModulus, std::to_string(p) + " is not an odd prime");
}

}  // namespace

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ScalarDomain ScalarDomain::prime_field(Scalar p) {
  require_odd_prime(p);
  return ScalarDomain(p);
}

Scalar ScalarDomain::inv(Scalar a) const {
  if (modulus_ == 0) {
    if (a == 1 || a == -1) return a;
    throw Error(Errc::ZeroArgument, "integer " + std::to_string(a) + " has no inverse");
  }
  Scalar r0 = modulus_, r1 = reduce(a), s0 = 0, s1 = 1;
  if (r1 == 0) throw Error(Errc::ZeroArgument, "inverse of zero");
  while (r1 != 0) {
    const Scalar q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return reduce(s0);
}

PrimeField::PrimeField(Scalar p) : p_(p), least_nonresidue_(0), cache_(std::make_shared<NormValueCache>()) {
  require_odd_prime(p);
  for (Scalar a = 2; a < p_; ++a) {
    if (!is_square(a)) {
      least_nonresidue_ = a;
      break;
    }
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar base = reduce(a);
  Scalar result = 1;
  while (e) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1u;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  a = reduce(a);
  if (a == 0) throw Error(Errc::ZeroArgument, "inverse of zero");
  return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

bool PrimeField::is_square(Scalar a) const {
  a = reduce(a);
  if (a == 0) return true;
  return pow(a, static_cast<std::uint64_t>((p_ - 1) / 2)) == 1;
}

std::vector<Scalar> PrimeField::units() const {
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(p_ - 1));
  for (Scalar a = 1; a < p_; ++a) out.push_back(a);
  return out;
}

const std::vector<bool>& PrimeField::norm_values(Scalar k) const {
  k = reduce(k);
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->values.find(k);
  if (it != cache_->values.end()) return it->second;
  std::vector<bool> hit(static_cast<std::size_t>(p_), false);
  // The squares as a set, then every s - k t with s, t squares.
  std::vector<Scalar> squares;
  std::vector<bool> seen(static_cast<std::size_t>(p_), false);
  for (Scalar x = 0; x < p_; ++x) {
    Scalar s = x * x % p_;
    if (!seen[s]) {
      seen[s] = true;
      squares.push_back(s);
    }
  }
  for (Scalar s : squares)
    for (Scalar t : squares) hit[static_cast<std::size_t>(reduce(s - k * t))] = true;
  return cache_->values.emplace(k, std::move(hit)).first->second;
}

SquareClass square_class(const PrimeField& field, Scalar a) {
  a = field.reduce(a);
  if (a == 0) throw Error(Errc::ZeroArgument, "square class of zero");
  if (field.is_square(a)) return {SquareToken::Square, 1};
  return {SquareToken::NonSquare, field.least_nonresidue()};
}

std::vector<SquareClass> square_class_representatives(const PrimeField& field) {
  return {{SquareToken::Square, 1}, {SquareToken::NonSquare, field.least_nonresidue()}};
}

bool norm_form_solvable(const PrimeField& field, Scalar k, Scalar c) {
  if (field.reduce(k) == 0) throw Error(Errc::ZeroK, "k must be nonzero");
  // Past the exhaustive range rely on universality of nondegenerate binary
  // forms over finite fields.
  if (field.p() > kExhaustiveNormLimit) return true;
  return field.norm_values(k)[static_cast<std::size_t>(field.reduce(c))];
}

bool k_class_equal(const PrimeField& field, Scalar k, Scalar a, Scalar b) {
  if (field.reduce(k) == 0 || field.reduce(a) == 0 || field.reduce(b) == 0)
    throw Error(Errc::ZeroArgument, "k_class_equal needs nonzero arguments");
  return norm_form_solvable(field, k, field.mul(a, b));
}

NormClass norm_class(const PrimeField& field, Scalar k, Scalar a) {
  for (Scalar b = 1; b < field.p(); ++b)
    if (k_class_equal(field, k, a, b)) return {field.reduce(k), b};
  throw Error(Errc::ZeroArgument, "norm class of zero");
}

std::vector<Scalar> norm_class_representatives(const PrimeField& field, Scalar k) {
  std::vector<Scalar> reps;
  for (Scalar a = 1; a < field.p(); ++a)
    if (norm_class(field, k, a).token == a) reps.push_back(a);
  return reps;
}

}  // namespace chevorbit
