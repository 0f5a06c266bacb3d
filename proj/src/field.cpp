#include "progressio/field.hpp"

#include <array>
#include <string>

#include "progressio/error.hpp"

namespace progressio {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k != 0) {
    if (k & 1U) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    k >>= 1U;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  // These twelve bases decide primality for all n < 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulusExclusive) {
    throw Error(ErrorCode::OutOfRange, "modulus " + std::to_string(p) + " must be below 2^61");
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElem PrimeField::elem(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return FieldElem{static_cast<std::uint64_t>(r)};
}

FieldElem PrimeField::inv(FieldElem x) const {
  if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Extended Euclid on integers; p < 2^61 keeps the signed cofactors in range.
  std::int64_t r0 = static_cast<std::int64_t>(p_), r1 = static_cast<std::int64_t>(x.value);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  return elem(t0);
}

FieldElem PrimeField::pow(FieldElem x, std::uint64_t k) const noexcept {
  return FieldElem{powmod64(x.value, k, p_)};
}

}  // namespace progressio
