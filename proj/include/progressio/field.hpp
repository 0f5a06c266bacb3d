#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace progressio {

/// Residue class in [0, p). Carries no modulus; arithmetic goes through the
/// owning PrimeField.
struct FieldElem {
  std::uint64_t value = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint64_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem x) { return os << x.value; }

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p, 2 <= p < 2^61.
///
/// The bound keeps every product below 2^122 so a single 128-bit remainder
/// suffices for reduction. Construction verifies primality; a composite modulus
/// would make every downstream gcd and inverse silently wrong.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulusExclusive = std::uint64_t{1} << 61;

  /// Throws Error{NotPrime} or Error{OutOfRange}.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  /// Reduces an arbitrary signed integer into [0, p).
  FieldElem elem(std::int64_t v) const noexcept;
  FieldElem from_unsigned(std::uint64_t v) const noexcept { return FieldElem{v % p_}; }
  bool contains(FieldElem x) const noexcept { return x.value < p_; }

  FieldElem add(FieldElem x, FieldElem y) const noexcept {
    std::uint64_t s = x.value + y.value;
    return FieldElem{s >= p_ ? s - p_ : s};
  }
  FieldElem sub(FieldElem x, FieldElem y) const noexcept {
    return FieldElem{x.value >= y.value ? x.value - y.value : x.value + p_ - y.value};
  }
  FieldElem neg(FieldElem x) const noexcept { return FieldElem{x.value == 0 ? 0 : p_ - x.value}; }
  FieldElem mul(FieldElem x, FieldElem y) const noexcept {
    return FieldElem{static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x.value) * y.value % p_)};
  }

  /// Throws Error{DivisionByZero} for x = 0.
  FieldElem inv(FieldElem x) const;
  FieldElem div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }

  /// Square-and-multiply. 0^0 is defined as 1 so constant terms evaluate
  /// uniformly.
  FieldElem pow(FieldElem x, std::uint64_t k) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace progressio
