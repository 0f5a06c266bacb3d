#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "progressio/field.hpp"

namespace progressio {

/// Degree of a polynomial. The zero polynomial has an empty degree, which
/// std::optional orders strictly below every engaged value.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over a PrimeField.
///
/// Coefficients are stored low-to-high and kept normalized: the zero
/// polynomial is the empty sequence, otherwise the last coefficient is
/// nonzero. Binary operations require both operands to share a field and
/// throw Error{FieldMismatch} otherwise.
class Poly {
 public:
  explicit Poly(PrimeField field) : field_(field) {}
  Poly(PrimeField field, std::vector<FieldElem> coeffs);
  /// Reduces each signed coefficient mod p; low-to-high.
  Poly(PrimeField field, std::initializer_list<std::int64_t> coeffs);

  static Poly constant(PrimeField field, FieldElem c);
  static Poly x(PrimeField field) { return monomial(field, FieldElem{1}, 1); }
  static Poly monomial(PrimeField field, FieldElem c, std::size_t k);
  /// X - root.
  static Poly linear_root(PrimeField field, FieldElem root);

  const PrimeField& field() const noexcept { return field_; }
  std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].value == 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().value == 1; }

  Degree degree() const noexcept;
  /// Integer degree; throws Error{ZeroPolynomial} for the zero polynomial.
  std::size_t deg() const;

  /// Coefficient of X^i (zero beyond the stored range).
  FieldElem operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem{};
  }
  /// Leading coefficient; zero for the zero polynomial.
  FieldElem lc() const noexcept { return coeffs_.empty() ? FieldElem{} : coeffs_.back(); }

  Poly monic() const;
  Poly scaled(FieldElem s) const;
  FieldElem eval(FieldElem x) const noexcept;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(FieldElem s, const Poly& f) { return f.scaled(s); }
  Poly operator-() const;

  /// Exact quotient and remainder; throw Error{DivisionByZero} on g = 0.
  friend Poly operator/(const Poly& f, const Poly& g);
  friend Poly operator%(const Poly& f, const Poly& g);

  friend bool operator==(const Poly& lhs, const Poly& rhs) {
    return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
  }

  friend bool graded_less(const Poly& lhs, const Poly& rhs) noexcept;

 private:
  void normalize() noexcept;
  void require_same_field(const Poly& other) const;

  PrimeField field_;
  std::vector<FieldElem> coeffs_;
};

/// Graded-lexicographic order: by degree, then coefficients from the top down.
bool graded_less(const Poly& lhs, const Poly& rhs) noexcept;

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Result of the extended Euclidean algorithm: u*f + v*g = gcd, gcd monic.
struct Xgcd {
  Poly gcd;
  Poly u;
  Poly v;
};

/// f = g*quotient + remainder with degree(remainder) < degree(g).
DivMod divmod(const Poly& f, const Poly& g);

/// Throws Error{BothZero} when f = g = 0.
Xgcd xgcd(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) throws Error{BothZero}.
Poly gcd(const Poly& f, const Poly& g);
bool coprime(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

/// Horner evaluation.
inline FieldElem eval(const Poly& f, FieldElem x) noexcept { return f.eval(x); }

/// gcd(f, f') = 1. Constants are separable; f' = 0 with degree >= 1 is not.
/// Throws Error{ZeroPolynomial}.
bool is_separable(const Poly& f);

Poly pow(const Poly& f, std::uint64_t k);
/// base^k mod modulus.
Poly powmod(const Poly& base, std::uint64_t k, const Poly& modulus);
Poly mulmod(const Poly& f, const Poly& g, const Poly& modulus);

/// Schoolbook product, no Karatsuba switch; used by the oracle layer and below
/// the Karatsuba threshold.
Poly schoolbook_mul(const Poly& f, const Poly& g);

/// Symbolic form with descending powers, e.g. "3*X^2+X+1"; zero prints as "0".
std::string to_string(const Poly& f);
/// Comma-separated low-to-high coefficients, e.g. "1,0,3"; zero prints as "0".
std::string to_coeff_list(const Poly& f);

/// Accepts either "1,0,3" (low-to-high) or symbolic "3*X^2+1". Signed
/// coefficients are reduced into [0, p). Throws Error{ParseError}.
Poly parse_poly(const PrimeField& field, std::string_view text);

}  // namespace progressio
