#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "progressio/poly.hpp"

namespace progressio {

/// The linear pencil f(X, Y) = a(X) + b(X) Y with gcd(a, b) = 1 and b != 0.
/// Such a pencil is irreducible in F[X, Y]; Euclid does not depend on the
/// ground field, so it stays irreducible over the algebraic closure.
class Pencil {
 public:
  /// Throws Error{PreconditionViolated} unless gcd(a, b) = 1 and b != 0.
  Pencil(Poly a, Poly b);

  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }
  const PrimeField& field() const noexcept { return a_.field(); }

 private:
  Poly a_;
  Poly b_;
};

/// Witness package for a + b*c*Y having degree n in X and geometric Galois
/// group S_n:
///
///   a + alpha1*b*c = (X - gamma1)^e * h1
///   a + alpha2*b*c = (X - gamma2)^2 * h2
///
/// with n/2 < e < n - m, gcd(e, n*p) = 1, h1 and h2 separable and prime to
/// (X - gamma_i)*a.
struct StableCertificate {
  PrimeField field;
  Poly a, b, c;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t e = 0;
  FieldElem alpha1, alpha2;
  FieldElem gamma1, gamma2;
  Poly h1, h2;
};

/// m = max(deg a, 2 + deg b); the zero polynomial contributes nothing.
std::size_t stable_m(const Poly& a, const Poly& b);

/// Smallest e with n/2 < e < n - m and gcd(e, n*p) = 1, by ascending scan.
/// Throws Error{NoValidE} when the interval holds no such e.
std::size_t choose_e(std::size_t n, std::size_t m, std::uint64_t p);

/// The explicit candidate from the classical existence argument: the first e
/// above n/2 prime to n, bumped past a multiple of p using the smallest prime
/// q not dividing n. Not range-checked against n - m. Returns nullopt if the
/// argument yields nothing for these inputs.
std::optional<std::size_t> case_analysis_e(std::size_t n, std::uint64_t p);

/// gcd(a, b) = 1. Throws Error{BothZero}.
bool pencil_irreducible(const Poly& a, const Poly& b);

/// Smallest residue alpha not in `exclude` with gcd(a + alpha*b, avoid) = 1
/// and, if requested, a + alpha*b separable.
/// Throws Error{FieldExhausted} or Error{PreconditionViolated}.
FieldElem find_shift(const Poly& a, const Poly& b, const Poly& avoid, bool require_separable,
                     const std::set<FieldElem>& exclude = {});

struct BuiltC {
  Poly c, h1, h2;
};

/// Solves a = p_i*h_i + alpha_i*b*c (i = 1, 2) with deg c = target_deg_c,
/// h_i separable and gcd(h_i, a*p_i) = 1.
///
/// The particular solution comes from two Bezout inversions; the free part
/// s is drawn from lambda*(X - beta)^(d-1)*(X - gamma') with d = deg s,
/// scanning beta from `seed mod p`, then gamma', then lambda, and taking the
/// first admissible choice.
/// Throws Error{PreconditionViolated} or Error{FieldExhausted}.
BuiltC build_c(const Poly& a, const Poly& b, const Poly& p1, const Poly& p2, FieldElem alpha1,
               FieldElem alpha2, std::size_t target_deg_c, std::uint64_t seed = 0);

/// Builds the full witness package for the pencil (a, b) in X-degree n.
/// Requires gcd(a, b) = 1, a, b != 0, n > deg a, n > deg b and p >= deg(a*b) + 4.
/// Throws Error{PreconditionViolated}, Error{FieldTooSmall}, Error{NoValidE}
/// or Error{FieldExhausted}.
StableCertificate build_stable(const Poly& a, const Poly& b, std::size_t n, std::uint64_t seed = 0);

namespace clause {
inline constexpr std::string_view kPencil = "pencil coprime";
inline constexpr std::string_view kDegree = "degree/exponent";
inline constexpr std::string_view kIdentity1 = "alpha1 ramification identity";
inline constexpr std::string_view kIdentity2 = "alpha2 ramification identity";
inline constexpr std::string_view kSeparable = "h1 h2 separable";
inline constexpr std::string_view kCoprimeH = "h coprime to (X-gamma)*a";
inline constexpr std::string_view kAlphas = "alphas distinct nonzero";
inline constexpr std::string_view kGammas = "gammas distinct non-roots of a*b";
inline constexpr std::string_view kCoprimeAC = "gcd(a,c)=1";
}  // namespace clause

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> violated;  // clause names, in check order
};

/// Recomputes every certificate invariant from scratch.
VerifyReport verify_certificate(const StableCertificate& cert);

/// Stable key order: p, n, m, e, alpha1, alpha2, gamma1, gamma2, a, b, c, h1, h2.
/// Polynomials are written as low-to-high coefficient lists. `header_lines`
/// are emitted first as "# " comments.
std::string serialize(const StableCertificate& cert, const std::vector<std::string>& header_lines = {});

/// Inverse of serialize; '#' lines and blank lines are ignored.
/// Throws Error{ParseError}, or field errors for a bad modulus.
StableCertificate parse_certificate(std::string_view text);

}  // namespace progressio
