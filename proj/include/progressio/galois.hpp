#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "progressio/construct.hpp"
#include "progressio/poly.hpp"

namespace progressio {

/// Ramification exponents of the prime Y = alpha, read off the factorization
/// of the specialization f(X, alpha). Exponents are sorted descending.
struct RamificationType {
  std::vector<std::size_t> exponents;
  std::size_t n = 0;
  std::vector<bool> tame_flags;  // gcd(e_i, p) = 1, parallel to exponents
  bool wild_exception = false;   // p = 2, the largest exponent is the only 2, the rest odd

  /// Inertia yields an element of this cycle type when every exponent is
  /// tame, or in the characteristic-2 transposition case.
  bool valid_inertia() const;
};

/// a + alpha*b*c. Throws Error{DegreeDrop} if the degree of the result falls
/// below deg(b*c), which for deg a < deg(b*c) means alpha = 0.
Poly specialize(const Poly& a, const Poly& b, const Poly& c, FieldElem alpha);
inline Poly specialize(const StableCertificate& cert, FieldElem alpha) {
  return specialize(cert.a, cert.b, cert.c, alpha);
}

/// Only linear factors may repeat, and the multiplicity-one part must be
/// separable; anything else throws Error{NonSquarefreeUnramifiedPart}.
RamificationType ramification_type(const Poly& f_alpha, std::uint64_t p, std::uint64_t seed = 0);

struct Clause {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SnCertificate {
  std::size_t n = 0;
  std::size_t e = 0;
  FieldElem witness_alpha1, witness_alpha2;
  std::string transitive_reason;
  std::vector<Clause> checks;
};

namespace sn_clause {
inline constexpr std::string_view kReplay = "certificate replay";
inline constexpr std::string_view kTransitive = "transitivity gcd(a,b*c)=1";
inline constexpr std::string_view kLongCycleShape = "e-cycle witness";
inline constexpr std::string_view kAboveHalf = "e > n/2";
inline constexpr std::string_view kBelowN = "e < n";
inline constexpr std::string_view kCoprime = "gcd(e,n)=1";
inline constexpr std::string_view kTransposition = "transposition witness";
inline constexpr std::string_view kSymmetric = "symmetric group";
}  // namespace sn_clause

/// Arithmetic hypothesis on the long cycle: n/2 < e < n and gcd(e, n) = 1.
/// Throws Error{ClauseFailed} naming the first failing condition.
void check_long_cycle(std::size_t n, std::size_t e);

/// Evaluates every clause without throwing. A failing replay makes the
/// remaining clauses fail with detail "not evaluated".
std::vector<Clause> sn_clauses(const StableCertificate& cert);

/// All-or-nothing: throws Error{ClauseFailed} naming the first failing clause.
SnCertificate certify_sn(const StableCertificate& cert);

/// Tab-separated "name<TAB>true|false<TAB>detail" lines.
std::string to_string(const std::vector<Clause>& clauses);

/// Frobenius cycle types (factor-degree multisets, descending) over a sample.
struct CycleHistogram {
  std::map<std::vector<std::size_t>, std::uint64_t> counts;
  std::uint64_t skipped = 0;  // alpha = 0 or non-squarefree specializations
};

/// Partition-independent: per-alpha factorization seeds come from (seed, alpha).
CycleHistogram cycle_type_histogram(const Poly& a, const Poly& b, const Poly& c,
                                    std::span<const FieldElem> samples, std::uint64_t seed = 0,
                                    unsigned threads = 0);

/// "5-1-1-1-1"
std::string cycle_type_label(const std::vector<std::size_t>& type);

/// Header "cycle_type,count", one row per type.
std::string to_csv(const CycleHistogram& h);

}  // namespace progressio
