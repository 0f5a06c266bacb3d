#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "progressio/construct.hpp"
#include "progressio/poly.hpp"

namespace progressio {

// Searches for irreducible members a + b*c of degree n in the progression
// a mod b. Everything here works over a finite prime field F_p, where
// Dirichlet's theorem for F_p[X] holds for large n (Artin-Kornblum); no
// infinite-field statement is checked.

enum class SearchStrategy { ConstructedScan, Exhaustive, Random };

std::string_view to_string(SearchStrategy s) noexcept;

/// Reduced nonnegative fraction; den > 0.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Hit {
  Poly c;
  Poly member;  // a + b*c
};

struct SearchReport {
  Poly a, b;
  std::size_t n = 0;
  SearchStrategy strategy = SearchStrategy::Exhaustive;
  std::vector<Hit> hits;
  std::uint64_t scanned = 0;
  std::uint64_t seed = 0;
  std::optional<StableCertificate> certificate;  // set by the constructed scan

  const PrimeField& field() const noexcept { return a.field(); }
  /// hits / scanned; 0/1 for an empty scan.
  Rational density() const;
};

/// Builds the stable certificate, then scans alpha = 1, 2, ..., p-1 and
/// records alpha*c whenever a + alpha*b*c is irreducible, up to max_hits.
/// Propagates build_stable errors.
SearchReport search_constructed(const Poly& a, const Poly& b, std::size_t n, std::uint64_t max_hits,
                                std::uint64_t seed = 0);

/// Every c with deg(a + b*c) = n, i.e. deg c <= max(n, deg a) - deg b.
/// Hits are sorted graded-lexicographically by c. Throws Error{TooLarge}
/// when p^(max(n, deg a) - deg b + 1) > 10^7.
SearchReport search_exhaustive(const Poly& a, const Poly& b, std::size_t n, unsigned threads = 0);

/// `samples` uniformly random c of degree exactly n - deg b.
SearchReport search_random(const Poly& a, const Poly& b, std::size_t n, std::uint64_t samples,
                           std::uint64_t max_hits, std::uint64_t seed = 0);

inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

struct DensityResult {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::uint64_t count = 0;  // alpha != 0 with a + alpha*b*c irreducible of degree n
  Rational expected;        // p / n, the n-cycle share of S_n
  Rational ratio;           // count / expected
};

/// Exhaustive scan over alpha in F_p^*. Throws Error{PreconditionViolated}
/// if the certificate does not verify.
DensityResult density_scan(const StableCertificate& cert, unsigned threads = 0);

/// Header "strategy,p,n,scanned,hits,density" plus one row.
std::string to_csv(const SearchReport& r);
std::string to_csv(const DensityResult& d);

/// key = value document listing every hit's c and member.
std::string to_text(const SearchReport& r);
std::string to_text(const DensityResult& d);

}  // namespace progressio
