#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "progressio/factor.hpp"
#include "progressio/poly.hpp"

// Naive reference implementations. They share only the Poly container and
// field arithmetic with the main code paths, and are slow on purpose.
namespace progressio::oracle {

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

/// O(d^2) convolution with one reduction per product.
Poly naive_mul(const Poly& f, const Poly& g);

/// All monic irreducibles of degree n over F_p, graded-lex sorted, found by
/// striking every product of two lower-degree monic polynomials.
/// Throws Error{TooLarge} when p^n > 10^7.
std::vector<Poly> enumerate_irreducibles(const PrimeField& field, std::size_t n);

/// Trial division by enumerated irreducibles of degree <= deg(f)/2.
/// Throws Error{ZeroPolynomial} or Error{TooLarge}.
FactorizationResult naive_factor(const Poly& f);

/// Irreducibility by trial division.
bool naive_is_irreducible(const Poly& f);

/// Every polynomial over the field of degree exactly d (d = 0: nonzero constants).
std::vector<Poly> all_polys_of_degree(const PrimeField& field, std::size_t d);

}  // namespace progressio::oracle

namespace progressio::oracle {

struct SelftestResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Cross-checks the fast paths against the naive references. Quick covers
/// F_2, F_3 up to degree 4; full goes to degree 6 with larger random batches.
std::vector<SelftestResult> run_selftest(bool full, std::uint64_t seed = 0);

}  // namespace progressio::oracle
