#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "progressio/poly.hpp"

namespace progressio {

struct FactorPower {
  Poly factor;  // monic irreducible
  std::size_t multiplicity = 0;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// unit * prod(factor^multiplicity) == input. Factors are pairwise distinct
/// and sorted in graded-lexicographic order.
struct FactorizationResult {
  FieldElem unit;
  std::vector<FactorPower> factors;

  friend bool operator==(const FactorizationResult&, const FactorizationResult&) = default;
};

/// Rabin's test: X^(p^n) = X mod f and gcd(X^(p^(n/r)) - X, f) = 1 for every
/// prime r | n. Throws Error{ConstantPolynomial} for degree < 1.
bool is_irreducible(const Poly& f);

/// Full factorization: squarefree split, distinct-degree split, then
/// Cantor-Zassenhaus equal-degree splitting (trace map for p = 2).
///
/// `seed` drives the equal-degree splitting only; the sorted result does not
/// depend on it. Throws Error{ZeroPolynomial}, or Error{RetryBudgetExhausted}
/// if a split is not found within 64*degree random shots.
FactorizationResult factorize(const Poly& f, std::uint64_t seed = 0);

/// Monic squarefree parts with distinct multiplicities, handling f' = 0.
std::vector<FactorPower> squarefree_decomposition(const Poly& f);

struct DegreeBlock {
  Poly product;        // product of every irreducible factor of this degree
  std::size_t degree;  // common degree of those factors
};
/// Input must be monic and squarefree.
std::vector<DegreeBlock> distinct_degree_factorization(const Poly& f);

/// Splits a monic squarefree f whose irreducible factors all have degree d.
std::vector<Poly> equal_degree_factorization(const Poly& f, std::size_t d, std::uint64_t seed);

/// Multiplies a factorization back out.
Poly expand(const PrimeField& field, const FactorizationResult& r);

/// Number of monic irreducibles of degree n over F_p (necklace formula).
/// Throws Error{OutOfRange} if the count does not fit in 64 bits.
std::uint64_t count_irreducibles(std::uint64_t p, std::size_t n);

/// Text record: the unit on the first line when it is not 1, then one
/// "(factor)^multiplicity" line per factor in graded-lexicographic order.
/// A unit-only result prints the unit alone.
std::string to_string(const FactorizationResult& r);

/// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace progressio
