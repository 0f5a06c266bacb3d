#include <doctest.h>

#include "progressio/field.hpp"
#include "test_util.hpp"

using namespace progressio;
using progressio::testing::code_of;

TEST_CASE("field construction") {
  CHECK(PrimeField(7).modulus() == 7);
  CHECK(PrimeField(2).characteristic() == 2);
  CHECK(code_of([] { PrimeField(6); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { PrimeField(1); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { PrimeField(0); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { PrimeField(std::uint64_t{1} << 61); }) == ErrorCode::OutOfRange);
  CHECK(PrimeField((std::uint64_t{1} << 61) - 1).modulus() == 2305843009213693951ULL);
  CHECK(code_of([] { PrimeField(561); }) == ErrorCode::NotPrime);  // Carmichael
}

TEST_CASE("primality agrees with trial division") {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == slow(n));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(2305843009213693953ULL));
}

TEST_CASE("inverse") {
  const PrimeField F7(7);
  CHECK(F7.inv(FieldElem{3}) == FieldElem{5});
  CHECK(PrimeField(101).inv(FieldElem{1}) == FieldElem{1});
  CHECK(code_of([] { PrimeField(5).inv(FieldElem{0}); }) == ErrorCode::DivisionByZero);

  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 97ULL, 9973ULL}) {
    const PrimeField F(p);
    for (std::uint64_t x = 1; x < p; ++x) REQUIRE(F.mul(FieldElem{x}, F.inv(FieldElem{x})) == FieldElem{1});
  }
}

TEST_CASE("pow") {
  CHECK(PrimeField(7).pow(FieldElem{3}, 6) == FieldElem{1});
  CHECK(PrimeField(5).pow(FieldElem{2}, 0) == FieldElem{1});
  CHECK(PrimeField(5).pow(FieldElem{2}, 4) == FieldElem{1});
  CHECK(PrimeField(5).pow(FieldElem{0}, 0) == FieldElem{1});
  CHECK(PrimeField(5).pow(FieldElem{0}, 3) == FieldElem{0});

  for (std::uint64_t p : {2ULL, 3ULL, 13ULL, 101ULL, 1009ULL}) {
    const PrimeField F(p);
    for (std::uint64_t x = 0; x < p; ++x) REQUIRE(F.pow(FieldElem{x}, p) == FieldElem{x});
  }
}

TEST_CASE("ring laws on random triples") {
  std::mt19937_64 rng(17);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 2305843009213693951ULL}) {
    const PrimeField F(p);
    for (int i = 0; i < 2000; ++i) {
      const FieldElem x{rng() % p}, y{rng() % p}, z{rng() % p};
      REQUIRE(F.add(x, y) == F.add(y, x));
      REQUIRE(F.mul(x, y) == F.mul(y, x));
      REQUIRE(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
      REQUIRE(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
      REQUIRE(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
      REQUIRE(F.sub(F.add(x, y), y) == x);
      REQUIRE(F.add(x, F.neg(x)) == FieldElem{0});
    }
  }
}

TEST_CASE("elem reduces signed values") {
  const PrimeField F(5);
  CHECK(F.elem(-1) == FieldElem{4});
  CHECK(F.elem(-10) == FieldElem{0});
  CHECK(F.elem(12) == FieldElem{2});
}
