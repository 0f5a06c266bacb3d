#include <random>
#include <string>

#include "progressio/error.hpp"
#include "progressio/oracle.hpp"

namespace progressio::oracle {

namespace {

Poly random_poly(const PrimeField& F, std::size_t max_deg, std::mt19937_64& rng) {
  std::vector<FieldElem> c(rng() % (max_deg + 1) + 1);
  for (auto& x : c) x = FieldElem{rng() % F.modulus()};
  return Poly(F, std::move(c));
}

}  // namespace

std::vector<SelftestResult> run_selftest(bool full, std::uint64_t seed) {
  std::vector<SelftestResult> out;
  std::mt19937_64 rng(seed);
  const std::size_t max_deg = full ? 6 : 4;

  {
    std::size_t checked = 0, bad = 0;
    for (std::uint64_t p : {2ULL, 3ULL}) {
      const PrimeField F(p);
      for (std::size_t d = 1; d <= max_deg; ++d) {
        for (const Poly& f : all_polys_of_degree(F, d)) {
          ++checked;
          if (!(factorize(f, seed) == naive_factor(f))) ++bad;
        }
      }
    }
    out.push_back({"factorize vs trial division", bad == 0,
                   std::to_string(checked) + " polynomials, " + std::to_string(bad) + " mismatches"});
  }
  {
    const std::size_t pairs = full ? 1000 : 100;
    std::size_t bad = 0;
    for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 2305843009213693951ULL}) {
      const PrimeField F(p);
      for (std::size_t i = 0; i < pairs; ++i) {
        const Poly f = random_poly(F, 64, rng), g = random_poly(F, 64, rng);
        if (!(f * g == naive_mul(f, g))) ++bad;
      }
    }
    out.push_back({"multiplication vs convolution", bad == 0, std::to_string(bad) + " mismatches"});
  }
  {
    const std::size_t top = full ? 8 : 6;
    std::string detail;
    bool ok = true;
    const PrimeField F2(2);
    for (std::size_t n = 1; n <= top; ++n) {
      const auto listed = enumerate_irreducibles(F2, n).size();
      const auto counted = count_irreducibles(2, n);
      ok = ok && listed == counted;
      detail += (n == 1 ? "" : ",") + std::to_string(counted);
    }
    out.push_back({"necklace count vs sieve over F_2", ok, detail});
  }
  {
    std::size_t bad = 0, checked = 0;
    const PrimeField F3(3);
    for (std::size_t d = 1; d <= max_deg; ++d) {
      for (const Poly& f : all_polys_of_degree(F3, d)) {
        ++checked;
        if (is_irreducible(f) != naive_is_irreducible(f)) ++bad;
      }
    }
    out.push_back({"Rabin test vs trial division over F_3", bad == 0,
                   std::to_string(checked) + " polynomials, " + std::to_string(bad) + " mismatches"});
  }
  return out;
}

}  // namespace progressio::oracle
