#include "progressio/factor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "progressio/error.hpp"

namespace progressio {

namespace {

using u128 = unsigned __int128;

// Recovers g from g(X)^p = g(X^p); Frobenius is the identity on F_p.
Poly pth_root(const Poly& f) {
  const std::uint64_t p = f.field().modulus();
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
  return Poly(f.field(), std::move(out));
}

Poly random_below(const PrimeField& F, std::size_t n, std::mt19937_64& rng) {
  std::vector<FieldElem> v(n);
  for (auto& c : v) c = F.from_unsigned(rng());
  return Poly(F, std::move(v));
}

// Returns a nontrivial monic divisor of f, or an empty optional on a miss.
std::optional<Poly> split_once(const Poly& f, std::size_t d, std::mt19937_64& rng) {
  const PrimeField& F = f.field();
  const std::uint64_t p = F.modulus();
  Poly a = random_below(F, f.deg(), rng);
  if (a.is_constant()) return std::nullopt;

  Poly g = gcd(a, f);
  if (!g.is_one()) return g;

  Poly candidate(F);
  if (p == 2) {
    // Absolute trace a + a^2 + ... + a^(2^(kd-1)) lands in F_2 on each
    // residue field F_{2^d}; k = 1 suffices.
    Poly t = a, acc = a;
    for (std::size_t k = 1; k < d; ++k) {
      t = mulmod(t, t, f);
      acc += t;
    }
    candidate = acc;
  } else {
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2).
    Poly t = a, norm = a;
    for (std::size_t k = 1; k < d; ++k) {
      t = powmod(t, p, f);
      norm = mulmod(norm, t, f);
    }
    candidate = powmod(norm, (p - 1) / 2, f) - Poly::constant(F, FieldElem{1});
  }
  if (candidate.is_zero()) return std::nullopt;
  g = gcd(candidate, f);
  if (g.is_one() || g.size() == f.size()) return std::nullopt;
  return g;
}

}  // namespace

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  const std::size_t n = f.deg();
  if (n == 1) return true;
  const Poly g = f.monic();
  const PrimeField& F = g.field();
  const std::uint64_t p = F.modulus();
  const Poly x = Poly::x(F) % g;

  const auto primes = prime_divisors(n);
  std::vector<std::size_t> checkpoints;
  for (auto r : primes) checkpoints.push_back(n / static_cast<std::size_t>(r));

  // frob holds X^(p^k) mod g.
  Poly frob = x;
  for (std::size_t k = 1; k <= n; ++k) {
    frob = powmod(frob, p, g);
    if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
      Poly diff = frob - x;
      if (diff.is_zero() || !coprime(diff, g)) return false;
    }
  }
  return frob == x;
}

std::vector<FactorPower> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<FactorPower> out;
  if (f.is_constant()) return out;
  const PrimeField& F = f.field();
  const Poly monic_f = f.monic();

  const Poly df = derivative(monic_f);
  if (df.is_zero()) {
    for (auto& fp : squarefree_decomposition(pth_root(monic_f))) {
      out.push_back({std::move(fp.factor), fp.multiplicity * F.modulus()});
    }
    return out;
  }

  Poly c = gcd(monic_f, df);
  Poly w = monic_f / c;
  std::size_t i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.push_back({fac.monic(), i});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) {
    for (auto& fp : squarefree_decomposition(pth_root(c.monic()))) {
      out.push_back({std::move(fp.factor), fp.multiplicity * F.modulus()});
    }
  }
  return out;
}

std::vector<DegreeBlock> distinct_degree_factorization(const Poly& f) {
  std::vector<DegreeBlock> out;
  const PrimeField& F = f.field();
  const std::uint64_t p = F.modulus();
  Poly rest = f.monic();
  const Poly x = Poly::x(F);
  Poly h = x % rest;
  for (std::size_t i = 1; rest.size() > 2 * i; ++i) {
    h = powmod(h, p, rest);
    Poly g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.push_back({g, i});
      rest = rest / g;
      h = h % rest;
    }
  }
  if (!rest.is_one()) out.push_back({rest, rest.deg()});
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, std::size_t d, std::uint64_t seed) {
  std::vector<Poly> done;
  if (f.deg() == d) {
    done.push_back(f.monic());
    return done;
  }
  std::mt19937_64 rng(seed);
  std::size_t budget = 64 * f.deg();
  std::vector<Poly> work{f.monic()};
  while (!work.empty()) {
    Poly g = std::move(work.back());
    work.pop_back();
    if (g.deg() == d) {
      done.push_back(std::move(g));
      continue;
    }
    std::optional<Poly> piece;
    while (!piece) {
      if (budget == 0) {
        throw Error(ErrorCode::RetryBudgetExhausted,
                    "equal-degree splitting of degree " + std::to_string(f.deg()) + " input");
      }
      --budget;
      piece = split_once(g, d, rng);
    }
    work.push_back(g / *piece);
    work.push_back(std::move(*piece));
  }
  std::sort(done.begin(), done.end(), graded_less);
  return done;
}

FactorizationResult factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of the zero polynomial");
  FactorizationResult r{f.lc(), {}};
  std::uint64_t stream = seed;
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& block : distinct_degree_factorization(sq.factor)) {
      for (auto& irr : equal_degree_factorization(block.product, block.degree, stream++)) {
        r.factors.push_back({std::move(irr), sq.multiplicity});
      }
    }
  }
  std::sort(r.factors.begin(), r.factors.end(),
            [](const FactorPower& x, const FactorPower& y) { return graded_less(x.factor, y.factor); });
  return r;
}

Poly expand(const PrimeField& field, const FactorizationResult& r) {
  Poly out = Poly::constant(field, r.unit);
  for (const auto& fp : r.factors) out *= pow(fp.factor, fp.multiplicity);
  return out;
}

std::uint64_t count_irreducibles(std::uint64_t p, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "count_irreducibles needs n >= 1");
  auto checked_pow = [p, n](std::size_t k) {
    u128 acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
      acc *= p;
      if (acc >> 100) {
        throw Error(ErrorCode::OutOfRange,
                    "irreducible count over F_" + std::to_string(p) + " in degree " + std::to_string(n));
      }
    }
    return acc;
  };
  // sum over squarefree divisors d of n of mu(d) p^(n/d)
  const auto primes = prime_divisors(n);
  u128 positive = 0, negative = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::size_t d = 1;
    int bits = 0;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (mask & (std::size_t{1} << j)) {
        d *= static_cast<std::size_t>(primes[j]);
        ++bits;
      }
    }
    (bits % 2 == 0 ? positive : negative) += checked_pow(n / d);
  }
  const u128 count = (positive - negative) / n;
  if (count >> 64) throw Error(ErrorCode::OutOfRange, "irreducible count exceeds 64 bits");
  return static_cast<std::uint64_t>(count);
}

std::string to_string(const FactorizationResult& r) {
  std::string out;
  if (r.unit.value != 1 || r.factors.empty()) out += std::to_string(r.unit.value) + "\n";
  for (const auto& fp : r.factors) {
    out += "(" + to_string(fp.factor) + ")^" + std::to_string(fp.multiplicity) + "\n";
  }
  return out;
}

}  // namespace progressio
