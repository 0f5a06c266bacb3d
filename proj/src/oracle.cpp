#include "progressio/oracle.hpp"

#include <algorithm>
#include <string>

#include "progressio/error.hpp"

namespace progressio::oracle {

namespace {

std::uint64_t checked_power(std::uint64_t p, std::size_t n) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (acc > kEnumerationLimit / p) {
      throw Error(ErrorCode::TooLarge, std::to_string(p) + "^" + std::to_string(n) + " exceeds the enumeration limit");
    }
    acc *= p;
  }
  return acc;
}

// Monic polynomial of degree n whose lower coefficients are the base-p digits of idx.
Poly monic_from_index(const PrimeField& F, std::size_t n, std::uint64_t idx) {
  std::vector<FieldElem> c(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = FieldElem{idx % F.modulus()};
    idx /= F.modulus();
  }
  c[n] = FieldElem{1};
  return Poly(F, std::move(c));
}

std::uint64_t index_of_monic(const Poly& f) {
  std::uint64_t idx = 0;
  for (std::size_t i = f.deg(); i-- > 0;) idx = idx * f.field().modulus() + f[i].value;
  return idx;
}

}  // namespace

Poly naive_mul(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "naive_mul operands");
  const PrimeField& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  std::vector<FieldElem> out(f.size() + g.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    FieldElem acc{};
    for (std::size_t i = 0; i <= k && i < f.size(); ++i) {
      if (k - i < g.size()) acc = F.add(acc, F.mul(f[i], g[k - i]));
    }
    out[k] = acc;
  }
  return Poly(F, std::move(out));
}

std::vector<Poly> all_polys_of_degree(const PrimeField& F, std::size_t d) {
  const std::uint64_t p = F.modulus();
  const std::uint64_t lower = checked_power(p, d);
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(lower * (p - 1)));
  for (std::uint64_t lead = 1; lead < p; ++lead) {
    for (std::uint64_t idx = 0; idx < lower; ++idx) {
      out.push_back(FieldElem{lead} * monic_from_index(F, d, idx));
    }
  }
  return out;
}

std::vector<Poly> enumerate_irreducibles(const PrimeField& F, std::size_t n) {
  if (n == 0) return {};
  const std::uint64_t total = checked_power(F.modulus(), n);
  std::vector<bool> reducible(static_cast<std::size_t>(total), false);
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    const std::uint64_t left = checked_power(F.modulus(), d);
    const std::uint64_t right = checked_power(F.modulus(), n - d);
    for (std::uint64_t i = 0; i < left; ++i) {
      const Poly g = monic_from_index(F, d, i);
      for (std::uint64_t j = 0; j < right; ++j) {
        reducible[static_cast<std::size_t>(index_of_monic(naive_mul(g, monic_from_index(F, n - d, j))))] = true;
      }
    }
  }
  std::vector<Poly> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!reducible[static_cast<std::size_t>(idx)]) out.push_back(monic_from_index(F, n, idx));
  }
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

FactorizationResult naive_factor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "naive_factor of zero");
  const PrimeField& F = f.field();
  FactorizationResult r{f.lc(), {}};
  if (f.is_constant()) return r;
  Poly rest = f.scaled(F.inv(f.lc()));
  for (std::size_t d = 1; rest.size() > 1 && 2 * d <= rest.deg(); ++d) {
    for (const Poly& q : enumerate_irreducibles(F, d)) {
      std::size_t mult = 0;
      while (rest.size() > 1) {
        auto [quo, rem] = divmod(rest, q);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult != 0) r.factors.push_back({q, mult});
    }
  }
  if (rest.size() > 1) {
    // What survives trial division up to half its degree is irreducible.
    r.factors.push_back({rest, 1});
  }
  std::sort(r.factors.begin(), r.factors.end(),
            [](const FactorPower& x, const FactorPower& y) { return graded_less(x.factor, y.factor); });
  return r;
}

bool naive_is_irreducible(const Poly& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  const FactorizationResult r = naive_factor(f);
  return r.factors.size() == 1 && r.factors[0].multiplicity == 1;
}

}  // namespace progressio::oracle
