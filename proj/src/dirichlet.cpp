#include "progressio/dirichlet.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "progressio/error.hpp"
#include "progressio/factor.hpp"
#include "progressio/galois.hpp"
#include "progressio/parallel.hpp"

namespace progressio {

namespace {

using u128 = unsigned __int128;

void require_pencil(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "pencil operands");
  if (b.is_zero()) throw Error(ErrorCode::PreconditionViolated, "search needs b != 0");
  if (!coprime(a, b)) throw Error(ErrorCode::PreconditionViolated, "search needs gcd(a, b) = 1");
}

bool is_member_hit(const Poly& member, std::size_t n) {
  return member.degree() == Degree{n} && n >= 1 && is_irreducible(member);
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.value());
  return buf;
}

SearchReport empty_report(const Poly& a, const Poly& b, std::size_t n, SearchStrategy s, std::uint64_t seed) {
  return SearchReport{a, b, n, s, {}, 0, seed, std::nullopt};
}

}  // namespace

std::string_view to_string(SearchStrategy s) noexcept {
  switch (s) {
    case SearchStrategy::ConstructedScan: return "constructed-scan";
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::Random: return "random";
  }
  return "unknown";
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational SearchReport::density() const {
  return scanned == 0 ? Rational{0, 1} : Rational::make(hits.size(), scanned);
}

SearchReport search_constructed(const Poly& a, const Poly& b, std::size_t n, std::uint64_t max_hits,
                                std::uint64_t seed) {
  require_pencil(a, b);
  SearchReport r = empty_report(a, b, n, SearchStrategy::ConstructedScan, seed);
  r.certificate = build_stable(a, b, n, seed);
  const StableCertificate& cert = *r.certificate;
  const std::uint64_t p = cert.field.modulus();
  for (std::uint64_t v = 1; v < p && r.hits.size() < max_hits; ++v) {
    const FieldElem alpha{v};
    ++r.scanned;
    Poly member = specialize(cert, alpha);
    if (is_member_hit(member, n)) r.hits.push_back({alpha * cert.c, std::move(member)});
  }
  return r;
}

SearchReport search_exhaustive(const Poly& a, const Poly& b, std::size_t n, unsigned threads) {
  require_pencil(a, b);
  SearchReport r = empty_report(a, b, n, SearchStrategy::Exhaustive, 0);
  const std::size_t db = b.deg();
  if (n < db) return r;
  const PrimeField& F = a.field();
  const std::uint64_t p = F.modulus();
  const std::size_t top = std::max(n, a.is_zero() ? 0 : a.deg()) - db;  // deg c <= top
  u128 total = 1;
  for (std::size_t i = 0; i <= top; ++i) {
    total *= p;
    if (total > kExhaustiveLimit) {
      throw Error(ErrorCode::TooLarge, "exhaustive search over p^" + std::to_string(top + 1) +
                                           " candidates exceeds " + std::to_string(kExhaustiveLimit));
    }
  }

  struct Chunk {
    std::vector<Hit> hits;
    std::uint64_t scanned = 0;
  };
  auto chunks = map_chunks<Chunk>(static_cast<std::size_t>(total), threads, [&](std::size_t begin, std::size_t end) {
    Chunk out;
    std::vector<FieldElem> digits(top + 1);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::uint64_t rest = idx;
      for (auto& d : digits) {
        d = FieldElem{rest % p};
        rest /= p;
      }
      Poly c(F, digits);
      Poly member = a + b * c;
      if (member.degree() != Degree{n}) continue;
      ++out.scanned;
      if (is_member_hit(member, n)) out.hits.push_back({std::move(c), std::move(member)});
    }
    return out;
  });
  for (auto& ch : chunks) {
    r.scanned += ch.scanned;
    for (auto& h : ch.hits) r.hits.push_back(std::move(h));
  }
  std::sort(r.hits.begin(), r.hits.end(), [](const Hit& x, const Hit& y) { return graded_less(x.c, y.c); });
  return r;
}

SearchReport search_random(const Poly& a, const Poly& b, std::size_t n, std::uint64_t samples,
                           std::uint64_t max_hits, std::uint64_t seed) {
  require_pencil(a, b);
  SearchReport r = empty_report(a, b, n, SearchStrategy::Random, seed);
  const std::size_t db = b.deg();
  if (n < db) return r;
  const PrimeField& F = a.field();
  const std::uint64_t p = F.modulus();
  std::mt19937_64 rng(seed);
  const std::size_t dc = n - db;
  for (std::uint64_t s = 0; s < samples && r.hits.size() < max_hits; ++s) {
    std::vector<FieldElem> coeffs(dc + 1);
    for (auto& x : coeffs) x = FieldElem{rng() % p};
    coeffs.back() = FieldElem{1 + rng() % (p - 1)};
    Poly c(F, std::move(coeffs));
    Poly member = a + b * c;
    ++r.scanned;
    if (is_member_hit(member, n)) r.hits.push_back({std::move(c), std::move(member)});
  }
  return r;
}

DensityResult density_scan(const StableCertificate& cert, unsigned threads) {
  const VerifyReport v = verify_certificate(cert);
  if (!v.ok) throw Error(ErrorCode::PreconditionViolated, "density scan needs a verified certificate");
  const std::uint64_t p = cert.field.modulus();
  const Poly bc = cert.b * cert.c;
  auto counts = map_chunks<std::uint64_t>(p - 1, threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t local = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Poly member = cert.a + FieldElem{i + 1} * bc;
      if (is_member_hit(member, cert.n)) ++local;
    }
    return local;
  });
  DensityResult d;
  d.p = p;
  d.n = cert.n;
  d.count = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  d.expected = Rational::make(p, cert.n);
  const u128 num = static_cast<u128>(d.count) * cert.n;
  if (num >> 64) throw Error(ErrorCode::OutOfRange, "density ratio numerator overflows");
  d.ratio = Rational::make(static_cast<std::uint64_t>(num), p);
  return d;
}

std::string to_csv(const SearchReport& r) {
  std::ostringstream os;
  os << "strategy,p,n,scanned,hits,density\n"
     << to_string(r.strategy) << ',' << r.field().modulus() << ',' << r.n << ',' << r.scanned << ','
     << r.hits.size() << ',' << decimal(r.density()) << '\n';
  return os.str();
}

std::string to_csv(const DensityResult& d) {
  std::ostringstream os;
  const Rational density = Rational::make(d.count, d.p - 1);
  os << "strategy,p,n,scanned,hits,density\n"
     << "density-scan," << d.p << ',' << d.n << ',' << d.p - 1 << ',' << d.count << ',' << decimal(density)
     << '\n';
  return os.str();
}

std::string to_text(const SearchReport& r) {
  std::ostringstream os;
  os << "# search over F_" << r.field().modulus() << "[X]; finite-field Dirichlet setting\n"
     << "# seed: " << r.seed << '\n'
     << "strategy = " << to_string(r.strategy) << '\n'
     << "p = " << r.field().modulus() << '\n'
     << "n = " << r.n << '\n'
     << "a = " << to_string(r.a) << '\n'
     << "b = " << to_string(r.b) << '\n'
     << "scanned = " << r.scanned << '\n'
     << "hits = " << r.hits.size() << '\n'
     << "density = " << r.density().num << '/' << r.density().den << '\n';
  for (const auto& h : r.hits) {
    os << "c = " << to_string(h.c) << '\n' << "member = " << to_string(h.member) << '\n';
  }
  return os.str();
}

std::string to_text(const DensityResult& d) {
  std::ostringstream os;
  os << "# irreducible specializations over F_" << d.p << "^*\n"
     << "p = " << d.p << '\n'
     << "n = " << d.n << '\n'
     << "count = " << d.count << '\n'
     << "expected = " << d.expected.num << '/' << d.expected.den << '\n'
     << "ratio = " << d.ratio.num << '/' << d.ratio.den << " (" << decimal(d.ratio) << ")\n";
  return os.str();
}

}  // namespace progressio
