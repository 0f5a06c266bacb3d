#include "progressio/galois.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "progressio/error.hpp"
#include "progressio/factor.hpp"
#include "progressio/parallel.hpp"

namespace progressio {

namespace {

std::string join_type(const std::vector<std::size_t>& v) { return cycle_type_label(v); }

bool is_ones(std::span<const std::size_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 1; });
}

}  // namespace

bool RamificationType::valid_inertia() const {
  const bool all_tame = std::all_of(tame_flags.begin(), tame_flags.end(), [](bool t) { return t; });
  return all_tame || wild_exception;
}

Poly specialize(const Poly& a, const Poly& b, const Poly& c, FieldElem alpha) {
  const Poly bc = b * c;
  const Degree top = std::max(a.degree(), bc.degree());
  Poly f = a + alpha * bc;
  if (!top || f.degree() != top) {
    throw Error(ErrorCode::DegreeDrop, "leading coefficient vanishes at alpha = " + std::to_string(alpha.value));
  }
  return f;
}

RamificationType ramification_type(const Poly& f_alpha, std::uint64_t p, std::uint64_t seed) {
  if (f_alpha.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "ramification type of zero");
  const FactorizationResult fr = factorize(f_alpha, seed);
  RamificationType t;
  Poly unramified = Poly::constant(f_alpha.field(), FieldElem{1});
  for (const auto& fp : fr.factors) {
    if (fp.multiplicity == 1) {
      unramified *= fp.factor;
      continue;
    }
    if (fp.factor.deg() != 1) {
      throw Error(ErrorCode::NonSquarefreeUnramifiedPart,
                  "repeated nonlinear factor " + to_string(fp.factor) + "^" + std::to_string(fp.multiplicity));
    }
    t.exponents.push_back(fp.multiplicity);
  }
  if (!is_separable(unramified)) {
    throw Error(ErrorCode::NonSquarefreeUnramifiedPart, "multiplicity-one part is not separable");
  }
  if (!unramified.is_constant()) t.exponents.insert(t.exponents.end(), unramified.deg(), 1);
  std::sort(t.exponents.begin(), t.exponents.end(), std::greater<>());
  t.n = std::accumulate(t.exponents.begin(), t.exponents.end(), std::size_t{0});
  for (std::size_t e : t.exponents) t.tame_flags.push_back(e % p != 0);

  if (p == 2 && !t.exponents.empty() && t.exponents[0] == 2) {
    const auto rest = std::span<const std::size_t>(t.exponents).subspan(1);
    t.wild_exception = std::all_of(rest.begin(), rest.end(), [](std::size_t e) { return e % 2 == 1; });
  }
  return t;
}

void check_long_cycle(std::size_t n, std::size_t e) {
  const auto fail = [&](std::string_view name) {
    throw Error(ErrorCode::ClauseFailed,
                std::string(name) + " (n = " + std::to_string(n) + ", e = " + std::to_string(e) + ")");
  };
  if (!(e > n / 2)) fail(sn_clause::kAboveHalf);
  if (!(e < n)) fail(sn_clause::kBelowN);
  if (std::gcd(e, n) != 1) fail(sn_clause::kCoprime);
}

std::vector<Clause> sn_clauses(const StableCertificate& cert) {
  std::vector<Clause> out;
  const VerifyReport replay = verify_certificate(cert);
  {
    std::string detail = "all certificate invariants recomputed";
    if (!replay.ok) {
      detail = "violated:";
      for (const auto& v : replay.violated) detail += " [" + v + "]";
    }
    out.push_back({std::string(sn_clause::kReplay), replay.ok, detail});
  }
  const std::array<std::string_view, 7> rest = {sn_clause::kTransitive, sn_clause::kLongCycleShape,
                                                sn_clause::kAboveHalf,  sn_clause::kBelowN,
                                                sn_clause::kCoprime,    sn_clause::kTransposition,
                                                sn_clause::kSymmetric};
  if (!replay.ok) {
    for (auto name : rest) out.push_back({std::string(name), false, "not evaluated"});
    return out;
  }

  const std::uint64_t p = cert.field.modulus();
  const std::size_t n = cert.n, e = cert.e;

  out.push_back({std::string(sn_clause::kTransitive), coprime(cert.a, cert.b * cert.c),
                 "a + b*c*Y is irreducible over F(Y); the gcd is unchanged over the algebraic closure"});

  auto witness = [&](FieldElem alpha, std::size_t expected_top) -> std::pair<bool, std::string> {
    try {
      const RamificationType t = ramification_type(specialize(cert, alpha), p);
      const bool shape = t.n == n && !t.exponents.empty() && t.exponents[0] == expected_top &&
                         is_ones(std::span<const std::size_t>(t.exponents).subspan(1));
      return {shape && t.valid_inertia(), "exponents " + join_type(t.exponents) +
                                              (t.wild_exception ? " (characteristic-2 exception)" : "")};
    } catch (const Error& err) {
      return {false, err.what()};
    }
  };

  const auto [long_ok, long_detail] = witness(cert.alpha1, e);
  out.push_back({std::string(sn_clause::kLongCycleShape), long_ok, long_detail});
  out.push_back({std::string(sn_clause::kAboveHalf), e > n / 2,
                 std::to_string(e) + " > " + std::to_string(n) + "/2"});
  out.push_back({std::string(sn_clause::kBelowN), e < n, std::to_string(e) + " < " + std::to_string(n)});
  out.push_back({std::string(sn_clause::kCoprime), std::gcd(e, n) == 1,
                 "gcd(" + std::to_string(e) + "," + std::to_string(n) + ") = " + std::to_string(std::gcd(e, n))});
  const auto [tr_ok, tr_detail] = witness(cert.alpha2, 2);
  out.push_back({std::string(sn_clause::kTransposition), tr_ok, tr_detail});

  const bool all = std::all_of(out.begin(), out.end(), [](const Clause& c) { return c.ok; });
  out.push_back({std::string(sn_clause::kSymmetric), all,
                 all ? "transitive + e-cycle => primitive; primitive + transposition => S_" + std::to_string(n)
                     : "hypotheses incomplete"});
  return out;
}

SnCertificate certify_sn(const StableCertificate& cert) {
  SnCertificate sn;
  sn.n = cert.n;
  sn.e = cert.e;
  sn.witness_alpha1 = cert.alpha1;
  sn.witness_alpha2 = cert.alpha2;
  sn.transitive_reason = "gcd(a, b*c) = 1: the pencil is irreducible, and Euclid is field-independent";
  sn.checks = sn_clauses(cert);
  for (const auto& c : sn.checks) {
    if (!c.ok) throw Error(ErrorCode::ClauseFailed, c.name + ": " + c.detail);
  }
  return sn;
}

std::string to_string(const std::vector<Clause>& clauses) {
  std::ostringstream os;
  for (const auto& c : clauses) os << c.name << '\t' << (c.ok ? "true" : "false") << '\t' << c.detail << '\n';
  return os.str();
}

std::string cycle_type_label(const std::vector<std::size_t>& type) {
  std::string out;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i != 0) out += '-';
    out += std::to_string(type[i]);
  }
  return out;
}

CycleHistogram cycle_type_histogram(const Poly& a, const Poly& b, const Poly& c, std::span<const FieldElem> samples,
                                    std::uint64_t seed, unsigned threads) {
  const Poly bc = b * c;
  auto chunks = map_chunks<CycleHistogram>(samples.size(), threads, [&](std::size_t begin, std::size_t end) {
    CycleHistogram local;
    for (std::size_t i = begin; i < end; ++i) {
      const FieldElem alpha = samples[i];
      const Poly f = a + alpha * bc;
      if (alpha.is_zero() || f.is_constant() || !is_separable(f)) {
        ++local.skipped;
        continue;
      }
      const FactorizationResult fr = factorize(f, mix_seed(seed, alpha.value));
      std::vector<std::size_t> type;
      for (const auto& fp : fr.factors) type.push_back(fp.factor.deg());
      std::sort(type.begin(), type.end(), std::greater<>());
      ++local.counts[type];
    }
    return local;
  });
  CycleHistogram merged;
  for (const auto& h : chunks) {
    merged.skipped += h.skipped;
    for (const auto& [type, count] : h.counts) merged.counts[type] += count;
  }
  return merged;
}

std::string to_csv(const CycleHistogram& h) {
  std::string out = "cycle_type,count\n";
  for (const auto& [type, count] : h.counts) out += cycle_type_label(type) + "," + std::to_string(count) + "\n";
  return out;
}

}  // namespace progressio
