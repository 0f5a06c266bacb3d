// One line per acceptance criterion: "ACk PASS|FAIL <seconds>s <summary>".
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "progressio/construct.hpp"
#include "progressio/dirichlet.hpp"
#include "progressio/error.hpp"
#include "progressio/factor.hpp"
#include "progressio/galois.hpp"
#include "progressio/oracle.hpp"

using namespace progressio;

namespace {

struct Verdict {
  bool ok = true;
  std::string summary;
};

// Records the first failure; later failures only bump the count.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ == 0) first_ = what;
  }
  bool ok() const { return failures_ == 0; }
  std::string describe(const std::string& on_pass) const {
    if (ok()) return on_pass;
    return on_pass + "; " + std::to_string(failures_) + " failure(s), first: " + first_;
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

Poly random_nonzero(const PrimeField& F, std::size_t max_deg, std::mt19937_64& rng) {
  for (;;) {
    std::vector<FieldElem> c(rng() % (max_deg + 1) + 1);
    for (auto& x : c) x = FieldElem{rng() % F.modulus()};
    Poly f(F, std::move(c));
    if (!f.is_zero()) return f;
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict ac1() {
  Tally t;
  const std::uint64_t expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::uint64_t count = count_irreducibles(2, n);
    t.expect(count == expected[n - 1], "count_irreducibles(2, " + std::to_string(n) + ")");
    t.expect(oracle::enumerate_irreducibles(PrimeField(2), n).size() == count,
             "sieve size for n = " + std::to_string(n));
  }
  return {t.ok(), t.describe("necklace counts over F_2 for n = 1..8 match the table and the sieve")};
}

Verdict ac2() {
  Tally t;
  std::size_t exhaustive = 0;
  for (std::uint64_t p : {2, 3}) {
    const PrimeField F(p);
    for (std::size_t d = 0; d <= 6; ++d) {
      for (const Poly& f : oracle::all_polys_of_degree(F, d)) {
        ++exhaustive;
        t.expect(factorize(f) == oracle::naive_factor(f), "factorize(" + to_string(f) + ") over F_" + std::to_string(p));
      }
    }
  }
  std::mt19937_64 rng(2024);
  const std::uint64_t primes[] = {2, 3, 101};
  for (int i = 0; i < 1000; ++i) {
    const PrimeField F(primes[i % 3]);
    const Poly f = random_nonzero(F, 40, rng);
    const FactorizationResult r = factorize(f, rng());
    bool irreducible_parts = true;
    for (const auto& fp : r.factors) irreducible_parts = irreducible_parts && fp.factor.is_monic() && is_irreducible(fp.factor);
    t.expect(expand(F, r) == f && irreducible_parts, "multiply-back of " + to_string(f));
  }
  return {t.ok(), t.describe(std::to_string(exhaustive) + " exhaustive polys agree with trial division; 1000 multiply-backs exact")};
}

Verdict ac3() {
  Tally t;
  const PrimeField F(3);
  std::vector<Poly> polys;
  for (std::size_t d = 0; d <= 2; ++d) {
    for (Poly& f : oracle::all_polys_of_degree(F, d)) polys.push_back(std::move(f));
  }
  std::size_t runs = 0;
  for (const Poly& a : polys) {
    for (const Poly& b : polys) {
      if (!coprime(a, b)) continue;
      for (std::size_t n = b.deg() + 1; n <= 6; ++n) {
        ++runs;
        const SearchReport r = search_exhaustive(a, b, n);
        t.expect(!r.hits.empty(), "a = " + to_string(a) + ", b = " + to_string(b) + ", n = " + std::to_string(n));
      }
    }
  }
  // a = 0 pairs with constant b only
  for (const Poly& b : oracle::all_polys_of_degree(F, 0)) {
    for (std::size_t n = 1; n <= 6; ++n) {
      ++runs;
      t.expect(!search_exhaustive(Poly(F), b, n).hits.empty(), "a = 0, b = " + to_string(b) + ", n = " + std::to_string(n));
    }
  }
  return {t.ok(), t.describe(std::to_string(runs) + " (a, b, n) progressions over F_3 each contain an irreducible")};
}

struct SuiteCase {
  Poly a, b;
  std::size_t n;
};

// Shared between criteria 4 and 7.
std::vector<StableCertificate> g_certificates;

std::optional<std::size_t> smallest_feasible_n(const Poly& a, const Poly& b, std::uint64_t p) {
  const std::size_t m = stable_m(a, b);
  for (std::size_t n = std::max(a.deg(), b.deg()) + 1; n <= 24; ++n) {
    try {
      choose_e(n, m, p);
      return n;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoValidE) throw;
    }
  }
  return std::nullopt;
}

bool flips(const StableCertificate& cert) {
  try {
    if (!verify_certificate(cert).ok) return true;
    const auto clauses = sn_clauses(cert);
    return !std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.ok; });
  } catch (const Error&) {
    return true;
  }
}

Verdict ac4() {
  Tally t;
  std::mt19937_64 rng(4);
  const std::uint64_t primes[] = {5, 7, 11, 13};
  std::size_t built = 0, too_small = 0, infeasible = 0, tampers = 0;
  for (int i = 0; i < 200; ++i) {
    const PrimeField F(primes[i % 4]);
    const std::uint64_t p = F.modulus();
    Poly a(F), b(F);
    do {
      a = random_nonzero(F, 4, rng);
      b = random_nonzero(F, 4, rng);
    } while (!coprime(a, b));
    const auto n = smallest_feasible_n(a, b, p);
    if (!n) {
      ++infeasible;
      continue;
    }
    const std::string tag = "F_" + std::to_string(p) + " a = " + to_string(a) + " b = " + to_string(b);
    if (p < a.deg() + b.deg() + 4) {
      ErrorCode code = ErrorCode::PreconditionViolated;
      try {
        build_stable(a, b, *n);
      } catch (const Error& e) {
        code = e.code();
      }
      t.expect(code == ErrorCode::FieldTooSmall, tag + ": expected FieldTooSmall");
      ++too_small;
      continue;
    }
    std::optional<StableCertificate> built_cert;
    try {
      built_cert = build_stable(a, b, *n, rng());
    } catch (const Error& e) {
      t.expect(false, tag + ": " + e.what());
      continue;
    }
    StableCertificate& cert = *built_cert;
    ++built;
    t.expect(verify_certificate(cert).ok, tag + ": verify_certificate");
    try {
      certify_sn(cert);
    } catch (const Error& e) {
      t.expect(false, tag + ": " + e.what());
    }

    const FieldElem one{1};
    const auto bump = [&](FieldElem x) { return F.add(x, one); };
    const Poly unit = Poly::constant(F, one);
    const std::vector<std::pair<std::string, std::function<void(StableCertificate&)>>> tamperings = {
        {"a", [&](StableCertificate& c) { c.a += unit; }},
        {"b", [&](StableCertificate& c) { c.b += Poly::x(F); }},
        {"c", [&](StableCertificate& c) { c.c += unit; }},
        {"n", [&](StableCertificate& c) { ++c.n; }},
        {"m", [&](StableCertificate& c) { ++c.m; }},
        {"e", [&](StableCertificate& c) { ++c.e; }},
        {"alpha1", [&](StableCertificate& c) { c.alpha1 = bump(c.alpha1); }},
        {"alpha2", [&](StableCertificate& c) { c.alpha2 = bump(c.alpha2); }},
        {"gamma1", [&](StableCertificate& c) { c.gamma1 = bump(c.gamma1); }},
        {"gamma2", [&](StableCertificate& c) { c.gamma2 = bump(c.gamma2); }},
        {"h1", [&](StableCertificate& c) { c.h1 += unit; }},
        {"h2", [&](StableCertificate& c) { c.h2 += unit; }},
    };
    for (const auto& [field, tamper] : tamperings) {
      StableCertificate bad = cert;
      tamper(bad);
      ++tampers;
      t.expect(flips(bad), tag + ": tampering " + field + " went unnoticed");
    }
    g_certificates.push_back(std::move(cert));
  }
  std::ostringstream s;
  s << built << " certificates verified and certified, " << tampers << " tamperings rejected, " << too_small
    << " FieldTooSmall as expected, " << infeasible << " with no feasible n <= 24";
  return {t.ok() && built > 0, t.describe(s.str())};
}

Verdict ac5() {
  Tally t;
  std::size_t scans = 0, compared = 0;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (std::size_t n = 2 * m + 10; n <= 2 * m + 200; ++n) {
        const std::string tag = "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ", p = " + std::to_string(p);
        std::size_t e = 0;
        try {
          e = choose_e(n, m, p);
        } catch (const Error& err) {
          bool exists = false;
          for (std::size_t k = n / 2 + 1; k + m < n; ++k) exists = exists || std::gcd(k, n * p) == 1;
          t.expect(false, tag + ": " + err.what() +
                              (exists ? " although an admissible e exists" : " (brute force: no admissible e exists)"));
          continue;
        }
        ++scans;
        t.expect(2 * e > n && e + m < n && std::gcd(e, n * p) == 1, tag + ": e = " + std::to_string(e));
        const auto candidate = case_analysis_e(n, p);
        if (candidate && 2 * *candidate > n && *candidate + m < n) {
          ++compared;
          t.expect(e <= *candidate, tag + ": scan above case analysis");
        }
      }
    }
  }
  return {t.ok(), t.describe(std::to_string(scans) + " scans in range and coprime; " + std::to_string(compared) +
                             " no larger than the case-analysis candidate")};
}

Verdict ac6() {
  Tally t;
  std::ostringstream s;
  s << std::fixed << std::setprecision(3);
  try {
    const StableCertificate cert = build_stable(Poly(PrimeField(10007), {1, 1}), Poly(PrimeField(10007), {1}), 8);
    const DensityResult d = density_scan(cert);
    t.expect(d.ratio.value() >= 0.5 && d.ratio.value() <= 1.5, "p = 10007 ratio " + std::to_string(d.ratio.value()));
    s << "p = 10007, n = 8: count " << d.count << ", ratio " << d.ratio.value();
  } catch (const Error& e) {
    t.expect(false, std::string("p = 10007, n = 8: ") + e.what());
  }
  try {
    const StableCertificate cert = build_stable(Poly(PrimeField(101), {1, 1}), Poly(PrimeField(101), {1}), 5);
    const DensityResult d = density_scan(cert);
    t.expect(d.count >= 10 && d.count <= 30, "p = 101 count " + std::to_string(d.count));
    s << "; p = 101, n = 5: count " << d.count;
  } catch (const Error& e) {
    t.expect(false, std::string("p = 101, n = 5: ") + e.what());
  }
  return {t.ok(), t.describe(s.str())};
}

bool witness_shape(const StableCertificate& cert, FieldElem alpha, FieldElem gamma, std::size_t exponent) {
  const FactorizationResult r = factorize(specialize(cert, alpha));
  const Poly linear = Poly::linear_root(cert.field, gamma);
  bool seen = false;
  for (const auto& fp : r.factors) {
    if (fp.factor == linear) {
      seen = fp.multiplicity == exponent;
    } else if (fp.multiplicity != 1) {
      return false;
    }
  }
  return seen;
}

Verdict ac7() {
  Tally t;
  for (const StableCertificate& cert : g_certificates) {
    const std::string tag = "F_" + std::to_string(cert.field.modulus()) + " a = " + to_string(cert.a);
    t.expect(witness_shape(cert, cert.alpha1, cert.gamma1, cert.e), tag + ": alpha1 witness");
    t.expect(witness_shape(cert, cert.alpha2, cert.gamma2, 2), tag + ": alpha2 witness");
    const RamificationType r1 = ramification_type(specialize(cert, cert.alpha1), cert.field.modulus());
    const RamificationType r2 = ramification_type(specialize(cert, cert.alpha2), cert.field.modulus());
    t.expect(r1.valid_inertia() && r1.exponents.front() == cert.e, tag + ": alpha1 inertia");
    t.expect(r2.valid_inertia() && r2.exponents.front() == 2, tag + ": alpha2 inertia");
  }

  // Characteristic 2: the construction is out of reach, the transposition flag is not.
  std::size_t p2_trials = 0;
  const PrimeField F2(2);
  for (const Poly& a : oracle::all_polys_of_degree(F2, 1)) {
    ++p2_trials;
    ErrorCode code = ErrorCode::PreconditionViolated;
    try {
      build_stable(a, Poly(F2, {1}), 7);
    } catch (const Error& e) {
      code = e.code();
    }
    t.expect(code == ErrorCode::FieldTooSmall, "p = 2 build with a = " + to_string(a));
  }
  const Poly x = Poly::x(F2);
  const RamificationType wild = ramification_type(x * x * Poly(F2, {1, 1, 0, 1}) * Poly(F2, {1, 1}), 2);
  t.expect(wild.wild_exception && wild.valid_inertia() && !wild.tame_flags.front(), "p = 2 transposition flag");
  const RamificationType not_wild = ramification_type(x * x * x * x * Poly(F2, {1, 1}), 2);
  t.expect(!not_wild.wild_exception && !not_wild.valid_inertia(), "p = 2 exponent 4 is not a transposition");

  return {t.ok() && !g_certificates.empty(),
          t.describe(std::to_string(g_certificates.size()) + " certificates show (X-gamma1)^e and (X-gamma2)^2 witnesses; " +
                     std::to_string(p2_trials) + " p = 2 builds give FieldTooSmall; transposition flag set")};
}

Verdict ac8() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "progressio_acceptance";
  fs::create_directories(dir);
  Tally t;
  std::string outputs[2][2];
  for (int run = 0; run < 2; ++run) {
    const fs::path cert = dir / ("cert" + std::to_string(run) + ".txt");
    const fs::path hits = dir / ("search" + std::to_string(run) + ".csv");
    std::ostringstream out, err;
    const int c1 = cli::run({"construct", "-p", "1009", "-a", "X^3+2*X+5", "-b", "X^2+1", "-n", "13", "--seed", "99",
                             "-o", cert.string()},
                            out, err);
    const int c2 = cli::run({"search", "-p", "1009", "-a", "X^3+2*X+5", "-b", "X^2+1", "-n", "13", "--seed", "99",
                             "--strategy", "constructed", "--format", "text", "-o", hits.string()},
                            out, err);
    t.expect(c1 == cli::kOk && c2 == cli::kOk, "run " + std::to_string(run) + ": " + err.str());
    outputs[run][0] = slurp(cert);
    outputs[run][1] = slurp(hits);
  }
  t.expect(!outputs[0][0].empty() && outputs[0][0] == outputs[1][0], "construct output differs");
  t.expect(!outputs[0][1].empty() && outputs[0][1] == outputs[1][1], "search output differs");
  return {t.ok(), t.describe("construct and search outputs byte-identical across two runs")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit_seconds;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", 1, ac1}, {"AC2", 30, ac2}, {"AC3", 120, ac3}, {"AC4", 120, ac4},
      {"AC5", 1, ac5}, {"AC6", 60, ac6}, {"AC7", 60, ac7},  {"AC8", 10, ac8},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("uncaught: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      v.ok = false;
      v.summary += " [over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit]";
    }
    all = all && v.ok;
    std::cout << c.id << ' ' << (v.ok ? "PASS" : "FAIL") << ' ' << std::fixed << std::setprecision(2) << secs << "s "
              << v.summary << std::endl;
  }
  return all ? 0 : 1;
}
