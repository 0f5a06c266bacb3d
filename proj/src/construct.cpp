#include "progressio/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "progressio/error.hpp"
#include "progressio/factor.hpp"

namespace progressio {

namespace {

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); }

void require_same_field(const Poly& f, const Poly& g, const char* where) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, where);
}

std::size_t deg_or_zero(const Poly& f) { return f.is_zero() ? 0 : f.deg(); }

bool prime_to(std::size_t e, std::size_t n, std::uint64_t p) { return std::gcd(e, n) == 1 && e % p != 0; }

// The particular solution of a = p_i*h_{i,1} + alpha_i*b*cbar.
struct Particular {
  Poly cbar;
  Poly h11, h21;
};

// a = P*h0 + alpha*b*Q*ci with deg ci < deg P.
std::pair<Poly, Poly> solve_local(const Poly& a, const Poly& b, const Poly& P, const Poly& Q, FieldElem alpha) {
  const PrimeField& F = a.field();
  const Poly abq = alpha * (b * Q);
  Poly ci(F);
  if (!P.is_constant()) {
    const Xgcd g = xgcd(abq % P, P);
    ci = (a * g.u) % P;
  }
  auto [h0, r] = divmod(a - abq * ci, P);
  if (!r.is_zero()) precondition("Bezout step left a nonzero remainder");
  return {std::move(ci), std::move(h0)};
}

Particular particular_solution(const Poly& a, const Poly& b, const Poly& p1, const Poly& p2, FieldElem alpha1,
                               FieldElem alpha2) {
  auto [c1, h10] = solve_local(a, b, p1, p2, alpha1);
  auto [c2, h20] = solve_local(a, b, p2, p1, alpha2);
  Poly cbar = p1 * c2 + p2 * c1;
  Poly h11 = h10 - alpha1 * (b * c2);
  Poly h21 = h20 - alpha2 * (b * c1);
  return {std::move(cbar), std::move(h11), std::move(h21)};
}

bool admissible_h(const Poly& h, const Poly& a_times_p) {
  return !h.is_zero() && is_separable(h) && coprime(h, a_times_p);
}

}  // namespace

Pencil::Pencil(Poly a, Poly b) : a_(std::move(a)), b_(std::move(b)) {
  require_same_field(a_, b_, "pencil operands");
  if (b_.is_zero()) precondition("pencil needs b != 0");
  if (!coprime(a_, b_)) precondition("pencil needs gcd(a, b) = 1");
}

std::size_t stable_m(const Poly& a, const Poly& b) {
  const std::size_t from_b = b.is_zero() ? 0 : 2 + b.deg();
  return std::max(deg_or_zero(a), from_b);
}

std::size_t choose_e(std::size_t n, std::size_t m, std::uint64_t p) {
  if (n < 1) throw Error(ErrorCode::NoValidE, "n must be positive");
  for (std::size_t e = n / 2 + 1; e + m < n; ++e) {
    if (prime_to(e, n, p)) return e;
  }
  throw Error(ErrorCode::NoValidE, "no e with " + std::to_string(n) + "/2 < e < " + std::to_string(n) + " - " +
                                       std::to_string(m) + " and gcd(e, " + std::to_string(n) + "*" +
                                       std::to_string(p) + ") = 1");
}

std::optional<std::size_t> case_analysis_e(std::size_t n, std::uint64_t p) {
  if (n < 2) return std::nullopt;
  auto divides_n = [n](std::uint64_t q) { return n % q == 0; };
  std::size_t e = 0;
  if (n % 2 == 1) {
    e = (n + 1) / 2;
  } else if (n % 4 == 0) {
    e = n / 2 + 1;
  } else {
    e = n / 2 + 2;
  }
  if (e % p != 0) return e;

  if (n % 4 == 2) return e + 2;
  if (n % 4 == 0) {
    std::uint64_t q = 2;
    while (!is_prime(q) || divides_n(q)) ++q;
    return n / 2 + q;
  }
  std::uint64_t q = 3;
  while (!is_prime(q) || divides_n(q) || (p == 2 && q % 4 != n % 4)) q += 2;
  return (n + q) / 2;
}

bool pencil_irreducible(const Poly& a, const Poly& b) {
  require_same_field(a, b, "pencil operands");
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "pencil with a = b = 0");
  return coprime(a, b);
}

FieldElem find_shift(const Poly& a, const Poly& b, const Poly& avoid, bool require_separable,
                     const std::set<FieldElem>& exclude) {
  require_same_field(a, b, "find_shift operands");
  require_same_field(a, avoid, "find_shift operands");
  if (avoid.is_zero()) precondition("find_shift needs avoid != 0");
  if (!pencil_irreducible(a, b)) precondition("find_shift needs gcd(a, b) = 1");
  if (require_separable && derivative(a).is_zero() && derivative(b).is_zero()) {
    precondition("separable shift requested but a' = b' = 0");
  }
  const PrimeField& F = a.field();
  for (std::uint64_t v = 0; v < F.modulus(); ++v) {
    const FieldElem alpha{v};
    if (exclude.contains(alpha)) continue;
    const Poly shifted = a + alpha * b;
    if (shifted.is_zero() || !coprime(shifted, avoid)) continue;
    if (require_separable && !is_separable(shifted)) continue;
    return alpha;
  }
  throw Error(ErrorCode::FieldExhausted, "every shift in F_" + std::to_string(F.modulus()) + " fails");
}

BuiltC build_c(const Poly& a, const Poly& b, const Poly& p1, const Poly& p2, FieldElem alpha1, FieldElem alpha2,
               std::size_t target_deg_c, std::uint64_t seed) {
  require_same_field(a, b, "build_c operands");
  require_same_field(a, p1, "build_c operands");
  require_same_field(a, p2, "build_c operands");
  const PrimeField& F = a.field();
  for (const Poly* f : {&a, &b, &p1, &p2}) {
    if (f->is_zero()) precondition("build_c inputs must be nonzero");
  }
  if (!coprime(a, b) || !coprime(a, p1) || !coprime(a, p2) || !coprime(b, p1) || !coprime(b, p2) ||
      !coprime(p1, p2)) {
    precondition("build_c needs a, b, p1, p2 pairwise coprime");
  }
  if (alpha1.is_zero() || alpha2.is_zero() || alpha1 == alpha2) {
    precondition("build_c needs distinct nonzero alpha1, alpha2");
  }
  const std::size_t base_deg = p1.deg() + p2.deg();
  if (target_deg_c <= base_deg) {
    precondition("target degree " + std::to_string(target_deg_c) + " must exceed deg p1 + deg p2 = " +
                 std::to_string(base_deg));
  }

  const Particular part = particular_solution(a, b, p1, p2, alpha1, alpha2);
  const std::size_t d = target_deg_c - base_deg;
  const Poly bp1 = b * p1, bp2 = b * p2;
  const Poly p1p2 = p1 * p2;
  const Poly ap1 = a * p1, ap2 = a * p2;
  const std::uint64_t p = F.modulus();

  for (std::uint64_t i = 0; i < p; ++i) {
    const FieldElem beta = F.from_unsigned(seed % p + i);
    const Poly head = pow(Poly::linear_root(F, beta), d - 1);
    for (std::uint64_t g = 0; g < p; ++g) {
      const Poly s0 = head * Poly::linear_root(F, FieldElem{g});
      if (derivative(bp1 * s0).is_zero() || derivative(bp2 * s0).is_zero()) continue;
      if (!coprime(s0, part.h11) || !coprime(s0, part.h21)) continue;
      const Poly t1 = alpha1 * (bp2 * s0);  // h1 = h11 - lambda*t1
      const Poly t2 = alpha2 * (bp1 * s0);
      for (std::uint64_t l = 1; l < p; ++l) {
        const FieldElem lambda{l};
        Poly h1 = part.h11 - lambda * t1;
        if (!admissible_h(h1, ap1)) continue;
        Poly h2 = part.h21 - lambda * t2;
        if (!admissible_h(h2, ap2)) continue;
        Poly c = part.cbar + lambda * (p1p2 * s0);
        if (c.degree() != Degree{target_deg_c}) continue;
        return {std::move(c), std::move(h1), std::move(h2)};
      }
    }
  }
  throw Error(ErrorCode::FieldExhausted, "no admissible s of degree " + std::to_string(d) + " over F_" +
                                             std::to_string(p));
}

StableCertificate build_stable(const Poly& a, const Poly& b, std::size_t n, std::uint64_t seed) {
  require_same_field(a, b, "build_stable operands");
  const PrimeField& F = a.field();
  if (a.is_zero() || b.is_zero()) precondition("build_stable needs a != 0 and b != 0");
  if (!coprime(a, b)) precondition("build_stable needs gcd(a, b) = 1");
  if (n <= a.deg() || n <= b.deg()) {
    precondition("n = " + std::to_string(n) + " must exceed deg a and deg b");
  }
  const std::uint64_t p = F.modulus();
  const std::size_t deg_ab = a.deg() + b.deg();
  if (p < deg_ab + 4) {
    throw Error(ErrorCode::FieldTooSmall,
                "F_" + std::to_string(p) + " needs p >= deg(a*b) + 4 = " + std::to_string(deg_ab + 4));
  }

  const std::size_t m = stable_m(a, b);
  const std::size_t e = choose_e(n, m, p);

  std::vector<FieldElem> gammas;
  for (std::uint64_t v = 0; v < p && gammas.size() < 2; ++v) {
    const FieldElem g{v};
    if (!a.eval(g).is_zero() && !b.eval(g).is_zero()) gammas.push_back(g);
  }
  const FieldElem gamma1 = gammas[0], gamma2 = gammas[1];
  const Poly p1 = pow(Poly::linear_root(F, gamma1), e);
  const Poly p2 = pow(Poly::linear_root(F, gamma2), 2);
  const std::size_t target = n - b.deg();

  auto attempt = [&](FieldElem alpha1, FieldElem alpha2) -> std::optional<StableCertificate> {
    try {
      BuiltC built = build_c(a, b, p1, p2, alpha1, alpha2, target, seed);
      // a = p_i*h_i + alpha_i*b*c turns into a + alpha_i*b*(-c) = p_i*h_i.
      return StableCertificate{F,      a,      b,      -built.c,  n, m, e, alpha1, alpha2,
                               gamma1, gamma2, std::move(built.h1), std::move(built.h2)};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::FieldExhausted) throw;
      return std::nullopt;
    }
  };
  // (1, 2) first, then the remaining ordered pairs lexicographically.
  if (auto cert = attempt(FieldElem{1}, FieldElem{2})) return std::move(*cert);
  for (std::uint64_t x = 1; x < p; ++x) {
    for (std::uint64_t y = 1; y < p; ++y) {
      if (x == y || (x == 1 && y == 2)) continue;
      if (auto cert = attempt(FieldElem{x}, FieldElem{y})) return std::move(*cert);
    }
  }
  throw Error(ErrorCode::FieldExhausted, "no (alpha1, alpha2) pair admits a construction over F_" +
                                             std::to_string(p));
}

VerifyReport verify_certificate(const StableCertificate& cert) {
  VerifyReport report;
  auto check = [&report](std::string_view name, bool ok) {
    if (!ok) {
      report.ok = false;
      report.violated.emplace_back(name);
    }
  };
  const PrimeField& F = cert.field;
  const std::uint64_t p = F.modulus();
  for (const Poly* f : {&cert.a, &cert.b, &cert.c, &cert.h1, &cert.h2}) {
    if (!(f->field() == F)) {
      report.ok = false;
      report.violated.emplace_back("field");
      return report;
    }
  }
  const auto& [field, a, b, c, n, m, e, alpha1, alpha2, gamma1, gamma2, h1, h2] = cert;
  (void)field;

  check(clause::kPencil, !b.is_zero() && !(a.is_zero() && b.is_zero()) && coprime(a, b));

  const Poly bc = b * c;
  const bool degrees = bc.degree() == Degree{n} && a.degree() < Degree{n} && m == stable_m(a, b) &&
                       e > n / 2 && e + m < n && prime_to(e, n, p) && !h1.is_zero() && !h2.is_zero() &&
                       e + h1.deg() == n && 2 + h2.deg() == n;
  check(clause::kDegree, degrees);

  const bool elems_ok = F.contains(alpha1) && F.contains(alpha2) && F.contains(gamma1) && F.contains(gamma2);
  if (e <= n && elems_ok) {
    check(clause::kIdentity1, a + alpha1 * bc == pow(Poly::linear_root(F, gamma1), e) * h1);
  } else {
    check(clause::kIdentity1, false);
  }
  if (elems_ok) {
    check(clause::kIdentity2, a + alpha2 * bc == pow(Poly::linear_root(F, gamma2), 2) * h2);
  } else {
    check(clause::kIdentity2, false);
  }

  check(clause::kSeparable, !h1.is_zero() && !h2.is_zero() && is_separable(h1) && is_separable(h2));
  const bool h_coprime = !h1.is_zero() && !h2.is_zero() && !a.is_zero() &&
                         coprime(h1, Poly::linear_root(F, gamma1) * a) &&
                         coprime(h2, Poly::linear_root(F, gamma2) * a);
  check(clause::kCoprimeH, h_coprime);
  check(clause::kAlphas, elems_ok && !alpha1.is_zero() && !alpha2.is_zero() && alpha1 != alpha2);
  const auto root_free = [&](FieldElem g) { return !a.eval(g).is_zero() && !b.eval(g).is_zero(); };
  check(clause::kGammas, elems_ok && gamma1 != gamma2 && root_free(gamma1) && root_free(gamma2));
  check(clause::kCoprimeAC, !(a.is_zero() && c.is_zero()) && coprime(a, c));
  return report;
}

}  // namespace progressio
