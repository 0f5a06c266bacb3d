#include "progressio/poly.hpp"

#include <algorithm>
#include <string>

#include "progressio/error.hpp"

namespace progressio {

namespace {

constexpr std::size_t kKaratsubaThreshold = 64;

using Coeffs = std::vector<FieldElem>;

Coeffs schoolbook(std::span<const FieldElem> f, std::span<const FieldElem> g, const PrimeField& F) {
  if (f.empty() || g.empty()) return {};
  Coeffs out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(f[i], g[j]));
    }
  }
  return out;
}

void add_into(Coeffs& dst, std::span<const FieldElem> src, std::size_t offset, const PrimeField& F) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] = F.add(dst[offset + i], src[i]);
}

void sub_into(Coeffs& dst, std::span<const FieldElem> src, const PrimeField& F) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = F.sub(dst[i], src[i]);
}

Coeffs karatsuba(std::span<const FieldElem> f, std::span<const FieldElem> g, const PrimeField& F) {
  if (f.size() < kKaratsubaThreshold || g.size() < kKaratsubaThreshold) return schoolbook(f, g, F);
  const std::size_t half = std::max(f.size(), g.size()) / 2;
  auto lo = [half](std::span<const FieldElem> s) { return s.first(std::min(half, s.size())); };
  auto hi = [half](std::span<const FieldElem> s) {
    return s.size() > half ? s.subspan(half) : std::span<const FieldElem>{};
  };
  const auto f0 = lo(f), f1 = hi(f), g0 = lo(g), g1 = hi(g);

  Coeffs z0 = karatsuba(f0, g0, F);
  Coeffs z2 = karatsuba(f1, g1, F);
  Coeffs fs(f0.begin(), f0.end()), gs(g0.begin(), g0.end());
  add_into(fs, f1, 0, F);
  add_into(gs, g1, 0, F);
  Coeffs z1 = karatsuba(fs, gs, F);
  sub_into(z1, z0, F);
  sub_into(z1, z2, F);

  Coeffs out(f.size() + g.size() - 1);
  add_into(out, z0, 0, F);
  add_into(out, z1, half, F);
  add_into(out, z2, 2 * half, F);
  out.resize(f.size() + g.size() - 1);
  return out;
}

}  // namespace

Poly::Poly(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.from_unsigned(c.value);
  normalize();
}

Poly::Poly(PrimeField field, std::initializer_list<std::int64_t> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(field_.elem(c));
  normalize();
}

Poly Poly::constant(PrimeField field, FieldElem c) { return Poly(field, std::vector<FieldElem>{c}); }

Poly Poly::monomial(PrimeField field, FieldElem c, std::size_t k) {
  std::vector<FieldElem> v(k + 1);
  v[k] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear_root(PrimeField field, FieldElem root) {
  return Poly(field, std::vector<FieldElem>{field.neg(root), FieldElem{1}});
}

void Poly::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, "operands over F_" + std::to_string(field_.modulus()) +
                                              " and F_" + std::to_string(other.field_.modulus()));
  }
}

Degree Poly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Poly::deg() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monic of the zero polynomial");
  return scaled(field_.inv(lc()));
}

Poly Poly::scaled(FieldElem s) const {
  Poly out(field_);
  if (s.is_zero()) return out;
  out.coeffs_.reserve(coeffs_.size());
  for (FieldElem c : coeffs_) out.coeffs_.push_back(field_.mul(c, s));
  return out;
}

FieldElem Poly::eval(FieldElem x) const noexcept {
  FieldElem acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.require_same_field(rhs);
  return Poly(lhs.field_, karatsuba(lhs.coeffs_, rhs.coeffs_, lhs.field_));
}

Poly schoolbook_mul(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "schoolbook_mul operands");
  return Poly(f.field(), schoolbook(f.coeffs(), g.coeffs(), f.field()));
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = field_.neg(c);
  return out;
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).quotient; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).remainder; }

bool graded_less(const Poly& lhs, const Poly& rhs) noexcept {
  if (lhs.coeffs_.size() != rhs.coeffs_.size()) return lhs.coeffs_.size() < rhs.coeffs_.size();
  return std::lexicographical_compare(lhs.coeffs_.rbegin(), lhs.coeffs_.rend(), rhs.coeffs_.rbegin(),
                                      rhs.coeffs_.rend());
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "divmod operands");
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const PrimeField& F = f.field();
  if (f.size() < g.size()) return {Poly(F), f};

  std::vector<FieldElem> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const FieldElem lead_inv = F.inv(gc.back());
  std::vector<FieldElem> quo(rem.size() - dg);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const FieldElem q = F.mul(rem[k + dg], lead_inv);
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] = F.sub(rem[k + j], F.mul(q, gc[j]));
  }
  rem.resize(dg);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Xgcd xgcd(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "xgcd operands");
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "xgcd(0, 0)");
  const PrimeField& F = f.field();

  // Invariant: r_i = s_i*f + t_i*g.
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(F, FieldElem{1}), s1(F);
  Poly t0(F), t1 = Poly::constant(F, FieldElem{1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    Poly s = s0 - q * s1;
    s0 = std::exchange(s1, std::move(s));
    Poly t = t0 - q * t1;
    t0 = std::exchange(t1, std::move(t));
  }
  const FieldElem norm = F.inv(r0.lc());
  return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) throw Error(ErrorCode::FieldMismatch, "gcd operands");
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0)");
  Poly a = f, b = g;
  while (!b.is_zero()) a = std::exchange(b, a % b);
  return a.monic();
}

bool coprime(const Poly& f, const Poly& g) { return gcd(f, g).is_one(); }

Poly derivative(const Poly& f) {
  const PrimeField& F = f.field();
  if (f.size() <= 1) return Poly(F);
  std::vector<FieldElem> out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = F.mul(F.from_unsigned(i), f[i]);
  return Poly(F, std::move(out));
}

bool is_separable(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "separability of the zero polynomial");
  if (f.is_constant()) return true;
  const Poly df = derivative(f);
  if (df.is_zero()) return false;
  return coprime(f, df);
}

Poly pow(const Poly& f, std::uint64_t k) {
  Poly result = Poly::constant(f.field(), FieldElem{1});
  Poly base = f;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& modulus) { return (f * g) % modulus; }

Poly powmod(const Poly& base, std::uint64_t k, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), FieldElem{1}) % modulus;
  Poly b = base % modulus;
  while (k != 0) {
    if (k & 1U) result = mulmod(result, b, modulus);
    k >>= 1U;
    if (k != 0) b = mulmod(b, b, modulus);
  }
  return result;
}

}  // namespace progressio
