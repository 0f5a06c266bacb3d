#include <doctest.h>

#include "progressio/dirichlet.hpp"
#include "progressio/factor.hpp"
#include "progressio/galois.hpp"
#include "test_util.hpp"

using namespace progressio;
using progressio::testing::code_of;
using progressio::testing::P;

namespace {

void check_hits(const SearchReport& r) {
  for (const Hit& h : r.hits) {
    REQUIRE(h.member == r.a + r.b * h.c);
    REQUIRE(h.member.deg() == r.n);
    REQUIRE(is_irreducible(h.member));
  }
}

}  // namespace

TEST_CASE("constructed scan") {
  SUBCASE("small field") {
    const SearchReport r = search_constructed(P(7, "X+1"), P(7, "1"), 9, 16);
    REQUIRE(r.certificate.has_value());
    CHECK(verify_certificate(*r.certificate).ok);
    CHECK(r.strategy == SearchStrategy::ConstructedScan);
    CHECK(r.scanned <= 6);
    check_hits(r);
  }
  SUBCASE("larger prime, nontrivial b") {
    const SearchReport r = search_constructed(P(1009, "X^2+3"), P(1009, "X+5"), 11, 5, 7);
    CHECK(r.hits.size() == 5);
    CHECK(r.seed == 7);
    check_hits(r);
  }
  SUBCASE("no hits requested") {
    const SearchReport r = search_constructed(P(7, "X+1"), P(7, "1"), 9, 0);
    CHECK(r.scanned == 0);
    CHECK(r.hits.empty());
    CHECK(r.density() == Rational{0, 1});
  }
  SUBCASE("bad pencils") {
    CHECK(code_of([] { search_constructed(P(7, "X^2-1"), P(7, "X+1"), 9, 4); }) ==
          ErrorCode::PreconditionViolated);
    CHECK(code_of([] { search_constructed(P(7, "X"), P(7, "0"), 9, 4); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { search_constructed(P(7, "X"), P(5, "1"), 9, 4); }) == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("exhaustive search") {
  SUBCASE("F_3, b = X^2+1") {
    const SearchReport r = search_exhaustive(P(3, "X+1"), P(3, "X^2+1"), 4);
    CHECK_FALSE(r.hits.empty());
    CHECK(r.scanned == 2 * 3 * 3);  // c of exact degree 2
    check_hits(r);
    CHECK(std::is_sorted(r.hits.begin(), r.hits.end(),
                         [](const Hit& x, const Hit& y) { return graded_less(x.c, y.c); }));
  }
  SUBCASE("deg a above n") {
    const SearchReport r = search_exhaustive(P(3, "X^2"), P(3, "1"), 1);
    CHECK(r.hits.size() == 6);  // c = -X^2 + u*X + v, u != 0
    check_hits(r);
  }
  SUBCASE("n below deg b") {
    const SearchReport r = search_exhaustive(P(5, "1"), P(5, "X^3+X+1"), 2);
    CHECK(r.hits.empty());
    CHECK(r.scanned == 0);
  }
  SUBCASE("size guard") {
    CHECK(code_of([] { search_exhaustive(P(101, "X"), P(101, "1"), 4); }) == ErrorCode::TooLarge);
  }
  SUBCASE("thread count does not change the result") {
    const SearchReport one = search_exhaustive(P(5, "X+2"), P(5, "X"), 5, 1);
    const SearchReport four = search_exhaustive(P(5, "X+2"), P(5, "X"), 5, 4);
    CHECK(one.scanned == four.scanned);
    REQUIRE(one.hits.size() == four.hits.size());
    for (std::size_t i = 0; i < one.hits.size(); ++i) CHECK(one.hits[i].c == four.hits[i].c);
  }
  SUBCASE("constructed hits are among the exhaustive hits") {
    const Poly a = P(5, "X+1"), b = P(5, "1");
    const SearchReport all = search_exhaustive(a, b, 7);
    const SearchReport some = search_constructed(a, b, 7, 100);
    for (const Hit& h : some.hits) {
      CHECK(std::any_of(all.hits.begin(), all.hits.end(), [&](const Hit& x) { return x.c == h.c; }));
    }
  }
}

TEST_CASE("random search") {
  const SearchReport r = search_random(P(11, "X"), P(11, "X+1"), 6, 500, 10, 3);
  CHECK(r.hits.size() == 10);
  check_hits(r);
  const SearchReport again = search_random(P(11, "X"), P(11, "X+1"), 6, 500, 10, 3);
  REQUIRE(again.hits.size() == r.hits.size());
  for (std::size_t i = 0; i < r.hits.size(); ++i) CHECK(again.hits[i].c == r.hits[i].c);
}

TEST_CASE("density scan") {
  const StableCertificate cert = build_stable(P(101, "X+1"), P(101, "1"), 7);
  const DensityResult d = density_scan(cert, 2);
  CHECK(d.p == 101);
  CHECK(d.n == 7);
  CHECK(d.count <= 100);
  CHECK(d.expected == Rational{101, 7});
  CHECK(d.ratio == Rational::make(d.count * 7, 101));
  CHECK(density_scan(cert, 1).count == d.count);

  std::uint64_t brute = 0;
  for (std::uint64_t v = 1; v < 101; ++v) {
    const Poly f = specialize(cert, FieldElem{v});
    if (f.deg() == 7 && is_irreducible(f)) ++brute;
  }
  CHECK(d.count == brute);

  StableCertificate bad = cert;
  bad.n = 8;
  CHECK(code_of([&] { density_scan(bad); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("formats") {
  CHECK(to_string(SearchStrategy::Exhaustive) == "exhaustive");
  CHECK(Rational::make(6, 4) == Rational{3, 2});
  CHECK(code_of([] { Rational::make(1, 0); }) == ErrorCode::DivisionByZero);

  const SearchReport r = search_exhaustive(P(3, "X+1"), P(3, "X^2+1"), 4);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("strategy,p,n,scanned,hits,density\nexhaustive,3,4,18,", 0) == 0);
  CHECK_FALSE(to_text(r).empty());
}
