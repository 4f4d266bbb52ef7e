#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "mtc/cyclotomic.hpp"
#include "mtc/dft.hpp"
#include "support/generators.hpp"

using namespace mtc;
using mtc::testing::Gen;

namespace {

int legendre13(int k) {
  static const int residues[] = {1, 3, 4, 9, 10, 12};
  for (int r : residues)
    if (k % 13 == r) return 1;
  return -1;
}

Cyclotomic gauss13() {
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (int k = 1; k <= 12; ++k) terms.emplace_back(k, Rational(legendre13(k)));
  return Cyclotomic::from_terms(13, terms);
}

std::complex<long double> zeta(long double n, long double k) {
  const long double a = 2.0L * std::numbers::pi_v<long double> * k / n;
  return {std::cos(a), std::sin(a)};
}

bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-9L) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("root_of_unity constructor", "[cyclo]") {
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(12, 4) == Cyclotomic::root_of_unity(3, 1));
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), DomainError);
}

TEST_CASE("basic arithmetic", "[cyclo]") {
  const auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(Cyclotomic(Rational(1, 2)) + Cyclotomic(Rational(1, 3)) == Cyclotomic(Rational(5, 6)));
  CHECK((i - i).is_zero());
  CHECK((i + 1) * (i - 1) == Cyclotomic(-2));
}

TEST_CASE("Gauss sum over Z/13 squares to 13", "[cyclo]") {
  // oracle: expand the 144-term product by hand as exponent counts mod 13
  int counts[13] = {};
  for (int j = 1; j <= 12; ++j)
    for (int k = 1; k <= 12; ++k) counts[(j + k) % 13] += legendre13(j) * legendre13(k);
  for (int r = 2; r < 13; ++r) REQUIRE(counts[r] == counts[1]);  // Σ ζ^r = 0 collapses them
  const int oracle = counts[0] - counts[1];
  REQUIRE(oracle == 13);

  const auto g = gauss13();
  CHECK(g * g == Cyclotomic(oracle));
  CHECK(close(g.to_complex(), std::sqrt(13.0L)));
}

TEST_CASE("inverse", "[cyclo]") {
  CHECK(Cyclotomic::root_of_unity(5, 1).inverse() == Cyclotomic::root_of_unity(5, 4));
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  const auto x = Cyclotomic(1) + Cyclotomic::root_of_unity(3, 1);
  CHECK(x * x.inverse() == Cyclotomic(1));
  CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
}

TEST_CASE("galois_apply", "[cyclo]") {
  CHECK(galois_apply(Cyclotomic::root_of_unity(3, 1), 2, 3) == Cyclotomic::root_of_unity(3, 2));
  CHECK(galois_apply(Cyclotomic(Rational(7, 3)), 5, 12) == Cyclotomic(Rational(7, 3)));
  const auto g = gauss13();
  const auto image = galois_apply(g, 2, 13);
  CHECK(image == -g);
  CHECK(close(image.to_complex(), -std::sqrt(13.0L)));
  CHECK_THROWS_AS(galois_apply(g, 13, 13), DomainError);
  // ζ_12 does not live in ℚ(ζ_6)
  CHECK_THROWS_AS(galois_apply(Cyclotomic::root_of_unity(12, 1), 5, 6), DescentError);
}

TEST_CASE("descend", "[cyclo]") {
  const auto minus_one = Cyclotomic(-1).embed(12);
  REQUIRE(minus_one.order() == 12);
  const auto d = descend(minus_one, 1);
  CHECK(d.order() == 1);
  CHECK(d == Cyclotomic(-1));

  const auto z = descend(Cyclotomic::root_of_unity(12, 2), 6);
  CHECK(z.order() == 6);
  CHECK(z == Cyclotomic::root_of_unity(6, 1));

  CHECK_THROWS_AS(descend(Cyclotomic::root_of_unity(12, 1), 6), DescentError);
  CHECK_FALSE(try_descend(Cyclotomic::root_of_unity(12, 1), 6).has_value());

  // non-monomial embeddings: ℚ(ζ_3) inside ℚ(ζ_15), ℚ(ζ_5) inside ℚ(ζ_10)
  const auto w = Cyclotomic::root_of_unity(3, 1) + Cyclotomic(Rational(2, 7));
  const auto back = descend(w.embed(15), 3);
  CHECK(back.order() == 3);
  CHECK(back == w);
  CHECK(descend(Cyclotomic::root_of_unity(10, 2), 5) == Cyclotomic::root_of_unity(5, 1));
  CHECK(conductor(Cyclotomic::root_of_unity(10, 1)) == 5);
  CHECK(conductor(Cyclotomic::root_of_unity(78, 13)) == 3);
}

TEST_CASE("recognize", "[cyclo]") {
  const auto x = -Cyclotomic::root_of_unity(78, 13);
  const auto r = recognize(x);
  CHECK(r.kind == Recognition::Kind::root_multiple);
  REQUIRE(r.is_root_of_unity());
  // canonical reduced pair of ζ_78^52
  CHECK(*r.root == RootOfUnity(78, 52));
  CHECK(r.root->order() == 3);
  CHECK(r.root->exponent() == 2);

  const auto t = recognize(Cyclotomic(13));
  CHECK(t.kind == Recognition::Kind::integer);
  CHECK(*t.rational == Rational(13));

  const auto h = recognize(Cyclotomic(Rational(-3, 4)));
  CHECK(h.kind == Recognition::Kind::rational);
  CHECK(*h.factor == Rational(3, 4));
  CHECK(*h.root == RootOfUnity(2, 1));

  // |1 + ζ_5| = golden ratio, so not a rational multiple of a root of unity
  const auto o = recognize(Cyclotomic(1) + Cyclotomic::root_of_unity(5, 1));
  CHECK(o.kind == Recognition::Kind::other);
  const auto norm = (Cyclotomic(1) + Cyclotomic::root_of_unity(5, 1)) *
                    (Cyclotomic(1) + Cyclotomic::root_of_unity(5, 4));
  CHECK_FALSE(norm.is_rational());

  const auto scaled = Cyclotomic(Rational(5, 2)) * Cyclotomic::root_of_unity(7, 3);
  const auto s = recognize(scaled);
  CHECK(s.kind == Recognition::Kind::root_multiple);
  CHECK(*s.factor == Rational(5, 2));
  CHECK(*s.root == RootOfUnity(7, 3));
  CHECK(recognize(Cyclotomic()).kind == Recognition::Kind::zero);
}

TEST_CASE("canonical text", "[cyclo]") {
  CHECK(to_string(Cyclotomic::root_of_unity(4, 1)) == "E(4)");
  CHECK(to_string(Cyclotomic(Rational(-5, 3))) == "-5/3");
  CHECK(to_string(Cyclotomic()) == "0");
  // ζ_6 = 1 + ζ_3^... reduced at conductor 3: ζ_6 = -ζ_3^2 = 1 + ζ_3
  CHECK(to_string(Cyclotomic::root_of_unity(6, 1)) == "1 + E(3)");
  CHECK(to_string(Cyclotomic(Rational(1, 3)) * Cyclotomic::root_of_unity(13, 2) -
                  Cyclotomic::root_of_unity(13, 11)) == "1/3*E(13)^2 - E(13)^11");
  CHECK(to_string(RootOfUnity(6, 5)) == "E(6)^5");
  CHECK(to_string(RootOfUnity()) == "1");
}

TEST_CASE("RootOfUnity", "[cyclo]") {
  const RootOfUnity a(78, 52);
  CHECK(a.order() == 3);
  CHECK(a.exponent() == 2);
  CHECK(RootOfUnity(4, 1) * RootOfUnity(4, 1) == RootOfUnity(2, 1));
  CHECK(RootOfUnity(3, 1).inverse() == RootOfUnity(3, 2));
  CHECK(RootOfUnity(3, 1).pow(3).is_one());
  CHECK_THROWS_AS(RootOfUnity(0, 1), DomainError);

  // principal square roots have argument in (-π/2, π/2]
  CHECK(RootOfUnity(3, 2).principal_root(2) == RootOfUnity(6, -1));
  CHECK(RootOfUnity(2, 1).principal_root(2) == RootOfUnity(4, 1));
  const auto roots = RootOfUnity(13, 6).nth_roots(2);
  REQUIRE(roots.size() == 2);
  CHECK(roots[1] == RootOfUnity(13, 3));
  CHECK(roots[0] == RootOfUnity(26, 6 + 13));
  for (const auto& r : RootOfUnity(39, 7).nth_roots(4)) CHECK(r.pow(4) == RootOfUnity(39, 7));
  CHECK(a.value() == Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("field axioms on random samples", "[cyclo][property]") {
  Gen gen(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    // divisors of 1560 keep every lcm under the order cap
    static const std::uint32_t orders[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 20, 24, 26, 39, 40, 52, 65, 78, 120};
    auto pick = [&] { return orders[gen.integer(0, std::size(orders) - 1)]; };
    const auto n1 = pick(), n2 = pick(), n3 = pick();
    const auto x = gen.cyclotomic(n1), y = gen.cyclotomic(n2), z = gen.cyclotomic(n3);
    INFO("orders " << n1 << " " << n2 << " " << n3);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + Cyclotomic() == x);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Cyclotomic(1));
  }
}

TEST_CASE("embedding then descent is the identity", "[cyclo][property]") {
  Gen gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = gen.order(30);
    const auto mult = static_cast<std::uint32_t>(gen.integer(1, 6));
    const auto x = gen.cyclotomic(n);
    const auto big = x.embed(n * mult);
    const auto back = descend(big, n);
    CHECK(back == x);
    CHECK(back.order() == (x.is_rational() ? 1u : n));
  }
}

TEST_CASE("galois composition and conjugation", "[cyclo][property]") {
  Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = static_cast<std::uint32_t>(gen.integer(3, 60));
    const auto x = gen.cyclotomic(m), y = gen.cyclotomic(m);
    std::int64_t k1, k2;
    do k1 = gen.integer(1, m - 1); while (std::gcd<std::int64_t>(k1, m) != 1);
    do k2 = gen.integer(1, m - 1); while (std::gcd<std::int64_t>(k2, m) != 1);
    CHECK(galois_apply(galois_apply(x, k2, m), k1, m) == galois_apply(x, (k1 * k2) % m, m));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(close(x.conj().to_complex(), std::conj(x.to_complex())));
  }
}

TEST_CASE("exact results agree with complex floats", "[cyclo][property]") {
  Gen gen(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = gen.order(100), m = gen.order(100);
    // build matching float values from the same random terms
    std::vector<std::pair<std::int64_t, Rational>> ta, tb;
    std::complex<long double> fa = 0, fb = 0;
    for (int i = 0; i < 3; ++i) {
      auto k = gen.integer(0, n - 1);
      auto c = gen.rational();
      ta.emplace_back(k, c);
      fa += c.to_long_double() * zeta(n, k);
      auto k2 = gen.integer(0, m - 1);
      auto c2 = gen.rational();
      tb.emplace_back(k2, c2);
      fb += c2.to_long_double() * zeta(m, k2);
    }
    const auto a = Cyclotomic::from_terms(n, ta), b = Cyclotomic::from_terms(m, tb);
    INFO("orders " << n << " " << m);
    CHECK(close(a.to_complex(), fa));
    CHECK(close((a * b).to_complex(), fa * fb));
    CHECK(close((a - b).to_complex(), fa - fb));
  }
}

TEST_CASE("DFT roundtrip on rational vectors", "[cyclo][dft]") {
  Gen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 12));
    std::vector<Cyclotomic> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(gen.rational());
    CHECK(inverse_dft(dft(x)) == x);
  }
  // traces of diag(ζ_4, ζ_4, -1): multiplicities (2 of ζ_4, 1 of ζ_4^2)
  std::vector<Cyclotomic> traces;
  for (int k = 1; k <= 4; ++k)
    traces.push_back(Cyclotomic(2) * Cyclotomic::root_of_unity(4, k) + Cyclotomic::root_of_unity(2, k));
  const auto mult = multiplicities_from_traces(traces);
  CHECK(mult == std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)});
}

TEST_CASE("order cap", "[cyclo]") {
  const auto saved = order_cap();
  set_order_cap(50);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(51, 1), OrderCapExceeded);
  set_order_cap(saved);
  CHECK_NOTHROW(Cyclotomic::root_of_unity(51, 1));
}
