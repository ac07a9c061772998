// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/bloch.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

using namespace linkcomm;

namespace {

constexpr double kCatalan = 0.915965594177219015;
constexpr double kV1 = 4.0 * kCatalan;            // octahedron volume
constexpr double kV2 = 12.046092040094175;        // cuboctahedron volume

NumberFieldElement nfe_q(Rational a, Rational b, Rational c, Rational d) {
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

BoundaryPoint pt(long re_num, long re_den, long im_num, long im_den) {
  return BoundaryPoint(
      nfe_q(Rational(re_num, re_den), Rational(0), Rational(im_num, im_den), Rational(0)));
}

std::complex<double> random_upper(std::mt19937& rng) {
  std::uniform_real_distribution<double> re(-2.0, 2.0);
  std::uniform_real_distribution<double> im(0.05, 2.0);
  return {re(rng), im(rng)};
}

}  // namespace

TEST_CASE("orbit canonicalization") {
  const NumberFieldElement z = nfe_q(Rational(1, 2), 0, Rational(1, 2), 0);  // (1+i)/2
  const NumberFieldElement i = NumberFieldElement::i();
  // Orbit {(1+i)/2, i, 1+i}; lexicographic minimum is i.
  CHECK(orbit_canonical(z) == i);
  CHECK(orbit_canonical(i) == i);
  CHECK(orbit_canonical(nfe_q(1, 0, 1, 0)) == i);
  // A real representative canonicalizes consistently: orbit of 2 is
  // {2, 1/2, -1}; minimum is -1.
  CHECK(orbit_canonical(NumberFieldElement(2)) == NumberFieldElement(-1));
  CHECK_THROWS(orbit_canonical(NumberFieldElement(0)));
  CHECK_THROWS(orbit_canonical(NumberFieldElement(1)));
}

TEST_CASE("pre-Bloch formal sums") {
  PreBlochElement x;
  x.add(NumberFieldElement::i(), 2);
  x.add(nfe_q(Rational(1, 2), 0, Rational(1, 2), 0), 1);  // same orbit as i
  CHECK(x.terms.size() == 1);
  CHECK(x.terms.begin()->second == 3);

  PreBlochElement y;
  y.add(NumberFieldElement::i(), -3);
  CHECK((x + y).is_zero());
  CHECK((x - x).is_zero());
  CHECK((0 * x).is_zero());
  CHECK(2 * x == x + x);
  // mirror is an involution up to sign: mirror(mirror(x)) = x.
  CHECK(mirror(mirror(x)) == x);
}

TEST_CASE("cross ratio parameters") {
  const BoundaryPoint zero{NumberFieldElement(0)}, one{NumberFieldElement(1)},
      inf = BoundaryPoint::infinity();
  const BoundaryPoint apex = pt(1, 2, 1, 2);
  CHECK(cross_ratio_parameter(zero, one, inf, apex) == NumberFieldElement::i());
  // Mirror input: the conjugated tetrahedron carries the conjugate orbit.
  const BoundaryPoint apex_bar = pt(1, 2, -1, 2);
  CHECK(cross_ratio_parameter(zero, one, inf, apex_bar) ==
        orbit_canonical(nfe_q(Rational(1, 2), 0, Rational(-1, 2), 0)));
  // Flat tetrahedron parameter 2 canonicalizes within its real orbit.
  const BoundaryPoint two{NumberFieldElement(2)};
  CHECK(cross_ratio_parameter(zero, one, inf, two) == NumberFieldElement(-1));
  CHECK_THROWS(cross_ratio_parameter(zero, one, inf, one));
}

TEST_CASE("octahedron triangulation") {
  const PreBlochElement b1 = triangulate_P1();
  REQUIRE(b1.terms.size() == 1);
  CHECK(b1.terms.begin()->first == NumberFieldElement::i());
  CHECK(b1.terms.begin()->second == 4);
  const RegulatorVector r = borel_regulator(b1);
  CHECK(r.r1 == doctest::Approx(kV1).epsilon(1e-10));
  CHECK(r.r2 == doctest::Approx(kV1).epsilon(1e-10));
  // The mirror contributes the negated conjugate classes.
  const RegulatorVector rm = borel_regulator(mirror(b1));
  CHECK(rm.r1 == doctest::Approx(kV1).epsilon(1e-10));
}

TEST_CASE("cuboctahedron triangulation") {
  const PreBlochElement t = triangulate_P2();
  int total = 0;
  for (const auto& [z, c] : t.terms) {
    total += c;
    // Parameters lie in the subfield spanned by {1, i*sqrt2}.
    CHECK(z.b == 0);
    CHECK(z.c == 0);
  }
  CHECK(total == 14);  // 6 triangles + 2 per square away from infinity
  const RegulatorVector r = borel_regulator(t);
  CHECK(r.r1 == doctest::Approx(kV2).epsilon(1e-10));
  CHECK(r.r2 == doctest::Approx(-kV2).epsilon(1e-10));

  const RegulatorVector r2 = borel_regulator(beta2());
  CHECK(r2.r1 == doctest::Approx(2 * kV2).epsilon(1e-10));
  CHECK(r2.r2 == doctest::Approx(-2 * kV2).epsilon(1e-10));
}

TEST_CASE("chain invariant and regulator") {
  const PreBlochElement m1 = bloch_invariant_Mn(1);
  const PreBlochElement m2 = bloch_invariant_Mn(2);
  CHECK(m2 - m1 == beta2());
  for (int n = 1; n <= 8; ++n) {
    const RegulatorVector r = borel_regulator(bloch_invariant_Mn(n));
    CHECK(r.r1 == doctest::Approx(2 * kV1 + 2 * n * kV2).epsilon(1e-9));
    CHECK(r.r2 == doctest::Approx(2 * kV1 - 2 * n * kV2).epsilon(1e-9));
  }
}

TEST_CASE("Bloch-Wigner function") {
  CHECK(d2({2.0, 0.0}) == 0.0);
  CHECK(d2({-5.5, 0.0}) == 0.0);
  CHECK(d2({0.5, 0.5}) == doctest::Approx(kCatalan).epsilon(1e-12));
  CHECK(4 * d2({0.5, 0.5}) == doctest::Approx(3.663862377).epsilon(1e-9));

  std::mt19937 rng(20260825u);
  for (int k = 0; k < 100; ++k) {
    const std::complex<double> z = random_upper(rng);
    CHECK(d2(std::conj(z)) == doctest::Approx(-d2(z)).epsilon(1e-12));
    // Six-fold symmetry.
    const double v = d2(z);
    CHECK(d2(1.0 - 1.0 / z) == doctest::Approx(v).epsilon(1e-9));
    CHECK(d2(1.0 / (1.0 - z)) == doctest::Approx(v).epsilon(1e-9));
    CHECK(d2(1.0 / z) == doctest::Approx(-v).epsilon(1e-9));
    CHECK(d2(z / (z - 1.0)) == doctest::Approx(-v).epsilon(1e-9));
    CHECK(d2(1.0 - z) == doctest::Approx(-v).epsilon(1e-9));
  }
}

TEST_CASE("five-term relation under D2") {
  std::mt19937 rng(424242u);
  int done = 0;
  while (done < 200) {
    const std::complex<double> x = random_upper(rng), y = random_upper(rng);
    if (std::abs(x - y) < 1e-3 || std::abs(x) < 1e-3 || std::abs(y) < 1e-3 ||
        std::abs(x - 1.0) < 1e-3 || std::abs(y - 1.0) < 1e-3) {
      continue;
    }
    const double sum = d2(x) - d2(y) + d2(y / x) -
                       d2((1.0 - 1.0 / x) / (1.0 - 1.0 / y)) + d2((1.0 - x) / (1.0 - y));
    CHECK(std::fabs(sum) < 1e-9);
    ++done;
  }
}

TEST_CASE("incommensurability certificates") {
  for (auto [m, n] : {std::pair{1, 2}, {3, 5}, {2, 7}, {1, 8}}) {
    const auto cert = incommensurability_certificate(m, n);
    CHECK(cert.distinct);
    CHECK(std::fabs(cert.det) > 1e-6);
  }
  // Pairwise non-proportionality across the whole range.
  for (int m = 1; m <= 8; ++m) {
    for (int n = m + 1; n <= 8; ++n) {
      CHECK(incommensurability_certificate(m, n).distinct);
    }
  }
  CHECK_THROWS(incommensurability_certificate(2, 2));
}

TEST_CASE("mutation invariance report") {
  for (const char* word : {"0,2,0", "0,0,0", "2,2,2", "1,2,1,2"}) {
    const CheckReport rep = mutation_invariance_check(parse_mutation_word(word));
    for (const auto& c : rep.checks) {
      INFO(word << " " << c.name << ": " << c.detail);
      CHECK(c.pass);
    }
  }
  // Correction sizes: one, two and three mutated spheres.
  const CheckReport one = mutation_invariance_check(parse_mutation_word("0,2,0"));
  CHECK(one.checks[1].detail.find("6 * 1") != std::string::npos);
  const CheckReport three = mutation_invariance_check(parse_mutation_word("2,2,2"));
  CHECK(three.checks[1].detail.find("6 * 3") != std::string::npos);
}
