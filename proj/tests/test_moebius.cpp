// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/moebius.hpp"

#include "doctest.h"

using namespace linkcomm;

namespace {

const GeneratorTable& tbl() { return builtin_generators(); }
ExtendedMoebius W(const std::string& w) { return evaluate_word(w); }

// Exponent-style conjugation x^y = y x y^-1.
ExtendedMoebius up(const ExtendedMoebius& x, const ExtendedMoebius& y) {
  return y * x * y.inverse();
}

}  // namespace

TEST_CASE("projective equality") {
  const ExtendedMoebius id = ExtendedMoebius::identity();
  const ExtendedMoebius minus_id(NumberFieldElement(-1), NumberFieldElement(0),
                                 NumberFieldElement(0), NumberFieldElement(-1));
  CHECK(id == minus_id);
  CHECK(minus_id.is_identity());
  CHECK(W("s") != W("t"));
  CHECK(W("s s^-1").is_identity());
  CHECK(W("t t^-1 t t^-1").is_identity());
}

TEST_CASE("parabolic generator relations") {
  CHECK(W("p1") == W("s^-1"));
  CHECK(W("p1") == W("f^-1"));
  CHECK(W("p2") == W("s t s t^-2"));
  CHECK(W("p2") == W("f g^-1 f^-1 h^-1 g"));
  CHECK(W("p3") == up(W("s^-1"), W("t s t")));
  CHECK(W("p3") == up(W("g^-1"), W("g^-1 f^-1 h")));
  CHECK(W("p4") == W("p1 p2 p3^-1"));
  CHECK(W("p4") == up(W("s t s t^-2"), W("t s t^-1")));
}

TEST_CASE("hidden symmetry k") {
  const ExtendedMoebius k = tbl().at("k");
  CHECK(k.pow(2).is_identity());
  CHECK(up(W("f"), k) == up(W("g"), W("f g^-1")));
  CHECK(up(W("g"), k) == up(W("f"), W("f g^-1")));
  CHECK(up(W("h"), k) == up(W("h^-1"), W("f g^-1")));
  CHECK(up(W("p2"), k) == W("p2^-1"));
}

TEST_CASE("reflection and translation bookkeeping") {
  const ExtendedMoebius r = tbl().at("r");
  CHECK((r * r).is_identity());
  CHECK(W("c^-1 r c") == W("c^-2 r"));
  for (const char* name : {"s", "t", "g", "h", "m1"}) {
    const ExtendedMoebius x = tbl().at(name);
    CHECK(r * x * r == x.entry_conj());
  }
}

TEST_CASE("commensurability conjugators") {
  CHECK(up(W("p1"), W("m1")) == W("p3^-1"));
  CHECK(up(W("p2"), W("m1")) == W("p4^-1"));
  CHECK(up(W("p1"), W("m2")) == W("p2"));
  CHECK(up(W("p3"), W("m2")) == up(W("p4"), W("p1^-1")));
}

TEST_CASE("trace normalisation") {
  // m2's projective representative has determinant 5, whose square root is
  // not in K, so its trace-up-to-sign is undefined there.
  CHECK(!tbl().at("m2").trace_pm().has_value());
  // But determinant-25 products normalise fine.
  const ExtendedMoebius x = W("m2 s m2^-1");
  const auto tr = x.trace_pm();
  REQUIRE(tr.has_value());
  CHECK((*tr == NumberFieldElement(2) || *tr == NumberFieldElement(-2)));
  const auto trs = W("s").trace_pm();
  REQUIRE(trs.has_value());
  CHECK((*trs == NumberFieldElement(2) || *trs == NumberFieldElement(-2)));
}

TEST_CASE("classification") {
  CHECK(W("p1").classify().kind == MoebiusKind::Parabolic);
  CHECK(W("p2").classify().kind == MoebiusKind::Parabolic);
  CHECK(W("c").classify().kind == MoebiusKind::Parabolic);
  CHECK(W("s s^-1").classify().kind == MoebiusKind::Identity);

  const auto k_class = tbl().at("k").classify();
  CHECK(k_class.kind == MoebiusKind::Elliptic);
  CHECK(k_class.elliptic_order == 2);

  const auto a0_class = tbl().at("a0").classify();
  CHECK(a0_class.kind == MoebiusKind::Elliptic);
  CHECK(a0_class.elliptic_order == 3);

  const auto b0_class = tbl().at("b0").classify();
  CHECK(b0_class.kind == MoebiusKind::Elliptic);
  CHECK(b0_class.elliptic_order == 3);

  // m1 has matrix trace zero, so it is an involution.
  const auto m1_class = W("m1").classify();
  CHECK(m1_class.kind == MoebiusKind::Elliptic);
  CHECK(m1_class.elliptic_order == 2);

  CHECK(W("t").classify().kind == MoebiusKind::Loxodromic);
  CHECK(W("h").classify().kind == MoebiusKind::Loxodromic);
  CHECK(W("g").classify().kind == MoebiusKind::Parabolic);
}

TEST_CASE("boundary action") {
  const NumberFieldElement i = NumberFieldElement::i();
  const NumberFieldElement h = (NumberFieldElement(1) + i) / NumberFieldElement(2);
  const ExtendedMoebius t = tbl().at("t");
  CHECK(t.apply(BoundaryPoint(i)) == BoundaryPoint(NumberFieldElement(1)));
  CHECK(t.apply(BoundaryPoint(NumberFieldElement(1) + i)) == BoundaryPoint::infinity());
  CHECK(t.apply(BoundaryPoint(h)) == BoundaryPoint(NumberFieldElement(1) + i));

  const ExtendedMoebius s = tbl().at("s");
  CHECK(s.apply(BoundaryPoint(NumberFieldElement(0))) == BoundaryPoint(NumberFieldElement(0)));
  CHECK(s.apply(BoundaryPoint(NumberFieldElement(1))) == BoundaryPoint::infinity());

  // r acts by complex conjugation on the boundary.
  const ExtendedMoebius r = tbl().at("r");
  CHECK(r.apply(BoundaryPoint(i)) == BoundaryPoint(-i));
  CHECK(r.apply(BoundaryPoint::infinity()) == BoundaryPoint::infinity());

  // c translates by i sqrt2 and maps the real-line plane to a parallel one.
  const ExtendedMoebius c = tbl().at("c");
  CHECK(c.apply(BoundaryPoint(NumberFieldElement(0))) ==
        BoundaryPoint(NumberFieldElement::i_sqrt2()));
}

TEST_CASE("word parsing") {
  const GroupWord w = parse_word("s t^-2 g^3");
  REQUIRE(w.size() == 3);
  CHECK(w[0].gen == "s");
  CHECK(w[0].exp == 1);
  CHECK(w[1].exp == -2);
  CHECK(w[2].exp == 3);
  CHECK_THROWS(evaluate_word("nosuch"));
}

TEST_CASE("aggregated identity suite") {
  const CheckReport rep = identity_suite();
  CHECK(rep.checks.size() >= 25);
  for (const auto& c : rep.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
}
