// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the degree-4 number field K = Q(sqrt2, i) and in its
// real quadratic subfield Q(sqrt2).  Elements of K are stored on the Q-basis
// {1, sqrt2, i, i*sqrt2} with arbitrary-precision rational coordinates, so
// every operation below is exact.  The field carries two commuting
// involutions (complex conjugation i -> -i and the Galois twist
// sqrt2 -> -sqrt2) and two complex embeddings fixing i, one per choice of
// sign for sqrt2.

#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

namespace linkcomm {

using Rational = mpq_class;

// mpq_class arithmetic canonicalizes, but the (num, den) constructor does
// not; run every ingested rational through this before comparing.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

// Exact sign of a rational number: -1, 0 or +1.
int sign(const Rational& q);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

std::string to_string(const Rational& q);

// ---------------------------------------------------------------------------
// RealQuad: an element a + b*sqrt(2) of Q(sqrt2).
// ---------------------------------------------------------------------------
struct RealQuad {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(2)

  RealQuad() : a(0), b(0) {}
  RealQuad(long v) : a(v), b(0) {}  // NOLINT: implicit by design
  RealQuad(Rational v) : a(canonical(std::move(v))), b(0) {}
  RealQuad(Rational a_, Rational b_)
      : a(canonical(std::move(a_))), b(canonical(std::move(b_))) {}

  static RealQuad sqrt2() { return RealQuad(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  // The nontrivial automorphism sqrt2 -> -sqrt2 of Q(sqrt2).
  RealQuad galois() const { return RealQuad(a, -b); }

  RealQuad inverse() const;

  // Exact sign under the real embedding sending sqrt2 to +1.4142...
  int sign() const;

  // Real embeddings: emb == 1 sends sqrt2 -> +1.4142..., emb == 2 to the
  // negative root.
  double embed(int emb = 1) const;

  std::string str() const;
};

RealQuad operator+(const RealQuad& x, const RealQuad& y);
RealQuad operator-(const RealQuad& x, const RealQuad& y);
RealQuad operator-(const RealQuad& x);
RealQuad operator*(const RealQuad& x, const RealQuad& y);
RealQuad operator/(const RealQuad& x, const RealQuad& y);
bool operator==(const RealQuad& x, const RealQuad& y);
bool operator!=(const RealQuad& x, const RealQuad& y);
bool operator<(const RealQuad& x, const RealQuad& y);
bool operator<=(const RealQuad& x, const RealQuad& y);
bool operator>(const RealQuad& x, const RealQuad& y);
bool operator>=(const RealQuad& x, const RealQuad& y);
std::ostream& operator<<(std::ostream& os, const RealQuad& x);

RealQuad abs(const RealQuad& x);

// Exact square root in Q(sqrt2) of a nonnegative element, when one exists.
// The returned root is the nonnegative one.
std::optional<RealQuad> exact_sqrt(const RealQuad& x);

// ---------------------------------------------------------------------------
// NumberFieldElement: an element a + b*sqrt2 + c*i + d*i*sqrt2 of K.
// ---------------------------------------------------------------------------
struct NumberFieldElement {
  Rational a, b, c, d;

  NumberFieldElement() : a(0), b(0), c(0), d(0) {}
  NumberFieldElement(long v) : a(v), b(0), c(0), d(0) {}  // NOLINT
  NumberFieldElement(Rational v) : a(canonical(std::move(v))), b(0), c(0), d(0) {}
  NumberFieldElement(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(canonical(std::move(a_))), b(canonical(std::move(b_))),
        c(canonical(std::move(c_))), d(canonical(std::move(d_))) {}
  NumberFieldElement(const RealQuad& re, const RealQuad& im)
      : a(re.a), b(re.b), c(im.a), d(im.b) {}

  static NumberFieldElement i() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static NumberFieldElement sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static NumberFieldElement i_sqrt2() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  RealQuad re() const { return RealQuad(a, b); }
  RealQuad im() const { return RealQuad(c, d); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_rational() const { return b == 0 && c == 0 && d == 0; }
  bool is_real() const { return c == 0 && d == 0; }

  // Complex conjugation i -> -i (fixes sqrt2).
  NumberFieldElement conj() const { return {a, b, -c, -d}; }

  // Galois twist sqrt2 -> -sqrt2 (fixes i).  Composing with the identity,
  // this realises the second complex embedding of K exactly.
  NumberFieldElement sigma2() const { return {a, -b, c, -d}; }

  NumberFieldElement inverse() const;

  // Complex embeddings fixing i: emb == 1 sends sqrt2 -> +1.4142..., emb == 2
  // to the negative root.
  std::complex<double> embed(int emb = 1) const;

  // Monic characteristic polynomial of multiplication by this element on K,
  // as coefficients {c0, c1, c2, c3, c4} of c0 + c1 x + ... + c4 x^4 with
  // c4 == 1.  This is the 4th power of the minimal polynomial divided by the
  // appropriate degree, and is integral exactly when the element is an
  // algebraic integer.
  std::array<Rational, 5> char_poly() const;

  // Whether the element is an algebraic integer, decided via integrality of
  // the characteristic polynomial of the multiplication-by-x endomorphism.
  // (Correct regardless of whether the maximal order is Z[i, sqrt2] or the
  // larger Z[zeta8]: both criteria coincide with char-poly integrality.)
  bool is_algebraic_integer() const;

  std::string str() const;
};

NumberFieldElement operator+(const NumberFieldElement& x, const NumberFieldElement& y);
NumberFieldElement operator-(const NumberFieldElement& x, const NumberFieldElement& y);
NumberFieldElement operator-(const NumberFieldElement& x);
NumberFieldElement operator*(const NumberFieldElement& x, const NumberFieldElement& y);
NumberFieldElement operator/(const NumberFieldElement& x, const NumberFieldElement& y);
bool operator==(const NumberFieldElement& x, const NumberFieldElement& y);
bool operator!=(const NumberFieldElement& x, const NumberFieldElement& y);
std::ostream& operator<<(std::ostream& os, const NumberFieldElement& x);

// Exact square root in K, when one exists.  Both square roots are valid;
// the returned one is deterministic (first found by the solver).
std::optional<NumberFieldElement> exact_sqrt(const NumberFieldElement& x);

}  // namespace linkcomm
