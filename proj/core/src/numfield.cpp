// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/numfield.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linkcomm {

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sign(q) < 0) return std::nullopt;
  const mpz_class num = q.get_num();
  const mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rnum, rden;
  mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
  return Rational(rnum, rden);
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// RealQuad
// ---------------------------------------------------------------------------

RealQuad RealQuad::inverse() const {
  // 1/(a + b sqrt2) = (a - b sqrt2) / (a^2 - 2 b^2); the norm vanishes only
  // at zero since sqrt2 is irrational.
  const Rational norm = a * a - 2 * b * b;
  if (norm == 0) throw std::domain_error("RealQuad::inverse: division by zero");
  return RealQuad(a / norm, -b / norm);
}

int RealQuad::sign() const {
  const int sa = linkcomm::sign(a);
  const int sb = linkcomm::sign(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Mixed signs: a + b sqrt2 has the sign of whichever of a^2, 2 b^2 wins.
  const Rational a2 = a * a;
  const Rational b2 = 2 * b * b;
  if (a2 == b2) return 0;  // impossible for nonzero a, b, kept for safety
  return (a2 > b2) ? sa : sb;
}

double RealQuad::embed(int emb) const {
  const double s = (emb == 1) ? kSqrt2 : -kSqrt2;
  return a.get_d() + b.get_d() * s;
}

std::string RealQuad::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a.get_str();
  } else if (a == 0) {
    os << b.get_str() << "*sqrt2";
  } else {
    os << a.get_str() << (linkcomm::sign(b) < 0 ? " - " : " + ")
       << Rational(abs(b)).get_str() << "*sqrt2";
  }
  return os.str();
}

RealQuad operator+(const RealQuad& x, const RealQuad& y) { return RealQuad(x.a + y.a, x.b + y.b); }
RealQuad operator-(const RealQuad& x, const RealQuad& y) { return RealQuad(x.a - y.a, x.b - y.b); }
RealQuad operator-(const RealQuad& x) { return RealQuad(-x.a, -x.b); }
RealQuad operator*(const RealQuad& x, const RealQuad& y) {
  return RealQuad(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
}
RealQuad operator/(const RealQuad& x, const RealQuad& y) { return x * y.inverse(); }
bool operator==(const RealQuad& x, const RealQuad& y) { return x.a == y.a && x.b == y.b; }
bool operator!=(const RealQuad& x, const RealQuad& y) { return !(x == y); }
bool operator<(const RealQuad& x, const RealQuad& y) { return (x - y).sign() < 0; }
bool operator<=(const RealQuad& x, const RealQuad& y) { return (x - y).sign() <= 0; }
bool operator>(const RealQuad& x, const RealQuad& y) { return (x - y).sign() > 0; }
bool operator>=(const RealQuad& x, const RealQuad& y) { return (x - y).sign() >= 0; }
std::ostream& operator<<(std::ostream& os, const RealQuad& x) { return os << x.str(); }

RealQuad abs(const RealQuad& x) { return x.sign() < 0 ? -x : x; }

std::optional<RealQuad> exact_sqrt(const RealQuad& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.b == 0) {
    if (auto r = exact_sqrt(x.a)) return RealQuad(*r, Rational(0));
    if (auto r = exact_sqrt(Rational(x.a / 2))) return RealQuad(Rational(0), *r);
    return std::nullopt;
  }
  // (p + q sqrt2)^2 = p^2 + 2 q^2 + 2 p q sqrt2, so p^2 solves
  // y^2 - a y + b^2 / 2 = 0 where x = a + b sqrt2.
  const auto disc = exact_sqrt(Rational(x.a * x.a - 2 * x.b * x.b));
  if (!disc) return std::nullopt;
  for (int s : {+1, -1}) {
    const Rational p2 = (x.a + s * *disc) / 2;
    const auto p = exact_sqrt(p2);
    if (!p || *p == 0) continue;
    RealQuad root(*p, Rational(x.b / (2 * *p)));
    if (root.sign() < 0) root = -root;
    if (root * root == x) return root;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// NumberFieldElement
// ---------------------------------------------------------------------------

NumberFieldElement operator+(const NumberFieldElement& x, const NumberFieldElement& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
NumberFieldElement operator-(const NumberFieldElement& x, const NumberFieldElement& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
NumberFieldElement operator-(const NumberFieldElement& x) { return {-x.a, -x.b, -x.c, -x.d}; }

NumberFieldElement operator*(const NumberFieldElement& x, const NumberFieldElement& y) {
  // (a1 + b1 r + c1 i + d1 ir)(a2 + b2 r + c2 i + d2 ir) with r = sqrt2,
  // using r^2 = 2, i^2 = -1.
  return {
      x.a * y.a + 2 * x.b * y.b - x.c * y.c - 2 * x.d * y.d,
      x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
      x.a * y.c + x.c * y.a + 2 * x.b * y.d + 2 * x.d * y.b,
      x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b,
  };
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("NumberFieldElement::inverse: division by zero");
  // x * conj(x) lies in the real subfield Q(sqrt2); divide by it there.
  const NumberFieldElement xc = conj();
  const NumberFieldElement n = *this * xc;
  const RealQuad norm(n.a, n.b);  // imaginary part is zero by construction
  const RealQuad ninv = norm.inverse();
  return xc * NumberFieldElement(ninv, RealQuad());
}

NumberFieldElement operator/(const NumberFieldElement& x, const NumberFieldElement& y) {
  return x * y.inverse();
}
bool operator==(const NumberFieldElement& x, const NumberFieldElement& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}
bool operator!=(const NumberFieldElement& x, const NumberFieldElement& y) { return !(x == y); }

std::complex<double> NumberFieldElement::embed(int emb) const {
  return {re().embed(emb), im().embed(emb)};
}

std::array<Rational, 5> NumberFieldElement::char_poly() const {
  // Matrix of multiplication by x on the basis {1, sqrt2, i, i sqrt2},
  // columns = images of the basis vectors.
  Rational m[4][4] = {
      {a, 2 * b, -c, -2 * d},
      {b, a, -d, -c},
      {c, 2 * d, a, 2 * b},
      {d, c, b, a},
  };
  // Faddeev-LeVerrier: coefficients of det(xI - M).
  Rational n[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::array<Rational, 5> coeff;
  coeff[4] = 1;
  for (int k = 1; k <= 4; ++k) {
    Rational prod[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational s(0);
        for (int l = 0; l < 4; ++l) s += m[i][l] * n[l][j];
        prod[i][j] = s;
      }
    Rational tr(0);
    for (int i = 0; i < 4; ++i) tr += prod[i][i];
    const Rational ck = -tr / k;
    coeff[4 - k] = ck;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) n[i][j] = prod[i][j] + ((i == j) ? ck : Rational(0));
  }
  return coeff;
}

bool NumberFieldElement::is_algebraic_integer() const {
  // Elements of the subring Z[i, sqrt2] (integer coordinates) are algebraic
  // integers outright; this fast path keeps large word scans cheap.
  if (a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1 && d.get_den() == 1) return true;
  const auto poly = char_poly();
  for (int k = 0; k < 4; ++k) {
    if (poly[k].get_den() != 1) return false;
  }
  return true;
}

std::string NumberFieldElement::str() const {
  const RealQuad rp = re();
  const RealQuad ip = im();
  if (ip.is_zero()) return rp.str();
  std::ostringstream os;
  if (!rp.is_zero()) os << rp.str() << " + ";
  os << "i*(" << ip.str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NumberFieldElement& x) { return os << x.str(); }

namespace {

// Gaussian rational p + q i, used internally to take square roots in K by
// viewing K as Q(i)(sqrt2).
struct Qi {
  Rational p, q;
};
Qi qi_mul(const Qi& x, const Qi& y) {
  return {x.p * y.p - x.q * y.q, x.p * y.q + x.q * y.p};
}
Qi qi_sub(const Qi& x, const Qi& y) { return {x.p - y.p, x.q - y.q}; }
bool qi_zero(const Qi& x) { return x.p == 0 && x.q == 0; }

std::optional<Qi> qi_sqrt(const Qi& w) {
  if (w.q == 0) {
    if (auto r = exact_sqrt(w.p)) return Qi{*r, Rational(0)};
    if (auto r = exact_sqrt(Rational(-w.p))) return Qi{Rational(0), *r};
    return std::nullopt;
  }
  // (x + y i)^2 = w: x^2 = (p + |w|)/2 with |w| = sqrt(p^2 + q^2) rational.
  const auto n = exact_sqrt(Rational(w.p * w.p + w.q * w.q));
  if (!n) return std::nullopt;
  const auto x = exact_sqrt(Rational((w.p + *n) / 2));
  if (!x || *x == 0) return std::nullopt;
  return Qi{*x, Rational(w.q / (2 * *x))};
}

NumberFieldElement from_qi_pair(const Qi& u, const Qi& v) {
  // u + v sqrt2 with u, v in Q(i).
  return {u.p, v.p, u.q, v.q};
}

}  // namespace

std::optional<NumberFieldElement> exact_sqrt(const NumberFieldElement& x) {
  // Write x = u + v sqrt2 with u, v in Q(i) and solve (s + t sqrt2)^2 = x.
  const Qi u{x.a, x.c};
  const Qi v{x.b, x.d};
  auto check = [&x](const NumberFieldElement& r) -> std::optional<NumberFieldElement> {
    if (r * r == x) return r;
    return std::nullopt;
  };
  if (qi_zero(v)) {
    if (auto s = qi_sqrt(u)) {
      if (auto r = check(from_qi_pair(*s, Qi{0, 0}))) return r;
    }
    if (auto t = qi_sqrt(Qi{u.p / 2, u.q / 2})) {
      if (auto r = check(from_qi_pair(Qi{0, 0}, *t))) return r;
    }
    return std::nullopt;
  }
  // s t = v / 2 and s^2 + 2 t^2 = u, hence s^2 solves
  // y^2 - u y + v^2 / 2 = 0 over Q(i).
  const Qi v2 = qi_mul(v, v);
  const Qi disc0 = qi_sub(qi_mul(u, u), Qi{2 * v2.p, 2 * v2.q});
  const auto disc = qi_sqrt(disc0);
  if (!disc) return std::nullopt;
  for (int sgn : {+1, -1}) {
    const Qi s2{(u.p + sgn * disc->p) / 2, (u.q + sgn * disc->q) / 2};
    const auto s = qi_sqrt(s2);
    if (!s || qi_zero(*s)) continue;
    // t = v / (2 s) in Q(i).
    const Rational den = 2 * (s->p * s->p + s->q * s->q);
    const Qi sconj{s->p, -s->q};
    const Qi num = qi_mul(v, sconj);
    const Qi t{num.p / den, num.q / den};
    if (auto r = check(from_qi_pair(*s, t))) return r;
  }
  return std::nullopt;
}

}  // namespace linkcomm
