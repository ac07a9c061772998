// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace linkcomm {

// ---------------------------------------------------------------------------
// Lorentz model.
// ---------------------------------------------------------------------------

RealQuad lorentz_inner(const LorentzVector& v, const LorentzVector& w) {
  return v[0] * w[0] + v[1] * w[1] + v[2] * w[2] - v[3] * w[3];
}

LorentzVector boundary_to_lightcone(const BoundaryPoint& p) {
  if (p.infinite) return {RealQuad(0), RealQuad(0), RealQuad(1), RealQuad(1)};
  const RealQuad x = p.z.re();
  const RealQuad y = p.z.im();
  const RealQuad n = x * x + y * y;
  return {RealQuad(2) * x, RealQuad(2) * y, n - RealQuad(1), n + RealQuad(1)};
}

BoundaryPoint lightcone_to_boundary(const LorentzVector& v) {
  if (!lorentz_inner(v, v).is_zero()) {
    throw std::domain_error("lightcone_to_boundary: vector is not null");
  }
  if (v[3].sign() <= 0) {
    throw std::domain_error("lightcone_to_boundary: vector is not forward");
  }
  const RealQuad den = v[3] - v[2];
  if (den.is_zero()) return BoundaryPoint::infinity();
  return BoundaryPoint(NumberFieldElement(v[0] / den, v[1] / den));
}

namespace {

struct Mat2 {
  NumberFieldElement e11, e12, e21, e22;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

Mat2 mat2_conj_transpose(const Mat2& x) {
  return {x.e11.conj(), x.e21.conj(), x.e12.conj(), x.e22.conj()};
}

Mat2 mat2_entry_conj(const Mat2& x) {
  return {x.e11.conj(), x.e12.conj(), x.e21.conj(), x.e22.conj()};
}

}  // namespace

LorentzMatrix lorentz_matrix(const ExtendedMoebius& g) {
  const auto root = exact_sqrt(g.det());
  if (!root) throw std::domain_error("lorentz_matrix: determinant has no square root in K");
  const NumberFieldElement inv = root->inverse();
  const Mat2 m{g.a * inv, g.b * inv, g.c * inv, g.d * inv};
  const Mat2 mct = mat2_conj_transpose(m);

  // Hermitian-form basis matched to Lorentz coordinates: a null vector v
  // corresponds to H(v) = [[v4+v3, v1+i v2], [v1-i v2, v4-v3]], and the
  // isometry acts by H -> M H M^* (conjugating H entrywise first when the
  // element reverses orientation).
  const NumberFieldElement one(1), zero(0), im = NumberFieldElement::i();
  const Mat2 basis[4] = {
      {zero, one, one, zero},
      {zero, im, -im, zero},
      {one, zero, zero, -one},
      {one, zero, zero, one},
  };

  LorentzMatrix out;
  for (int k = 0; k < 4; ++k) {
    Mat2 h = basis[k];
    if (g.reversing) h = mat2_entry_conj(h);
    const Mat2 p = mat2_mul(mat2_mul(m, h), mct);
    if (!p.e11.is_real() || !p.e22.is_real() || p.e21 != p.e12.conj()) {
      throw std::logic_error("lorentz_matrix: image form is not Hermitian");
    }
    const RealQuad h11 = p.e11.re();
    const RealQuad h22 = p.e22.re();
    out[0][k] = p.e12.re();
    out[1][k] = p.e12.im();
    out[2][k] = (h11 - h22) / RealQuad(2);
    out[3][k] = (h11 + h22) / RealQuad(2);
  }
  return out;
}

LorentzVector apply_lorentz(const LorentzMatrix& m, const LorentzVector& v) {
  LorentzVector out;
  for (int i = 0; i < 4; ++i) {
    RealQuad s(0);
    for (int j = 0; j < 4; ++j) s = s + m[i][j] * v[j];
    out[i] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hyperplanes.
// ---------------------------------------------------------------------------

Hyperplane Hyperplane::vertical(const NumberFieldElement& p, const NumberFieldElement& q) {
  if (p == q) throw std::invalid_argument("Hyperplane::vertical: coincident anchors");
  Hyperplane h;
  h.type = Type::Vertical;
  h.p = p;
  h.q = q;
  return h;
}

Hyperplane Hyperplane::hemisphere(const NumberFieldElement& center, const RealQuad& radius2) {
  if (radius2.sign() <= 0) {
    throw std::invalid_argument("Hyperplane::hemisphere: radius^2 must be positive");
  }
  Hyperplane h;
  h.type = Type::Hemisphere;
  h.center = center;
  h.radius2 = radius2;
  return h;
}

std::array<RealQuad, 4> Hyperplane::circle() const {
  if (type == Type::Vertical) {
    const RealQuad px = p.re(), py = p.im();
    const RealQuad ex = q.re() - px, ey = q.im() - py;
    return {RealQuad(0), -ey, ex, ey * px - ex * py};
  }
  const RealQuad cx = center.re(), cy = center.im();
  return {RealQuad(1), RealQuad(-2) * cx, RealQuad(-2) * cy, cx * cx + cy * cy - radius2};
}

LorentzVector Hyperplane::normal() const {
  const auto eq = circle();
  const RealQuad half(Rational(1, 2));
  return {eq[1] * half, eq[2] * half, (eq[0] - eq[3]) * half, -(eq[0] + eq[3]) * half};
}

bool Hyperplane::contains(const BoundaryPoint& pt) const {
  if (pt.infinite) return type == Type::Vertical;
  const auto eq = circle();
  const RealQuad x = pt.z.re(), y = pt.z.im();
  return (eq[0] * (x * x + y * y) + eq[1] * x + eq[2] * y + eq[3]).is_zero();
}

std::array<BoundaryPoint, 3> Hyperplane::sample_points() const {
  if (type == Type::Vertical) {
    return {BoundaryPoint(p), BoundaryPoint(q), BoundaryPoint::infinity()};
  }
  const auto r = exact_sqrt(radius2);
  if (!r) {
    throw std::domain_error("Hyperplane::sample_points: radius is not exact in Q(sqrt2)");
  }
  const NumberFieldElement rr(*r, RealQuad(0));
  const NumberFieldElement ir(RealQuad(0), *r);
  return {BoundaryPoint(center + rr), BoundaryPoint(center - rr), BoundaryPoint(center + ir)};
}

ExtendedMoebius Hyperplane::reflection() const {
  if (type == Type::Vertical) {
    // z -> p + (e / conj(e)) conj(z - p) with e = q - p.
    const NumberFieldElement e = q - p;
    const NumberFieldElement u = e / e.conj();
    return {u, p - u * p.conj(), NumberFieldElement(0), NumberFieldElement(1), true};
  }
  // Inversion z -> c + r^2 / conj(z - c).
  const NumberFieldElement r2(radius2, RealQuad(0));
  return {center, r2 - center * center.conj(), NumberFieldElement(1), -center.conj(), true};
}

std::string Hyperplane::str() const {
  std::ostringstream os;
  if (type == Type::Vertical) {
    os << "vertical(" << p.str() << ", " << q.str() << ")";
  } else {
    os << "hemisphere(" << center.str() << ", r2 = " << radius2.str() << ")";
  }
  return os.str();
}

bool operator==(const Hyperplane& x, const Hyperplane& y) {
  const auto u = x.circle();
  const auto v = y.circle();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  return true;
}
bool operator!=(const Hyperplane& x, const Hyperplane& y) { return !(x == y); }

DihedralResult dihedral_cos(const Hyperplane& h1, const Hyperplane& h2) {
  if (h1 == h2) throw std::invalid_argument("dihedral_cos: identical planes");
  const LorentzVector n1 = h1.normal();
  const LorentzVector n2 = h2.normal();
  const RealQuad ip = lorentz_inner(n1, n2);
  const RealQuad q1 = lorentz_inner(n1, n1);
  const RealQuad q2 = lorentz_inner(n2, n2);
  const RealQuad lhs = ip * ip;
  const RealQuad rhs = q1 * q2;
  const int cmp = (lhs - rhs).sign();
  if (cmp > 0) return {DihedralResult::Rel::Disjoint, RealQuad(0)};
  if (cmp == 0) return {DihedralResult::Rel::Tangent, RealQuad(0)};
  const auto cosine = exact_sqrt(RealQuad(lhs / rhs));
  if (!cosine) throw std::domain_error("dihedral_cos: cosine is not exact in Q(sqrt2)");
  return {DihedralResult::Rel::Intersect, *cosine};
}

namespace {

RealQuad det3(const RealQuad m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Hyperplane from_circle(const RealQuad& A, const RealQuad& B, const RealQuad& C,
                       const RealQuad& D) {
  if (A.is_zero()) {
    if (B.is_zero() && C.is_zero()) {
      throw std::domain_error("from_circle: degenerate equation");
    }
    // Line B x + C y + D = 0; pick an anchor and step by the direction.
    RealQuad x0(0), y0(0);
    if (!C.is_zero()) {
      y0 = -D / C;
    } else {
      x0 = -D / B;
    }
    const NumberFieldElement p0(x0, y0);
    const NumberFieldElement p1(x0 + C, y0 - B);
    return Hyperplane::vertical(p0, p1);
  }
  const RealQuad cx = -B / (RealQuad(2) * A);
  const RealQuad cy = -C / (RealQuad(2) * A);
  const RealQuad r2 = (B * B + C * C - RealQuad(4) * A * D) / (RealQuad(4) * A * A);
  if (r2.sign() <= 0) throw std::domain_error("from_circle: imaginary circle");
  return Hyperplane::hemisphere(NumberFieldElement(cx, cy), r2);
}

Hyperplane circle_through(const std::array<BoundaryPoint, 3>& pts) {
  int at_inf = -1;
  for (int i = 0; i < 3; ++i) {
    if (pts[i].infinite) at_inf = i;
  }
  if (at_inf >= 0) {
    const auto& u = pts[(at_inf + 1) % 3];
    const auto& v = pts[(at_inf + 2) % 3];
    return Hyperplane::vertical(u.z, v.z);
  }
  RealQuad w[3], x[3], y[3];
  for (int i = 0; i < 3; ++i) {
    x[i] = pts[i].z.re();
    y[i] = pts[i].z.im();
    w[i] = x[i] * x[i] + y[i] * y[i];
  }
  const RealQuad one(1);
  const RealQuad ma[3][3] = {{x[0], y[0], one}, {x[1], y[1], one}, {x[2], y[2], one}};
  const RealQuad mb[3][3] = {{w[0], y[0], one}, {w[1], y[1], one}, {w[2], y[2], one}};
  const RealQuad mc[3][3] = {{w[0], x[0], one}, {w[1], x[1], one}, {w[2], x[2], one}};
  const RealQuad md[3][3] = {{w[0], x[0], y[0]}, {w[1], x[1], y[1]}, {w[2], x[2], y[2]}};
  return from_circle(det3(ma), -det3(mb), det3(mc), -det3(md));
}

}  // namespace

Hyperplane hyperplane_through(const std::array<BoundaryPoint, 3>& pts) {
  return circle_through(pts);
}

Hyperplane apply_to_hyperplane(const ExtendedMoebius& g, const Hyperplane& h) {
  const auto pts = h.sample_points();
  return circle_through({g.apply(pts[0]), g.apply(pts[1]), g.apply(pts[2])});
}

// ---------------------------------------------------------------------------
// Horospheres.
// ---------------------------------------------------------------------------

HoroData apply_to_horosphere(const ExtendedMoebius& g, const HoroData& h) {
  const auto root = exact_sqrt(g.det());
  if (!root) throw std::domain_error("apply_to_horosphere: determinant has no square root");
  const NumberFieldElement inv = root->inverse();
  const NumberFieldElement a = g.a * inv, b = g.b * inv, c = g.c * inv, d = g.d * inv;

  HoroData in = h;
  if (g.reversing && !in.center.infinite) in.center.z = in.center.z.conj();

  auto mod2 = [](const NumberFieldElement& z) { return (z * z.conj()).re(); };

  HoroData out;
  if (in.center.infinite) {
    if (c.is_zero()) {
      // z -> a^2 z + a b with a d = 1: Euclidean scaling by |a|^2.
      out.center = BoundaryPoint::infinity();
      out.size = in.size * mod2(a);
    } else {
      out.center = BoundaryPoint(a / c);
      out.size = (mod2(c) * in.size).inverse();
    }
    return out;
  }
  const NumberFieldElement w = c * in.center.z + d;
  if (w.is_zero()) {
    out.center = BoundaryPoint::infinity();
    out.size = (mod2(c) * in.size).inverse();
  } else {
    out.center = BoundaryPoint((a * in.center.z + b) / w);
    out.size = in.size / mod2(w);
  }
  return out;
}

}  // namespace linkcomm
