// SPDX-License-Identifier: Apache-2.0
//
// Exact upper half-space geometry over K = Q(sqrt2, i).  Geodesic
// hyperplanes are vertical planes or hemispheres whose ideal boundaries are
// lines/circles in C with coefficients in Q(sqrt2); internally both are
// handled through the circle equation
//     A (x^2 + y^2) + B x + C y + D = 0,
// which is also a space-like normal vector in the Lorentz light-cone model,
// so reflections, dihedral angles and images under the group action are all
// computed exactly.

#pragma once

#include <array>
#include <optional>
#include <string>

#include "linkcomm/moebius.hpp"
#include "linkcomm/numfield.hpp"

namespace linkcomm {

// ---------------------------------------------------------------------------
// Lorentz light-cone model.
// ---------------------------------------------------------------------------

// Vector in R^{3,1} with the form <v, w> = v1 w1 + v2 w2 + v3 w3 - v4 w4.
using LorentzVector = std::array<RealQuad, 4>;
using LorentzMatrix = std::array<std::array<RealQuad, 4>, 4>;

RealQuad lorentz_inner(const LorentzVector& v, const LorentzVector& w);

// Boundary point z = x + i y lifts to (2x, 2y, x^2+y^2-1, x^2+y^2+1) on the
// forward light cone; infinity lifts to (0, 0, 1, 1).
LorentzVector boundary_to_lightcone(const BoundaryPoint& p);

// Inverse of the lift, defined on nonzero forward light-cone vectors up to
// positive scaling.  Throws if v is not null or not forward.
BoundaryPoint lightcone_to_boundary(const LorentzVector& v);

// The exact Lorentz matrix of an isometry, acting on column vectors.  The
// matrix part must have a determinant with a square root in K (true for all
// elements built here); the action is computed through 2x2 Hermitian forms,
// so orientation-reversing elements are supported.
LorentzMatrix lorentz_matrix(const ExtendedMoebius& g);

LorentzVector apply_lorentz(const LorentzMatrix& m, const LorentzVector& v);

// ---------------------------------------------------------------------------
// Geodesic hyperplanes.
// ---------------------------------------------------------------------------

struct Hyperplane {
  enum class Type { Vertical, Hemisphere };
  Type type;

  // Vertical: the plane over the line through p and q (distinct, finite).
  NumberFieldElement p, q;

  // Hemisphere: Euclidean center on the boundary and squared radius.
  NumberFieldElement center;
  RealQuad radius2;

  static Hyperplane vertical(const NumberFieldElement& p, const NumberFieldElement& q);
  static Hyperplane hemisphere(const NumberFieldElement& center, const RealQuad& radius2);

  // Circle-equation coefficients (A, B, C, D) as above, not normalised.
  std::array<RealQuad, 4> circle() const;

  // Space-like Lorentz normal vector of the plane, up to scale.
  LorentzVector normal() const;

  bool contains(const BoundaryPoint& pt) const;

  // Three ideal points of the plane (used to transport planes by isometries).
  // For hemispheres this requires the radius to have an exact square root.
  std::array<BoundaryPoint, 3> sample_points() const;

  // The reflection through the plane, as an orientation-reversing element.
  ExtendedMoebius reflection() const;

  std::string str() const;
};

// Equality as subsets of hyperbolic space (proportional circle equations).
bool operator==(const Hyperplane& x, const Hyperplane& y);
bool operator!=(const Hyperplane& x, const Hyperplane& y);

// Relative position of two distinct planes.  "Tangent" includes asymptotic
// planes meeting at a single ideal point (e.g. parallel vertical planes,
// which share the ideal point at infinity).
struct DihedralResult {
  enum class Rel { Intersect, Tangent, Disjoint } rel;
  // For intersecting planes: the unsigned cosine of the dihedral angle,
  // exact in Q(sqrt2).  Throws on construction if the cosine is not exact.
  RealQuad cos_angle;
};

DihedralResult dihedral_cos(const Hyperplane& h1, const Hyperplane& h2);

// The unique plane whose ideal boundary passes through three distinct
// boundary points.  Throws if the points coincide.
Hyperplane hyperplane_through(const std::array<BoundaryPoint, 3>& pts);

// Image of a plane under an isometry, computed by transporting three ideal
// points and re-solving the circle equation.
Hyperplane apply_to_hyperplane(const ExtendedMoebius& g, const Hyperplane& h);

// ---------------------------------------------------------------------------
// Horospheres.
// ---------------------------------------------------------------------------

// A horosphere: for a finite center, `size` is the Euclidean diameter of the
// tangent sphere; for the center at infinity it is the Euclidean height.
struct HoroData {
  BoundaryPoint center;
  RealQuad size;
};

// Image of a horosphere under an isometry, exactly.
HoroData apply_to_horosphere(const ExtendedMoebius& g, const HoroData& h);

}  // namespace linkcomm
