// SPDX-License-Identifier: Apache-2.0
//
// Epstein-Penner canonicity data and checks in the Lorentz model: the two
// fixed families of horospherical (light-cone) vectors spanning the
// cuboctahedral and octahedral tiles, exact coplanarity against the support
// functional, and the printed convex-angle witnesses.  The support pairing
// n.v here is the *Euclidean* dot product on R^4, matching the arithmetic of
// the canonicity argument; the Lorentz form is used only for nullity.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkcomm/geometry.hpp"
#include "linkcomm/report.hpp"

namespace linkcomm {

struct HoroVectorSet {
  std::string label;
  std::vector<LorentzVector> columns;
};

// The 12-column cuboctahedral family M and 6-column octahedral family N,
// exact entries.  Every column is null with positive last coordinate.
std::pair<HoroVectorSet, HoroVectorSet> load_MN();

// Euclidean dot product on R^4 (support pairing).
RealQuad euclid_dot(const LorentzVector& v, const LorentzVector& w);

// Exact check that n . v = 1 for every column v.
bool coplanarity_check(const LorentzVector& n, const HoroVectorSet& vs);

struct ConvexityWitness {
  std::string description;
  LorentzVector w;
  RealQuad value;     // the exact support value
  RealQuad expected;  // the printed value
};

// The four printed convex-angle witnesses with their exact support values.
// (The fourth witness vector's last coordinate is corrected from the display
// to 4+2*sqrt2, the unique value making it a light-cone vector; the corrected
// vector reproduces the printed support value 2+sqrt2 exactly.)
std::vector<ConvexityWitness> convexity_witnesses();

// Support-pairing invariance (n A^-1) . (A v) = n . v under an isometry's
// exact Lorentz action.
bool isometry_invariance_spotcheck(const ExtendedMoebius& g, const LorentzVector& v,
                                   const LorentzVector& n);

// Full canonicity report: nullity of all 18 columns, the two coplanarity
// identities, a negative control, the four witnesses, invariance spot
// checks, and the octahedral shape of the N family.
CheckReport tiling_report();

}  // namespace linkcomm
