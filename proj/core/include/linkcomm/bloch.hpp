// SPDX-License-Identifier: Apache-2.0
//
// Formal pre-Bloch sums over K, cross-ratio parameters and triangulations
// of the two polyhedra, the Bloch-Wigner function D2, the Borel regulator
// for the two complex embeddings of K, incommensurability certificates,
// and the mutation-invariance report.

#pragma once

#include <complex>
#include <map>
#include <string>

#include "linkcomm/kleinian.hpp"
#include "linkcomm/moebius.hpp"
#include "linkcomm/numfield.hpp"
#include "linkcomm/report.hpp"

namespace linkcomm {

// Lexicographic order on the coordinate 4-tuple (a, b, c, d).
struct NumberFieldLess {
  bool operator()(const NumberFieldElement& x, const NumberFieldElement& y) const;
};

// The representative of the 3-cycle orbit {z, 1 - 1/z, 1/(1-z)} with the
// lexicographically smallest coordinate tuple.  Throws on z in {0, 1}.
NumberFieldElement orbit_canonical(const NumberFieldElement& z);

// A formal integer combination of classes [z], z in K - {0, 1}, with keys
// stored orbit-canonically.  Not reduced modulo the five-term relation.
struct PreBlochElement {
  std::map<NumberFieldElement, int, NumberFieldLess> terms;

  // Add c * [z] (the key is canonicalized; zero coefficients are erased).
  void add(const NumberFieldElement& z, int c);
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

PreBlochElement operator+(const PreBlochElement& x, const PreBlochElement& y);
PreBlochElement operator-(const PreBlochElement& x, const PreBlochElement& y);
PreBlochElement operator*(int c, const PreBlochElement& x);
bool operator==(const PreBlochElement& x, const PreBlochElement& y);

// The mirror image of a sum: [z] -> -[conj z] termwise.
PreBlochElement mirror(const PreBlochElement& x);

// The cross ratio parameter of the ideal tetrahedron (z0, z1, z2, z3) in
// the given vertex order: the image of z3 under the map sending
// (z0, z1, z2) to (0, 1, inf), canonicalized within its 3-cycle orbit.
// Throws if the image is 0, 1 or inf (coincident vertices).
NumberFieldElement cross_ratio_parameter(const BoundaryPoint& z0, const BoundaryPoint& z1,
                                         const BoundaryPoint& z2, const BoundaryPoint& z3);

// Four positively oriented tetrahedra coning the octahedron from the edge
// joining (1+i)/2 to inf; all four parameters agree, giving 4 [(1+i)/2].
PreBlochElement triangulate_P1();

// Coning triangulation of the cuboctahedron from its vertex at inf.  The
// square-face diagonals are chosen (by exhaustive search over the 2^6
// assignments) so that each face pairing carries chosen diagonal to chosen
// diagonal; throws if no compatible assignment exists.  Every parameter
// lies in the subfield spanned by {1, i*sqrt2}.
PreBlochElement triangulate_P2();

// The invariant of the doubled piece: triangulate_P2() plus its mirror.
PreBlochElement beta2();

// The full invariant of the length-n chain: the octahedron class, minus
// its mirror, plus n copies of the doubled cuboctahedron class.
PreBlochElement bloch_invariant_Mn(int n);

// The Bloch-Wigner function D2(z) = Im psi(z) + log|z| arg(1 - z),
// accurate to about 1e-12; exactly 0 on the real line.
double d2(std::complex<double> z);

struct RegulatorVector {
  double r1 = 0;
  double r2 = 0;
};

// (sum c*D2(sigma1 z), sum c*D2(sigma2 z)) over the two complex embeddings
// fixing i (sigma2 sends sqrt2 to its negative root).
RegulatorVector borel_regulator(const PreBlochElement& beta);

struct IncommensurabilityCertificate {
  int m = 0, n = 0;
  RegulatorVector reg_m, reg_n;
  double det = 0;        // 2x2 determinant of the two regulator vectors
  bool distinct = false; // |det| above tolerance
};

// Certifies that no positive rational multiples of the two invariants'
// regulator vectors agree, by a determinant bound.  Throws if m == n.
IncommensurabilityCertificate incommensurability_certificate(int m, int n);

// Mutation leaves the invariant unchanged: the flat-tetrahedron correction
// for the word I is 6 * (number of 2-entries) * [2]; the report checks that
// its regulator vanishes identically and that 2 [2] = 0 formally via the
// relation [z] = -[z/(z-1)] at z = 2.
CheckReport mutation_invariance_check(const MutationWord& I);

}  // namespace linkcomm
