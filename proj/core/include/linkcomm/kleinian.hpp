// SPDX-License-Identifier: Apache-2.0
//
// Group assembly and scans: the chained groups built from the octahedron and
// cuboctahedron pieces, their mutated variants indexed by words over
// {0,1,2}, trace-integrality scans, modular-group word decomposition, the
// reflection-orbifold identity suite, and isometry classification of the
// {0,1}-mutants.

#pragma once

#include <string>
#include <vector>

#include "linkcomm/geometry.hpp"
#include "linkcomm/moebius.hpp"
#include "linkcomm/polyhedra.hpp"
#include "linkcomm/report.hpp"

namespace linkcomm {

// Mutation word I = (a_0, ..., a_n): entry 0 leaves the gluing sphere
// alone, 1 twists by the permutation (13)(24), 2 by (12)(34).
using MutationWord = std::vector<int>;

// Parse a comma-separated word such as "0,2,0,2".
MutationWord parse_mutation_word(const std::string& text);

// A group given by a finite generator table; each generator carries its
// provenance word in the builtin dictionary (evaluate_word reproduces it).
struct GroupSpec {
  std::string name;
  std::vector<NamedIsometry> generators;
};

// The chain group of length n: s, t; for i = 1..n the block of f, g, h and
// their reflected copies, conjugated into position by powers of c; and the
// reflected copy of {s, t} closing the chain.  2 + 6n + 2 generators.
GroupSpec gamma_n(int n);

// The mutated chain group for I = (a_0, ..., a_n): the same blocks
// conjugated by the accumulated mutators q_i = m_{a_0}^{(0)} ... m_{a_{i-1}}^{(i-1)},
// where m_j^{(i)} = c^{-2i} m_j c^{2i} and m_0 = identity.
GroupSpec gamma_I(const MutationWord& word);

struct IntegralityScanResult {
  bool all_integral = true;
  long words_checked = 0;
  std::string witness_word;          // set when a nonintegral trace is found
  NumberFieldElement witness_trace;  // its normalised (det-1) trace
};

// Enumerate reduced words up to max_word_length over the generators and
// their inverses; report the lexicographically smallest word whose
// normalised trace is not an algebraic integer, or all-integral.
IntegralityScanResult integrality_scan(const GroupSpec& group, int max_word_length,
                                       int threads = 0);

// Decompose an integer matrix of determinant 1 as a word in the modular
// generators S = (0 -1; 1 0) and T = (1 1; 0 1) by Euclidean reduction of
// the first column.  Throws on non-integer entries or determinant != 1.
GroupWord psl2z_word(const ExtendedMoebius& x);

// The vertical planes and unit hemispheres cutting out the reflection
// domain 0 <= Re z <= 1/2, -n*sqrt2 <= Im z <= 1/2 minus the half-balls at
// 0, -i*sqrt2, ..., -n*i*sqrt2.
std::vector<Hyperplane> reflection_domain_planes(int n);

// True when every pair of distinct planes is disjoint, tangent, or meets at
// an angle whose cosine lies in {0, 1/2, sqrt2/2}.
bool dihedral_angles_ok(const std::vector<Hyperplane>& planes);

// Full identity suite for the reflection-group commensurator container:
// the plane dihedral table, the expressions of s, t, g, h (and the
// reflected block) through f0 and the a_i, back-conjugation by the far
// wall, the a_i self-conjugacy identities, elliptic orders, and the
// modular-word transport of m1 down the chain.
CheckReport commensurator_suite(int n);

// Whether the {0,1}-mutants indexed by I and J are isometric: normalise the
// endpoint entries to 0, then compare the interiors up to reversal.
bool isometry_classify(const MutationWord& I, const MutationWord& J);

}  // namespace linkcomm
