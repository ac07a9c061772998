// SPDX-License-Identifier: Apache-2.0
//
// Projective 2x2 matrices over K = Q(sqrt2, i) extended by an orientation
// flag, acting on the boundary sphere C u {inf}.  Orientation-reversing
// elements act by complex-conjugating the input first, so composition
// conjugates the right factor's matrix entries when the left factor
// reverses orientation.  Equality is projective (up to a global nonzero
// scalar) and never divides, so all comparisons stay exact.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkcomm/numfield.hpp"
#include "linkcomm/report.hpp"

namespace linkcomm {

// A point of the ideal boundary C u {inf} with coordinates in K.
struct BoundaryPoint {
  bool infinite = false;
  NumberFieldElement z;

  BoundaryPoint() = default;
  BoundaryPoint(NumberFieldElement v) : z(std::move(v)) {}  // NOLINT
  static BoundaryPoint infinity() {
    BoundaryPoint p;
    p.infinite = true;
    return p;
  }
  std::string str() const;
};
bool operator==(const BoundaryPoint& x, const BoundaryPoint& y);
bool operator!=(const BoundaryPoint& x, const BoundaryPoint& y);
bool operator<(const BoundaryPoint& x, const BoundaryPoint& y);  // arbitrary total order

enum class MoebiusKind { Identity, Parabolic, Elliptic, Loxodromic };

struct MoebiusClass {
  MoebiusKind kind;
  // Order of an elliptic element if finite and <= the search bound, else 0.
  int elliptic_order = 0;
};

struct ExtendedMoebius {
  NumberFieldElement a, b, c, d;
  bool reversing = false;

  ExtendedMoebius() : a(1), b(0), c(0), d(1) {}
  ExtendedMoebius(NumberFieldElement a_, NumberFieldElement b_, NumberFieldElement c_,
                  NumberFieldElement d_, bool reversing_ = false)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)),
        reversing(reversing_) {}

  static ExtendedMoebius identity() { return ExtendedMoebius(); }

  NumberFieldElement det() const { return a * d - b * c; }
  NumberFieldElement matrix_trace() const { return a + d; }

  // Entrywise complex conjugation; as a group operation this is conjugation
  // by the reflection in the vertical plane over the real line.
  ExtendedMoebius entry_conj() const { return {a.conj(), b.conj(), c.conj(), d.conj(), reversing}; }

  ExtendedMoebius inverse() const;
  ExtendedMoebius pow(int n) const;
  ExtendedMoebius conjugated_by(const ExtendedMoebius& g) const;  // g * this * g^-1

  bool is_identity() const;

  // Trace after normalising the determinant to 1, well defined up to sign.
  // Empty when the determinant has no square root in K (does not occur for
  // the groups built here) or for orientation-reversing elements.
  std::optional<NumberFieldElement> trace_pm() const;

  // Classify an orientation-preserving element.  Finite elliptic orders are
  // certified by a power search up to max_order.
  MoebiusClass classify(int max_order = 12) const;

  BoundaryPoint apply(const BoundaryPoint& p) const;

  std::string str() const;
};

// Composition (x * y)(z) = x(y(z)).
ExtendedMoebius operator*(const ExtendedMoebius& x, const ExtendedMoebius& y);
// Projective equality: same orientation flag and proportional matrices.
bool operator==(const ExtendedMoebius& x, const ExtendedMoebius& y);
bool operator!=(const ExtendedMoebius& x, const ExtendedMoebius& y);

// ---------------------------------------------------------------------------
// Words in named generators.
// ---------------------------------------------------------------------------

struct WordSyllable {
  std::string gen;
  int exp = 1;
};
using GroupWord = std::vector<WordSyllable>;

// The unique orientation-preserving element taking (z1, z2, z3) to
// (0, 1, inf); the three points must be distinct.
ExtendedMoebius moebius_to_zero_one_inf(const BoundaryPoint& z1, const BoundaryPoint& z2,
                                        const BoundaryPoint& z3);

// Parse a whitespace-separated word such as "s t^-2 g^3".
GroupWord parse_word(const std::string& text);

using GeneratorTable = std::map<std::string, ExtendedMoebius>;

// The fixed generator dictionary used throughout: s, t, f, g, h, p1..p4, k,
// c, m1, m2, a0, a1, a2, f0, b0, r (reflection over the real line), and the
// modular generators S, T.
const GeneratorTable& builtin_generators();

ExtendedMoebius evaluate_word(const GroupWord& word, const GeneratorTable& table);
ExtendedMoebius evaluate_word(const std::string& word, const GeneratorTable& table);
ExtendedMoebius evaluate_word(const std::string& word);  // builtin table

// The full exact identity suite over the builtin generators: the parabolic
// expressions in both generating sets, the hidden symmetry, the mutator
// conjugation table, the reflection bookkeeping, the expressions of the
// pairing maps through f0, a_i and b0, and the tangle-word images.
CheckReport identity_suite();

}  // namespace linkcomm
