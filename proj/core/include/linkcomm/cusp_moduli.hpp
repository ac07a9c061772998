// SPDX-License-Identifier: Apache-2.0
//
// Cusp modulus calculus for the chained manifolds and their {0,2}-mutants:
// purely imaginary cusp parameters i(q1 + q2*sqrt2), annulus-chain sums,
// the closed-form parameter formulas, the independent chain-walk assembly
// wired to the polyhedra module, PGL2(Q)-equivalence testing with a
// brute-force integer-matrix oracle, and the family classification.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkcomm/kleinian.hpp"
#include "linkcomm/numfield.hpp"

namespace linkcomm {

// A purely imaginary cusp parameter i(q1 + q2*sqrt2) with q1 + q2*sqrt2 > 0.
struct CuspParameter {
  Rational q1;
  Rational q2;

  CuspParameter() : q1(0), q2(0) {}
  CuspParameter(Rational q1_, Rational q2_)
      : q1(canonical(std::move(q1_))), q2(canonical(std::move(q2_))) {}
  explicit CuspParameter(const RealQuad& y) : q1(y.a), q2(y.b) {}

  RealQuad imag() const { return RealQuad(q1, q2); }
  std::string str() const;  // "i(q1 + q2*sqrt2)"
};

bool operator==(const CuspParameter& x, const CuspParameter& y);
bool operator!=(const CuspParameter& x, const CuspParameter& y);

// One annulus in a cusp cross-section chain: a label such as "A1" or "DB3",
// the block index it sits in (0 for the end pieces), and its modulus.
struct AnnulusChainLink {
  std::string label;
  int block = 0;
  RealQuad modulus;
};
using AnnulusChain = std::vector<AnnulusChainLink>;

// Total modulus of a torus sliced into parallel annuli: the sum of the
// annulus moduli.  Throws on an empty chain.
RealQuad annulus_sum(const AnnulusChain& chain);

// Complex modulus tau + i*mu of the lattice spanned by beta (real, length
// beta_len) and alpha (length alpha_len, meeting beta at angle with the
// given cosine): tau = (|alpha|/|beta|) cos, mu = (|alpha|/|beta|) |sin|.
std::complex<double> modulus_from_pair(double alpha_len, double beta_len, double angle_cos);

// Exact cusp parameters of the length-n chain: T1 = i(2 + 4n*sqrt2) and
// T2 = i(2 + 4n*sqrt2)/5.
std::pair<CuspParameter, CuspParameter> mn_moduli(int n);

// Closed-form cusp parameters of the {0,2}-mutant indexed by
// I = (t_0, ..., t_n), via the partial twist counts
// c_j = (t_0 + ... + t_j)/2 mod 2:
//   T1 = i[1 + sum_j 4*sqrt2/5^{c_{j-1}} + 1/5^{c_n}],
//   T2 the same with every exponent c replaced by 1 - c.
std::pair<CuspParameter, CuspParameter> mutant_moduli(const MutationWord& I);

// Independent assembly of the same parameters: walk the annulus chains
// through the blocks using the gluing permutation rule (a 2-entry swaps the
// odd and even annulus classes), taking every annulus modulus from the
// polyhedra module's cusp assembly, then apply annulus_sum.  The chains are
// returned when requested.  Throws if a walk leaves the legal label set.
std::pair<CuspParameter, CuspParameter> assemble_mutant_moduli(
    const MutationWord& I, std::array<AnnulusChain, 2>* chains = nullptr);

// PGL2(Q)-equivalence of purely imaginary parameters: i(q1 + q2*sqrt2) and
// i(q1' + q2'*sqrt2) are equivalent iff q2/q1 = +-q2'/q1'.  Parameters with
// q1 = 0 fall outside the criterion: nullopt ("undecided").
std::optional<bool> pgl2q_equivalent(const CuspParameter& z, const CuspParameter& zp);

// Exhaustive oracle: search integer matrices (a b; c d) with nonzero
// determinant and |entries| <= entry_bound for one whose Moebius action
// takes i*y to a rational multiple of i*y' (rational rescalings are
// themselves in PGL2(Q)).  Returns a witness matrix or nullopt.
std::optional<std::array<long, 4>> brute_force_pgl2q(const CuspParameter& z,
                                                     const CuspParameter& zp, long entry_bound);

// Partition of {0,2}^{n+1} by the unordered pair (T1, T2) of cusp
// parameters up to PGL2(Q)-equivalence.
struct FamilyClassification {
  struct Entry {
    MutationWord word;
    CuspParameter T1;
    CuspParameter T2;
    int class_id = -1;
  };
  std::vector<Entry> entries;  // in lexicographic word order
  int num_classes = 0;

  const Entry& find(const MutationWord& w) const;  // throws if absent
};

FamilyClassification classify_family(int n);

}  // namespace linkcomm
