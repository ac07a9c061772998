// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/cusp_moduli.hpp"

#include <complex>
#include <random>
#include <set>

#include "doctest.h"

using namespace linkcomm;

namespace {

CuspParameter cp(long q1n, long q1d, long q2n, long q2d) {
  return CuspParameter(Rational(q1n, q1d), Rational(q2n, q2d));
}

MutationWord single_two(int n, int k) {
  MutationWord w(n + 1, 0);
  w[k] = 2;
  return w;
}

MutationWord adjacent_twos(int n, int k) {
  MutationWord w(n + 1, 0);
  w[k] = w[k + 1] = 2;
  return w;
}

}  // namespace

TEST_CASE("annulus_sum on the basic chains") {
  const RealQuad sqrt2 = RealQuad::sqrt2();
  const AnnulusChain t1_chain = {{"A1", 0, RealQuad(1)},
                                 {"DB1", 1, RealQuad(2) * sqrt2},
                                 {"DB3", 1, RealQuad(2) * sqrt2},
                                 {"A1~", 2, RealQuad(1)}};
  CHECK(annulus_sum(t1_chain) == RealQuad(Rational(2), Rational(4)));

  CHECK(annulus_sum({{"A1", 0, RealQuad(1)}}) == RealQuad(1));

  const RealQuad fifth(Rational(1, 5));
  const AnnulusChain t2_chain = {{"A2", 0, fifth},
                                 {"DB2", 1, RealQuad(2) * sqrt2 * fifth},
                                 {"DB4", 1, RealQuad(2) * sqrt2 * fifth},
                                 {"A2~", 2, fifth}};
  CHECK(annulus_sum(t2_chain) == RealQuad(Rational(2, 5), Rational(4, 5)));

  CHECK_THROWS(annulus_sum({}));
}

TEST_CASE("modulus_from_pair") {
  const auto rect = modulus_from_pair(3.0, 1.0, 0.0);
  CHECK(rect.real() == doctest::Approx(0.0));
  CHECK(rect.imag() == doctest::Approx(3.0));

  // alpha = 1 + i against beta = 1: length sqrt2 at 45 degrees.
  const double c = 1.0 / std::sqrt(2.0);
  const auto skew = modulus_from_pair(std::sqrt(2.0), 1.0, c);
  CHECK(skew.real() == doctest::Approx(1.0));
  CHECK(skew.imag() == doctest::Approx(1.0));

  const auto square = modulus_from_pair(1.0, 1.0, 0.0);
  CHECK(square.real() == doctest::Approx(0.0));
  CHECK(square.imag() == doctest::Approx(1.0));

  CHECK_THROWS(modulus_from_pair(1.0, 0.0, 0.0));
}

TEST_CASE("mn_moduli closed form") {
  for (int n = 1; n <= 10; ++n) {
    const auto [t1, t2] = mn_moduli(n);
    CHECK(t1 == cp(2, 1, 4 * n, 1));
    CHECK(t2 == cp(2, 5, 4 * n, 5));
  }
}

TEST_CASE("mutant closed form: all-zero word reduces to the chain values") {
  for (int n = 1; n <= 6; ++n) {
    const auto direct = mn_moduli(n);
    const auto mut = mutant_moduli(MutationWord(n + 1, 0));
    CHECK(mut.first == direct.first);
    CHECK(mut.second == direct.second);
  }
}

TEST_CASE("mutant closed form: printed family values") {
  // Single 2 at position k: T1 = i[6/5 + (4/5)(n+4k) sqrt2] and
  // T2 = i[6/5 + (4/5)(5n-4k) sqrt2].
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto [t1, t2] = mutant_moduli(single_two(n, k));
      CHECK(t1 == cp(6, 5, 4 * (n + 4 * k), 5));
      CHECK(t2 == cp(6, 5, 4 * (5 * n - 4 * k), 5));
    }
  }
  // Adjacent 2s at k, k+1: T1 = i[2 + 4(n - 4/5) sqrt2] and
  // T2 = i[2/5 + (4/5)(n+4) sqrt2], independent of k.
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto [t1, t2] = mutant_moduli(adjacent_twos(n, k));
      CHECK(t1 == cp(2, 1, 4 * (5 * n - 4), 5));
      CHECK(t2 == cp(2, 5, 4 * (n + 4), 5));
    }
  }
}

TEST_CASE("assembly walk agrees with the closed form exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    for (long mask = 0; mask < (1L << (n + 1)); ++mask) {
      MutationWord w(n + 1);
      for (int j = 0; j <= n; ++j) w[j] = ((mask >> j) & 1) ? 2 : 0;
      const auto walk = assemble_mutant_moduli(w);
      const auto closed = mutant_moduli(w);
      CHECK(walk.first == closed.first);
      CHECK(walk.second == closed.second);
    }
  }
}

TEST_CASE("assembly chains have the expected shape") {
  std::array<AnnulusChain, 2> chains;
  assemble_mutant_moduli(parse_mutation_word("2,0"), &chains);
  // T1 starts on A1, crosses into the even annulus classes, and the
  // trailing 0 keeps it there.
  REQUIRE(chains[0].size() == 4);
  CHECK(chains[0][0].label == "A1");
  CHECK(chains[0][1].label == "DB2");
  CHECK(chains[0][2].label == "DB4");
  CHECK(chains[0][3].label == "A2~");
  // T2 crosses the other way.
  CHECK(chains[1][0].label == "A2");
  CHECK(chains[1][1].label == "DB1");
  CHECK(chains[1][2].label == "DB3");
  CHECK(chains[1][3].label == "A1~");

  // All-zero word: the chain of the unmutated manifold.
  assemble_mutant_moduli(parse_mutation_word("0,0"), &chains);
  CHECK(chains[0][0].label == "A1");
  CHECK(chains[0][1].label == "DB1");
  CHECK(chains[0][3].label == "A1~");
}

TEST_CASE("pgl2q_equivalent ratio criterion") {
  const CuspParameter z = cp(2, 1, 4, 1);
  CHECK(pgl2q_equivalent(z, cp(2, 1, -4, 1)) == std::optional<bool>(true));
  CHECK(pgl2q_equivalent(z, cp(2, 1, 8, 1)) == std::optional<bool>(false));
  CHECK(pgl2q_equivalent(z, cp(2, 5, 4, 5)) == std::optional<bool>(true));  // rational scaling
  CHECK(pgl2q_equivalent(cp(0, 1, 4, 1), z) == std::nullopt);

  // Equivalence relation on parameters with q1 != 0: reflexive, symmetric,
  // transitive over a small sample.
  std::vector<CuspParameter> sample;
  for (long a = 1; a <= 3; ++a)
    for (long b = -2; b <= 2; ++b) sample.push_back(cp(a, 1, b, 1));
  for (const auto& x : sample) {
    CHECK(pgl2q_equivalent(x, x) == std::optional<bool>(true));
    for (const auto& y : sample) {
      CHECK(pgl2q_equivalent(x, y) == pgl2q_equivalent(y, x));
      for (const auto& w : sample) {
        if (*pgl2q_equivalent(x, y) && *pgl2q_equivalent(y, w)) {
          CHECK(*pgl2q_equivalent(x, w));
        }
      }
    }
  }
}

TEST_CASE("brute force oracle basics") {
  const CuspParameter z = cp(2, 1, 4, 1);
  const auto self = brute_force_pgl2q(z, z, 1);
  REQUIRE(self);

  const auto twist = brute_force_pgl2q(z, cp(2, 1, -4, 1), 10);
  REQUIRE(twist);
  CHECK((*twist)[0] == 0);  // a = d = 0 form
  CHECK((*twist)[3] == 0);

  CHECK_FALSE(brute_force_pgl2q(z, cp(2, 1, 8, 1), 12));
}

TEST_CASE("pgl2q_equivalent agrees with the brute force oracle on sampled pairs") {
  const FamilyClassification fam = classify_family(3);
  std::mt19937 rng(20260825u);
  std::uniform_int_distribution<size_t> pick(0, fam.entries.size() - 1);
  int positives = 0, negatives = 0, checked = 0;
  while (checked < 60) {
    const auto& e1 = fam.entries[pick(rng)];
    const auto& e2 = fam.entries[pick(rng)];
    for (const CuspParameter* a : {&e1.T1, &e1.T2}) {
      for (const CuspParameter* b : {&e2.T1, &e2.T2}) {
        const auto fast = pgl2q_equivalent(*a, *b);
        REQUIRE(fast);
        const bool oracle = brute_force_pgl2q(*a, *b, 12).has_value();
        CHECK(*fast == oracle);
        (*fast ? positives : negatives) += 1;
      }
    }
    checked += 4;
  }
  CHECK(positives > 0);
  CHECK(negatives > 0);
}

TEST_CASE("classify_family structure") {
  const int n = 4;
  const FamilyClassification fam = classify_family(n);
  CHECK(fam.entries.size() == 32);
  CHECK(fam.num_classes >= 3);

  // The single-2 words fall into ceil((n+1)/2) classes, paired k <-> n-k.
  std::set<int> single_classes;
  for (int k = 0; k <= n; ++k) {
    const auto& ek = fam.find(single_two(n, k));
    const auto& emirror = fam.find(single_two(n, n - k));
    CHECK(ek.class_id == emirror.class_id);
    single_classes.insert(ek.class_id);
  }
  CHECK(single_classes.size() == (n + 2) / 2);
  // Distinct classes for k != k' below (n+1)/2.
  for (int k = 0; 2 * k + 1 < n + 1; ++k) {
    for (int k2 = k + 1; 2 * k2 + 1 < n + 1; ++k2) {
      CHECK(fam.find(single_two(n, k)).class_id != fam.find(single_two(n, k2)).class_id);
    }
  }

  // The adjacent-pair words share one class.
  std::set<int> pair_classes;
  for (int k = 0; k < n; ++k) pair_classes.insert(fam.find(adjacent_twos(n, k)).class_id);
  CHECK(pair_classes.size() == 1);

  // The all-zero word sits with the unmutated chain parameters.
  const auto& zero = fam.find(MutationWord(n + 1, 0));
  CHECK(zero.T1 == mn_moduli(n).first);
  CHECK(*pgl2q_equivalent(zero.T1, zero.T2));
}
