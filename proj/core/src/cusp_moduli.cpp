// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/cusp_moduli.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "linkcomm/polyhedra.hpp"

namespace linkcomm {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

// Moduli of the boundary annuli, computed once from the two polyhedra:
// A1, A2 from the octahedron cusp (distinguished by rectangle count) and
// the doubled annuli DB1..DB4 from the cuboctahedron cusp (odd labels are
// the one-rectangle annuli, even labels the five-rectangle ones).
struct AnnulusModuli {
  RealQuad A[3];   // A[1], A[2]
  RealQuad DB[5];  // DB[1] .. DB[4]
};

const AnnulusModuli& annulus_moduli() {
  static const AnnulusModuli table = [] {
    AnnulusModuli t;
    const auto oct = assemble_cusp_annuli(regular_ideal_octahedron(), octahedron_pairing());
    bool have_a1 = false, have_a2 = false;
    for (const auto& a : oct) {
      if (a.rectangle_cycle.size() == 1) {
        t.A[1] = a.modulus;
        have_a1 = true;
      } else {
        t.A[2] = a.modulus;
        have_a2 = true;
      }
    }
    if (!have_a1 || !have_a2 || oct.size() != 2) {
      throw std::logic_error("octahedron cusp did not split into the two expected annuli");
    }
    const auto cub = assemble_cusp_annuli(ideal_cuboctahedron(), cuboctahedron_pairing());
    int next_odd = 1, next_even = 2;
    for (const auto& a : cub) {
      const CuspAnnulus d = doubled(a);
      if (a.rectangle_cycle.size() == 1) {
        if (next_odd > 3) throw std::logic_error("too many one-rectangle cuboctahedron annuli");
        t.DB[next_odd] = d.modulus;
        next_odd += 2;
      } else {
        if (next_even > 4) throw std::logic_error("too many five-rectangle cuboctahedron annuli");
        t.DB[next_even] = d.modulus;
        next_even += 2;
      }
    }
    if (next_odd != 5 || next_even != 6) {
      throw std::logic_error("cuboctahedron cusp did not split into the four expected annuli");
    }
    return t;
  }();
  return table;
}

void check_alphabet(const MutationWord& I) {
  require(!I.empty(), "mutation word must be nonempty");
  for (int t : I) require(t == 0 || t == 2, "mutation word must lie in {0,2}^{n+1}");
}

Rational pow5(int e) {
  Rational p(1);
  for (int k = 0; k < e; ++k) p *= 5;
  return p;
}

}  // namespace

std::string CuspParameter::str() const {
  std::ostringstream os;
  os << "i(" << to_string(q1) << " + " << to_string(q2) << "*sqrt2)";
  return os.str();
}

bool operator==(const CuspParameter& x, const CuspParameter& y) {
  return x.q1 == y.q1 && x.q2 == y.q2;
}

bool operator!=(const CuspParameter& x, const CuspParameter& y) { return !(x == y); }

RealQuad annulus_sum(const AnnulusChain& chain) {
  require(!chain.empty(), "annulus chain must be nonempty");
  RealQuad total;
  for (const auto& link : chain) total = total + link.modulus;
  return total;
}

std::complex<double> modulus_from_pair(double alpha_len, double beta_len, double angle_cos) {
  require(beta_len > 0, "beta must have positive length");
  const double ratio = alpha_len / beta_len;
  const double s = std::sqrt(std::max(0.0, 1.0 - angle_cos * angle_cos));
  return {ratio * angle_cos, ratio * s};
}

std::pair<CuspParameter, CuspParameter> mn_moduli(int n) {
  require(n >= 1, "n must be positive");
  const CuspParameter t1(Rational(2), Rational(4 * n));
  const CuspParameter t2(Rational(2, 5), Rational(4 * n, 5));
  return {t1, t2};
}

std::pair<CuspParameter, CuspParameter> mutant_moduli(const MutationWord& I) {
  check_alphabet(I);
  const int n = static_cast<int>(I.size()) - 1;
  // c_j = (t_0 + ... + t_j)/2 mod 2.
  std::vector<int> c(n + 1);
  int acc = 0;
  for (int j = 0; j <= n; ++j) {
    acc = (acc + I[j] / 2) % 2;
    c[j] = acc;
  }
  CuspParameter t1(Rational(1) + 1 / pow5(c[n]), Rational(0));
  CuspParameter t2(Rational(1, 5) + 1 / pow5(1 - c[n]), Rational(0));
  for (int j = 1; j <= n; ++j) {
    t1.q2 += 4 / pow5(c[j - 1]);
    t2.q2 += 4 / pow5(1 - c[j - 1]);
  }
  t1.q1 = canonical(t1.q1);
  t1.q2 = canonical(t1.q2);
  t2.q1 = canonical(t2.q1);
  t2.q2 = canonical(t2.q2);
  return {t1, t2};
}

std::pair<CuspParameter, CuspParameter> assemble_mutant_moduli(const MutationWord& I,
                                                              std::array<AnnulusChain, 2>* chains) {
  check_alphabet(I);
  const int n = static_cast<int>(I.size()) - 1;
  const AnnulusModuli& mod = annulus_moduli();

  std::array<CuspParameter, 2> out;
  for (int side = 1; side <= 2; ++side) {
    AnnulusChain chain;
    int k = side;  // current annulus class in {1, 2}
    chain.push_back({"A" + std::to_string(k), 0, mod.A[k]});
    for (int j = 1; j <= n; ++j) {
      // Entering block j crosses the gluing controlled by t_{j-1}; a twist
      // swaps the odd and even classes ((12)(34) on the four labels).
      if (I[j - 1] == 2) k = 3 - k;
      if (k != 1 && k != 2) throw std::logic_error("annulus walk left the label set");
      chain.push_back({"DB" + std::to_string(k), j, mod.DB[k]});
      chain.push_back({"DB" + std::to_string(k + 2), j, mod.DB[k + 2]});
    }
    if (I[n] == 2) k = 3 - k;
    chain.push_back({"A" + std::to_string(k) + "~", n + 1, mod.A[k]});
    const RealQuad total = annulus_sum(chain);
    out[side - 1] = CuspParameter(total);
    if (chains) (*chains)[side - 1] = std::move(chain);
  }
  return {out[0], out[1]};
}

std::optional<bool> pgl2q_equivalent(const CuspParameter& z, const CuspParameter& zp) {
  if (z.q1 == 0 || zp.q1 == 0) return std::nullopt;
  const Rational r = canonical(z.q2 / z.q1);
  const Rational rp = canonical(zp.q2 / zp.q1);
  return r == rp || r == -rp;
}

std::optional<std::array<long, 4>> brute_force_pgl2q(const CuspParameter& z,
                                                     const CuspParameter& zp, long entry_bound) {
  require(entry_bound >= 1, "entry bound must be positive");
  const RealQuad y = z.imag();
  const RealQuad y2 = y * y;
  const RealQuad target = zp.imag();
  for (long a = -entry_bound; a <= entry_bound; ++a) {
    for (long b = -entry_bound; b <= entry_bound; ++b) {
      for (long c = -entry_bound; c <= entry_bound; ++c) {
        for (long d = -entry_bound; d <= entry_bound; ++d) {
          const long det = a * d - b * c;
          if (det == 0) continue;
          // Image of i*y: ((a*c*y^2 + b*d) + i*y*det) / (d^2 + c^2*y^2);
          // purely imaginary iff a*c*y^2 + b*d = 0.
          const long ac = a * c, bd = b * d;
          if (ac == 0) {
            if (bd != 0) continue;
          } else {
            if (y2.b != 0) continue;
            if (Rational(ac) * y2.a + bd != 0) continue;
          }
          const RealQuad w =
              y * RealQuad(Rational(det)) / (RealQuad(Rational(d * d)) + RealQuad(Rational(c * c)) * y2);
          // The image i*w must be a rational multiple of i*(q1' + q2'*sqrt2).
          if (w.a * target.b == w.b * target.a && !w.is_zero()) {
            return std::array<long, 4>{a, b, c, d};
          }
        }
      }
    }
  }
  return std::nullopt;
}

const FamilyClassification::Entry& FamilyClassification::find(const MutationWord& w) const {
  for (const auto& e : entries) {
    if (e.word == w) return e;
  }
  throw std::out_of_range("word not in classification");
}

FamilyClassification classify_family(int n) {
  require(n >= 1 && n <= 12, "family size must satisfy 1 <= n <= 12");
  FamilyClassification out;
  // Invariant of the unordered parameter pair: the two ratios q2/q1 with a
  // canonical sign, sorted.
  std::map<std::pair<Rational, Rational>, int> class_of;
  for (long mask = 0; mask < (1L << (n + 1)); ++mask) {
    MutationWord w(n + 1);
    for (int j = 0; j <= n; ++j) w[j] = ((mask >> (n - j)) & 1) ? 2 : 0;
    const auto [t1, t2] = mutant_moduli(w);
    Rational r1 = canonical(abs(RealQuad(t1.q2 / t1.q1)).a);
    Rational r2 = canonical(abs(RealQuad(t2.q2 / t2.q1)).a);
    if (r2 < r1) std::swap(r1, r2);
    auto [it, fresh] = class_of.try_emplace({r1, r2}, out.num_classes);
    if (fresh) ++out.num_classes;
    out.entries.push_back({std::move(w), t1, t2, it->second});
  }
  return out;
}

}  // namespace linkcomm
