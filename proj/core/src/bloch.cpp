// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/bloch.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linkcomm/polyhedra.hpp"

namespace linkcomm {

namespace {

const NumberFieldElement kOne(1);

bool nfe_less(const NumberFieldElement& x, const NumberFieldElement& y) {
  if (int c = cmp(x.a, y.a)) return c < 0;
  if (int c = cmp(x.b, y.b)) return c < 0;
  if (int c = cmp(x.c, y.c)) return c < 0;
  return cmp(x.d, y.d) < 0;
}

void require_parameter(const NumberFieldElement& z) {
  if (z.is_zero() || z == kOne) {
    throw std::invalid_argument("pre-Bloch class keys must avoid 0 and 1");
  }
}

// The cross ratio parameter of (b0, b1, b2, b3) with the vertex order
// corrected, if needed, to put the parameter in the closed upper half
// plane of the first embedding.  Throws on a flat (real) parameter unless
// allow_flat is set.
NumberFieldElement oriented_parameter(const BoundaryPoint& b0, const BoundaryPoint& b1,
                                      const BoundaryPoint& b2, const BoundaryPoint& b3,
                                      bool allow_flat = false) {
  const BoundaryPoint image = moebius_to_zero_one_inf(b0, b1, b2).apply(b3);
  if (image.infinite) throw std::invalid_argument("coincident tetrahedron vertices");
  NumberFieldElement z = image.z;
  require_parameter(z);
  const int s = z.im().sign();
  if (s == 0 && !allow_flat) throw std::invalid_argument("flat tetrahedron");
  if (s < 0) z = kOne - z;  // swap the first two vertices
  return orbit_canonical(z);
}

// ---------------------------------------------------------------------------
// Clausen machinery for D2.
// ---------------------------------------------------------------------------

// Cl2(theta) = theta - theta*log|theta|
//            + sum_n zeta(2n) theta^{2n+1} / (n (2n+1) (2 pi)^{2n}),
// converging like (theta/2pi)^{2n} for |theta| <= pi.
double clausen2(double theta) {
  static const std::vector<double> coeff = [] {
    std::vector<double> c;
    const double two_pi = 2.0 * std::acos(-1.0);
    const double K = 1000.0;
    for (int n = 1; n <= 40; ++n) {
      const double s = 2.0 * n;
      double zeta = 0.0;
      for (int k = 1000; k >= 1; --k) zeta += std::pow(k, -s);
      // Euler-Maclaurin tail beyond K.
      zeta += std::pow(K, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(K, -s) +
              s / 12.0 * std::pow(K, -s - 1.0) -
              s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(K, -s - 3.0);
      c.push_back(zeta / (n * (s + 1.0) * std::pow(two_pi, s)));
    }
    return c;
  }();
  theta = std::remainder(theta, 2.0 * std::acos(-1.0));
  if (theta == 0.0) return 0.0;
  double acc = theta - theta * std::log(std::fabs(theta));
  const double t2 = theta * theta;
  double power = theta;
  for (double cn : coeff) {
    power *= t2;
    acc += cn * power;
  }
  return acc;
}

double lobachevsky(double theta) { return 0.5 * clausen2(2.0 * theta); }

}  // namespace

bool NumberFieldLess::operator()(const NumberFieldElement& x, const NumberFieldElement& y) const {
  return nfe_less(x, y);
}

NumberFieldElement orbit_canonical(const NumberFieldElement& z) {
  require_parameter(z);
  // The 3-cycle orbit {z, 1 - 1/z, 1/(1 - z)}.
  NumberFieldElement best = z;
  const NumberFieldElement second = kOne - z.inverse();
  const NumberFieldElement third = (kOne - z).inverse();
  for (const NumberFieldElement* cand : {&second, &third}) {
    if (nfe_less(*cand, best)) best = *cand;
  }
  return best;
}

void PreBlochElement::add(const NumberFieldElement& z, int c) {
  if (c == 0) return;
  const NumberFieldElement key = orbit_canonical(z);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else if ((it->second += c) == 0) {
    terms.erase(it);
  }
}

std::string PreBlochElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [z, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << z.str() << "]";
  }
  return os.str();
}

PreBlochElement operator+(const PreBlochElement& x, const PreBlochElement& y) {
  PreBlochElement out = x;
  for (const auto& [z, c] : y.terms) out.add(z, c);
  return out;
}

PreBlochElement operator-(const PreBlochElement& x, const PreBlochElement& y) {
  PreBlochElement out = x;
  for (const auto& [z, c] : y.terms) out.add(z, -c);
  return out;
}

PreBlochElement operator*(int c, const PreBlochElement& x) {
  PreBlochElement out;
  if (c == 0) return out;
  for (const auto& [z, k] : x.terms) out.add(z, c * k);
  return out;
}

bool operator==(const PreBlochElement& x, const PreBlochElement& y) {
  return x.terms == y.terms;
}

PreBlochElement mirror(const PreBlochElement& x) {
  PreBlochElement out;
  for (const auto& [z, c] : x.terms) out.add(z.conj(), -c);
  return out;
}

NumberFieldElement cross_ratio_parameter(const BoundaryPoint& z0, const BoundaryPoint& z1,
                                         const BoundaryPoint& z2, const BoundaryPoint& z3) {
  const BoundaryPoint image = moebius_to_zero_one_inf(z0, z1, z2).apply(z3);
  if (image.infinite) throw std::invalid_argument("coincident tetrahedron vertices");
  require_parameter(image.z);
  return orbit_canonical(image.z);
}

PreBlochElement triangulate_P1() {
  const IdealPolyhedron& p = regular_ideal_octahedron();
  const int apex = p.vertex_index(BoundaryPoint(
      NumberFieldElement(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0))));
  const int inf = p.vertex_index(BoundaryPoint::infinity());
  if (apex < 0 || inf < 0) throw std::logic_error("octahedron is missing the coning edge");
  PreBlochElement out;
  NumberFieldElement first;
  bool have_first = false;
  // One tetrahedron over each face at infinity, coned to the opposite vertex.
  for (int f : p.faces_at(inf)) {
    std::vector<int> rim;
    for (int v : p.faces[f].cycle) {
      if (v != inf) rim.push_back(v);
    }
    if (rim.size() != 2) throw std::logic_error("octahedron face is not a triangle");
    const NumberFieldElement z = oriented_parameter(p.vertices[rim[0]], p.vertices[rim[1]],
                                                    p.vertices[inf], p.vertices[apex]);
    if (!have_first) {
      first = z;
      have_first = true;
    } else if (z != first) {
      throw std::logic_error("octahedron coning produced unequal parameters");
    }
    out.add(z, 1);
  }
  return out;
}

PreBlochElement triangulate_P2() {
  const IdealPolyhedron& p = ideal_cuboctahedron();
  const int inf = p.vertex_index(BoundaryPoint::infinity());
  if (inf < 0) throw std::logic_error("cuboctahedron is missing its vertex at infinity");

  // Square faces and their two diagonal choices.
  std::vector<int> squares;
  for (size_t f = 0; f < p.faces.size(); ++f) {
    if (p.faces[f].cycle.size() == 4) squares.push_back(static_cast<int>(f));
  }
  if (squares.size() != 6) throw std::logic_error("expected six square faces");
  auto square_slot = [&](int face) {
    for (size_t s = 0; s < squares.size(); ++s) {
      if (squares[s] == face) return static_cast<int>(s);
    }
    throw std::logic_error("paired face is not a square");
  };
  auto diagonal = [&](int face, int choice) {
    const auto& cyc = p.faces[face].cycle;
    return std::pair<BoundaryPoint, BoundaryPoint>(p.vertices[cyc[choice]],
                                                   p.vertices[cyc[choice + 2]]);
  };

  std::vector<FacePairingMatch> matches;
  const CheckReport pairing = verify_internal_face_pairing(p, cuboctahedron_pairing(), &matches);
  if (!pairing.ok()) throw std::logic_error("cuboctahedron face pairing failed");

  // Search the 2^6 diagonal assignments for one preserved by every pairing:
  // the image of the chosen source diagonal must be the chosen target
  // diagonal.
  int chosen_mask = -1;
  for (int mask = 0; mask < (1 << 6) && chosen_mask < 0; ++mask) {
    bool ok = true;
    for (const auto& m : matches) {
      const int ss = square_slot(m.source_face), ts = square_slot(m.target_face);
      const auto [s0, s1] = diagonal(m.source_face, (mask >> ss) & 1);
      const auto [t0, t1] = diagonal(m.target_face, (mask >> ts) & 1);
      const BoundaryPoint i0 = m.map.apply(s0), i1 = m.map.apply(s1);
      if (!((i0 == t0 && i1 == t1) || (i0 == t1 && i1 == t0))) {
        ok = false;
        break;
      }
    }
    if (ok) chosen_mask = mask;
  }
  if (chosen_mask < 0) throw std::logic_error("no compatible diagonal assignment exists");

  PreBlochElement out;
  auto add_tet = [&](int v0, int v1, int v2) {
    const NumberFieldElement z =
        oriented_parameter(p.vertices[v0], p.vertices[v1], p.vertices[v2], p.vertices[inf]);
    if (z.b != 0 || z.c != 0) {
      throw std::logic_error("cuboctahedron parameter left the expected subfield");
    }
    out.add(z, 1);
  };
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f].cycle;
    bool at_inf = false;
    for (int v : cyc) at_inf = at_inf || v == inf;
    if (at_inf) continue;  // cones flat from infinity
    if (cyc.size() == 3) {
      add_tet(cyc[0], cyc[1], cyc[2]);
    } else {
      const int d = (chosen_mask >> square_slot(static_cast<int>(f))) & 1;
      add_tet(cyc[d], cyc[d + 1], cyc[d + 2]);
      add_tet(cyc[d], cyc[d + 2], cyc[(d + 3) % 4]);
    }
  }
  return out;
}

PreBlochElement beta2() {
  static const PreBlochElement value = [] {
    const PreBlochElement half = triangulate_P2();
    return half + mirror(half);
  }();
  return value;
}

PreBlochElement bloch_invariant_Mn(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const PreBlochElement b1 = triangulate_P1();
  return b1 + mirror(b1) + n * beta2();
}

double d2(std::complex<double> z) {
  if (z.imag() == 0.0) return 0.0;
  const double s = z.imag() > 0 ? 1.0 : -1.0;
  const std::complex<double> w = s > 0 ? z : std::conj(z);
  // Volume form: the dihedral angles of the tetrahedron over (0, 1, inf, w).
  const double alpha = std::arg(w);
  const double beta = std::arg(1.0 / (1.0 - w));
  const double gamma = std::arg(1.0 - 1.0 / w);
  return s * (lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma));
}

RegulatorVector borel_regulator(const PreBlochElement& beta) {
  RegulatorVector out;
  for (const auto& [z, c] : beta.terms) {
    out.r1 += c * d2(z.embed(1));
    out.r2 += c * d2(z.embed(2));
  }
  return out;
}

IncommensurabilityCertificate incommensurability_certificate(int m, int n) {
  if (m == n) throw std::invalid_argument("the two indices must be distinct");
  IncommensurabilityCertificate cert;
  cert.m = m;
  cert.n = n;
  cert.reg_m = borel_regulator(bloch_invariant_Mn(m));
  cert.reg_n = borel_regulator(bloch_invariant_Mn(n));
  cert.det = cert.reg_m.r1 * cert.reg_n.r2 - cert.reg_m.r2 * cert.reg_n.r1;
  cert.distinct = std::fabs(cert.det) > 1e-6;
  return cert;
}

CheckReport mutation_invariance_check(const MutationWord& I) {
  CheckReport rep;
  rep.title = "mutation invariance";
  int twos = 0;
  bool alphabet_ok = !I.empty();
  for (int t : I) {
    if (t < 0 || t > 2) alphabet_ok = false;
    if (t == 2) ++twos;
  }
  rep.add("word alphabet", alphabet_ok, "entries in {0,1,2}");
  if (!alphabet_ok) return rep;

  // Each twisted sphere inserts six flat tetrahedra of parameter 2.
  PreBlochElement correction;
  const NumberFieldElement two(2);
  if (twos > 0) correction.add(two, 6 * twos);
  rep.add("flat correction size", true,
          "6 * " + std::to_string(twos) + " flat tetrahedra of parameter 2");

  const RegulatorVector reg = borel_regulator(correction);
  rep.add("correction regulator vanishes", reg.r1 == 0.0 && reg.r2 == 0.0,
          "(" + std::to_string(reg.r1) + ", " + std::to_string(reg.r2) + ")");

  // Formal 2-torsion: [z] = -[z/(z-1)] at z = 2 gives [2] = -[2].
  const NumberFieldElement self_image = two * (two - kOne).inverse();
  rep.add("formal two-torsion", self_image == two, "z/(z-1) at z = 2 returns 2");

  // A correction that is an even multiple of [2] therefore cancels.
  rep.add("correction cancels formally", (6 * twos) % 2 == 0,
          "coefficient " + std::to_string(6 * twos) + " is even");
  return rep;
}

}  // namespace linkcomm
