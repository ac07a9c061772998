// SPDX-License-Identifier: Apache-2.0

#include "linkcomm/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linkcomm/tiling.hpp"

namespace linkcomm {

namespace {

// Cyclic boundary order of coplanar ideal points: send three of them to
// (0, 1, inf); the common circle maps to the real line, so sorting the real
// images (infinity last) is a circular order.
std::vector<int> order_cycle(const std::vector<BoundaryPoint>& verts, std::vector<int> ids) {
  const ExtendedMoebius mu = moebius_to_zero_one_inf(verts[ids[0]], verts[ids[1]], verts[ids[2]]);
  std::map<int, BoundaryPoint> image;
  for (int id : ids) {
    BoundaryPoint p = mu.apply(verts[id]);
    if (!p.infinite && !p.z.is_real()) {
      throw std::logic_error("order_cycle: points are not concircular");
    }
    image.emplace(id, std::move(p));
  }
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    const BoundaryPoint& px = image.at(x);
    const BoundaryPoint& py = image.at(y);
    if (px.infinite) return false;
    if (py.infinite) return true;
    return px.z.re() < py.z.re();
  });
  return ids;
}

}  // namespace

std::vector<int> IdealPolyhedron::faces_at(int v) const {
  std::vector<int> out;
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& cyc = faces[fi].cycle;
    if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) out.push_back(fi);
  }
  return out;
}

std::vector<int> IdealPolyhedron::neighbors(int v) const {
  std::set<int> out;
  for (const auto& f : faces) {
    const int m = static_cast<int>(f.cycle.size());
    for (int k = 0; k < m; ++k) {
      if (f.cycle[k] == v) {
        out.insert(f.cycle[(k + m - 1) % m]);
        out.insert(f.cycle[(k + 1) % m]);
      }
    }
  }
  return {out.begin(), out.end()};
}

int IdealPolyhedron::vertex_index(const BoundaryPoint& p) const {
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (vertices[i] == p) return i;
  }
  return -1;
}

int IdealPolyhedron::face_with_vertices(std::vector<int> verts) const {
  std::sort(verts.begin(), verts.end());
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    std::vector<int> cyc = faces[fi].cycle;
    std::sort(cyc.begin(), cyc.end());
    if (cyc == verts) return fi;
  }
  return -1;
}

IdealPolyhedron hull_faces(const std::vector<BoundaryPoint>& vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 4) throw std::invalid_argument("hull_faces: need at least 4 ideal points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (vertices[i] == vertices[j]) throw std::invalid_argument("hull_faces: repeated vertex");
    }

  std::vector<LorentzVector> lifts;
  lifts.reserve(n);
  for (const auto& v : vertices) lifts.push_back(boundary_to_lightcone(v));

  IdealPolyhedron p;
  p.vertices = vertices;
  std::set<std::vector<int>> seen;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Hyperplane h = hyperplane_through({vertices[i], vertices[j], vertices[k]});
        const LorentzVector u = h.normal();
        int pos = 0, neg = 0;
        std::vector<int> on_plane;
        for (int v = 0; v < n; ++v) {
          const int s = lorentz_inner(u, lifts[v]).sign();
          if (s > 0) ++pos;
          else if (s < 0) ++neg;
          else on_plane.push_back(v);
        }
        if (static_cast<int>(on_plane.size()) == n) {
          throw std::invalid_argument("hull_faces: all points lie on one circle");
        }
        if (pos > 0 && neg > 0) continue;  // not a supporting plane
        if (!seen.insert(on_plane).second) continue;
        IdealPolyhedron::Face f;
        f.plane = h;
        f.inward = u;
        if (neg > 0) {
          for (auto& c : f.inward) c = -c;
        }
        f.cycle = order_cycle(vertices, on_plane);
        p.faces.push_back(std::move(f));
      }
  if (p.faces.size() < 4) throw std::invalid_argument("hull_faces: degenerate hull");
  return p;
}

void checker(IdealPolyhedron& p, int external_face) {
  const int nf = static_cast<int>(p.faces.size());
  if (external_face < 0 || external_face >= nf) {
    throw std::invalid_argument("checker: bad seed face index");
  }
  // Two faces are adjacent when they share an edge, i.e. exactly 2 vertices.
  auto adjacent = [&](int a, int b) {
    int common = 0;
    for (int v : p.faces[a].cycle) {
      const auto& cyc = p.faces[b].cycle;
      if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) ++common;
    }
    return common == 2;
  };
  std::vector<int> color(nf, -1);
  std::vector<int> queue = {external_face};
  color[external_face] = 0;
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    for (int g = 0; g < nf; ++g) {
      if (g == f || !adjacent(f, g)) continue;
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        queue.push_back(g);
      } else if (color[g] == color[f]) {
        throw std::runtime_error("checker: face adjacency graph is not 2-colorable");
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (color[f] == -1) throw std::runtime_error("checker: face adjacency graph is disconnected");
    p.faces[f].external = (color[f] == 0);
  }
  p.checkered = true;
}

std::vector<NamedIsometry> octahedron_pairing() {
  const auto& tbl = builtin_generators();
  return {{"s", tbl.at("s")},
          {"s^-1", tbl.at("s").inverse()},
          {"t", tbl.at("t")},
          {"t^-1", tbl.at("t").inverse()}};
}

std::vector<NamedIsometry> cuboctahedron_pairing() {
  const auto& tbl = builtin_generators();
  return {{"f", tbl.at("f")},       {"f^-1", tbl.at("f").inverse()},
          {"g", tbl.at("g")},       {"g^-1", tbl.at("g").inverse()},
          {"h", tbl.at("h")},       {"h^-1", tbl.at("h").inverse()}};
}

const IdealPolyhedron& regular_ideal_octahedron() {
  static const IdealPolyhedron poly = [] {
    const NumberFieldElement i = NumberFieldElement::i();
    const std::vector<BoundaryPoint> vs = {
        BoundaryPoint::infinity(),
        BoundaryPoint(NumberFieldElement(0)),
        BoundaryPoint(NumberFieldElement(1)),
        BoundaryPoint(i),
        BoundaryPoint(NumberFieldElement(1) + i),
        BoundaryPoint((NumberFieldElement(1) + i) / NumberFieldElement(2))};
    IdealPolyhedron q = hull_faces(vs);
    const int ext = q.face_with_vertices({0, 1, 2});  // {inf, 0, 1}
    if (ext < 0) throw std::logic_error("octahedron: seed face {inf, 0, 1} missing");
    checker(q, ext);
    return q;
  }();
  return poly;
}

const IdealPolyhedron& ideal_cuboctahedron() {
  static const IdealPolyhedron poly = [] {
    const auto mn = load_MN();
    std::vector<BoundaryPoint> raw;
    for (const auto& col : mn.first.columns) raw.push_back(lightcone_to_boundary(col));
    const IdealPolyhedron rough = hull_faces(raw);

    const NumberFieldElement one(1);
    const NumberFieldElement is2 = NumberFieldElement::i_sqrt2();
    const NumberFieldElement half{Rational(1, 2)};
    const std::vector<BoundaryPoint> labels = {
        BoundaryPoint(NumberFieldElement(0)), BoundaryPoint(one),
        BoundaryPoint(NumberFieldElement(0) - is2 * half), BoundaryPoint(NumberFieldElement(0) - is2),
        BoundaryPoint(one - is2), BoundaryPoint(one - is2 * half)};
    const ExtendedMoebius refl = builtin_generators().at("r");

    // Normalise: some ordered triangular face must go to (0, 1, inf) so that
    // the vertex list reproduces the reference labels and the square faces
    // are paired by {f, g, h}.
    for (const auto& face : rough.faces) {
      if (face.cycle.size() != 3) continue;
      std::array<int, 3> c = {face.cycle[0], face.cycle[1], face.cycle[2]};
      std::sort(c.begin(), c.end());
      do {
        const ExtendedMoebius mu0 = moebius_to_zero_one_inf(raw[c[0]], raw[c[1]], raw[c[2]]);
        for (int rev = 0; rev < 2; ++rev) {
          const ExtendedMoebius mu = rev ? refl * mu0 : mu0;
          std::vector<BoundaryPoint> mapped;
          std::set<BoundaryPoint> image;
          for (const auto& v : raw) {
            mapped.push_back(mu.apply(v));
            image.insert(mapped.back());
          }
          const bool has_labels = std::all_of(labels.begin(), labels.end(),
                                              [&](const BoundaryPoint& l) { return image.count(l) > 0; });
          if (!has_labels) continue;
          IdealPolyhedron q = hull_faces(mapped);
          const int ext = q.face_with_vertices({q.vertex_index(labels[0]), q.vertex_index(labels[1]),
                                                q.vertex_index(BoundaryPoint::infinity())});
          if (ext < 0) continue;
          try {
            checker(q, ext);
          } catch (const std::exception&) {
            continue;
          }
          const bool shapes_ok =
              std::all_of(q.faces.begin(), q.faces.end(), [](const IdealPolyhedron::Face& f) {
                return f.cycle.size() == (f.external ? 3u : 4u);
              });
          if (!shapes_ok) continue;
          if (!verify_internal_face_pairing(q, cuboctahedron_pairing()).ok()) continue;
          return q;
        }
      } while (std::next_permutation(c.begin(), c.end()));
    }
    throw std::runtime_error(
        "cuboctahedron: no normalisation reproduces the reference labels with the "
        "square faces paired by {f, g, h}");
  }();
  return poly;
}

CheckReport verify_internal_face_pairing(const IdealPolyhedron& p,
                                         const std::vector<NamedIsometry>& maps,
                                         std::vector<FacePairingMatch>* matches_out) {
  CheckReport rep;
  rep.title = "internal face pairing";
  if (!p.checkered) {
    rep.add("polyhedron is checkered", false);
    return rep;
  }
  std::vector<int> internal;
  for (int fi = 0; fi < static_cast<int>(p.faces.size()); ++fi) {
    if (!p.faces[fi].external) internal.push_back(fi);
  }

  std::vector<FacePairingMatch> matches;
  std::map<int, int> as_source, as_target;
  for (const auto& nm : maps) {
    std::vector<FacePairingMatch> found;
    for (int fi : internal) {
      std::vector<int> img_ids;
      bool in_vertex_set = true;
      for (int vid : p.faces[fi].cycle) {
        const int w = p.vertex_index(nm.map.apply(p.vertices[vid]));
        if (w < 0) {
          in_vertex_set = false;
          break;
        }
        img_ids.push_back(w);
      }
      if (!in_vertex_set) continue;
      const int gi = p.face_with_vertices(img_ids);
      if (gi < 0 || p.faces[gi].external) continue;
      // Separation: the image of the whole polyhedron must lie in the closed
      // half-space on the far side of the target face.
      bool separated = true;
      for (const auto& v : p.vertices) {
        const LorentzVector lift = boundary_to_lightcone(nm.map.apply(v));
        if (lorentz_inner(p.faces[gi].inward, lift).sign() > 0) {
          separated = false;
          break;
        }
      }
      if (!separated) continue;
      found.push_back({fi, gi, nm.map, nm.name});
    }
    std::ostringstream os;
    for (const auto& m : found) os << " face " << m.source_face << " -> face " << m.target_face;
    rep.add(nm.name + " carries exactly one internal face onto another, image on the far side",
            found.size() == 1, found.empty() ? "no match" : os.str());
    if (found.size() == 1) {
      matches.push_back(found.front());
      ++as_source[found.front().source_face];
      ++as_target[found.front().target_face];
    }
  }

  bool closed = true;
  for (const auto& nm : maps) {
    const ExtendedMoebius inv = nm.map.inverse();
    closed = closed && std::any_of(maps.begin(), maps.end(),
                                   [&](const NamedIsometry& o) { return o.map == inv; });
  }
  rep.add("pairing set is closed under inverses", closed);

  bool cover = matches.size() == internal.size();
  for (int fi : internal) cover = cover && as_source[fi] == 1 && as_target[fi] == 1;
  rep.add("every internal face occurs exactly once as source and once as target", cover);

  if (matches_out && rep.ok()) *matches_out = matches;
  return rep;
}

// ---------------------------------------------------------------------------
// Horoball cross-sections and cusp annuli.
// ---------------------------------------------------------------------------

namespace {

struct LinkWalk {
  std::vector<int> corners;  // neighbors of v in cyclic order
  std::vector<int> sides;    // sides[k] = face carrying the side corners[k]..corners[k+1]
};

// Walk the faces around a vertex: each face at v contributes the edge of the
// link between the two neighbors of v on that face.
LinkWalk vertex_link(const IdealPolyhedron& p, int v) {
  const std::vector<int> fs = p.faces_at(v);
  if (fs.size() < 3) throw std::logic_error("vertex_link: vertex has fewer than 3 faces");
  auto pair_in = [&](int fi) -> std::array<int, 2> {
    const auto& cyc = p.faces[fi].cycle;
    const int m = static_cast<int>(cyc.size());
    for (int k = 0; k < m; ++k) {
      if (cyc[k] == v) return {cyc[(k + m - 1) % m], cyc[(k + 1) % m]};
    }
    throw std::logic_error("vertex_link: face does not contain the vertex");
  };
  LinkWalk w;
  const auto first = pair_in(fs[0]);
  w.corners = {first[0], first[1]};
  w.sides = {fs[0]};
  int cur_face = fs[0];
  int cur_corner = first[1];
  while (true) {
    int next_face = -1;
    for (int fi : fs) {
      if (fi == cur_face) continue;
      const auto q = pair_in(fi);
      if (q[0] == cur_corner || q[1] == cur_corner) {
        next_face = fi;
        break;
      }
    }
    if (next_face < 0) throw std::logic_error("vertex_link: link is not a closed cycle");
    const auto q = pair_in(next_face);
    const int next_corner = (q[0] == cur_corner) ? q[1] : q[0];
    w.sides.push_back(next_face);
    if (next_corner == w.corners.front()) break;
    w.corners.push_back(next_corner);
    cur_face = next_face;
    cur_corner = next_corner;
  }
  if (w.sides.size() != w.corners.size()) {
    throw std::logic_error("vertex_link: side/corner count mismatch");
  }
  return w;
}

}  // namespace

CrossSection horoball_cross_section(const IdealPolyhedron& p, int v, const HoroData& scale) {
  if (v < 0 || v >= static_cast<int>(p.vertices.size())) {
    throw std::invalid_argument("horoball_cross_section: bad vertex index");
  }
  if (scale.center != p.vertices[v]) {
    throw std::invalid_argument("horoball_cross_section: horosphere not centered at the vertex");
  }
  ExtendedMoebius g = ExtendedMoebius::identity();
  if (!p.vertices[v].infinite) {
    g = ExtendedMoebius(NumberFieldElement(0), NumberFieldElement(1), NumberFieldElement(1),
                        NumberFieldElement(0) - p.vertices[v].z);
  }
  const HoroData at_inf = apply_to_horosphere(g, scale);
  if (!at_inf.center.infinite) throw std::logic_error("horoball_cross_section: transport failed");
  const RealQuad height = at_inf.size;

  const LinkWalk w = vertex_link(p, v);
  CrossSection cs;
  cs.corners = w.corners;
  cs.side_faces = w.sides;
  const int m = static_cast<int>(w.corners.size());
  for (int k = 0; k < m; ++k) {
    const BoundaryPoint z1 = g.apply(p.vertices[w.corners[k]]);
    const BoundaryPoint z2 = g.apply(p.vertices[w.corners[(k + 1) % m]]);
    if (z1.infinite || z2.infinite) {
      throw std::logic_error("horoball_cross_section: neighbor mapped to infinity");
    }
    const NumberFieldElement d = z2.z - z1.z;
    const RealQuad abs2 = (d * d.conj()).re();
    const auto root = exact_sqrt(abs2);
    if (!root) throw std::domain_error("horoball_cross_section: side length not in Q(sqrt2)");
    cs.side_lengths.push_back(*root / height);
    cs.side_external.push_back(p.faces[w.sides[k]].external);
  }
  return cs;
}

std::optional<ExtendedMoebius> polyhedron_symmetry(const IdealPolyhedron& p, int from, int to) {
  const auto& vs = p.vertices;
  const int n = static_cast<int>(vs.size());
  const std::set<BoundaryPoint> vset(vs.begin(), vs.end());
  const std::vector<int> nb = p.neighbors(from);
  if (nb.size() < 2) return std::nullopt;
  const ExtendedMoebius a = moebius_to_zero_one_inf(vs[from], vs[nb[0]], vs[nb[1]]);
  const ExtendedMoebius refl = builtin_generators().at("r");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == to || y == to || x == y) continue;
      const ExtendedMoebius b = moebius_to_zero_one_inf(vs[to], vs[x], vs[y]);
      for (int rev = 0; rev < 2; ++rev) {
        const ExtendedMoebius g = rev ? b.inverse() * refl * a : b.inverse() * a;
        bool good = g.apply(vs[from]) == vs[to];
        for (int v = 0; good && v < n; ++v) good = vset.count(g.apply(vs[v])) > 0;
        if (good) return g;
      }
    }
  return std::nullopt;
}

std::vector<HoroData> symmetric_horoball_family(const IdealPolyhedron& p) {
  const int inf = p.vertex_index(BoundaryPoint::infinity());
  if (inf < 0) {
    throw std::invalid_argument("symmetric_horoball_family: polyhedron has no vertex at infinity");
  }
  const HoroData base{BoundaryPoint::infinity(), RealQuad(2)};
  std::vector<HoroData> out;
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
    if (v == inf) {
      out.push_back(base);
      continue;
    }
    const auto g = polyhedron_symmetry(p, inf, v);
    if (!g) {
      throw std::runtime_error("symmetric_horoball_family: no symmetry reaches vertex " +
                               p.vertices[v].str());
    }
    out.push_back(apply_to_horosphere(*g, base));
  }
  return out;
}

std::vector<CuspAnnulus> assemble_cusp_annuli(const IdealPolyhedron& p,
                                              const std::vector<NamedIsometry>& pairing,
                                              const std::vector<HoroData>* scales) {
  std::vector<FacePairingMatch> matches;
  const CheckReport rep = verify_internal_face_pairing(p, pairing, &matches);
  if (!rep.ok()) throw std::runtime_error("assemble_cusp_annuli: face pairing verification failed");
  std::map<int, const FacePairingMatch*> by_source;
  for (const auto& m : matches) by_source[m.source_face] = &m;

  const int n = static_cast<int>(p.vertices.size());
  const std::vector<HoroData> fam = scales ? *scales : symmetric_horoball_family(p);
  if (static_cast<int>(fam.size()) != n) {
    throw std::invalid_argument("assemble_cusp_annuli: need one horosphere per vertex");
  }

  struct Rect {
    RealQuad width, length;
    std::array<int, 2> internal_faces;
  };
  std::vector<Rect> rects;
  for (int v = 0; v < n; ++v) {
    const CrossSection cs = horoball_cross_section(p, v, fam[v]);
    std::vector<int> int_faces;
    std::vector<RealQuad> int_len, ext_len;
    for (size_t k = 0; k < cs.side_faces.size(); ++k) {
      if (cs.side_external[k]) {
        ext_len.push_back(cs.side_lengths[k]);
      } else {
        int_faces.push_back(cs.side_faces[k]);
        int_len.push_back(cs.side_lengths[k]);
      }
    }
    if (int_faces.size() != 2 || ext_len.size() != 2) {
      throw std::runtime_error("assemble_cusp_annuli: vertex cross-section is not a rectangle");
    }
    if (int_len[0] != int_len[1] || ext_len[0] != ext_len[1]) {
      throw std::runtime_error("assemble_cusp_annuli: opposite sides of a rectangle differ");
    }
    rects.push_back({int_len[0], ext_len[0], {int_faces[0], int_faces[1]}});
  }

  std::vector<bool> visited(n, false);
  std::vector<CuspAnnulus> out;
  for (int v0 = 0; v0 < n; ++v0) {
    if (visited[v0]) continue;
    CuspAnnulus ann;
    ann.width = rects[v0].width;
    RealQuad core(0);
    int v = v0;
    int entered = rects[v0].internal_faces[0];
    while (true) {
      visited[v] = true;
      ann.rectangle_cycle.push_back(v);
      core = core + rects[v].length;
      if (rects[v].width != ann.width) {
        throw std::runtime_error("assemble_cusp_annuli: annulus width is not constant");
      }
      const auto& ifs = rects[v].internal_faces;
      const int exit_face = (ifs[0] == entered) ? ifs[1] : ifs[0];
      const auto it = by_source.find(exit_face);
      if (it == by_source.end()) {
        throw std::logic_error("assemble_cusp_annuli: unpaired internal face");
      }
      const FacePairingMatch& m = *it->second;
      const int vnext = p.vertex_index(m.map.apply(p.vertices[v]));
      if (vnext < 0) throw std::logic_error("assemble_cusp_annuli: pairing left the vertex set");
      if (vnext == v0) {
        if (m.target_face != rects[v0].internal_faces[0]) {
          throw std::runtime_error("assemble_cusp_annuli: walk closed up with a flip");
        }
        break;
      }
      if (visited[vnext]) {
        throw std::runtime_error("assemble_cusp_annuli: walk re-entered a visited rectangle");
      }
      v = vnext;
      entered = m.target_face;
    }
    ann.core_length = core;
    ann.modulus = ann.width / core;
    out.push_back(std::move(ann));
  }
  return out;
}

CuspAnnulus doubled(const CuspAnnulus& a) {
  CuspAnnulus d = a;
  d.width = a.width * RealQuad(2);
  d.modulus = d.width / d.core_length;
  return d;
}

}  // namespace linkcomm
