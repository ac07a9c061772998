// SPDX-License-Identifier: Apache-2.0
//
// Ideal polyhedra with exact hull reconstruction in the Lorentz model,
// checkerings, verification of internal face pairings, horoball
// cross-sections, and assembly of the boundary cusp annuli.  The two
// concrete polyhedra used everywhere are the regular ideal octahedron with
// vertices {inf, 0, 1, i, 1+i, (1+i)/2} and the right-angled ideal
// cuboctahedron derived from the canonical light-cone vector family and
// normalised so that {0, 1, inf} spans a triangular face.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkcomm/geometry.hpp"
#include "linkcomm/moebius.hpp"
#include "linkcomm/report.hpp"

namespace linkcomm {

struct IdealPolyhedron {
  struct Face {
    std::vector<int> cycle;   // vertex indices in cyclic boundary order
    Hyperplane plane;         // supporting plane
    LorentzVector inward;     // Euclidean-dot normal u with u . lift(v) >= 0
    bool external = false;    // set by checker()
  };

  std::vector<BoundaryPoint> vertices;
  std::vector<Face> faces;
  bool checkered = false;

  // Faces incident to a vertex.
  std::vector<int> faces_at(int v) const;
  // Vertices joined to v by an edge (consecutive in some face cycle).
  std::vector<int> neighbors(int v) const;
  int vertex_index(const BoundaryPoint& p) const;  // -1 if absent
  // Face with exactly this vertex set, or -1.
  int face_with_vertices(std::vector<int> verts) const;
};

// Reconstruct the face lattice of the ideal convex hull of the given
// boundary points by enumerating exact supporting planes in the Lorentz
// model.  Throws on degenerate input (all points on one circle).
IdealPolyhedron hull_faces(const std::vector<BoundaryPoint>& vertices);

// Proper 2-coloring of the face adjacency graph with the given face marked
// external; throws if no proper coloring exists.
void checker(IdealPolyhedron& p, int external_face);

// The regular ideal octahedron (vertices inf, 0, 1, i, 1+i, (1+i)/2),
// checkered so the faces paired by {s, t} are internal.
const IdealPolyhedron& regular_ideal_octahedron();

// The right-angled ideal cuboctahedron, derived from the canonical
// light-cone family and normalised so {0, 1, inf} is a triangular face;
// triangles external, squares internal.  The vertex list reproduces the six
// printed boundary labels 0, 1, -i*sqrt2/2, -i*sqrt2, 1-i*sqrt2,
// 1-i*sqrt2/2.
const IdealPolyhedron& ideal_cuboctahedron();

// A face-pairing isometry with a display name ("s", "g^-1", ...).
struct NamedIsometry {
  std::string name;
  ExtendedMoebius map;
};

struct FacePairingMatch {
  int source_face = -1;
  int target_face = -1;
  ExtendedMoebius map;
  std::string name;
};

// Verify that the named isometries pair the internal faces of P: each map
// carries exactly one internal face onto another with the image polyhedron
// in the opposite closed half-space, the set is closed under inverses, and
// every internal face occurs exactly once as a source.  The matches are
// returned for downstream cusp assembly when the report is clean.
CheckReport verify_internal_face_pairing(const IdealPolyhedron& p,
                                         const std::vector<NamedIsometry>& maps,
                                         std::vector<FacePairingMatch>* matches = nullptr);

// ---------------------------------------------------------------------------
// Horoball cross-sections and cusp annuli.
// ---------------------------------------------------------------------------

struct CrossSection {
  std::vector<int> corners;             // neighbor vertex ids in cyclic order
  std::vector<RealQuad> side_lengths;   // side k joins corners k, k+1
  std::vector<bool> side_external;      // side k lies on an external face
  std::vector<int> side_faces;          // the face carrying side k
};

// Polygon cut on the horosphere `scale` at vertex v by the faces through v,
// computed by moving v to infinity with an exact isometry.
CrossSection horoball_cross_section(const IdealPolyhedron& p, int v, const HoroData& scale);

// An exact symmetry of the polyhedron carrying vertex `from` to `to`
// (possibly orientation-reversing), if one exists.
std::optional<ExtendedMoebius> polyhedron_symmetry(const IdealPolyhedron& p, int from, int to);

// The symmetric horosphere family: height 2 at infinity, transported to the
// other vertices by exact symmetries of the polyhedron.
std::vector<HoroData> symmetric_horoball_family(const IdealPolyhedron& p);

struct CuspAnnulus {
  std::vector<int> rectangle_cycle;  // vertex ids, one rectangle each
  RealQuad width;                    // internal side length
  RealQuad core_length;              // sum of external side lengths
  RealQuad modulus;                  // width / core_length
};

// Walk the vertex rectangles along the internal-face pairings; every closed
// cycle is a boundary annulus.  Uses the symmetric horosphere family unless
// an explicit one is supplied.  Throws if a cycle fails to close.
std::vector<CuspAnnulus> assemble_cusp_annuli(
    const IdealPolyhedron& p, const std::vector<NamedIsometry>& pairing,
    const std::vector<HoroData>* scales = nullptr);

// The annulus obtained by doubling across one boundary circle: same core,
// doubled width.
CuspAnnulus doubled(const CuspAnnulus& a);

// The standard pairings {s, t} and {f, g, h} (with inverses).
std::vector<NamedIsometry> octahedron_pairing();
std::vector<NamedIsometry> cuboctahedron_pairing();

}  // namespace linkcomm
