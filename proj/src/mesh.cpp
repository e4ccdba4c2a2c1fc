#include "wct/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "wct/error.hpp"
#include "wct/predicates.hpp"

namespace wct {

FaceKey make_face_key(VertexId a, VertexId b, VertexId c) {
  FaceKey k{a, b, c};
  std::sort(k.begin(), k.end());
  return k;
}

EdgeKey make_edge_key(VertexId a, VertexId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

namespace {

std::string tet_label(TetId t, const TetVerts& v) {
  std::ostringstream os;
  os << "tet " << t << " (" << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3] << ')';
  return os.str();
}

}  // namespace

TetMesh TetMesh::build(std::vector<Point3> vertices, std::vector<TetVerts> tets) {
  return build_impl(std::move(vertices), std::move(tets), false);
}

TetMesh TetMesh::with_vertices(std::vector<Point3> vertices) const {
  if (vertices.size() != vertices_.size()) {
    throw Error(ErrorCode::InvalidArgument, "with_vertices: vertex count mismatch");
  }
  return build_impl(std::move(vertices), tets_, true);
}

TetMesh TetMesh::build_impl(std::vector<Point3> vertices, std::vector<TetVerts> tets,
                            bool require_positive) {
  TetMesh m;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_finite(vertices[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  std::set<TetVerts> seen;
  for (std::size_t t = 0; t < tets.size(); ++t) {
    TetVerts& tv = tets[t];
    for (VertexId v : tv) {
      if (v >= vertices.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    tet_label(static_cast<TetId>(t), tv) + " references vertex " +
                        std::to_string(v) + " of " + std::to_string(vertices.size()));
      }
    }
    TetVerts sorted = tv;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DegenerateTet,
                  tet_label(static_cast<TetId>(t), tv) + " repeats a vertex");
    }
    if (!seen.insert(sorted).second) {
      throw Error(ErrorCode::DuplicateTet, tet_label(static_cast<TetId>(t), tv) +
                                               " duplicates an earlier tet");
    }
    // Exact sign: nearly flat tets are valid here and rejected only by the
    // quality operations.
    const int orient = predicates::orient3d(vertices[tv[0]], vertices[tv[1]], vertices[tv[2]],
                                            vertices[tv[3]]);
    if (orient == 0) {
      throw Error(ErrorCode::DegenerateTet,
                  tet_label(static_cast<TetId>(t), tv) + " has zero volume");
    }
    if (orient < 0) {
      if (require_positive) {
        throw Error(ErrorCode::DegenerateTet,
                    tet_label(static_cast<TetId>(t), tv) + " is inverted");
      }
      std::swap(tv[2], tv[3]);
    }
  }

  m.vertices_ = std::move(vertices);
  m.tets_ = std::move(tets);
  m.vertex_tets_.assign(m.vertices_.size(), {});
  std::set<EdgeKey> edges;
  for (TetId t = 0; t < m.tets_.size(); ++t) {
    const TetVerts& tv = m.tets_[t];
    for (int i = 0; i < 4; ++i) {
      m.vertex_tets_[tv[i]].push_back(t);
      FaceKey key{};
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) key[k++] = tv[j];
      }
      std::sort(key.begin(), key.end());
      m.faces_[key].push_back({t, i});
    }
    for (auto [i, j] : kTetEdges) edges.insert(make_edge_key(tv[i], tv[j]));
  }
  m.edges_.assign(edges.begin(), edges.end());
  return m;
}


Tetra TetMesh::tetra(TetId t) const {
  const TetVerts& v = tets_[t];
  return Tetra{{vertices_[v[0]], vertices_[v[1]], vertices_[v[2]], vertices_[v[3]]}};
}

std::vector<VertexId> TetMesh::interior_vertices() const {
  std::vector<char> on_boundary(vertices_.size(), 0);
  for (const auto& [key, uses] : faces_) {
    if (uses.size() == 1) {
      for (VertexId v : key) on_boundary[v] = 1;
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!on_boundary[v] && !vertex_tets_[v].empty()) out.push_back(v);
  }
  return out;
}

double TetMesh::total_volume() const {
  double sum = 0.0;
  for (TetId t = 0; t < tets_.size(); ++t) sum += signed_volume(tetra(t));
  return sum;
}

namespace {

constexpr double kOverlapTol = 1e-9;
constexpr std::size_t kMaxDiagnostics = 20;

struct Box {
  Vec3 lo, hi;
};

Box bounds(const Tetra& t) {
  Box b{t[0], t[0]};
  for (int i = 1; i < 4; ++i) {
    for (int a = 0; a < 3; ++a) {
      b.lo[a] = std::min(b.lo[a], t[i][a]);
      b.hi[a] = std::max(b.hi[a], t[i][a]);
    }
  }
  return b;
}

// Separating-axis test on face normals and edge-pair cross products. Two
// tets whose projections overlap by at most `tol` on some axis have disjoint
// interiors.
bool interiors_overlap(const Tetra& a, const Tetra& b, double tol) {
  auto separated_on = [&](Vec3 axis) {
    const double len = norm(axis);
    if (len == 0.0) return false;
    axis = axis / len;
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = -amin;
    for (int i = 0; i < 4; ++i) {
      const double pa = dot(a[i], axis);
      const double pb = dot(b[i], axis);
      amin = std::min(amin, pa);
      amax = std::max(amax, pa);
      bmin = std::min(bmin, pb);
      bmax = std::max(bmax, pb);
    }
    return std::min(amax, bmax) - std::max(amin, bmin) <= tol;
  };
  for (const Tetra* t : {&a, &b}) {
    for (int f = 0; f < 4; ++f) {
      const Triangle tri = t->facet(f);
      if (separated_on(cross(tri[1] - tri[0], tri[2] - tri[0]))) return false;
    }
  }
  for (auto [i, j] : kTetEdges) {
    for (auto [k, l] : kTetEdges) {
      const Vec3 axis = cross(a[j] - a[i], b[l] - b[k]);
      // Nearly parallel edges give no reliable axis.
      if (norm(axis) <= 1e-12 * distance(a[i], a[j]) * distance(b[k], b[l])) continue;
      if (separated_on(axis)) return false;
    }
  }
  return true;
}

// Closed containment with relative tolerance on the barycentric coordinates.
bool in_closed_tet(const Tetra& t, const Point3& p, double tol) {
  const double vol = signed_volume(t);
  for (int i = 0; i < 4; ++i) {
    Tetra sub = t;
    sub.p[i] = p;
    if (signed_volume(sub) / vol < -tol) return false;
  }
  return true;
}

}  // namespace

ConformityReport is_conforming(const TetMesh& m) {
  ConformityReport r;
  auto note = [&](std::string msg) {
    r.conforming = false;
    if (r.diagnostics.size() < kMaxDiagnostics) r.diagnostics.push_back(std::move(msg));
  };

  for (const auto& [key, uses] : m.faces()) {
    if (uses.size() > 2) {
      ++r.overshared_faces;
      note("face (" + std::to_string(key[0]) + ' ' + std::to_string(key[1]) + ' ' +
           std::to_string(key[2]) + ") has " + std::to_string(uses.size()) + " incident tets");
    }
  }

  const std::size_t n = m.num_tets();
  std::vector<Box> boxes(n);
  double scale = 0.0;
  for (TetId t = 0; t < n; ++t) {
    boxes[t] = bounds(m.tetra(t));
    scale = std::max(scale, longest_edge(m.tetra(t)));
  }
  const double tol = kOverlapTol * scale;

  std::vector<TetId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](TetId a, TetId b) { return boxes[a].lo.x < boxes[b].lo.x; });
  auto boxes_touch = [&](const Box& a, const Box& b) {
    for (int k = 0; k < 3; ++k) {
      if (a.hi[k] < b.lo[k] - tol || b.hi[k] < a.lo[k] - tol) return false;
    }
    return true;
  };

  for (std::size_t ii = 0; ii < n; ++ii) {
    const TetId a = order[ii];
    for (std::size_t jj = ii + 1; jj < n; ++jj) {
      const TetId b = order[jj];
      if (boxes[b].lo.x > boxes[a].hi.x + tol) break;
      if (!boxes_touch(boxes[a], boxes[b])) continue;
      if (interiors_overlap(m.tetra(a), m.tetra(b), tol)) {
        ++r.overlapping_pairs;
        note(tet_label(a, m.tets()[a]) + " overlaps " + tet_label(b, m.tets()[b]));
      }
    }
  }

  // Hanging vertices: a vertex inside or on a tet it is not a corner of.
  std::vector<VertexId> by_x(m.num_vertices());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](VertexId a, VertexId b) { return m.vertex(a).x < m.vertex(b).x; });
  for (TetId t = 0; t < n; ++t) {
    const Box& box = boxes[t];
    const Tetra geo = m.tetra(t);
    auto it = std::lower_bound(by_x.begin(), by_x.end(), box.lo.x - tol,
                               [&](VertexId v, double x) { return m.vertex(v).x < x; });
    for (; it != by_x.end() && m.vertex(*it).x <= box.hi.x + tol; ++it) {
      const VertexId v = *it;
      const TetVerts& tv = m.tets()[t];
      if (std::find(tv.begin(), tv.end(), v) != tv.end()) continue;
      const Point3& p = m.vertex(v);
      if (p.y < box.lo.y - tol || p.y > box.hi.y + tol || p.z < box.lo.z - tol ||
          p.z > box.hi.z + tol) {
        continue;
      }
      if (in_closed_tet(geo, p, kOverlapTol)) {
        ++r.hanging_vertices;
        note("vertex " + std::to_string(v) + " lies in " + tet_label(t, tv));
      }
    }
  }
  return r;
}

namespace {

void require_manifold_faces(const TetMesh& m, const char* who) {
  for (const auto& [key, uses] : m.faces()) {
    if (uses.size() > 2) {
      throw Error(ErrorCode::NotConforming,
                  std::string(who) + ": face (" + std::to_string(key[0]) + ' ' +
                      std::to_string(key[1]) + ' ' + std::to_string(key[2]) + ") has " +
                      std::to_string(uses.size()) + " incident tets");
    }
  }
}

void absorb(QualityRange& r, double lo, double hi, TetId t, bool first) {
  if (first || lo < r.min) {
    r.min = lo;
    r.argmin = t;
  }
  if (first || hi > r.max) {
    r.max = hi;
    r.argmax = t;
  }
}

}  // namespace

std::vector<FaceKey> boundary_faces(const TetMesh& m) {
  require_manifold_faces(m, "boundary_faces");
  std::vector<FaceKey> out;
  for (const auto& [key, uses] : m.faces()) {
    if (uses.size() == 1) out.push_back(key);
  }
  return out;
}

QualityReport mesh_quality(const TetMesh& m) {
  if (m.num_tets() == 0) throw Error(ErrorCode::InvalidArgument, "mesh_quality: empty mesh");
  QualityReport r;
  r.num_tets = m.num_tets();
  r.num_faces = m.num_faces();
  r.num_edges = m.num_edges();
  r.num_vertices = m.num_vertices();
  r.all_2wc = true;
  r.all_3wc = true;
  for (TetId t = 0; t < m.num_tets(); ++t) {
    TetQuality q;
    try {
      q = tet_quality(m.tetra(t));
    } catch (const Error& e) {
      throw Error(ErrorCode::DegenerateTet, tet_label(t, m.tets()[t]) + ": " + e.what());
    }
    const bool first = t == 0;
    absorb(r.h_over_r, q.min_h_over_r(), q.max_h_over_r(), t, first);
    absorb(r.face_angle_deg, q.min_face_angle(), q.max_face_angle(), t, first);
    absorb(r.dihedral_angle_deg, q.min_dihedral(), q.max_dihedral(), t, first);
    absorb(r.r_over_l, q.r_over_l, q.r_over_l, t, first);
    const WcClass c = classify(q);
    r.all_2wc = r.all_2wc && c.is_2wc;
    r.all_3wc = r.all_3wc && c.is_3wc;
  }
  r.completely_wc = r.all_2wc && r.all_3wc;
  return r;
}

bool is_delaunay(const TetMesh& m) {
  require_manifold_faces(m, "is_delaunay");
  std::vector<VertexId> by_x(m.num_vertices());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](VertexId a, VertexId b) { return m.vertex(a).x < m.vertex(b).x; });
  for (TetId t = 0; t < m.num_tets(); ++t) {
    const Circumsphere s = circumsphere_tet(m.tetra(t));
    const TetVerts& tv = m.tets()[t];
    auto it = std::lower_bound(by_x.begin(), by_x.end(), s.center.x - s.radius,
                               [&](VertexId v, double x) { return m.vertex(v).x < x; });
    for (; it != by_x.end() && m.vertex(*it).x <= s.center.x + s.radius; ++it) {
      if (std::find(tv.begin(), tv.end(), *it) != tv.end()) continue;
      const double depth = s.radius - distance(m.vertex(*it), s.center);
      if (depth > 1e-9 * s.radius) return false;
    }
  }
  return true;
}

}  // namespace wct
