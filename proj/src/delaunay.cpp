#include "wct/delaunay.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wct/error.hpp"
#include "wct/predicates.hpp"

namespace wct {

namespace {

namespace pred = predicates;

// Vertex ids inside the builder are ranks in lexicographic order, so the
// symbolic perturbation order is simply id order. The vertex at infinity
// closes the hull: every hull facet carries one ghost cell.
constexpr std::uint32_t kGhost = std::numeric_limits<std::uint32_t>::max();

struct Cell {
  std::array<std::uint32_t, 4> v{};
  std::array<std::int32_t, 4> nbr{-1, -1, -1, -1};
  bool alive = true;

  int ghost_slot() const {
    for (int i = 0; i < 4; ++i) {
      if (v[i] == kGhost) return i;
    }
    return -1;
  }
};

class Builder {
 public:
  explicit Builder(std::vector<Point3> pts) : pts_(std::move(pts)) {}

  void run();
  std::vector<TetVerts> finite_tets() const;

 private:
  const Point3& P(std::uint32_t id) const { return pts_[id]; }

  bool conflicts(const Cell& c, std::uint32_t p) const;
  bool sphere_conflict(const std::array<std::uint32_t, 4>& q, std::uint32_t p) const;
  bool circle_conflict(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       std::uint32_t p) const;

  void insert(std::uint32_t p);
  std::int32_t new_cell(const Cell& c);
  void link_faces(const std::vector<std::int32_t>& ids);

  std::vector<Point3> pts_;
  std::vector<Cell> cells_;
  std::vector<std::int32_t> free_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

// Positive (inside) when p is inside the sphere of the positively oriented
// q0..q3. Exact ties are decided by the first non-vanishing term of the
// perturbed determinant, taken over the points from highest rank down.
bool Builder::sphere_conflict(const std::array<std::uint32_t, 4>& q, std::uint32_t p) const {
  const int s = pred::insphere(P(q[0]), P(q[1]), P(q[2]), P(q[3]), P(p));
  if (s != 0) return s > 0;
  std::array<std::uint32_t, 5> ids{q[0], q[1], q[2], q[3], p};
  std::sort(ids.begin(), ids.end(), std::greater<>());
  for (int k = 0; k < 3; ++k) {
    const std::uint32_t top = ids[k];
    if (top == p) return false;
    for (int slot = 3; slot >= 0; --slot) {
      if (top != q[slot]) continue;
      std::array<std::uint32_t, 4> r = q;
      r[slot] = p;
      const int o = pred::orient3d(P(r[0]), P(r[1]), P(r[2]), P(r[3]));
      if (o != 0) return o > 0;
    }
  }
  throw std::logic_error("delaunay3d: perturbed insphere did not resolve");
}

bool Builder::circle_conflict(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                              std::uint32_t p) const {
  const int s = pred::incircle_coplanar(P(a), P(b), P(c), P(p));
  if (s != 0) return s > 0;
  const int local = pred::orient_coplanar(P(a), P(b), P(c));
  std::array<std::uint32_t, 4> ids{a, b, c, p};
  std::sort(ids.begin(), ids.end(), std::greater<>());
  for (int k = 0; k < 3; ++k) {
    const std::uint32_t top = ids[k];
    if (top == p) return false;
    int o = 0;
    if (top == c) o = pred::orient_coplanar(P(a), P(b), P(p));
    if (top == b) o = pred::orient_coplanar(P(a), P(p), P(c));
    if (top == a) o = pred::orient_coplanar(P(p), P(b), P(c));
    if (o != 0) return o * local > 0;
  }
  return false;
}

bool Builder::conflicts(const Cell& c, std::uint32_t p) const {
  const int g = c.ghost_slot();
  if (g < 0) return sphere_conflict(c.v, p);
  // A ghost cell conflicts when p sees its hull facet from outside, or lies
  // in the facet's plane inside its circumcircle.
  std::array<std::uint32_t, 4> r = c.v;
  r[g] = p;
  const int o = pred::orient3d(P(r[0]), P(r[1]), P(r[2]), P(r[3]));
  if (o != 0) return o > 0;
  std::array<std::uint32_t, 3> f{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != g) f[k++] = c.v[i];
  }
  return circle_conflict(f[0], f[1], f[2], p);
}

std::int32_t Builder::new_cell(const Cell& c) {
  if (!free_.empty()) {
    const std::int32_t id = free_.back();
    free_.pop_back();
    cells_[id] = c;
    stamp_[id] = 0;
    return id;
  }
  cells_.push_back(c);
  stamp_.push_back(0);
  return static_cast<std::int32_t>(cells_.size() - 1);
}

// Pairs up the facets of `ids` that are not yet linked.
void Builder::link_faces(const std::vector<std::int32_t>& ids) {
  std::map<std::array<std::uint32_t, 3>, std::pair<std::int32_t, int>> open;
  for (std::int32_t id : ids) {
    for (int i = 0; i < 4; ++i) {
      if (cells_[id].nbr[i] >= 0) continue;
      std::array<std::uint32_t, 3> key{};
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        if (j != i) key[k++] = cells_[id].v[j];
      }
      std::sort(key.begin(), key.end());
      auto [it, inserted] = open.try_emplace(key, id, i);
      if (!inserted) {
        cells_[id].nbr[i] = it->second.first;
        cells_[it->second.first].nbr[it->second.second] = id;
        open.erase(it);
      }
    }
  }
  if (!open.empty()) throw std::logic_error("delaunay3d: unmatched facet in cavity");
}

void Builder::insert(std::uint32_t p) {
  std::int32_t seed = -1;
  for (std::size_t i = cells_.size(); i-- > 0;) {
    if (cells_[i].alive && conflicts(cells_[i], p)) {
      seed = static_cast<std::int32_t>(i);
      break;
    }
  }
  if (seed < 0) throw std::logic_error("delaunay3d: no conflicting cell");

  // Stamps: epoch+1 = in cavity, epoch+2 = tested, not in cavity.
  epoch_ += 2;
  const std::uint32_t in_cavity = epoch_ + 1, outside = epoch_ + 2;
  std::vector<std::int32_t> cavity{seed};
  stamp_[seed] = in_cavity;
  struct Border {
    std::int32_t cell;
    int slot;
    std::int32_t across;
    int across_slot;
  };
  std::vector<Border> border;
  for (std::size_t head = 0; head < cavity.size(); ++head) {
    const std::int32_t c = cavity[head];
    for (int i = 0; i < 4; ++i) {
      const std::int32_t n = cells_[c].nbr[i];
      if (stamp_[n] != in_cavity && stamp_[n] != outside) {
        if (conflicts(cells_[n], p)) {
          stamp_[n] = in_cavity;
          cavity.push_back(n);
        } else {
          stamp_[n] = outside;
        }
      }
      if (stamp_[n] == outside) {
        int j = 0;
        while (cells_[n].nbr[j] != c) ++j;
        border.push_back({c, i, n, j});
      }
    }
  }

  std::vector<Cell> pending;
  pending.reserve(border.size());
  for (const Border& b : border) {
    Cell nc;
    nc.v = cells_[b.cell].v;
    nc.v[b.slot] = p;
    nc.nbr[b.slot] = b.across;
    if (nc.ghost_slot() < 0 &&
        pred::orient3d(P(nc.v[0]), P(nc.v[1]), P(nc.v[2]), P(nc.v[3])) <= 0) {
      throw std::logic_error("delaunay3d: cavity is not star-shaped");
    }
    pending.push_back(nc);
  }
  // Release the cavity first so the new cells can reuse its slots.
  for (std::int32_t c : cavity) {
    cells_[c].alive = false;
    free_.push_back(c);
  }
  std::vector<std::int32_t> created(pending.size());
  for (std::size_t k = 0; k < pending.size(); ++k) {
    const std::int32_t id = new_cell(pending[k]);
    created[k] = id;
    cells_[border[k].across].nbr[border[k].across_slot] = id;
  }
  link_faces(created);
}

void Builder::run() {
  const std::uint32_t n = static_cast<std::uint32_t>(pts_.size());
  // Initial simplex from the first non-degenerate quadruple in rank order.
  const std::uint32_t a = 0, b = 1;
  std::uint32_t c = 2;
  while (c < n && pred::orient_coplanar(P(a), P(b), P(c)) == 0) ++c;
  if (c == n) throw Error(ErrorCode::AllCoplanar, "delaunay3d: all points are collinear");
  std::uint32_t d = c + 1;
  while (d < n && pred::orient3d(P(a), P(b), P(c), P(d)) == 0) ++d;
  if (d == n) throw Error(ErrorCode::AllCoplanar, "delaunay3d: all points are coplanar");

  Cell first;
  first.v = {a, b, c, d};
  if (pred::orient3d(P(a), P(b), P(c), P(d)) < 0) std::swap(first.v[2], first.v[3]);
  std::vector<std::int32_t> ids{new_cell(first)};
  for (int i = 0; i < 4; ++i) {
    Cell g;
    g.v = first.v;
    g.v[i] = kGhost;
    const int j = (i + 1) % 4, k = (i + 2) % 4;
    std::swap(g.v[j], g.v[k]);
    ids.push_back(new_cell(g));
  }
  link_faces(ids);

  for (std::uint32_t p = 0; p < n; ++p) {
    if (p == a || p == b || p == c || p == d) continue;
    insert(p);
  }
}

std::vector<TetVerts> Builder::finite_tets() const {
  std::vector<TetVerts> out;
  for (const Cell& c : cells_) {
    if (c.alive && c.ghost_slot() < 0) out.push_back({c.v[0], c.v[1], c.v[2], c.v[3]});
  }
  return out;
}

}  // namespace

TetMesh delaunay3d(std::span<const Point3> points) {
  if (points.size() < 4) {
    throw Error(ErrorCode::TooFewPoints, "delaunay3d: need at least 4 points, got " +
                                             std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "delaunay3d: point " + std::to_string(i) + " is not finite");
    }
  }
  std::vector<std::uint32_t> order(points.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t l, std::uint32_t r) {
    return lex_less(points[l], points[r]);
  });
  std::vector<Point3> sorted(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = points[order[i]];
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::DuplicatePoint, "delaunay3d: points " +
                                                 std::to_string(order[i - 1]) + " and " +
                                                 std::to_string(order[i]) + " coincide");
    }
  }

  Builder builder(std::move(sorted));
  builder.run();
  std::vector<TetVerts> tets = builder.finite_tets();
  for (TetVerts& t : tets) {
    for (VertexId& v : t) v = order[v];
  }
  std::sort(tets.begin(), tets.end(), [](const TetVerts& l, const TetVerts& r) {
    TetVerts sl = l, sr = r;
    std::sort(sl.begin(), sl.end());
    std::sort(sr.begin(), sr.end());
    return sl < sr;
  });
  return TetMesh::build(std::vector<Point3>(points.begin(), points.end()), std::move(tets));
}

}  // namespace wct
