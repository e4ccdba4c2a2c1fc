#include "wct/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "wct/error.hpp"

namespace wct {

namespace {

constexpr double kActiveBand = 1e-3;    // values this close to the minimum steer the step
constexpr double kFiniteDiff = 1e-6;    // difference step, relative to the local edge length
constexpr int kMaxHalvings = 30;
constexpr int kRandomTries = 8;
constexpr int kPlateauSweeps = 3;
constexpr double kPlateauGain = 1e-12;

// Quality values of one tet that the objective takes the minimum of.
struct Values {
  std::array<double, 16> v{};
  int n = 0;
};

Values tet_values(const Tetra& t, Objective objective) {
  const TetQuality q = tet_quality(t);
  Values out;
  for (double h : q.h_over_r) out.v[out.n++] = h;
  if (objective == Objective::CompleteWC) {
    for (double a : q.face_angles_deg) out.v[out.n++] = (90.0 - a) / 90.0;
  }
  return out;
}

Vec3 project(const FreeVertex& fv, const Vec3& g) {
  switch (fv.motion) {
    case Motion::Free:
      return g;
    case Motion::Line:
      return fv.axis * dot(fv.axis, g);
    case Motion::Plane:
      return g - fv.axis * dot(fv.axis, g);
  }
  return g;
}

// Minimum-norm point of the convex hull of `g` (Frank-Wolfe). Its inner
// product with every hull point is at least |result|^2, so it is an ascent
// direction for all active values at once.
std::vector<double> min_norm_point(const std::vector<std::vector<double>>& g) {
  const std::size_t dim = g[0].size();
  auto dot_n = [dim](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<double> x(dim, 0.0), dx(dim);
  for (const auto& gi : g) {
    for (std::size_t i = 0; i < dim; ++i) x[i] += gi[i] / static_cast<double>(g.size());
  }
  for (int it = 0; it < 500; ++it) {
    std::size_t best = 0;
    double best_dot = dot_n(g[0], x);
    for (std::size_t i = 1; i < g.size(); ++i) {
      const double d = dot_n(g[i], x);
      if (d < best_dot) {
        best_dot = d;
        best = i;
      }
    }
    for (std::size_t i = 0; i < dim; ++i) dx[i] = g[best][i] - x[i];
    const double den = dot_n(dx, dx);
    if (den < 1e-30) break;
    const double step = std::clamp(-dot_n(x, dx) / den, 0.0, 1.0);
    if (step <= 1e-12) break;
    for (std::size_t i = 0; i < dim; ++i) x[i] += step * dx[i];
  }
  return x;
}

Vec3 min_norm_point(const std::vector<Vec3>& g) {
  std::vector<std::vector<double>> rows;
  for (const Vec3& v : g) rows.push_back({v.x, v.y, v.z});
  const std::vector<double> x = min_norm_point(rows);
  return {x[0], x[1], x[2]};
}

// Nearest point to p on the vertex's line or plane through `anchor`. Snapping
// every trial position keeps roundoff in normalized directions from
// accumulating off the constraint.
Point3 constrain(const FreeVertex& fv, const Point3& anchor, const Point3& p) {
  return anchor + project(fv, p - anchor);
}

class Smoother {
 public:
  Smoother(const TetMesh& m, const OptimizeSpec& spec)
      : m_(m), spec_(spec), pos_(m.vertices()), rng_(spec.seed) {}

  // One sweep; returns the number of accepted moves.
  std::size_t sweep(const std::vector<FreeVertex>& order);
  // Moves all free vertices together along a common ascent direction of the
  // mesh-wide active values. Used when no single vertex can improve.
  bool joint_step(const std::vector<FreeVertex>& order);
  SweepRecord record() const;
  std::vector<Point3> take_positions() { return std::move(pos_); }

 private:
  // Smallest value over the tets incident to v with v moved to p. False when
  // an incident tet inverts or degenerates. Fills `all` when non-null.
  bool local(VertexId v, const Point3& p, double& min_out, std::vector<double>* all);
  // Every value of every tet at the current positions; false on inversion.
  bool global(double& min_out, std::vector<double>* all);
  bool try_direction(const FreeVertex& fv, const Vec3& dir, double step0, double f0);
  double shortest_incident_edge(VertexId v) const;

  const TetMesh& m_;
  const OptimizeSpec& spec_;
  std::vector<Point3> pos_;
  std::mt19937_64 rng_;
};

bool Smoother::local(VertexId v, const Point3& p, double& min_out, std::vector<double>* all) {
  const Point3 saved = pos_[v];
  pos_[v] = p;
  bool ok = true;
  double lo = std::numeric_limits<double>::infinity();
  if (all) all->clear();
  for (TetId t : m_.vertex_tets()[v]) {
    const TetVerts& tv = m_.tets()[t];
    const Tetra tet{{pos_[tv[0]], pos_[tv[1]], pos_[tv[2]], pos_[tv[3]]}};
    if (!(signed_volume(tet) > 0.0)) {
      ok = false;
      break;
    }
    Values vals;
    try {
      vals = tet_values(tet, spec_.objective);
    } catch (const Error&) {
      ok = false;
      break;
    }
    for (int i = 0; i < vals.n; ++i) {
      lo = std::min(lo, vals.v[i]);
      if (all) all->push_back(vals.v[i]);
    }
  }
  pos_[v] = saved;
  min_out = lo;
  return ok;
}

bool Smoother::global(double& min_out, std::vector<double>* all) {
  double lo = std::numeric_limits<double>::infinity();
  if (all) all->clear();
  for (const TetVerts& tv : m_.tets()) {
    const Tetra tet{{pos_[tv[0]], pos_[tv[1]], pos_[tv[2]], pos_[tv[3]]}};
    if (!(signed_volume(tet) > 0.0)) return false;
    Values vals;
    try {
      vals = tet_values(tet, spec_.objective);
    } catch (const Error&) {
      return false;
    }
    for (int i = 0; i < vals.n; ++i) {
      lo = std::min(lo, vals.v[i]);
      if (all) all->push_back(vals.v[i]);
    }
  }
  min_out = lo;
  return true;
}

double Smoother::shortest_incident_edge(VertexId v) const {
  double best = std::numeric_limits<double>::infinity();
  for (TetId t : m_.vertex_tets()[v]) {
    for (VertexId u : m_.tets()[t]) {
      if (u != v) best = std::min(best, distance(pos_[u], pos_[v]));
    }
  }
  return best;
}

bool Smoother::try_direction(const FreeVertex& fv, const Vec3& dir, double step0, double f0) {
  const VertexId v = fv.id;
  double step = step0;
  for (int k = 0; k <= kMaxHalvings; ++k, step *= 0.5) {
    const Point3 q = constrain(fv, m_.vertex(v), pos_[v] + step * dir);
    double f = 0.0;
    if (local(v, q, f, nullptr) && f > f0) {
      pos_[v] = q;
      return true;
    }
  }
  return false;
}

std::size_t Smoother::sweep(const std::vector<FreeVertex>& order) {
  std::size_t accepted = 0;
  std::vector<double> base, plus, minus;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const FreeVertex& fv : order) {
    const VertexId v = fv.id;
    if (m_.vertex_tets()[v].empty()) continue;
    double f0 = 0.0;
    if (!local(v, pos_[v], f0, &base)) continue;
    const double len = shortest_incident_edge(v);
    const double h = kFiniteDiff * len;

    // Central-difference gradients of every incident value.
    std::vector<Vec3> grad(base.size());
    bool have_grad = true;
    for (int axis = 0; axis < 3 && have_grad; ++axis) {
      Vec3 e{};
      e[axis] = h;
      double unused = 0.0;
      have_grad = local(v, pos_[v] + e, unused, &plus) && local(v, pos_[v] - e, unused, &minus);
      if (!have_grad) break;
      for (std::size_t i = 0; i < base.size(); ++i) grad[i][axis] = (plus[i] - minus[i]) / (2 * h);
    }

    bool moved = false;
    if (have_grad) {
      std::vector<Vec3> active;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] <= f0 + kActiveBand) active.push_back(project(fv, grad[i]));
      }
      const Vec3 d = min_norm_point(active);
      const double dn = norm(d);
      if (dn > 1e-14) moved = try_direction(fv, d / dn, spec_.step_init * len, f0);
    }
    for (int k = 0; k < kRandomTries && !moved; ++k) {
      const Vec3 r = project(fv, Vec3{gauss(rng_), gauss(rng_), gauss(rng_)});
      const double rn = norm(r);
      if (rn > 1e-14) moved = try_direction(fv, r / rn, spec_.step_init * len, f0);
    }
    if (moved) ++accepted;
  }
  return accepted;
}

bool Smoother::joint_step(const std::vector<FreeVertex>& order) {
  std::vector<FreeVertex> movable;
  for (const FreeVertex& fv : order) {
    if (!m_.vertex_tets()[fv.id].empty()) movable.push_back(fv);
  }
  if (movable.empty()) return false;
  double f0 = 0.0;
  std::vector<double> base, plus, minus;
  if (!global(f0, &base)) return false;
  double len = std::numeric_limits<double>::infinity();
  for (const FreeVertex& fv : movable) len = std::min(len, shortest_incident_edge(fv.id));
  const double h = kFiniteDiff * len;

  // Gradient of each value with respect to every free coordinate.
  const std::size_t dim = 3 * movable.size();
  std::vector<std::vector<double>> grad(base.size(), std::vector<double>(dim));
  for (std::size_t k = 0; k < movable.size(); ++k) {
    const VertexId v = movable[k].id;
    const Point3 saved = pos_[v];
    for (int axis = 0; axis < 3; ++axis) {
      double unused = 0.0;
      pos_[v][axis] = saved[axis] + h;
      const bool ok_plus = global(unused, &plus);
      pos_[v][axis] = saved[axis] - h;
      const bool ok_minus = global(unused, &minus);
      pos_[v] = saved;
      if (!ok_plus || !ok_minus) return false;
      for (std::size_t i = 0; i < base.size(); ++i) grad[i][3 * k + axis] = (plus[i] - minus[i]) / (2 * h);
    }
  }
  std::vector<std::vector<double>> active;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] > f0 + kActiveBand) continue;
    std::vector<double> g = grad[i];
    for (std::size_t k = 0; k < movable.size(); ++k) {
      const Vec3 p = project(movable[k], Vec3{g[3 * k], g[3 * k + 1], g[3 * k + 2]});
      for (int a = 0; a < 3; ++a) g[3 * k + a] = p[a];
    }
    active.push_back(std::move(g));
  }
  const std::vector<Point3> start = pos_;
  // Backtracking along d, scaled so the largest vertex displacement starts
  // at step_init times the shortest incident edge.
  auto try_joint = [&](const std::vector<double>& d) {
    double dmax = 0.0;
    for (std::size_t j = 0; j < movable.size(); ++j) {
      dmax = std::max(dmax, norm(Vec3{d[3 * j], d[3 * j + 1], d[3 * j + 2]}));
    }
    if (!(dmax > 1e-14)) return false;
    double step = spec_.step_init * len / dmax;
    for (int k = 0; k <= kMaxHalvings; ++k, step *= 0.5) {
      for (std::size_t j = 0; j < movable.size(); ++j) {
        const VertexId v = movable[j].id;
        pos_[v] = constrain(movable[j], m_.vertex(v),
                            start[v] + step * Vec3{d[3 * j], d[3 * j + 1], d[3 * j + 2]});
      }
      double f = 0.0;
      if (global(f, nullptr) && f > f0) return true;
    }
    pos_ = start;
    return false;
  };
  if (try_joint(min_norm_point(active))) return true;
  // Degenerate stationary points (symmetric saddles) can have ascent
  // directions only at second order.
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> r(dim);
  for (int k = 0; k < kRandomTries; ++k) {
    for (std::size_t j = 0; j < movable.size(); ++j) {
      const Vec3 p = project(movable[j], Vec3{gauss(rng_), gauss(rng_), gauss(rng_)});
      for (int a = 0; a < 3; ++a) r[3 * j + a] = p[a];
    }
    if (try_joint(r)) return true;
  }
  return false;
}

SweepRecord Smoother::record() const {
  SweepRecord r;
  r.min_h_over_r = std::numeric_limits<double>::infinity();
  r.max_face_angle_deg = -std::numeric_limits<double>::infinity();
  r.objective = std::numeric_limits<double>::infinity();
  for (const TetVerts& tv : m_.tets()) {
    const Tetra tet{{pos_[tv[0]], pos_[tv[1]], pos_[tv[2]], pos_[tv[3]]}};
    const TetQuality q = tet_quality(tet);
    r.min_h_over_r = std::min(r.min_h_over_r, q.min_h_over_r());
    r.max_face_angle_deg = std::max(r.max_face_angle_deg, q.max_face_angle());
  }
  r.objective = r.min_h_over_r;
  if (spec_.objective == Objective::CompleteWC) {
    r.objective = std::min(r.objective, (90.0 - r.max_face_angle_deg) / 90.0);
  }
  return r;
}

std::vector<FreeVertex> validated_free_vertices(const TetMesh& m, const OptimizeSpec& spec) {
  if (!(spec.step_init > 0.0)) throw Error(ErrorCode::InvalidArgument, "step_init must be positive");
  if (spec.max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be at least 1");
  std::vector<FreeVertex> order = spec.free_vertices;
  std::sort(order.begin(), order.end(),
            [](const FreeVertex& l, const FreeVertex& r) { return l.id < r.id; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].id >= m.num_vertices()) {
      throw Error(ErrorCode::InvalidArgument,
                  "free vertex " + std::to_string(order[i].id) + " is out of range");
    }
    if (i > 0 && order[i].id == order[i - 1].id) {
      throw Error(ErrorCode::InvalidArgument,
                  "free vertex " + std::to_string(order[i].id) + " listed twice");
    }
    if (order[i].motion != Motion::Free) {
      const double n = norm(order[i].axis);
      if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorCode::InvalidArgument,
                    "free vertex " + std::to_string(order[i].id) + " needs a nonzero axis");
      }
      order[i].axis = order[i].axis / n;
    }
  }
  return order;
}

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::ToleranceReached:
      return "tolerance reached";
    case Termination::MaxIterations:
      return "max iterations";
    case Termination::NoImprovement:
      return "no improvement";
  }
  return "unknown";
}

double tet_objective(const Tetra& t, Objective objective) {
  const Values vals = tet_values(t, objective);
  return *std::min_element(vals.v.begin(), vals.v.begin() + vals.n);
}

double objective_value(const TetMesh& m, Objective objective) {
  if (m.num_tets() == 0) throw Error(ErrorCode::InvalidArgument, "objective of an empty mesh");
  double lo = std::numeric_limits<double>::infinity();
  for (TetId t = 0; t < m.num_tets(); ++t) {
    try {
      lo = std::min(lo, tet_objective(m.tetra(t), objective));
    } catch (const Error& e) {
      throw Error(ErrorCode::DegenerateTet, "tet " + std::to_string(t) + ": " + e.what());
    }
  }
  return lo;
}

std::vector<FreeVertex> interior_free_vertices(const TetMesh& m) {
  std::vector<FreeVertex> out;
  for (VertexId v : m.interior_vertices()) out.push_back({v, Motion::Free, {}});
  return out;
}

OptimizeResult optimize(const TetMesh& m, const OptimizeSpec& spec) {
  const std::vector<FreeVertex> order = validated_free_vertices(m, spec);
  (void)boundary_faces(m);  // rejects overshared faces

  Smoother s(m, spec);
  OptimizeTrace trace;
  trace.sweeps.push_back(s.record());
  if (trace.sweeps.back().objective >= spec.tol) {
    trace.termination = Termination::ToleranceReached;
    return {m, trace};
  }
  trace.termination = Termination::MaxIterations;
  int stall = 0;
  for (int it = 0; it < spec.max_iters; ++it) {
    const double before = trace.sweeps.back().objective;
    std::size_t accepted = s.sweep(order);
    if (accepted == 0 && s.joint_step(order)) accepted = 1;
    SweepRecord r = s.record();
    r.accepted_moves = accepted;
    trace.sweeps.push_back(r);
    if (r.objective >= spec.tol) {
      trace.termination = Termination::ToleranceReached;
      break;
    }
    stall = (accepted == 0 || r.objective <= before + kPlateauGain) ? stall + 1 : 0;
    if (stall >= kPlateauSweeps) {
      trace.termination = Termination::NoImprovement;
      break;
    }
  }
  return {m.with_vertices(s.take_positions()), trace};
}

}  // namespace wct
