#include "wct/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "wct/error.hpp"

namespace wct {

namespace fs = std::filesystem;

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

// Whitespace-separated tokens of one line, with '#' comments removed.
std::vector<std::string> tokens(std::string line, bool strip_comment) {
  if (strip_comment) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  }
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(std::move(t));
  return out;
}

// Sequential reader over non-empty lines that reports 1-based line numbers.
class LineReader {
 public:
  LineReader(const fs::path& path, bool strip_comments)
      : file_(path.string()), lines_(read_lines(path)), strip_(strip_comments) {}

  std::vector<std::string> next(const char* what) {
    while (pos_ < lines_.size()) {
      auto t = tokens(lines_[pos_++], strip_);
      if (!t.empty()) return t;
    }
    throw ParseError(file_, lines_.size() + 1, std::string("unexpected end of file, expected ") + what);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(file_, pos_, msg); }

  double real(const std::string& tok) const {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) fail("bad number '" + tok + "'");
    return v;
  }

  long long integer(const std::string& tok) const {
    long long v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) fail("bad integer '" + tok + "'");
    return v;
  }

  std::size_t count(const std::string& tok) const {
    const long long v = integer(tok);
    if (v < 0) fail("negative count");
    return static_cast<std::size_t>(v);
  }

 private:
  std::string file_;
  std::vector<std::string> lines_;
  bool strip_;
  std::size_t pos_ = 0;
};

struct NodeFile {
  std::vector<Point3> points;
  long long base = 0;
};

NodeFile parse_node(const fs::path& path) {
  LineReader r(path, true);
  const auto head = r.next("node header");
  const std::size_t n = r.count(head[0]);
  if (head.size() > 1 && r.integer(head[1]) != 3) r.fail("only 3-dimensional points are supported");
  NodeFile out;
  out.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = r.next("node line");
    if (t.size() < 4) r.fail("node line needs an index and three coordinates");
    const long long idx = r.integer(t[0]);
    if (i == 0) {
      if (idx != 0 && idx != 1) r.fail("first node index must be 0 or 1");
      out.base = idx;
    }
    if (idx != out.base + static_cast<long long>(i)) r.fail("node indices must be consecutive");
    out.points.push_back({r.real(t[1]), r.real(t[2]), r.real(t[3])});
  }
  return out;
}

std::vector<TetVerts> parse_ele(const fs::path& path, long long base, std::size_t num_points) {
  LineReader r(path, true);
  const auto head = r.next("ele header");
  const std::size_t n = r.count(head[0]);
  if (head.size() > 1 && r.integer(head[1]) != 4) r.fail("only 4-node tetrahedra are supported");
  std::vector<TetVerts> tets;
  tets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = r.next("ele line");
    if (t.size() < 5) r.fail("ele line needs an index and four vertices");
    if (r.integer(t[0]) != base + static_cast<long long>(i)) r.fail("ele indices must be consecutive");
    TetVerts tv{};
    for (int k = 0; k < 4; ++k) {
      const long long v = r.integer(t[1 + k]) - base;
      if (v < 0 || static_cast<std::size_t>(v) >= num_points) {
        throw Error(ErrorCode::IndexOutOfRange, path.string() + ": tet " + std::to_string(i) +
                                                    " references vertex " + t[1 + k] +
                                                    " of " + std::to_string(num_points));
      }
      tv[k] = static_cast<VertexId>(v);
    }
    tets.push_back(tv);
  }
  return tets;
}

TetMesh parse_vtk(const fs::path& path) {
  LineReader r(path, false);
  (void)r.next("vtk version line");
  (void)r.next("title");
  if (r.next("ASCII")[0] != "ASCII") r.fail("only ASCII VTK files are supported");
  const auto ds = r.next("DATASET");
  if (ds.size() < 2 || ds[0] != "DATASET" || ds[1] != "UNSTRUCTURED_GRID") {
    r.fail("expected DATASET UNSTRUCTURED_GRID");
  }
  const auto ph = r.next("POINTS");
  if (ph.size() < 2 || ph[0] != "POINTS") r.fail("expected POINTS");
  const std::size_t np = r.count(ph[1]);
  std::vector<double> coords;
  while (coords.size() < 3 * np) {
    for (const auto& t : r.next("point coordinates")) coords.push_back(r.real(t));
  }
  if (coords.size() != 3 * np) r.fail("point coordinate count mismatch");
  std::vector<Point3> pts(np);
  for (std::size_t i = 0; i < np; ++i) pts[i] = {coords[3 * i], coords[3 * i + 1], coords[3 * i + 2]};

  const auto ch = r.next("CELLS");
  if (ch.size() < 3 || ch[0] != "CELLS") r.fail("expected CELLS");
  const std::size_t nc = r.count(ch[1]);
  std::vector<TetVerts> tets(nc);
  for (std::size_t i = 0; i < nc; ++i) {
    const auto t = r.next("cell");
    if (t.size() != 5 || r.integer(t[0]) != 4) r.fail("only tetrahedral cells are supported");
    for (int k = 0; k < 4; ++k) {
      const long long v = r.integer(t[1 + k]);
      if (v < 0 || static_cast<std::size_t>(v) >= np) {
        throw Error(ErrorCode::IndexOutOfRange, path.string() + ": cell " + std::to_string(i) +
                                                    " references vertex " + t[1 + k]);
      }
      tets[i][k] = static_cast<VertexId>(v);
    }
  }
  const auto th = r.next("CELL_TYPES");
  if (th.size() < 2 || th[0] != "CELL_TYPES" || r.count(th[1]) != nc) r.fail("expected CELL_TYPES");
  std::size_t seen = 0;
  while (seen < nc) {
    for (const auto& t : r.next("cell type")) {
      if (r.integer(t) != 10) r.fail("cell type must be 10 (tetrahedron)");
      ++seen;
    }
  }
  return TetMesh::build(std::move(pts), std::move(tets));
}

std::string node_text(const std::vector<Point3>& pts) {
  std::string s = std::to_string(pts.size()) + " 3 0 0\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += std::to_string(i) + ' ' + fmt17(pts[i].x) + ' ' + fmt17(pts[i].y) + ' ' +
         fmt17(pts[i].z) + '\n';
  }
  return s;
}

std::string ele_text(const std::vector<TetVerts>& tets) {
  std::string s = std::to_string(tets.size()) + " 4 0\n";
  for (std::size_t i = 0; i < tets.size(); ++i) {
    s += std::to_string(i);
    for (VertexId v : tets[i]) s += ' ' + std::to_string(v);
    s += '\n';
  }
  return s;
}

std::string vtk_text(const TetMesh& m) {
  std::string s =
      "# vtk DataFile Version 3.0\nwell-centered tetrahedral mesh\nASCII\n"
      "DATASET UNSTRUCTURED_GRID\n";
  s += "POINTS " + std::to_string(m.num_vertices()) + " double\n";
  for (const Point3& p : m.vertices()) s += fmt17(p.x) + ' ' + fmt17(p.y) + ' ' + fmt17(p.z) + '\n';
  s += "CELLS " + std::to_string(m.num_tets()) + ' ' + std::to_string(5 * m.num_tets()) + '\n';
  for (const TetVerts& t : m.tets()) {
    s += '4';
    for (VertexId v : t) s += ' ' + std::to_string(v);
    s += '\n';
  }
  s += "CELL_TYPES " + std::to_string(m.num_tets()) + '\n';
  for (std::size_t i = 0; i < m.num_tets(); ++i) s += "10\n";
  return s;
}

fs::path base_of(const fs::path& path) {
  const auto ext = path.extension();
  if (ext == ".node" || ext == ".ele") return fs::path(path).replace_extension();
  return path;
}

}  // namespace

fs::path node_path(const fs::path& path) { return fs::path(base_of(path)) += ".node"; }
fs::path ele_path(const fs::path& path) { return fs::path(base_of(path)) += ".ele"; }

void write_file_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename into " + path.string());
  }
}

void write_mesh(const TetMesh& m, const fs::path& path, MeshFormat format) {
  if (format == MeshFormat::Vtk) {
    write_file_atomic(path, vtk_text(m));
    return;
  }
  write_file_atomic(node_path(path), node_text(m.vertices()));
  write_file_atomic(ele_path(path), ele_text(m.tets()));
}

TetMesh read_mesh(const fs::path& path) {
  if (path.extension() == ".vtk") return parse_vtk(path);
  NodeFile nodes = parse_node(node_path(path));
  std::vector<TetVerts> tets = parse_ele(ele_path(path), nodes.base, nodes.points.size());
  return TetMesh::build(std::move(nodes.points), std::move(tets));
}

std::vector<Point3> read_points(const fs::path& path) { return parse_node(path).points; }

void write_points(const std::vector<Point3>& pts, const fs::path& path) {
  write_file_atomic(path, node_text(pts));
}

}  // namespace wct
