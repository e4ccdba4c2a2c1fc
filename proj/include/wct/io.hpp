#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wct/mesh.hpp"

// Mesh files.
//
// NodeEle is a pair of ASCII files sharing a base name. `.node` starts with
// "<count> 3 <attributes> <markers>" followed by "<index> x y z" lines;
// `.ele` starts with "<count> 4 <attributes>" followed by
// "<index> v0 v1 v2 v3" lines. Text after '#' is ignored. Files are written
// zero-based; on reading, the first index of the .node file sets the base
// (0 or 1) for both files. Extra trailing columns are ignored.
//
// Vtk is the legacy ASCII unstructured grid with tetrahedral cells (type 10).
//
// Coordinates are written with 17 significant digits, so reading back
// reproduces them bit for bit. Every write goes to a temporary file first and
// is renamed into place.

namespace wct {

enum class MeshFormat { NodeEle, Vtk };

/// For NodeEle, `path` may be the base name or either file of the pair.
void write_mesh(const TetMesh& m, const std::filesystem::path& path, MeshFormat format);

/// Format chosen by extension: ".vtk" is Vtk, anything else NodeEle.
/// Throws ParseError (with line number), IoError, IndexOutOfRange, or the
/// TetMesh::build errors.
TetMesh read_mesh(const std::filesystem::path& path);

/// Reads the points of a .node file.
std::vector<Point3> read_points(const std::filesystem::path& path);

/// Writes points as a .node file.
void write_points(const std::vector<Point3>& pts, const std::filesystem::path& path);

/// Replaces `path` with `content` via a temporary file in the same directory.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// The `.node` and `.ele` paths for a NodeEle base or member path.
std::filesystem::path node_path(const std::filesystem::path& path);
std::filesystem::path ele_path(const std::filesystem::path& path);

}  // namespace wct
