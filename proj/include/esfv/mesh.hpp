#pragma once

#include <cstddef>
#include <vector>

#include "esfv/vec.hpp"

namespace esfv {

enum class Side { Left = 0, Right = 1, Bottom = 2, Top = 3 };

const char* to_string(Side side);

/// Dual face shared by nodes i < j. (dx, dy) is the signed face vector seen
/// from i when circling its dual cell counter-clockwise; j sees the negation.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double dx = 0.0;
  double dy = 0.0;
  Axis axis = Axis::X;
};

/// Part of a boundary node's dual cell lying on the physical boundary.
struct BoundaryFace {
  std::size_t node = 0;
  double dx = 0.0;
  double dy = 0.0;
  Vec2 normal;
  double length = 0.0;
  Side side = Side::Left;
};

/// Node-centred dual mesh on [0,lx] x [0,ly] with nodes k = 0..nx, l = 0..ny.
class DualMesh {
 public:
  DualMesh() = default;

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  std::size_t num_nodes() const { return volumes_.size(); }

  /// Row-major flattening i = k + (nx+1)*l. Throws OutOfRange.
  std::size_t node_index(int k, int l) const;
  int k_of(std::size_t i) const { return static_cast<int>(i % static_cast<std::size_t>(nx_ + 1)); }
  int l_of(std::size_t i) const { return static_cast<int>(i / static_cast<std::size_t>(nx_ + 1)); }

  double x(int k) const { return k == nx_ ? lx_ : k * hx_; }
  double y(int l) const { return l == ny_ ? ly_ : l * hy_; }
  Vec2 position(std::size_t i) const { return {x(k_of(i)), y(l_of(i))}; }

  bool is_boundary(std::size_t i) const;

  const std::vector<double>& volumes() const { return volumes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<BoundaryFace>& boundary_faces() const { return faces_; }

  friend DualMesh build_mesh(int nx, int ny, double lx, double ly);

 private:
  int nx_ = 0;
  int ny_ = 0;
  double lx_ = 0.0;
  double ly_ = 0.0;
  double hx_ = 0.0;
  double hy_ = 0.0;
  std::vector<double> volumes_;
  std::vector<Edge> edges_;
  std::vector<BoundaryFace> faces_;
};

/// Throws InvalidMesh unless nx, ny >= 2 and lx, ly > 0.
DualMesh build_mesh(int nx, int ny, double lx, double ly);

struct BoundaryNode {
  std::size_t node = 0;
  /// Indices into DualMesh::boundary_faces(); corners own two.
  std::vector<std::size_t> faces;
};

std::vector<BoundaryNode> boundary_nodes(const DualMesh& mesh);

}  // namespace esfv
