#include "esfv/mesh.hpp"

#include <cmath>
#include <string>

#include "esfv/errors.hpp"

namespace esfv {

const char* to_string(Side side) {
  switch (side) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
  }
  return "?";
}

std::size_t DualMesh::node_index(int k, int l) const {
  if (k < 0 || k > nx_ || l < 0 || l > ny_)
    throw OutOfRange("node (" + std::to_string(k) + "," + std::to_string(l) + ") outside mesh");
  return static_cast<std::size_t>(k) + static_cast<std::size_t>(nx_ + 1) * static_cast<std::size_t>(l);
}

bool DualMesh::is_boundary(std::size_t i) const {
  const int k = k_of(i), l = l_of(i);
  return k == 0 || k == nx_ || l == 0 || l == ny_;
}

DualMesh build_mesh(int nx, int ny, double lx, double ly) {
  if (nx < 2 || ny < 2) throw InvalidMesh("mesh needs at least 2 intervals per direction");
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly))
    throw InvalidMesh("mesh extents must be positive and finite");

  DualMesh m;
  m.nx_ = nx;
  m.ny_ = ny;
  m.lx_ = lx;
  m.ly_ = ly;
  m.hx_ = lx / nx;
  m.hy_ = ly / ny;

  // Width of the dual cell in x at column k, height in y at row l.
  auto wx = [&](int k) { return (k == 0 || k == nx) ? 0.5 * m.hx_ : m.hx_; };
  auto wy = [&](int l) { return (l == 0 || l == ny) ? 0.5 * m.hy_ : m.hy_; };

  const std::size_t n = static_cast<std::size_t>(nx + 1) * static_cast<std::size_t>(ny + 1);
  m.volumes_.resize(n);
  m.edges_.reserve(2 * n);

  for (int l = 0; l <= ny; ++l) {
    for (int k = 0; k <= nx; ++k) {
      const std::size_t i = m.node_index(k, l);
      m.volumes_[i] = wx(k) * wy(l);
      if (k < nx) m.edges_.push_back({i, m.node_index(k + 1, l), 0.0, wy(l), Axis::X});
      if (l < ny) m.edges_.push_back({i, m.node_index(k, l + 1), -wx(k), 0.0, Axis::Y});
    }
  }

  auto add_face = [&](std::size_t i, double dx, double dy, Side side) {
    const double len = std::sqrt(dx * dx + dy * dy);
    m.faces_.push_back({i, dx, dy, Vec2{dy / len, -dx / len}, len, side});
  };
  // Faces are grouped per node in ascending node order.
  for (int l = 0; l <= ny; ++l) {
    for (int k = 0; k <= nx; ++k) {
      const std::size_t i = m.node_index(k, l);
      if (l == 0) add_face(i, wx(k), 0.0, Side::Bottom);
      if (k == nx) add_face(i, 0.0, wy(l), Side::Right);
      if (l == ny) add_face(i, -wx(k), 0.0, Side::Top);
      if (k == 0) add_face(i, 0.0, -wy(l), Side::Left);
    }
  }
  return m;
}

std::vector<BoundaryNode> boundary_nodes(const DualMesh& mesh) {
  std::vector<BoundaryNode> out;
  const auto& faces = mesh.boundary_faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (out.empty() || out.back().node != faces[f].node) out.push_back({faces[f].node, {}});
    out.back().faces.push_back(f);
  }
  return out;
}

}  // namespace esfv
