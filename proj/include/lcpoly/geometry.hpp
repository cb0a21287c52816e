#pragma once

#include <array>
#include <optional>
#include <utility>

#include "lcpoly/vec3.hpp"

namespace lcpoly {

//! Corner of a prism. Bit i of \c bits set means coordinate i equals L_i.
struct PrismVertex {
    unsigned bits = 0;
    Vec3 coords;
    //! +1 at the origin, flipped by every single reflection.
    int parity = 1;
};

//! One face of the octant {0 <= r_j <= L_j/2}, given by the plane r_axis = offset.
struct OctantFace {
    int axis = 0;
    double offset = 0;
    bool interior = false;
    //! Half-extents of the face along its two free axes.
    std::array<double, 2> extent{};
    std::array<int, 2> free_axes{};

    double area() const { return extent[0] * extent[1]; }
    //! Outward unit normal of the octant on this face.
    Vec3 outward_normal() const;
};

struct Octant {
    Vec3 half;  //!< (Lx/2, Ly/2, Lz/2)
    std::array<OctantFace, 3> exterior;
    std::array<OctantFace, 3> interior;

    bool contains(Vec3 r, double slack = 0) const;
};

/*!
 * Right rectangular prism [0,Lx]x[0,Ly]x[0,Lz] with Lx >= Ly >= Lz > 0.
 *
 * Construct through make_prism, which validates the ordering; the axis
 * labels of every downstream invariant assume it.
 */
class Prism {
  public:
    double lx() const { return lengths_.x; }
    double ly() const { return lengths_.y; }
    double lz() const { return lengths_.z; }
    Vec3 lengths() const { return lengths_; }
    double length(int axis) const { return lengths_[axis]; }

    //! a_ij = L_i / L_j
    double aspect(int i, int j) const { return lengths_[i] / lengths_[j]; }
    double volume() const { return lengths_.x * lengths_.y * lengths_.z; }
    //! Distance from the origin to the prism centre, |(Lx,Ly,Lz)|/2.
    double half_diagonal() const { return 0.5 * norm(lengths_); }

    const std::array<PrismVertex, 8>& vertices() const { return vertices_; }
    const PrismVertex& vertex(unsigned bits) const { return vertices_.at(bits); }

    //! All 12 edges as vertex-index pairs (lower index first).
    std::array<std::pair<unsigned, unsigned>, 12> edges() const;

    Octant octant() const;

  private:
    friend Prism make_prism(double, double, double);
    explicit Prism(Vec3 lengths);

    Vec3 lengths_;
    std::array<PrismVertex, 8> vertices_;
};

//! Throws InvalidDimension for non-positive or non-finite input and
//! OrderingError unless lx >= ly >= lz.
Prism make_prism(double lx, double ly, double lz);

//! Length of the edge a-b, or nullopt if a and b are not adjacent.
//! Throws DomainError if either vertex does not belong to the prism.
std::optional<double>
edge_length(const Prism& prism, const PrismVertex& a, const PrismVertex& b);

struct VertexArea {
    PrismVertex vertex;
    double omega = 0;
};

//! Trapped areas of a reflection-symmetric configuration: parity(a) * omega0.
std::array<VertexArea, 8> vertex_trapped_areas(const Prism& prism, double omega0);

}  // namespace lcpoly
