#include "lcpoly/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <sstream>

#include "lcpoly/errors.hpp"

namespace lcpoly {

Vec3 OctantFace::outward_normal() const
{
    Vec3 n;
    n[axis] = interior ? 1.0 : -1.0;
    return n;
}

bool Octant::contains(Vec3 r, double slack) const
{
    for (int i = 0; i < 3; ++i) {
        if (r[i] < -slack || r[i] > half[i] + slack)
            return false;
    }
    return true;
}

Prism::Prism(Vec3 lengths) : lengths_(lengths)
{
    for (unsigned bits = 0; bits < 8; ++bits) {
        PrismVertex& v = vertices_[bits];
        v.bits = bits;
        for (int i = 0; i < 3; ++i)
            v.coords[i] = (bits >> i) & 1u ? lengths_[i] : 0.0;
        v.parity = std::popcount(bits) % 2 == 0 ? 1 : -1;
    }
}

std::array<std::pair<unsigned, unsigned>, 12> Prism::edges() const
{
    std::array<std::pair<unsigned, unsigned>, 12> result;
    std::size_t k = 0;
    for (unsigned a = 0; a < 8; ++a) {
        for (int i = 0; i < 3; ++i) {
            unsigned b = a ^ (1u << i);
            if (a < b)
                result[k++] = {a, b};
        }
    }
    return result;
}

Octant Prism::octant() const
{
    Octant o;
    o.half = 0.5 * lengths_;
    for (int axis = 0; axis < 3; ++axis) {
        int j = (axis + 1) % 3;
        int k = (axis + 2) % 3;
        OctantFace face;
        face.axis = axis;
        face.free_axes = {j, k};
        face.extent = {o.half[j], o.half[k]};
        face.interior = false;
        face.offset = 0;
        o.exterior[axis] = face;
        face.interior = true;
        face.offset = o.half[axis];
        o.interior[axis] = face;
    }
    return o;
}

Prism make_prism(double lx, double ly, double lz)
{
    for (double l : {lx, ly, lz}) {
        if (!std::isfinite(l) || l <= 0) {
            std::ostringstream os;
            os << "prism side lengths must be finite and positive (got " << lx
               << ", " << ly << ", " << lz << ")";
            throw InvalidDimension(os.str());
        }
    }
    if (!(lx >= ly && ly >= lz)) {
        std::array<double, 3> s{lx, ly, lz};
        std::sort(s.begin(), s.end(), std::greater<>{});
        std::ostringstream os;
        os << "prism sides must satisfy Lx >= Ly >= Lz (got " << lx << ", "
           << ly << ", " << lz << "); use " << s[0] << "," << s[1] << ","
           << s[2];
        throw OrderingError(os.str());
    }
    return Prism(Vec3{lx, ly, lz});
}

std::optional<double>
edge_length(const Prism& prism, const PrismVertex& a, const PrismVertex& b)
{
    for (const PrismVertex* v : {&a, &b}) {
        if (v->bits >= 8 || !(prism.vertex(v->bits).coords == v->coords))
            throw DomainError("vertex does not belong to this prism");
    }
    unsigned diff = a.bits ^ b.bits;
    if (std::popcount(diff) != 1)
        return std::nullopt;
    return prism.length(std::countr_zero(diff));
}

std::array<VertexArea, 8> vertex_trapped_areas(const Prism& prism, double omega0)
{
    std::array<VertexArea, 8> result;
    for (unsigned bits = 0; bits < 8; ++bits) {
        const PrismVertex& v = prism.vertex(bits);
        result[bits] = {v, v.parity * omega0};
    }
    return result;
}

}  // namespace lcpoly
