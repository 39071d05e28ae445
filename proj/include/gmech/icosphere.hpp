#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmech/algebra.hpp"
#include "gmech/errors.hpp"

namespace gmech {

/// Triangulated sphere obtained by midpoint subdivision of the icosahedron,
/// every vertex projected to radius R. Construction is deterministic: the
/// same (subdivisions, radius) always yields the same vertex order, so file
/// outputs are reproducible bit for bit.
struct IcosphereMesh {
    double radius = 1.0;
    int subdivisions = 0;

    std::vector<Vec3> vertices;                 // |v_i| = R
    std::vector<std::array<int, 3>> faces;      // CCW seen from outside

    /// Barycentric dual areas: one third of each incident spherical
    /// triangle's area. They sum to the exact sphere area 4 pi R^2.
    std::vector<double> dual_areas;

    /// face_neighbors[f][k] = face across the edge opposite corner k.
    std::vector<std::array<int, 3>> face_neighbors;

    /// One incident face per vertex (walk start for point location).
    std::vector<int> vertex_face;

    /// Sorted 1-ring vertex ids.
    std::vector<std::vector<int>> vertex_neighbors;

    double min_edge = 0.0;
    double max_edge = 0.0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }
    int edge_count() const { return 3 * face_count() / 2; }
    int euler_characteristic() const {
        return vertex_count() - edge_count() + face_count();
    }
};

/// Builds the level-s icosphere: V = 10 * 4^s + 2 vertices.
/// subdivisions outside [0, 7] is rejected.
IcosphereMesh build_icosphere(int subdivisions, double radius);

/// Signed spherical area of the triangle (a,b,c) on the sphere of radius R;
/// positive for CCW orientation seen from outside.
double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c, double radius);

/// OFF text format: "OFF", counts line, vertex lines, face lines.
void write_off(const IcosphereMesh& mesh, std::ostream& os);
void write_off(const IcosphereMesh& mesh, const std::string& path);

} // namespace gmech
