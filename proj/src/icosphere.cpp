#include "gmech/icosphere.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

namespace gmech {

double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c, double radius) {
    // Van Oosterom & Strackee solid-angle formula on unit vectors.
    const Vec3 ua = a.normalized(), ub = b.normalized(), uc = c.normalized();
    const double num = ua.dot(ub.cross(uc));
    const double den = 1.0 + ua.dot(ub) + ub.dot(uc) + uc.dot(ua);
    return 2.0 * std::atan2(num, den) * radius * radius;
}

namespace {

struct Builder {
    double radius;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::map<std::pair<int, int>, int> midpoint_cache;

    int add_vertex(const Vec3& p) {
        vertices.push_back(p.normalized() * radius);
        return static_cast<int>(vertices.size()) - 1;
    }

    int midpoint(int i, int j) {
        const auto key = std::minmax(i, j);
        auto it = midpoint_cache.find(key);
        if (it != midpoint_cache.end())
            return it->second;
        const int idx = add_vertex(0.5 * (vertices[i] + vertices[j]));
        midpoint_cache.emplace(key, idx);
        return idx;
    }

    void subdivide_once() {
        std::vector<std::array<int, 3>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const int m01 = midpoint(f[0], f[1]);
            const int m12 = midpoint(f[1], f[2]);
            const int m02 = midpoint(f[2], f[0]);
            next.push_back({f[0], m01, m02});
            next.push_back({f[1], m12, m01});
            next.push_back({f[2], m02, m12});
            next.push_back({m01, m12, m02});
        }
        faces = std::move(next);
        midpoint_cache.clear();
    }
};

} // namespace

IcosphereMesh build_icosphere(int subdivisions, double radius) {
    if (subdivisions < 0 || subdivisions > 7)
        throw ValidationError("build_icosphere: subdivisions must be in [0, 7]");
    if (!(radius > 0.0))
        throw ValidationError("build_icosphere: radius must be positive");

    Builder b;
    b.radius = radius;

    const double t = 0.5 * (1.0 + std::sqrt(5.0));
    const double raw[12][3] = {
        {-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
    for (const auto& v : raw)
        b.add_vertex(Vec3(v[0], v[1], v[2]));

    b.faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

    for (int s = 0; s < subdivisions; ++s)
        b.subdivide_once();

    IcosphereMesh mesh;
    mesh.radius = radius;
    mesh.subdivisions = subdivisions;
    mesh.vertices = std::move(b.vertices);
    mesh.faces = std::move(b.faces);

    const int nv = mesh.vertex_count();
    const int nf = mesh.face_count();

    mesh.dual_areas.assign(nv, 0.0);
    for (const auto& f : mesh.faces) {
        const double area = spherical_triangle_area(
            mesh.vertices[f[0]], mesh.vertices[f[1]], mesh.vertices[f[2]], radius);
        for (int k = 0; k < 3; ++k)
            mesh.dual_areas[f[k]] += area / 3.0;
    }

    // edge -> (face, corner) incidence, then per-face neighbors
    std::map<std::pair<int, int>, std::array<int, 2>> edge_faces;
    for (int fi = 0; fi < nf; ++fi) {
        const auto& f = mesh.faces[fi];
        for (int k = 0; k < 3; ++k) {
            const auto key = std::minmax(f[(k + 1) % 3], f[(k + 2) % 3]);
            auto [it, fresh] = edge_faces.try_emplace(key, std::array<int, 2>{-1, -1});
            it->second[fresh ? 0 : 1] = fi;
        }
    }
    mesh.face_neighbors.assign(nf, {-1, -1, -1});
    for (int fi = 0; fi < nf; ++fi) {
        const auto& f = mesh.faces[fi];
        for (int k = 0; k < 3; ++k) {
            const auto key = std::minmax(f[(k + 1) % 3], f[(k + 2) % 3]);
            const auto& pair = edge_faces.at(key);
            mesh.face_neighbors[fi][k] = (pair[0] == fi) ? pair[1] : pair[0];
        }
    }

    mesh.vertex_face.assign(nv, -1);
    for (int fi = 0; fi < nf; ++fi)
        for (int k = 0; k < 3; ++k)
            if (mesh.vertex_face[mesh.faces[fi][k]] < 0)
                mesh.vertex_face[mesh.faces[fi][k]] = fi;

    mesh.vertex_neighbors.assign(nv, {});
    for (const auto& [key, unused] : edge_faces) {
        mesh.vertex_neighbors[key.first].push_back(key.second);
        mesh.vertex_neighbors[key.second].push_back(key.first);
    }
    for (auto& ring : mesh.vertex_neighbors)
        std::sort(ring.begin(), ring.end());

    mesh.min_edge = std::numeric_limits<double>::max();
    mesh.max_edge = 0.0;
    for (const auto& [key, unused] : edge_faces) {
        const double len = (mesh.vertices[key.first] - mesh.vertices[key.second]).norm();
        mesh.min_edge = std::min(mesh.min_edge, len);
        mesh.max_edge = std::max(mesh.max_edge, len);
    }

    return mesh;
}

void write_off(const IcosphereMesh& mesh, std::ostream& os) {
    os << "OFF\n";
    os << mesh.vertex_count() << ' ' << mesh.face_count() << ' ' << mesh.edge_count() << '\n';
    char buf[96];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
        os << buf;
    }
    for (const auto& f : mesh.faces)
        os << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_off(const IcosphereMesh& mesh, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw IOError("write_off: cannot open " + path);
    write_off(mesh, os);
}

} // namespace gmech
