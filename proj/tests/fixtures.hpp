// Shared test fixtures: the small maps named throughout the test suite.
#ifndef PERIDRAW_TESTS_FIXTURES_HPP
#define PERIDRAW_TESTS_FIXTURES_HPP

#include <vector>

#include "peridraw/surface_map.hpp"
#include "peridraw/triangulations.hpp"

namespace fixtures {

using peridraw::SurfaceMap;

// Plane triangle: 3 vertices, 3 edges, 2 faces.
inline SurfaceMap triangle() {
  return SurfaceMap::from_faces(3, {{0, 1, 2}, {2, 1, 0}});
}

// Octahedron with boundary triangles {0,1,2} (B1) and {3,4,5} (B2);
// side edges 0-3, 0-5, 1-3, 1-4, 2-4, 2-5.
inline SurfaceMap octahedron() {
  return SurfaceMap::from_faces(6, {
      {0, 2, 1},            // B1 face, oriented so the other faces are ccw
      {3, 4, 5},            // B2 face
      {0, 1, 3},
      {1, 4, 3},
      {1, 2, 4},
      {2, 5, 4},
      {2, 0, 5},
      {0, 3, 5},
  });
}

struct MarkedMap {
  SurfaceMap map;
  int b1 = -1, b2 = -1;
};

inline MarkedMap octahedron_marked() {
  MarkedMap mm;
  mm.map = octahedron();
  // Locate the faces {0,2,1} and {3,4,5} by their vertex sets.
  for (int f = 0; f < mm.map.face_count(); ++f) {
    auto cyc = mm.map.face_cycle(f);
    bool low = true, high = true;
    for (int h : cyc) {
      low &= mm.map.origin(h) <= 2;
      high &= mm.map.origin(h) >= 3;
    }
    if (low && cyc.size() == 3) mm.b1 = f;
    if (high && cyc.size() == 3) mm.b2 = f;
  }
  return mm;
}

// One vertex, three loops realizing the square torus with a diagonal;
// rotation (a b c a' b' c'), faces {a,c',b'} and {a',c,b}.
inline SurfaceMap one_vertex_torus() {
  return SurfaceMap::from_rotations({{0, 2, 4, 1, 3, 5}});
}

// K7 with the classical toroidal rotation system: faces {i,i+1,i+3} and
// {i,i+2,i+3} over Z_7.
inline SurfaceMap k7_torus() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i)
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
  for (int i = 0; i < 7; ++i)
    faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
  return SurfaceMap::from_faces(7, faces);
}

// k x m triangulated torus grid (k, m >= 3 keeps it simple): vertex (i,j) at
// id i*m+j, right/up/diagonal neighbours, faces two triangles per cell.
inline SurfaceMap grid_torus(int k, int m) {
  auto id = [&](int i, int j) { return ((i % k + k) % k) * m + ((j % m + m) % m); };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < m; ++j) {
      faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return SurfaceMap::from_faces(k * m, faces);
}

}  // namespace fixtures

#endif  // PERIDRAW_TESTS_FIXTURES_HPP
