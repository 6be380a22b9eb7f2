/*
 * Copyright 2026 The peridraw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERIDRAW_TRIANGULATIONS_HPP
#define PERIDRAW_TRIANGULATIONS_HPP

#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "peridraw/homotopy.hpp"
#include "peridraw/surface_map.hpp"

namespace peridraw {

// A genus-0 map with two marked boundary faces whose contours are simple
// cycles and all other faces triangles.  Weakly simple features (loops and
// 2-cycles separating the boundary faces) are allowed and flagged.
struct CylindricTriangulation {
  SurfaceMap map;
  int b1 = -1, b2 = -1;              // boundary face ids
  std::vector<int> contour1, contour2;  // face cycles of b1 / b2
  std::vector<char> on_c1, on_c2;    // per-vertex membership
  int n = 0;
  bool has_noncontractible_loop = false;
  bool has_noncontractible_two_cycle = false;

  bool weakly_simple_features() const {
    return has_noncontractible_loop || has_noncontractible_two_cycle;
  }

  bool is_boundary_edge(int e) const {
    int h = 2 * e;
    return map.face(h) == b1 || map.face(h) == b2 ||
           map.face(SurfaceMap::twin(h)) == b1 || map.face(SurfaceMap::twin(h)) == b2;
  }

  // Chord of C(B1): edge not bordering b1 with both endpoints on C(B1).
  bool is_b1_chord(int e) const {
    int h = 2 * e;
    if (map.face(h) == b1 || map.face(SurfaceMap::twin(h)) == b1) return false;
    return on_c1[map.origin(h)] && on_c1[map.destination(h)];
  }

  bool b1_chordless() const {
    for (int e = 0; e < map.edge_count(); ++e)
      if (is_b1_chord(e)) return false;
    return true;
  }

  // Graph distance between the two boundary contours (0 when they share a
  // vertex).
  int boundary_distance() const {
    std::vector<int> dist(map.vertex_count(), -1);
    std::queue<int> q;
    for (int h : contour1) {
      int v = map.origin(h);
      if (dist[v] == -1) {
        dist[v] = 0;
        q.push(v);
      }
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (on_c2[v]) return dist[v];
      for (int h : map.rotation_of(v)) {
        int w = map.destination(h);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    check_internal(false, "boundaries are in the same connected map");
    return -1;
  }
};

// A genus-1 map with all faces triangles; weakly simple (loops and 2-cycles
// in distinct non-trivial homotopy classes) allowed.
struct ToroidalTriangulation {
  SurfaceMap map;
  int n = 0;
  bool weakly_simple = false;  // true if any loop or multiple edge present
};

namespace detail {

// Simple contour: no vertex twice, no edge twice (a face of degree 1, a
// non-contractible loop, is fine).
inline void check_simple_contour(const SurfaceMap& m, const std::vector<int>& cyc,
                                 std::vector<char>& scratch, const char* which) {
  for (int h : cyc) {
    int v = m.origin(h);
    check_input(!scratch[v], errc::non_simple_boundary,
                std::string(which) + " contour repeats vertex " + std::to_string(v));
    scratch[v] = 1;
  }
  for (int h : cyc) scratch[m.origin(h)] = 0;
  if (cyc.size() >= 2) {
    for (int h : cyc)
      check_input(m.face(h) != m.face(SurfaceMap::twin(h)), errc::non_simple_boundary,
                  std::string(which) + " contour traverses an edge twice");
  }
}

inline void check_triangle_face(const SurfaceMap& m, int f, errc code) {
  check_input(m.face_degree(f) == 3, code,
              "face " + std::to_string(f) + " has degree " +
                  std::to_string(m.face_degree(f)));
  auto cyc = m.face_cycle(f);
  int e0 = SurfaceMap::edge_of(cyc[0]), e1 = SurfaceMap::edge_of(cyc[1]),
      e2 = SurfaceMap::edge_of(cyc[2]);
  check_input(e0 != e1 && e1 != e2 && e0 != e2, code,
              "face " + std::to_string(f) + " repeats an edge");
}

// Groups of parallel edges keyed by unordered endpoint pair; loops excluded.
inline std::unordered_map<long, std::vector<int>> parallel_groups(const SurfaceMap& m) {
  std::unordered_map<long, std::vector<int>> groups;
  for (int e = 0; e < m.edge_count(); ++e) {
    int u = m.origin(2 * e), v = m.destination(2 * e);
    if (u == v) continue;
    long key = static_cast<long>(std::min(u, v)) * m.vertex_count() + std::max(u, v);
    groups[key].push_back(e);
  }
  return groups;
}

}  // namespace detail

inline CylindricTriangulation validate_cylindric(const SurfaceMap& map, int b1, int b2) {
  check_input(map.genus() == 0, errc::unsupported_genus,
              "cylindric map must have genus 0");
  check_input(b1 >= 0 && b1 < map.face_count() && b2 >= 0 && b2 < map.face_count(),
              errc::non_simple_boundary, "boundary face id out of range");
  check_input(b1 != b2, errc::non_simple_boundary, "the two marked faces coincide");

  CylindricTriangulation t;
  t.map = map;
  const SurfaceMap& m = t.map;
  t.b1 = b1;
  t.b2 = b2;
  t.n = m.vertex_count();
  t.contour1 = m.face_cycle(b1);
  t.contour2 = m.face_cycle(b2);

  std::vector<char> scratch(m.vertex_count(), 0);
  detail::check_simple_contour(m, t.contour1, scratch, "B1");
  detail::check_simple_contour(m, t.contour2, scratch, "B2");

  t.on_c1.assign(m.vertex_count(), 0);
  t.on_c2.assign(m.vertex_count(), 0);
  for (int h : t.contour1) t.on_c1[m.origin(h)] = 1;
  for (int h : t.contour2) t.on_c2[m.origin(h)] = 1;

  // Loops and 2-cycles must separate the boundary faces.  These run before
  // the face checks so that weak-simplicity violations are reported as such
  // even on maps whose face structure is degenerate too.
  HomotopyBasis basis = HomotopyBasis::for_cylinder(m, b1, b2);
  std::vector<int> loops_at(m.vertex_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    int h = 2 * e;
    if (!m.is_loop(h)) continue;
    check_input(!basis.signature_of_halfedge(h).is_zero(), errc::contractible_short_cycle,
                "contractible loop at vertex " + std::to_string(m.origin(h)));
    t.has_noncontractible_loop = true;
    int v = m.origin(h);
    check_input(++loops_at[v] <= 1, errc::two_loops_at_vertex,
                "vertex " + std::to_string(v) + " carries two loops");
  }
  for (auto& [key, group] : detail::parallel_groups(m)) {
    (void)key;
    if (group.size() < 2) continue;
    t.has_noncontractible_two_cycle = true;
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        int ha = 2 * group[i];
        int hb = 2 * group[j];
        if (m.origin(hb) != m.destination(ha)) hb = SurfaceMap::twin(hb);
        HomotopySignature s = basis.signature_of_halfedge(ha) +
                              basis.signature_of_halfedge(hb);
        check_input(!s.is_zero(), errc::contractible_short_cycle,
                    "contractible 2-cycle between vertices " +
                        std::to_string(m.origin(ha)) + " and " +
                        std::to_string(m.destination(ha)));
      }
    }
  }

  for (int f = 0; f < m.face_count(); ++f) {
    if (f == b1 || f == b2) continue;
    detail::check_triangle_face(m, f, errc::non_triangular_inner_face);
  }
  return t;
}

inline ToroidalTriangulation validate_toroidal(const SurfaceMap& map) {
  check_input(map.genus() == 1, errc::unsupported_genus,
              "toroidal map must have genus 1");
  ToroidalTriangulation t;
  t.map = map;
  const SurfaceMap& m = t.map;
  t.n = m.vertex_count();

  HomotopyBasis basis = HomotopyBasis::for_torus(m);
  std::vector<std::vector<HomotopySignature>> loop_classes(m.vertex_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    int h = 2 * e;
    if (!m.is_loop(h)) continue;
    t.weakly_simple = true;
    HomotopySignature s = basis.signature_of_halfedge(h);
    check_input(!s.is_zero(), errc::contractible_short_cycle,
                "contractible loop at vertex " + std::to_string(m.origin(h)));
    int v = m.origin(h);
    for (const auto& other : loop_classes[v])
      check_input(!(other == s) && !(other == -s), errc::homotopic_loops_at_vertex,
                  "homotopic loops at vertex " + std::to_string(v));
    loop_classes[v].push_back(s);
  }
  for (auto& [key, group] : detail::parallel_groups(m)) {
    (void)key;
    if (group.size() < 2) continue;
    t.weakly_simple = true;
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        int ha = 2 * group[i];
        int hb = 2 * group[j];
        if (m.origin(hb) != m.destination(ha)) hb = SurfaceMap::twin(hb);
        HomotopySignature s = basis.signature_of_halfedge(ha) +
                              basis.signature_of_halfedge(hb);
        check_input(!s.is_zero(), errc::contractible_short_cycle,
                    "contractible 2-cycle between vertices " +
                        std::to_string(m.origin(ha)) + " and " +
                        std::to_string(m.destination(ha)));
      }
    }
  }

  for (int f = 0; f < m.face_count(); ++f)
    detail::check_triangle_face(m, f, errc::non_triangular_face);
  return t;
}

}  // namespace peridraw

#endif  // PERIDRAW_TRIANGULATIONS_HPP
