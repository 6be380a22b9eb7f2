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

#ifndef PERIDRAW_SURFACE_MAP_HPP
#define PERIDRAW_SURFACE_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "peridraw/errors.hpp"

namespace peridraw {

// A graph embedded on an orientable surface, stored as a rotation system
// over dense half-edge ids.  Half-edges 2i and 2i+1 are the two sides of
// edge i, so twin(h) == h ^ 1 and edge(h) == h / 2.  Loops and multiple
// edges are allowed.
//
// Orientation convention used throughout the library: rotations list the
// outgoing half-edges counterclockwise around their origin, and the face of
// a half-edge lies on its LEFT.  With that convention the face walk is
// face_next(h) = sigma^{-1}(twin(h)) and face orbits traverse each face
// counterclockwise (interior on the left).
class SurfaceMap {
 public:
  SurfaceMap() = default;

  // rotations[v] lists the outgoing half-edges of vertex v in ccw order.
  // Every id in [0, 2E) must appear exactly once over all lists.
  static SurfaceMap from_rotations(const std::vector<std::vector<int>>& rotations) {
    SurfaceMap m;
    m.build(rotations);
    return m;
  }

  // Convenience builder for maps given by oriented faces (each triple/cycle
  // of vertex ids traversed ccw, interior on the left).  Edges are paired by
  // opposite directed traversals; every directed edge must occur exactly
  // once.  Used by generators and fixtures.
  static SurfaceMap from_faces(int vertex_count,
                               const std::vector<std::vector<int>>& faces);

  int half_edge_count() const { return static_cast<int>(next_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_half_.size()); }
  int face_count() const { return static_cast<int>(face_half_.size()); }
  int genus() const { return genus_; }

  static int twin(int h) { return h ^ 1; }
  static int edge_of(int h) { return h >> 1; }

  int vertex_next(int h) const { return next_[h]; }   // sigma
  int vertex_prev(int h) const { return prev_[h]; }   // sigma^{-1}
  int origin(int h) const { return origin_[h]; }
  int destination(int h) const { return origin_[h ^ 1]; }
  int face(int h) const { return face_[h]; }

  // Next half-edge along the face on the left of h.
  int face_next(int h) const { return prev_[h ^ 1]; }
  int face_prev(int h) const { return next_[h] ^ 1; }

  int half_of_vertex(int v) const { return vertex_half_[v]; }
  int half_of_face(int f) const { return face_half_[f]; }

  int degree(int v) const { return vertex_degree_[v]; }
  int face_degree(int f) const { return face_degree_[f]; }

  bool is_loop(int h) const { return origin_[h] == origin_[h ^ 1]; }

  // All outgoing half-edges of v starting at half_of_vertex(v), ccw.
  std::vector<int> rotation_of(int v) const {
    std::vector<int> out;
    out.reserve(vertex_degree_[v]);
    int h0 = vertex_half_[v];
    int h = h0;
    do {
      out.push_back(h);
      h = next_[h];
    } while (h != h0);
    return out;
  }

  std::vector<int> face_cycle(int f) const {
    std::vector<int> out;
    out.reserve(face_degree_[f]);
    int h0 = face_half_[f];
    int h = h0;
    do {
      out.push_back(h);
      h = face_next(h);
    } while (h != h0);
    return out;
  }

  // Dual map: one vertex per face, one edge per edge (dual half-edge h has
  // origin face(h)), dual rotation sigma* = twin . sigma.  This choice makes
  // dual an exact involution: dual(dual(m)) == m half-edge for half-edge.
  SurfaceMap dual() const {
    std::vector<std::vector<int>> rot(face_count());
    for (int f = 0; f < face_count(); ++f) {
      rot[f].reserve(face_degree_[f]);
      int h0 = face_half_[f];
      int h = h0;
      do {
        rot[f].push_back(h);
        h = face_prev(h);
      } while (h != h0);
    }
    return from_rotations(rot);
  }

  // Sum of face degrees and vertex degrees both equal 2E; exposed for tests.
  bool euler_consistent() const {
    long fd = 0, vd = 0;
    for (int f = 0; f < face_count(); ++f) fd += face_degree_[f];
    for (int v = 0; v < vertex_count(); ++v) vd += vertex_degree_[v];
    return fd == half_edge_count() && vd == half_edge_count() &&
           vertex_count() - edge_count() + face_count() == 2 - 2 * genus_;
  }

 private:
  void build(const std::vector<std::vector<int>>& rotations) {
    long total = 0;
    for (const auto& r : rotations) total += static_cast<long>(r.size());
    check_input(total % 2 == 0, errc::dangling_twin,
                "odd number of half-edges; twin pairing incomplete");
    int nh = static_cast<int>(total);
    next_.assign(nh, -1);
    prev_.assign(nh, -1);
    origin_.assign(nh, -1);
    int nv = static_cast<int>(rotations.size());
    vertex_half_.assign(nv, -1);
    vertex_degree_.assign(nv, 0);

    for (int v = 0; v < nv; ++v) {
      const auto& r = rotations[v];
      if (r.empty()) {
        // Isolated vertices only arise from internal filtering; reject them
        // in user input via the permutation check below (they cannot carry
        // half-edges, so nothing references them).
        vertex_half_[v] = -1;
        continue;
      }
      for (size_t i = 0; i < r.size(); ++i) {
        int h = r[i];
        check_input(h >= 0 && h < nh, errc::dangling_twin,
                    "half-edge id " + std::to_string(h) + " out of range");
        check_input(origin_[h] == -1, errc::not_a_permutation,
                    "half-edge " + std::to_string(h) + " listed twice");
        origin_[h] = v;
        next_[h] = r[(i + 1) % r.size()];
      }
      vertex_half_[v] = *std::min_element(r.begin(), r.end());
      vertex_degree_[v] = static_cast<int>(r.size());
    }
    for (int h = 0; h < nh; ++h)
      check_input(origin_[h] != -1, errc::not_a_permutation,
                  "half-edge " + std::to_string(h) + " missing from rotations");
    for (int h = 0; h < nh; ++h) prev_[next_[h]] = h;

    // Face orbits of h -> sigma^{-1}(twin(h)).
    face_.assign(nh, -1);
    face_half_.clear();
    face_degree_.clear();
    for (int h = 0; h < nh; ++h) {
      if (face_[h] != -1) continue;
      int f = static_cast<int>(face_half_.size());
      face_half_.push_back(h);
      int deg = 0;
      int x = h;
      do {
        face_[x] = f;
        ++deg;
        x = prev_[x ^ 1];
      } while (x != h);
      face_degree_.push_back(deg);
    }

    // Connectivity: the surface is one piece.
    if (nv > 0) {
      std::vector<char> seen(nv, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (vertex_half_[v] < 0) continue;
        int h0 = vertex_half_[v];
        int h = h0;
        do {
          int w = origin_[h ^ 1];
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
          h = next_[h];
        } while (h != h0);
      }
      check_input(reached == nv, errc::unsupported_genus, "map is disconnected");
    }

    int chi = vertex_count() - edge_count() + face_count();
    genus_ = (2 - chi) / 2;
    check_input(chi % 2 == 0 && genus_ >= 0 && genus_ <= 1,
                errc::unsupported_genus,
                "genus " + std::to_string((2 - chi) / 2) + " not supported");
  }

  std::vector<int> next_, prev_, origin_, face_;
  std::vector<int> vertex_half_, face_half_;
  std::vector<int> vertex_degree_, face_degree_;
  int genus_ = 0;
};

// Edge-filtered submap with id translations back to the parent map.
// Isolated vertices are dropped.
struct Submap {
  SurfaceMap map;
  std::vector<int> vertex_to_old;  // new vertex id -> old vertex id
  std::vector<int> edge_to_old;    // new edge id -> old edge id
  std::vector<int> vertex_from_old;  // old -> new, -1 if dropped
  std::vector<int> edge_from_old;    // old -> new, -1 if dropped

  int half_to_old(int h) const { return 2 * edge_to_old[h >> 1] + (h & 1); }
  int half_from_old(int h) const {
    int e = edge_from_old[h >> 1];
    return e < 0 ? -1 : 2 * e + (h & 1);
  }
};

inline Submap make_submap(const SurfaceMap& m, const std::vector<char>& keep_edge) {
  check_internal(static_cast<int>(keep_edge.size()) == m.edge_count(),
                 "filter mask size mismatch");
  Submap s;
  s.edge_from_old.assign(m.edge_count(), -1);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (keep_edge[e]) {
      s.edge_from_old[e] = static_cast<int>(s.edge_to_old.size());
      s.edge_to_old.push_back(e);
    }
  }
  s.vertex_from_old.assign(m.vertex_count(), -1);
  std::vector<std::vector<int>> rot;
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> r;
    for (int h : m.rotation_of(v)) {
      int e = s.edge_from_old[h >> 1];
      if (e >= 0) r.push_back(2 * e + (h & 1));
    }
    if (r.empty()) continue;
    s.vertex_from_old[v] = static_cast<int>(s.vertex_to_old.size());
    s.vertex_to_old.push_back(v);
    rot.push_back(std::move(r));
  }
  s.map = SurfaceMap::from_rotations(rot);
  return s;
}

// Builder taking an explicit twin involution over arbitrary half-edge ids;
// relabels into the xor convention.  Rejects fixed points and non-involutive
// pairings with DanglingTwin.
inline SurfaceMap build_map(const std::vector<std::vector<int>>& rotations,
                            const std::vector<int>& twins) {
  int nh = static_cast<int>(twins.size());
  std::vector<int> relabel(nh, -1);
  int ne = 0;
  for (int h = 0; h < nh; ++h) {
    int t = twins[h];
    check_input(t >= 0 && t < nh && t != h, errc::dangling_twin,
                "twin of " + std::to_string(h) + " invalid");
    check_input(twins[t] == h, errc::dangling_twin,
                "twin pairing is not an involution at " + std::to_string(h));
    if (relabel[h] == -1) {
      relabel[h] = 2 * ne;
      relabel[t] = 2 * ne + 1;
      ++ne;
    }
  }
  std::vector<std::vector<int>> rot(rotations.size());
  for (size_t v = 0; v < rotations.size(); ++v) {
    rot[v].reserve(rotations[v].size());
    for (int h : rotations[v]) {
      check_input(h >= 0 && h < nh, errc::dangling_twin,
                  "rotation references unknown half-edge");
      rot[v].push_back(relabel[h]);
    }
  }
  return SurfaceMap::from_rotations(rot);
}

inline SurfaceMap SurfaceMap::from_faces(int vertex_count,
                                         const std::vector<std::vector<int>>& faces) {
  // Directed edge (a,b) of a ccw face gets paired with (b,a) of the
  // neighbouring face.  sigma is recovered from sigma(face_next(h)) = twin(h).
  struct DirEdge {
    int a, b, id;
  };
  std::vector<DirEdge> dir;
  int nh = 0;
  for (const auto& f : faces) {
    check_input(f.size() >= 1, errc::internal_error, "empty face");
    for (size_t i = 0; i < f.size(); ++i) {
      dir.push_back({f[i], f[(i + 1) % f.size()], nh++});
    }
  }
  check_input(nh % 2 == 0, errc::dangling_twin, "odd directed edge count");
  // Pair opposite directed edges.  Sort by normalized key, then match.
  std::vector<int> order(dir.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    int lo = std::min(dir[i].a, dir[i].b), hi = std::max(dir[i].a, dir[i].b);
    return std::pair<long, long>(static_cast<long>(lo) * vertex_count + hi,
                                 dir[i].a);
  };
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return key(i) < key(j); });
  std::vector<int> twin_of(nh, -1);
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    int lo = std::min(dir[order[i]].a, dir[order[i]].b);
    int hi = std::max(dir[order[i]].a, dir[order[i]].b);
    while (j < order.size() && std::min(dir[order[j]].a, dir[order[j]].b) == lo &&
           std::max(dir[order[j]].a, dir[order[j]].b) == hi)
      ++j;
    check_input(j - i == 2, errc::dangling_twin,
                "edge not shared by exactly two face sides");
    // Loops give two directed copies with equal (a,b); any pairing works.
    twin_of[dir[order[i]].id] = dir[order[i + 1]].id;
    twin_of[dir[order[i + 1]].id] = dir[order[i]].id;
    i = j;
  }
  // sigma(h') = twin(h) where h' follows h around its face.
  std::vector<int> sigma(nh, -1), org(nh, -1);
  {
    int at = 0;
    for (const auto& f : faces) {
      int deg = static_cast<int>(f.size());
      for (int i = 0; i < deg; ++i) {
        int h = at + i;
        int hn = at + (i + 1) % deg;
        org[h] = f[i];
        sigma[hn] = twin_of[h];
      }
      at += deg;
    }
  }
  std::vector<std::vector<int>> rot(vertex_count);
  std::vector<char> seen(nh, 0);
  for (int h = 0; h < nh; ++h) {
    if (seen[h]) continue;
    int x = h;
    do {
      check_input(!seen[x], errc::not_a_permutation, "rotation orbit collision");
      seen[x] = 1;
      rot[org[h]].push_back(x);
      check_input(org[x] == org[h], errc::not_a_permutation,
                  "face list inconsistent at a vertex");
      x = sigma[x];
    } while (x != h);
  }
  return build_map(rot, twin_of);
}

}  // namespace peridraw

#endif  // PERIDRAW_SURFACE_MAP_HPP
