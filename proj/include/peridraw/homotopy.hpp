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

#ifndef PERIDRAW_HOMOTOPY_HPP
#define PERIDRAW_HOMOTOPY_HPP

#include <array>
#include <queue>
#include <vector>

#include "peridraw/surface_map.hpp"

namespace peridraw {

// Signed crossing counts of a closed walk against two fixed dual cut curves.
// (0,0) iff the walk is null-homologous; on the torus that means contractible
// for cycles.  Signatures add under concatenation of walks.
struct HomotopySignature {
  long p = 0, q = 0;
  bool is_zero() const { return p == 0 && q == 0; }
  bool operator==(const HomotopySignature& o) const { return p == o.p && q == o.q; }
  HomotopySignature operator+(const HomotopySignature& o) const { return {p + o.p, q + o.q}; }
  HomotopySignature operator-() const { return {-p, -q}; }
};

inline long signature_det(const HomotopySignature& a, const HomotopySignature& b) {
  return a.p * b.q - a.q * b.p;
}

// Per-half-edge crossing coefficients of the two cut curves.  The curves are
// built from a BFS tree of the dual:
//  - genus 1: spanning tree of the dual avoiding a primal spanning tree; the
//    two leftover primal edges give dual cycles (fundamental cocycles) whose
//    pairing with the leftover fundamental cycles is unimodular, so the
//    signature map is an isomorphism H_1 -> Z^2.
//  - genus 0 with two marked faces: a single dual path from B1 to B2; a cycle
//    separates the marked faces iff its crossing count is nonzero.  The q
//    coordinate stays 0.
class HomotopyBasis {
 public:
  // Torus basis.
  static HomotopyBasis for_torus(const SurfaceMap& m) {
    check_input(m.genus() == 1, errc::unsupported_genus, "torus basis needs genus 1");
    HomotopyBasis b(m);
    b.build_torus();
    return b;
  }

  // Cylinder "basis": one dual arc from face b1 to face b2.
  static HomotopyBasis for_cylinder(const SurfaceMap& m, int b1, int b2) {
    check_input(m.genus() == 0, errc::unsupported_genus, "cylinder basis needs genus 0");
    check_input(b1 != b2, errc::internal_error, "marked faces must differ");
    HomotopyBasis b(m);
    b.build_cylinder(b1, b2);
    return b;
  }

  const SurfaceMap& map() const { return *map_; }

  // Coefficient of half-edge h against curve i (0 or 1); antisymmetric under
  // twin.
  long coefficient(int i, int h) const { return i == 0 ? c1_[h] : c2_[h]; }

  HomotopySignature signature_of_halfedge(int h) const { return {c1_[h], c2_[h]}; }

  // Walk given as a sequence of half-edges; must be closed (each half-edge's
  // destination is the next one's origin, wrapping around).
  HomotopySignature signature(const std::vector<int>& walk) const {
    check_input(!walk.empty(), errc::walk_not_closed, "empty walk");
    for (size_t i = 0; i < walk.size(); ++i) {
      int h = walk[i], g = walk[(i + 1) % walk.size()];
      check_input(map_->destination(h) == map_->origin(g), errc::walk_not_closed,
                  "walk is not closed at position " + std::to_string(i));
    }
    HomotopySignature s;
    for (int h : walk) {
      s.p += c1_[h];
      s.q += c2_[h];
    }
    return s;
  }

  // The fundamental cycle of a non-tree edge of the primal BFS tree used by
  // the basis: tree path org(h)..dst(h) plus h itself, as a closed half-edge
  // walk.  Only meaningful on the torus basis.
  std::vector<int> fundamental_cycle(int h) const {
    const SurfaceMap& m = *map_;
    std::vector<int> up_from_dst;   // dst .. root
    std::vector<int> up_from_org;   // org .. root
    for (int v = m.destination(h); parent_half_[v] != -1; v = m.destination(parent_half_[v]))
      up_from_dst.push_back(parent_half_[v]);
    for (int v = m.origin(h); parent_half_[v] != -1; v = m.destination(parent_half_[v]))
      up_from_org.push_back(parent_half_[v]);
    // Drop the common tail toward the root.
    while (!up_from_dst.empty() && !up_from_org.empty() &&
           up_from_dst.back() == up_from_org.back()) {
      up_from_dst.pop_back();
      up_from_org.pop_back();
    }
    std::vector<int> walk{h};
    // h: org -> dst, then dst -> meeting point -> org.
    for (int x : up_from_dst) walk.push_back(x);
    for (auto it = up_from_org.rbegin(); it != up_from_org.rend(); ++it)
      walk.push_back(SurfaceMap::twin(*it));
    return walk;
  }

  // Non-tree primal edges of the primal BFS tree (candidates for basis
  // cycles), in increasing edge id order.  Excludes tree edges.
  std::vector<int> nontree_edges() const { return nontree_edges_; }

 private:
  explicit HomotopyBasis(const SurfaceMap& m) : map_(&m) {}

  void build_primal_tree() {
    const SurfaceMap& m = *map_;
    parent_half_.assign(m.vertex_count(), -1);
    in_tree_.assign(m.edge_count(), 0);
    std::vector<char> seen(m.vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int h : m.rotation_of(v)) {
        int w = m.destination(h);
        if (seen[w]) continue;
        seen[w] = 1;
        parent_half_[w] = SurfaceMap::twin(h);  // w -> v
        in_tree_[SurfaceMap::edge_of(h)] = 1;
        q.push(w);
      }
    }
    nontree_edges_.clear();
    for (int e = 0; e < m.edge_count(); ++e)
      if (!in_tree_[e]) nontree_edges_.push_back(e);
  }

  // Dual BFS tree over faces; crossing only edges with allowed[e].  Returns
  // parent dual edge (as a primal half-edge h meaning the step
  // face(h) -> face(twin(h)) was taken INTO face(twin(h))).
  std::vector<int> dual_tree(const std::vector<char>& allowed, int root_face) const {
    const SurfaceMap& m = *map_;
    std::vector<int> parent(m.face_count(), -2);  // -2 unseen, -1 root
    std::queue<int> q;
    parent[root_face] = -1;
    q.push(root_face);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      int h0 = m.half_of_face(f);
      int h = h0;
      do {
        int e = SurfaceMap::edge_of(h);
        int g = m.face(SurfaceMap::twin(h));
        if (allowed[e] && parent[g] == -2) {
          parent[g] = h;  // crossed edge e from f into g
          q.push(g);
        }
        h = m.face_next(h);
      } while (h != h0);
    }
    return parent;
  }

  // Add +1/-1 coefficients along the dual tree path from face f up to the
  // root: curve step face(h) -> face(twin(h)) crossing edge(h) contributes
  // +1 at twin(h) and -1 at h (a primal walk using twin(h) crosses the curve
  // positively).
  static void add_path_coefficients(const SurfaceMap& m, const std::vector<int>& parent,
                                    int f, std::vector<long>& c, long sign) {
    while (parent[f] != -1) {
      int h = parent[f];  // crossed from face(h) into f == face(twin(h))
      c[SurfaceMap::twin(h)] += sign;
      c[h] -= sign;
      f = m.face(h);
    }
  }

  void build_torus() {
    const SurfaceMap& m = *map_;
    build_primal_tree();
    // Dual spanning tree restricted to non-tree primal edges.
    std::vector<char> allowed(m.edge_count(), 0);
    for (int e : nontree_edges_) allowed[e] = 1;
    std::vector<int> dparent = dual_tree(allowed, 0);
    for (int f = 0; f < m.face_count(); ++f)
      check_internal(dparent[f] != -2, "dual tree does not span (tree-cotree)");
    // Leftover edges: not in primal tree, not crossed by dual tree.
    std::vector<char> crossed(m.edge_count(), 0);
    for (int f = 0; f < m.face_count(); ++f)
      if (dparent[f] >= 0) crossed[SurfaceMap::edge_of(dparent[f])] = 1;
    std::vector<int> leftover;
    for (int e : nontree_edges_)
      if (!crossed[e]) leftover.push_back(e);
    check_internal(leftover.size() == 2, "tree-cotree leftover must be 2 on the torus");
    c1_.assign(m.half_edge_count(), 0);
    c2_.assign(m.half_edge_count(), 0);
    for (int i = 0; i < 2; ++i) {
      auto& c = i == 0 ? c1_ : c2_;
      int h = 2 * leftover[i];
      // Dual cycle: cross e, then walk the dual tree path between the two
      // incident faces.  Crossing h's edge from face(h) to face(twin(h)).
      c[SurfaceMap::twin(h)] += 1;
      c[h] -= 1;
      // Path from face(twin(h)) up to root, then root down to face(h):
      // equivalently add +path(face(h)) and -path(face(twin(h))) reversed;
      // the shared part cancels.
      add_path_coefficients(m, dparent, m.face(h), c, +1);
      add_path_coefficients(m, dparent, m.face(SurfaceMap::twin(h)), c, -1);
    }
    basis_edges_ = {leftover[0], leftover[1]};
  }

  void build_cylinder(int b1, int b2) {
    const SurfaceMap& m = *map_;
    build_primal_tree();  // used by fundamental_cycle; coefficients below
    std::vector<char> allowed(m.edge_count(), 1);
    std::vector<int> dparent = dual_tree(allowed, b1);
    check_internal(dparent[b2] != -2, "dual of a connected map is connected");
    c1_.assign(m.half_edge_count(), 0);
    c2_.assign(m.half_edge_count(), 0);
    add_path_coefficients(m, dparent, b2, c1_, +1);
  }

  const SurfaceMap* map_;
  std::vector<long> c1_, c2_;
  std::vector<int> parent_half_;   // per vertex: half-edge v -> parent(v)
  std::vector<char> in_tree_;
  std::vector<int> nontree_edges_;
  std::array<int, 2> basis_edges_{{-1, -1}};
};

// Length of a shortest non-contractible cycle of a toroidal map.  BFS from
// every vertex with homology offsets along tree paths; an edge whose offset
// does not telescope closes a non-null walk, and a shortest such walk over
// all sources has the length of a shortest non-contractible cycle.
// Exact for every homotopy class (no bounded cover patch involved).
inline long shortest_noncontractible_cycle_length(const SurfaceMap& m,
                                                  const HomotopyBasis& basis) {
  check_input(m.genus() == 1, errc::unsupported_genus, "gamma oracle needs genus 1");
  const long inf = static_cast<long>(1) << 60;
  long best = inf;
  int n = m.vertex_count();
  std::vector<long> dist(n);
  std::vector<HomotopySignature> off(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    off[s] = {0, 0};
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (2 * dist[v] >= best) continue;  // cannot improve from here
      for (int h : m.rotation_of(v)) {
        int w = m.destination(h);
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          off[w] = off[v] + basis.signature_of_halfedge(h);
          q.push(w);
        }
      }
    }
    // Every edge: mismatch -> non-contractible closed walk through s.
    for (int h = 0; h < m.half_edge_count(); h += 2) {
      int u = m.origin(h), w = m.destination(h);
      if (dist[u] < 0 || dist[w] < 0) continue;
      HomotopySignature around = off[u] + basis.signature_of_halfedge(h) + (-off[w]);
      if (!around.is_zero()) best = std::min(best, dist[u] + 1 + dist[w]);
    }
  }
  check_internal(best < inf, "torus always has a non-contractible cycle");
  return best;
}

}  // namespace peridraw

#endif  // PERIDRAW_HOMOTOPY_HPP
