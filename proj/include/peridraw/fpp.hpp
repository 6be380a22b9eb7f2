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

#ifndef PERIDRAW_FPP_HPP
#define PERIDRAW_FPP_HPP

#include <vector>

#include "peridraw/span_engine.hpp"

namespace peridraw {

// Planar map with a simple polygonal outer face, all inner faces triangles,
// and a distinguished base edge on the outer cycle.  Chord components hang
// below their chord as exactly this structure.
struct QuasiTriangulation {
  SurfaceMap map;
  int outer = -1;            // outer face id
  int base = -1;             // half-edge u -> v with the interior on its left
  std::vector<int> outer_cycle;
  std::vector<char> on_outer;

  int u() const { return map.origin(base); }
  int v() const { return map.destination(base); }
  int size() const { return map.vertex_count(); }
};

// Straight-line drawing with the base horizontal at y = 0 and the interior
// above; width is the final span of the base.
struct PlanarLayout {
  std::vector<long> x, y;
  long width = 0;
  int base_u = -1, base_v = -1;
};

inline QuasiTriangulation validate_quasi(const SurfaceMap& map, int outer_face,
                                         int base_half) {
  check_input(map.genus() == 0, errc::unsupported_genus,
              "quasi-triangulation must be planar");
  check_input(map.vertex_count() >= 3, errc::non_triangular_inner_face,
              "quasi-triangulation needs at least 3 vertices");
  QuasiTriangulation q;
  q.map = map;
  const SurfaceMap& m = q.map;
  q.outer = outer_face;
  for (int e = 0; e < m.edge_count(); ++e) {
    check_input(!m.is_loop(2 * e), errc::contractible_short_cycle,
                "loops cannot appear in a quasi-triangulation");
  }
  for (auto& [key, group] : detail::parallel_groups(m)) {
    (void)key;
    check_input(group.size() == 1, errc::contractible_short_cycle,
                "multiple edges cannot appear in a quasi-triangulation");
  }
  q.outer_cycle = m.face_cycle(outer_face);
  std::vector<char> scratch(m.vertex_count(), 0);
  detail::check_simple_contour(m, q.outer_cycle, scratch, "outer");
  for (int f = 0; f < m.face_count(); ++f) {
    if (f == outer_face) continue;
    detail::check_triangle_face(m, f, errc::non_triangular_inner_face);
  }
  // normalize base: interior on its left
  check_input(base_half >= 0 && base_half < m.half_edge_count(),
              errc::non_simple_boundary, "base half-edge out of range");
  int b = base_half;
  if (m.face(b) == outer_face) b = SurfaceMap::twin(b);
  check_input(m.face(SurfaceMap::twin(b)) == outer_face, errc::non_simple_boundary,
              "base edge must lie on the outer cycle");
  q.base = b;
  q.on_outer.assign(m.vertex_count(), 0);
  for (int h : q.outer_cycle) q.on_outer[m.origin(h)] = 1;
  return q;
}

// Reverse shelling from the outer cycle down to the base edge; a free vertex
// is an outer vertex other than the base endpoints with no incident chord of
// the current outer cycle.  Steps come back in forward insertion order; the
// first inserted vertex is adjacent to both base endpoints.
inline CanonicalOrdering planar_canonical_order(const QuasiTriangulation& q) {
  const SurfaceMap& m = q.map;
  std::vector<char> prot(m.vertex_count(), 0);
  prot[q.u()] = 1;
  prot[q.v()] = 1;
  detail::ShellScaffold st(m, q.outer_cycle, prot);

  int n_steps = m.vertex_count() - 2;
  CanonicalOrdering ord;
  ord.pi.assign(n_steps, -1);
  ord.steps.assign(n_steps, ShellStep{});
  ord.label.assign(m.vertex_count(), 0);
  ord.parent_half.assign(m.vertex_count(), -1);
  ord.in_f.assign(m.edge_count(), 0);

  for (int k = n_steps - 1; k >= 0; --k) {
    int v = st.pop_free();
    check_internal(v != -1, "no free vertex on the outer cycle");
    ShellStep& step = ord.steps[k];
    st.remove_free_vertex(v, step, /*allow_loop=*/false);
    for (size_t i = 1; i + 1 < step.up_halfedges.size(); ++i) {
      int w = m.destination(step.up_halfedges[i]);
      check_internal(ord.parent_half[w] == -1, "vertex exposed twice");
      ord.parent_half[w] = step.up_halfedges[i] ^ 1;
      ord.in_f[SurfaceMap::edge_of(step.up_halfedges[i])] = 1;
    }
    ord.pi[k] = v;
    ord.label[v] = k + 1;
  }
  check_internal(!ord.steps.empty() &&
                     ord.steps.front().gamma_halfedges.size() == 1 &&
                     ord.steps.front().e_left() == SurfaceMap::edge_of(q.base),
                 "first insertion must sit on the base edge");
  return ord;
}

// Dual forest of the planar augmentation: one apex inside the outer face
// joined to every outer vertex; the single tree is rooted at the apex
// triangle in front of the base edge.
inline DualForest build_planar_forest(const QuasiTriangulation& q,
                                      const CanonicalOrdering& ord) {
  const SurfaceMap& m = q.map;
  DualForest df;
  std::vector<int> inner_node(m.face_count(), -1);
  int nn = 0;
  for (int f = 0; f < m.face_count(); ++f)
    if (f != q.outer) inner_node[f] = nn++;
  int z_base = nn;
  nn += static_cast<int>(q.outer_cycle.size());
  df.node_count = nn;

  df.node_of_half.assign(m.half_edge_count(), -1);
  for (int h = 0; h < m.half_edge_count(); ++h)
    if (m.face(h) != q.outer) df.node_of_half[h] = inner_node[m.face(h)];
  int root = -1;
  for (size_t i = 0; i < q.outer_cycle.size(); ++i) {
    df.node_of_half[q.outer_cycle[i]] = z_base + static_cast<int>(i);
    if (q.outer_cycle[i] == SurfaceMap::twin(q.base))
      root = z_base + static_cast<int>(i);
  }
  check_internal(root != -1, "base edge not found on the outer cycle");

  std::vector<std::vector<std::pair<int, int>>> adj(nn);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    adj[na].push_back({nb, e});
    adj[nb].push_back({na, e});
  }

  df.parent_node.assign(nn, -2);
  df.parent_via_edge.assign(nn, -1);
  df.depth.assign(nn, 0);
  df.roots = {root};
  df.tree_count = 1;
  df.parent_node[root] = -1;
  std::queue<int> q2;
  q2.push(root);
  std::vector<int> order;
  order.reserve(nn);
  while (!q2.empty()) {
    int u = q2.front();
    q2.pop();
    order.push_back(u);
    for (auto [w, e] : adj[u]) {
      if (df.parent_node[w] != -2) continue;
      df.parent_node[w] = u;
      df.parent_via_edge[w] = e;
      df.depth[w] = df.depth[u] + 1;
      q2.push(w);
    }
  }
  check_internal(static_cast<int>(order.size()) == nn,
                 "planar dual forest must span");
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    bool a_child = df.parent_node[na] == nb && df.parent_via_edge[na] == e;
    bool b_child = df.parent_node[nb] == na && df.parent_via_edge[nb] == e;
    check_internal(a_child != b_child, "planar dual forest has a cycle");
  }
  // The first insertion places its vertex without strips (the base is
  // already horizontal); every later step contributes one strip through
  // each of its two new edges.
  std::vector<long> weight(m.edge_count(), 0);
  for (size_t k = 1; k < ord.steps.size(); ++k) {
    weight[SurfaceMap::edge_of(ord.steps[k].up_halfedges.front())] += 1;
    weight[SurfaceMap::edge_of(ord.steps[k].up_halfedges.back())] += 1;
  }

  df.subtree_edges.assign(nn, 0);
  std::vector<long> subtree_weight(nn, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    if (df.parent_node[u] >= 0) {
      df.subtree_edges[df.parent_node[u]] += df.subtree_edges[u] + 1;
      subtree_weight[df.parent_node[u]] +=
          subtree_weight[u] + weight[df.parent_via_edge[u]];
    }
  }
  df.s.assign(m.edge_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    if (ord.in_f[e]) continue;
    int na = df.node_of_half[2 * e], nb = df.node_of_half[2 * e + 1];
    int child = (df.parent_node[na] == nb && df.parent_via_edge[na] == e) ? na : nb;
    df.s[e] = subtree_weight[child];
  }
  return df;
}

// FPP drawing by strip insertion: base at y=0 spanning the full width
// 2|V|-4, other outer edges of slope +-1, interior above.
inline PlanarLayout fpp_draw(const QuasiTriangulation& q) {
  const SurfaceMap& m = q.map;
  CanonicalOrdering ord = planar_canonical_order(q);
  DualForest df = build_planar_forest(q, ord);

  SpanLedger led(m.edge_count());
  detail::BoundarySim sim(m);
  int bu = q.u(), bv = q.v();
  int base_e = SurfaceMap::edge_of(q.base);
  // initial boundary: the bare base edge, span 2, walked on both sides
  sim.bnext[bu] = bv;
  sim.bedge[bu] = base_e;
  sim.bspan[bu] = 2;
  sim.bnext[bv] = bu;
  sim.bedge[bv] = base_e;
  sim.bspan[bv] = 2;
  sim.width = 2;
  led.r[base_e] = 2;
  led.creation_dx_even[base_e] = (q.base & 1) ? -2 : 2;

  for (size_t k = 0; k < ord.steps.size(); ++k) {
    // the first inserted vertex needs no strips: the base is horizontal
    sim.insert(ord.steps[k], led, /*with_strips=*/k > 0);
  }
  detail::finalize_spans(led, df);

  PlanarLayout out;
  out.base_u = bu;
  out.base_v = bv;
  out.y = sim.y;
  out.x = detail::propagate_x(m, led, bu, 0);
  out.width = led.final_span(base_e);
  check_internal(out.width == 2l * m.vertex_count() - 4,
                 "FPP width must be exactly 2|V| - 4");
  check_internal(out.x[bu] == 0 && out.x[bv] == out.width && out.y[bu] == 0 &&
                     out.y[bv] == 0,
                 "base endpoints must sit at (0,0) and (width,0)");
  return out;
}

// Doubling reduction: replace the base edge's outer side by a parallel copy
// so the 2-gon between them becomes a boundary face.  The result is a
// weakly simple cylindric triangulation whose canonical orderings coincide
// with the planar ones; used to reuse the Def. 1 checker on planar input.
struct DoubledQuasi {
  SurfaceMap map;
  int b1 = -1, b2 = -1;
};

inline DoubledQuasi double_base(const QuasiTriangulation& q) {
  const SurfaceMap& m = q.map;
  int hb = q.base;                      // u -> v, interior left
  int p = m.half_edge_count();          // new u -> v
  int pt = p + 1;                       // new v -> u
  std::vector<std::vector<int>> rot(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    for (int h : m.rotation_of(v)) {
      if (h == hb) rot[v].push_back(p);
      rot[v].push_back(h);
      if (h == SurfaceMap::twin(hb)) rot[v].push_back(pt);
    }
  }
  DoubledQuasi out;
  out.map = SurfaceMap::from_rotations(rot);
  out.b1 = out.map.face(p);
  out.b2 = out.map.face(pt);
  check_internal(out.map.face_degree(out.b1) == 2, "doubled base must bound a 2-gon");
  return out;
}

// Def. 1 checker restricted to the planar case, through the doubling
// reduction.
inline CanonicalCheckReport check_planar_canonical(const QuasiTriangulation& q,
                                                   const std::vector<int>& pi) {
  DoubledQuasi d = double_base(q);
  CylindricTriangulation t = validate_cylindric(d.map, d.b1, d.b2);
  return check_canonical(t, pi);
}

// Stretch the drawing so the base spans target_width: every vertex except
// the left base endpoint shifts right by the difference.  Slopes of the
// left outer chain only flatten, so planarity is preserved.
inline PlanarLayout widen_base(const PlanarLayout& layout, long target_width) {
  check_input(target_width >= layout.width, errc::infeasible_parameters,
              "widen_base cannot shrink the drawing");
  PlanarLayout out = layout;
  long shift = target_width - layout.width;
  if (shift == 0) return out;
  for (size_t i = 0; i < out.x.size(); ++i)
    if (static_cast<int>(i) != layout.base_u) out.x[i] += shift;
  out.width = target_width;
  return out;
}

}  // namespace peridraw

#endif  // PERIDRAW_FPP_HPP
