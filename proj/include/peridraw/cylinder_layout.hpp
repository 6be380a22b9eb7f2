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

#ifndef PERIDRAW_CYLINDER_LAYOUT_HPP
#define PERIDRAW_CYLINDER_LAYOUT_HPP

#include <algorithm>
#include <vector>

#include "peridraw/fpp.hpp"
#include "peridraw/span_engine.hpp"

namespace peridraw {

// Straight-line drawing on the flat cylinder Z/wZ x [0..h].  Edge segments
// are described by the lift of their even half-edge: the segment starts at
// (x[org], y[org]) and ends at (x[org] + dx, y[org] + dy), with x read
// modulo the width.
struct CylinderLayout {
  long width = 0;
  long height = 0;
  std::vector<long> x, y;
  std::vector<long> lift_dx_even, lift_dy_even;
  bool chordless_contract = true;  // Prop.-1 shape guarantees apply

  long dx(int h) const { return (h & 1) ? -lift_dx_even[h >> 1] : lift_dx_even[h >> 1]; }
  long dy(int h) const { return (h & 1) ? -lift_dy_even[h >> 1] : lift_dy_even[h >> 1]; }
};

struct TwoPassResult {
  SpanLedger ledger;
  std::vector<long> y;
  long width = 0;
};

// First pass: simulate the boundary forward over the canonical ordering,
// producing the creation span r_e and left-end of every edge plus all
// y-coordinates.  Second pass: add the dual-forest stretches s_e.
// initial_spans, when given, overrides the per-edge starting span of the
// C(B1) circle (entry i belongs to G.contour1[i]); entries must be even and
// positive.  The default is 2 everywhere.
inline TwoPassResult two_pass_spans(const CylindricTriangulation& G,
                                    const CanonicalOrdering& ord,
                                    const DualForest& df,
                                    const std::vector<long>* initial_spans = nullptr) {
  const SurfaceMap& m = G.map;
  SpanLedger led(m.edge_count());
  detail::BoundarySim sim(m);

  for (size_t i = 0; i < G.contour1.size(); ++i) {
    int h = SurfaceMap::twin(G.contour1[i]);  // travel with the top face left
    long r0 = initial_spans ? (*initial_spans)[i] : 2;
    check_input(r0 >= 2 && r0 % 2 == 0, errc::infeasible_parameters,
                "initial spans must be positive even numbers");
    int e = SurfaceMap::edge_of(h);
    sim.bnext[m.origin(h)] = m.destination(h);
    sim.bedge[m.origin(h)] = e;
    sim.bspan[m.origin(h)] = r0;
    sim.width += r0;
    led.r[e] = r0;
    led.creation_dx_even[e] = (h & 1) ? -r0 : r0;
  }
  for (const ShellStep& st : ord.steps) sim.insert(st, led, /*with_strips=*/true);

  detail::finalize_spans(led, df);

  TwoPassResult out{std::move(led), std::move(sim.y), sim.width};
  // the initial circle plus two units per insertion
  long w0 = 0;
  for (size_t i = 0; i < G.contour1.size(); ++i)
    w0 += initial_spans ? (*initial_spans)[i] : 2;
  check_internal(out.width == w0 + 2l * static_cast<long>(ord.steps.size()),
                 "width must grow by exactly 2 per insertion");
  long around = 0;
  for (int h : G.contour1) around += out.ledger.final_span(SurfaceMap::edge_of(h));
  check_internal(around == out.width,
                 "final spans of C(B1) must wrap the cylinder once",
                 errc::inconsistent_spans);
  return out;
}

// Rebuild x-coordinates from the final spans: anchor the lowest-id C(B1)
// vertex at x = 0 and telescope signed spans; every cycle must close modulo
// the width.
inline std::vector<long> x_from_spans(const CylindricTriangulation& G,
                                      const SpanLedger& ledger, long width) {
  int anchor = G.map.vertex_count();
  for (int h : G.contour1) anchor = std::min(anchor, G.map.origin(h));
  return detail::propagate_x(G.map, ledger, anchor, width);
}

// Prop.-1 drawing: C(B1) chordless, every C(B1) vertex at y = 0, w = 2n
// (with default initial spans), C(B2) edges at slope exactly +-1, loops as
// full-width horizontals.
inline CylinderLayout draw_chordless(const CylindricTriangulation& G,
                                     const CanonicalOrdering& ord,
                                     const DualForest& df,
                                     const std::vector<long>* initial_spans = nullptr) {
  TwoPassResult tp = two_pass_spans(G, ord, df, initial_spans);
  CylinderLayout lay;
  lay.width = tp.width;
  lay.y = tp.y;
  lay.x = x_from_spans(G, tp.ledger, tp.width);
  lay.height = *std::max_element(lay.y.begin(), lay.y.end());
  const SurfaceMap& m = G.map;
  lay.lift_dx_even.resize(m.edge_count());
  lay.lift_dy_even.resize(m.edge_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    lay.lift_dx_even[e] = tp.ledger.final_dx_even[e];
    lay.lift_dy_even[e] = lay.y[m.destination(2 * e)] - lay.y[m.origin(2 * e)];
    check_internal(std::labs(lay.lift_dx_even[e]) <= lay.width,
                   "edge span exceeds the cylinder width");
    if (m.is_loop(2 * e))
      check_internal(std::labs(lay.lift_dx_even[e]) == lay.width,
                     "loops must wrap the full width");
  }
  return lay;
}

inline CylinderLayout draw_chordless(const CylindricTriangulation& G) {
  CanonicalOrdering ord = shell(G);
  DualForest df = build_forests(G, ord);
  return draw_chordless(G, ord, df);
}

// One chord component: the quasi-triangulation hanging under a maximal
// chord of C(B1), with translations back to the host map.
struct ChordComponent {
  Submap sub;              // the closed component (chord + arc + interior)
  QuasiTriangulation quasi;
  int chord_edge = -1;     // edge id in the host map
  int under_half = -1;     // host half-edge with the component on its left
};

struct ChordDecomposition {
  bool has_chords = false;
  Submap reduced;                   // G' (component interiors removed)
  int reduced_b1 = -1, reduced_b2 = -1;
  std::vector<int> c0prime;         // host half-edges of C_0', B2 side on left
  std::vector<ChordComponent> components;
};

inline ChordDecomposition decompose_chords(const CylindricTriangulation& G) {
  const SurfaceMap& m = G.map;
  ChordDecomposition out;
  std::vector<char> chord(m.edge_count(), 0);
  bool any = false;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (G.is_b1_chord(e)) {
      check_input(!m.is_loop(2 * e), errc::chord_at_b1,
                  "a loop chord at C(B1) does not bound a quasi-triangulation");
      chord[e] = 1;
      any = true;
    }
  }
  out.has_chords = any;
  if (!any) return out;

  // Faces on the B2 side of the chord overlay: reachable from B2 without
  // crossing C(B1) edges or chords.
  std::vector<char> blocked(m.edge_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e) {
    int h = 2 * e;
    if (chord[e] || m.face(h) == G.b1 || m.face(SurfaceMap::twin(h)) == G.b1)
      blocked[e] = 1;
  }
  std::vector<char> in_r(m.face_count(), 0);
  {
    std::vector<int> stack{G.b2};
    in_r[G.b2] = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      int h0 = m.half_of_face(f), h = h0;
      do {
        int g = m.face(SurfaceMap::twin(h));
        if (!blocked[SurfaceMap::edge_of(h)] && !in_r[g]) {
          in_r[g] = 1;
          stack.push_back(g);
        }
        h = m.face_next(h);
      } while (h != h0);
    }
  }
  check_internal(!in_r[G.b1], "region growing crossed into B1");

  // C_0': boundary of the region, walked as a cycle with the region on the
  // left.  Start from any boundary half-edge and follow the region's border.
  int start = -1;
  for (int h = 0; h < m.half_edge_count() && start == -1; ++h)
    if (in_r[m.face(h)] && !in_r[m.face(SurfaceMap::twin(h))]) start = h;
  check_internal(start != -1, "region must have a boundary");
  {
    int h = start;
    do {
      out.c0prime.push_back(h);
      // advance across dst(h): hop from face to face inside the region until
      // the next border half-edge (face_next of the twin is vertex_prev)
      int g = m.face_next(h);
      while (in_r[m.face(SurfaceMap::twin(g))]) g = m.vertex_prev(g);
      check_internal(in_r[m.face(g)], "border walk left the region");
      h = g;
    } while (h != start);
  }
  {
    // the border walk must consume every border half-edge exactly once
    int border_count = 0;
    for (int h = 0; h < m.half_edge_count(); ++h)
      if (in_r[m.face(h)] && !in_r[m.face(SurfaceMap::twin(h))]) ++border_count;
    check_internal(border_count == static_cast<int>(out.c0prime.size()),
                   "C_0' is not a single cycle");
  }

  // Reduced map: everything on the region side plus the C_0' edges.
  std::vector<char> keep(m.edge_count(), 0);
  for (int e = 0; e < m.edge_count(); ++e)
    keep[e] = in_r[m.face(2 * e)] && in_r[m.face(2 * e + 1)];
  for (int h : out.c0prime) keep[SurfaceMap::edge_of(h)] = 1;
  out.reduced = make_submap(m, keep);
  out.reduced_b1 = out.reduced.map.face(
      out.reduced.half_from_old(SurfaceMap::twin(out.c0prime.front())));
  for (int h : out.c0prime)
    check_internal(out.reduced.map.face(out.reduced.half_from_old(SurfaceMap::twin(h))) ==
                       out.reduced_b1,
                   "C_0' twins must bound one face of the reduced map");
  out.reduced_b2 = out.reduced.map.face(out.reduced.half_from_old(G.contour2.front()));

  // Components under the maximal chords (the C_0' edges that were chords).
  for (int h : out.c0prime) {
    int e = SurfaceMap::edge_of(h);
    if (!chord[e]) continue;
    ChordComponent comp;
    comp.chord_edge = e;
    comp.under_half = SurfaceMap::twin(h);  // component on its left
    std::vector<char> in_q(m.face_count(), 0);
    std::vector<int> stack{m.face(comp.under_half)};
    in_q[m.face(comp.under_half)] = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      int h0 = m.half_of_face(f), hh = h0;
      do {
        int ee = SurfaceMap::edge_of(hh);
        bool cross_b1 = m.face(hh) == G.b1 || m.face(SurfaceMap::twin(hh)) == G.b1;
        int g = m.face(SurfaceMap::twin(hh));
        if (ee != e && !cross_b1 && !in_q[g]) {
          in_q[g] = 1;
          stack.push_back(g);
        }
        hh = m.face_next(hh);
      } while (hh != h0);
    }
    check_internal(!in_q[G.b2] && !in_q[G.b1], "component region leaked");
    std::vector<char> keep_q(m.edge_count(), 0);
    for (int e2 = 0; e2 < m.edge_count(); ++e2)
      keep_q[e2] = in_q[m.face(2 * e2)] || in_q[m.face(2 * e2 + 1)];
    comp.sub = make_submap(m, keep_q);
    int base_new = comp.sub.half_from_old(comp.under_half);
    int outer_new = comp.sub.map.face(SurfaceMap::twin(base_new));
    comp.quasi = validate_quasi(comp.sub.map, outer_new, base_new);
    out.components.push_back(std::move(comp));
  }
  return out;
}

// Thm.-2 drawing: excise the components under maximal chords, draw the
// reduced chordless map with widened initial spans for the ex-chords, draw
// each component with FPP, widen to the chord's final span, rotate 180
// degrees and hang it under its chord, then lift everything so min y = 0.
inline CylinderLayout draw_with_chords(const CylindricTriangulation& G) {
  ChordDecomposition dec = decompose_chords(G);
  if (!dec.has_chords) return draw_chordless(G);

  const SurfaceMap& m = G.map;
  CylindricTriangulation rt =
      validate_cylindric(dec.reduced.map, dec.reduced_b1, dec.reduced_b2);
  check_internal(rt.b1_chordless(), "reduction must remove every chord");
  CanonicalOrdering ord = shell(rt);
  DualForest df = build_forests(rt, ord);

  // Initial spans: 2 on original C(B1) edges, the minimal even number
  // reaching the component width on ex-chords.
  std::vector<long> comp_size(m.edge_count(), 0);
  for (const ChordComponent& c : dec.components)
    comp_size[c.chord_edge] = 2l * c.quasi.size() - 4;
  std::vector<long> init(rt.contour1.size(), 2);
  for (size_t i = 0; i < rt.contour1.size(); ++i) {
    int e_old = dec.reduced.edge_to_old[SurfaceMap::edge_of(rt.contour1[i])];
    if (comp_size[e_old] > 0) {
      long need = comp_size[e_old] - df.s[SurfaceMap::edge_of(rt.contour1[i])];
      init[i] = need <= 2 ? 2 : 2 * ((need + 1) / 2);
    }
  }
  CylinderLayout red = draw_chordless(rt, ord, df, &init);

  CylinderLayout lay;
  lay.chordless_contract = false;
  lay.width = red.width;
  lay.x.assign(m.vertex_count(), -1);
  lay.y.assign(m.vertex_count(), 0);
  lay.lift_dx_even.assign(m.edge_count(), 0);
  lay.lift_dy_even.assign(m.edge_count(), 0);
  std::vector<char> have_x(m.vertex_count(), 0);
  for (int v = 0; v < rt.map.vertex_count(); ++v) {
    int v_old = dec.reduced.vertex_to_old[v];
    lay.x[v_old] = red.x[v];
    lay.y[v_old] = red.y[v];
    have_x[v_old] = 1;
  }
  for (int e = 0; e < rt.map.edge_count(); ++e) {
    int e_old = dec.reduced.edge_to_old[e];
    // submap keeps half-edge parity, so the even half maps to the even half
    lay.lift_dx_even[e_old] = red.lift_dx_even[e];
    lay.lift_dy_even[e_old] = red.lift_dy_even[e];
  }

  long depth = 0;
  auto norm = [&](long v) {
    v %= lay.width;
    return v < 0 ? v + lay.width : v;
  };
  for (const ChordComponent& c : dec.components) {
    PlanarLayout flat = fpp_draw(c.quasi);
    int e_red = dec.reduced.edge_from_old[c.chord_edge];
    long span = red.lift_dx_even[e_red];
    long ell = std::labs(span);
    check_internal(ell >= flat.width, "chord span must fit its component");
    check_internal(red.dx(dec.reduced.half_from_old(c.under_half)) == -ell,
                   "chord must run along the bottom boundary right to left");
    PlanarLayout wide = widen_base(flat, ell);
    // rotate 180 degrees and glue: base_u lands on the right end of the
    // chord, base_v on the left
    int p_old = m.destination(c.under_half);  // left end in the host drawing
    long xp = lay.x[p_old];
    for (int vq = 0; vq < c.quasi.map.vertex_count(); ++vq) {
      int v_old = c.sub.vertex_to_old[vq];
      long gx = norm(xp + ell - wide.x[vq]);
      long gy = -wide.y[vq];
      if (have_x[v_old]) {
        check_internal(lay.x[v_old] == gx && lay.y[v_old] == gy,
                       "component glue mismatch at a chord endpoint");
      } else {
        lay.x[v_old] = gx;
        lay.y[v_old] = gy;
        have_x[v_old] = 1;
      }
      depth = std::max(depth, wide.y[vq]);
    }
    for (int eq = 0; eq < c.quasi.map.edge_count(); ++eq) {
      int e_old = c.sub.edge_to_old[eq];
      if (e_old == c.chord_edge) continue;  // drawn with the reduced map
      int u = c.quasi.map.origin(2 * eq), w = c.quasi.map.destination(2 * eq);
      lay.lift_dx_even[e_old] = wide.x[u] - wide.x[w];
      lay.lift_dy_even[e_old] = wide.y[u] - wide.y[w];
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    check_internal(have_x[v], "vertex not placed by reduction or components");
    lay.y[v] += depth;
  }
  lay.height = *std::max_element(lay.y.begin(), lay.y.end());
  for (int e = 0; e < m.edge_count(); ++e) {
    check_internal(lay.lift_dy_even[e] ==
                       lay.y[m.destination(2 * e)] - lay.y[m.origin(2 * e)],
                   "vertical lifts must match the y-coordinates");
  }
  return lay;
}

}  // namespace peridraw

#endif  // PERIDRAW_CYLINDER_LAYOUT_HPP
